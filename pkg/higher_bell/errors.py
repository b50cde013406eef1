class BellError(Exception):
    """Root of every error raised by higher_bell."""


class InvalidArgumentError(BellError, ValueError):
    """An operation was called outside its domain (CLI exit code 2)."""


class VerificationError(BellError, ArithmeticError):
    """A machine check failed (CLI exit code 1)."""

    def __init__(self, invariant: str, detail: str = '') -> None:
        self.invariant = invariant
        self.detail = detail
        super().__init__(f'{invariant}: {detail}' if detail else invariant)
