from functools import wraps
import logging
from typing import Callable

from higher_bell.errors import InvalidArgumentError, VerificationError


EXIT_VERIFICATION = 1
EXIT_USAGE = 2

logger = logging.getLogger(__name__)


def exception_catcher(step: int) -> Callable[[Callable[..., int]], Callable[..., int]]:
    """Turn a command handler's domain errors into exit codes: usage 2, verification 1."""

    def wrapper(func: Callable[..., int]) -> Callable[..., int]:

        @wraps(func)  # for save name of function
        def wrapped(*args, **kwargs) -> int:

            try:
                function_result = func(*args, **kwargs)

            except InvalidArgumentError as error:
                logger.error(f'\t\t\tWrong usage of {func.__name__}, error:\n{error}')
                return EXIT_USAGE

            except VerificationError as error:
                logger.error(f'\t\t\tVerification failed in {func.__name__}, invariant: {error.invariant}\n{error}')
                return EXIT_VERIFICATION

            logger.info(f'\t\t\t=== STEP-{step}: {func.__name__} done.')

            return function_result

        return wrapped

    return wrapper
