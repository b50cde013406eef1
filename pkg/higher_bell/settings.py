import configparser  # for work with *.ini (config.ini)
from dataclasses import dataclass
import logging
import pathlib


CONFIG_FILE = 'config.ini'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    n_max: int = 8
    m_max: int = 5
    output_format: str = 'tsv'
    digits: int = 12
    method: str = 'auto'
    auto_poly_threshold: int = 1000
    compare_n: int = 3
    compare_m: tuple[int, ...] = (100, 100_000, 100_000_000)
    max_cached_m: int = 2000
    log_level: str = 'WARNING'
    log_format: str = '%(threadName)s %(message)s'


def _int_list(raw: str) -> tuple[int, ...]:
    return tuple(int(item) for item in raw.split(',') if item.strip())


def load_settings(file_config: pathlib.Path | None = None) -> Settings:
    """Read package defaults from config.ini; missing keys keep the built-in values."""
    file_config = file_config or pathlib.Path(__file__).parent.joinpath(CONFIG_FILE)
    # '%(threadName)s' in [LOGGING] is a logging format, not an interpolation
    config = configparser.ConfigParser(interpolation=None)

    if not config.read(file_config):
        logger.debug(f'Config file {file_config} not found, built-in defaults are used.')
        return Settings()

    defaults = Settings()
    try:
        settings = Settings(
            n_max=config.getint('DEFAULTS', 'n_max', fallback=defaults.n_max),
            m_max=config.getint('DEFAULTS', 'm_max', fallback=defaults.m_max),
            output_format=config.get('DEFAULTS', 'format', fallback=defaults.output_format),
            digits=config.getint('DEFAULTS', 'digits', fallback=defaults.digits),
            method=config.get('DEFAULTS', 'method', fallback=defaults.method),
            auto_poly_threshold=config.getint(
                'DEFAULTS', 'auto_poly_threshold', fallback=defaults.auto_poly_threshold
            ),
            compare_n=config.getint('DEFAULTS', 'compare_n', fallback=defaults.compare_n),
            compare_m=_int_list(config.get('DEFAULTS', 'compare_m', fallback='')) or defaults.compare_m,
            max_cached_m=config.getint('MEMO', 'max_cached_m', fallback=defaults.max_cached_m),
            log_level=config.get('LOGGING', 'level', fallback=defaults.log_level),
            log_format=config.get('LOGGING', 'format', fallback=defaults.log_format),
        )

    except ValueError as error:
        logger.error(f'Wrong value in {file_config}, built-in defaults are used. error:\n{error}')
        return defaults

    logger.debug(f'=== Settings loaded from {file_config}: {settings}')
    return settings


settings = load_settings()
