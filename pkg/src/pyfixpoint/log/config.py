import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Final

from loguru import logger
from platformdirs import user_log_dir

from pyfixpoint.log.intercept import InterceptHandler
from pyfixpoint.shared.consts import APP_NAME, AUTHOR

if TYPE_CHECKING:
    from loguru import Record

CONSOLE_DEFAULT_LEVEL = logging.INFO

CONTEXT_MIN_LEVEL: Final[str] = "min_level"


def console_filter(record: "Record") -> bool:
    """
    Pass a record when it reaches the console level, which a surrounding
    `isolated_logging` block may override.
    """
    current_level_no: int = record["level"].no
    context_level_no: int | None = record["extra"].get(CONTEXT_MIN_LEVEL)

    if context_level_no is not None:
        return current_level_no >= context_level_no

    return current_level_no >= CONSOLE_DEFAULT_LEVEL


def isolated_logging(level: int = logging.DEBUG):
    """
    Context manager lowering (or raising) the console level for everything logged inside it.
    """
    return logger.contextualize(**{CONTEXT_MIN_LEVEL: level})


def log_level_for(verbose: bool) -> int:
    return logging.DEBUG if verbose else logging.INFO


def log_file_path() -> Path:
    log_dir = Path(user_log_dir(APP_NAME, AUTHOR))
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir / "pyfixpoint.log"


def configure_logging() -> None:
    """Install the console and file sinks; the CLI calls this once at start-up."""
    logger.remove()

    # SINK 1: Console
    _ = logger.add(
        sys.stderr,
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <level>{message}</level>",
        level=logging.NOTSET,
        filter=console_filter,
        colorize=True
    )

    # SINK 2: File
    try:
        _ = logger.add(
            log_file_path(),
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{line} | {message}",
            level=logging.DEBUG,
            rotation="10 MB",
            compression="zip"
        )
    except OSError as e:
        logger.warning("File logging disabled: {}", e)

    # Bridge standard logging into loguru
    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
    for lib in ("numpy", "asyncio"):
        logging.getLogger(lib).setLevel(logging.WARNING)
