import logging
import sys

from coxeter2d.core.config import LOG_LEVEL

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbose: int = 0) -> None:
    """
    Send log records to stderr so stdout stays valid JSON.
    Each -v lowers the threshold one step below COXETER2D_LOG_LEVEL.
    """
    level = logging.getLevelName(LOG_LEVEL)
    if not isinstance(level, int):
        level = logging.WARNING
    level = max(logging.DEBUG, level - 10 * verbose)

    root = logging.getLogger("coxeter2d")
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
