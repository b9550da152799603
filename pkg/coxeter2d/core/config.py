from dotenv import load_dotenv
import os

from coxeter2d.core.exceptions import ConfigError

load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


MAX_COSETS = _int_env("COXETER2D_MAX_COSETS", 2_000_000)
ELEMENT_LIMIT = _int_env("COXETER2D_ELEMENT_LIMIT", 20_000_000)
# largest n+1 whose full matrix space is brute-forced
ENUMERATION_CAP = _int_env("COXETER2D_ENUMERATION_CAP", 4)
WORKERS = _int_env("COXETER2D_WORKERS", 1)
LOG_LEVEL = os.getenv("COXETER2D_LOG_LEVEL", "WARNING").upper()
