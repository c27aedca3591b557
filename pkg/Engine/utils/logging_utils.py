import logging
from datetime import datetime
import sys
from typing import Any, Dict, Optional

# ============================================================================
# Configure Engine Operations Logger
# ============================================================================

# Get or create logger
logger = logging.getLogger("MagmaForge")

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Only configure if not already configured
if not logger.handlers:
    logger.setLevel(logging.INFO)

    # Console handler on stderr; stdout carries command output
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.INFO)
    console_handler.setFormatter(logging.Formatter(_FORMAT))
    logger.addHandler(console_handler)

    # Don't propagate to avoid duplicates
    logger.propagate = False


def configure_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """
    Set the engine log level and optionally mirror records into a UTF-8 file.
    Safe to call more than once; a file handler is only attached once per path.
    """
    numeric = getattr(logging, level.upper(), logging.WARNING)
    logger.setLevel(numeric)
    for handler in logger.handlers:
        handler.setLevel(numeric)

    if log_file:
        existing = [
            h for h in logger.handlers
            if isinstance(h, logging.FileHandler) and h.baseFilename.endswith(log_file)
        ]
        if not existing:
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setLevel(numeric)
            file_handler.setFormatter(logging.Formatter(_FORMAT))
            logger.addHandler(file_handler)


def _render(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_render(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{k}:{_render(v)}" for k, v in value.items()) + "}"
    return str(value)


def log_engine_operation(operation: str, details: Dict[str, Any], success: bool = True) -> Dict[str, Any]:
    """
    Helper to log one engine operation as `OPERATION: key=value, ...`.
    Failures go out at ERROR level.
    """
    details_str = ", ".join(f"{key}={_render(value)}" for key, value in details.items())

    log_entry = {
        "timestamp": datetime.now().isoformat(),
        "operation": operation,
        "success": success,
        "details": details_str,
    }

    log_message = f"{operation}: {details_str}"
    if success:
        logger.info(log_message)
    else:
        logger.error(log_message)

    return log_entry
