import logging
import os
from logging.handlers import RotatingFileHandler

from .constants import COMPLIANCE_XDG_CACHE_HOME_LOGS, LOGFILE, LOGGER_NAME

import time


def get_logger():
    """Create the logger."""
    FORMATTER = logging.Formatter(
        "%(asctime)s — %(filename)s — %(levelname)s — %(funcName)s:%(lineno)d — %(message)s" # noqa
    )
    FORMATTER.converter = time.gmtime

    logger = logging.getLogger(LOGGER_NAME)

    logging_level = logging.INFO
    # Only log debug when using COMPLIANCE_DEBUG=true
    if str(os.environ.get("COMPLIANCE_DEBUG", False)).lower() == "true":
        logging_level = logging.DEBUG
    logger.setLevel(logging_level)

    # Only log to console when using COMPLIANCE_DEBUG_CONSOLE=true
    if str(os.environ.get("COMPLIANCE_DEBUG_CONSOLE", False)).lower() == "true":
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(FORMATTER)
        logger.addHandler(console_handler)

    try:
        if not os.path.isdir(COMPLIANCE_XDG_CACHE_HOME_LOGS):
            os.makedirs(COMPLIANCE_XDG_CACHE_HOME_LOGS)
        # Starts a new file at 3MB size limit
        file_handler = RotatingFileHandler(
            LOGFILE, maxBytes=3145728, backupCount=3
        )
    except OSError:
        # Read-only home, keep console logging only
        logger.addHandler(logging.NullHandler())
        return logger

    file_handler.setFormatter(FORMATTER)
    logger.addHandler(file_handler)

    return logger


logger = get_logger()
