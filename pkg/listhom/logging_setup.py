import logging
from typing import Optional

import config

_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure the root logger from config.LOG_LEVEL and config.LOG_FORMAT.

    Args:
        level (str): overrides config.LOG_LEVEL when given ("DEBUG", "WARNING", ...)
    """
    global _configured
    level_name = (level or config.LOG_LEVEL).upper()
    if not _configured:
        logging.basicConfig(level=level_name, format=config.LOG_FORMAT)
        _configured = True
    else:
        logging.getLogger().setLevel(level_name)
