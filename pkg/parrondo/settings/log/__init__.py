import logging

from parrondo.settings.config import env
from ._log import LoggerSetup

logger = LoggerSetup(
    name="Parrondo", level=logging.DEBUG if env.DEBUG else logging.INFO
).get_logger()

__all__ = ["logger", "LoggerSetup"]
