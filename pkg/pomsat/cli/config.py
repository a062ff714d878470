import logging
import logging.config
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Text

import pytz
from colorama import Fore, Style, init
from pydantic_settings import BaseSettings, SettingsConfigDict

from pomsat.config import settings as pomsat_settings


class CliSettings(BaseSettings):
    """Settings for the command line application."""

    model_config = SettingsConfigDict(env_prefix="POMSAT_")

    APP_NAME: Text = "pomsat"
    logging_level: Text = "INFO"
    use_colors: bool = True
    logs_dir: Optional[Text] = None
    timezone: Text = "UTC"


class IsoDatetimeFormatter(logging.Formatter):
    def __init__(self, *args, timezone: Text = "UTC", **kwargs):
        super().__init__(*args, **kwargs)
        self.timezone = pytz.timezone(timezone)

    def formatTime(self, record, datefmt=None):
        record_datetime = datetime.fromtimestamp(record.created).astimezone(
            self.timezone
        )
        t = record_datetime.strftime("%Y-%m-%dT%H:%M:%S")
        z = record_datetime.strftime("%z")
        ms_exp = record_datetime.microsecond // 1000
        return f"{t}.{ms_exp:03d}{z}"


class ColoredIsoDatetimeFormatter(IsoDatetimeFormatter):
    COLORS = {
        "WARNING": Fore.YELLOW,
        "INFO": Fore.GREEN,
        "DEBUG": Fore.BLUE,
        "CRITICAL": Fore.RED,
        "ERROR": Fore.RED,
    }
    MSG_COLORS = {
        "WARNING": Fore.YELLOW,
        "CRITICAL": Fore.RED,
        "ERROR": Fore.RED,
    }

    def format(self, record):
        record = logging.makeLogRecord(record.__dict__)
        levelname = record.levelname
        if levelname in self.COLORS:
            record.levelname = (
                self.COLORS[levelname] + f"{levelname:8s}" + Style.RESET_ALL
            )
            record.name = Fore.BLUE + record.name + Style.RESET_ALL
            if not isinstance(record.msg, Text):
                record.msg = str(record.msg)
            if levelname in self.MSG_COLORS:
                record.msg = self.MSG_COLORS[levelname] + record.msg + Style.RESET_ALL
        return super().format(record)


LOG_FORMAT = "%(asctime)s %(levelname)-8s %(name)s  - %(message)s"


def default_logging_config(settings: CliSettings) -> Dict[Text, Any]:
    console_formatter = (
        "colored_formatter" if settings.use_colors else "plain_formatter"
    )
    handlers: Dict[Text, Any] = {
        "console_handler": {
            "level": settings.logging_level,
            "class": "logging.StreamHandler",
            "formatter": console_formatter,
        },
    }
    handler_names: List[Text] = ["console_handler"]
    if settings.logs_dir:
        logs_dir = Path(settings.logs_dir)
        handlers["file_handler"] = {
            "level": "DEBUG",
            "class": "logging.handlers.RotatingFileHandler",
            "filename": logs_dir.joinpath(f"{settings.APP_NAME}.log").resolve(),
            "formatter": "plain_formatter",
            "maxBytes": 2097152,
            "backupCount": 20,
        }
        handlers["error_handler"] = {
            "level": "WARNING",
            "class": "logging.FileHandler",
            "filename": logs_dir.joinpath(f"{settings.APP_NAME}.error.log").resolve(),
            "formatter": "plain_formatter",
        }
        handler_names += ["file_handler", "error_handler"]
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "colored_formatter": {
                "()": ColoredIsoDatetimeFormatter,
                "format": LOG_FORMAT,
                "timezone": settings.timezone,
            },
            "plain_formatter": {
                "()": IsoDatetimeFormatter,
                "format": LOG_FORMAT,
                "timezone": settings.timezone,
            },
        },
        "handlers": handlers,
        "loggers": {
            pomsat_settings.logger_name: {
                "level": "DEBUG",
                "handlers": handler_names,
                "propagate": False,
            },
        },
    }


def init_logger_config(settings: CliSettings) -> None:
    if settings.use_colors:
        init(autoreset=True)
    if settings.logs_dir:
        Path(settings.logs_dir).mkdir(parents=True, exist_ok=True, mode=0o770)
    logging.config.dictConfig(default_logging_config(settings))
