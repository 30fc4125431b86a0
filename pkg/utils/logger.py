import glob
import logging
import logging.config
import os
from datetime import datetime, timedelta
from logging.handlers import TimedRotatingFileHandler

from config import LOG_DIR, LOG_LEVEL, LOG_RETENTION_DAYS, LOG_TO_FILE

LOG_DIR_GENERAL = os.path.join(LOG_DIR, "general")
LOG_DIR_ERRORS = os.path.join(LOG_DIR, "errors")


class ErrorLogFilter(logging.Filter):
    """
    Пропускает в LOG_DIR/errors только записи уровня ERROR и выше
    (отказы построения, ошибки CLI и необработанные исключения API).
    """
    def filter(self, record):
        return record.levelno >= logging.ERROR


def clean_old_logs(log_dir, days=LOG_RETENTION_DAYS):
    """
    Удаляет из log_dir (LOG_DIR/general или LOG_DIR/errors) файлы *.txt
    старше days дней.
    """
    cutoff = datetime.now() - timedelta(days=days)
    for file in glob.glob(os.path.join(log_dir, "*.txt")):
        if datetime.fromtimestamp(os.path.getmtime(file)) < cutoff:
            os.remove(file)


class DailyRotatingFileHandler(TimedRotatingFileHandler):
    """
    Файл лога в подкаталоге LOG_DIR с ротацией в полночь; после ротации
    старые файлы подкаталога чистятся по LOG_RETENTION_DAYS.
    """
    def __init__(self, log_dir, filename,
                 retention_days=LOG_RETENTION_DAYS, **kwargs):
        self.log_dir = log_dir
        self.retention_days = retention_days
        os.makedirs(log_dir, exist_ok=True)
        super().__init__(
            os.path.join(log_dir, filename),
            when="midnight",
            backupCount=0,
            encoding="utf-8",
            **kwargs,
        )

    def doRollover(self):
        super().doRollover()
        clean_old_logs(self.log_dir, days=self.retention_days)


def get_log_filename(prefix):
    return f"{prefix}_{datetime.now():%Y-%m-%d}.txt"


def build_logging_config(to_file: bool = LOG_TO_FILE,
                         level: str = LOG_LEVEL) -> dict:
    """
    Конфигурация логирования: консоль (stderr) и, при включенном
    LOG_TO_FILE, общий и error-лог с ежедневной ротацией.
    """
    handlers = {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "level": level,
            "formatter": "default",
        },
    }
    if to_file:
        handlers["file"] = {
            "()": DailyRotatingFileHandler,
            "log_dir": LOG_DIR_GENERAL,
            "filename": get_log_filename("app_log"),
            "level": level,
            "formatter": "default",
        }
        handlers["error_file"] = {
            "()": DailyRotatingFileHandler,
            "log_dir": LOG_DIR_ERRORS,
            "filename": get_log_filename("error_log"),
            "level": "ERROR",
            "formatter": "default",
            "filters": ["error_filter"],
        }

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(filename)s:%(lineno)d #%(levelname)-8s"
                "[%(asctime)s] - %(name)s - %(message)s"
            },
        },
        "filters": {
            "error_filter": {
                "()": ErrorLogFilter,
            }
        },
        "handlers": handlers,
        "root": {"level": level, "handlers": list(handlers)},
    }


_configured = False


def setup_logging(to_file: bool = LOG_TO_FILE, level: str = LOG_LEVEL):
    global _configured
    if _configured:
        return
    logging.config.dictConfig(build_logging_config(to_file, level))
    _configured = True
