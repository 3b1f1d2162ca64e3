import logging

from config import LOG_CONSOLE_LEVEL, LOG_NAME
from logger import logger, set_console_level, setup_logger


def test_setup_logger_does_not_duplicate_handlers():
    count = len(logger.handlers)
    assert setup_logger() is logger
    assert len(logger.handlers) == count == 2


def test_set_console_level_leaves_the_file_handler_alone():
    set_console_level('INFO')
    try:
        levels = {type(h): h.level for h in logging.getLogger(LOG_NAME).handlers}
        assert levels[logging.FileHandler] == logging.DEBUG
        assert levels[logging.StreamHandler] == logging.INFO
    finally:
        set_console_level(LOG_CONSOLE_LEVEL)
