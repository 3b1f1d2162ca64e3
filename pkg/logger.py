"""
Module de logging pour le moteur et l'interface
"""
import logging
import os
from datetime import datetime

from config import LOG_CONSOLE_LEVEL, LOG_DATEFMT, LOG_DIR, LOG_FORMAT, LOG_NAME


def setup_logger(name=LOG_NAME):
    """Configure le système de logging"""

    # Créer le dossier logs s'il n'existe pas
    if not os.path.exists(LOG_DIR):
        os.makedirs(LOG_DIR)

    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    # Éviter les doublons de handlers
    if logger.handlers:
        return logger

    # Handler pour fichier
    log_filename = os.path.join(LOG_DIR, f'mbn_{datetime.now():%Y%m%d}.log')
    fh = logging.FileHandler(log_filename, encoding='utf-8')
    fh.setLevel(logging.DEBUG)

    # Handler pour console (stderr, stdout reste réservé aux rapports)
    ch = logging.StreamHandler()
    ch.setLevel(LOG_CONSOLE_LEVEL)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT)
    fh.setFormatter(formatter)
    ch.setFormatter(formatter)

    logger.addHandler(fh)
    logger.addHandler(ch)

    return logger


def set_console_level(level, name=LOG_NAME):
    """Change le niveau du handler console uniquement"""
    for handler in logging.getLogger(name).handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setLevel(level)


# Logger global
logger = setup_logger()
