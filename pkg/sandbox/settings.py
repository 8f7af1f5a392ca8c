"""Django settings file to run the pseudoknot commands outside a project."""
from pathlib import Path

# SETTINGS FILE
ROOT_DIR = Path(__file__).parent.absolute()

# DEBUG SETTINGS
# Used for sandbox - DO NOT USE IN PRODUCTION
DEBUG = True

# BASE DJANGO SETTINGS
SECRET_KEY = 'ABCDEFGHIJKLMNOPQRSTUVWXYZ1234567890'

# DJANGO APPLICATIONS
INSTALLED_APPS = [
    # Local Apps
    'pseudoknots',
]

# LOGGING SETTINGS
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
        },
    },
    'loggers': {
        'pseudoknots': {
            'handlers': ['console'],
            'level': 'INFO',
        },
    },
}

# django-pseudoknot-align settings
# -----------------------------------------------------------------------------
PKA_ALPHABET = 'ACGU'
PKA_SCORE_PRESET = 'unit'
PKA_SPLITTING_MODE = 'relaxed'
PKA_ORACLE_MAX_SIZE = 16
