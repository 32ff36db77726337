# Django Production Settings for sparsedom
# Settings for long batch runs writing to a shared results database

from .base import *
import os

# Production must have these environment variables
DEBUG = False
SECRET_KEY = os.environ.get('SECRET_KEY')
if not SECRET_KEY:
    raise ValueError("SECRET_KEY environment variable is required in production")

# Database - results are shared through PostgreSQL in production
if not os.environ.get('DATABASE_URL'):
    raise ValueError("DATABASE_URL environment variable is required in production")

DATABASES = {
    'default': dj_database_url.config(conn_max_age=60, conn_health_checks=True)
}

# Logging configuration for production
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': os.environ.get('DOMSET_LOG_FILE', '/var/log/sparsedom/batch.log'),
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['file'],
            'level': 'INFO',
            'propagate': True,
        },
        'experiments': {
            'handlers': ['file'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
        'domination': {
            'handlers': ['file'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
        'graphs': {
            'handlers': ['file'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
        'localsim': {
            'handlers': ['file'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
    },
}
