"""
Django settings for the sparsedom project.

Everything that can be tuned per machine is read from the environment,
with a development default next to it.
"""

import os
from pathlib import Path
import dj_database_url

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-8q2m!sparsedom-local-only-key-c4r7v0x1')

DEBUG = os.environ.get('DEBUG', 'true').lower() == 'true'

ALLOWED_HOSTS = os.environ.get('ALLOWED_HOSTS', 'localhost,127.0.0.1').split(',')


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    # Third party apps
    'rest_framework',
    # sparsedom apps
    'graphs',
    'localsim',
    'domination',
    'experiments',
]


# Database

if 'DATABASE_URL' in os.environ:
    # Use the DATABASE_URL from the environment, parsing it with dj-database-url
    DATABASES = {
        'default': dj_database_url.config(conn_max_age=600, conn_health_checks=True)
    }
else:
    # Fallback to a local SQLite database if DATABASE_URL is not set
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.sqlite3',
            'NAME': BASE_DIR / 'db.sqlite3',
        }
    }


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework is only used for its serializers
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': True,
}


# Oracle and simulation guards

# nabla1_bruteforce refuses graphs with more vertices than this
DOMSET_NABLA1_GUARD = int(os.environ.get('DOMSET_NABLA1_GUARD', 12))

# exact_min_domset refuses graphs with more vertices than this
DOMSET_EXACT_GUARD = int(os.environ.get('DOMSET_EXACT_GUARD', 40))

# subset-enumeration cross-checks (dominating set, densest subgraph)
DOMSET_EXHAUSTIVE_GUARD = int(os.environ.get('DOMSET_EXHAUSTIVE_GUARD', 12))

# Threads used by the round engine and by batch runs; 1 = sequential
DOMSET_WORKERS = int(os.environ.get('DOMSET_WORKERS', 1))

DOMSET_LOG_LEVEL = os.environ.get('DOMSET_LOG_LEVEL', 'INFO').upper()


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
        'graphs': {
            'handlers': ['console'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
        'localsim': {
            'handlers': ['console'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
        'domination': {
            'handlers': ['console'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
        'experiments': {
            'handlers': ['console'],
            'level': DOMSET_LOG_LEVEL,
            'propagate': False,
        },
    },
}
