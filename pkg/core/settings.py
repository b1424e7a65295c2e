import os
from pathlib import Path
from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(os.path.join(BASE_DIR, '.env'))

SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-change-me')

DEBUG = os.getenv('DEBUG', 'False').lower() in ('true', '1', 'yes')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'graphs',
    'bounds',
    'oracles',
    'optimization',
    'simulation',
    'cli',
]

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.dummy',
    }
}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'NON_FIELD_ERRORS_KEY': 'error',
}


# Toolkit knobs

INEQ_VERSION = '1.0.0'

INEQ_SEED = int(os.getenv('INEQ_SEED', 20240601))
INEQ_THREADS = int(os.getenv('INEQ_THREADS', 1))

INEQ_OPT_RESTARTS = int(os.getenv('INEQ_OPT_RESTARTS', 8))
INEQ_OPT_MAX_ITERS = int(os.getenv('INEQ_OPT_MAX_ITERS', 500))
INEQ_OPT_TOL = float(os.getenv('INEQ_OPT_TOL', 1e-9))

INEQ_TRANSPORT_MAX_PIVOTS = int(os.getenv('INEQ_TRANSPORT_MAX_PIVOTS', 100000))
INEQ_BRUTE_FORCE_PATH_CAP = int(os.getenv('INEQ_BRUTE_FORCE_PATH_CAP', 1000000))

INEQ_LOG_LEVEL = os.getenv('INEQ_LOG_LEVEL', 'DEBUG' if DEBUG else 'INFO')
INEQ_LOG_DIR = os.getenv('INEQ_LOG_DIR', '')

_APP_HANDLERS = ['console', 'file'] if INEQ_LOG_DIR else ['console']

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
        'json': {
            'format': '{"time": "%(asctime)s", "level": "%(levelname)s", "logger": "%(name)s", "message": "%(message)s"}',
        },
    },
    'handlers': {
        'console': {
            'level': INEQ_LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        app: {
            'handlers': _APP_HANDLERS,
            'level': INEQ_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('graphs', 'bounds', 'oracles', 'optimization', 'simulation', 'cli')
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
}

if INEQ_LOG_DIR:
    os.makedirs(INEQ_LOG_DIR, exist_ok=True)
    LOGGING['handlers']['file'] = {
        'level': INEQ_LOG_LEVEL,
        'class': 'logging.handlers.RotatingFileHandler',
        'filename': os.path.join(INEQ_LOG_DIR, 'ineq.log'),
        'maxBytes': 1024 * 1024 * 10,
        'backupCount': 5,
        'formatter': 'verbose',
    }
