"""
Django settings for the symtest project.

symtest has no database and no web surface: Django provides configuration,
logging, option validation (forms), the command-line surface (management
commands) and report rendering (templates).
"""

import environ
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

env = environ.Env(
    SYMTEST_DEBUG=(bool, False),
    SYMTEST_JOBS=(int, 1),
    SYMTEST_SEED=(int, 0),
    SYMTEST_RESTARTS=(int, 64),
    SYMTEST_MAX_ITERATIONS=(int, 5000),
    SYMTEST_NUMERIC_TOLERANCE=(float, 1e-7),
    SYMTEST_BASE_POINT_BUDGET=(int, 200),
    SYMTEST_LOG_LEVEL=(str, 'WARNING'),
)
environ.Env.read_env(BASE_DIR / '.env')

SECRET_KEY = env('SECRET_KEY', default='symtest-has-no-sessions')

DEBUG = env('SYMTEST_DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'core',
    'symmetric',
    'schur',
    'testsets',
    'jacobian',
    'extremal',
    'oracle',
    'regions',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
            'autoescape': False,
        },
    },
]

# Forms, restrictions and certificates live in memory only.
DATABASES = {}

USE_I18N = False


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': env('SYMTEST_LOG_LEVEL'),
    },
}


# symtest

SYMTEST_JOBS = env('SYMTEST_JOBS')
SYMTEST_SEED = env('SYMTEST_SEED')
SYMTEST_RESTARTS = env('SYMTEST_RESTARTS')
SYMTEST_MAX_ITERATIONS = env('SYMTEST_MAX_ITERATIONS')
SYMTEST_NUMERIC_TOLERANCE = env('SYMTEST_NUMERIC_TOLERANCE')
SYMTEST_BASE_POINT_BUDGET = env('SYMTEST_BASE_POINT_BUDGET')
