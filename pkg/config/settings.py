"""
Django settings for the salemk3 project.

The project has no database and serves no requests: every app is an
in-process library exposed through management commands.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-salemk3-development-key')

DEBUG = config('DEBUG', default=False, cast=bool)
ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=lambda v: [s.strip() for s in v.split(',')])

# Application definition

DJANGO_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
]

THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'apps.exact_poly',
    'apps.modp',
    'apps.cyclotomic',
    'apps.salem',
    'apps.local_conditions',
    'apps.obstruction',
    'apps.signatures',
    'apps.classifier',
    'apps.reports',
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS

# Nothing is persisted.
DATABASES = {}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# DRF Settings
# Serializers validate command arguments and shape the JSON reports.

REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': True,
}


# ==============================================================================
# 			Salem / K3 computation settings
# ==============================================================================
SALEMK3_VERSION = '1.0.0'
# Largest cyclotomic order searched; 66 is the largest m with phi(m) <= 20.
SALEMK3_M_CAP = config('SALEMK3_M_CAP', default=66, cast=int)
SALEMK3_SEED = config('SALEMK3_SEED', default=0, cast=int)
SALEMK3_JOBS = config('SALEMK3_JOBS', default=1, cast=int)
# 2^-44 < 10^-12, enough for ten printed decimals of alpha.
SALEMK3_ALPHA_BITS = config('SALEMK3_ALPHA_BITS', default=44, cast=int)
SALEMK3_TABLE = config('SALEMK3_TABLE', default=str(BASE_DIR / 'apps' / 'reports' / 'data' / 'salem_table.txt'))


# Logging
LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'salemk3': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'salemk3',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
