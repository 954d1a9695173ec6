# extbundles/settings.py

"""
Django settings for the extbundles project.

The project has no database models and no HTTP surface: Django provides the
app registry, management commands, logging and the test runner, and the
REST framework provides serializers and the JSON renderer.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

import os
from dotenv import load_dotenv

load_dotenv()

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'extbundles-local-only')

DEBUG = os.getenv('DEBUG', 'True') == 'True'


# Application definition

INSTALLED_APPS = [
    'rest_framework',

    # my apps
    'lgroup',
    'k0',
    'bundles',
    'orbits',
    'stable',
    'cli',
]


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# REST Framework settings
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'COERCE_DECIMAL_TO_STRING': False,
}


# Logging
LOG_LEVEL = os.getenv('EXTBUNDLES_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
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
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ('lgroup', 'k0', 'bundles', 'orbits', 'stable', 'cli')
    },
}


# Verification settings

# Recompute closed criteria through Grothendieck classes and abort on mismatch
ORACLE_CROSSCHECK = os.getenv('ORACLE_CROSSCHECK', 'False') == 'True'

SELFTEST_MAX_WEIGHT = int(os.getenv('SELFTEST_MAX_WEIGHT', '6'))
SELFTEST_ACCEPTANCE_WEIGHT = int(os.getenv('SELFTEST_ACCEPTANCE_WEIGHT', '8'))
SELFTEST_SEED = int(os.getenv('SELFTEST_SEED', '0'))

# Random (twist, interior) samples per weight triple for the sigma-lifts-tau check
TAU_SAMPLE_SIZE = int(os.getenv('TAU_SAMPLE_SIZE', '100'))
