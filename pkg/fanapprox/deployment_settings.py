import os

from .settings import *  # noqa: F401,F403
from .settings import LOGGING, REST_FRAMEWORK, TROPICAL

ALLOWED_HOSTS = [os.environ.get('RENDER_EXTERNAL_HOSTNAME')]
CSRF_TRUSTED_ORIGINS = ['https://' + os.environ.get('RENDER_EXTERNAL_HOSTNAME')]

DEBUG = False
SECRET_KEY = os.environ.get('SECRET_KEY')

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'whitenoise.middleware.WhiteNoiseMiddleware',
    'django.middleware.common.CommonMiddleware',
    "corsheaders.middleware.CorsMiddleware",
]

CORS_ALLOWED_ORIGINS = [
    origin for origin in os.environ.get('CORS_ALLOWED_ORIGINS', '').split(',') if origin
]

STORAGES = {
    "default": {
        "BACKEND": "django.core.files.storage.FileSystemStorage",
    },
    "staticfiles": {
        "BACKEND": "whitenoise.storage.CompressedStaticFilesStorage",
    },
}

# Smaller computation limits for public requests.
TROPICAL = {
    **TROPICAL,
    "MAX_IRREDUCIBILITY_RAYS": int(os.environ.get("TROPICAL_MAX_IRREDUCIBILITY_RAYS", 16)),
    "MAX_TOTAL_WEIGHT": int(os.environ.get("TROPICAL_MAX_TOTAL_WEIGHT", 32)),
    "SUBDIVISION_MAX_DEGREE": int(os.environ.get("TROPICAL_SUBDIVISION_MAX_DEGREE", 3)),
    "SCAN_MAX_DEGREE": int(os.environ.get("TROPICAL_SCAN_MAX_DEGREE", 8)),
}

REST_FRAMEWORK = {
    **REST_FRAMEWORK,
    'DEFAULT_THROTTLE_RATES': {
        'anon': os.environ.get('TROPICAL_ANON_RATE', '60/minute'),
    },
}

LOGGING = {
    **LOGGING,
    "loggers": {
        "tropical": {
            "handlers": ["console"],
            "level": os.environ.get("TROPICAL_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}
