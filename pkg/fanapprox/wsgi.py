"""
WSGI entry point of fanapprox, served by gunicorn in deployment:

    gunicorn fanapprox.wsgi
"""
from django.core.wsgi import get_wsgi_application

from fanapprox import configure_settings

configure_settings()

application = get_wsgi_application()
