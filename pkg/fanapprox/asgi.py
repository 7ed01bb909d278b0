"""
ASGI entry point of fanapprox, for running the API under uvicorn:

    uvicorn fanapprox.asgi:application
"""
from django.core.asgi import get_asgi_application

from fanapprox import configure_settings

configure_settings()

application = get_asgi_application()
