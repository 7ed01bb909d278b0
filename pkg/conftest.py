import django
from django.test.utils import setup_test_environment

from fanapprox import configure_settings

configure_settings()
django.setup()
setup_test_environment()
