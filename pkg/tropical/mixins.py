
from rest_framework.exceptions import APIException

from .exceptions import TropicalError


class TropicalErrorMixin:
    """
    Turns domain errors raised by a view into API errors carrying the
    error's status code (400 for bad input, 422 for violated preconditions,
    500 for a failed internal identity).
    """
    def handle_exception(self, exc):
        if isinstance(exc, TropicalError):
            error = APIException(f"{type(exc).__name__}: {exc.detail}", code=type(exc).__name__)
            error.status_code = exc.status_code
            exc = error
        return super().handle_exception(exc)
