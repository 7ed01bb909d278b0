"""
URL configuration for the fanapprox project.

Every computation lives under /api/ (see tropical/urls.py); the OpenAPI
schema and the Swagger UI describe them.
"""
from django.urls import include, path
from drf_spectacular.views import SpectacularAPIView, SpectacularSwaggerView

urlpatterns = [
    path('api/schema/', SpectacularAPIView.as_view(), name='schema'),
    path("api/docs/", SpectacularSwaggerView.as_view(url_name='schema'), name='swagger-ui'),
    path("api/", include("tropical.urls")),
]
