from django.apps import AppConfig


class TropicalConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'tropical'
    verbose_name = 'Fan tropical curves'
