import os


def configure_settings():
    """
    Point DJANGO_SETTINGS_MODULE at the deployment settings on Render and
    at the development settings everywhere else, unless already set.
    """
    module = (
        "fanapprox.deployment_settings" if "RENDER_EXTERNAL_HOSTNAME" in os.environ
        else "fanapprox.settings"
    )
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", module)
