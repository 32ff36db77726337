from django.apps import AppConfig


class LocalsimConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'localsim'
    verbose_name = 'LOCAL-model round engine'
