from django.apps import AppConfig


class DominationConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'domination'
    verbose_name = 'Dominating set approximation'
