# apps/obstruction/apps.py

from django.apps import AppConfig


class ObstructionConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.obstruction'
    verbose_name = 'Obstruction groups'
