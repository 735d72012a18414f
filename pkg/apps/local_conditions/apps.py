# apps/local_conditions/apps.py

from django.apps import AppConfig


class LocalConditionsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.local_conditions'
    verbose_name = 'Local lattice conditions'
