# apps/modp/apps.py

from django.apps import AppConfig


class ModpConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.modp'
    verbose_name = 'Polynomials over prime fields'
