# apps/salem/apps.py

from django.apps import AppConfig


class SalemConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.salem'
    verbose_name = 'Salem polynomials'
