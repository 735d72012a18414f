# apps/exact_poly/apps.py

from django.apps import AppConfig


class ExactPolyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.exact_poly'
    verbose_name = 'Integer polynomials'
