# apps/classifier/apps.py

from django.apps import AppConfig


class ClassifierConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.classifier'
    verbose_name = 'Realizability classifier'
