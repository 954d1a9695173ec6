# stable/apps.py

from django.apps import AppConfig


class StableConfig(AppConfig):
    name = 'stable'
    verbose_name = 'Stable category'
