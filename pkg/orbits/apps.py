# orbits/apps.py

from django.apps import AppConfig


class OrbitsConfig(AppConfig):
    name = 'orbits'
    verbose_name = 'Orbit counting'
