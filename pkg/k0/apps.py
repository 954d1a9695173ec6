# k0/apps.py

from django.apps import AppConfig


class K0Config(AppConfig):
    name = 'k0'
    verbose_name = 'Grothendieck group'
