# lgroup/apps.py

from django.apps import AppConfig


class LgroupConfig(AppConfig):
    name = 'lgroup'
    verbose_name = 'Grading group L(p1,p2,p3)'
