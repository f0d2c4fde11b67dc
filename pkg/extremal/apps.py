from django.apps import AppConfig


class ExtremalConfig(AppConfig):
    name = 'extremal'
    verbose_name = 'Extremal constructions'
