from django.apps import AppConfig


class SymmetricConfig(AppConfig):
    name = 'symmetric'
    verbose_name = 'even symmetric forms'
