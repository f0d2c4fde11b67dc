from django.apps import AppConfig


class SchurConfig(AppConfig):
    name = 'schur'
    verbose_name = 'Schur polynomials'
