from django.apps import AppConfig


class JacobianConfig(AppConfig):
    name = 'jacobian'
    verbose_name = 'Jacobian analysis'
