"""The ``symtest`` command line.

Subcommands are Django management commands; this entry point maps the
hyphenated subcommand names onto them, e.g. ``symtest check form.txt`` runs
the ``check_form`` command (``check`` is Django's own system check).
"""
import os
import sys

SUBCOMMANDS = {
    'check': 'check_form',
    'restrict': 'restrict',
    'scan-region': 'scan_region',
    'schur': 'schur',
    'kostka': 'kostka',
    'jacobian-rank': 'jacobian_rank',
    'minor-factor': 'minor_factor',
    'counterexample': 'counterexample',
    'minimize': 'minimize',
}


def translate(argv):
    """Return ``argv`` with the subcommand replaced by its management command."""
    argv = list(argv)
    if len(argv) > 1 and argv[1] in SUBCOMMANDS:
        argv[1] = SUBCOMMANDS[argv[1]]
    return argv


def main(argv=None):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'symtest.settings')
    from django.core.management import execute_from_command_line

    argv = translate(sys.argv if argv is None else argv)
    argv[0] = 'symtest'
    execute_from_command_line(argv)
