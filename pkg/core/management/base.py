import csv
import logging
import sys

import ujson
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.template.loader import render_to_string

from core.exceptions import SymtestError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('text', 'csv', 'json-lines')

# Exit codes shared by every subcommand
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2


class SymtestCommand(BaseCommand):
    """Base class of the symtest subcommands.

    Adds the global ``--format``, ``--seed`` and ``--jobs`` flags, validates
    options through ``form_class`` and carries an exit code that is applied
    when the command runs from the command line.
    """
    form_class = None
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--format', dest='output_format',
                            choices=OUTPUT_FORMATS, default='text')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--jobs', type=int, default=None,
                            help='worker processes (default: SYMTEST_JOBS)')

    def execute(self, *args, **options):
        self.exit_code = EXIT_OK
        self.output_format = options.get('output_format') or 'text'
        # Settings fill in the flags left unset
        seed = options.get('seed')
        self.seed = settings.SYMTEST_SEED if seed is None else seed
        jobs = options.get('jobs')
        self.jobs = max(1, settings.SYMTEST_JOBS if jobs is None else jobs)
        try:
            return super().execute(*args, **options)
        except SymtestError as exc:
            raise CommandError(str(exc), returncode=EXIT_UNDECIDED) from exc

    def run_from_argv(self, argv):
        super().run_from_argv(argv)
        if self.exit_code:
            sys.exit(self.exit_code)

    def clean_options(self, data):
        form = self.form_class(data)
        if not form.is_valid():
            raise CommandError(form.errors.as_text(), returncode=EXIT_UNDECIDED)
        return form.cleaned_data

    def emit_text(self, template, context):
        self.stdout.write(render_to_string(template, context))

    def emit_csv(self, header, rows):
        writer = csv.writer(self.stdout, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)

    def emit_json_lines(self, records):
        for record in records:
            self.stdout.write(ujson.dumps(record))
