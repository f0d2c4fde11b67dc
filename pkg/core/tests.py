import os
import tempfile
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.template import Context, Template
from django.test import SimpleTestCase

from core.exceptions import ConditionsNotSatisfied, FormSyntaxError, SymtestError
from core.forms import FormFileForm, IntegerListField, RationalListField, RationalRangeField
from core.parallel import ordered_map
from symtest.cli import SUBCOMMANDS, translate
from testsets.conditions import ConditionReport


class CliTests(SimpleTestCase):
    def test_translate(self):
        self.assertEqual(translate(['symtest', 'check', 'f.txt']),
                         ['symtest', 'check_form', 'f.txt'])
        self.assertEqual(translate(['symtest', 'scan-region', '--preset', 'cube'])[1],
                         'scan_region')
        self.assertEqual(translate(['symtest', 'help']), ['symtest', 'help'])
        self.assertEqual(translate(['symtest']), ['symtest'])

    def test_every_subcommand_is_a_command(self):
        from django.core.management import get_commands
        commands = get_commands()
        for name in SUBCOMMANDS.values():
            self.assertIn(name, commands)


class FieldTests(SimpleTestCase):
    def test_rational_list(self):
        field = RationalListField()
        self.assertEqual(field.clean('1/2, 0,3'), (Fraction(1, 2), 0, 3))
        with self.assertRaises(Exception):
            field.clean('1,x')

    def test_integer_list(self):
        field = IntegerListField()
        self.assertEqual(field.clean('3,2,1'), (3, 2, 1))
        for value in ('3,-1', '1.5'):
            with self.assertRaises(Exception):
                field.clean(value)

    def test_rational_range(self):
        field = RationalRangeField()
        self.assertEqual(field.clean('-4:4:1'), (-4, 4, 1))
        for value in ('1:0:1', '0:1:0', '0:1'):
            with self.assertRaises(Exception):
                field.clean(value)


class FormFileTests(SimpleTestCase):
    def write(self, text):
        handle, path = tempfile.mkstemp(suffix='.txt')
        with os.fdopen(handle, 'w') as stream:
            stream.write(text)
        self.addCleanup(os.remove, path)
        return path

    def test_parsed(self):
        path = self.write('n = 3\ndegree = 4\n1 * M2^2\n-1/2 * M4\n')
        form = FormFileForm({'form_file': path})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['form_file'].n, 3)

    def test_syntax_error(self):
        form = FormFileForm({'form_file': self.write('n = 3\n1 * M3^4\n')})
        self.assertFalse(form.is_valid())
        self.assertIn('line 2', form.errors['form_file'][0])

    def test_zero_denominator(self):
        form = FormFileForm({'form_file': self.write('n = 3\n1/0 * M2^2\n')})
        self.assertFalse(form.is_valid())
        self.assertIn('line 2, column 1: zero denominator', form.errors['form_file'][0])

    def test_missing_file(self):
        form = FormFileForm({'form_file': '/nonexistent/form.txt'})
        self.assertFalse(form.is_valid())
        self.assertIn('Cannot read', form.errors['form_file'][0])


def square(x):
    return x * x


class ParallelTests(SimpleTestCase):
    def test_ordered(self):
        self.assertEqual(ordered_map(square, range(6)), [0, 1, 4, 9, 16, 25])
        self.assertEqual(ordered_map(square, range(6), jobs=2), [0, 1, 4, 9, 16, 25])
        self.assertEqual(ordered_map(square, [], jobs=3), [])


class ExceptionTests(SimpleTestCase):
    def test_syntax_error_position(self):
        error = FormSyntaxError('bad', 2, 10)
        self.assertEqual(str(error), 'line 2, column 10: bad')
        self.assertIsInstance(error, SymtestError)
        self.assertIsInstance(error, ValueError)

    def test_conditions_carry_report(self):
        report = ConditionReport('main')
        report.violate('n = 2 < 3')
        error = ConditionsNotSatisfied(report)
        self.assertIs(error.report, report)
        self.assertIn('n = 2 < 3', str(error))


class TemplateTagTests(SimpleTestCase):
    def test_filters(self):
        template = Template(
            '{% load symtest %}{{ value|rational }} {{ point|point }} {{ none|rational }}')
        rendered = template.render(Context({
            'value': Fraction(-3, 4), 'point': (Fraction(1, 2), 0), 'none': None}))
        self.assertEqual(rendered, '-3/4 (1/2, 0) -')


class CommandBaseTests(SimpleTestCase):
    def test_invalid_options(self):
        with self.assertRaises(CommandError) as caught:
            call_command('kostka', '3,1', '2,1', stdout=StringIO())
        self.assertEqual(caught.exception.returncode, 2)

    def test_json_lines(self):
        import ujson
        out = StringIO()
        call_command('kostka', '2,1', '1,1,1', output_format='json-lines', stdout=out)
        self.assertEqual(ujson.loads(out.getvalue().strip())['kostka'], 2)
