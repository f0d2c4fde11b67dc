import os
import tempfile
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import ParameterError
from oracle.minimize import minimize_on_sphere
from regions.constants import IN_THEOREM, OUT_OF_THEOREM, PRESET_CUBE, PRESET_SLICES
from regions.reports import csv_row, render_svg
from regions.scan import (
    RegionScanSpec, grid_values, in_expected_region, scan_point, scan_region, template_form)
from symmetric.powersums import PowerSumTerm, evaluate
from testsets.constants import EXACT, NONNEGATIVE, NOT_NONNEGATIVE, UNDECIDED


def small_spec():
    return RegionScanSpec(4, 3, (Fraction(1),), (Fraction(-1), Fraction(1), Fraction(3)),
                          (Fraction(-4), Fraction(-1), Fraction(2)))


class SpecTests(SimpleTestCase):
    def test_grid_values(self):
        self.assertEqual(len(grid_values(-4, 4, 1)), 9)
        self.assertEqual(grid_values(0, 1, Fraction(1, 2)), (0, Fraction(1, 2), 1))

    def test_presets(self):
        self.assertEqual(len(RegionScanSpec.preset(PRESET_CUBE)), 729)
        self.assertEqual(len(RegionScanSpec.preset(PRESET_SLICES)), 2 * 21 * 21)
        self.assertEqual(RegionScanSpec.preset(PRESET_CUBE).points()[0], (-4, -4, -4))

    def test_invalid(self):
        with self.assertRaises(ParameterError):
            RegionScanSpec.from_ranges(4, 2, (1, 1, 1), (1, 1, 1), (1, 1, 1))
        with self.assertRaises(ParameterError):
            RegionScanSpec.from_ranges(4, 3, (1, 0, 1), (1, 1, 1), (1, 1, 1))

    def test_template(self):
        form = template_form(4, 3, 1, Fraction(-1, 10), 1)
        self.assertEqual(len(form.terms), 4)
        self.assertEqual(form.coefficient(PowerSumTerm.power(4, 3)), 1)
        self.assertEqual(form.coefficient(PowerSumTerm.of((6, 1), (2, 3))), 1)

    def test_expected_region(self):
        self.assertTrue(in_expected_region(1, 0, -2))
        self.assertFalse(in_expected_region(1, -1, 4))
        self.assertFalse(in_expected_region(-4, 1, 1))


class ScanTests(SimpleTestCase):
    def test_matches_expected_region(self):
        result = scan_region(small_spec())
        self.assertEqual(len(result.rows), 9)
        self.assertTrue(all(row.annotation == IN_THEOREM for row in result.rows))
        self.assertEqual(result.mismatches(), [])
        for row in result.rows:
            if row.status == NOT_NONNEGATIVE:
                self.assertIsNotNone(row.witness)
                self.assertEqual(row.method, EXACT)

    def test_shuffled_order(self):
        self.assertEqual(scan_region(small_spec()).rows,
                         scan_region(small_spec(), shuffle_seed=3).rows)

    def test_nonnegative_rows_agree_with_oracle(self):
        for row in scan_region(small_spec()).rows:
            if row.status == NONNEGATIVE:
                form = template_form(4, 3, *row.coefficients)
                self.assertGreaterEqual(minimize_on_sphere(form, restarts=16).minimum, -1e-7)

    def test_boundary_point(self):
        row = scan_point(4, 3, (Fraction(1), Fraction(0), Fraction(-2)))
        self.assertEqual(row.annotation, OUT_OF_THEOREM)
        self.assertIn(row.status, (NONNEGATIVE, UNDECIDED))

    def test_zero_alpha_is_out_of_theorem(self):
        spec = RegionScanSpec(4, 3, (Fraction(0),), (Fraction(1),), (Fraction(1), Fraction(2)))
        self.assertTrue(all(row.annotation == OUT_OF_THEOREM for row in scan_region(spec).rows))

    def test_csv_row(self):
        row = scan_point(4, 3, (Fraction(1), Fraction(-1, 10), Fraction(1)))
        cells = csv_row(row)
        self.assertEqual(cells[:4], ('1', '-1/10', '1', NOT_NONNEGATIVE))
        self.assertTrue(cells[4].startswith('('))

    def test_svg(self):
        svg = render_svg(scan_region(small_spec()))
        self.assertTrue(svg.startswith('<svg'))
        self.assertIn('alpha = 1', svg)
        self.assertEqual(svg.count('<title>'), 9)


class CubeScanTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.result = scan_region(RegionScanSpec.preset(PRESET_CUBE))

    def test_every_point_decided(self):
        self.assertEqual(len(self.result.rows), 729)
        self.assertEqual(self.result.mismatches(), [])

    def test_zero_coefficients_are_out_of_theorem(self):
        out = self.result.out_of_theorem()
        self.assertEqual(len(out), 729 - 8 ** 3)
        self.assertTrue(all(0 in row.coefficients for row in out))

    def test_out_of_theorem_verdicts_agree_with_oracle(self):
        for row in self.result.out_of_theorem():
            form = template_form(4, 3, *row.coefficients)
            if row.status == NOT_NONNEGATIVE:
                self.assertLess(evaluate(form, row.witness), 0)
            else:
                self.assertIn(row.status, (NONNEGATIVE, UNDECIDED))
                minimum = minimize_on_sphere(form, restarts=8, max_iterations=300).minimum
                self.assertGreaterEqual(minimum, -1e-7)


class CommandTests(SimpleTestCase):
    def test_csv(self):
        out = StringIO()
        call_command('scan_region', alpha='1:1:1', beta='-1:1:2', gamma='1:1:1',
                     output_format='csv', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], 'alpha,beta,gamma,verdict,witness,pattern,method,annotation')
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith('1,-1,1,not-nonnegative,"('))
        self.assertTrue(lines[2].startswith('1,1,1,nonnegative,,'))

    def test_summary_and_svg(self):
        handle, path = tempfile.mkstemp(suffix='.svg')
        os.close(handle)
        try:
            out = StringIO()
            call_command('scan_region', alpha='1:1:1', beta='1:3:2', gamma='-4:2:3', svg=path,
                         stdout=out, stderr=StringIO())
            self.assertIn('points: 6', out.getvalue())
            self.assertIn('gamma + 1 >= 0: 0', out.getvalue())
            with open(path) as stream:
                self.assertIn('<svg', stream.read())
        finally:
            os.remove(path)

    def test_missing_range(self):
        with self.assertRaises(CommandError):
            call_command('scan_region', alpha='1:1:1', stdout=StringIO())
