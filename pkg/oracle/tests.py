import math
import os
import random
import tempfile
from fractions import Fraction
from functools import lru_cache
from io import StringIO

import numpy as np
from django.core.management import call_command
from django.test import SimpleTestCase

from core.exceptions import ParameterError
from oracle.minimize import evaluate_float, minimize_on_sphere, minimize_restriction
from oracle.sampling import (
    power_mean_bounds_check, simplex_grid, timofte_grid_check, two_point_realization)
from symmetric.powersums import PowerSumForm, PowerSumTerm, enumerate_basis, evaluate
from symmetric.textformat import render_form
from testsets.conditions import check_conditions_thm_main, check_free_term
from testsets.constants import NONNEGATIVE, NOT_NONNEGATIVE
from testsets.engine import decide_nonneg_2point
from testsets.patterns import KPointPattern

M = PowerSumTerm.power
MIXED = PowerSumTerm.of((6, 1), (2, 3))


def example_form(n):
    return PowerSumForm.from_dict(n, 12, {
        M(4, 3): 1, M(2, 6): Fraction(-1, 10), M(6, 2): 1, MIXED: 1})


def random_coefficient(rng):
    value = Fraction(rng.randint(-50, 50), 10)
    return value if value else Fraction(1, 10)


@lru_cache(maxsize=None)
def one_free_terms(n, d):
    """Basis terms usable as the single free term of a degree-4d form."""
    return [term for term in enumerate_basis(n, 4 * d) if not check_free_term(term, d)]


class MinimizeTests(SimpleTestCase):
    def test_constant_on_the_sphere(self):
        result = minimize_on_sphere(PowerSumForm.from_dict(3, 12, {M(2, 6): 1}), restarts=8)
        self.assertAlmostEqual(result.minimum, 1.0, delta=1e-9)
        self.assertTrue(result.converged)

    def test_indefinite_example(self):
        result = minimize_on_sphere(example_form(4))
        self.assertLess(result.minimum, 0)
        self.assertAlmostEqual(sum(x * x for x in result.argmin), 1.0, delta=1e-12)
        self.assertAlmostEqual(evaluate_float(example_form(4), result.argmin), result.minimum,
                               delta=1e-9)

    def test_deterministic(self):
        first = minimize_on_sphere(example_form(4), restarts=16, seed=5)
        second = minimize_on_sphere(example_form(4), restarts=16, seed=5)
        self.assertEqual(first, second)

    def test_restriction(self):
        pattern = KPointPattern((3, 1))
        result = minimize_restriction(example_form(4), pattern, restarts=16)
        self.assertEqual(len(result.argmin), 2)
        a, b = result.argmin
        self.assertAlmostEqual(3 * a * a + b * b, 1.0, delta=1e-12)
        self.assertAlmostEqual(evaluate_float(example_form(4), (a, a, a, b)), result.minimum,
                               delta=1e-9)

    def test_concordance_with_two_point_verdicts(self):
        rng = random.Random(23)
        for _ in range(100):
            n, d = rng.randint(3, 6), rng.randint(3, 6)
            free = rng.choice(one_free_terms(n, d))
            form = PowerSumForm.from_dict(n, 4 * d, {
                free: random_coefficient(rng), M(2, 2 * d): random_coefficient(rng),
                M(2 * d, 2): random_coefficient(rng),
                PowerSumTerm.of((2 * d, 1), (2, d)): random_coefficient(rng)})
            self.assertTrue(check_conditions_thm_main(form).satisfied)
            verdict = decide_nonneg_2point(form)
            if verdict.status == NONNEGATIVE:
                minimum = minimize_on_sphere(form, restarts=8, max_iterations=500).minimum
                self.assertGreaterEqual(minimum, -1e-7)
            else:
                self.assertEqual(verdict.status, NOT_NONNEGATIVE)
                self.assertLess(evaluate(form, verdict.witness), 0)


class SamplingTests(SimpleTestCase):
    def test_simplex_grid(self):
        grid = simplex_grid(3, 4)
        self.assertEqual(len(grid), 15)
        self.assertTrue(np.allclose(grid.sum(axis=1), 1))
        self.assertEqual(simplex_grid(1, 6).tolist(), [[1.0]])

    def test_grid_finds_negative_two_point(self):
        sample = timofte_grid_check(example_form(4), 2)
        self.assertLess(sample.minimum, 0)
        self.assertLessEqual(sample.pattern.size, 2)
        self.assertGreater(sample.samples, 0)

    def test_grid_on_nonnegative_form(self):
        sample = timofte_grid_check(example_form(3), 2)
        self.assertGreaterEqual(sample.minimum, -1e-9)

    def test_power_mean_equality_case(self):
        form = PowerSumForm.from_dict(3, 12, {M(6, 2): 1, M(2, 6): Fraction(-1, 81)})
        sample = timofte_grid_check(form, 1)
        self.assertAlmostEqual(sample.minimum, 0, delta=1e-12)
        self.assertEqual(sample.pattern, KPointPattern((3,)))

    def test_power_mean_bounds(self):
        self.assertTrue(power_mean_bounds_check((1, 0, 0), 3))
        self.assertTrue(power_mean_bounds_check((1 / math.sqrt(3),) * 3, 3))
        with self.assertRaises(ParameterError):
            power_mean_bounds_check((1, 1, 0), 2)

    def test_realization_midpoint(self):
        n, k = 4, 3
        r = (1 + 1 / n ** (k - 1)) / 2
        realization = two_point_realization(n, k, r)
        z = np.asarray(realization.point)
        self.assertAlmostEqual((z ** (2 * k)).sum(), r, delta=1e-12)

    def test_realization_of_random_points(self):
        rng = np.random.default_rng(29)
        for _ in range(100):
            n, k = int(rng.integers(2, 7)), int(rng.integers(1, 6))
            x = rng.standard_normal(n)
            x /= np.linalg.norm(x)
            power_mean_bounds_check(x, k)
            r = float((x ** (2 * k)).sum())
            z = np.asarray(two_point_realization(n, k, r).point)
            self.assertAlmostEqual((z ** 2).sum(), 1.0, delta=1e-12)
            self.assertAlmostEqual((z ** (2 * k)).sum(), r, delta=1e-10)

    def test_realization_out_of_range(self):
        with self.assertRaises(ParameterError):
            two_point_realization(3, 2, 0.1)
        with self.assertRaises(ParameterError):
            two_point_realization(1, 2, 0.5)


class CommandTests(SimpleTestCase):
    def setUp(self):
        handle, self.path = tempfile.mkstemp(suffix='.txt')
        with os.fdopen(handle, 'w') as stream:
            stream.write(render_form(PowerSumForm.from_dict(3, 12, {M(2, 6): 1})))

    def tearDown(self):
        os.remove(self.path)

    def test_minimize(self):
        out = StringIO()
        call_command('minimize', self.path, restarts=8, stdout=out)
        self.assertIn('minimum: 1\n', out.getvalue())
        self.assertIn('converged: yes', out.getvalue())

    def test_minimize_with_grid(self):
        import ujson
        out = StringIO()
        call_command('minimize', self.path, restarts=4, grid=2, output_format='json-lines',
                     stdout=out)
        record = ujson.loads(out.getvalue().strip())
        self.assertEqual(record['restarts'], 4)
        self.assertAlmostEqual(record['grid']['minimum'], 1.0, delta=1e-9)
