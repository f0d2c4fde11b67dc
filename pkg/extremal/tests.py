import math
import random
from fractions import Fraction
from io import StringIO
from itertools import islice

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import ParameterError
from extremal.constructions import (
    build_counterexample, build_pv, candidate_points, extra_terms, nonconvexity_triple,
    normalized_pv, raise_degree, select_base_point)
from jacobian.analysis import phi_map_rank
from oracle.minimize import minimize_on_sphere
from symmetric.powersums import PowerSumTerm, evaluate, power_sum_value
from testsets.conditions import check_conditions_thm_main
from testsets.constants import PASS, UNDECIDED
from testsets.engine import check_pattern_exact, decide_nonneg_2point
from testsets.patterns import enumerate_patterns

M = PowerSumTerm.power


class BuildPvTests(SimpleTestCase):
    def test_vanishes_at_base_point(self):
        rng = random.Random(1)
        for _ in range(20):
            v = tuple(Fraction(rng.randint(0, 9), rng.randint(1, 3)) for _ in range(3))
            if not any(v):
                continue
            self.assertEqual(evaluate(build_pv(v, 3, 3), v), 0)

    def test_five_terms_and_signs(self):
        pv = build_pv((1, 2, 3), 3, 3)
        self.assertEqual(len(pv.terms), 5)
        self.assertGreater(pv.coefficient(M(2, 6)), 0)
        self.assertGreater(pv.coefficient(M(6, 2)), 0)
        self.assertLess(pv.coefficient(PowerSumTerm.of((6, 1), (2, 3))), 0)
        self.assertEqual(pv.coefficient(M(6, 2)), 14 ** 6)
        self.assertEqual(pv.coefficient(PowerSumTerm.of((6, 1), (2, 3))), -2 * 14 ** 3 * 794)

    def test_sum_of_squares(self):
        pv = build_pv((1, 2, 3), 3, 3)
        rng = random.Random(2)
        for _ in range(500):
            x = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
            self.assertGreaterEqual(evaluate(pv, x), 0)

    def test_extra_terms(self):
        for d in (3, 4, 5):
            self.assertTrue(all(term.degree == 4 * d for term in extra_terms(d)))

    def test_invalid(self):
        with self.assertRaises(ParameterError):
            build_pv((0, 0, 0), 3, 3)
        with self.assertRaises(ParameterError):
            build_pv((1, 2), 3, 3)
        with self.assertRaises(ParameterError):
            build_pv((1, -2, 3), 3, 3)

    def test_warns_outside_the_range(self):
        with self.assertLogs('extremal.constructions', 'WARNING'):
            build_pv((1, 2, 3, 4, 5), 3, 5)


class BasepointTests(SimpleTestCase):
    def test_candidates(self):
        self.assertEqual(next(candidate_points(3)), (1, 2, 3))
        for point in islice(candidate_points(4), 50):
            self.assertGreaterEqual(len({x for x in point if x}), 3)

    def test_select(self):
        v, theta, kappa = select_base_point(3, 3)
        self.assertEqual(v, (1, 2, 3))
        self.assertEqual(theta, Fraction(1, 2))
        self.assertGreater(kappa, 0)
        self.assertEqual(phi_map_rank(v, 3, 3), 3)

    def test_kappa_bounds_two_points(self):
        v, _, kappa = select_base_point(3, 3)
        pv = normalized_pv(v, 3, 3)
        rng = random.Random(3)
        for _ in range(50):
            a, b = Fraction(rng.randint(0, 20), rng.randint(1, 5)), Fraction(rng.randint(1, 9))
            z = rng.choice([(a, a, b), (a, b, b), (a, b, 0), (a, a, 0), (b, 0, 0)])
            self.assertGreaterEqual(evaluate(pv, z), kappa * power_sum_value(2, z) ** 6)

    def test_parameters(self):
        with self.assertRaises(ParameterError):
            select_base_point(3, 2)
        with self.assertRaises(ParameterError):
            select_base_point(2, 3)


class CounterexampleTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.witness = build_counterexample(3, 3)

    def test_certificate(self):
        witness = self.witness
        self.assertEqual(witness.point, (1, 2, 3))
        self.assertTrue(0 < witness.lam < witness.kappa)
        self.assertLess(evaluate(witness.form, witness.point), 0)
        self.assertEqual(witness.value, -witness.lam * 14 ** 6)
        self.assertTrue(all(entry.outcome == PASS for entry in witness.trail))
        self.assertFalse(witness.report.satisfied)

    def test_independent_two_point_check(self):
        for pattern in enumerate_patterns(3, 2):
            self.assertEqual(check_pattern_exact(self.witness.form, pattern).outcome, PASS)
        verdict = decide_nonneg_2point(self.witness.form, override=True)
        self.assertEqual(verdict.status, UNDECIDED)
        self.assertTrue(all(entry.outcome == PASS for entry in verdict.trail))

    def test_oracle_finds_the_negative_minimum(self):
        result = minimize_on_sphere(self.witness.form, seed=0)
        self.assertLess(result.minimum, 0)
        self.assertAlmostEqual(result.minimum, -float(self.witness.lam), delta=1e-6)
        norm = math.sqrt(14)
        for found, expected in zip(sorted(abs(x) for x in result.argmin), (1, 2, 3)):
            self.assertAlmostEqual(found, expected / norm, delta=1e-4)

    def test_nonconvexity(self):
        p, p1, p2 = nonconvexity_triple(3, 3, self.witness)
        self.assertEqual((p1 + p2).scale(Fraction(1, 2)), p)
        for part in (p1, p2):
            self.assertTrue(check_conditions_thm_main(part).satisfied)
            self.assertEqual(len(part.free_terms()), 1)

    def test_raise_degree(self):
        form = raise_degree(self.witness, M(2, 1))
        self.assertEqual(form.degree, 14)
        self.assertLess(evaluate(form, self.witness.point), 0)
        for pattern in enumerate_patterns(3, 2):
            self.assertEqual(check_pattern_exact(form, pattern).outcome, PASS)
        with self.assertRaises(ParameterError):
            raise_degree(self.witness, PowerSumTerm(()))

    def test_four_variables(self):
        witness = build_counterexample(4, 4)
        self.assertLess(witness.value, 0)
        self.assertTrue(all(entry.outcome == PASS for entry in witness.trail))
        self.assertGreaterEqual(len({x for x in witness.point if x}), 3)


class CommandTests(SimpleTestCase):
    def test_counterexample(self):
        out = StringIO()
        call_command('counterexample', n=3, d=3, triple=True, stdout=out)
        self.assertIn('base point v = (1, 2, 3)', out.getvalue())
        self.assertIn('expected exactly one free term, found 2', out.getvalue())
        self.assertIn('p1:', out.getvalue())

    def test_too_many_variables(self):
        with self.assertRaises(CommandError):
            call_command('counterexample', n=5, d=3, stdout=StringIO())
