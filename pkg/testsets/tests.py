import os
import random
import tempfile
from fractions import Fraction
from io import StringIO

import numpy as np
from django.core.management import call_command
from django.test import SimpleTestCase

from core.exceptions import ConditionsNotSatisfied, PatternError
from symmetric.powersums import PowerSumForm, PowerSumTerm, enumerate_basis, evaluate
from symmetric.textformat import render_form
from testsets.conditions import (
    check_conditions_thm_main, check_conditions_thm_main2, check_free_term, sorting_sign)
from testsets.constants import (
    EXACT, FAIL, NONNEGATIVE, NOT_NONNEGATIVE, NUMERIC, PASS, UNDECIDED)
from testsets.engine import (
    decide_nonneg_2point, decide_nonneg_mpoint, on_lower_stratum, timofte_check)
from testsets.patterns import KPointPattern, enumerate_patterns
from testsets.restriction import dehomogenize, restrict
from testsets.univariate import (
    UnivariatePoly, certified_lower_bound, isolate_real_roots, univariate_nonneg)

M = PowerSumTerm.power


def example_form(n, alpha=1, beta=Fraction(-1, 10), gamma=1, delta=1):
    """alpha M4^3 + beta M2^6 + gamma M6^2 + delta M6 M2^3."""
    return PowerSumForm.from_dict(n, 12, {
        M(4, 3): alpha, M(2, 6): beta, M(6, 2): gamma, PowerSumTerm.of((6, 1), (2, 3)): delta})


def anchored(n, d, free, beta=1, gamma=1, delta=1):
    coefficients = dict(free)
    coefficients.update({M(2, 2 * d): beta, M(2 * d, 2): gamma,
                         PowerSumTerm.of((2 * d, 1), (2, d)): delta})
    return PowerSumForm.from_dict(n, 4 * d, coefficients)


def poly(*descending):
    return UnivariatePoly(tuple(reversed(descending)))


class ConditionTests(SimpleTestCase):
    def test_example_satisfies_one_free_term_conditions(self):
        report = check_conditions_thm_main(example_form(3))
        self.assertTrue(report.satisfied, report.violations)

    def test_missing_anchor(self):
        report = check_conditions_thm_main(example_form(3, delta=0))
        self.assertFalse(report.satisfied)
        self.assertTrue(any('anchor coefficient zero' in v for v in report.violations))

    def test_free_term_on_the_anchor_indices(self):
        self.assertTrue(check_free_term(M(6, 2), 3)[0].startswith('j₁ ∈ {2, 6}'))
        report = check_conditions_thm_main(anchored(3, 3, {}))
        self.assertFalse(report.satisfied)
        self.assertIn('j₁', report.violations[0])

    def test_large_index_must_stand_alone(self):
        self.assertEqual(check_free_term(PowerSumTerm.of((8, 1), (2, 2)), 3), [])
        self.assertEqual(check_free_term(PowerSumTerm.of((8, 1), (4, 1)), 3)[0][:9],
                         'free term')
        self.assertEqual(check_free_term(PowerSumTerm.of((4, 1), (2, 4)), 3), [])

    def test_degree_must_be_divisible_by_four(self):
        form = PowerSumForm.from_dict(3, 10, {M(2, 5): 1})
        self.assertFalse(check_conditions_thm_main(form).satisfied)

    def test_sorting_sign(self):
        self.assertEqual(sorting_sign((3, 2, 1)), 1)
        self.assertEqual(sorting_sign((2, 3, 1)), -1)
        self.assertEqual(sorting_sign((14, 6, 2, 12)), 1)
        self.assertEqual(sorting_sign((10, 6, 2, 12)), -1)
        self.assertEqual(sorting_sign((4, 2, 2, 12)), 0)

    def test_one_free_term_agrees(self):
        for form in (example_form(3), example_form(4), example_form(4, delta=0),
                     anchored(4, 4, {PowerSumTerm.of((10, 1), (2, 3)): 1}),
                     anchored(4, 4, {PowerSumTerm.of((10, 1), (4, 1), (2, 1)): 1})):
            self.assertEqual(check_conditions_thm_main(form).satisfied,
                             check_conditions_thm_main2(form).satisfied, render_form(form))

    def test_single_power_of_m4(self):
        for d in (3, 4, 5):
            report = check_conditions_thm_main2(anchored(d, d, {M(4, d): 1}))
            self.assertTrue(report.satisfied, report.violations)

    def test_opposite_orientations(self):
        form = anchored(6, 6, {PowerSumTerm.of((14, 1), (10, 1)): 1, M(6, 4): 1})
        report = check_conditions_thm_main2(form)
        self.assertFalse(report.satisfied)
        self.assertIn('Ψ not identically oriented ordered', report.violations[0])

    def test_too_many_free_terms(self):
        form = anchored(3, 3, {M(4, 3): 1, PowerSumTerm.of((4, 2), (2, 2)): 1})
        report = check_conditions_thm_main2(form)
        self.assertTrue(any('m = 4 > n = 3' in v for v in report.violations))

    def test_weaker_bound_noted(self):
        form = anchored(4, 4, {M(4, 4): 1, PowerSumTerm.of((6, 2), (2, 2)): 1})
        report = check_conditions_thm_main2(form)
        self.assertTrue(report.satisfied, report.violations)
        self.assertTrue(report.notes)


class PatternTests(SimpleTestCase):
    def test_four_variables(self):
        self.assertEqual([p.multiplicities for p in enumerate_patterns(4, 2)],
                         [(1,), (2,), (3,), (4,), (1, 1), (2, 1), (3, 1), (2, 2)])

    def test_three_variables(self):
        self.assertEqual([p.multiplicities for p in enumerate_patterns(3, 2)],
                         [(1,), (2,), (3,), (1, 1), (2, 1)])

    def test_two_variables(self):
        self.assertEqual([p.multiplicities for p in enumerate_patterns(2, 1)], [(1,), (2,)])

    def test_invalid(self):
        with self.assertRaises(PatternError):
            enumerate_patterns(3, 4)
        with self.assertRaises(PatternError):
            KPointPattern((1, 2))
        with self.assertRaises(PatternError):
            KPointPattern((3, 2)).lift((1, 2), 4)

    def test_lift(self):
        self.assertEqual(KPointPattern((2, 1)).lift((5, 7), 4), (5, 5, 7, 0))


class RestrictionTests(SimpleTestCase):
    def assertPolynomial(self, polynomial, even_coefficients):
        self.assertEqual(polynomial.even_part_coefficients(),
                         tuple(Fraction(c) for c in even_coefficients))
        self.assertTrue(all(c == 0 for c in polynomial.coefficients[1::2]))

    def test_three_variables(self):
        form = example_form(3)
        self.assertPolynomial(
            dehomogenize(restrict(form, KPointPattern((1, 1)))),
            ('29/10', '12/5', '9/2', 2, '9/2', '12/5', '29/10'))
        self.assertPolynomial(
            dehomogenize(restrict(form, KPointPattern((2, 1)))),
            ('108/5', '24/5', 0, -2, 12, '24/5', '29/10'))

    def test_four_variables(self):
        self.assertPolynomial(
            dehomogenize(restrict(example_form(4), KPointPattern((3, 1)))),
            ('441/10', '-324/5', '-135/2', -18, '45/2', '36/5', '29/10'))
        self.assertPolynomial(
            dehomogenize(restrict(example_form(4), KPointPattern((2, 2)))),
            ('108/5', '48/5', -24, -88, -24, '48/5', '108/5'))

    def test_dehomogenize_needs_two_values(self):
        with self.assertRaises(PatternError):
            dehomogenize(restrict(example_form(4), KPointPattern((1, 1, 1))))

    def test_restriction_matches_evaluation(self):
        rng = random.Random(5)
        basis = enumerate_basis(5, 12)
        form = PowerSumForm.from_dict(
            5, 12, {term: Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for term in basis})
        for pattern in enumerate_patterns(5, 3):
            restricted = restrict(form, pattern)
            for _ in range(100 // len(enumerate_patterns(5, 3)) + 1):
                values = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                               for _ in range(pattern.size))
                self.assertEqual(restricted(*values), evaluate(form, pattern.lift(values, 5)))

    def test_restriction_is_even_and_homogeneous(self):
        restricted = restrict(example_form(4), KPointPattern((2, 1)))
        for exponents, _ in restricted.terms():
            self.assertEqual(sum(exponents), 12)
            self.assertTrue(all(e % 2 == 0 for e in exponents))


class UnivariateTests(SimpleTestCase):
    def test_obviously_nonnegative(self):
        f = poly(Fraction(29, 10), 0, Fraction(12, 5), 0, Fraction(9, 2), 0, 2, 0,
                 Fraction(9, 2), 0, Fraction(12, 5), 0, Fraction(29, 10))
        self.assertTrue(univariate_nonneg(f).nonnegative)

    def test_indefinite_has_witness(self):
        f = dehomogenize(restrict(example_form(4), KPointPattern((3, 1))))
        self.assertLess(f(1), 0)
        result = univariate_nonneg(f)
        self.assertFalse(result.nonnegative)
        self.assertLess(f(result.witness), 0)

    def test_small_cases(self):
        self.assertTrue(univariate_nonneg(poly(1, -2, 1)).nonnegative)
        result = univariate_nonneg(poly(1, 0, 0, 0))
        self.assertFalse(result.nonnegative)
        self.assertLess(poly(1, 0, 0, 0)(result.witness), 0)
        self.assertTrue(univariate_nonneg(UnivariatePoly()).nonnegative)
        self.assertFalse(univariate_nonneg(poly(-1, 0, 0)).nonnegative)

    def test_multiplicities(self):
        # (x^2 - 2)^2 has irrational double roots
        self.assertTrue(univariate_nonneg(poly(1, 0, -4, 0, 4)).nonnegative)
        # x^2 (x - 1)^2
        self.assertTrue(univariate_nonneg(poly(1, -2, 1, 0, 0)).nonnegative)
        for f in (poly(1, 0, -1, 0, -2), poly(1, 0, -2, 0, 0), poly(1, -2, -1, 2, 0),
                  poly(1, -3, 3, -1, 0, 0)):
            result = univariate_nonneg(f)
            self.assertFalse(result.nonnegative, str(f))
            self.assertLess(f(result.witness), 0, str(f))

    def test_agrees_with_sampling(self):
        rng = random.Random(17)
        grid = np.linspace(-4, 4, 10 ** 4)
        for _ in range(60):
            degree = rng.choice((2, 4, 6))
            coefficients = [Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                            for _ in range(degree)] + [Fraction(rng.randint(1, 6))]
            f = UnivariatePoly(tuple(coefficients))
            result = univariate_nonneg(f)
            sampled = np.polyval([float(c) for c in reversed(f.coefficients)], grid)
            if sampled.min() < -1e-9:
                self.assertFalse(result.nonnegative, str(f))
            if not result.nonnegative:
                self.assertLess(f(result.witness), 0, str(f))

    def test_isolation(self):
        # (x^2 - 2)(x - 1)(x + 3)
        f = poly(1, 2, -5, -4, 6)
        intervals = isolate_real_roots(f)
        self.assertEqual(len(intervals), 4)
        for lo, hi in intervals:
            if lo == hi:
                self.assertEqual(f(lo), 0)
            else:
                self.assertLess(f(lo) * f(hi), 0)

    def test_certified_lower_bound(self):
        numerator, denominator = poly(1, 0, -1, 0, 1), poly(1, 0, 0, 0, 1)
        bound = certified_lower_bound(numerator, denominator)
        self.assertLessEqual(bound, Fraction(1, 2))
        self.assertGreater(bound, Fraction(1, 2) - Fraction(1, 10 ** 6))
        self.assertTrue(univariate_nonneg(numerator - denominator.scale(bound)).nonnegative)
        self.assertEqual(certified_lower_bound(poly(1, 0, 2), poly(1, 0, 1)), 1)


class EngineTests(SimpleTestCase):
    def test_nonnegative_in_three_variables(self):
        verdict = decide_nonneg_2point(example_form(3))
        self.assertEqual(verdict.status, NONNEGATIVE)
        self.assertIsNone(verdict.witness)
        self.assertTrue(all(entry.outcome == PASS for entry in verdict.trail))

    def test_not_nonnegative_in_four_variables(self):
        form = example_form(4)
        verdict = decide_nonneg_2point(form)
        self.assertEqual(verdict.status, NOT_NONNEGATIVE)
        self.assertLess(evaluate(form, verdict.witness), 0)
        # all-ones already fails: the value there is -368/5
        self.assertEqual(verdict.failing_pattern.multiplicities, (4,))
        failing = {entry.pattern.multiplicities for entry in verdict.trail if entry.outcome == FAIL}
        self.assertEqual(failing, {(4,), (3, 1), (2, 2)})

    def test_conditions_enforced(self):
        form = PowerSumForm.from_dict(3, 12, {M(2, 6): 2})
        with self.assertRaises(ConditionsNotSatisfied):
            decide_nonneg_2point(form)
        verdict = decide_nonneg_2point(form, override=True)
        self.assertEqual(verdict.status, UNDECIDED)
        self.assertTrue(all(entry.outcome == PASS for entry in verdict.trail))
        self.assertTrue(verdict.notes)

    def test_scaling_invariance(self):
        for n in (3, 4):
            form = example_form(n)
            self.assertEqual(decide_nonneg_2point(form).status,
                             decide_nonneg_2point(form.scale(Fraction(7, 3))).status)

    def test_jobs_do_not_change_the_trail(self):
        form = example_form(4)
        self.assertEqual(decide_nonneg_2point(form, jobs=2).trail,
                         decide_nonneg_2point(form).trail)

    def test_mpoint_agrees_on_one_free_term(self):
        for n in (3, 4):
            two = decide_nonneg_2point(example_form(n))
            m = decide_nonneg_mpoint(example_form(n))
            self.assertEqual(two.status, m.status)
            self.assertEqual(two.witness, m.witness)

    def test_large_m2_power_makes_nonnegative(self):
        # on the sphere every product of power sums lies in [0, 1]
        form = example_form(4) + PowerSumForm.from_dict(4, 12, {M(2, 6): Fraction(11, 10)})
        self.assertEqual(decide_nonneg_mpoint(form).status, NONNEGATIVE)

    def test_three_value_patterns_go_numeric(self):
        form = anchored(6, 8, {M(4, 8): 1, PowerSumTerm.of((6, 4), (2, 4)): 1}, beta=10)
        verdict = decide_nonneg_mpoint(form, restarts=8)
        self.assertEqual(verdict.status, NONNEGATIVE)
        sizes = {entry.pattern.size for entry in verdict.trail}
        self.assertEqual(sizes, {1, 2, 3})
        self.assertTrue(all(entry.method == NUMERIC
                            for entry in verdict.trail if entry.pattern.size == 3))

    def test_timofte_octic_is_exact(self):
        form = PowerSumForm.from_dict(4, 8, {M(8, 1): 1, M(2, 4): Fraction(-1, 10)})
        verdict = timofte_check(form)
        self.assertTrue(all(entry.method == EXACT for entry in verdict.trail))
        self.assertEqual(max(entry.pattern.size for entry in verdict.trail), 2)

    def test_timofte_quartic(self):
        # M4 - M2^2 / 3 is nonnegative in three variables, zero at (1, 1, 1)
        form = PowerSumForm.from_dict(3, 4, {M(4, 1): 1, M(2, 2): Fraction(-1, 3)})
        verdict = timofte_check(form)
        self.assertEqual(verdict.status, NONNEGATIVE)
        self.assertEqual({entry.pattern.size for entry in verdict.trail}, {1})
        form = PowerSumForm.from_dict(3, 4, {M(4, 1): 1, M(2, 2): Fraction(-1, 2)})
        self.assertEqual(timofte_check(form).status, NOT_NONNEGATIVE)

    def test_timofte_agrees_on_dodecic(self):
        self.assertEqual(timofte_check(example_form(3), restarts=16).status, NONNEGATIVE)
        verdict = timofte_check(example_form(4), restarts=16)
        self.assertEqual(verdict.status, NOT_NONNEGATIVE)
        self.assertEqual(verdict.trail[-1].pattern.size, 3)

    def test_timofte_stops_at_exact_failure(self):
        verdict = timofte_check(example_form(4), restarts=4, max_iterations=50,
                                stop_at_failure=True)
        self.assertEqual(verdict.status, NOT_NONNEGATIVE)
        self.assertEqual(max(entry.pattern.size for entry in verdict.trail), 2)
        self.assertTrue(all(entry.method == EXACT for entry in verdict.trail))

    def test_lower_stratum(self):
        self.assertTrue(on_lower_stratum((0.5, 0.5 + 1e-8, 0.2)))
        self.assertTrue(on_lower_stratum((0.5, -0.2, 1e-9)))
        self.assertFalse(on_lower_stratum((0.5, 0.3, 0.2)))


class CommandTests(SimpleTestCase):
    def setUp(self):
        handle, self.path = tempfile.mkstemp(suffix='.txt')
        with os.fdopen(handle, 'w') as stream:
            stream.write(render_form(example_form(4)))

    def tearDown(self):
        os.remove(self.path)

    def test_check_exit_code_and_witness(self):
        from testsets.management.commands.check_form import Command
        command = Command()
        out = StringIO()
        call_command(command, self.path, stdout=out)
        self.assertEqual(command.exit_code, 1)
        self.assertIn('status: not-nonnegative', out.getvalue())
        self.assertIn('(3,1) fail (exact)', out.getvalue())

    def test_check_json_lines(self):
        import ujson
        out = StringIO()
        call_command('check_form', self.path, output_format='json-lines', stdout=out)
        records = [ujson.loads(line) for line in out.getvalue().splitlines()]
        self.assertEqual(records[-1]['status'], NOT_NONNEGATIVE)
        self.assertEqual([r['outcome'] for r in records[:-1]].count(FAIL), 3)

    def test_check_reports_violations(self):
        from testsets.management.commands.check_form import Command
        with open(self.path, 'w') as stream:
            stream.write(render_form(example_form(4, delta=0)))
        command = Command()
        err = StringIO()
        call_command(command, self.path, stdout=StringIO(), stderr=err)
        self.assertEqual(command.exit_code, 2)
        self.assertIn('anchor coefficient zero', err.getvalue())

    def test_restrict(self):
        out = StringIO()
        call_command('restrict', self.path, pattern='3,1', stdout=out)
        self.assertIn('pattern = (3,1)', out.getvalue())
        self.assertIn('441/10 x^12 - 324/5 x^10', out.getvalue())
