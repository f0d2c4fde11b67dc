import random
from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import DegreeMismatch, DimensionMismatch, FormSyntaxError
from symmetric.powersums import (
    Partition, PowerSumForm, PowerSumTerm, enumerate_basis, evaluate, power_sum_value)
from symmetric.textformat import parse_form, render_form

EXAMPLE = """\
n = 3
degree = 12
1 * M4^3
-1/10 * M2^6
1 * M6^2
1 * M6 * M2^3
"""


def example_form(n=3):
    return PowerSumForm.from_dict(n, 12, {
        PowerSumTerm.power(4, 3): 1,
        PowerSumTerm.power(2, 6): Fraction(-1, 10),
        PowerSumTerm.power(6, 2): 1,
        PowerSumTerm.of((6, 1), (2, 3)): 1,
    })


def random_point(rng, n):
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n))


class PowerSumValueTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(power_sum_value(2, (1, 1, 1)), 3)
        self.assertEqual(power_sum_value(4, (0, 0, 0)), 0)
        self.assertEqual(power_sum_value(6, (1, 2)), 65)

    def test_odd_index_rejected(self):
        with self.assertRaises(ValueError):
            power_sum_value(3, (1, 2))


class EvaluateTests(SimpleTestCase):
    def test_square_of_m2(self):
        form = PowerSumForm.from_dict(2, 4, {PowerSumTerm.power(2, 2): 1})
        self.assertEqual(evaluate(form, (1, 1)), 4)

    def test_constant_term_of_example(self):
        self.assertEqual(evaluate(example_form(), (1, 0, 0)), Fraction(29, 10))

    def test_all_ones_in_four_variables(self):
        # every power sum is 4 at (1, 1, 1, 1)
        expected = 4 ** 3 - Fraction(4 ** 6, 10) + 4 ** 2 + 4 * 4 ** 3
        self.assertEqual(evaluate(example_form(4), (1, 1, 1, 1)), expected)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            evaluate(example_form(), (1, 2))

    def test_symmetry_evenness_and_homogeneity(self):
        rng = random.Random(7)
        form = example_form(4)
        for _ in range(50):
            point = random_point(rng, 4)
            value = evaluate(form, point)
            shuffled = list(point)
            rng.shuffle(shuffled)
            self.assertEqual(evaluate(form, shuffled), value)
            flipped = tuple(-x if rng.random() < 0.5 else x for x in point)
            self.assertEqual(evaluate(form, flipped), value)
            t = Fraction(rng.randint(1, 7), rng.randint(1, 7))
            self.assertEqual(evaluate(form, tuple(t * x for x in point)), t ** 12 * value)


class ArithmeticTests(SimpleTestCase):
    def test_cancellation_gives_zero_form(self):
        form = example_form()
        self.assertTrue((form + form.scale(-1)).is_zero())

    def test_doubling(self):
        square = PowerSumForm.from_dict(2, 4, {PowerSumTerm.power(2, 2): 1})
        self.assertEqual(square + square, square.scale(2))
        self.assertEqual((square + square).coefficient(PowerSumTerm.power(2, 2)), 2)

    def test_mismatches(self):
        with self.assertRaises(DimensionMismatch):
            example_form(3) + example_form(4)
        with self.assertRaises(DegreeMismatch):
            example_form() + PowerSumForm.from_dict(3, 8, {PowerSumTerm.power(2, 4): 1})

    def test_pointwise_agreement(self):
        rng = random.Random(11)
        basis = enumerate_basis(3, 12)
        for _ in range(100):
            first = PowerSumForm.from_dict(
                3, 12, {term: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for term in basis})
            second = PowerSumForm.from_dict(
                3, 12, {term: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for term in basis})
            scalar = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
            point = random_point(rng, 3)
            self.assertEqual(evaluate(first + second.scale(scalar), point),
                             evaluate(first, point) + scalar * evaluate(second, point))

    def test_degree_raising(self):
        raised = example_form().multiply_by_power_sum(PowerSumTerm.power(2, 1))
        self.assertEqual(raised.degree, 14)
        point = (1, 2, 3)
        self.assertEqual(evaluate(raised, point), 14 * evaluate(example_form(), point))


class BasisTests(SimpleTestCase):
    def test_dimensions(self):
        self.assertEqual(len(enumerate_basis(3, 12)), 7)
        self.assertEqual(len(enumerate_basis(4, 12)), 9)
        self.assertEqual(enumerate_basis(2, 4),
                         [PowerSumTerm.power(4, 1), PowerSumTerm.power(2, 2)])

    def test_dimension_stabilizes(self):
        for d in (2, 3, 4):
            sizes = {len(enumerate_basis(n, 4 * d)) for n in range(2 * d, 2 * d + 3)}
            self.assertEqual(len(sizes), 1)

    def test_terms_have_the_degree(self):
        for term in enumerate_basis(5, 16):
            self.assertEqual(term.degree, 16)
            self.assertTrue(all(j <= 10 for j in term.indices))


class PartitionTests(SimpleTestCase):
    def test_invariants(self):
        self.assertEqual(Partition((3, 2, 1)).weight, 6)
        with self.assertRaises(ValueError):
            Partition((1, 2))
        self.assertEqual(Partition.from_parts((0, 2, 3, 0)), Partition((3, 2)))

    def test_dominance(self):
        self.assertTrue(Partition((2, 1)).dominates(Partition((1, 1, 1))))
        self.assertFalse(Partition((1, 1, 1)).dominates(Partition((2, 1))))


class TextFormatTests(SimpleTestCase):
    def test_parse_example(self):
        self.assertEqual(parse_form(EXAMPLE), example_form())

    def test_exact_coefficient(self):
        form = parse_form('n = 3\n-1/10 * M2^6\n')
        self.assertEqual(form.coefficient(PowerSumTerm.power(2, 6)), Fraction(-1, 10))
        self.assertEqual(form.degree, 12)

    def test_render_is_canonical(self):
        self.assertEqual(render_form(parse_form(EXAMPLE)), render_form(example_form()))
        self.assertEqual(parse_form(render_form(example_form())), example_form())

    def test_round_trip_on_basis(self):
        for term in enumerate_basis(4, 12):
            form = PowerSumForm.from_dict(4, 12, {term: Fraction(-3, 7)})
            self.assertEqual(parse_form(render_form(form)), form)

    def test_odd_exponent(self):
        with self.assertRaises(FormSyntaxError) as raised:
            parse_form('n = 3\n1 * M3^4\n')
        self.assertEqual(raised.exception.line, 2)
        self.assertIn('odd exponent', str(raised.exception))

    def test_degree_inconsistency(self):
        with self.assertRaises(FormSyntaxError):
            parse_form('n = 3\ndegree = 12\n1 * M4^2\n')

    def test_syntax_error_position(self):
        with self.assertRaises(FormSyntaxError) as raised:
            parse_form('n = 3\n1 * M4^3 + M2\n')
        self.assertEqual((raised.exception.line, raised.exception.column), (2, 10))

    def test_zero_denominator(self):
        with self.assertRaises(FormSyntaxError) as raised:
            parse_form('n = 3\n1/0 * M2^2\n')
        self.assertEqual((raised.exception.line, raised.exception.column), (2, 1))
        self.assertIn('zero denominator', str(raised.exception))
