import os
import random
import tempfile
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import DimensionMismatch, ParameterError, ZeroMinorError
from jacobian.analysis import (
    SYMBOLIC, factor_columns, kernel_form, minor_factorization, phi_map_rank,
    phi_minor_factorization, verify_at_points)
from jacobian.matrices import (
    JacobianSpec, bareiss_rank, column_parts, determinant, fourth_column_span, in_kernel,
    jacobian_at, kernel_coefficients, rank_at)
from symmetric.powersums import Partition, PowerSumForm, PowerSumTerm, evaluate
from symmetric.textformat import render_form

M = PowerSumTerm.power
MIXED = PowerSumTerm.of((6, 1), (2, 3))


def example_form(n):
    return PowerSumForm.from_dict(n, 12, {
        M(4, 3): 1, M(2, 6): Fraction(-1, 10), M(6, 2): 1, MIXED: 1})


def one_free_term_spec(free, n, d):
    return JacobianSpec((free, M(2, 2 * d), M(2 * d, 2), PowerSumTerm.of((2 * d, 1), (2, d))),
                        n, 4 * d)


def two_point(rng, n):
    a, b = rng.sample(range(1, 20), 2)
    return (a,) * (n - 1) + (b,)


def distinct_point(rng, n):
    return tuple(rng.sample(range(1, 30), 3)) + (0,) * (n - 3)


class LinearAlgebraTests(SimpleTestCase):
    def test_rank(self):
        self.assertEqual(bareiss_rank([[1, 2], [2, 4]]), 1)
        self.assertEqual(bareiss_rank([[Fraction(1, 2), 1], [1, 3]]), 2)
        self.assertEqual(bareiss_rank([[0, 0, 0], [0, 0, 0]]), 0)
        self.assertEqual(bareiss_rank([[0, 1, 2], [0, 2, 4], [1, 0, 0]]), 2)

    def test_determinant(self):
        self.assertEqual(determinant([[1, 2], [3, 4]]), -2)
        self.assertEqual(determinant([[0, 1], [1, 0]]), -1)
        self.assertEqual(determinant([[Fraction(1, 2), 0], [0, 4]]), 2)
        with self.assertRaises(DimensionMismatch):
            determinant([[1, 2]])


class JacobianTests(SimpleTestCase):
    def setUp(self):
        self.spec = JacobianSpec.for_form(example_form(4))

    def test_columns(self):
        self.assertEqual(self.spec.generators, (M(4, 3), M(2, 6), M(6, 2), MIXED))
        self.assertEqual(column_parts(MIXED),
                         [(6, M(2, 3), 6), (6, PowerSumTerm.of((6, 1), (2, 2)), 2)])

    def test_m2_column(self):
        y = (1, 2, 3, 0)
        m2 = 14
        for row, x in zip(jacobian_at(self.spec, y), y):
            self.assertEqual(row[1], 12 * x * m2 ** 5)

    def test_zero_point(self):
        matrix = jacobian_at(self.spec, (0, 0, 0, 0))
        self.assertTrue(all(entry == 0 for row in matrix for entry in row))
        self.assertEqual(rank_at(self.spec, (0, 0, 0, 0)), 0)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            jacobian_at(self.spec, (1, 2, 3))

    def test_ranks(self):
        self.assertEqual(rank_at(self.spec, (1, 2, 3, 0)), 3)
        self.assertEqual(rank_at(self.spec, (1, 1, 1, 2)), 2)
        self.assertEqual(rank_at(self.spec, (1, 1, 1, 1)), 1)
        self.assertEqual(rank_at(self.spec, (1, 2, 3, 0), drop_mixed=True), 3)

    def test_rank_drops_exactly_at_two_points(self):
        rng = random.Random(7)
        for d, free in ((3, M(4, 3)), (4, M(4, 4))):
            spec = one_free_term_spec(free, 4, d)
            for _ in range(100):
                self.assertLess(rank_at(spec, two_point(rng, 4)), 3)
                self.assertEqual(rank_at(spec, distinct_point(rng, 4)), 3)

    def test_two_free_terms(self):
        spec = JacobianSpec((M(4, 4), PowerSumTerm.of((6, 2), (2, 2)), M(2, 8), M(8, 2),
                             PowerSumTerm.of((8, 1), (2, 4))), 5, 16)
        self.assertEqual(rank_at(spec, (1, 2, 3, 4, 0)), 4)
        self.assertEqual(rank_at(spec, (1, 2, 3, 3, 0)), 3)
        self.assertLess(rank_at(spec, (1, 2, 2, 3, 3)), 4)

    def test_mixed_column_in_span(self):
        rng = random.Random(3)
        for _ in range(20):
            y = tuple(Fraction(rng.randint(0, 9), rng.randint(1, 4)) for _ in range(4))
            if not any(y):
                continue
            c2, c3 = fourth_column_span(self.spec, y)
            for row in jacobian_at(self.spec, y):
                self.assertEqual(row[3], c2 * row[1] + c3 * row[2])

    def test_kernel_coefficients(self):
        rng = random.Random(5)
        for _ in range(20):
            y = distinct_point(rng, 4)
            self.assertEqual(rank_at(self.spec, y), 3)
            self.assertTrue(in_kernel(self.spec, y, kernel_coefficients(self.spec, y)))
        self.assertFalse(in_kernel(self.spec, (1, 2, 3, 0), (1, 0, 0, 0)))


class MinorTests(SimpleTestCase):
    def test_one_free_term(self):
        factorization = minor_factorization(JacobianSpec.for_form(example_form(3)))
        self.assertEqual(factorization.size, 3)
        self.assertEqual(factorization.schur_index, Partition((3, 2, 1)))
        self.assertEqual(factorization.sign, 1)
        self.assertEqual(factorization.constant, 12 ** 3)
        self.assertEqual(factorization.prefactor, PowerSumTerm.of((6, 1), (4, 2), (2, 5)))
        self.assertEqual(factorization.verified, SYMBOLIC)

    def test_index_rule(self):
        for d in (3, 4):
            for j in range(4, 2 * d + 3, 2):
                if j == 2 * d:
                    continue
                free = PowerSumTerm.of((j, 1), (2, (4 * d - j) // 2))
                factorization = minor_factorization(one_free_term_spec(free, 3, d))
                if j < 2 * d:
                    self.assertEqual(factorization.schur_index,
                                     Partition((2 * d - 3, j - 2, 1)))
                    self.assertEqual(factorization.sign, 1)
                else:
                    self.assertEqual(factorization.schur_index,
                                     Partition((j - 3, 2 * d - 2, 1)))
                    self.assertEqual(factorization.sign, -1)
                self.assertEqual(factorization.verified, SYMBOLIC)

    def test_two_part_free_term(self):
        spec = JacobianSpec((PowerSumTerm.of((8, 1), (4, 1)), M(2, 6), M(6, 2)), 3, 12)
        factorization = minor_factorization(spec)
        indices = {summand.exponents: summand.schur_index for summand in factorization.summands}
        self.assertEqual(indices[(7, 1, 5)], Partition((5, 4, 1)))
        self.assertEqual(indices[(3, 1, 5)], Partition((3, 2, 1)))
        self.assertEqual(factorization.sign, 0)
        self.assertIsNone(factorization.schur_index)

    def test_summands_share_one_sign(self):
        free = PowerSumTerm.of((6, 1), (4, 1), (2, 3))
        spec = JacobianSpec((free, M(2, 8), M(8, 2)), 3, 16)
        factorization = minor_factorization(spec)
        indices = {summand.exponents: summand.schur_index for summand in factorization.summands}
        self.assertEqual(indices[(5, 1, 7)], Partition((5, 4, 1)))
        self.assertEqual(indices[(3, 1, 7)], Partition((5, 2, 1)))
        self.assertEqual({summand.sign for summand in factorization.summands}, {1})
        self.assertEqual(factorization.sign, 1)
        self.assertEqual(factorization.verified, SYMBOLIC)

    def test_repeated_exponent_is_zero(self):
        spec = JacobianSpec((M(6, 2), M(2, 6), M(6, 2)), 3, 12)
        with self.assertRaises(ZeroMinorError):
            minor_factorization(spec)

    def test_size(self):
        spec = JacobianSpec.for_form(example_form(3))
        self.assertEqual(minor_factorization(spec, 2).schur_index, Partition((2, 1)))
        with self.assertRaises(ParameterError):
            minor_factorization(spec, 4)
        with self.assertRaises(ParameterError):
            minor_factorization(JacobianSpec.for_form(example_form(2)), 3)

    def test_random_points(self):
        columns = [column_parts(term) for term in (M(4, 3), M(2, 6), M(6, 2))]
        constant, prefactor, summands = factor_columns(columns)
        self.assertTrue(verify_at_points(columns, constant, prefactor, summands, 4, seed=1))
        self.assertFalse(verify_at_points(columns, -constant, prefactor, summands, 4, seed=1))


class KernelFormTests(SimpleTestCase):
    def test_unit_vector(self):
        kernel = kernel_form((1, 0, 0, 0), 3, 4)
        self.assertEqual(kernel.form.as_dict(), {M(6, 2): 1, MIXED: -2, M(2, 6): 1})
        for i in range(4):
            point = tuple(int(i == k) for k in range(4))
            self.assertEqual(evaluate(kernel.form, point), 0)

    def test_vanishes_at_base_point(self):
        rng = random.Random(11)
        for _ in range(20):
            y = tuple(Fraction(rng.randint(0, 9), rng.randint(1, 3)) for _ in range(4))
            if not any(y):
                continue
            self.assertEqual(evaluate(kernel_form(y, 3, 4).form, y), 0)

    def test_perfect_square(self):
        rng = random.Random(13)
        kernel = kernel_form((1, 2, 3, 0), 3, 4)
        for _ in range(100):
            x = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(4))
            self.assertGreaterEqual(evaluate(kernel.form, x), 0)

    def test_invalid(self):
        with self.assertRaises(ParameterError):
            kernel_form((0, 0, 0), 3, 3)
        with self.assertRaises(ParameterError):
            kernel_form((1, 0, 0), 1, 3)


class PhiTests(SimpleTestCase):
    def test_rank(self):
        self.assertEqual(phi_map_rank((1, 2, 3), 3, 3), 3)
        self.assertEqual(phi_map_rank((2, 2, 2, 5), 3, 4), 2)
        self.assertEqual(phi_map_rank((1, 1, 1), 4, 3), 1)
        with self.assertRaises(ParameterError):
            phi_map_rank((1, 2, 3), 2, 3)
        with self.assertRaises(DimensionMismatch):
            phi_map_rank((1, 2, 3), 3, 4)

    def test_two_points_are_boundary(self):
        rng = random.Random(17)
        for _ in range(50):
            self.assertLess(phi_map_rank(two_point(rng, 5), 4, 5), 3)
            self.assertEqual(phi_map_rank(distinct_point(rng, 5), 4, 5), 3)

    def test_minor_factorization(self):
        factorization = phi_minor_factorization(3)
        self.assertEqual(factorization.schur_index, Partition((3, 2, 1)))
        self.assertEqual(factorization.alternant_index, Partition((4, 3, 2)))
        self.assertEqual(factorization.sign, -1)
        self.assertEqual(factorization.constant, 2 * 4 * 6)
        self.assertEqual(factorization.verified, SYMBOLIC)


class CommandTests(SimpleTestCase):
    def setUp(self):
        handle, self.path = tempfile.mkstemp(suffix='.txt')
        with os.fdopen(handle, 'w') as stream:
            stream.write(render_form(example_form(4)))

    def tearDown(self):
        os.remove(self.path)

    def test_jacobian_rank(self):
        out = StringIO()
        call_command('jacobian_rank', self.path, point='1,2,3,0', stdout=out)
        self.assertIn('rank: 3', out.getvalue())
        self.assertIn('kernel form in the kernel: yes', out.getvalue())

    def test_jacobian_rank_at_two_point(self):
        out = StringIO()
        call_command('jacobian_rank', self.path, point='1,1,1,2', output_format='csv',
                     stdout=out)
        self.assertEqual(out.getvalue().splitlines()[1], '"1,1,1,2",4,2')

    def test_point_length(self):
        with self.assertRaises(CommandError):
            call_command('jacobian_rank', self.path, point='1,2,3', stdout=StringIO())

    def test_minor_factor(self):
        out = StringIO()
        call_command('minor_factor', self.path, stdout=out)
        self.assertIn('schur index: (3,2,1)', out.getvalue())
        self.assertIn('verified: symbolic', out.getvalue())
