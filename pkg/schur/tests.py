import random
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import KostkaWeightMismatch, NonPositiveCoordinate
from schur.polynomials import (
    MonomialSymmetric, positivity_on_positive_orthant, schur_by_determinant, schur_by_kostka)
from schur.tableaux import iter_semistandard_tableaux, kostka
from symmetric.powersums import Partition, partitions


class KostkaTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(kostka((2, 1), (2, 1)), 1)
        self.assertEqual(kostka((2, 1), (1, 1, 1)), 2)
        self.assertEqual(kostka((1, 1, 1), (2, 1)), 0)

    def test_weight_mismatch(self):
        with self.assertRaises(KostkaWeightMismatch):
            kostka((2, 1), (2, 2))

    def test_tableaux_are_semistandard(self):
        tableaux = list(iter_semistandard_tableaux((3, 2), (2, 2, 1)))
        self.assertEqual(len(tableaux), kostka((3, 2), (2, 2, 1)))
        for tableau in tableaux:
            for row in tableau:
                self.assertEqual(list(row), sorted(row))
            for upper, lower in zip(tableau, tableau[1:]):
                self.assertTrue(all(a < b for a, b in zip(upper, lower)))

    def test_nonzero_only_under_dominance(self):
        for weight in range(1, 7):
            for shape in partitions(weight):
                for content in partitions(weight):
                    value = kostka(shape, content)
                    self.assertGreaterEqual(value, 0)
                    if not shape.dominates(content):
                        self.assertEqual(value, 0)
                    if shape == content:
                        self.assertEqual(value, 1)


class SchurTests(SimpleTestCase):
    def test_kostka_expansions(self):
        self.assertEqual(schur_by_kostka((1, 1), 2).expansion, {Partition((1, 1)): 1})
        self.assertEqual(schur_by_kostka((2, 1), 3).expansion,
                         {Partition((2, 1)): 1, Partition((1, 1, 1)): 2})
        self.assertEqual(schur_by_kostka((2, 0), 2).expansion,
                         {Partition((2,)): 1, Partition((1, 1)): 1})

    def test_determinant_expansions(self):
        self.assertEqual(schur_by_determinant((1, 1), 2).expansion, {Partition((1, 1)): 1})
        self.assertEqual(schur_by_determinant((2, 1), 3), schur_by_kostka((2, 1), 3))

    def test_minor_index_for_degree_twelve(self):
        # (2d - 3, j - 2, 1) for d = 3, j = 4
        by_determinant = schur_by_determinant((3, 2, 1), 3)
        self.assertEqual(by_determinant, schur_by_kostka((3, 2, 1), 3))
        self.assertEqual(by_determinant.expansion[Partition((3, 2, 1))], 1)
        self.assertEqual(by_determinant.expansion[Partition((2, 2, 2))], 2)

    def test_both_constructions_agree(self):
        for weight in range(0, 11):
            for index in partitions(weight, max_length=4):
                for l in range(max(1, len(index)), 5):
                    with self.subTest(index=str(index), l=l):
                        self.assertEqual(schur_by_determinant(index, l),
                                         schur_by_kostka(index, l))

    def test_value_at_ones_counts_tableaux(self):
        for index, l in (((2, 1), 3), ((3, 1), 2), ((2, 2, 1), 4)):
            schur = schur_by_kostka(index, l)
            total = sum(coefficient * len(MonomialSymmetric(partition, l).exponents())
                        for partition, coefficient in schur.expansion.items())
            self.assertEqual(schur.evaluate((1,) * l), total)

    def test_as_expression(self):
        import sympy
        x1, x2 = sympy.symbols('x1:3')
        self.assertEqual(schur_by_kostka((2,), 2).as_expression(),
                         sympy.expand(x1 ** 2 + x1 * x2 + x2 ** 2))


class PositivityTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(positivity_on_positive_orthant(schur_by_kostka((1, 1), 2), (1, 1)), 1)
        self.assertEqual(positivity_on_positive_orthant(schur_by_kostka((2, 1), 3), (1, 1, 1)), 8)
        self.assertEqual(positivity_on_positive_orthant(schur_by_kostka((2, 0), 2), (2, 3)), 19)

    def test_rejects_nonpositive(self):
        with self.assertRaises(NonPositiveCoordinate):
            positivity_on_positive_orthant(schur_by_kostka((1, 1), 2), (0, 1))

    def test_strictly_positive(self):
        rng = random.Random(3)
        for _ in range(30):
            l = rng.randint(1, 4)
            index = Partition.from_parts(rng.randint(0, 4) for _ in range(l))
            point = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(l))
            self.assertGreater(positivity_on_positive_orthant(schur_by_kostka(index, l), point), 0)


class CommandTests(SimpleTestCase):
    def test_schur_command(self):
        out = StringIO()
        call_command('schur', '2,1', variables=3, stdout=out)
        self.assertIn('(2,1): 1', out.getvalue())
        self.assertIn('(1,1,1): 2', out.getvalue())

    def test_schur_command_csv(self):
        out = StringIO()
        call_command('schur', '2,1', variables=3, method='determinant',
                     output_format='csv', stdout=out)
        self.assertEqual(out.getvalue().splitlines(),
                         ['partition,coefficient', '"(2,1)",1', '"(1,1,1)",2'])

    def test_kostka_command(self):
        out = StringIO()
        call_command('kostka', '2,1', '1,1,1', stdout=out)
        self.assertIn('(1,1,1): 2', out.getvalue())

    def test_invalid_options(self):
        with self.assertRaises(CommandError):
            call_command('kostka', '2,1', '2,2', stdout=StringIO())
        with self.assertRaises(CommandError):
            call_command('schur', '1,2', variables=3, stdout=StringIO())
