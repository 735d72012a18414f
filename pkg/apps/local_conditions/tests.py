# apps/local_conditions/tests.py

import random

from django.test import SimpleTestCase

from apps.cyclotomic.polynomials import phi_m
from apps.exact_poly.arithmetic import product, reciprocal_star
from apps.exact_poly.exceptions import NotSymmetric
from apps.exact_poly.models import X, X_MINUS_ONE, X_PLUS_ONE
from apps.salem import catalog
from apps.salem.decomposition import decompose_symmetric

from .conditions import (
    check_c0, check_c1, in_unit_disc_classes, is_padic_square, local_conditions_hold, local_even_unimodular_exists,
    relevant_primes, two_adic_class,
)
from .exceptions import OddDegree, ZeroInput
from .models import TwoAdicClass

SYMMETRIC_IRREDUCIBLES = (
    [phi_m(m) for m in (3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18)]
    + [X ** 2 + b * X + 1 for b in (3, 4, 5, 6, 7, -3, -4, -5, -6)]
    + [catalog.S3]
)
NON_SYMMETRIC = [X ** 2 + X - 1, X ** 2 + 2 * X - 1, X ** 3 + X - 1]


def random_symmetric(rng, max_degree=16):
    n_plus = rng.choice((0, 0, 2))
    n_minus = rng.choice((0, 0, 2))
    parts = [X_MINUS_ONE] * n_plus + [X_PLUS_ONE] * n_minus
    degree = n_plus + n_minus
    for _ in range(rng.randint(1, 3)):
        f = rng.choice(SYMMETRIC_IRREDUCIBLES)
        if degree + f.degree <= max_degree:
            parts.append(f)
            degree += f.degree
    if rng.random() < 0.3:
        g = rng.choice(NON_SYMMETRIC)
        if degree + 2 * g.degree <= max_degree:
            parts.append(g * reciprocal_star(g))
    return product(parts)


class ConditionC0Tests(SimpleTestCase):

    def test_examples(self):
        F = catalog.S3 * phi_m(10) ** 2 * X_MINUS_ONE ** 8
        self.assertTrue(check_c0(F, 3, 19))
        self.assertTrue(check_c0(catalog.LEHMER, 1, 9))
        self.assertFalse(check_c0(catalog.LEHMER, 3, 7))
        self.assertFalse(check_c0(catalog.LEHMER, 1, 8))
        self.assertFalse(check_c0(X_MINUS_ONE * catalog.S3 * X_PLUS_ONE, 0, 8))


class ConditionC1Tests(SimpleTestCase):

    def test_lambda20_fails(self):
        report = check_c1(catalog.LAMBDA20)
        self.assertEqual((report.f1_at_1, report.f1_at_minus1), (-1, 11))
        self.assertEqual(report.abs_squares, (True, False))
        self.assertFalse(report.holds)

    def test_lehmer_holds(self):
        self.assertTrue(check_c1(catalog.LEHMER).holds)

    def test_phi12_holds(self):
        self.assertTrue(check_c1(phi_m(12)).holds)

    def test_zero_values_count_as_squares(self):
        self.assertTrue(check_c1(X_MINUS_ONE ** 2 * X_PLUS_ONE ** 2).holds)

    def test_odd_degree(self):
        with self.assertRaises(OddDegree):
            check_c1(X ** 3 + 1)


class TwoAdicTests(SimpleTestCase):

    def test_classes(self):
        self.assertEqual(two_adic_class(1), TwoAdicClass(0, 1))
        self.assertTrue(in_unit_disc_classes(two_adic_class(1)))
        self.assertEqual(two_adic_class(-3), TwoAdicClass(0, 5))
        self.assertTrue(in_unit_disc_classes(two_adic_class(-3)))
        self.assertEqual(two_adic_class(12), TwoAdicClass(2, 3))
        self.assertFalse(in_unit_disc_classes(two_adic_class(12)))
        self.assertEqual(two_adic_class(-40), TwoAdicClass(3, 3))
        self.assertFalse(in_unit_disc_classes(two_adic_class(-1)))

    def test_zero(self):
        with self.assertRaises(ZeroInput):
            two_adic_class(0)


class PadicSquareTests(SimpleTestCase):

    def test_squares(self):
        self.assertTrue(is_padic_square(17, 2))
        self.assertFalse(is_padic_square(-1, 2))
        self.assertFalse(is_padic_square(5, 2))
        self.assertTrue(is_padic_square(-7, 2))
        self.assertTrue(is_padic_square(-1, 5))
        self.assertFalse(is_padic_square(-1, 3))
        self.assertFalse(is_padic_square(-11, 11))
        self.assertTrue(is_padic_square(9 * 4, 3))

    def test_zero(self):
        with self.assertRaises(ZeroInput):
            is_padic_square(0, 3)


class LocalExistenceTests(SimpleTestCase):

    def test_examples(self):
        for p in (2, 3, 5, 7):
            self.assertTrue(local_even_unimodular_exists(phi_m(12), p))
        self.assertFalse(local_even_unimodular_exists(phi_m(3), 3))
        self.assertTrue(local_even_unimodular_exists(phi_m(3) * X_MINUS_ONE ** 2, 3))

    def test_requires_symmetric(self):
        with self.assertRaises(NotSymmetric):
            local_even_unimodular_exists(X ** 4 + X ** 3 + 1, 2)

    def test_type2_factors_are_ignored(self):
        g = X ** 2 + X - 1
        pair = g * reciprocal_star(g)
        self.assertTrue(local_even_unimodular_exists(phi_m(12) * pair, 2))
        self.assertTrue(local_even_unimodular_exists(phi_m(12) * pair, 5))

    def test_local_global_equivalence(self):
        rng = random.Random(41)
        for _ in range(500):
            F = random_symmetric(rng)
            self.assertEqual(F.constant_term, 1)
            decomposition = decompose_symmetric(F)
            everywhere = all(local_conditions_hold(decomposition, p) for p in relevant_primes(decomposition))
            self.assertEqual(check_c1(F).holds, everywhere, str(F))
