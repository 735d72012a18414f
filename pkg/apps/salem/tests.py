# apps/salem/tests.py

import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.cyclotomic.polynomials import phi_m
from apps.exact_poly.arithmetic import inverse_trace_poly
from apps.exact_poly.exceptions import NotSymmetric
from apps.exact_poly.models import X, X_MINUS_ONE, X_PLUS_ONE, IntPoly

from . import catalog
from .certify import certify_salem, power_min_poly, salem_value, split_trace_roots
from .decomposition import decompose_symmetric
from .exceptions import NotSalem
from .families import (
    b_family_hypothesis, b_family_polynomial, gm10_polynomial, sa_polynomial, sa_trace_poly, smyth18_polynomial,
)
from .models import NotSalemReason

CATALOG = [
    catalog.LEHMER, catalog.THIRD_SMALLEST, catalog.LAMBDA16, catalog.LAMBDA18, catalog.SECOND_SMALLEST_18,
    catalog.DEGREE18_SEVEN_MINUS, catalog.LAMBDA20, catalog.DEGREE20_ODD_VALUES, catalog.S3, catalog.SMYTH18,
]


def assert_close(test, interval, expected, tolerance):
    test.assertLess(abs(interval.midpoint - Fraction(expected)), Fraction(tolerance))


class CertifySalemTests(SimpleTestCase):

    def test_lehmer(self):
        cert = certify_salem(catalog.LEHMER)
        self.assertEqual(cert.degree, 10)
        self.assertEqual(cert.root_counts, (4, 1))
        self.assertEqual((cert.s_at_1, cert.s_at_minus1), (-1, 1))
        self.assertLessEqual(cert.alpha_interval.width, Fraction(1, 10 ** 9))
        assert_close(self, cert.alpha_interval, '1.17628081826', '0.000000001')

    def test_smyth18(self):
        cert = certify_salem(smyth18_polynomial(3))
        self.assertEqual(cert.degree, 18)
        assert_close(self, salem_value(cert, 30), '2.6185755', '0.000001')

    def test_catalog_is_salem(self):
        for S in CATALOG:
            with self.subTest(S=str(S)):
                cert = certify_salem(S)
                self.assertEqual(cert.root_counts, (S.degree // 2 - 1, 1))
                self.assertLess(cert.s_at_1, 0)
                self.assertGreater(cert.s_at_minus1, 0)
                if abs(cert.s_at_1 * cert.s_at_minus1) == 1:
                    self.assertEqual(cert.degree // 2 % 2, 1)

    def test_rejections(self):
        cases = [
            (phi_m(5), NotSalemReason.ROOT_COUNT_MISMATCH),
            (2 * X ** 4 + 1, NotSalemReason.NOT_MONIC),
            (X ** 2 - 3 * X + 1, NotSalemReason.DEGREE_TOO_SMALL),
            (X ** 4 + X ** 3 + 1, NotSalemReason.NOT_SYMMETRIC),
            (catalog.S3 * phi_m(3), NotSalemReason.REDUCIBLE),
            (X_MINUS_ONE ** 2 * catalog.S3, NotSalemReason.REDUCIBLE),
            (X ** 5 + 1, NotSalemReason.REDUCIBLE),
        ]
        for poly, reason in cases:
            with self.subTest(poly=str(poly)):
                with self.assertRaises(NotSalem) as raised:
                    certify_salem(poly)
                self.assertEqual(raised.exception.reason, reason)

    def test_unit_circle_pairs_are_ordered(self):
        cert = certify_salem(catalog.LEHMER)
        intervals = split_trace_roots(cert)
        self.assertEqual(len(intervals), 4)
        for upper, lower in zip(intervals, intervals[1:]):
            self.assertLessEqual(lower.hi, upper.lo)


class SalemValueTests(SimpleTestCase):

    def test_known_values(self):
        cases = [
            (catalog.LAMBDA20, '1.2326135486'),
            (catalog.LAMBDA16, '1.2363179318'),
            (catalog.DEGREE18_SEVEN_MINUS, '1.2527759374'),
        ]
        for S, expected in cases:
            with self.subTest(expected=expected):
                interval = salem_value(certify_salem(S), 44)
                self.assertLessEqual(interval.width, Fraction(1, 2 ** 44))
                assert_close(self, interval, expected, '0.000000001')

    def test_decimal_rendering(self):
        interval = salem_value(certify_salem(catalog.LAMBDA16), 44)
        self.assertEqual(interval.to_decimal_string(10)[:11], '1.236317931')


class PowerTests(SimpleTestCase):

    def test_first_power(self):
        cert = certify_salem(catalog.LEHMER)
        self.assertEqual(power_min_poly(cert, 1), catalog.LEHMER)

    def test_powers_of_lambda18(self):
        cert = certify_salem(catalog.LAMBDA18)
        base = salem_value(cert, 40)
        for k in (2, 3):
            with self.subTest(k=k):
                T = power_min_poly(cert, k)
                self.assertEqual(T.degree, 18)
                power = salem_value(certify_salem(T), 40)
                self.assertLessEqual(power.lo, base.hi ** k)
                self.assertGreaterEqual(power.hi, base.lo ** k)

    def test_square_of_s3(self):
        cert = certify_salem(catalog.S3)
        T = power_min_poly(cert, 2)
        # roots of the square are the squares of the roots
        self.assertEqual(T, IntPoly.from_descending([1, -11, 29, -39, 29, -11, 1]))

    def test_square_satisfies_graeffe_identity(self):
        for S in (catalog.LEHMER, catalog.LAMBDA18):
            with self.subTest(S=str(S)):
                T = power_min_poly(certify_salem(S), 2)
                spread = IntPoly(coeff for t in T.coeffs for coeff in (t, 0))
                mirrored = IntPoly(c * (-1) ** i for i, c in enumerate(S.coeffs))
                self.assertEqual(spread, S * mirrored)


class DecompositionTests(SimpleTestCase):

    def test_salem_times_cyclotomic(self):
        F = catalog.S3 * phi_m(10) ** 2 * X_MINUS_ONE ** 8
        decomposition = decompose_symmetric(F)
        self.assertEqual((decomposition.n_plus, decomposition.n_minus), (8, 0))
        self.assertEqual(set(decomposition.type1), {(catalog.S3, 1), (phi_m(10), 2)})
        self.assertEqual(decomposition.type2, ())
        self.assertEqual(decomposition.expand(), F)
        self.assertEqual(decomposition.nodes[0], X_MINUS_ONE)

    def test_linear_only(self):
        decomposition = decompose_symmetric(X_MINUS_ONE ** 2)
        self.assertEqual((decomposition.n_plus, decomposition.n_minus, decomposition.type1), (2, 0, ()))

    def test_x4_minus_1(self):
        decomposition = decompose_symmetric(X ** 4 - 1)
        self.assertEqual((decomposition.n_plus, decomposition.n_minus), (1, 1))
        self.assertEqual(decomposition.type1, ((X ** 2 + 1, 1),))

    def test_type2_pairs(self):
        g = X ** 2 + X - 1
        F = g * IntPoly.from_descending([1, -1, -1]) * X_PLUS_ONE ** 2
        decomposition = decompose_symmetric(F)
        self.assertEqual(len(decomposition.type2), 1)
        self.assertEqual(decomposition.n_minus, 2)
        self.assertEqual(decomposition.expand(), F)

    def test_rejects_non_symmetric(self):
        with self.assertRaises(NotSymmetric):
            decompose_symmetric(X ** 4 + X ** 3 + 1)
        with self.assertRaises(NotSymmetric):
            decompose_symmetric(2 * X ** 2 + 2)

    def test_random_reconstruction(self):
        rng = random.Random(13)
        for _ in range(20):
            F = X_MINUS_ONE ** rng.randint(0, 3) * X_PLUS_ONE ** rng.randint(0, 3)
            for _ in range(rng.randint(1, 3)):
                F = F * phi_m(rng.choice([3, 4, 5, 8, 10, 12])) ** rng.randint(1, 2)
            if rng.random() < 0.5:
                F = F * catalog.S3
            self.assertEqual(decompose_symmetric(F).expand(), F)


class FamilyTests(SimpleTestCase):

    def test_sa_family(self):
        self.assertEqual(sa_polynomial(3), catalog.S3)
        for a in range(-5, 10):
            self.assertEqual(inverse_trace_poly(sa_trace_poly(a)), sa_polynomial(a))

    def test_gm10_contains_lehmer(self):
        self.assertEqual(gm10_polynomial(1), catalog.LEHMER)
        for a in range(1, 6):
            self.assertEqual(certify_salem(gm10_polynomial(a)).degree, 10)

    def test_b_family_under_hypothesis(self):
        for a, b, c in [(-3, 1, 0), (-5, 2, 1), (-4, -1, 2)]:
            self.assertTrue(b_family_hypothesis(a, b, c))
            self.assertEqual(certify_salem(b_family_polynomial(a, b, c)).degree, 10)


class CongruenceTests(SimpleTestCase):

    def test_values_mod_4(self):
        rng = random.Random(31)
        for _ in range(200):
            n = rng.randint(1, 8)
            R = IntPoly([rng.randint(-9, 9) for _ in range(n)] + [1])
            F = inverse_trace_poly(R)
            if n % 2 == 0:
                self.assertEqual((F(1) - F(-1)) % 4, 0)
            else:
                self.assertEqual((F(1) + F(-1)) % 4, 0)
