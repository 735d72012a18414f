# apps/modp/tests.py

import random

from django.test import SimpleTestCase
from sympy import n_order, primerange

from apps.cyclotomic.polynomials import phi_m
from apps.exact_poly.models import IntPoly

from .exceptions import ModularZeroConstantTerm, NotAPrime
from .galois import gf_is_irreducible, gf_mul, gf_reduce
from .models import ModPoly
from .operations import common_factors_mod_p, factor_mod_p, is_symmetric_mod_p, reduce_mod_p

LEHMER = IntPoly.from_descending([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
LAMBDA18 = IntPoly.from_descending([1, -1, 1, -1, 0, 0, -1, 1, -1, 1, -1, 1, -1, 0, 0, -1, 1, -1, 1])
SECOND_SMALLEST_18 = IntPoly.from_descending([1, -1] + [0] * 6 + [-1, 1, -1] + [0] * 6 + [-1, 1])
S3 = IntPoly.from_descending([1, -3, -1, 5, -1, -3, 1])


def mod_poly(p, *descending):
    return ModPoly.reduce(tuple(reversed(descending)), p)


def reconstruct(factorization):
    p = factorization.p
    result = [factorization.unit]
    for factor in factorization.factors:
        for _ in range(factor.multiplicity):
            result = gf_mul(result, list(factor.poly.coeffs), p)
    return gf_reduce(result, p)


class ReductionTests(SimpleTestCase):

    def test_reduce_mod_p(self):
        self.assertEqual(reduce_mod_p(phi_m(12), 13), mod_poly(13, 1, 0, 12, 0, 1))
        self.assertTrue(all(c in (0, 1) for c in reduce_mod_p(LEHMER, 2).coeffs))
        self.assertEqual(reduce_mod_p(S3, 11), mod_poly(11, 1, 8, 10, 5, 10, 8, 1))

    def test_rejects_composite(self):
        with self.assertRaises(NotAPrime):
            reduce_mod_p(S3, 12)

    def test_residue_validation(self):
        with self.assertRaises(ValueError):
            ModPoly(5, (7, 1))
        with self.assertRaises(ValueError):
            ModPoly(5, (1, 0))

    def test_str(self):
        self.assertEqual(str(mod_poly(13, 1, 6)), 'x+6')
        self.assertEqual(str(mod_poly(3, 2, 0, 1)), '2x^2+1')


class FactorModPTests(SimpleTestCase):

    def test_difference_of_squares(self):
        result = factor_mod_p(mod_poly(7, 1, 0, -1))
        self.assertEqual(result.polys, (mod_poly(7, 1, 1), mod_poly(7, 1, 6)))

    def test_reconstruction_and_irreducibility(self):
        rng = random.Random(29)
        for p in (2, 3, 5, 13, 101, 65537):
            for _ in range(8):
                coeffs = [rng.randrange(p) for _ in range(rng.randint(2, 12))] + [rng.randrange(1, p)]
                f = ModPoly.reduce(coeffs, p)
                result = factor_mod_p(f, seed=rng.randrange(100))
                self.assertEqual(reconstruct(result), list(f.coeffs))
                for factor in result.factors:
                    self.assertEqual(factor.poly.coeffs[-1], 1)
                    self.assertTrue(gf_is_irreducible(list(factor.poly.coeffs), p))
                self.assertEqual(len(set(result.polys)), len(result.polys))

    def test_repeated_factors_and_pth_powers(self):
        # (x + 1)^3 * (x^2 + 1)^2 over F_3 needs the p-th root step
        cube = gf_mul(gf_mul([1, 1], [1, 1], 3), [1, 1], 3)
        f = ModPoly(3, tuple(gf_mul(cube, gf_mul([1, 0, 1], [1, 0, 1], 3), 3)))
        result = factor_mod_p(f)
        self.assertEqual(
            [(factor.poly, factor.multiplicity) for factor in result.factors],
            [(mod_poly(3, 1, 1), 3), (mod_poly(3, 1, 0, 1), 2)],
        )

    def test_seed_determinism(self):
        f = reduce_mod_p(LAMBDA18 * phi_m(12), 13)
        self.assertEqual(factor_mod_p(f, seed=3), factor_mod_p(f, seed=3))

    def test_canonical_order_is_seed_independent(self):
        f = reduce_mod_p(phi_m(35) * phi_m(21), 101)
        self.assertEqual(factor_mod_p(f, seed=1).polys, factor_mod_p(f, seed=2).polys)

    def test_cyclotomic_splitting_degrees(self):
        for m in range(1, 67):
            phi = phi_m(m)
            for p in primerange(2, 101):
                if m % p == 0:
                    continue
                order = n_order(p, m) if m > 1 else 1
                result = factor_mod_p(reduce_mod_p(phi, p))
                self.assertTrue(all(factor.poly.degree == order for factor in result.factors), (m, p))
                self.assertTrue(all(factor.multiplicity == 1 for factor in result.factors))


class SymmetryTests(SimpleTestCase):

    def test_is_symmetric_mod_p(self):
        self.assertFalse(is_symmetric_mod_p(mod_poly(13, 1, 6)))
        self.assertTrue(is_symmetric_mod_p(mod_poly(13, 1, 1)))
        self.assertTrue(is_symmetric_mod_p(mod_poly(3, 1, 0, 1)))

    def test_zero_constant_term(self):
        with self.assertRaises(ModularZeroConstantTerm):
            is_symmetric_mod_p(mod_poly(5, 1, 2, 0))

    def test_symmetric_irreducibles_have_even_degree(self):
        for m in range(3, 67):
            for p in (2, 3, 5, 7, 11, 13):
                if m % p == 0:
                    continue
                for factor in factor_mod_p(reduce_mod_p(phi_m(m), p)).factors:
                    if factor.symmetric and factor.poly.degree >= 2:
                        self.assertEqual(factor.poly.degree % 2, 0, (m, p))


class CommonFactorTests(SimpleTestCase):

    def test_lambda18_and_phi12_mod_13(self):
        result = common_factors_mod_p(LAMBDA18, phi_m(12), 13)
        self.assertEqual(result.polys, (mod_poly(13, 1, 6), mod_poly(13, 1, 11)))
        self.assertEqual(result.symmetric_factors, ())

    def test_s3_and_phi10_mod_11(self):
        result = common_factors_mod_p(S3, phi_m(10), 11)
        self.assertEqual(result.polys, (mod_poly(11, 1, 3), mod_poly(11, 1, 4)))

    def test_lehmer_and_phi22_mod_23(self):
        result = common_factors_mod_p(LEHMER, phi_m(22), 23)
        self.assertEqual(result.polys, (mod_poly(23, 1, 4), mod_poly(23, 1, 6)))
        self.assertFalse(any(factor.symmetric for factor in result.factors))

    def test_coprime_reductions(self):
        self.assertEqual(common_factors_mod_p(S3, phi_m(10), 7).factors, ())

    def test_symmetric_common_factor(self):
        result = common_factors_mod_p(SECOND_SMALLEST_18, phi_m(3), 5)
        self.assertEqual(result.symmetric_factors, (mod_poly(5, 1, 1, 1),))
