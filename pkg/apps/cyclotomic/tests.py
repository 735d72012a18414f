# apps/cyclotomic/tests.py

from django.test import SimpleTestCase

from apps.exact_poly.arithmetic import product
from apps.exact_poly.factor import factor_over_Z
from apps.exact_poly.models import X, X_MINUS_ONE, IntPoly

from .generators import cyclotomic_indices, enumerate_products, is_cyclotomic_product, orders_with_totient
from .models import CyclotomicProduct
from .polynomials import phi_m, phi_values_at_pm1, totient

S3 = IntPoly.from_descending([1, -3, -1, 5, -1, -3, 1])


def count_products(target, degrees):
    """Number of multisets over ``degrees`` summing to ``target``."""
    ways = [1] + [0] * target
    for degree in degrees:
        for total in range(degree, target + 1):
            ways[total] += ways[total - degree]
    return ways[target]


class PhiTests(SimpleTestCase):

    def test_small_orders(self):
        self.assertEqual(phi_m(1), X - 1)
        self.assertEqual(phi_m(3), IntPoly((1, 1, 1)))
        self.assertEqual(phi_m(12), IntPoly.from_descending([1, 0, -1, 0, 1]))
        self.assertEqual(phi_m(22)(-1), 11)

    def test_product_over_divisors(self):
        for m in range(1, 67):
            divisor_product = product(phi_m(d) for d in range(1, m + 1) if m % d == 0)
            self.assertEqual(divisor_product, X ** m - 1)

    def test_degree_and_irreducibility(self):
        for m in range(1, 67):
            self.assertEqual(phi_m(m).degree, totient(m))
            self.assertTrue(factor_over_Z(phi_m(m)).is_irreducible, m)

    def test_values_at_pm1(self):
        self.assertEqual(phi_values_at_pm1(3), (3, 1))
        self.assertEqual(phi_values_at_pm1(12), (1, 1))
        self.assertEqual(phi_values_at_pm1(4), (2, 2))
        self.assertEqual(phi_values_at_pm1(22), (1, 11))
        for m in range(3, 200):
            phi_values_at_pm1(m)

    def test_values_require_order_three(self):
        with self.assertRaises(ValueError):
            phi_values_at_pm1(2)


class ProductTests(SimpleTestCase):

    def test_degree_and_expansion(self):
        c = CyclotomicProduct([(10, 2), (1, 8)])
        self.assertEqual(c.parts, ((1, 8), (10, 2)))
        self.assertEqual(c.total_degree, 16)
        self.assertEqual(c.polynomial(), X_MINUS_ONE ** 8 * phi_m(10) ** 2)
        self.assertEqual(c.factor_count, 10)
        self.assertEqual(c.multiplicity(10), 2)
        self.assertEqual(str(c), 'Phi1^8*Phi10^2')

    def test_constant_term(self):
        self.assertEqual(CyclotomicProduct([(1, 3)]).constant_term, -1)
        self.assertEqual(CyclotomicProduct([(1, 2), (4, 1)]).constant_term, 1)

    def test_rejects_inconsistent_degree(self):
        with self.assertRaises(ValueError):
            CyclotomicProduct([(3, 1)], total_degree=4)
        with self.assertRaises(ValueError):
            CyclotomicProduct([(3, 1), (3, 2)])


class EnumerationTests(SimpleTestCase):

    def test_degree_two(self):
        products = list(enumerate_products(2, 6))
        self.assertEqual([p.parts for p in products], [((3, 1),), ((4, 1),), ((6, 1),)])

    def test_degree_four(self):
        parts = {p.parts for p in enumerate_products(4, 66)}
        self.assertIn(((12, 1),), parts)
        self.assertIn(((3, 2),), parts)
        self.assertNotIn(((1, 2), (3, 1)), parts)
        with_linear = {p.parts for p in enumerate_products(4, 66, allow_linear=True)}
        self.assertIn(((1, 2), (3, 1)), with_linear)
        self.assertIn(((1, 1), (2, 3)), with_linear)

    def test_empty_product(self):
        self.assertEqual([p.parts for p in enumerate_products(0, 66)], [()])

    def test_counts_and_uniqueness(self):
        cases = [(target, False) for target in range(0, 21, 2)] + [(target, True) for target in range(0, 13)]
        for target, allow_linear in cases:
            with self.subTest(target=target, allow_linear=allow_linear):
                products = list(enumerate_products(target, 66, allow_linear))
                self.assertEqual(len({p.parts for p in products}), len(products))
                self.assertTrue(all(p.total_degree == target for p in products))
                degrees = [1, 1] if allow_linear else []
                degrees += [index.phi for index in cyclotomic_indices(target, 66)]
                self.assertEqual(len(products), count_products(target, degrees))

    def test_odd_target_needs_linear_factors(self):
        self.assertEqual(list(enumerate_products(3, 66)), [])
        self.assertTrue(all(p.multiplicity(1) + p.multiplicity(2) for p in enumerate_products(3, 66, True)))

    def test_indices(self):
        self.assertEqual([index.m for index in cyclotomic_indices(2, 66)], [3, 4, 6])
        self.assertEqual(max(index.m for index in cyclotomic_indices(20, 1000)), 66)
        self.assertEqual(orders_with_totient(1), (1, 2))


class RecognitionTests(SimpleTestCase):

    def test_salem_factor_is_rejected(self):
        self.assertIsNone(is_cyclotomic_product(X_MINUS_ONE ** 12 * phi_m(4) ** 2 * S3))

    def test_recognizes_products(self):
        self.assertEqual(is_cyclotomic_product(phi_m(10) ** 4).parts, ((10, 4),))
        self.assertEqual(is_cyclotomic_product(IntPoly((1, 1, 1, 1, 1))).parts, ((5, 1),))
        self.assertEqual(is_cyclotomic_product(X ** 12 - 1).total_degree, 12)

    def test_non_monic(self):
        self.assertIsNone(is_cyclotomic_product(2 * X + 2))
