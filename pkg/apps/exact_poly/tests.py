# apps/exact_poly/tests.py

import random
from fractions import Fraction

import mpmath
import sympy
from django.test import SimpleTestCase
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .arithmetic import (
    divides, eval_at, gcd, inverse_trace_poly, is_symmetric, multiplicity, product,
    reciprocal_star, resultant, squarefree_decomposition, squarefree_part, trace_poly,
)
from .exceptions import EndpointIsRoot, InexactDivision, NonIntegralReciprocal, NotSymmetric, ZeroConstantTerm
from .factor import factor_over_Z
from .models import ONE, X, X_MINUS_ONE, X_PLUS_ONE, ZERO, FactorizationZ, IntPoly, RatInterval
from .sturm import bisect_root, isolate_real_roots, root_bound, sturm_count

LEHMER = IntPoly.from_descending([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
S3 = IntPoly.from_descending([1, -3, -1, 5, -1, -3, 1])
PHI10 = IntPoly.from_descending([1, -1, 1, -1, 1])
PHI20 = IntPoly.from_descending([1, 0, -1, 0, 1, 0, -1, 0, 1])
THIRD_SMALLEST = IntPoly.from_descending([1, 0, 0, -1, -1, 0, 0, 1, 0, 0, -1, -1, 0, 0, 1])

SX = sympy.Symbol('x')


def to_sympy(f):
    return sympy.Poly(list(f.descending) or [0], SX)


def random_poly(rng, degree, bound=5):
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = 0
    while not lead:
        lead = rng.randint(-bound, bound)
    return IntPoly(coeffs + [lead])


def sylvester_det(a, b):
    """Determinant of the Sylvester matrix of (a, b), rows of a first."""
    n, m = a.degree, b.degree
    size = n + m
    if not size:
        return 1
    rows = [[0] * i + list(a.descending) + [0] * (m - 1 - i) for i in range(m)]
    rows += [[0] * i + list(b.descending) + [0] * (n - 1 - i) for i in range(n)]
    return int(DomainMatrix([[ZZ(c) for c in row] for row in rows], (size, size), ZZ).det())


class IntPolyTests(SimpleTestCase):

    def test_normalizes_trailing_zeros(self):
        self.assertEqual(IntPoly((1, 2, 0, 0)).coeffs, (1, 2))
        self.assertEqual(IntPoly((0, 0)).degree, -1)
        self.assertTrue(IntPoly(()).is_zero)

    def test_canonical_string(self):
        self.assertEqual(str(S3), 'x^6-3x^5-x^4+5x^3-x^2-3x+1')
        self.assertEqual(str(ZERO), '0')
        self.assertEqual(str(-X + 2), '-x+2')

    def test_arithmetic(self):
        self.assertEqual(X_MINUS_ONE * X_PLUS_ONE, IntPoly((-1, 0, 1)))
        self.assertEqual((X + 1) ** 3, IntPoly((1, 3, 3, 1)))
        self.assertEqual(3 - X, IntPoly((3, -1)))
        quotient, remainder = divmod(X ** 4 - 1, X ** 2 + 1)
        self.assertEqual(quotient, X ** 2 - 1)
        self.assertTrue(remainder.is_zero)

    def test_inexact_division(self):
        with self.assertRaises(InexactDivision):
            divmod(X ** 2, 2 * X + 1)

    def test_primitive_part_and_content(self):
        f = IntPoly((-4, 0, -6))
        self.assertEqual(f.content, 2)
        self.assertEqual(f.primitive_part(), IntPoly((2, 0, 3)))


class EvaluationTests(SimpleTestCase):

    def test_eval_at(self):
        self.assertEqual(eval_at(LEHMER, -1), 1)
        self.assertEqual(eval_at(ZERO, 7), 0)
        self.assertEqual(eval_at(S3, 1), -1)
        self.assertEqual(eval_at(X ** 2, Fraction(1, 3)), Fraction(1, 9))


class ReciprocalTests(SimpleTestCase):

    def test_reciprocal_star(self):
        f = IntPoly.from_descending([1, -3, 1])
        self.assertEqual(reciprocal_star(f), f)
        self.assertEqual(
            reciprocal_star(IntPoly.from_descending([1, 2, 0, 1])),
            IntPoly.from_descending([1, 0, 2, 1]),
        )

    def test_reciprocal_star_errors(self):
        with self.assertRaises(ZeroConstantTerm):
            reciprocal_star(X ** 2 + X)
        with self.assertRaises(NonIntegralReciprocal):
            reciprocal_star(X + 6)

    def test_is_symmetric(self):
        self.assertTrue(is_symmetric(LEHMER))
        self.assertFalse(is_symmetric(IntPoly.from_descending([1, 1, 0, 0, 1])))
        with self.assertRaises(ZeroConstantTerm):
            is_symmetric(X ** 2 + X)

    def test_star_is_multiplicative_involution(self):
        rng = random.Random(7)
        for _ in range(30):
            f = IntPoly([1] + [rng.randint(-4, 4) for _ in range(rng.randint(0, 5))] + [1])
            g = IntPoly([-1] + [rng.randint(-4, 4) for _ in range(rng.randint(0, 5))] + [1])
            self.assertEqual(reciprocal_star(reciprocal_star(f)), f)
            self.assertEqual(reciprocal_star(f * g), reciprocal_star(f) * reciprocal_star(g))


class ResultantTests(SimpleTestCase):

    def test_known_resultants(self):
        self.assertEqual(resultant(S3, PHI10), 121)
        self.assertEqual(resultant(S3, ONE), 1)
        self.assertEqual(resultant(THIRD_SMALLEST, PHI20), 41 ** 2)

    def test_sign_convention(self):
        # Res(f, g) = lc(g)^deg(f) * prod f(beta)
        self.assertEqual(resultant(X - 3, 2 * X - 1), 2 * Fraction(1, 2) - 6)
        self.assertEqual(resultant(X ** 2 + 1, X - 2), 5)

    def test_matches_sylvester_determinant(self):
        rng = random.Random(11)
        for _ in range(40):
            f = random_poly(rng, rng.randint(0, 8))
            g = random_poly(rng, rng.randint(0, 8))
            self.assertEqual(resultant(f, g), sylvester_det(g, f))

    def test_odd_degrees_in_either_order(self):
        f = IntPoly.from_descending([1, -2])
        g = IntPoly.from_descending([1, 0, 0, 1])
        self.assertEqual(resultant(f, g), sylvester_det(g, f))
        self.assertEqual(resultant(g, f), sylvester_det(f, g))
        self.assertEqual(resultant(f, g), -resultant(g, f))
        self.assertEqual(resultant(f, g), -9)

    def test_symmetry_and_multiplicativity(self):
        rng = random.Random(3)
        for _ in range(40):
            f = random_poly(rng, rng.randint(1, 8))
            g = random_poly(rng, rng.randint(1, 8))
            h = random_poly(rng, rng.randint(1, 8))
            self.assertEqual(resultant(f, g), (-1) ** (f.degree * g.degree) * resultant(g, f))
            self.assertEqual(resultant(f, g * h), resultant(f, g) * resultant(f, h))

    def test_shared_factor_gives_zero(self):
        self.assertEqual(resultant(X ** 2 - 1, X - 1), 0)


class GcdTests(SimpleTestCase):

    def test_gcd(self):
        self.assertEqual(gcd(X ** 4 - 1, X ** 2 - 1), X ** 2 - 1)
        self.assertEqual(gcd(2 * X + 2, ZERO), X + 1)
        self.assertEqual(gcd(S3, PHI10), ONE)

    def test_divides_and_multiplicity(self):
        f = PHI10 ** 2 * X_MINUS_ONE ** 3
        self.assertTrue(divides(PHI10, f))
        self.assertFalse(divides(X_PLUS_ONE, f))
        self.assertEqual(multiplicity(X_MINUS_ONE, f), 3)
        self.assertEqual(multiplicity(PHI10, f), 2)

    def test_squarefree(self):
        f = X_MINUS_ONE ** 3 * X_PLUS_ONE * PHI10 ** 2
        self.assertEqual(squarefree_part(f), X_MINUS_ONE * X_PLUS_ONE * PHI10)
        parts = squarefree_decomposition(f)
        self.assertEqual(parts, [(X_PLUS_ONE, 1), (PHI10, 2), (X_MINUS_ONE, 3)])
        self.assertEqual(product(a ** i for a, i in parts), f)


class TracePolyTests(SimpleTestCase):

    def test_trace_poly(self):
        self.assertEqual(trace_poly(S3), IntPoly.from_descending([1, -3, -4, 11]))
        self.assertEqual(trace_poly(X ** 2 + 1), X)

    def test_inverse_trace_poly(self):
        self.assertEqual(inverse_trace_poly(X), X ** 2 + 1)
        r1 = (X ** 2 - 4) * (X - 1) - 1
        self.assertEqual(inverse_trace_poly(r1), IntPoly.from_descending([1, -1, -1, 1, -1, -1, 1]))

    def test_lehmer_round_trip(self):
        r = trace_poly(LEHMER)
        self.assertEqual(r.degree, 5)
        self.assertEqual(inverse_trace_poly(r), LEHMER)

    def test_round_trip_on_random_symmetric(self):
        rng = random.Random(5)
        for _ in range(30):
            r = random_poly(rng, rng.randint(1, 8))
            r = IntPoly(r.coeffs[:-1] + (1,))
            s = inverse_trace_poly(r)
            self.assertTrue(is_symmetric(s))
            self.assertEqual(trace_poly(s), r)
            self.assertEqual(inverse_trace_poly(trace_poly(s)), s)

    def test_rejects_non_symmetric(self):
        with self.assertRaises(NotSymmetric):
            trace_poly(X ** 4 + X ** 3 + 1)
        with self.assertRaises(NotSymmetric):
            trace_poly(X ** 3 + 1)


class SturmTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(sturm_count(trace_poly(S3), RatInterval(-2, 2)), 2)
        self.assertEqual(sturm_count(X ** 2 + 1, RatInterval(-10, 10)), 0)
        r = trace_poly(LEHMER)
        self.assertEqual(sturm_count(r, RatInterval(2, root_bound(r))), 1)

    def test_endpoint_root(self):
        with self.assertRaises(EndpointIsRoot):
            sturm_count(X ** 2 - 4, RatInterval(-2, 3))

    def test_counts_distinct_roots(self):
        self.assertEqual(sturm_count((X - 1) ** 3 * (X + 1), RatInterval(-3, 3)), 2)

    def test_agrees_with_numeric_roots(self):
        rng = random.Random(17)
        checked = 0
        while checked < 60:
            f = random_poly(rng, rng.randint(1, 6))
            if squarefree_part(f).degree != f.degree:
                continue
            lo = Fraction(rng.randint(-40, 40), 7)
            hi = lo + Fraction(rng.randint(1, 60), 7)
            if not f(lo) or not f(hi):
                continue
            with mpmath.workdps(60):
                roots = mpmath.polyroots(list(f.descending), maxsteps=200, extraprec=200)
                left = mpmath.mpf(lo.numerator) / lo.denominator
                right = mpmath.mpf(hi.numerator) / hi.denominator
                expected = sum(1 for z in roots if abs(mpmath.im(z)) < mpmath.mpf(10) ** -30 and left < mpmath.re(z) < right)
            self.assertEqual(sturm_count(f, RatInterval(lo, hi)), expected)
            checked += 1

    def test_isolate_real_roots(self):
        intervals = isolate_real_roots((X ** 2 - 2) * (X ** 2 - 3) * (X ** 2 + 1), RatInterval(-2, 2))
        self.assertEqual(len(intervals), 4)
        for interval, root in zip(intervals, (-3, -2, 2, 3)):
            with self.subTest(root=root):
                # the interval brackets sign(root) * sqrt(|root|)
                self.assertLessEqual(interval.lo * abs(interval.lo), root)
                self.assertGreaterEqual(interval.hi * abs(interval.hi), root)
        for left, right in zip(intervals, intervals[1:]):
            self.assertLessEqual(left.hi, right.lo)

    def test_isolate_in_lehmer_trace_window(self):
        self.assertEqual(len(isolate_real_roots(trace_poly(LEHMER), RatInterval(-2, 2))), 4)

    def test_bisect_root(self):
        interval = bisect_root(X ** 2 - 2, RatInterval(1, 2), Fraction(1, 2 ** 40))
        self.assertLessEqual(interval.width, Fraction(1, 2 ** 40))
        self.assertLess(interval.lo ** 2, 2)
        self.assertGreater(interval.hi ** 2, 2)

    def test_decimal_rendering(self):
        self.assertEqual(RatInterval(Fraction(1, 3), Fraction(1, 3)).to_decimal_string(4), '0.3333')
        self.assertEqual(RatInterval(-2, -1).to_decimal_string(2), '-1.50')


class FactorTests(SimpleTestCase):

    def test_examples(self):
        result = factor_over_Z(PHI10 ** 2 * X_MINUS_ONE ** 8)
        self.assertEqual(set(result.factors), {(X_MINUS_ONE, 8), (PHI10, 2)})
        self.assertTrue(factor_over_Z(LEHMER).is_irreducible)
        result = factor_over_Z(X ** 4 - 1)
        self.assertEqual(result.factors, ((X_MINUS_ONE, 1), (X_PLUS_ONE, 1), (X ** 2 + 1, 1)))

    def test_unit_and_content(self):
        f = -6 * (X ** 2 + 1) * (X - 2)
        result = factor_over_Z(f)
        self.assertEqual(result.unit, -1)
        self.assertEqual(result.content, 6)
        self.assertEqual(result.expand(), f)

    def test_swinnerton_dyer_style_recombination(self):
        # irreducible over Z but splits modulo every prime
        f = X ** 4 - 10 * X ** 2 + 1
        self.assertTrue(factor_over_Z(f).is_irreducible)

    def test_reconstruction_against_sympy(self):
        rng = random.Random(23)
        for _ in range(25):
            parts = [random_poly(rng, rng.randint(1, 4), bound=3) for _ in range(rng.randint(1, 3))]
            f = product(parts)
            result = factor_over_Z(f, seed=rng.randrange(1000))
            self.assertEqual(result.expand(), f)
            _, expected = sympy.factor_list(to_sympy(f).as_expr(), SX)
            self.assertEqual(
                sorted((sympy.degree(g, SX), k) for g, k in expected),
                sorted((g.degree, k) for g, k in result.factors),
            )

    def test_seed_determinism(self):
        f = PHI10 * PHI20 * S3
        self.assertEqual(factor_over_Z(f, seed=4), factor_over_Z(f, seed=4))

    def test_zero_and_constants(self):
        self.assertEqual(factor_over_Z(IntPoly((-3,))), FactorizationZ(unit=-1, factors=(), content=3))
