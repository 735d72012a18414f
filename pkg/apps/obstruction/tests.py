# apps/obstruction/tests.py

import random

from django.test import SimpleTestCase

from apps.cyclotomic.polynomials import phi_m
from apps.exact_poly.arithmetic import resultant
from apps.exact_poly.exceptions import NotSymmetric
from apps.exact_poly.models import X, X_MINUS_ONE, X_PLUS_ONE
from apps.modp.galois import gf_is_irreducible, gf_reduce, gf_rem
from apps.modp.models import ModPoly
from apps.modp.operations import is_symmetric_mod_p
from apps.salem import catalog
from apps.salem.certify import certify_salem, power_min_poly
from apps.salem.families import b_family_polynomial, sa_polynomial

from .exceptions import ZeroResultant
from .graph import obstruction_group
from .models import EdgeRule, Exactness, PiStatus, RamificationKind
from .pi_sets import linear_pair_holds, pi_set, pi_set_linear
from .ramification import ramified_prime_candidates, unramified_status


class RamificationTests(SimpleTestCase):

    def test_smyth18_is_unramified(self):
        self.assertEqual(ramified_prime_candidates(catalog.SMYTH18), {2})
        self.assertEqual(unramified_status(catalog.SMYTH18).kind, RamificationKind.UNRAMIFIED)

    def test_phi3(self):
        self.assertEqual(ramified_prime_candidates(phi_m(3)), {2, 3})
        status = unramified_status(phi_m(3))
        self.assertEqual(status.kind, RamificationKind.RAMIFIED_AT)
        self.assertEqual(status.primes, (3,))
        self.assertEqual(status.unresolved, (2,))
        self.assertFalse(status.ramified_at_2)

    def test_phi4_ramified_at_2(self):
        status = unramified_status(phi_m(4))
        self.assertEqual(status.primes, (2,))
        self.assertTrue(status.ramified_at_2)

    def test_even_valuations_are_unknown(self):
        # f(1) = 9, f(-1) = 1
        status = unramified_status(X ** 4 + 2 * X ** 3 + 3 * X ** 2 + 2 * X + 1)
        self.assertEqual(status.kind, RamificationKind.UNKNOWN)
        self.assertEqual(status.unresolved, (2, 3))

    def test_lambda20(self):
        status = unramified_status(catalog.LAMBDA20)
        self.assertEqual(status.primes, (11,))
        self.assertEqual(str(status), 'RamifiedAt(11)')


class PiSetTests(SimpleTestCase):

    def test_lehmer(self):
        expected = {4: (3,), 12: (3,), 14: (13,), 15: (29,), 36: (3,)}
        for m, primes in expected.items():
            with self.subTest(m=m):
                self.assertEqual(pi_set(catalog.LEHMER, phi_m(m)).primes, primes)

    def test_lambda18_and_phi12(self):
        self.assertEqual(resultant(catalog.LAMBDA18, phi_m(12)), 169)
        result = pi_set(catalog.LAMBDA18, phi_m(12))
        self.assertEqual(result.primes, ())
        self.assertEqual(result.status_at(13), PiStatus.NON_MEMBER)
        (entry,) = result.memberships
        self.assertEqual(len(entry.common_factors), 2)
        self.assertTrue(all(factor.degree == 1 for factor in entry.common_factors))

    def test_lambda18_unit_resultants(self):
        for m in (3, 4, 6):
            with self.subTest(m=m):
                self.assertIn(resultant(catalog.LAMBDA18, phi_m(m)), (1, -1))
                self.assertEqual(pi_set(catalog.LAMBDA18, phi_m(m)).memberships, ())

    def test_s3_and_phi10(self):
        result = pi_set(catalog.S3, phi_m(10))
        self.assertEqual(result.status_at(11), PiStatus.NON_MEMBER)
        self.assertFalse(result.has_member)

    def test_second_smallest_18(self):
        self.assertEqual(pi_set(catalog.SECOND_SMALLEST_18, phi_m(3)).primes, (5,))

    def test_powers_of_lambda18(self):
        cert = certify_salem(catalog.LAMBDA18)
        square, cube = power_min_poly(cert, 2), power_min_poly(cert, 3)
        self.assertEqual(pi_set(square, phi_m(4)).primes, (7,))
        self.assertEqual(pi_set(cube, phi_m(3)).primes, (17,))
        self.assertEqual(resultant(square, phi_m(6)), 169)
        self.assertEqual(pi_set(square, phi_m(6)).status_at(13), PiStatus.NON_MEMBER)

    def test_indeterminate_when_values_share_the_prime(self):
        # Res(Phi3, X^2+4X+1) = 9 and Phi3(1) = 3
        result = pi_set(phi_m(3), X ** 2 + 4 * X + 1)
        self.assertEqual(result.indeterminate_primes, (3,))
        self.assertTrue(result.has_indeterminate)

    def test_common_factor_rejected(self):
        with self.assertRaises(ZeroResultant):
            pi_set(phi_m(5), phi_m(5) * phi_m(3))

    def test_members_divide_resultant_and_witnesses_are_sound(self):
        pairs = [(catalog.LEHMER, phi_m(m)) for m in (4, 12, 14, 15, 36)]
        pairs += [(catalog.SECOND_SMALLEST_18, phi_m(3)), (catalog.S3, phi_m(3)), (catalog.S3, phi_m(4))]
        for f, g in pairs:
            res = resultant(f, g)
            for entry in pi_set(f, g).memberships:
                self.assertEqual(res % entry.prime, 0)
                if entry.status != PiStatus.MEMBER:
                    continue
                p, witness = entry.prime, entry.witness
                self.assertTrue(gf_is_irreducible(list(witness.coeffs), p))
                self.assertTrue(is_symmetric_mod_p(witness))
                for h in (f, g):
                    self.assertEqual(gf_rem(gf_reduce(h.coeffs, p), list(witness.coeffs), p), [])
                self.assertIsInstance(witness, ModPoly)


class LinearPiSetTests(SimpleTestCase):

    def test_phi3_and_x_minus_1(self):
        result = pi_set_linear(phi_m(3), 1, 12, -3)
        self.assertEqual(result.g, X_MINUS_ONE)
        self.assertEqual(result.primes, (3,))
        self.assertEqual(result.memberships[0].rule, EdgeRule.ODD_VALUATION_LINEAR)

    def test_phi4_at_two(self):
        result = pi_set_linear(phi_m(4), 1, 12, 4)
        self.assertEqual(result.primes, (2,))
        self.assertEqual(result.memberships[0].rule, EdgeRule.TWO_ADIC_LINEAR_PAIR)

    def test_phi22_and_x_plus_1(self):
        result = pi_set_linear(phi_m(22), -1, 2, 11)
        self.assertEqual(result.g, X_PLUS_ONE)
        self.assertEqual(result.primes, (11,))

    def test_d_condition(self):
        # -D = 1 is a square everywhere
        self.assertEqual(pi_set_linear(phi_m(3), 1, 2, -1).status_at(3), PiStatus.NON_MEMBER)
        self.assertEqual(pi_set_linear(phi_m(3), 1, 2, 3).primes, (3,))

    def test_even_valuation_is_indeterminate(self):
        result = pi_set_linear(X ** 2 + 7 * X + 1, 1, 4, 9)
        self.assertEqual(result.indeterminate_primes, (3,))

    def test_linear_pair(self):
        self.assertTrue(linear_pair_holds(4, 4, 1, 1))
        self.assertFalse(linear_pair_holds(0, 2, 1, 1))
        self.assertFalse(linear_pair_holds(2, 4, -1, 1))
        self.assertTrue(linear_pair_holds(2, 4, 1, 1))


class ObstructionGroupTests(SimpleTestCase):

    def test_s3_phi10(self):
        graph = obstruction_group(catalog.S3 * phi_m(10) ** 4, 0, 0)
        self.assertEqual(graph.gf_rank, 1)
        self.assertEqual(graph.exactness, Exactness.EXACT)
        self.assertEqual(len(graph.components), 2)

    def test_s3_phi10_with_linear_part(self):
        graph = obstruction_group(catalog.S3 * phi_m(10) ** 2 * X_MINUS_ONE ** 8, 8, 0)
        self.assertEqual(graph.nodes[0], X_MINUS_ONE)
        self.assertEqual(graph.gf_rank, 2)
        self.assertEqual(graph.edges, ())

    def test_irreducible(self):
        graph = obstruction_group(catalog.LEHMER, 0, 0)
        self.assertEqual(graph.gf_rank, 0)
        self.assertTrue(graph.is_trivial)

    def test_sa_with_phi3(self):
        for a in range(6):
            with self.subTest(a=a):
                F = sa_polynomial(a) * phi_m(3) ** 2 * X_MINUS_ONE ** 12
                self.assertTrue(obstruction_group(F, 12, 0).is_trivial)

    def test_sa_with_phi4(self):
        self.assertEqual(obstruction_group(sa_polynomial(0) * phi_m(4) ** 2 * X_MINUS_ONE ** 12, 12, 0).gf_rank, 1)
        for a in range(1, 6):
            with self.subTest(a=a):
                F = sa_polynomial(a) * phi_m(4) ** 2 * X_MINUS_ONE ** 12
                self.assertTrue(obstruction_group(F, 12, 0).is_trivial)

    def test_linear_pair_edge(self):
        F = X_MINUS_ONE ** 2 * X_PLUS_ONE ** 2 * phi_m(3)
        graph = obstruction_group(F, 2, 2)
        self.assertEqual(graph.gf_rank, 0)
        self.assertIn(EdgeRule.LINEAR_PAIR, {edge.rule for edge in graph.edges})
        # D_- = -1 blocks the edge between X-1 and X+1
        graph = obstruction_group(F, 2, 1)
        self.assertEqual(graph.d_minus, -1)
        self.assertEqual(graph.gf_rank, 1)

    def test_indeterminate_edges_weaken_exactness(self):
        graph = obstruction_group(phi_m(3) * (X ** 2 + 4 * X + 1), 0, 0)
        self.assertEqual(graph.gf_rank, 1)
        self.assertEqual(graph.exactness, Exactness.LOWER_BOUND_ONLY)
        self.assertEqual(len(graph.indeterminate), 1)
        self.assertEqual(graph.best_case_rank, 0)

    def test_adding_edges_never_raises_rank(self):
        rng = random.Random(5)
        pool = [catalog.S3, catalog.LEHMER, phi_m(3), phi_m(4), phi_m(10), phi_m(12)]
        for _ in range(15):
            parts = rng.sample(pool, 3)
            F = parts[0] * parts[1] * parts[2]
            base = obstruction_group(F, 0, 0).gf_rank
            with_linear = obstruction_group(F * X_MINUS_ONE ** 4, 4, 0).gf_rank
            # a new node adds at most one component
            self.assertLessEqual(with_linear, base + 1)
            self.assertLessEqual(base, 2)

    def test_requires_constant_term_one(self):
        with self.assertRaises(NotSymmetric):
            obstruction_group(X ** 2 - 1, 0, 0)


class FamilyResultantTests(SimpleTestCase):

    def test_sa_family(self):
        for a in range(51):
            S = sa_polynomial(a)
            self.assertEqual(resultant(S, phi_m(3)), (3 * (a + 1) - 1) ** 2)
            self.assertEqual(resultant(S, phi_m(4)), (4 * a - 1) ** 2)

    def test_three_parameter_family(self):
        rng = random.Random(17)
        for _ in range(100):
            a, b, c = (rng.randint(-20, 20) for _ in range(3))
            self.assertEqual(resultant(b_family_polynomial(a, b, c), phi_m(3)), (-3 * (a - b + c) - 1) ** 2)
