# apps/signatures/tests.py

from django.test import SimpleTestCase

from apps.cyclotomic.models import CyclotomicProduct
from apps.cyclotomic.polynomials import phi_m
from apps.salem import catalog
from apps.salem.certify import certify_salem

from .exceptions import DegreeMismatch, IndexOutOfRange
from .maps import salem_signature_map, satisfies_c0_c1, tau_s_z, validate_signature_map
from .models import Descriptor, DescriptorKind, SignatureMapSpec, SignatureRuleOutcome
from .search import exists_trivial_obstruction_salem_map, power_case_rule


def clauses(spec):
    return {violation.clause for violation in validate_signature_map(spec)}


class TauTests(SimpleTestCase):

    def test_lehmer(self):
        cert = certify_salem(catalog.LEHMER)
        for z in range(4):
            with self.subTest(z=z):
                spec = tau_s_z(cert, z)
                self.assertEqual(spec.maximum, (3, 7))
                self.assertEqual(spec.value(Descriptor(DescriptorKind.FACTOR, catalog.LEHMER)), (3, 7))
                self.assertEqual(validate_signature_map(spec), [])

    def test_s3(self):
        spec = tau_s_z(certify_salem(catalog.S3), 1)
        self.assertEqual(spec.maximum, (3, 3))
        self.assertEqual(spec.value(Descriptor(DescriptorKind.UNIT_CIRCLE_PAIR, catalog.S3, 1)), (2, 0))
        self.assertEqual(spec.value(Descriptor(DescriptorKind.UNIT_CIRCLE_PAIR, catalog.S3, 0)), (0, 2))

    def test_index_out_of_range(self):
        with self.assertRaises(IndexOutOfRange):
            tau_s_z(certify_salem(catalog.LEHMER), 99)

    def test_always_valid(self):
        for S in (catalog.THIRD_SMALLEST, catalog.LAMBDA16, catalog.LAMBDA18, catalog.LAMBDA20):
            cert = certify_salem(S)
            for z in range(cert.unit_circle_pairs):
                self.assertEqual(validate_signature_map(tau_s_z(cert, z)), [])


class ValidationTests(SimpleTestCase):

    def test_odd_value_on_unit_circle_factor(self):
        spec = SignatureMapSpec(phi_m(5), (1, 3), [(Descriptor(DescriptorKind.FACTOR, phi_m(5)), (1, 3))])
        self.assertEqual(clauses(spec), {'d'})

    def test_negative_parts_count_toward_the_sums(self):
        phi5 = phi_m(5)
        factor = Descriptor(DescriptorKind.FACTOR, phi5)
        self.assertEqual(validate_signature_map(SignatureMapSpec(phi5, (2, 2), [(factor, (2, 2))])), [])
        refined = SignatureMapSpec(phi5, (2, 2), [
            (factor, (2, 2)),
            (Descriptor(DescriptorKind.UNIT_CIRCLE_PAIR, phi5, 0), (2, 0)),
            (Descriptor(DescriptorKind.UNIT_CIRCLE_PAIR, phi5, 1), (0, 2)),
        ])
        self.assertEqual(validate_signature_map(refined), [])

    def test_sums_must_match_maximum(self):
        spec = SignatureMapSpec(phi_m(5), (2, 2), [(Descriptor(DescriptorKind.FACTOR, phi_m(5)), (0, 4))])
        self.assertIn('a', clauses(spec))

    def test_real_pair_must_be_balanced(self):
        spec = tau_s_z(certify_salem(catalog.S3), 0)
        real_pair = Descriptor(DescriptorKind.REAL_PAIR, catalog.S3, 0)
        assignments = [(d, (2, 0) if d == real_pair else pair) for d, pair in spec.assignments]
        self.assertEqual(clauses(SignatureMapSpec(spec.F, spec.maximum, assignments)), {'b', 'e'})

    def test_factor_must_divide(self):
        spec = SignatureMapSpec(phi_m(5), (0, 4), [(Descriptor(DescriptorKind.FACTOR, phi_m(3)), (0, 4))])
        self.assertIn('a', clauses(spec))


class SalemSignatureMapTests(SimpleTestCase):

    def test_lehmer_with_phi36(self):
        cert = certify_salem(catalog.LEHMER)
        spec = salem_signature_map(cert, CyclotomicProduct([(36, 1)]), 2)
        self.assertEqual(spec.base.maximum, (3, 19))
        self.assertEqual(validate_signature_map(spec.base), [])
        self.assertTrue(satisfies_c0_c1(spec.base))

    def test_s3_with_linear_part(self):
        cert = certify_salem(catalog.S3)
        spec = salem_signature_map(cert, CyclotomicProduct([(1, 8), (10, 2)]), 0)
        self.assertEqual(spec.base.maximum, (3, 19))
        self.assertEqual(validate_signature_map(spec.base), [])


class TrivialObstructionSearchTests(SimpleTestCase):

    def test_smyth18_has_none(self):
        search = exists_trivial_obstruction_salem_map(certify_salem(catalog.SMYTH18))
        self.assertFalse(search.found)
        self.assertFalse(search.blocked_by_indeterminate)
        self.assertGreater(search.candidates_examined, 0)

    def test_lambda18_has_none(self):
        self.assertFalse(exists_trivial_obstruction_salem_map(certify_salem(catalog.LAMBDA18)).found)

    def test_second_smallest_18(self):
        cert = certify_salem(catalog.SECOND_SMALLEST_18)
        search = exists_trivial_obstruction_salem_map(cert, m_cap=3)
        self.assertEqual(search.product, CyclotomicProduct([(3, 2)]))
        self.assertTrue(search.graph.is_trivial)
        # a larger cap never loses a solution
        self.assertTrue(exists_trivial_obstruction_salem_map(cert, m_cap=66).found)

    def test_lehmer(self):
        search = exists_trivial_obstruction_salem_map(certify_salem(catalog.LEHMER))
        self.assertTrue(search.found)
        self.assertEqual(search.graph.gf_rank, 0)
        spec = salem_signature_map(certify_salem(catalog.LEHMER), search.product, 0)
        self.assertTrue(satisfies_c0_c1(spec.base))

    def test_degree_too_large(self):
        with self.assertRaises(DegreeMismatch):
            exists_trivial_obstruction_salem_map(certify_salem(catalog.LAMBDA16), (3, 11))


class PowerCaseRuleTests(SimpleTestCase):

    def test_s3_phi10(self):
        cert = certify_salem(catalog.S3)
        self.assertEqual(power_case_rule(cert, 10, 4, True), SignatureRuleOutcome.REALIZABLE)
        self.assertEqual(power_case_rule(cert, 10, 4, False), SignatureRuleOutcome.NOT_REALIZABLE)

    def test_third_smallest_phi20(self):
        cert = certify_salem(catalog.THIRD_SMALLEST)
        self.assertEqual(power_case_rule(cert, 20, 1, True), SignatureRuleOutcome.REALIZABLE)
        self.assertEqual(power_case_rule(cert, 20, 1, False), SignatureRuleOutcome.NOT_REALIZABLE)

    def test_trivial_group_is_inapplicable(self):
        cert = certify_salem(catalog.LEHMER)
        self.assertEqual(power_case_rule(cert, 36, 1, True), SignatureRuleOutcome.INAPPLICABLE)

    def test_degree_mismatch(self):
        with self.assertRaises(DegreeMismatch):
            power_case_rule(certify_salem(catalog.S3), 10, 2, True)
