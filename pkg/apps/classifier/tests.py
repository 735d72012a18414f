# apps/classifier/tests.py

from django.test import SimpleTestCase

from apps.cyclotomic.models import CyclotomicProduct
from apps.cyclotomic.polynomials import phi_m
from apps.salem import catalog
from apps.salem.exceptions import NotSalem

from .decision import classify, degree20_sub_tags
from .exceptions import DegreeMismatch, OrderTooSmall, TotientTooLarge
from .exclusions import exclude_any_realization_deg18, exclude_projective_deg20, splitting_check
from .kondo import kondo_classify, kondo_table
from .models import (
    AnyRealizationVerdict, KondoClassKind, ProjectiveVerdict, SalemPairsVerdict, TheoremTag, Witness,
)

REALIZABLE = SalemPairsVerdict.REALIZABLE_ALL_ROOTS


class ClassifyTests(SimpleTestCase):

    def test_congruence_degrees(self):
        for S in (catalog.LAMBDA16, catalog.S3, catalog.THIRD_SMALLEST):
            with self.subTest(degree=S.degree):
                verdict = classify(S)
                self.assertEqual(verdict.salem_pairs, REALIZABLE)
                self.assertEqual(verdict.tag, TheoremTag.CONGR4A)
                self.assertEqual(verdict.any_realization, AnyRealizationVerdict.REALIZABLE)

    def test_lambda18_is_not_realizable(self):
        verdict = classify(catalog.LAMBDA18)
        self.assertEqual(verdict.salem_pairs, SalemPairsVerdict.NOT_REALIZABLE_FOR_ROOTS)
        self.assertEqual(verdict.tag, TheoremTag.D18_IFF)
        self.assertEqual(verdict.any_realization, AnyRealizationVerdict.UNKNOWN)

    def test_second_smallest_18(self):
        verdict = classify(catalog.SECOND_SMALLEST_18)
        self.assertEqual(verdict.salem_pairs, REALIZABLE)
        self.assertEqual(verdict.tag, TheoremTag.D18_IFF)
        self.assertIn(Witness(m=3, prime=5), verdict.certificate.witnesses)

    def test_smyth18_is_excluded(self):
        verdict = classify(catalog.SMYTH18)
        self.assertEqual(verdict.salem_pairs, SalemPairsVerdict.NOT_REALIZABLE_FOR_ROOTS)
        self.assertEqual(verdict.any_realization, AnyRealizationVerdict.NOT_REALIZABLE_AT_ALL)
        self.assertEqual(verdict.projective, ProjectiveVerdict.EXCLUDED)

    def test_lehmer(self):
        verdict = classify(catalog.LEHMER, seed=1)
        self.assertEqual(verdict.salem_pairs, REALIZABLE)
        self.assertEqual(verdict.tag, TheoremTag.D10_SUFF)
        orders = {witness.m for witness in verdict.certificate.witnesses}
        self.assertLessEqual({4, 12, 14, 15, 36}, orders)
        self.assertTrue(orders.isdisjoint({13, 26}))

    def test_not_both_squares(self):
        # S(1) = -5
        verdict = classify(catalog.DEGREE18_SEVEN_MINUS)
        self.assertEqual(verdict.tag, TheoremTag.NBS_I)
        self.assertEqual(verdict.salem_pairs, REALIZABLE)

    def test_lambda20(self):
        verdict = classify(catalog.LAMBDA20)
        self.assertEqual(verdict.salem_pairs, REALIZABLE)
        self.assertEqual(verdict.tag, TheoremTag.TAKADA)
        self.assertIn(TheoremTag.RELATIVELY_PRIME, verdict.certificate.sub_tags)
        self.assertEqual(verdict.projective, ProjectiveVerdict.NOT_EXCLUDED)
        self.assertTrue(verdict.caveats)

    def test_degree20_with_values_minus7_and_5(self):
        verdict = classify(catalog.DEGREE20_ODD_VALUES)
        self.assertEqual(verdict.salem_pairs, REALIZABLE)
        self.assertEqual(verdict.projective, ProjectiveVerdict.EXCLUDED)
        self.assertEqual(verdict.certificate.sub_tags, (TheoremTag.RELATIVELY_PRIME, TheoremTag.ODD_VALUES))

    def test_not_salem(self):
        with self.assertRaises(NotSalem):
            classify(phi_m(5))

    def test_root_independence(self):
        # the verdict only sees S, so every seed agrees
        first = classify(catalog.SECOND_SMALLEST_18, seed=0)
        second = classify(catalog.SECOND_SMALLEST_18, seed=7)
        self.assertEqual(first.salem_pairs, second.salem_pairs)
        self.assertEqual(first.certificate.witnesses, second.certificate.witnesses)

    def test_degree20_sub_tags(self):
        self.assertEqual(degree20_sub_tags(-9, 5), (TheoremTag.ODD_VALUES,))
        self.assertEqual(degree20_sub_tags(-3, 3), (TheoremTag.ODD_VALUES,))
        self.assertEqual(degree20_sub_tags(-4, 9), ())


class ExclusionTests(SimpleTestCase):

    def test_degree18(self):
        self.assertEqual(exclude_any_realization_deg18(catalog.SMYTH18), ProjectiveVerdict.EXCLUDED)
        self.assertEqual(exclude_any_realization_deg18(catalog.SECOND_SMALLEST_18), ProjectiveVerdict.NOT_EXCLUDED)
        self.assertEqual(exclude_any_realization_deg18(catalog.LAMBDA18), ProjectiveVerdict.NOT_EXCLUDED)
        with self.assertRaises(DegreeMismatch):
            exclude_any_realization_deg18(catalog.LEHMER)

    def test_degree20(self):
        self.assertEqual(exclude_projective_deg20(catalog.DEGREE20_ODD_VALUES), ProjectiveVerdict.EXCLUDED)
        self.assertEqual(exclude_projective_deg20(catalog.LAMBDA20), ProjectiveVerdict.NOT_EXCLUDED)
        with self.assertRaises(DegreeMismatch):
            exclude_projective_deg20(catalog.LAMBDA18)

    def test_splitting(self):
        self.assertTrue(splitting_check(catalog.SMYTH18, CyclotomicProduct([(3, 2)])))
        self.assertTrue(splitting_check(catalog.SMYTH18, CyclotomicProduct([(1, 2), (2, 2)])))
        self.assertFalse(splitting_check(catalog.SMYTH18, CyclotomicProduct([(8, 1)])))
        self.assertFalse(splitting_check(catalog.SECOND_SMALLEST_18, CyclotomicProduct([(3, 2)])))


class KondoTests(SimpleTestCase):

    def test_tables(self):
        table = kondo_table()
        sigma = {entry.m for entry in table if entry.kind == KondoClassKind.SIGMA}
        omega = {entry.m for entry in table if entry.kind == KondoClassKind.OMEGA}
        self.assertEqual(sigma, {12, 28, 36, 42, 44, 66})
        self.assertEqual(omega, {3, 5, 7, 9, 11, 13, 17, 19, 25, 27})

    def test_examples(self):
        self.assertEqual(kondo_classify(12).kind, KondoClassKind.SIGMA)
        self.assertEqual(kondo_classify(13).kind, KondoClassKind.OMEGA)
        self.assertEqual(kondo_classify(21).kind, KondoClassKind.FOLDS_TO_DOUBLE)
        self.assertEqual(kondo_classify(42).kind, KondoClassKind.SIGMA)
        self.assertEqual(kondo_classify(8).kind, KondoClassKind.NOT_ADMISSIBLE)
        self.assertEqual(kondo_classify(15).kind, KondoClassKind.NOT_ADMISSIBLE)

    def test_sigma_invariants(self):
        for entry in kondo_table():
            if entry.kind == KondoClassKind.SIGMA:
                self.assertEqual((phi_m(entry.m)(1), phi_m(entry.m)(-1)), (1, 1))
                self.assertEqual(entry.m % 2, 0)

    def test_bounds(self):
        with self.assertRaises(OrderTooSmall):
            kondo_classify(2)
        with self.assertRaises(TotientTooLarge):
            kondo_classify(23)
