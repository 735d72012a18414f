# apps/classifier/models.py

import attrs
from django.db import models


class SalemPairsVerdict(models.TextChoices):
    REALIZABLE_ALL_ROOTS = 'RealizableAllRootsOfS', 'Realizable for every root of S on the unit circle'
    NOT_REALIZABLE_FOR_ROOTS = 'NotRealizableForRootsOfS', 'Not realizable for roots of S'
    UNKNOWN = 'Unknown', 'Unknown'


class AnyRealizationVerdict(models.TextChoices):
    REALIZABLE = 'Realizable', 'Realizable'
    NOT_REALIZABLE_AT_ALL = 'NotRealizableAtAll', 'Not realizable by any K3 automorphism'
    UNKNOWN = 'Unknown', 'Unknown'


class ProjectiveVerdict(models.TextChoices):
    NOT_EXCLUDED = 'NotExcluded', 'Not excluded'
    EXCLUDED = 'Excluded', 'Excluded'
    UNKNOWN = 'Unknown', 'Unknown'


class TheoremTag(models.TextChoices):
    CONGR4A = 'CONGR4a', 'Degree 0, 4 or 6 mod 8'
    THM22 = 'THM22', 'Degree 22 criterion'
    TAKADA = 'TAKADA', 'Degree 20'
    NBS_I = 'NBS-i', '|S(1)| and S(-1) not both squares'
    NBS_II = 'NBS-ii', 'S ramified at 2'
    D18_IFF = 'D18-IFF', 'Unramified degree 18 criterion'
    D10_SUFF = 'D10-SUFF', 'Degree 10 sufficient condition'
    EQUIV_COND = 'EQUIV-COND', 'Trivial obstruction Salem signature map'
    QUESTION_10 = 'QUESTION-10', 'Open degree 10 case'
    RAMIFICATION_UNKNOWN = 'RAMIFICATION-UNKNOWN', 'Ramification undecided'
    RELATIVELY_PRIME = 'RELATIVELY-PRIME', 'S(1), S(-1) odd, square-free and coprime'
    ODD_VALUES = 'ODD-VALUES', 'S(1), S(-1) odd'


class KondoClassKind(models.TextChoices):
    SIGMA = 'Sigma', 'Sigma'
    OMEGA = 'Omega', 'Omega'
    FOLDS_TO_DOUBLE = 'FoldsToDouble', 'Folds into order 2m'
    NOT_ADMISSIBLE = 'NotAdmissible', 'Not admissible'


@attrs.frozen
class Witness:
    m: int = None
    prime: int = None
    product: object = None
    maximum: tuple = None
    detail: str = ''

    def __str__(self):
        if self.product is not None:
            return f"C = {self.product} at maximum {self.maximum}"
        if self.prime is not None:
            return f"m = {self.m}, p = {self.prime}"
        return self.detail


@attrs.frozen
class VerdictCertificate:
    tag: TheoremTag
    witnesses: tuple = ()
    sub_tags: tuple = ()
    unresolved_primes: tuple = ()


@attrs.frozen
class RealizabilityVerdict:
    """
    Realizability of (alpha, delta) for delta a root of S on the unit
    circle. The verdict never depends on which root is chosen.
    """
    polynomial: object
    degree: int
    salem_pairs: SalemPairsVerdict
    any_realization: AnyRealizationVerdict
    projective: ProjectiveVerdict
    certificate: VerdictCertificate
    caveats: tuple = ()

    @property
    def tag(self):
        return self.certificate.tag


@attrs.frozen
class KondoClass:
    m: int
    kind: KondoClassKind
    reason: str = ''
