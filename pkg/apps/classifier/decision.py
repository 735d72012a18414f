# apps/classifier/decision.py
"""
Decision tree for the realizability of (alpha, delta), delta a root of
the Salem polynomial S on the unit circle. By the root-independence
theorem the answer depends on S alone.
"""

import logging
from math import gcd

from sympy import factorint

from apps.cyclotomic.generators import DEFAULT_M_CAP
from apps.cyclotomic.polynomials import phi_m, totient
from apps.local_conditions.conditions import is_square
from apps.obstruction.models import RamificationKind
from apps.obstruction.pi_sets import pi_set
from apps.obstruction.ramification import unramified_status
from apps.salem.certify import certify_salem
from apps.signatures.search import exists_trivial_obstruction_salem_map

from .exceptions import DegreeOutOfRange
from .exclusions import exclude_any_realization_deg18, exclude_projective_deg20
from .models import (
    AnyRealizationVerdict, ProjectiveVerdict, RealizabilityVerdict, SalemPairsVerdict, TheoremTag,
    VerdictCertificate, Witness,
)

logger = logging.getLogger(__name__)

MAX_DEGREE = 22
D18_ORDERS = (3, 4, 6, 12)
D10_EXCLUDED_ORDERS = (13, 26)
D10_MAX_TOTIENT = 12
EQUIVALENT_CONDITION_MAXIMA = ((3, 19), (3, 11))


def _squarefree(n):
    return all(k == 1 for k in factorint(abs(n)).values())


def degree20_sub_tags(at_1, at_minus1):
    tags = []
    if at_1 % 2 and at_minus1 % 2:
        if _squarefree(at_1) and _squarefree(at_minus1) and gcd(at_1, at_minus1) == 1:
            tags.append(TheoremTag.RELATIVELY_PRIME)
        tags.append(TheoremTag.ODD_VALUES)
    return tuple(tags)


def _member_witnesses(S, orders, seed):
    witnesses, undecided = [], []
    for m in orders:
        result = pi_set(S, phi_m(m), seed)
        witnesses.extend(Witness(m=m, prime=p) for p in result.primes)
        if result.has_indeterminate:
            undecided.append(m)
    return witnesses, undecided


def _d10_orders(m_cap):
    return [
        m for m in range(3, m_cap + 1)
        if totient(m) <= D10_MAX_TOTIENT and m not in D10_EXCLUDED_ORDERS
    ]


class _Verdict:
    """Accumulates the parts of a verdict before it is frozen."""

    def __init__(self, S, degree):
        self.S = S
        self.degree = degree
        self.projective = ProjectiveVerdict.UNKNOWN
        self.any_realization = AnyRealizationVerdict.UNKNOWN
        self.caveats = []

    def build(self, salem_pairs, tag, witnesses=(), sub_tags=(), unresolved=()):
        if salem_pairs == SalemPairsVerdict.REALIZABLE_ALL_ROOTS:
            self.any_realization = AnyRealizationVerdict.REALIZABLE
        verdict = RealizabilityVerdict(
            polynomial=self.S,
            degree=self.degree,
            salem_pairs=salem_pairs,
            any_realization=self.any_realization,
            projective=self.projective,
            certificate=VerdictCertificate(tag, tuple(witnesses), tuple(sub_tags), tuple(unresolved)),
            caveats=tuple(self.caveats),
        )
        logger.info("verdict for %s: %s [%s]", self.S, salem_pairs.value, tag.value)
        return verdict


def classify(S, seed=0, m_cap=DEFAULT_M_CAP):
    cert = certify_salem(S, seed=seed)
    d = cert.degree
    if d > MAX_DEGREE:
        raise DegreeOutOfRange(d)
    at_1, at_minus1 = cert.s_at_1, cert.s_at_minus1
    out = _Verdict(S, d)
    realizable = SalemPairsVerdict.REALIZABLE_ALL_ROOTS

    if d <= 18 and d % 8 in (0, 4, 6):
        return out.build(realizable, TheoremTag.CONGR4A)

    if d == 22:
        if is_square(abs(at_1)) and is_square(at_minus1):
            return out.build(realizable, TheoremTag.THM22)
        out.caveats.append("the degree 22 criterion only concerns delta a root of S")
        return out.build(SalemPairsVerdict.NOT_REALIZABLE_FOR_ROOTS, TheoremTag.THM22)

    if d == 20:
        out.projective = exclude_projective_deg20(S)
        if out.projective == ProjectiveVerdict.NOT_EXCLUDED:
            out.caveats.append("not excluded projectively by the value test; finer arguments may still exclude it")
        return out.build(realizable, TheoremTag.TAKADA, sub_tags=degree20_sub_tags(at_1, at_minus1))

    # d is 10 or 18 from here on
    if not (is_square(abs(at_1)) and is_square(at_minus1)):
        return out.build(realizable, TheoremTag.NBS_I)
    status = unramified_status(S)
    if status.ramified_at_2:
        return out.build(realizable, TheoremTag.NBS_II, witnesses=[Witness(prime=2, detail="S is ramified at 2")])
    if status.kind != RamificationKind.UNRAMIFIED:
        out.caveats.append(f"ramification at {', '.join(map(str, status.unresolved))} is undecided")
        return out.build(SalemPairsVerdict.UNKNOWN, TheoremTag.RAMIFICATION_UNKNOWN, unresolved=status.unresolved)

    if d == 18:
        witnesses, undecided = _member_witnesses(S, D18_ORDERS, seed)
        if witnesses:
            return out.build(realizable, TheoremTag.D18_IFF, witnesses=witnesses)
        if undecided:
            logger.warning("undecided Pi sets for %s at m = %s", S, undecided)
            out.caveats.append(f"Pi_(S, Phi_m) undecided for m = {', '.join(map(str, undecided))}")
            return out.build(SalemPairsVerdict.UNKNOWN, TheoremTag.D18_IFF)
        if exclude_any_realization_deg18(S) == ProjectiveVerdict.EXCLUDED:
            out.any_realization = AnyRealizationVerdict.NOT_REALIZABLE_AT_ALL
            out.projective = ProjectiveVerdict.EXCLUDED
        return out.build(
            SalemPairsVerdict.NOT_REALIZABLE_FOR_ROOTS, TheoremTag.D18_IFF,
            witnesses=[Witness(detail="Pi_(S, Phi_m) is empty for m = 3, 4, 6, 12")],
        )

    witnesses, _ = _member_witnesses(S, _d10_orders(m_cap), seed)
    if witnesses:
        return out.build(realizable, TheoremTag.D10_SUFF, witnesses=witnesses)
    for maximum in EQUIVALENT_CONDITION_MAXIMA:
        search = exists_trivial_obstruction_salem_map(cert, maximum, m_cap, seed)
        if search.found:
            witness = Witness(product=search.product, maximum=maximum)
            return out.build(realizable, TheoremTag.EQUIV_COND, witnesses=[witness])
    out.caveats.append("degree 10 case not covered by any implemented criterion")
    return out.build(SalemPairsVerdict.UNKNOWN, TheoremTag.QUESTION_10)
