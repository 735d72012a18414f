# apps/obstruction/models.py

import attrs
from django.db import models

from apps.exact_poly.models import IntPoly


class PiStatus(models.TextChoices):
    MEMBER = 'Member', 'Member'
    NON_MEMBER = 'NonMember', 'Not a member'
    INDETERMINATE = 'Indeterminate', 'Indeterminate'


class EdgeRule(models.TextChoices):
    COMMON_SYMMETRIC_FACTOR = 'CommonSymmetricFactor', 'Common symmetric factor mod p'
    ODD_VALUATION_LINEAR = 'OddValuationLinear', 'Odd valuation at an odd prime'
    TWO_ADIC_LINEAR_PAIR = 'TwoAdicLinearPair', 'Odd valuation at 2'
    LINEAR_PAIR = 'LinearPair', 'X-1 and X+1 at 2'


class Exactness(models.TextChoices):
    EXACT = 'Exact', 'Exact'
    LOWER_BOUND_ONLY = 'LowerBoundOnly', 'Lower bound only'


class RamificationKind(models.TextChoices):
    UNRAMIFIED = 'Unramified', 'Unramified'
    RAMIFIED_AT = 'RamifiedAt', 'Ramified'
    UNKNOWN = 'Unknown', 'Unknown'


@attrs.frozen
class PiMembership:
    """
    Status of one prime. Members carry either ``witness``, a symmetric
    irreducible common factor mod p, or the odd ``valuation`` that decided
    a linear edge.
    """
    prime: int
    status: PiStatus
    rule: EdgeRule = None
    witness: object = None
    valuation: int = None
    common_factors: tuple = ()


@attrs.frozen
class PiSetResult:
    f: IntPoly
    g: IntPoly
    memberships: tuple = attrs.field(converter=tuple)

    def _with_status(self, status):
        return tuple(entry.prime for entry in self.memberships if entry.status == status)

    @property
    def primes(self):
        return self._with_status(PiStatus.MEMBER)

    @property
    def indeterminate_primes(self):
        return self._with_status(PiStatus.INDETERMINATE)

    @property
    def has_member(self):
        return bool(self.primes)

    @property
    def has_indeterminate(self):
        return bool(self.indeterminate_primes)

    def status_at(self, p):
        for entry in self.memberships:
            if entry.prime == p:
                return entry.status
        return PiStatus.NON_MEMBER


@attrs.frozen
class ObstructionEdge:
    f: IntPoly
    g: IntPoly
    prime: int
    rule: EdgeRule


@attrs.frozen
class ObstructionGraph:
    """
    Nodes are the symmetric irreducible factors of F (X-1 and X+1 first),
    components partition them, and G_F(D_+, D_-) has dimension
    ``gf_rank`` over F_2. ``best_case_rank`` is the rank if every
    undecided edge were present.
    """
    nodes: tuple
    edges: tuple
    components: tuple
    gf_rank: int
    exactness: Exactness
    indeterminate: tuple
    best_case_rank: int
    d_plus: int
    d_minus: int

    @property
    def is_trivial(self):
        return self.gf_rank == 0 and self.exactness == Exactness.EXACT


@attrs.frozen
class RamificationStatus:
    kind: RamificationKind
    primes: tuple = ()
    unresolved: tuple = ()

    @property
    def ramified_at_2(self):
        return self.kind == RamificationKind.RAMIFIED_AT and 2 in self.primes

    def __str__(self):
        if self.kind == RamificationKind.RAMIFIED_AT:
            return f"RamifiedAt({', '.join(map(str, self.primes))})"
        return str(self.kind.value)
