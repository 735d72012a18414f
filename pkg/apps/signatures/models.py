# apps/signatures/models.py

import attrs
from django.db import models

from apps.exact_poly.models import IntPoly


class DescriptorKind(models.TextChoices):
    FACTOR = 'Factor', 'Rational irreducible factor'
    UNIT_CIRCLE_PAIR = 'UnitCirclePair', 'Conjugate pair on the unit circle'
    REAL_PAIR = 'RealPair', 'Real pair a, 1/a'


class SignatureRuleOutcome(models.TextChoices):
    REALIZABLE = 'Realizable', 'Realizable'
    NOT_REALIZABLE = 'NotRealizable', 'Not realizable'
    INAPPLICABLE = 'Inapplicable', 'Inapplicable'


@attrs.frozen
class Descriptor:
    """
    A rational factor of F, or one of its real quadratic divisors. Divisors
    with roots on the unit circle are indexed by decreasing real part.
    """
    kind: DescriptorKind
    factor: IntPoly
    index: int = None

    def __str__(self):
        if self.kind == DescriptorKind.FACTOR:
            return str(self.factor)
        return f"{self.kind.value}[{self.index}] of {self.factor}"


@attrs.frozen
class SignatureMapSpec:
    F: IntPoly
    maximum: tuple
    assignments: tuple = attrs.field(converter=tuple)

    def value(self, descriptor):
        for key, pair in self.assignments:
            if key == descriptor:
                return pair
        return (0, 0)

    @property
    def factor_assignments(self):
        return tuple((d, pair) for d, pair in self.assignments if d.kind == DescriptorKind.FACTOR)

    def refinements(self, factor):
        return tuple(
            (d, pair) for d, pair in self.assignments
            if d.kind != DescriptorKind.FACTOR and d.factor == factor
        )


@attrs.frozen
class Violation:
    clause: str
    message: str

    def __str__(self):
        return f"({self.clause}) {self.message}"


@attrs.frozen
class SalemSignatureSpec:
    base: SignatureMapSpec
    certificate: object
    product: object
    delta_index: int


@attrs.frozen
class TrivialObstructionSearch:
    maximum: tuple
    product: object = None
    graph: object = None
    blocked_by_indeterminate: bool = False
    candidates_examined: int = 0

    @property
    def found(self):
        return self.product is not None
