# apps/salem/models.py

import attrs
from django.db import models

from apps.exact_poly.arithmetic import product, reciprocal_star
from apps.exact_poly.models import X_MINUS_ONE, X_PLUS_ONE, IntPoly, RatInterval


class NotSalemReason(models.TextChoices):
    NOT_MONIC = 'NotMonic', 'Not monic'
    NOT_SYMMETRIC = 'NotSymmetric', 'Not symmetric'
    REDUCIBLE = 'Reducible', 'Reducible'
    ROOT_COUNT_MISMATCH = 'RootCountMismatch', 'Root count mismatch'
    DEGREE_TOO_SMALL = 'DegreeTooSmall', 'Degree too small'


@attrs.frozen
class SalemCertificate:
    """
    Evidence that ``polynomial`` is a Salem polynomial of degree 2n: its
    trace polynomial has n - 1 roots in (-2, 2) and one root in
    ``trace_interval`` beyond 2, and ``alpha_interval`` isolates the Salem
    number.
    """
    polynomial: IntPoly
    degree: int
    trace_poly: IntPoly
    trace_interval: RatInterval
    alpha_interval: RatInterval
    root_counts: tuple
    s_at_1: int
    s_at_minus1: int

    @property
    def unit_circle_pairs(self):
        return self.root_counts[0]


@attrs.frozen
class SymmetricDecomposition:
    """
    F = (X-1)^n_plus (X+1)^n_minus prod f^k (type1) prod (g g*)^k (type2).
    Type 2 entries keep the member of each {g, g*} pair with the smaller
    canonical key.
    """
    polynomial: IntPoly
    n_plus: int
    n_minus: int
    type1: tuple = attrs.field(converter=tuple)
    type2: tuple = attrs.field(converter=tuple)

    @property
    def nodes(self):
        nodes = []
        if self.n_plus:
            nodes.append(X_MINUS_ONE)
        if self.n_minus:
            nodes.append(X_PLUS_ONE)
        nodes.extend(f for f, _ in self.type1)
        return tuple(nodes)

    def type1_multiplicity(self, f):
        return dict(self.type1).get(f, 0)

    @property
    def f1(self):
        return product(f ** k for f, k in self.type1)

    @property
    def f1_values(self):
        f1 = self.f1
        return f1(1), f1(-1)

    @property
    def n1(self):
        """Half the degree of the type 1 part."""
        return self.f1.degree // 2

    def expand(self):
        return (
            X_MINUS_ONE ** self.n_plus
            * X_PLUS_ONE ** self.n_minus
            * self.f1
            * product((g * reciprocal_star(g)) ** k for g, k in self.type2)
        )
