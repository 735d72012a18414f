# apps/cyclotomic/models.py

import attrs

from apps.exact_poly.arithmetic import product

from .polynomials import phi_m, totient


def _sorted_parts(parts):
    parts = tuple(sorted((int(m), int(k)) for m, k in parts))
    if any(m < 1 or k < 1 for m, k in parts):
        raise ValueError("orders and multiplicities must be positive")
    if len({m for m, _ in parts}) != len(parts):
        raise ValueError("each order may appear only once")
    return parts


@attrs.frozen
class CyclotomicIndex:
    m: int
    phi: int


@attrs.frozen
class CyclotomicProduct:
    """
    prod Phi_m^k over ``parts``, canonically sorted by order. The expansion
    is monic; its constant term is recorded rather than assumed to be 1.
    """
    parts: tuple = attrs.field(default=(), converter=_sorted_parts)
    total_degree: int = attrs.field()

    @total_degree.default
    def _total_degree(self):
        return sum(k * totient(m) for m, k in self.parts)

    @total_degree.validator
    def _check_total_degree(self, attribute, value):
        if value != sum(k * totient(m) for m, k in self.parts):
            raise ValueError(f"total degree {value} does not match {self.parts}.")

    def polynomial(self):
        return product(phi_m(m) ** k for m, k in self.parts)

    @property
    def factor_count(self):
        return sum(k for _, k in self.parts)

    def multiplicity(self, m):
        return dict(self.parts).get(m, 0)

    def value_at(self, x):
        value = 1
        for m, k in self.parts:
            value *= phi_m(m)(x) ** k
        return value

    @property
    def constant_term(self):
        return self.value_at(0)

    def __str__(self):
        if not self.parts:
            return '1'
        return '*'.join(f'Phi{m}' if k == 1 else f'Phi{m}^{k}' for m, k in self.parts)
