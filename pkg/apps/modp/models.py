# apps/modp/models.py

import attrs

from .galois import gf_degree, gf_is_symmetric, gf_reduce, gf_sort_key


def _check_residues(instance, attribute, value):
    if value and value[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if any(not 0 <= c < instance.p for c in value):
        raise ValueError(f"coefficients must be reduced modulo {instance.p}")


@attrs.frozen
class ModPoly:
    """Polynomial over F_p, residues in [0, p) in ascending degree order."""
    p: int
    coeffs: tuple = attrs.field(converter=tuple, validator=_check_residues)

    @classmethod
    def reduce(cls, coeffs, p):
        return cls(p, tuple(gf_reduce(coeffs, p)))

    @property
    def degree(self):
        return gf_degree(self.coeffs)

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    @property
    def sort_key(self):
        return gf_sort_key(self.coeffs)

    def __str__(self):
        if self.is_zero:
            return '0'
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            monomial = 'x' if k == 1 else f'x^{k}'
            terms.append(monomial if c == 1 else f'{c}{monomial}')
        return '+'.join(terms)


@attrs.frozen
class ModFactor:
    poly: ModPoly
    multiplicity: int

    @property
    def symmetric(self):
        return gf_is_symmetric(list(self.poly.coeffs), self.poly.p)


@attrs.frozen
class FactorizationFp:
    """
    unit * product(factor ** multiplicity) reconstructs the input; factors
    are monic, irreducible, pairwise distinct and canonically ordered.
    """
    p: int
    unit: int
    factors: tuple = attrs.field(converter=tuple)

    @property
    def polys(self):
        return tuple(factor.poly for factor in self.factors)

    @property
    def symmetric_factors(self):
        return tuple(factor.poly for factor in self.factors if factor.symmetric)
