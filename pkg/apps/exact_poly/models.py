# apps/exact_poly/models.py

import math
from fractions import Fraction

import attrs

from .exceptions import InexactDivision


def _normalize_coeffs(coeffs):
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _coerce(value):
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    return NotImplemented


@attrs.frozen
class IntPoly:
    """
    Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of X^k. The zero polynomial is the
    empty tuple and has degree -1.
    """
    coeffs: tuple = attrs.field(default=(), converter=_normalize_coeffs)

    @classmethod
    def from_descending(cls, coeffs):
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_monic(self):
        return self.leading == 1

    @property
    def descending(self):
        return tuple(reversed(self.coeffs))

    @property
    def content(self):
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self):
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero:
            return self
        c = self.content
        if self.leading < 0:
            c = -c
        return self.exact_scalar_quotient(c)

    def exact_scalar_quotient(self, c):
        quotient = []
        for a in self.coeffs:
            q, r = divmod(a, c)
            if r:
                raise InexactDivision(f"{c} does not divide {self}.")
            quotient.append(q)
        return IntPoly(quotient)

    def derivative(self):
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return IntPoly()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return IntPoly(product)

    __rmul__ = __mul__

    def __pow__(self, n):
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        """
        Long division over the integers. Every step must divide the leading
        coefficient exactly, which always holds for monic divisors.
        """
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        shift = self.degree - other.degree
        if shift < 0:
            return IntPoly(), self
        remainder = list(self.coeffs)
        quotient = [0] * (shift + 1)
        lc = other.leading
        for k in range(shift, -1, -1):
            c = remainder[k + other.degree]
            if not c:
                continue
            q, r = divmod(c, lc)
            if r:
                raise InexactDivision(f"{other} does not divide {self} over the integers.")
            quotient[k] = q
            for i, b in enumerate(other.coeffs):
                remainder[k + i] -= q * b
        return IntPoly(quotient), IntPoly(remainder)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __str__(self):
        if self.is_zero:
            return '0'
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                body = '' if magnitude == 1 else str(magnitude)
                body += 'x' if k == 1 else f'x^{k}'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        return text + ''.join(sign + body for sign, body in terms[1:])


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))
X_MINUS_ONE = IntPoly((-1, 1))
X_PLUS_ONE = IntPoly((1, 1))


def canonical_key(poly):
    """Sort key: degree first, then coefficients from the leading one down."""
    return (poly.degree, poly.descending)


def _to_fraction(value):
    return Fraction(value)


@attrs.frozen
class RatInterval:
    lo: Fraction = attrs.field(converter=_to_fraction)
    hi: Fraction = attrs.field(converter=_to_fraction)

    @hi.validator
    def _check_order(self, attribute, value):
        if value < self.lo:
            raise ValueError(f"Interval endpoints out of order: {self.lo} > {value}.")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def to_decimal_string(self, places):
        """Midpoint rounded to exactly ``places`` decimals."""
        scaled = round(self.midpoint * 10 ** places)
        sign = '-' if scaled < 0 else ''
        digits = str(abs(scaled)).rjust(places + 1, '0')
        if not places:
            return sign + digits
        return f"{sign}{digits[:-places]}.{digits[-places:]}"

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _check_unit(instance, attribute, value):
    if value not in (1, -1):
        raise ValueError(f"unit must be 1 or -1, got {value}.")


@attrs.frozen
class FactorizationZ:
    """
    unit * content * product(factor ** multiplicity) reconstructs the input.
    Factors are primitive with positive leading coefficient, irreducible over
    the rationals and listed in canonical order.
    """
    unit: int = attrs.field(validator=_check_unit)
    factors: tuple = attrs.field(converter=tuple)
    content: int = 1

    def expand(self):
        product = ONE * (self.unit * self.content)
        for factor, multiplicity in self.factors:
            product = product * factor ** multiplicity
        return product

    @property
    def is_irreducible(self):
        return self.content == 1 and len(self.factors) == 1 and self.factors[0][1] == 1

    def multiplicity(self, poly):
        for factor, multiplicity in self.factors:
            if factor == poly:
                return multiplicity
        return 0
