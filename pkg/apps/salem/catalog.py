# apps/salem/catalog.py
"""Named Salem polynomials that recur in reports and checks."""

from apps.exact_poly.models import IntPoly

from .families import sa_polynomial, smyth18_polynomial

# Lehmer's polynomial, the smallest known Salem number.
LEHMER = IntPoly.from_descending([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])

THIRD_SMALLEST = IntPoly.from_descending([1, 0, 0, -1, -1, 0, 0, 1, 0, 0, -1, -1, 0, 0, 1])

LAMBDA16 = IntPoly.from_descending([1, -1] + [0] * 6 + [-1] + [0] * 6 + [-1, 1])

# Smallest degree 18 Salem number.
LAMBDA18 = IntPoly.from_descending([1, -1, 1, -1, 0, 0, -1, 1, -1, 1, -1, 1, -1, 0, 0, -1, 1, -1, 1])

SECOND_SMALLEST_18 = IntPoly.from_descending([1, -1] + [0] * 6 + [-1, 1, -1] + [0] * 6 + [-1, 1])

DEGREE18_SEVEN_MINUS = IntPoly.from_descending([1] + [0] * 5 + [-1] * 7 + [0] * 5 + [1])

# Smallest degree 20 Salem number.
LAMBDA20 = IntPoly.from_descending(
    [1, -1, 0, 0, 0, -1, 1, 0, 0, -1, 1, -1, 0, 0, 1, -1, 0, 0, 0, -1, 1]
)

# S(1) = -7, S(-1) = 5
DEGREE20_ODD_VALUES = IntPoly.from_descending(
    [1, 0, 0, -1, -1, -1, 0, 0, 0, -1, -1, -1, 0, 0, 0, -1, -1, -1, 0, 0, 1]
)

S3 = sa_polynomial(3)

SMYTH18 = smyth18_polynomial(3)
