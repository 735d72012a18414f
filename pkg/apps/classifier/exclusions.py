# apps/classifier/exclusions.py

from apps.cyclotomic.polynomials import phi_m
from apps.exact_poly.arithmetic import resultant
from apps.local_conditions.conditions import is_square

from .exceptions import DegreeMismatch
from .models import ProjectiveVerdict

SPLITTING_ORDERS = (3, 4, 6, 12)
SPLITTING_FACTORS = frozenset((1, 2, 3, 4, 6))


def _unit_values_and_resultants(S):
    if abs(S(1) * S(-1)) != 1:
        return False
    return all(abs(resultant(S, phi_m(m))) == 1 for m in SPLITTING_ORDERS)


def exclude_any_realization_deg18(S):
    """
    With |S(1)S(-1)| = 1 and Res(S, Phi_m) = +-1 for m = 3, 4, 6, 12 the
    Salem number of S is not the dynamical degree of any K3 automorphism.
    """
    if S.degree != 18:
        raise DegreeMismatch(S.degree, 18)
    if _unit_values_and_resultants(S):
        return ProjectiveVerdict.EXCLUDED
    return ProjectiveVerdict.NOT_EXCLUDED


def exclude_projective_deg20(S):
    if S.degree != 20:
        raise DegreeMismatch(S.degree, 20)
    at_1, at_minus1 = abs(S(1)), S(-1)
    if is_square(at_minus1) or is_square(at_1):
        return ProjectiveVerdict.NOT_EXCLUDED
    if at_1 % 2 == 0 and at_minus1 % 2 == 0 and is_square(at_1 // 2) and is_square(at_minus1 // 2):
        return ProjectiveVerdict.NOT_EXCLUDED
    return ProjectiveVerdict.EXCLUDED


def splitting_check(S, C):
    """Whether the lattice of S * C is forced to split orthogonally into its S and C parts."""
    return _unit_values_and_resultants(S) and all(m in SPLITTING_FACTORS for m, _ in C.parts)
