# apps/modp/galois.py
"""
Bridge between the ascending residue tuples of ``ModPoly`` and the dense
descending lists of ``sympy.polys.galoistools``.

Equal-degree splitting for odd p draws its random polynomials from a
caller-supplied ``random.Random``, so a factorization run is reproducible
from its seed.
"""

import logging

from sympy.polys import galoistools as gt
from sympy.polys.domains import ZZ

logger = logging.getLogger(__name__)


def to_dense(coeffs):
    return gt.gf_strip([ZZ(int(c)) for c in reversed(list(coeffs))])


def from_dense(f):
    return [int(c) for c in reversed(f)]


def gf_reduce(coeffs, p):
    return from_dense(gt.gf_from_int_poly([int(c) for c in reversed(list(coeffs))], p))


def gf_degree(f):
    return len(f) - 1


def gf_mul(f, g, p):
    return from_dense(gt.gf_mul(to_dense(f), to_dense(g), p, ZZ))


def gf_rem(f, g, p):
    return from_dense(gt.gf_rem(to_dense(f), to_dense(g), p, ZZ))


def gf_gcd(f, g, p):
    """Monic gcd."""
    return from_dense(gt.gf_gcd(to_dense(f), to_dense(g), p, ZZ))


def gf_is_irreducible(f, p):
    dense = gt.gf_monic(to_dense(f), p, ZZ)[1]
    if gt.gf_degree(dense) < 1:
        return False
    return gt.gf_irreducible_p(dense, p, ZZ)


def gf_is_symmetric(f, p):
    """h = h(0)^-1 X^deg(h) h(1/X); false when h(0) = 0."""
    f = [int(c) for c in f]
    if not f or not f[0] % p:
        return False
    # the ascending list read as a dense one is X^deg(h) h(1/X)
    reciprocal = gt.gf_quo_ground(to_dense(reversed(f)), ZZ(f[0]), p, ZZ)
    return reciprocal == to_dense(f)


def gf_edf(f, n, p, rng):
    """
    Monic irreducible factors of a monic squarefree dense f whose factors
    all have degree n. Same trials as ``gf_edf_zassenhaus``.
    """
    if p == 2:
        # the characteristic 2 split is deterministic already
        return gt.gf_edf_zassenhaus(f, n, p, ZZ)
    factors = [f]
    if gt.gf_degree(f) <= n:
        return factors
    count = gt.gf_degree(f) // n
    exponent = (p ** n - 1) // 2
    while len(factors) < count:
        r = [ZZ(1)] + [ZZ(rng.randrange(p)) for _ in range(2 * n - 1)]
        h = gt.gf_pow_mod(r, exponent, f, p, ZZ)
        g = gt.gf_gcd(f, gt.gf_sub_ground(h, ZZ(1), p, ZZ), p, ZZ)
        if g != [ZZ(1)] and g != f:
            factors = gf_edf(g, n, p, rng) + gf_edf(gt.gf_quo(f, g, p, ZZ), n, p, rng)
    return factors


def gf_sort_key(f):
    return (gf_degree(f), tuple(reversed(f)))


def gf_factor(f, p, rng):
    """
    Complete factorization of ascending residues: (lc, [(g, k), ...]) with
    monic irreducible g, ascending, in canonical order.
    """
    lc, dense = gt.gf_monic(to_dense(f), p, ZZ)
    if gt.gf_degree(dense) < 1:
        return int(lc), []
    factors = []
    for part, k in gt.gf_sqf_list(list(dense), p, ZZ)[1]:
        for block, n in gt.gf_ddf_zassenhaus(part, p, ZZ):
            factors.extend((from_dense(h), k) for h in gf_edf(block, n, p, rng))
    factors.sort(key=lambda item: gf_sort_key(item[0]))
    logger.debug("factored degree %d polynomial mod %d into %d factors", gt.gf_degree(dense), p, len(factors))
    return int(lc), factors