# apps/obstruction/graph.py

import logging
from itertools import combinations

from sympy.utilities.iterables import connected_components

from apps.exact_poly.exceptions import NotSymmetric
from apps.exact_poly.models import X_MINUS_ONE, X_PLUS_ONE
from apps.salem.decomposition import decompose_symmetric

from .models import EdgeRule, Exactness, ObstructionEdge, ObstructionGraph, PiStatus
from .pi_sets import linear_pair_holds, pi_set, pi_set_linear

logger = logging.getLogger(__name__)


def _components(count, pairs):
    if not count:
        return []
    components = connected_components((list(range(count)), list(pairs)))
    return sorted(sorted(component) for component in components)


def _candidate_results(decomposition, d_plus, d_minus, seed):
    type1 = [f for f, _ in decomposition.type1]
    for f, g in combinations(type1, 2):
        yield pi_set(f, g, seed)
    for f in type1:
        if decomposition.n_plus:
            yield pi_set_linear(f, 1, decomposition.n_plus, d_plus)
        if decomposition.n_minus:
            yield pi_set_linear(f, -1, decomposition.n_minus, d_minus)


def obstruction_group(F, s_plus, s_minus, seed=0):
    """
    Component structure of the graph on the symmetric irreducible factors
    of F whose edges are the nonempty sets Pi_{f,g}. G_F(D_+, D_-) is the
    quotient of the maps constant on components by the constant maps.
    """
    if F.constant_term != 1:
        raise NotSymmetric(f"{F} must have constant term 1.")
    decomposition = decompose_symmetric(F, seed=seed)
    at_1, at_minus1 = decomposition.f1_values
    d_plus = (-1) ** s_plus * abs(at_1)
    d_minus = (-1) ** s_minus * abs(at_minus1)

    nodes = decomposition.nodes
    index = {node: i for i, node in enumerate(nodes)}
    edges, pending = [], []
    for result in _candidate_results(decomposition, d_plus, d_minus, seed):
        for entry in result.memberships:
            if entry.rule is None:
                continue
            edge = ObstructionEdge(result.f, result.g, entry.prime, entry.rule)
            if entry.status == PiStatus.MEMBER:
                edges.append(edge)
            elif entry.status == PiStatus.INDETERMINATE:
                pending.append(edge)
    if linear_pair_holds(decomposition.n_plus, decomposition.n_minus, d_plus, d_minus):
        edges.append(ObstructionEdge(X_MINUS_ONE, X_PLUS_ONE, 2, EdgeRule.LINEAR_PAIR))

    groups = _components(len(nodes), {(index[e.f], index[e.g]) for e in edges})
    component_of = {i: k for k, group in enumerate(groups) for i in group}
    # an undecided edge only matters if it could merge two components
    indeterminate = tuple(e for e in pending if component_of[index[e.f]] != component_of[index[e.g]])
    exactness = Exactness.LOWER_BOUND_ONLY if indeterminate else Exactness.EXACT
    best_case = _components(len(nodes), {(index[e.f], index[e.g]) for e in edges + list(indeterminate)})
    if indeterminate:
        logger.warning("%d undecided edges in the obstruction graph of %s; the true rank may be smaller", len(indeterminate), F)

    graph = ObstructionGraph(
        nodes=nodes,
        edges=tuple(edges),
        components=tuple(tuple(nodes[i] for i in group) for group in groups),
        gf_rank=max(len(groups) - 1, 0),
        exactness=exactness,
        indeterminate=indeterminate,
        best_case_rank=max(len(best_case) - 1, 0),
        d_plus=d_plus,
        d_minus=d_minus,
    )
    logger.debug("obstruction graph of %s: %d nodes, %d edges, rank %d", F, len(nodes), len(edges), graph.gf_rank)
    return graph
