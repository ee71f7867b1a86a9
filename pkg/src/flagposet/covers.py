"""Maximal-chain transversals: minimal vertex covers, independent sets,
covering number, and brute-force unmixedness.

The transversal enumerator is exact branch-and-bound with a minimality
post-filter; it is meant for desk-scale inputs and raises BudgetExceeded
rather than truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded
from .posets import GradedPoset, maximal_chains

DEFAULT_COVER_BUDGET = 24


@dataclass(frozen=True)
class VertexCover:
    cover: frozenset[str]
    minimal: bool


@dataclass(frozen=True)
class IndependentSet:
    elements: frozenset[str]


def minimal_transversals(edges: Iterable[frozenset],
                         universe: Sequence[str],
                         budget: int = DEFAULT_COVER_BUDGET) -> list[frozenset]:
    """All inclusion-minimal sets meeting every hyperedge.

    Hyperedges are processed smallest first; at an unmet edge the search
    branches on its vertices in universe order.  Every minimal
    transversal is generated (possibly alongside non-minimal ones, which
    the post-filter removes).  An empty hyperedge is unsatisfiable.
    """
    if len(universe) > budget:
        raise BudgetExceeded(
            f"transversal enumeration limited to {budget} vertices")
    order = {v: i for i, v in enumerate(universe)}
    edge_list = sorted({frozenset(e) for e in edges},
                       key=lambda e: (len(e), sorted(order[v] for v in e)))
    if any(not e for e in edge_list):
        return []
    found: set[frozenset] = set()

    def rec(i: int, chosen: frozenset) -> None:
        if i == len(edge_list):
            found.add(chosen)
            return
        e = edge_list[i]
        if e & chosen:
            rec(i + 1, chosen)
            return
        for v in sorted(e, key=order.get):
            rec(i + 1, chosen | {v})

    rec(0, frozenset())
    by_size = sorted(found, key=len)
    minimal: list[frozenset] = []
    for c in by_size:
        if not any(m < c for m in minimal):
            minimal.append(c)
    minimal.sort(key=lambda c: (len(c), sorted(order[v] for v in c)))
    return minimal


def _chain_sets(g: GradedPoset) -> list[frozenset]:
    return [frozenset(c.elements) for c in maximal_chains(g)]


def is_vertex_cover(g: GradedPoset, candidate: Iterable[str]) -> bool:
    cset = set(candidate)
    return all(cset & c for c in _chain_sets(g))


def minimal_vertex_covers(g: GradedPoset,
                          budget: int = DEFAULT_COVER_BUDGET) -> list[VertexCover]:
    """All minimal transversals of the maximal-chain hypergraph."""
    covers = minimal_transversals(_chain_sets(g), g.elements, budget)
    return [VertexCover(c, minimal=True) for c in covers]


def covering_number(g: GradedPoset,
                    budget: int = DEFAULT_COVER_BUDGET) -> int:
    covers = minimal_vertex_covers(g, budget)
    return min((len(c.cover) for c in covers), default=0)


def height(g: GradedPoset, budget: int = DEFAULT_COVER_BUDGET) -> int:
    """Height of the flag ideal = vertex covering number."""
    return covering_number(g, budget)


def krull_dim(g: GradedPoset, budget: int = DEFAULT_COVER_BUDGET) -> int:
    """Krull dimension of the quotient = |P| - covering number."""
    return len(g) - covering_number(g, budget)


def is_unmixed_bruteforce(g: GradedPoset,
                          budget: int = DEFAULT_COVER_BUDGET) -> bool:
    """True iff all minimal vertex covers share one cardinality."""
    sizes = {len(c.cover) for c in minimal_vertex_covers(g, budget)}
    return len(sizes) <= 1


def maximal_independent_sets(g: GradedPoset,
                             budget: int = DEFAULT_COVER_BUDGET) -> list[IndependentSet]:
    """Complements of the minimal vertex covers."""
    universe = frozenset(g.elements)
    return [IndependentSet(universe - c.cover)
            for c in minimal_vertex_covers(g, budget)]
