"""Squarefree monomial ideals.

Monomials are variable subsets (every ideal in scope is squarefree), and
an ideal is its minimal generating antichain over an ordered variable
list.  Includes flag ideals and partial flag ideals of graded posets,
Alexander duality, variable evaluation, the weakly-polymatroidal and
linear-quotients checks, letterplace and co-letterplace generators, and
the filtration correspondence attached to chain-decomposition
certificates of Cohen-Macaulay posets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .covers import DEFAULT_COVER_BUDGET, minimal_transversals
from .errors import (
    BudgetExceeded,
    InvalidCertificate,
    InvalidParameter,
    NotAVPoset,
    NotEquigenerated,
    UnitIdeal,
    UnknownVariable,
)
from .posets import GradedPoset, Poset, maximal_chains, rank_selection

DEFAULT_QUOTIENT_BUDGET = 20000


def minimalize(generators: Iterable[frozenset]) -> list[frozenset]:
    """Drop generators that contain another generator."""
    gens = sorted(set(frozenset(g) for g in generators), key=len)
    out: list[frozenset] = []
    for g in gens:
        if not any(m <= g for m in out):
            out.append(g)
    return out


class SquarefreeIdeal:
    """Minimal generating set of a squarefree monomial ideal."""

    __slots__ = ("variables", "generators")

    def __init__(self, variables: Sequence[str], generators: Iterable):
        variables = tuple(variables)
        vset = set(variables)
        if len(vset) != len(variables):
            raise InvalidParameter("duplicate variable")
        gens = [frozenset(g) for g in generators]
        index = {v: i for i, v in enumerate(variables)}
        for g in gens:
            if not g:
                raise InvalidParameter("empty generator")
            if not g <= vset:
                raise UnknownVariable(
                    f"generator {sorted(g)} uses unknown variables")
        gens = sorted(set(gens),
                      key=lambda g: (len(g), sorted(index[v] for v in g)))
        for i, g in enumerate(gens):
            for h in gens[:i]:
                if h <= g:
                    raise InvalidParameter(
                        "generators must be inclusion-incomparable")
        self.variables = variables
        self.generators = tuple(gens)

    @classmethod
    def from_generators(cls, variables: Sequence[str],
                        generators: Iterable) -> "SquarefreeIdeal":
        """Build after minimalizing the generating set."""
        return cls(variables, minimalize(frozenset(g) for g in generators))

    def degrees(self) -> set[int]:
        return {len(g) for g in self.generators}

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) <= 1

    def generator_degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise NotEquigenerated(f"generator degrees {sorted(degs)}")
        return degs.pop()

    def __eq__(self, other) -> bool:
        return (isinstance(other, SquarefreeIdeal)
                and set(self.variables) == set(other.variables)
                and set(self.generators) == set(other.generators))

    def __hash__(self) -> int:
        return hash((frozenset(self.variables), frozenset(self.generators)))

    def __repr__(self) -> str:
        return (f"SquarefreeIdeal({len(self.variables)} variables, "
                f"{len(self.generators)} generators)")

    def to_json(self) -> str:
        return json.dumps({
            "variables": list(self.variables),
            "generators": [sorted(g) for g in self.generators],
        })

    @classmethod
    def from_json(cls, text: str) -> "SquarefreeIdeal":
        data = json.loads(text)
        return cls(data["variables"], [frozenset(g) for g in data["generators"]])


def flag_ideal(g: GradedPoset) -> SquarefreeIdeal:
    """Generators are the supports of the maximal chains; distinct
    maximal chains are automatically inclusion-incomparable."""
    return SquarefreeIdeal(g.elements,
                           [frozenset(c.elements) for c in maximal_chains(g)])


def partial_flag_ideal(g: GradedPoset, ranks) -> SquarefreeIdeal:
    """Flag ideal of the rank selection, keeping original variable ids."""
    return flag_ideal(rank_selection(g, ranks))


def alexander_dual(ideal: SquarefreeIdeal,
                   budget: int = DEFAULT_COVER_BUDGET) -> SquarefreeIdeal:
    """Generators are the minimal transversals of the generator supports;
    an involution on minimally generated squarefree ideals."""
    if not ideal.generators:
        raise InvalidParameter("Alexander dual of the zero ideal")
    duals = minimal_transversals(ideal.generators, ideal.variables, budget)
    return SquarefreeIdeal(ideal.variables, duals)


def evaluate_to_one(ideal: SquarefreeIdeal, variable: str) -> SquarefreeIdeal:
    """Set one variable to 1: drop it from every generator and from the
    ring, then re-minimalize.  Raises UnitIdeal if a generator empties."""
    if variable not in ideal.variables:
        raise UnknownVariable(f"unknown variable: {variable}")
    new_gens = []
    for g in ideal.generators:
        h = g - {variable}
        if not h:
            raise UnitIdeal(
                f"evaluating {variable}=1 turns a generator into 1")
        new_gens.append(h)
    variables = tuple(v for v in ideal.variables if v != variable)
    return SquarefreeIdeal(variables, minimalize(new_gens))


def is_weakly_polymatroidal(ideal: SquarefreeIdeal,
                            variable_order: Sequence[str]) -> bool:
    """Exchange check for an equigenerated squarefree ideal.

    ``variable_order`` lists the variables from first to last.  For any
    two generators whose first differing variable t lies in m1 only,
    some later variable s of m2 must satisfy m2 - s + t in G(I).
    """
    ideal.generator_degree()
    order = list(variable_order)
    if sorted(order) != sorted(ideal.variables):
        raise InvalidParameter("variable_order must list every variable once")
    gens = set(ideal.generators)
    for m1 in ideal.generators:
        for m2 in ideal.generators:
            if m1 == m2:
                continue
            t_pos = None
            for pos, v in enumerate(order):
                in1, in2 = v in m1, v in m2
                if in1 != in2:
                    if in1:
                        t_pos = pos
                    break
            if t_pos is None:
                continue
            t = order[t_pos]
            if not any(s in m2 and (m2 - {s}) | {t} in gens
                       for s in order[t_pos + 1:]):
                return False
    return True


def has_linear_quotients(ideal: SquarefreeIdeal,
                         budget: int = DEFAULT_QUOTIENT_BUDGET) -> list[frozenset] | None:
    """An ordering with linear colon ideals, or None.

    Greedy on overlap with the previous generator, with full backtracking
    under a node budget.
    """
    ideal.generator_degree()
    gens = list(ideal.generators)
    if len(gens) <= 1:
        return gens

    def colon_linear(prefix: list[frozenset], g: frozenset) -> bool:
        # (prefix) : g is variable-generated iff each difference p - g
        # contains a singleton difference q - g.
        diffs = [p - g for p in prefix]
        singles = [d for d in diffs if len(d) == 1]
        return all(any(s <= d for s in singles) for d in diffs)

    nodes = 0

    def search(prefix: list[frozenset], remaining: list[frozenset]):
        nonlocal nodes
        if not remaining:
            return list(prefix)
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("linear-quotients search budget exhausted")
        last = prefix[-1] if prefix else frozenset()
        candidates = sorted(remaining, key=lambda g: -len(g & last))
        for g in candidates:
            if prefix and not colon_linear(prefix, g):
                continue
            rest = [h for h in remaining if h != g]
            found = search(prefix + [g], rest)
            if found is not None:
                return found
        return None

    return search([], gens)


def letterplace_generators(n: int, q: Poset | GradedPoset) -> SquarefreeIdeal:
    """Length-n multichains of Q, one generator x{i}_{q_i} per multichain,
    enumerated directly."""
    if n < 1:
        raise InvalidParameter("letterplace needs n >= 1")
    qp = q.poset if isinstance(q, GradedPoset) else q
    variables = tuple(f"x{i}_{a}" for i in range(1, n + 1) for a in qp.elements)
    gens: list[frozenset] = []
    stack: list[str] = []

    def extend(i: int, last: str | None) -> None:
        if i > n:
            gens.append(frozenset(f"x{k}_{a}"
                                  for k, a in enumerate(stack, start=1)))
            return
        for a in qp.elements:
            if last is None or qp.leq(last, a):
                stack.append(a)
                extend(i + 1, a)
                stack.pop()

    extend(1, None)
    return SquarefreeIdeal(variables, gens)


def _v_poset_chains(q: Poset) -> tuple[str, list[str], list[str]]:
    """Split a V poset into (root, first leg, second leg)."""
    minimals = q.minimal_elements()
    if len(minimals) != 1:
        raise NotAVPoset("need a unique minimal element")
    chains = maximal_chains(q)
    if len(chains) != 2:
        raise NotAVPoset("need exactly two maximal chains")
    c1, c2 = chains[0].elements, chains[1].elements
    root = minimals[0]
    if c1[0] != root or c2[0] != root:
        raise NotAVPoset("both maximal chains must start at the root")
    legs = (list(c1[1:]), list(c2[1:]))
    if set(legs[0]) & set(legs[1]) or len(q) != 1 + len(legs[0]) + len(legs[1]):
        raise NotAVPoset("legs must be disjoint and cover the poset")
    return root, legs[0], legs[1]


def v_coletterplace_generators(q: Poset | GradedPoset, n: int) -> SquarefreeIdeal:
    """Graphs of isotone maps from a V poset to [n], one generator
    x{q}_{phi(q)} per map."""
    if n < 1:
        raise InvalidParameter("co-letterplace needs n >= 1")
    qp = q.poset if isinstance(q, GradedPoset) else q
    root, leg_b, leg_c = _v_poset_chains(qp)
    variables = tuple(f"x{e}_{i}" for e in qp.elements for i in range(1, n + 1))
    gens = []
    for r0 in range(1, n + 1):
        for bvals in _monotone_tuples(r0, n, len(leg_b)):
            for cvals in _monotone_tuples(r0, n, len(leg_c)):
                phi = {root: r0}
                phi.update(zip(leg_b, bvals))
                phi.update(zip(leg_c, cvals))
                gens.append(frozenset(f"x{e}_{phi[e]}" for e in qp.elements))
    return SquarefreeIdeal(variables, gens)


def _monotone_tuples(lo: int, hi: int, length: int):
    """Nondecreasing tuples of the given length with entries in lo..hi."""
    if length == 0:
        yield ()
        return
    for v in range(lo, hi + 1):
        for rest in _monotone_tuples(v, hi, length - 1):
            yield (v,) + rest


# ---------------------------------------------------------------------------
# Filtrations attached to a chain-decomposition certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Filtration:
    """Nested chain-label sets J_1 >= J_2 >= ... >= J_r (0-based labels),
    each J_i up-closed in the layer relation between ranks i-1 and i."""

    levels: tuple[frozenset[int], ...]

    def exit_rank(self, label: int) -> int:
        return max(i + 1 for i, level in enumerate(self.levels)
                   if label in level)


def _validate_certificate(cert) -> tuple[GradedPoset, tuple[tuple[str, ...], ...]]:
    g = getattr(cert, "graded", None)
    chains = getattr(cert, "chains", None)
    if not isinstance(g, GradedPoset) or chains is None:
        raise InvalidCertificate("need a chain-decomposition certificate")
    seen: set[str] = set()
    maxes = set(g.poset.maximal_elements())
    for c in chains:
        if not c:
            raise InvalidCertificate("empty chain")
        if g.rank[c[0]] != 1:
            raise InvalidCertificate(f"chain must start at rank 1: {c}")
        if c[-1] not in maxes:
            raise InvalidCertificate(f"chain must end at a maximal element: {c}")
        for a, b in zip(c, c[1:]):
            if not g.poset.is_cover(a, b):
                raise InvalidCertificate(f"chain not saturated at {a} < {b}")
        for e in c:
            if e in seen:
                raise InvalidCertificate(f"chains overlap at {e}")
            seen.add(e)
    if seen != set(g.elements):
        raise InvalidCertificate("chains must cover the poset")
    return g, tuple(tuple(c) for c in chains)


def _layer_relation(g: GradedPoset, chains, i: int) -> tuple[list[int], dict]:
    """Ground labels alive at rank i and the relation k <= j given by a
    cover from chain k's rank-(i-1) element to chain j's rank-i element."""
    ground = [u for u, c in enumerate(chains) if len(c) >= i]
    rel = {u: set() for u in ground}
    for j in ground:
        for k in ground:
            if k == j:
                rel[k].add(j)
            elif g.poset.is_cover(chains[k][i - 2], chains[j][i - 1]):
                rel[k].add(j)
    return ground, rel


def filtrations(cert) -> list[Filtration]:
    """All level filtrations of a chain-decomposed poset.

    Level 1 contains every chain label; level i must be a subset of
    level i-1, live on chains of length >= i, and be up-closed in the
    layer relation between ranks i-1 and i.
    """
    g, chains = _validate_certificate(cert)
    r = g.rbar()
    labels = frozenset(range(len(chains)))
    if r == 0:
        return []
    results: list[Filtration] = []
    grounds = {}
    rels = {}
    for i in range(2, r + 1):
        grounds[i], rels[i] = _layer_relation(g, chains, i)

    def descend(i: int, prefix: list[frozenset[int]]) -> None:
        if i > r:
            results.append(Filtration(tuple(prefix)))
            return
        pool = sorted(set(prefix[-1]) & set(grounds[i]))
        for bits in range(1 << len(pool)):
            subset = frozenset(pool[k] for k in range(len(pool))
                               if (bits >> k) & 1)
            rel = rels[i]
            if all(rel[k] <= subset for k in subset):
                descend(i + 1, prefix + [subset])

    descend(2, [labels])
    results.sort(key=lambda f: tuple(sorted(level) for level in f.levels))
    return results


def filtration_to_monomial(filt: Filtration, cert) -> frozenset[str]:
    """The vertex cover picking, on each chain, the element at the
    chain's exit rank."""
    _, chains = _validate_certificate(cert)
    return frozenset(chains[u][filt.exit_rank(u) - 1]
                     for u in range(len(chains)))


def dual_variable_order(cert) -> tuple[str, ...]:
    """Variable order under which the Alexander dual of a chain-
    decomposed Cohen-Macaulay poset is weakly polymatroidal: later
    chain first, higher rank first within a chain.

    The chain index is the primary key.  The exchange that witnesses
    the property swaps two elements of one chain, moving the cover
    element up in rank, so the swapped-out variable must come later in
    the order than the swapped-in one whenever both sit on the same
    chain; ordering by rank first instead breaks the exchange on
    impure posets (a higher-rank element of an earlier chain would be
    scanned before lower-rank elements of later chains)."""
    g, chains = _validate_certificate(cert)
    position = {}
    for u, c in enumerate(chains):
        for e in c:
            position[e] = (-u, -g.rank[e])
    return tuple(sorted(g.elements, key=lambda e: position[e]))
