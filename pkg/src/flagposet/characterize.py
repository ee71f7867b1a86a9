"""Structural characterizations with certificates.

Unmixedness and Cohen-Macaulayness of a graded poset's flag ideal are
decided through chain decompositions: per-layer perfect matchings
between the non-maximal rank-i elements and rank i+1 compose into
disjoint maximal chains covering the poset.  On top of the
decomposition, two recombination conditions on pairs of saturated
chains decide unmixedness, and the existence of a chain labeling
monotone along covers decides Cohen-Macaulayness.

The recombination conditions are decomposition-independent once the
matchings exist (if they hold for one decomposition the poset is
unmixed, and an unmixed poset satisfies them for every decomposition),
so they are checked once; only the labeling condition is searched over
decompositions.

Everything here is pure and deterministic; verdicts carry either a
certificate (when true) or a concrete witness (when false).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceeded, InvalidCertificate
from .posets import (
    DEFAULT_ISO_BUDGET,
    BipartiteLayer,
    GradedPoset,
    Poset,
    are_isomorphic,
    connected_components,
    hom_rt_poset,
    layer_pair,
    rank_function,
    rank_selection,
)

DEFAULT_CHAIN_PAIRS = 200000
DEFAULT_MATCHING_NODES = 20000


@dataclass(frozen=True)
class ChainDecomposition:
    """Disjoint saturated chains, each from a rank-1 element up to a
    maximal element, jointly covering the poset; the tuple order is the
    chain labeling."""

    graded: GradedPoset
    chains: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        g = self.graded
        seen: set[str] = set()
        maxes = set(g.poset.maximal_elements())
        for c in self.chains:
            if not c:
                raise InvalidCertificate("empty chain")
            if g.rank[c[0]] != 1:
                raise InvalidCertificate(f"chain must start at rank 1: {c}")
            if c[-1] not in maxes:
                raise InvalidCertificate(
                    f"chain must end at a maximal element: {c}")
            for a, b in zip(c, c[1:]):
                if not g.poset.is_cover(a, b):
                    raise InvalidCertificate(f"not saturated: {a} < {b}")
            for e in c:
                if e in seen:
                    raise InvalidCertificate(f"chains overlap at {e}")
                seen.add(e)
        if seen != set(g.elements):
            raise InvalidCertificate("chains must cover the poset")

    def rank_ordering(self, i: int) -> tuple[str, ...]:
        """Rank-i elements in chain-label order."""
        return tuple(c[i - 1] for c in self.chains if len(c) >= i)


@dataclass(frozen=True)
class Verdict:
    """Boolean answer plus a certificate (true) or witness (false)."""

    value: bool
    certificate: object = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.value


# ---------------------------------------------------------------------------
# Chain decompositions via per-layer matchings
# ---------------------------------------------------------------------------

def _layer_adjacency(g: GradedPoset, i: int) -> tuple[tuple[str, ...], tuple[str, ...], dict]:
    """Tops (rank i+1), trimmed bottoms (non-maximal rank i), and the
    parents-in-bottom adjacency of each top."""
    bottom = g.trimmed_layer(i)
    top = g.layer(i + 1)
    bset = set(bottom)
    adj = {t: tuple(p for p in g.poset.parents(t) if p in bset) for t in top}
    return top, bottom, adj


def _kuhn_perfect_matching(top, bottom, adj) -> dict[str, str] | None:
    """A matching of every top vertex into distinct bottoms, or None."""
    if len(top) != len(bottom):
        return None
    match_b: dict[str, str] = {}

    def augment(t: str, visited: set[str]) -> bool:
        for b in adj[t]:
            if b in visited:
                continue
            visited.add(b)
            if b not in match_b or augment(match_b[b], visited):
                match_b[b] = t
                return True
        return False

    for t in top:
        if not augment(t, set()):
            return None
    return {t: b for b, t in match_b.items()}


def _perfect_matchings_iter(top, bottom, adj) -> Iterator[dict[str, str]]:
    """All perfect matchings, tops assigned in order, bottoms tried in
    adjacency order."""
    if len(top) != len(bottom):
        return
    used: set[str] = set()
    acc: dict[str, str] = {}

    def rec(k: int) -> Iterator[dict[str, str]]:
        if k == len(top):
            yield dict(acc)
            return
        t = top[k]
        for b in adj[t]:
            if b in used:
                continue
            used.add(b)
            acc[t] = b
            yield from rec(k + 1)
            del acc[t]
            used.discard(b)

    yield from rec(0)


def _assemble_chains(g: GradedPoset,
                     matchings: list[dict[str, str]]) -> tuple[tuple[str, ...], ...]:
    inverse = [{b: t for t, b in m.items()} for m in matchings]
    chains = []
    for e in g.layer(1) if g.rbar() >= 1 else ():
        c = [e]
        i = 1
        while i <= len(inverse) and c[-1] in inverse[i - 1]:
            c.append(inverse[i - 1][c[-1]])
            i += 1
        chains.append(tuple(c))
    return tuple(chains)


def _first_decomposition(g: GradedPoset) -> tuple[tuple[tuple[str, ...], ...] | None, int]:
    """One chain decomposition, or (None, offending layer index)."""
    matchings = []
    for i in range(1, g.rbar()):
        top, bottom, adj = _layer_adjacency(g, i)
        m = _kuhn_perfect_matching(top, bottom, adj)
        if m is None:
            return None, i
        matchings.append(m)
    return _assemble_chains(g, matchings), 0


def _all_decompositions(g: GradedPoset) -> Iterator[tuple[tuple[str, ...], ...]]:
    layers = [_layer_adjacency(g, i) for i in range(1, g.rbar())]

    def rec(i: int, acc: list[dict[str, str]]) -> Iterator[tuple[tuple[str, ...], ...]]:
        if i == len(layers):
            yield _assemble_chains(g, acc)
            return
        top, bottom, adj = layers[i]
        for m in _perfect_matchings_iter(top, bottom, adj):
            yield from rec(i + 1, acc + [m])

    yield from rec(0, [])


# ---------------------------------------------------------------------------
# Recombination conditions on chain pairs
# ---------------------------------------------------------------------------

class _PairBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(
                f"chain-pair enumeration exceeded {self.limit}")


def _chains_down(g: GradedPoset, top: str, steps: int) -> list[tuple[str, ...]]:
    """Saturated chains with ``steps`` covers ending at ``top``."""
    out: list[tuple[str, ...]] = []
    stack = [top]

    def rec(e: str, k: int) -> None:
        if k == 0:
            out.append(tuple(reversed(stack)))
            return
        for p in g.poset.parents(e):
            stack.append(p)
            rec(p, k - 1)
            stack.pop()

    rec(top, steps)
    return out


def _chains_up(g: GradedPoset, bottom: str, steps: int,
               target: str | None = None) -> list[tuple[str, ...]]:
    """Saturated chains with ``steps`` covers starting at ``bottom``,
    optionally forced to end at ``target``."""
    out: list[tuple[str, ...]] = []
    stack = [bottom]

    def rec(e: str, k: int) -> None:
        if k == 0:
            if target is None or e == target:
                out.append(tuple(stack))
            return
        for c in g.poset.children(e):
            if target is not None and not g.poset.leq(c, target):
                continue
            stack.append(c)
            rec(c, k - 1)
            stack.pop()

    rec(bottom, steps)
    return out


def _recombines(g: GradedPoset, start: str, c1: tuple[str, ...],
                c2: tuple[str, ...], end: str, span: int) -> bool:
    """Is there a saturated chain start < ... < end whose intermediate
    element at each level comes from c1 or c2?"""
    reach = {start}
    for level in range(1, span):
        candidates = {c1[level], c2[level]}
        reach = {y for y in candidates
                 if any(g.poset.is_cover(x, y) for x in reach)}
        if not reach:
            return False
    return any(g.poset.is_cover(x, end) for x in reach)


def _condition3(g: GradedPoset, chains, budget: _PairBudget,
                weak: bool) -> tuple[bool, dict | None]:
    for chain in chains:
        for i in range(1, len(chain) + 1):
            for j in range(i + 1, len(chain) + 1):
                down = _chains_down(g, chain[j - 1], j - i)
                up = _chains_up(g, chain[i - 1], j - i)
                for c1 in down:
                    for c2 in up:
                        budget.tick()
                        start, end = c1[0], c2[-1]
                        if weak:
                            ok = g.poset.less(start, end)
                        else:
                            ok = _recombines(g, start, c1, c2, end, j - i)
                        if not ok:
                            return False, {"through": chain,
                                           "chain1": list(c1),
                                           "chain2": list(c2)}
    return True, None


def _condition4(g: GradedPoset, chains, budget: _PairBudget,
                weak: bool) -> tuple[bool, dict | None]:
    maxes_by_rank: dict[int, list[str]] = {}
    for e in g.poset.maximal_elements():
        maxes_by_rank.setdefault(g.rank[e], []).append(e)
    for chain in chains:
        for i in range(1, len(chain) - 1):
            for k in range(i + 2, len(chain) + 1):
                down = _chains_down(g, chain[k - 1], k - i)
                for j in range(i + 1, k):
                    for w in maxes_by_rank.get(j, ()):
                        up = _chains_up(g, chain[i - 1], j - i, target=w)
                        for c1 in down:
                            for c2 in up:
                                budget.tick()
                                start = c1[0]
                                if weak:
                                    ok = g.poset.less(start, w)
                                else:
                                    ok = _recombines(g, start, c1, c2, w,
                                                     j - i)
                                if not ok:
                                    return False, {"through": chain,
                                                   "chain1": list(c1),
                                                   "chain2": list(c2),
                                                   "maximal": w}
    return True, None


# ---------------------------------------------------------------------------
# Unmixedness and Cohen-Macaulayness
# ---------------------------------------------------------------------------

def check_unmixed_structural(g: GradedPoset,
                             chain_pairs: int = DEFAULT_CHAIN_PAIRS) -> Verdict:
    """Unmixedness via layer sizes, per-layer perfect matchings, and the
    two recombination conditions."""
    sizes = g.layer_sizes()
    for i in range(len(sizes) - 1):
        if sizes[i] < sizes[i + 1]:
            return Verdict(False, witness={"condition": 1,
                                           "layer_sizes": list(sizes)})
    chains, bad = _first_decomposition(g)
    if chains is None:
        return Verdict(False, witness={"condition": 2, "layer": bad})
    budget = _PairBudget(chain_pairs)
    ok, wit = _condition3(g, chains, budget, weak=False)
    if not ok:
        return Verdict(False, witness={"condition": 3, **wit})
    ok, wit = _condition4(g, chains, budget, weak=False)
    if not ok:
        return Verdict(False, witness={"condition": 4, **wit})
    ordered = tuple(sorted(chains, key=lambda c: (-len(c),
                                                  g.poset.index(c[0]))))
    return Verdict(True, certificate=ChainDecomposition(g, ordered))


def check_weak_conditions(g: GradedPoset,
                          chain_pairs: int = DEFAULT_CHAIN_PAIRS) -> tuple[bool, bool]:
    """The weakened recombination conditions: the recombined chain may
    run anywhere in the poset.  Vacuously true when no chain
    decomposition exists."""
    chains, _ = _first_decomposition(g)
    if chains is None:
        return True, True
    budget = _PairBudget(chain_pairs)
    ok3, _ = _condition3(g, chains, budget, weak=True)
    ok4, _ = _condition4(g, chains, budget, weak=True)
    return ok3, ok4


def _label_order(g: GradedPoset, chains) -> list[int] | None:
    """Topological order of the chain constraint digraph (an edge u -> v
    for each cover from chain u into chain v), or None on a cycle."""
    tid = {}
    for u, c in enumerate(chains):
        for e in c:
            tid[e] = u
    n = len(chains)
    succ: list[set[int]] = [set() for _ in range(n)]
    indeg = [0] * n
    for p, q in g.covers:
        u, v = tid[p], tid[q]
        if u != v and v not in succ[u]:
            succ[u].add(v)
            indeg[v] += 1
    order = []
    ready = sorted(u for u in range(n) if indeg[u] == 0)
    while ready:
        u = ready.pop(0)
        order.append(u)
        for v in sorted(succ[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
        ready.sort()
    if len(order) != n:
        return None
    return order


def check_cm_structural(g: GradedPoset,
                        matching_nodes: int = DEFAULT_MATCHING_NODES,
                        chain_pairs: int = DEFAULT_CHAIN_PAIRS) -> Verdict:
    """Cohen-Macaulayness: equal counts of minimal and maximal elements,
    a chain decomposition, the recombination conditions, and a chain
    labeling that is monotone along covers for some decomposition."""
    if not g.elements:
        return Verdict(True, certificate=ChainDecomposition(g, ()))
    p1 = len(g.layer(1))
    nmax = len(g.poset.maximal_elements())
    if p1 != nmax:
        return Verdict(False, witness={"condition": 1,
                                       "minimal": p1, "maximal": nmax})
    chains, bad = _first_decomposition(g)
    if chains is None:
        return Verdict(False, witness={"condition": 2, "layer": bad})
    budget = _PairBudget(chain_pairs)
    ok, wit = _condition3(g, chains, budget, weak=False)
    if not ok:
        return Verdict(False, witness={"condition": 3, **wit})
    ok, wit = _condition4(g, chains, budget, weak=False)
    if not ok:
        return Verdict(False, witness={"condition": 4, **wit})
    tried = 0
    for candidate in _all_decompositions(g):
        tried += 1
        if tried > matching_nodes:
            raise BudgetExceeded(
                f"decomposition search exceeded {matching_nodes} nodes")
        order = _label_order(g, candidate)
        if order is not None:
            ordered = tuple(candidate[u] for u in order)
            return Verdict(True, certificate=ChainDecomposition(g, ordered))
    return Verdict(False, witness={
        "condition": 5,
        "decompositions_tried": tried,
        "note": "every chain labeling has a cover running downward"})


# ---------------------------------------------------------------------------
# Ferrers layers and linear resolutions
# ---------------------------------------------------------------------------

def has_2k2(layer: BipartiteLayer) -> tuple[str, str, str, str] | None:
    """Two disjoint edges with no cross edges, or None."""
    edges = sorted(layer.edges)
    for idx, (a1, b1) in enumerate(edges):
        for a2, b2 in edges[idx + 1:]:
            if a1 == a2 or b1 == b2:
                continue
            if (a1, b2) in layer.edges or (a2, b1) in layer.edges:
                continue
            return (a1, b1, a2, b2)
    return None


def is_ferrers(layer: BipartiteLayer) -> Verdict:
    """Staircase recognition: no isolated vertices, and neighborhoods on
    both sides totally ordered by inclusion after a degree sort.  The
    certificate is the pair of staircase orderings; the witness is an
    isolated vertex or an induced pair of disjoint edges."""
    if not layer.bottom and not layer.top:
        return Verdict(True, certificate={"rows": [], "cols": []})
    nb = {a: frozenset(layer.neighbors_bottom(a)) for a in layer.bottom}
    nt = {b: frozenset(layer.neighbors_top(b)) for b in layer.top}
    for v in layer.bottom:
        if not nb[v]:
            return Verdict(False, witness={"isolated_vertex": v})
    for v in layer.top:
        if not nt[v]:
            return Verdict(False, witness={"isolated_vertex": v})

    def staircase(side, hoods):
        pos = {v: i for i, v in enumerate(side)}
        order = sorted(side, key=lambda v: (-len(hoods[v]), pos[v]))
        for x, y in zip(order, order[1:]):
            if not hoods[y] <= hoods[x]:
                q2 = min(hoods[y] - hoods[x])
                q1 = min(hoods[x] - hoods[y])
                return None, (x, q1, y, q2)
        return order, None

    rows, viol = staircase(layer.bottom, nb)
    if rows is None:
        x, q1, y, q2 = viol
        return Verdict(False, witness={"two_disjoint_edges":
                                       (x, q1, y, q2)})
    cols, viol = staircase(layer.top, nt)
    if cols is None:
        b1, a1, b2, a2 = viol
        return Verdict(False, witness={"two_disjoint_edges":
                                       (a1, b1, a2, b2)})
    return Verdict(True, certificate={"rows": list(rows),
                                      "cols": list(cols)})


def has_linear_resolution_structural(g: GradedPoset) -> Verdict:
    """Pure, and every consecutive-rank layer is a Ferrers graph."""
    if not g.elements:
        return Verdict(True, certificate={"layers": []})
    if not g.is_pure():
        ranks = sorted({g.rank[e] for e in g.poset.maximal_elements()})
        return Verdict(False, witness={"impure": {"maximal_ranks": ranks}})
    layers = []
    for i in range(1, g.rbar()):
        verdict = is_ferrers(layer_pair(g, i, trim=False))
        if not verdict.value:
            return Verdict(False, witness={"layer": i, **verdict.witness})
        layers.append({"layer": i, **verdict.certificate})
    return Verdict(True, certificate={"layers": layers})


def is_bi_cm(g: GradedPoset,
             iso_budget: int = DEFAULT_ISO_BUDGET,
             matching_nodes: int = DEFAULT_MATCHING_NODES,
             chain_pairs: int = DEFAULT_CHAIN_PAIRS) -> Verdict:
    """Cohen-Macaulay with a linear resolution; when true the poset is
    matched against the two-chain letterplace grid of its dimensions and
    the isomorphism is part of the certificate."""
    cm = check_cm_structural(g, matching_nodes, chain_pairs)
    if not cm.value:
        return Verdict(False, witness={"not_cm": cm.witness})
    lr = has_linear_resolution_structural(g)
    if not lr.value:
        return Verdict(False, witness={"no_linear_resolution": lr.witness})
    if not g.elements:
        return Verdict(True, certificate={"hom_parameters": None,
                                          "isomorphism": {}})
    r, t = g.rbar(), len(g.layer(1))
    iso = are_isomorphic(g.poset, hom_rt_poset(r, t).poset, budget=iso_budget)
    return Verdict(True, certificate={"hom_parameters": (r, t),
                                      "isomorphism": iso,
                                      "chains": cm.certificate.chains,
                                      "staircases": lr.certificate})


def herzog_hibi_bipartite_cm(layer: BipartiteLayer) -> Verdict:
    """Cohen-Macaulay bipartite graphs: equal sides and a labeling with
    a perfect matching whose induced relation (i <= j iff edge a_i b_j)
    is a partial order."""
    if len(layer.bottom) != len(layer.top):
        return Verdict(False, witness={"sizes": (len(layer.bottom),
                                                 len(layer.top))})
    if not layer.bottom:
        return Verdict(True, certificate={"pairs": []})
    adj = {b: layer.neighbors_top(b) for b in layer.top}
    for matching in _perfect_matchings_iter(layer.top, layer.bottom, adj):
        pairs = [(matching[b], b) for b in layer.top]
        t = len(pairs)
        rel = [[(pairs[i][0], pairs[j][1]) in layer.edges
                for j in range(t)] for i in range(t)]
        ok = True
        for i in range(t):
            for j in range(t):
                if i != j and rel[i][j] and rel[j][i]:
                    ok = False
        for i in range(t):
            for j in range(t):
                for k in range(t):
                    if rel[i][j] and rel[j][k] and not rel[i][k]:
                        ok = False
        if not ok:
            continue
        succ = [set(j for j in range(t) if j != i and rel[i][j])
                for i in range(t)]
        indeg = [sum(1 for i in range(t) if j in succ[i]) for j in range(t)]
        order = []
        ready = sorted(i for i in range(t) if indeg[i] == 0)
        while ready:
            u = ready.pop(0)
            order.append(u)
            for v in sorted(succ[u]):
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
            ready.sort()
        if len(order) == t:
            return Verdict(True, certificate={
                "pairs": [list(pairs[u]) for u in order]})
    return Verdict(False, witness={
        "reason": "no perfect matching induces a partial order"})


# ---------------------------------------------------------------------------
# Classification report
# ---------------------------------------------------------------------------

def jsonable(obj):
    """Recursively turn verdict payloads into JSON-serializable data."""
    if isinstance(obj, Verdict):
        return {"value": obj.value,
                "certificate": jsonable(obj.certificate),
                "witness": jsonable(obj.witness)}
    if isinstance(obj, ChainDecomposition):
        return {"chains": [list(c) for c in obj.chains]}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def classification_report(p: Poset | GradedPoset, f=None,
                          budgets: dict | None = None) -> dict:
    """Full classification of one poset: structural checks side by side
    with the homological oracles, plus per-layer summaries.

    For ungraded input only the gradedness flag is meaningful; the other
    fields are null.
    """
    from .covers import DEFAULT_COVER_BUDGET, is_unmixed_bruteforce
    from .fields import GF2
    from .homology import (
        DEFAULT_BETTI_VARS,
        has_linear_resolution_oracle,
        is_cm_oracle,
    )
    from .ideals import flag_ideal

    if f is None:
        f = GF2
    b = {
        "cover_enum": DEFAULT_COVER_BUDGET,
        "betti_vars": DEFAULT_BETTI_VARS,
        "matching_nodes": DEFAULT_MATCHING_NODES,
        "iso_elements": DEFAULT_ISO_BUDGET,
        "chain_pairs": DEFAULT_CHAIN_PAIRS,
    }
    if budgets:
        b.update(budgets)
    poset = p.poset if isinstance(p, GradedPoset) else p
    g = p if isinstance(p, GradedPoset) else rank_function(poset)
    report: dict = {
        "elements": len(poset),
        "covers": len(poset.covers),
        "graded": g is not None,
        "field": str(f),
        "pure": None,
        "connected": None,
        "generators": None,
        "unmixed": None,
        "cm": None,
        "linear_resolution": None,
        "bi_cm": None,
        "layers": None,
        "certificates": None,
        "witnesses": None,
    }
    if g is None:
        return report
    ideal = flag_ideal(g)
    unmixed_s = check_unmixed_structural(g, b["chain_pairs"])
    cm_s = check_cm_structural(g, b["matching_nodes"], b["chain_pairs"])
    lr_s = has_linear_resolution_structural(g)
    bi = is_bi_cm(g, b["iso_elements"], b["matching_nodes"],
                  b["chain_pairs"])
    report.update({
        "pure": g.is_pure(),
        "connected": len(connected_components(poset)) <= 1,
        "generators": len(ideal.generators),
        "unmixed": {
            "structural": unmixed_s.value,
            "oracle": is_unmixed_bruteforce(g, b["cover_enum"]),
        },
        "cm": {
            "structural": cm_s.value,
            "oracle": is_cm_oracle(ideal, f, b["betti_vars"]),
        },
        "linear_resolution": {
            "structural": lr_s.value,
            "oracle": has_linear_resolution_oracle(ideal, f,
                                                   b["betti_vars"]),
        },
        "bi_cm": bi.value,
    })
    layers = []
    for i in range(1, g.rbar()):
        sub = rank_selection(g, {i, i + 1})
        untrimmed = layer_pair(g, i, trim=False)
        trimmed = layer_pair(g, i, trim=True)
        layers.append({
            "ranks": [i, i + 1],
            "unmixed": check_unmixed_structural(sub, b["chain_pairs"]).value,
            "ferrers": is_ferrers(untrimmed).value,
            "herzog_hibi_cm": herzog_hibi_bipartite_cm(trimmed).value,
        })
    report["layers"] = layers
    report["certificates"] = jsonable({
        "unmixed": unmixed_s.certificate,
        "cm": cm_s.certificate,
        "linear_resolution": lr_s.certificate,
        "bi_cm": bi.certificate,
    })
    report["witnesses"] = jsonable({
        "unmixed": unmixed_s.witness,
        "cm": cm_s.witness,
        "linear_resolution": lr_s.witness,
        "bi_cm": bi.witness,
    })
    return report
