"""Finite posets presented by Hasse diagrams.

A poset is given by an ordered list of element ids plus its cover
relations.  The cover digraph must be acyclic and irredundant (no stated
cover may also be realized by a longer directed path), so the input is a
genuine Hasse diagram; transitively redundant covers are an error, not
silently reduced.

All values are immutable after construction and every operation here is
pure, so shared use across threads is safe.  Enumerations are stable:
elements keep their input order, covers are kept in a canonical order,
and chain lists are sorted lexicographically by id sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    CycleDetected,
    EmptySelection,
    InvalidParameter,
    ParseError,
    RedundantCover,
    UnknownElement,
)

DEFAULT_ISO_BUDGET = 24

_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")


class Poset:
    """A finite poset with elements in a fixed order and validated covers."""

    __slots__ = ("elements", "covers", "_index", "_children", "_parents",
                 "_descendants", "_minimal", "_maximal")

    def __init__(self, elements, covers):
        elements = tuple(str(e) for e in elements)
        seen = set()
        for e in elements:
            if e in seen:
                raise InvalidParameter(f"duplicate element id: {e}")
            seen.add(e)
        index = {e: i for i, e in enumerate(elements)}
        norm = []
        cover_set = set()
        for p, q in covers:
            p, q = str(p), str(q)
            if p not in index:
                raise UnknownElement(f"unknown element in cover: {p}")
            if q not in index:
                raise UnknownElement(f"unknown element in cover: {q}")
            if p == q:
                raise CycleDetected(f"self-cover: {p}")
            if (p, q) in cover_set:
                raise InvalidParameter(f"duplicate cover: {p} < {q}")
            cover_set.add((p, q))
            norm.append((p, q))
        norm.sort(key=lambda c: (index[c[0]], index[c[1]]))

        n = len(elements)
        children = [[] for _ in range(n)]
        parents = [[] for _ in range(n)]
        for p, q in norm:
            children[index[p]].append(index[q])
            parents[index[q]].append(index[p])

        # Kahn topological order; leftover nodes witness a cycle.
        indeg = [len(parents[i]) for i in range(n)]
        queue = [i for i in range(n) if indeg[i] == 0]
        topo = []
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            topo.append(u)
            for v in children[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        if len(topo) != n:
            bad = [elements[i] for i in range(n) if indeg[i] > 0]
            raise CycleDetected(f"cover digraph has a cycle through {bad}")

        # Strict descendants by reverse topological DP; a cover (p, q) is
        # redundant iff q is reachable from p through some other child.
        desc = [0] * n
        for u in reversed(topo):
            m = 0
            for v in children[u]:
                m |= (1 << v) | desc[v]
            desc[u] = m
        for p, q in norm:
            i, j = index[p], index[q]
            for v in children[i]:
                if v != j and (desc[v] >> j) & 1:
                    raise RedundantCover(
                        f"cover {p} < {q} is implied by a longer path")

        self.elements = elements
        self.covers = tuple(norm)
        self._index = index
        self._children = tuple(tuple(c) for c in children)
        self._parents = tuple(tuple(pr) for pr in parents)
        self._descendants = tuple(desc)
        self._minimal = tuple(elements[i] for i in range(n) if not parents[i])
        self._maximal = tuple(elements[i] for i in range(n) if not children[i])

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poset) and self.elements == other.elements
                and self.covers == other.covers)

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"

    def index(self, e: str) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise UnknownElement(f"unknown element: {e}") from None

    def __contains__(self, e) -> bool:
        return e in self._index

    def children(self, e: str) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in self._children[self.index(e)])

    def parents(self, e: str) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in self._parents[self.index(e)])

    def minimal_elements(self) -> tuple[str, ...]:
        return self._minimal

    def maximal_elements(self) -> tuple[str, ...]:
        return self._maximal

    def less(self, a: str, b: str) -> bool:
        """Strict order a < b."""
        return bool((self._descendants[self.index(a)] >> self.index(b)) & 1)

    def leq(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b)

    def is_cover(self, a: str, b: str) -> bool:
        return self.index(b) in self._children[self.index(a)]


def build_poset(elements, cover_pairs) -> Poset:
    """Validate and build a poset from element ids and cover pairs."""
    return Poset(elements, cover_pairs)


class GradedPoset:
    """A poset together with its rank function.

    Ranks are positive integers, minimal elements have rank 1 and covers
    raise the rank by exactly 1; the constructor validates all of this,
    so re-deriving the rank function always reproduces ``rank``.
    """

    __slots__ = ("poset", "rank", "_layers")

    def __init__(self, poset: Poset, rank: dict[str, int]):
        for e in poset.elements:
            if e not in rank:
                raise InvalidParameter(f"rank missing for element {e}")
            r = rank[e]
            if not isinstance(r, int) or r < 1:
                raise InvalidParameter(f"rank of {e} must be a positive integer")
        if len(rank) != len(poset.elements):
            raise InvalidParameter("rank map has extra keys")
        for e in poset.minimal_elements():
            if rank[e] != 1:
                raise InvalidParameter(f"minimal element {e} must have rank 1")
        for p, q in poset.covers:
            if rank[q] != rank[p] + 1:
                raise InvalidParameter(
                    f"cover {p} < {q} must raise rank by 1")
        self.poset = poset
        self.rank = dict(rank)
        rbar = max(rank.values()) if rank else 0
        layers = [()] * (rbar + 1)
        for i in range(1, rbar + 1):
            layers[i] = tuple(e for e in poset.elements if rank[e] == i)
        self._layers = tuple(layers)

    # -- delegation -------------------------------------------------
    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        return self.poset.covers

    def __len__(self) -> int:
        return len(self.poset)

    def __repr__(self) -> str:
        return f"GradedPoset({len(self.poset)} elements, rank {self.rbar()})"

    # -- rank structure ----------------------------------------------
    def rbar(self) -> int:
        """Largest rank (0 for the empty poset)."""
        return len(self._layers) - 1

    def runder(self) -> int:
        """Smallest rank of a maximal element (0 for the empty poset)."""
        maxes = self.poset.maximal_elements()
        return min((self.rank[e] for e in maxes), default=0)

    def layer(self, i: int) -> tuple[str, ...]:
        """Elements of rank i, in stored element order."""
        if not 1 <= i <= self.rbar():
            raise InvalidParameter(f"rank {i} outside 1..{self.rbar()}")
        return self._layers[i]

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(self._layers[i]) for i in range(1, self.rbar() + 1))

    def trimmed_layer(self, i: int) -> tuple[str, ...]:
        """Rank-i elements that are not maximal in the whole poset."""
        maxes = set(self.poset.maximal_elements())
        return tuple(e for e in self.layer(i) if e not in maxes)

    def is_pure(self) -> bool:
        r = self.rbar()
        return all(self.rank[e] == r for e in self.poset.maximal_elements())


def rank_function(p: Poset) -> GradedPoset | None:
    """The unique rank function of ``p`` if one exists, else None.

    Rank 1 is propagated from the minimal elements along covers, per
    connected component; any inconsistency means the poset is ungraded.
    """
    rank: dict[str, int] = {}
    order = _topological_elements(p)
    for e in order:
        parents = p.parents(e)
        if not parents:
            rank[e] = 1
            continue
        values = {rank[q] + 1 for q in parents}
        if len(values) > 1:
            return None
        rank[e] = values.pop()
    return GradedPoset(p, rank)


def _topological_elements(p: Poset) -> list[str]:
    indeg = {e: len(p.parents(e)) for e in p.elements}
    queue = [e for e in p.elements if indeg[e] == 0]
    out = []
    head = 0
    while head < len(queue):
        e = queue[head]
        head += 1
        out.append(e)
        for c in p.children(e):
            indeg[c] -= 1
            if indeg[c] == 0:
                queue.append(c)
    return out


@dataclass(frozen=True)
class Chain:
    """A chain of poset elements, ordered bottom to top."""

    elements: tuple[str, ...]
    saturated: bool
    maximal: bool

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def make_chain(p: Poset | GradedPoset, elems) -> Chain:
    """Build a chain, computing its saturation/maximality flags."""
    poset = p.poset if isinstance(p, GradedPoset) else p
    elems = tuple(elems)
    for a, b in zip(elems, elems[1:]):
        if not poset.less(a, b):
            raise InvalidParameter(f"not a chain: {a} !< {b}")
    saturated = all(poset.is_cover(a, b) for a, b in zip(elems, elems[1:]))
    maximal = (saturated and bool(elems)
               and not poset.parents(elems[0])
               and not poset.children(elems[-1]))
    return Chain(elems, saturated, maximal)


def maximal_chains(p: Poset | GradedPoset) -> list[Chain]:
    """All maximal chains, sorted lexicographically by id sequence."""
    poset = p.poset if isinstance(p, GradedPoset) else p
    out: list[tuple[str, ...]] = []
    stack: list[str] = []

    def descend(e: str) -> None:
        stack.append(e)
        kids = poset.children(e)
        if not kids:
            out.append(tuple(stack))
        else:
            for c in kids:
                descend(c)
        stack.pop()

    for e in poset.minimal_elements():
        descend(e)
    out.sort()
    return [Chain(c, saturated=True, maximal=True) for c in out]


def saturated_chains_between(g: GradedPoset, p: str, q: str) -> list[Chain]:
    """All saturated chains from p up to q (empty if q is unreachable)."""
    if g.rank[p] >= g.rank[q]:
        raise InvalidParameter("need rank(p) < rank(q)")
    poset = g.poset
    out: list[tuple[str, ...]] = []
    stack = [p]

    def descend(e: str) -> None:
        if e == q:
            out.append(tuple(stack))
            return
        for c in poset.children(e):
            if poset.leq(c, q):
                stack.append(c)
                descend(c)
                stack.pop()

    descend(p)
    out.sort()
    return [Chain(c, saturated=True,
                  maximal=(not poset.parents(p) and not poset.children(q)))
            for c in out]


def rank_selection(g: GradedPoset, ranks) -> GradedPoset:
    """Induced subposet on the elements whose rank lies in ``ranks``.

    The order is the restriction of the ambient order and the Hasse
    diagram is recomputed; ranks are renormalized to 1..|S| by the
    position of the original rank within sorted(S).  The result is
    always graded: a cover of the restriction joins consecutive
    selected ranks, because any saturated ambient chain between two
    comparable elements passes through every intermediate rank.
    """
    S = sorted(set(ranks))
    if not S:
        raise EmptySelection("rank selection needs at least one rank")
    if S[0] < 1 or S[-1] > g.rbar():
        raise InvalidParameter(f"ranks {S} outside 1..{g.rbar()}")
    pos = {r: k + 1 for k, r in enumerate(S)}
    keep = [e for e in g.elements if g.rank[e] in pos]
    covers = []
    for k in range(len(S) - 1):
        lo, hi = S[k], S[k + 1]
        for a in g.layer(lo):
            for b in g.layer(hi):
                if g.poset.less(a, b):
                    covers.append((a, b))
    sub = Poset(keep, covers)
    return GradedPoset(sub, {e: pos[g.rank[e]] for e in keep})


@dataclass(frozen=True)
class BipartiteLayer:
    """Two disjoint vertex lists with edges between them."""

    bottom: tuple[str, ...]
    top: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        bset, tset = set(self.bottom), set(self.top)
        if bset & tset:
            raise InvalidParameter("layer sides must be disjoint")
        for a, b in self.edges:
            if a not in bset or b not in tset:
                raise InvalidParameter(f"edge ({a},{b}) leaves the layer")

    def neighbors_bottom(self, a: str) -> tuple[str, ...]:
        return tuple(b for b in self.top if (a, b) in self.edges)

    def neighbors_top(self, b: str) -> tuple[str, ...]:
        return tuple(a for a in self.bottom if (a, b) in self.edges)


def layer_pair(g: GradedPoset, i: int, trim: bool = False) -> BipartiteLayer:
    """The bipartite graph between ranks i and i+1.

    With ``trim`` the bottom side drops rank-i elements that are maximal
    in the whole poset (they have no edges anyway).
    """
    if not 1 <= i <= g.rbar() - 1:
        raise InvalidParameter(f"layer index {i} outside 1..{g.rbar() - 1}")
    bottom = g.trimmed_layer(i) if trim else g.layer(i)
    top = g.layer(i + 1)
    bset = set(bottom)
    edges = frozenset((p, q) for p, q in g.covers
                      if p in bset and g.rank[q] == i + 1)
    return BipartiteLayer(bottom, top, edges)


def bipartite_poset(bottom, top, edges) -> Poset:
    """The rank <= 2 poset whose Hasse diagram is a bipartite graph."""
    return Poset(tuple(bottom) + tuple(top), edges)


def connected_components(p: Poset | GradedPoset) -> list[Poset]:
    """Components of the Hasse diagram, as induced sub-posets."""
    poset = p.poset if isinstance(p, GradedPoset) else p
    n = len(poset.elements)
    comp = [-1] * n
    ncomp = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = ncomp
        while stack:
            u = stack.pop()
            e = poset.elements[u]
            for w in poset.children(e) + poset.parents(e):
                j = poset.index(w)
                if comp[j] < 0:
                    comp[j] = ncomp
                    stack.append(j)
        ncomp += 1
    out = []
    for c in range(ncomp):
        elems = [poset.elements[i] for i in range(n) if comp[i] == c]
        eset = set(elems)
        covers = [(a, b) for a, b in poset.covers if a in eset]
        out.append(Poset(elems, covers))
    return out


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def chain(n: int) -> GradedPoset:
    """Total order on n elements c1 < ... < cn."""
    if n < 1:
        raise InvalidParameter("chain needs n >= 1")
    elems = [f"c{i}" for i in range(1, n + 1)]
    covers = [(elems[i], elems[i + 1]) for i in range(n - 1)]
    return GradedPoset(Poset(elems, covers),
                       {e: i + 1 for i, e in enumerate(elems)})


def antichain(n: int) -> GradedPoset:
    """n pairwise-incomparable elements."""
    if n < 1:
        raise InvalidParameter("antichain needs n >= 1")
    elems = [f"p{i}" for i in range(1, n + 1)]
    return GradedPoset(Poset(elems, []), {e: 1 for e in elems})


def letterplace_poset(n: int, q: Poset | GradedPoset) -> GradedPoset:
    """Poset on [n] x Q whose maximal chains encode length-n multichains
    of Q: (i, a) is covered by (i+1, b) exactly when a <= b in Q."""
    if n < 1:
        raise InvalidParameter("letterplace needs n >= 1")
    qp = q.poset if isinstance(q, GradedPoset) else q
    elems = [f"x{i}_{a}" for i in range(1, n + 1) for a in qp.elements]
    covers = []
    for i in range(1, n):
        for a in qp.elements:
            for b in qp.elements:
                if qp.leq(a, b):
                    covers.append((f"x{i}_{a}", f"x{i + 1}_{b}"))
    rank = {f"x{i}_{a}": i for i in range(1, n + 1) for a in qp.elements}
    return GradedPoset(Poset(elems, covers), rank)


def hom_rt_poset(r: int, t: int) -> GradedPoset:
    """Poset on r x t elements a{i}_{j} with a{i}_{j} covered-below
    a{i+1}_{j'} exactly when j <= j'; its flag ideal is the letterplace
    ideal of two chains (maximal chains = monotone index sequences)."""
    if r < 1 or t < 1:
        raise InvalidParameter("hom poset needs r, t >= 1")
    elems = [f"a{i}_{j}" for i in range(1, r + 1) for j in range(1, t + 1)]
    covers = []
    for i in range(1, r):
        for j in range(1, t + 1):
            for jp in range(j, t + 1):
                covers.append((f"a{i}_{j}", f"a{i + 1}_{jp}"))
    rank = {f"a{i}_{j}": i for i in range(1, r + 1) for j in range(1, t + 1)}
    return GradedPoset(Poset(elems, covers), rank)


def v_poset(r: int, s: int) -> Poset:
    """One minimal element a with two chains a < b1 < ... < br and
    a < c1 < ... < cs above it."""
    if r < 1 or s < 1:
        raise InvalidParameter("v poset needs r, s >= 1")
    elems = ["a"] + [f"b{k}" for k in range(1, r + 1)] + \
        [f"c{k}" for k in range(1, s + 1)]
    covers = [("a", "b1"), ("a", "c1")]
    covers += [(f"b{k}", f"b{k + 1}") for k in range(1, r)]
    covers += [(f"c{k}", f"c{k + 1}") for k in range(1, s)]
    return Poset(elems, covers)


def v_coletterplace_poset(r: int, s: int, n: int) -> GradedPoset:
    """Poset on (V poset) x [n] whose flag ideal collects the graphs of
    isotone maps from the V poset to [n].

    The c-leg is loaded bottom-up with reversed index order so that a
    maximal chain reads off exactly one isotone map.
    """
    if r < 1 or s < 1 or n < 1:
        raise InvalidParameter("co-letterplace needs r, s, n >= 1")
    elems = []
    rank = {}
    for k in range(s, 0, -1):
        for i in range(1, n + 1):
            e = f"c{k}_{i}"
            elems.append(e)
            rank[e] = s - k + 1
    for i in range(1, n + 1):
        e = f"a_{i}"
        elems.append(e)
        rank[e] = s + 1
    for k in range(1, r + 1):
        for i in range(1, n + 1):
            e = f"b{k}_{i}"
            elems.append(e)
            rank[e] = s + 1 + k
    covers = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i <= j:
                covers.append((f"a_{i}", f"b1_{j}"))
                for k in range(1, r):
                    covers.append((f"b{k}_{i}", f"b{k + 1}_{j}"))
            if j <= i:
                covers.append((f"c1_{i}", f"a_{j}"))
                for k in range(2, s + 1):
                    covers.append((f"c{k}_{i}", f"c{k - 1}_{j}"))
    return GradedPoset(Poset(elems, covers), rank)


def pentagon() -> Poset:
    """Five-element poset with maximal chains of lengths 3 and 4; it has
    no rank function."""
    return Poset("abcde", [("a", "b"), ("a", "c"), ("b", "e"),
                           ("c", "d"), ("d", "e")])


def example_3_4() -> GradedPoset:
    """Bundled 9-element example: both consecutive-rank layers are
    unmixed but the poset is not (one minimal cover has size 4)."""
    elems = ["a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3"]
    covers = [("a1", "a2"), ("a2", "a3"), ("b1", "a2"), ("b1", "b2"),
              ("b1", "c2"), ("b2", "b3"), ("c1", "c2"), ("c2", "b3"),
              ("c2", "c3")]
    rank = {e: int(e[1]) for e in elems}
    return GradedPoset(Poset(elems, covers), rank)


def example_3_6() -> GradedPoset:
    """Bundled 12-element pure example: satisfies the weak recombination
    conditions but is not unmixed."""
    elems = ["a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2",
             "a3", "b3", "c3", "d3"]
    covers = [("a1", "a2"), ("a1", "c2"), ("a2", "a3"), ("a2", "b3"),
              ("b1", "b2"), ("b1", "d2"), ("b2", "b3"), ("c1", "c2"),
              ("c2", "c3"), ("c2", "d3"), ("d1", "d2"), ("d2", "d3")]
    rank = {e: int(e[1]) for e in elems}
    return GradedPoset(Poset(elems, covers), rank)


def example_4_9() -> GradedPoset:
    """Bundled 16-element example whose flag ideal has 17 generators and
    is Cohen-Macaulay without being generated in a single degree."""
    elems = ["a1", "b1", "c1", "d1", "e1", "a2", "b2", "c2", "d2", "e2",
             "a3", "b3", "d3", "e3", "b4", "d4"]
    covers = [("a1", "a2"), ("a1", "c2"), ("a1", "e2"),
              ("a2", "a3"), ("a2", "b3"), ("a2", "d3"), ("a2", "e3"),
              ("b1", "b2"), ("b1", "c2"), ("b1", "e2"),
              ("b2", "b3"), ("b2", "e3"),
              ("b3", "b4"), ("b3", "d4"),
              ("c1", "c2"), ("c1", "e2"),
              ("d1", "d2"), ("d2", "d3"), ("d2", "e3"), ("d3", "d4"),
              ("e1", "e2"), ("e2", "e3")]
    rank = {e: int(e[1]) for e in elems}
    return GradedPoset(Poset(elems, covers), rank)


# ---------------------------------------------------------------------------
# Isomorphism at desk scale
# ---------------------------------------------------------------------------

def are_isomorphic(p: Poset | GradedPoset, q: Poset | GradedPoset,
                   budget: int = DEFAULT_ISO_BUDGET) -> dict[str, str] | None:
    """A cover-preserving bijection p -> q, or None.

    Backtracking over candidate images, pruned by iterated degree
    refinement.  Only intended for small posets; raises BudgetExceeded
    above ``budget`` elements.
    """
    pp = p.poset if isinstance(p, GradedPoset) else p
    qq = q.poset if isinstance(q, GradedPoset) else q
    if len(pp) > budget or len(qq) > budget:
        raise BudgetExceeded(
            f"isomorphism search limited to {budget} elements")
    if len(pp) != len(qq) or len(pp.covers) != len(qq.covers):
        return None

    def colors(poset: Poset) -> dict[str, int]:
        col = {e: 0 for e in poset.elements}
        for _ in range(len(poset) + 1):
            sig = {}
            for e in poset.elements:
                sig[e] = (col[e],
                          tuple(sorted(col[c] for c in poset.children(e))),
                          tuple(sorted(col[c] for c in poset.parents(e))))
            values = sorted(set(sig.values()))
            new = {e: values.index(sig[e]) for e in poset.elements}
            if new == col:
                break
            col = new
        return col

    pc, qc = colors(pp), colors(qq)
    if sorted(pc.values()) != sorted(qc.values()):
        return None

    order = sorted(pp.elements,
                   key=lambda e: (sum(1 for f in qq.elements
                                      if qc[f] == pc[e]), pp.index(e)))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(e: str, f: str) -> bool:
        for e2, f2 in mapping.items():
            if pp.is_cover(e, e2) != qq.is_cover(f, f2):
                return False
            if pp.is_cover(e2, e) != qq.is_cover(f2, f):
                return False
        return True

    def assign(k: int) -> bool:
        if k == len(order):
            return True
        e = order[k]
        for f in qq.elements:
            if f in used or qc[f] != pc[e]:
                continue
            if not consistent(e, f):
                continue
            mapping[e] = f
            used.add(f)
            if assign(k + 1):
                return True
            del mapping[e]
            used.discard(f)
        return False

    if assign(0):
        return dict(mapping)
    return None


# ---------------------------------------------------------------------------
# Poset text format v1
# ---------------------------------------------------------------------------

MAGIC = "# flagposet v1"


def parse_poset_text(text: str) -> Poset:
    """Parse the poset text format v1.

    Line 1 is the magic header, line 2 lists the elements, every further
    nonempty line declares one cover ``<id> < <id>``.  Duplicate covers
    and unknown ids are rejected with the offending line number.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise ParseError(1, f"expected header {MAGIC!r}")
    if len(lines) < 2 or not lines[1].strip().startswith("elements:"):
        raise ParseError(2, "expected 'elements: <id> <id> ...'")
    ids = lines[1].strip()[len("elements:"):].split()
    for e in ids:
        if not _ID_RE.match(e):
            raise ParseError(2, f"bad element id: {e}")
    if len(set(ids)) != len(ids):
        raise ParseError(2, "duplicate element id")
    known = set(ids)
    covers = []
    seen = set()
    for lineno, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            raise ParseError(lineno, f"expected '<id> < <id>', got {line!r}")
        a, _, b = parts
        if a not in known:
            raise ParseError(lineno, f"unknown element: {a}")
        if b not in known:
            raise ParseError(lineno, f"unknown element: {b}")
        if (a, b) in seen:
            raise ParseError(lineno, f"duplicate cover: {a} < {b}")
        seen.add((a, b))
        covers.append((a, b))
    return Poset(ids, covers)


def poset_to_text(p: Poset | GradedPoset) -> str:
    """Serialize to the poset text format v1 (covers sorted
    lexicographically)."""
    poset = p.poset if isinstance(p, GradedPoset) else p
    lines = [MAGIC, "elements: " + " ".join(poset.elements)]
    for a, b in sorted(poset.covers):
        lines.append(f"{a} < {b}")
    return "\n".join(lines) + "\n"
