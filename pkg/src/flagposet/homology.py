"""Exact reduced cohomology, multigraded Betti numbers, and the
homological oracles.

Conventions, pinned once and validated by the test suite:

* H(void) = 0 and H({empty face}) = t^-1; both are required for the
  join/product identities to hold verbatim.
* Hochster indexing: beta_{j,A}(I) = dim H^(|A|-j-2) of the restriction
  of the Stanley-Reisner complex of I to A, for j >= 0.
* The Betti polynomial of a multidegree is t^2 * H(restriction, t),
  which equals sum_j t^(|A|-j) beta_{j,A} for nonempty A and extends it
  to A = {} (value t, the rank-one free module of the quotient's
  resolution).

Matrix ranks are exact Gaussian elimination over GF(p) via the kernel
(compiled when available) or over the rationals in pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import kernel
from .complexes import SimplicialComplex, x_complexes
from .errors import BudgetExceeded, UnknownVariable, VariableClash
from .fields import GF2, FieldSpec, LaurentPoly, poly_from_dims
from .ideals import SquarefreeIdeal, alexander_dual, flag_ideal
from .posets import GradedPoset

DEFAULT_BETTI_VARS = 18


# ---------------------------------------------------------------------------
# Reduced cohomology
# ---------------------------------------------------------------------------

def _rank_rational(rows: list[list[int]]) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        inv = 1 / prow[col]
        for j in range(col, ncols):
            prow[j] *= inv
        for i in range(rank + 1, len(mat)):
            f = mat[i][col]
            if f:
                row = mat[i]
                for j in range(col, ncols):
                    row[j] -= f * prow[j]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _cohomology_dims_rational(face_masks: Sequence[int]) -> list[int]:
    """Same contract as kernel.cohomology_dims, over the rationals."""
    if not face_masks:
        return []
    levels: dict[int, list[int]] = {}
    for f in face_masks:
        levels.setdefault(bin(f).count("1"), []).append(f)
    maxc = max(levels)
    ordered = [sorted(levels.get(c, [])) for c in range(maxc + 1)]
    index = [{f: i for i, f in enumerate(lv)} for lv in ordered]
    dims = []
    prev_rank = 0
    for c in range(maxc + 1):
        cur = ordered[c]
        nxt = ordered[c + 1] if c + 1 <= maxc else []
        if not nxt:
            r = 0
        else:
            rows = [[0] * len(nxt) for _ in cur]
            idx = index[c]
            for j, g in enumerate(nxt):
                m = g
                while m:
                    b = m & -m
                    m ^= b
                    f = g ^ b
                    sign = -1 if bin(f & (b - 1)).count("1") & 1 else 1
                    rows[idx[f]][j] = sign
            r = _rank_rational(rows)
        dims.append(len(cur) - r - prev_rank)
        prev_rank = r
    return dims


def _dims_from_faces(face_masks: Sequence[int], f: FieldSpec) -> list[int]:
    if f.kind == "gf":
        return kernel.cohomology_dims(face_masks, f.p)
    return _cohomology_dims_rational(face_masks)


def _poly_from_nonfaces(nonface_masks: Sequence[int], sub_mask: int,
                        f: FieldSpec) -> LaurentPoly:
    faces = kernel.faces_from_nonfaces(nonface_masks, sub_mask)
    return poly_from_dims(_dims_from_faces(faces, f))


def reduced_cohomology_poly(x: SimplicialComplex,
                            f: FieldSpec = GF2) -> LaurentPoly:
    """H(X, t) = sum of t^i dim H^i(X) over i >= -1."""
    if x.is_void():
        return LaurentPoly.zero()
    index = {v: i for i, v in enumerate(x.vertices)}
    facet_masks = [sum(1 << index[v] for v in fc) for fc in x.facets]
    faces = kernel.faces_from_facets(facet_masks)
    return poly_from_dims(_dims_from_faces(faces, f))


# ---------------------------------------------------------------------------
# Hochster formula and Betti polynomials
# ---------------------------------------------------------------------------

def _multidegree_mask(ideal: SquarefreeIdeal, multidegree: Iterable[str]
                      ) -> tuple[int, dict[str, int]]:
    index = {v: i for i, v in enumerate(ideal.variables)}
    mask = 0
    for v in multidegree:
        if v not in index:
            raise UnknownVariable(f"unknown variable: {v}")
        mask |= 1 << index[v]
    return mask, index


def _gen_masks(ideal: SquarefreeIdeal, index: dict[str, int]) -> list[int]:
    return [sum(1 << index[v] for v in g) for g in ideal.generators]


def restriction_cohomology_poly(ideal: SquarefreeIdeal,
                                multidegree: Iterable[str],
                                f: FieldSpec = GF2) -> LaurentPoly:
    """H(restriction of the Stanley-Reisner complex to A, t).

    When no generator support lies inside A the restriction is the full
    simplex on A (contractible for nonempty A, the irrelevant complex
    for A = {}).
    """
    mask, index = _multidegree_mask(ideal, multidegree)
    gens = [g for g in _gen_masks(ideal, index) if g & ~mask == 0]
    if not gens:
        return LaurentPoly.t_power(-1) if mask == 0 else LaurentPoly.zero()
    return _poly_from_nonfaces(gens, mask, f)


def betti_multidegree(ideal: SquarefreeIdeal, multidegree: Iterable[str],
                      f: FieldSpec = GF2,
                      budget: int = DEFAULT_BETTI_VARS) -> list[int]:
    """The vector (beta_{0,A}, ..., beta_{|A|-1,A}) via Hochster's
    formula: beta_{j,A} = dim H^(|A|-j-2) of the restriction."""
    a = frozenset(multidegree)
    if len(a) > budget:
        raise BudgetExceeded(f"multidegree larger than budget {budget}")
    poly = restriction_cohomology_poly(ideal, a, f)
    n = len(a)
    return [poly.coefficient(n - j - 2) for j in range(n)]


def betti_polynomial_bruteforce(ideal: SquarefreeIdeal,
                                multidegree: Iterable[str],
                                f: FieldSpec = GF2) -> LaurentPoly:
    """t^2 * H(restriction, t) = sum_j t^(|A|-j) beta_{j,A}."""
    return restriction_cohomology_poly(ideal, multidegree, f).shift(2)


def betti_polynomial_fast(g: GradedPoset, multidegree: Iterable[str],
                          f: FieldSpec = GF2) -> LaurentPoly:
    """Join-decomposition product: t^rbar times the product of the
    cohomology polynomials of the layer complexes of the multidegree.

    The empty poset (rank 0, zero ideal) is the one case outside the
    product formula; its only multidegree is empty and its polynomial
    is t, the rank-one free module of the quotient's resolution.
    """
    if g.rbar() == 0:
        return LaurentPoly.t_power(1)
    out = LaurentPoly.t_power(g.rbar())
    for x in x_complexes(g, multidegree):
        out = out * reduced_cohomology_poly(x, f)
        if out.is_zero():
            break
    return out


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{j,A} of an ideal."""

    variables: tuple[str, ...]
    entries: dict[tuple[int, frozenset[str]], int]
    field: FieldSpec = field(default=GF2)

    def total(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (j, _), b in self.entries.items():
            out[j] = out.get(j, 0) + b
        return out

    def projective_dimension_of_quotient(self) -> int:
        """projdim(R/I) = 1 + max homological index of the ideal."""
        if not self.entries:
            return 0
        return 1 + max(j for j, _ in self.entries)

    def is_linear(self, degree: int) -> bool:
        return all(len(a) == j + degree for j, a in self.entries)

    def to_csv(self) -> str:
        index = {v: i for i, v in enumerate(self.variables)}
        lines = ["j,|A|,A,beta"]
        keys = sorted(self.entries,
                      key=lambda k: (k[0], len(k[1]),
                                     sorted(index[v] for v in k[1])))
        for j, a in keys:
            lines.append(f"{j},{len(a)},{';'.join(sorted(a))},"
                         f"{self.entries[(j, a)]}")
        return "\n".join(lines) + "\n"


def _lcm_lattice(ideal: SquarefreeIdeal) -> list[frozenset[str]]:
    """All unions of generator supports (multidegrees that can carry a
    nonzero Betti number; anything else restricts to a cone)."""
    gens = [frozenset(g) for g in ideal.generators]
    seen: set[frozenset] = set(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                u = a | g
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    index = {v: i for i, v in enumerate(ideal.variables)}
    return sorted(seen, key=lambda a: (len(a), sorted(index[v] for v in a)))


def full_betti_table(ideal: SquarefreeIdeal, f: FieldSpec = GF2,
                     budget: int = DEFAULT_BETTI_VARS) -> BettiTable:
    """All nonzero beta_{j,A}.

    Candidate multidegrees are the unions of generator supports: if some
    vertex of A lies in no generator inside A, the restriction is a cone
    over it and contributes nothing.
    """
    if len(ideal.variables) > budget:
        raise BudgetExceeded(f"Betti table limited to {budget} variables")
    entries: dict[tuple[int, frozenset[str]], int] = {}
    for a in _lcm_lattice(ideal):
        vec = betti_multidegree(ideal, a, f, budget)
        for j, b in enumerate(vec):
            if b:
                entries[(j, a)] = b
    return BettiTable(ideal.variables, entries, f)


def component_betti_assembly(tables: Sequence[BettiTable]) -> BettiTable:
    """Combine tables of ideals in pairwise disjoint variables.

    Convolution in quotient-ring indexing: beta_{i,A|B}(R/(I+J)) =
    sum over j+k=i of beta_{j,A}(R/I) * beta_{k,B}(R/J); the tables
    store ideal indices, hence the +-1 shifts.
    """
    if not tables:
        raise VariableClash("need at least one table")
    seen_vars: set[str] = set()
    for t in tables:
        overlap = seen_vars & set(t.variables)
        if overlap:
            raise VariableClash(f"shared variables: {sorted(overlap)}")
        seen_vars |= set(t.variables)

    def quotient_form(t: BettiTable) -> dict[tuple[int, frozenset[str]], int]:
        out = {(0, frozenset()): 1}
        for (j, a), b in t.entries.items():
            out[(j + 1, a)] = b
        return out

    acc = quotient_form(tables[0])
    variables: tuple[str, ...] = tables[0].variables
    for t in tables[1:]:
        nxt: dict[tuple[int, frozenset[str]], int] = {}
        for (j, a), b in acc.items():
            for (k, c), d in quotient_form(t).items():
                key = (j + k, a | c)
                nxt[key] = nxt.get(key, 0) + b * d
        acc = nxt
        variables = variables + t.variables
    entries = {(j - 1, a): b for (j, a), b in acc.items() if j >= 1 and b}
    return BettiTable(variables, entries, tables[0].field)


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def has_linear_resolution_oracle(ideal: SquarefreeIdeal, f: FieldSpec = GF2,
                                 budget: int = DEFAULT_BETTI_VARS) -> bool:
    """Every nonzero beta_{j,A} has |A| = j + d, where d is the common
    generator degree; the zero ideal passes vacuously and an ideal not
    generated in a single degree fails."""
    if not ideal.generators:
        return True
    if not ideal.is_equigenerated():
        return False
    return full_betti_table(ideal, f, budget).is_linear(
        ideal.generator_degree())


def is_cm_oracle(ideal: SquarefreeIdeal, f: FieldSpec = GF2,
                 budget: int = DEFAULT_BETTI_VARS) -> bool:
    """Cohen-Macaulayness of R/I.

    Primary route: the Alexander dual has a linear resolution
    (Eagon-Reiner).  Cross-checked against projdim(R/I) = height(I)
    computed from the ideal's own Betti table; a disagreement would be
    an internal error, not a value.
    """
    if not ideal.generators:
        return True
    dual = alexander_dual(ideal, budget=max(budget, len(ideal.variables)))
    eagon_reiner = has_linear_resolution_oracle(dual, f, budget)
    table = full_betti_table(ideal, f, budget)
    height = min(len(g) for g in dual.generators)
    auslander_buchsbaum = (table.projective_dimension_of_quotient() == height)
    if eagon_reiner != auslander_buchsbaum:
        raise RuntimeError(
            "internal oracle disagreement: Eagon-Reiner "
            f"{eagon_reiner} vs projdim=height {auslander_buchsbaum}")
    return eagon_reiner


def is_cm_poset_oracle(g: GradedPoset, f: FieldSpec = GF2,
                       budget: int = DEFAULT_BETTI_VARS) -> bool:
    return is_cm_oracle(flag_ideal(g), f, budget)


def first_strand_multidegrees(g: GradedPoset) -> Callable[[Iterable[str]], bool]:
    """Predicate for multidegrees on the first linear strand.

    With s the smallest rank of a maximal element: A lies within ranks
    1..s with its rank-s part maximal, meets every rank 1..s, and each
    consecutive pair of its layers induces a complete bipartite graph.
    """
    s = g.runder()
    maxes = set(g.poset.maximal_elements())

    def predicate(multidegree: Iterable[str]) -> bool:
        a = frozenset(multidegree)
        for e in a:
            g.poset.index(e)
        layers = [frozenset(x for x in a if g.rank[x] == i)
                  for i in range(1, s + 1)]
        if sum(len(l) for l in layers) != len(a):
            return False
        if any(not l for l in layers):
            return False
        if not layers or not (layers[s - 1] <= maxes):
            return False
        for i in range(s - 1):
            bottom = layers[i] - maxes if i > 0 else layers[i]
            for p in bottom:
                for q in layers[i + 1]:
                    if not g.poset.is_cover(p, q):
                        return False
        return True

    return predicate
