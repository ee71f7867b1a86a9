"""Pure-Python compute kernels.

Twin of the compiled module ``flagposet._kernel_c``.  Both expose the same
five functions and must agree bit for bit; ``tests/test_kernel.py`` checks
the agreement.  Faces and hyperedges are encoded as integer bitmasks over
a vertex numbering chosen by the caller.  This twin accepts masks of any
width; the compiled twin is limited to 63 bits and the dispatcher in
``flagposet.kernel`` falls back here beyond that.
"""

from __future__ import annotations

from typing import Sequence


def rank_gf2(rows: Sequence[int], ncols: int | None = None) -> int:
    """Rank over GF(2) of a matrix whose rows are bitmasks."""
    basis: dict[int, int] = {}
    rank = 0
    for row in rows:
        r = row
        while r:
            low = r & -r
            b = basis.get(low)
            if b is None:
                basis[low] = r
                rank += 1
                break
            r ^= b
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of a dense integer matrix (p an odd prime here,
    but any prime works)."""
    mat = [[x % p for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = -1
        for i in range(rank, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot < 0:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        prow = mat[rank]
        if inv != 1:
            for j in range(col, ncols):
                prow[j] = prow[j] * inv % p
        for i in range(rank + 1, len(mat)):
            f = mat[i][col]
            if f:
                row = mat[i]
                for j in range(col, ncols):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == len(mat):
            break
    return rank


def faces_from_nonfaces(nonface_masks: Sequence[int], sub_mask: int) -> list[int]:
    """All subsets of ``sub_mask`` containing no nonface, sorted ascending.

    Nonfaces not contained in ``sub_mask`` are irrelevant and skipped.
    A zero nonface makes every subset a nonface (void result).
    """
    gens = [g for g in nonface_masks if g & ~sub_mask == 0]
    if any(g == 0 for g in gens):
        return []
    verts = []
    m = sub_mask
    while m:
        b = m & -m
        verts.append(b)
        m ^= b
    by_vertex: list[list[int]] = [[] for _ in verts]
    missing = []
    for gi, g in enumerate(gens):
        missing.append(bin(g).count("1"))
        for i, b in enumerate(verts):
            if g & b:
                by_vertex[i].append(gi)
    out: list[int] = []

    def rec(i: int, cur: int) -> None:
        if i == len(verts):
            out.append(cur)
            return
        rec(i + 1, cur)
        ok = True
        for gi in by_vertex[i]:
            missing[gi] -= 1
            if missing[gi] == 0:
                ok = False
        if ok:
            rec(i + 1, cur | verts[i])
        for gi in by_vertex[i]:
            missing[gi] += 1

    rec(0, 0)
    out.sort()
    return out


def faces_from_facets(facet_masks: Sequence[int]) -> list[int]:
    """All faces (subsets of some facet), sorted ascending.

    An empty facet list is the void complex and yields no faces; a single
    zero facet is the irrelevant complex and yields [0].
    """
    if not facet_masks:
        return []
    seen = set(facet_masks)
    frontier = list(seen)
    while frontier:
        nxt = []
        for f in frontier:
            m = f
            while m:
                b = m & -m
                m ^= b
                sub = f ^ b
                if sub not in seen:
                    seen.add(sub)
                    nxt.append(sub)
        frontier = nxt
    return sorted(seen)


def cohomology_dims(face_masks: Sequence[int], p: int) -> list[int]:
    """Reduced cohomology dimensions over GF(p) of the complex whose full
    face list (including the empty face) is ``face_masks``.

    Returns ``[dim H^-1, dim H^0, ..., dim H^(d)]`` where d+1 is the
    largest face cardinality; empty list for the void complex.
    """
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
        elif p == 2:
            rows = [0] * len(cur)
            idx = index[c]
            for j, g in enumerate(nxt):
                m = g
                while m:
                    b = m & -m
                    m ^= b
                    rows[idx[g ^ b]] |= 1 << j
            r = rank_gf2(rows, len(nxt))
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
                    rows[idx[f]][j] = sign % p
            r = rank_mod_p(rows, p)
        dims.append(len(cur) - r - prev_rank)
        prev_rank = r
    return dims
