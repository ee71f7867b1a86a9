# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels.

Twin of ``flagposet._kernel_py`` with identical semantics; vertex masks
must fit in 63 bits (the dispatcher in ``flagposet.kernel`` falls back to
the pure twin beyond that).
"""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef int _rank_words(uint64_t* M, Py_ssize_t n, Py_ssize_t nwords,
                     Py_ssize_t ncols) nogil:
    cdef Py_ssize_t rank = 0, col, wi, i, w, piv
    cdef uint64_t bit, tmp
    for col in range(ncols):
        wi = col >> 6
        bit = (<uint64_t>1) << (col & 63)
        piv = -1
        for i in range(rank, n):
            if M[i * nwords + wi] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for w in range(nwords):
                tmp = M[rank * nwords + w]
                M[rank * nwords + w] = M[piv * nwords + w]
                M[piv * nwords + w] = tmp
        for i in range(rank + 1, n):
            if M[i * nwords + wi] & bit:
                for w in range(wi, nwords):
                    M[i * nwords + w] ^= M[rank * nwords + w]
        rank += 1
        if rank == n:
            break
    return <int>rank


cdef int64_t _modinv(int64_t a, int64_t p) nogil:
    # Fermat: a^(p-2) mod p; p prime, a not divisible by p.
    cdef int64_t result = 1, base = a % p, e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef int _rank_modp_arr(int64_t* A, Py_ssize_t n, Py_ssize_t m,
                        int64_t p) nogil:
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef int64_t inv, f, tmp
    for col in range(m):
        piv = -1
        for i in range(rank, n):
            if A[i * m + col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(m):
                tmp = A[rank * m + j]
                A[rank * m + j] = A[piv * m + j]
                A[piv * m + j] = tmp
        inv = _modinv(A[rank * m + col], p)
        if inv != 1:
            for j in range(col, m):
                A[rank * m + j] = A[rank * m + j] * inv % p
        for i in range(rank + 1, n):
            f = A[i * m + col]
            if f:
                for j in range(col, m):
                    A[i * m + j] = (A[i * m + j] - f * A[rank * m + j]) % p
                    if A[i * m + j] < 0:
                        A[i * m + j] += p
        rank += 1
        if rank == n:
            break
    return <int>rank


def rank_gf2(rows, ncols=None):
    """Rank over GF(2) of a matrix whose rows are bitmasks."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 0
    cdef Py_ssize_t nc = 0 if ncols is None else <Py_ssize_t>ncols
    cdef Py_ssize_t bl
    for row in rows:
        bl = row.bit_length()
        if bl > nc:
            nc = bl
    if nc == 0:
        return 0
    cdef Py_ssize_t nwords = (nc + 63) >> 6
    cdef uint64_t* M = <uint64_t*>calloc(n * nwords, sizeof(uint64_t))
    if M is NULL:
        raise MemoryError()
    cdef Py_ssize_t i, w
    cdef object r
    for i in range(n):
        r = rows[i]
        w = 0
        while r:
            M[i * nwords + w] = <uint64_t>(r & 0xFFFFFFFFFFFFFFFF)
            r >>= 64
            w += 1
    cdef int rank
    with nogil:
        rank = _rank_words(M, n, nwords, nc)
    free(M)
    return rank


def rank_mod_p(rows, p):
    """Rank over GF(p) of a dense integer matrix."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 0
    cdef Py_ssize_t m = len(rows[0])
    if m == 0:
        return 0
    cdef int64_t pp = p
    cdef int64_t* A = <int64_t*>malloc(n * m * sizeof(int64_t))
    if A is NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int64_t v
    for i in range(n):
        row = rows[i]
        for j in range(m):
            v = row[j] % pp
            if v < 0:
                v += pp
            A[i * m + j] = v
    cdef int rank
    with nogil:
        rank = _rank_modp_arr(A, n, m, pp)
    free(A)
    return rank


cdef void _faces_rec(Py_ssize_t i, Py_ssize_t nv, uint64_t cur,
                     uint64_t* verts, int* miss, int* vstart, int* vitems,
                     list out):
    cdef Py_ssize_t k
    cdef int gi
    cdef bint ok
    if i == nv:
        out.append(cur)
        return
    _faces_rec(i + 1, nv, cur, verts, miss, vstart, vitems, out)
    ok = True
    for k in range(vstart[i], vstart[i + 1]):
        gi = vitems[k]
        miss[gi] -= 1
        if miss[gi] == 0:
            ok = False
    if ok:
        _faces_rec(i + 1, nv, cur | verts[i], verts, miss, vstart, vitems, out)
    for k in range(vstart[i], vstart[i + 1]):
        miss[vitems[k]] += 1


def faces_from_nonfaces(nonface_masks, sub_mask):
    """All subsets of ``sub_mask`` containing no nonface, sorted ascending."""
    cdef uint64_t sm = sub_mask
    gens = [g for g in nonface_masks if (<uint64_t>g) & ~sm == 0]
    for g in gens:
        if g == 0:
            return []
    cdef Py_ssize_t nv = _popcount(sm)
    cdef Py_ssize_t ng = len(gens)
    cdef uint64_t* verts = <uint64_t*>malloc((nv if nv else 1) * sizeof(uint64_t))
    cdef int* miss = <int*>malloc((ng if ng else 1) * sizeof(int))
    cdef int* vstart = <int*>malloc((nv + 1) * sizeof(int))
    if verts is NULL or miss is NULL or vstart is NULL:
        raise MemoryError()
    cdef uint64_t m = sm, b
    cdef Py_ssize_t i = 0, k, total = 0
    while m:
        b = m & (~m + 1)
        verts[i] = b
        m ^= b
        i += 1
    cdef uint64_t gm
    for k in range(ng):
        gm = gens[k]
        miss[k] = _popcount(gm)
        total += miss[k]
    cdef int* vitems = <int*>malloc((total if total else 1) * sizeof(int))
    if vitems is NULL:
        raise MemoryError()
    cdef Py_ssize_t pos = 0
    for i in range(nv):
        vstart[i] = <int>pos
        for k in range(ng):
            gm = gens[k]
            if gm & verts[i]:
                vitems[pos] = <int>k
                pos += 1
    vstart[nv] = <int>pos
    out: list = []
    _faces_rec(0, nv, 0, verts, miss, vstart, vitems, out)
    free(verts)
    free(miss)
    free(vstart)
    free(vitems)
    out.sort()
    return out


def faces_from_facets(facet_masks):
    """All faces (subsets of some facet), sorted ascending."""
    if not facet_masks:
        return []
    seen = set(facet_masks)
    frontier = list(seen)
    cdef uint64_t f, m, b, sub
    while frontier:
        nxt = []
        for fo in frontier:
            f = fo
            m = f
            while m:
                b = m & (~m + 1)
                m ^= b
                sub = f ^ b
                if sub not in seen:
                    seen.add(sub)
                    nxt.append(sub)
        frontier = nxt
    return sorted(seen)


cdef Py_ssize_t _bisect(uint64_t* arr, Py_ssize_t n, uint64_t x) nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def cohomology_dims(face_masks, p):
    """Reduced cohomology dimensions over GF(p); see the pure twin."""
    if not face_masks:
        return []
    levels = {}
    cdef uint64_t fm
    for fo in face_masks:
        fm = fo
        levels.setdefault(_popcount(fm), []).append(fo)
    cdef Py_ssize_t maxc = max(levels)
    ordered = [sorted(levels.get(c, [])) for c in range(maxc + 1)]

    cdef int64_t pp = p
    dims = []
    cdef Py_ssize_t prev_rank = 0, c, ncur, nnxt, nwords, i, j
    cdef uint64_t g, m, b, f
    cdef uint64_t* cur_arr
    cdef uint64_t* M
    cdef int64_t* A
    cdef int r
    cdef int sign
    for c in range(maxc + 1):
        cur = ordered[c]
        nxt = ordered[c + 1] if c + 1 <= maxc else []
        ncur = len(cur)
        nnxt = len(nxt)
        if nnxt == 0:
            r = 0
        else:
            cur_arr = <uint64_t*>malloc(ncur * sizeof(uint64_t))
            if cur_arr is NULL:
                raise MemoryError()
            for i in range(ncur):
                cur_arr[i] = cur[i]
            if pp == 2:
                nwords = (nnxt + 63) >> 6
                M = <uint64_t*>calloc(ncur * nwords, sizeof(uint64_t))
                if M is NULL:
                    raise MemoryError()
                for j in range(nnxt):
                    g = nxt[j]
                    m = g
                    while m:
                        b = m & (~m + 1)
                        m ^= b
                        i = _bisect(cur_arr, ncur, g ^ b)
                        M[i * nwords + (j >> 6)] |= (<uint64_t>1) << (j & 63)
                with nogil:
                    r = _rank_words(M, ncur, nwords, nnxt)
                free(M)
            else:
                A = <int64_t*>calloc(ncur * nnxt, sizeof(int64_t))
                if A is NULL:
                    raise MemoryError()
                for j in range(nnxt):
                    g = nxt[j]
                    m = g
                    while m:
                        b = m & (~m + 1)
                        m ^= b
                        f = g ^ b
                        i = _bisect(cur_arr, ncur, f)
                        sign = -1 if (_popcount(f & (b - 1)) & 1) else 1
                        A[i * nnxt + j] = sign % pp if sign > 0 else (sign % pp + pp) % pp
                with nogil:
                    r = _rank_modp_arr(A, ncur, nnxt, pp)
                free(A)
            free(cur_arr)
        dims.append(ncur - r - prev_rank)
        prev_rank = r
    return dims
