# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see _pykernels.py for the reference semantics."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    bint __builtin_mul_overflow(uint64_t, uint64_t, uint64_t*) nogil
    bint __builtin_add_overflow(uint64_t, uint64_t, uint64_t*) nogil

cdef enum:
    MAXN = 64
    INF_C = 1 << 30

INF = INF_C


cdef inline int popcount64(uint64_t x) nogil:
    return __builtin_popcountll(x)


def min_total_dominating(nbr_masks, bint collect=False):
    cdef int n = len(nbr_masks)
    cdef uint64_t nb[MAXN]
    cdef int i, k
    cdef uint64_t full, mask, cover, rest, c, r, low, count
    if n > 62:
        raise ValueError("min_total_dominating supports at most 62 vertices")
    if n == 0:
        return INF_C, 0, [] if collect else None
    for i in range(n):
        nb[i] = <uint64_t>nbr_masks[i]
        if nb[i] == 0:
            return INF_C, 0, [] if collect else None
    full = ((<uint64_t>1) << n) - 1
    for k in range(1, n + 1):
        count = 0
        found = [] if collect else None
        mask = ((<uint64_t>1) << k) - 1
        while mask <= full:
            cover = 0
            rest = mask
            while rest:
                cover |= nb[__builtin_ctzll(rest)]
                rest &= rest - 1
            if cover == full:
                count += 1
                if collect:
                    found.append(mask)
            # Gosper's hack: next mask with the same popcount
            c = mask & (~mask + 1)
            r = mask + c
            if r == 0:
                break
            mask = (((r ^ mask) >> 2) // c) | r
        if count:
            return k, count, found
    raise AssertionError("a graph without isolated vertices is totally dominated by V")


def max_packing(nbr_masks):
    cdef int n = len(nbr_masks)
    cdef uint64_t nb[MAXN]
    cdef int i, u, size, best = 0
    cdef uint64_t mask, hit, best_mask = 0, limit
    cdef bint ok
    if n > 30:
        raise ValueError("max_packing supports at most 30 vertices")
    for i in range(n):
        nb[i] = <uint64_t>nbr_masks[i]
    limit = (<uint64_t>1) << n
    with nogil:
        mask = 0
        while mask < limit:
            size = popcount64(mask)
            if size > best:
                ok = True
                for u in range(n):
                    hit = nb[u] & mask
                    if hit & (hit - 1):
                        ok = False
                        break
                    if (mask >> u) & 1 and hit:
                        ok = False
                        break
                if ok:
                    best = size
                    best_mask = mask
            mask += 1
    return best, best_mask


cdef inline void cadd(int64_t as_, uint64_t ac, int64_t bs, uint64_t bc,
                      int64_t* rs, uint64_t* rc, bint* ovf) nogil:
    if as_ < bs:
        rs[0] = as_
        rc[0] = ac
    elif bs < as_:
        rs[0] = bs
        rc[0] = bc
    else:
        rs[0] = as_
        if __builtin_add_overflow(ac, bc, rc):
            ovf[0] = True


cdef inline void cmul(int64_t as_, uint64_t ac, int64_t bs, uint64_t bc,
                      int64_t* rs, uint64_t* rc, bint* ovf) nogil:
    if as_ >= INF_C or bs >= INF_C:
        rs[0] = INF_C
        rc[0] = 0
    else:
        rs[0] = as_ + bs
        if __builtin_mul_overflow(ac, bc, rc):
            ovf[0] = True


def dp_count(parent, order):
    """64-bit count DP; raises OverflowError instead of wrapping."""
    cdef Py_ssize_t n = len(parent)
    cdef Py_ssize_t i
    cdef int v, p
    cdef int64_t s, total_s = 0
    cdef uint64_t c, total_c = 1
    cdef int64_t is_s, in_s, os_s, on_s, inn_s, out_s, any_s, adm_s, as_, bs
    cdef uint64_t is_c, in_c, os_c, on_c, inn_c, out_c, any_c, adm_c, ac, bc
    cdef bint ovf = False
    cdef int* par = <int*>malloc(n * sizeof(int))
    cdef int* ordr = <int*>malloc(n * sizeof(int))
    # 4 cells per vertex: in_met, in_un, out_met, out_un
    cdef int64_t* S = <int64_t*>malloc(4 * n * sizeof(int64_t))
    cdef uint64_t* C = <uint64_t*>malloc(4 * n * sizeof(uint64_t))
    if par == NULL or ordr == NULL or S == NULL or C == NULL:
        free(par); free(ordr); free(S); free(C)
        raise MemoryError()
    try:
        for i in range(n):
            par[i] = parent[i]
            ordr[i] = order[i]
            S[4 * i] = INF_C; C[4 * i] = 0
            S[4 * i + 1] = 1; C[4 * i + 1] = 1
            S[4 * i + 2] = INF_C; C[4 * i + 2] = 0
            S[4 * i + 3] = 0; C[4 * i + 3] = 1
        with nogil:
            for i in range(n):
                v = ordr[i]
                p = par[v]
                if p < 0:
                    cadd(S[4 * v], C[4 * v], S[4 * v + 2], C[4 * v + 2], &s, &c, &ovf)
                    if s >= INF_C:
                        total_s = INF_C
                        total_c = 0
                        break
                    total_s += s
                    if __builtin_mul_overflow(total_c, c, &total_c):
                        ovf = True
                    continue
                is_s = S[4 * v]; is_c = C[4 * v]
                in_s = S[4 * v + 1]; in_c = C[4 * v + 1]
                os_s = S[4 * v + 2]; os_c = C[4 * v + 2]
                on_s = S[4 * v + 3]; on_c = C[4 * v + 3]
                cadd(is_s, is_c, in_s, in_c, &inn_s, &inn_c, &ovf)
                cadd(os_s, os_c, on_s, on_c, &out_s, &out_c, &ovf)
                cadd(inn_s, inn_c, out_s, out_c, &any_s, &any_c, &ovf)

                cmul(S[4 * p], C[4 * p], any_s, any_c, &as_, &ac, &ovf)
                cmul(S[4 * p + 1], C[4 * p + 1], inn_s, inn_c, &bs, &bc, &ovf)
                cadd(as_, ac, bs, bc, &S[4 * p], &C[4 * p], &ovf)
                cmul(S[4 * p + 1], C[4 * p + 1], out_s, out_c, &S[4 * p + 1], &C[4 * p + 1], &ovf)

                cadd(is_s, is_c, os_s, os_c, &adm_s, &adm_c, &ovf)
                cmul(S[4 * p + 2], C[4 * p + 2], adm_s, adm_c, &as_, &ac, &ovf)
                cmul(S[4 * p + 3], C[4 * p + 3], is_s, is_c, &bs, &bc, &ovf)
                cadd(as_, ac, bs, bc, &S[4 * p + 2], &C[4 * p + 2], &ovf)
                cmul(S[4 * p + 3], C[4 * p + 3], os_s, os_c, &S[4 * p + 3], &C[4 * p + 3], &ovf)
                if ovf:
                    break
    finally:
        free(par); free(ordr); free(S); free(C)
    if ovf:
        raise OverflowError("γ_t-set count exceeds 64 bits")
    return int(total_s), int(total_c)


# ---- Prüfer bucketing -------------------------------------------------------

cdef uint64_t rooted_code(int n, int* adj, int* deg, int root,
                          int* parent, int* depth, int* bfs, int* size,
                          uint64_t* code, int* kids) nogil:
    cdef int head = 0, tail = 1, v, w, j, a, b, offset, nk
    cdef uint64_t value, tmp
    for v in range(n):
        parent[v] = -1
    parent[root] = root
    depth[root] = 0
    bfs[0] = root
    while head < tail:
        v = bfs[head]
        head += 1
        for j in range(deg[v]):
            w = adj[v * MAXN + j]
            if parent[w] == -1:
                parent[w] = v
                depth[w] = depth[v] + 1
                bfs[tail] = w
                tail += 1
    for a in range(n - 1, -1, -1):
        v = bfs[a]
        nk = 0
        for j in range(deg[v]):
            w = adj[v * MAXN + j]
            if parent[w] == v and w != root:
                kids[nk] = w
                nk += 1
        # insertion sort, descending by code
        for j in range(1, nk):
            w = kids[j]
            b = j - 1
            while b >= 0 and code[kids[b]] < code[w]:
                kids[b + 1] = kids[b]
                b -= 1
            kids[b + 1] = w
        value = (<uint64_t>(depth[v] + 1)) << (4 * (n - 1))
        offset = 1
        size[v] = 1
        for j in range(nk):
            w = kids[j]
            value |= code[w] >> (4 * offset)
            offset += size[w]
            size[v] += size[w]
        code[v] = value
    return code[root]


cdef int hset_insert(uint64_t* table, uint64_t cap, uint64_t key) nogil:
    # key is never 0 for n >= 1 (root digit is 1)
    cdef uint64_t h = (key * <uint64_t>0x9E3779B97F4A7C15) >> 40
    h &= cap - 1
    while table[h] != 0:
        if table[h] == key:
            return 0
        h = (h + 1) & (cap - 1)
    table[h] = key
    return 1


def prufer_codes(int n, bint monotone=False):
    cdef int seq[MAXN]
    cdef int degree[MAXN]
    cdef int deg[MAXN]
    cdef int adj[MAXN * MAXN]
    cdef int parent[MAXN]
    cdef int depth[MAXN]
    cdef int bfs[MAXN]
    cdef int size[MAXN]
    cdef int kids[MAXN]
    cdef uint64_t code[MAXN]
    cdef int i, j, v, x, leaf, u, w, best, c1, c2
    cdef uint64_t cap = 1 << 16, key, k1, k2
    cdef uint64_t* table
    cdef int heavy[MAXN]
    cdef int order[MAXN]
    cdef bint done
    if not 1 <= n <= 15:
        raise ValueError("prufer_codes supports 1 <= n <= 15")
    if n == 1:
        return [1]
    if n == 2:
        return [(1 << 4) | 2]
    table = <uint64_t*>calloc(cap, sizeof(uint64_t))
    if table == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(n - 2):
                seq[i] = 0
            done = False
            while not done:
                # decode (O(n^2) leaf scan; n is tiny)
                for v in range(n):
                    degree[v] = 1
                    deg[v] = 0
                for i in range(n - 2):
                    degree[seq[i]] += 1
                for i in range(n - 2):
                    x = seq[i]
                    leaf = 0
                    while degree[leaf] != 1:
                        leaf += 1
                    adj[leaf * MAXN + deg[leaf]] = x
                    deg[leaf] += 1
                    adj[x * MAXN + deg[x]] = leaf
                    deg[x] += 1
                    degree[leaf] = 0
                    degree[x] -= 1
                u = -1
                for v in range(n):
                    if degree[v] == 1:
                        if u < 0:
                            u = v
                        else:
                            w = v
                adj[u * MAXN + deg[u]] = w
                deg[u] += 1
                adj[w * MAXN + deg[w]] = u
                deg[w] += 1
                # centroids via subtree sizes from vertex 0
                rooted_code(n, adj, deg, 0, parent, depth, order, size, code, kids)
                for v in range(n):
                    heavy[v] = n - size[v]
                for i in range(1, n):
                    v = order[i]
                    if size[v] > heavy[parent[v]]:
                        heavy[parent[v]] = size[v]
                best = n
                for v in range(n):
                    if heavy[v] < best:
                        best = heavy[v]
                c1 = -1
                c2 = -1
                for v in range(n):
                    if heavy[v] == best:
                        if c1 < 0:
                            c1 = v
                        else:
                            c2 = v
                k1 = rooted_code(n, adj, deg, c1, parent, depth, bfs, size, code, kids)
                if c2 >= 0:
                    k2 = rooted_code(n, adj, deg, c2, parent, depth, bfs, size, code, kids)
                    if k2 > k1:
                        k1 = k2
                hset_insert(table, cap, k1)
                i = n - 3
                if monotone:
                    # next non-decreasing sequence
                    while i >= 0 and seq[i] == n - 1:
                        i -= 1
                    if i < 0:
                        done = True
                    else:
                        seq[i] += 1
                        for j in range(i + 1, n - 2):
                            seq[j] = seq[i]
                else:
                    while i >= 0:
                        seq[i] += 1
                        if seq[i] < n:
                            break
                        seq[i] = 0
                        i -= 1
                    if i < 0:
                        done = True
        out = [table[i] for i in range(cap) if table[i] != 0]
    finally:
        free(table)
    out.sort()
    return out
