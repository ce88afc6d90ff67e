"""Pure-Python implementations of the hot kernels.

Each function here has a compiled twin in ``_ckernels.pyx`` with the same
signature and results; :mod:`gtlab.kernels` picks one at import time.
Graphs are passed as per-vertex neighbor bitmasks or parent arrays so the
same calls work on both sides.
"""

from __future__ import annotations

import heapq
from itertools import combinations, combinations_with_replacement, product

INF = 1 << 30


def min_total_dominating(nbr_masks, collect=False):
    """Smallest total dominating set size, number of such sets, and the sets.

    Returns ``(size, count, masks)`` with ``masks`` a list of bitmasks in
    increasing order when ``collect`` is true, else ``None``. ``(INF, 0, ...)``
    if some vertex has no neighbor.
    """
    n = len(nbr_masks)
    full = (1 << n) - 1
    if n == 0 or any(m == 0 for m in nbr_masks):
        return INF, 0, [] if collect else None
    for k in range(1, n + 1):
        count = 0
        found = [] if collect else None
        for combo in combinations(range(n), k):
            cover = 0
            for v in combo:
                cover |= nbr_masks[v]
            if cover == full:
                count += 1
                if collect:
                    mask = 0
                    for v in combo:
                        mask |= 1 << v
                    found.append(mask)
        if count:
            if collect:
                found.sort()
            return k, count, found
    raise AssertionError("a graph without isolated vertices is totally dominated by V")


def max_packing(nbr_masks):
    """Largest B with no edge inside B and no two members of B sharing a neighbor.

    Returns ``(size, mask)``; among maximizers the numerically smallest mask.
    """
    n = len(nbr_masks)
    best, best_mask = 0, 0
    for mask in range(1 << n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        ok = True
        for u in range(n):
            hit = nbr_masks[u] & mask
            if hit & (hit - 1):
                ok = False
                break
            if (mask >> u) & 1 and hit:
                ok = False
                break
        if ok:
            best, best_mask = size, mask
    return best, best_mask


def _add(a_s, a_c, b_s, b_c):
    if a_s < b_s:
        return a_s, a_c
    if b_s < a_s:
        return b_s, b_c
    return a_s, a_c + b_c


def _mul(a_s, a_c, b_s, b_c):
    if a_s >= INF or b_s >= INF:
        return INF, 0
    return a_s + b_s, a_c * b_c


def dp_count(parent, order):
    """Total domination number and γ_t-set count of a rooted forest.

    ``parent[v]`` is ``-1`` for roots; ``order`` lists every vertex after all
    of its children. Returns ``(INF, 0)`` if a root has no children.
    """
    n = len(parent)
    # accumulators: v in D / not in D, with or without a D-child so far
    in_met_s = [INF] * n
    in_met_c = [0] * n
    in_un_s = [1] * n
    in_un_c = [1] * n
    out_met_s = [INF] * n
    out_met_c = [0] * n
    out_un_s = [0] * n
    out_un_c = [1] * n
    total_s, total_c = 0, 1
    for v in order:
        p = parent[v]
        if p < 0:
            s, c = _add(in_met_s[v], in_met_c[v], out_met_s[v], out_met_c[v])
            if s >= INF:
                return INF, 0
            total_s += s
            total_c *= c
            continue
        is_s, is_c = in_met_s[v], in_met_c[v]
        in_s, in_c = in_un_s[v], in_un_c[v]
        os_s, os_c = out_met_s[v], out_met_c[v]
        on_s, on_c = out_un_s[v], out_un_c[v]

        inn_s, inn_c = _add(is_s, is_c, in_s, in_c)
        out_s, out_c = _add(os_s, os_c, on_s, on_c)
        any_s, any_c = _add(inn_s, inn_c, out_s, out_c)

        # parent in D: every child state admissible
        a = _mul(in_met_s[p], in_met_c[p], any_s, any_c)
        b = _mul(in_un_s[p], in_un_c[p], inn_s, inn_c)
        in_met_s[p], in_met_c[p] = _add(a[0], a[1], b[0], b[1])
        in_un_s[p], in_un_c[p] = _mul(in_un_s[p], in_un_c[p], out_s, out_c)

        # parent not in D: child must already be dominated from below
        adm_s, adm_c = _add(is_s, is_c, os_s, os_c)
        a = _mul(out_met_s[p], out_met_c[p], adm_s, adm_c)
        b = _mul(out_un_s[p], out_un_c[p], is_s, is_c)
        out_met_s[p], out_met_c[p] = _add(a[0], a[1], b[0], b[1])
        out_un_s[p], out_un_c[p] = _mul(out_un_s[p], out_un_c[p], os_s, os_c)
    return total_s, total_c


def _prufer_decode(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    adj = [[] for _ in range(n)]
    for x in seq:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = leaves
    adj[u].append(v)
    adj[v].append(u)
    return adj


def _rooted_code(adj, root, n):
    """Left-aligned base-16 code of the lexicographically largest level sequence."""
    parent = [-1] * n
    depth = [0] * n
    bfs = [root]
    parent[root] = root
    for v in bfs:
        for w in adj[v]:
            if parent[w] == -1:
                parent[w] = v
                depth[w] = depth[v] + 1
                bfs.append(w)
    code = [0] * n
    size = [1] * n
    kids = [[] for _ in range(n)]
    for v in reversed(bfs):
        kids[v].sort(key=lambda c: code[c], reverse=True)
        value = (depth[v] + 1) << (4 * (n - 1))
        offset = 1
        for c in kids[v]:
            value |= code[c] >> (4 * offset)
            offset += size[c]
            size[v] += size[c]
        code[v] = value
        if v != root:
            kids[parent[v]].append(v)
    return code[root]


def tree_code(adj):
    n = len(adj)
    # subtree sizes from vertex 0 to locate centroids
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for v in order:
        for w in adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    heavy = [n - size[v] for v in range(n)]
    for v in order[1:]:
        p = parent[v]
        if size[v] > heavy[p]:
            heavy[p] = size[v]
    best = min(heavy)
    centroids = [v for v in range(n) if heavy[v] == best]
    return max(_rooted_code(adj, c, n) for c in centroids)


def prufer_codes(n, monotone=False):
    """Distinct canonical codes over all n**(n-2) labeled trees on n vertices.

    With ``monotone`` only non-decreasing Prüfer sequences are decoded. That
    still reaches every isomorphism class: label a tree in reverse BFS order
    from any root and the leaf-removal order is the label order, with parent
    labels non-decreasing.
    """
    if not 1 <= n <= 15:
        raise ValueError("prufer_codes supports 1 <= n <= 15")
    if n == 1:
        return [1]
    if n == 2:
        return [(1 << 4) | 2]
    codes = set()
    seqs = (
        combinations_with_replacement(range(n), n - 2)
        if monotone
        else product(range(n), repeat=n - 2)
    )
    for seq in seqs:
        codes.add(tree_code(_prufer_decode(seq, n)))
    return sorted(codes)
