"""Non-isomorphic free trees as canonical level sequences.

The canonical form of a tree is its lexicographically largest depth-first
level sequence over every rooting at a centroid and every ordering of
children. For a fixed root that maximum is reached by sorting each vertex's
child subsequences in decreasing order.

``gen_trees`` walks all canonical rooted sequences in decreasing
lexicographic order with the Beyer-Hedetniemi successor rule, and keeps a
rooted sequence exactly when its root is a centroid and, for the two-centroid
case, when the rooting at the other centroid is not larger.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

from .forest import Forest, NotATree, from_level_sequence, is_tree, level_parents

DEFAULT_MAX_N = 20


def max_order() -> int:
    return int(os.environ.get("GTLAB_MAX_N", DEFAULT_MAX_N))


@dataclass(frozen=True, order=True)
class CanonicalTree:
    level_sequence: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.level_sequence)

    def to_forest(self) -> Forest:
        return from_level_sequence(self.level_sequence)

    def __str__(self) -> str:
        return " ".join(map(str, self.level_sequence))


def _successor(seq: list[int]) -> bool:
    """Advance to the next canonical rooted sequence in place; False at the end."""
    p = len(seq) - 1
    while p > 0 and seq[p] == 1:
        p -= 1
    if p == 0:
        return False
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    gap = p - q
    for i in range(p, len(seq)):
        seq[i] = seq[i - gap]
    return True


def _rooted_canonical(adj: Sequence[Sequence[int]], root: int) -> tuple[int, ...]:
    n = len(adj)
    parent = [-1] * n
    depth = [0] * n
    parent[root] = root
    bfs = [root]
    for v in bfs:
        for w in adj[v]:
            if parent[w] == -1:
                parent[w] = v
                depth[w] = depth[v] + 1
                bfs.append(w)
    kids: list[list[list[int]]] = [[] for _ in range(n)]
    seqs: list[list[int]] = [[] for _ in range(n)]
    for v in reversed(bfs):
        kids[v].sort(reverse=True)
        s = [depth[v]]
        for k in kids[v]:
            s.extend(k)
        seqs[v] = s
        kids[v] = []
        if v != root:
            kids[parent[v]].append(s)
    return tuple(seqs[root])


def centroids(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    parent = [-1] * n
    parent[0] = 0
    order = [0]
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
        heavy[parent[v]] = max(heavy[parent[v]], size[v])
    best = min(heavy)
    return [v for v in range(n) if heavy[v] == best]


def canonical_form(t: Forest) -> CanonicalTree:
    if not is_tree(t):
        raise NotATree("canonical_form needs a single tree")
    return CanonicalTree(max(_rooted_canonical(t.adjacency, c) for c in centroids(t.adjacency)))


def _adjacency(seq: Sequence[int]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in seq]
    for v, p in enumerate(level_parents(seq)):
        if p >= 0:
            adj[v].append(p)
            adj[p].append(v)
    return adj


def _is_free_canonical(seq: list[int]) -> bool:
    n = len(seq)
    prev = None
    bicentral_at = -1
    for i in range(1, n + 1):
        if i == n or seq[i] == 1:
            if prev is not None:
                size = i - prev
                if 2 * size > n:
                    return False
                if 2 * size == n:
                    bicentral_at = prev
            prev = i
    if bicentral_at < 0:
        return True
    other = _rooted_canonical(_adjacency(seq), bicentral_at)
    return tuple(seq) >= other


def gen_trees(n: int) -> Iterator[CanonicalTree]:
    """Every tree on ``n`` vertices once, in decreasing canonical order."""
    cap = max_order()
    if not 1 <= n <= cap:
        raise ValueError(f"tree order must lie in 1..{cap}, got {n}")
    seq = list(range(n))
    while True:
        if _is_free_canonical(seq):
            yield CanonicalTree(tuple(seq))
        if not _successor(seq):
            return


@dataclass(frozen=True)
class Cursor:
    """Every ``stride``-th tree of ``gen_trees(n)`` starting at index ``offset``.

    Resumable: ``Cursor(n, offset + k * stride, stride)`` continues after
    ``k`` consumed trees.
    """

    n: int
    offset: int
    stride: int

    def indexed(self) -> Iterator[tuple[int, CanonicalTree]]:
        trees = islice(gen_trees(self.n), self.offset, None, self.stride)
        for k, t in enumerate(trees):
            yield self.offset + k * self.stride, t

    def __iter__(self) -> Iterator[CanonicalTree]:
        return (t for _, t in self.indexed())


def partition_range(n: int, parts: int) -> list[Cursor]:
    if parts < 1:
        raise ValueError("parts must be at least 1")
    return [Cursor(n, i, parts) for i in range(parts)]


def tree_count(n: int) -> int:
    return sum(1 for _ in gen_trees(n))
