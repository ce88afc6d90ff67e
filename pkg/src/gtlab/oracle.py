"""Brute-force ground truth by subset enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import CapExceeded, GammaUndefined
from .forest import Forest, NotATree, has_isolated_vertex, is_tree

ORACLE_CAP = 22
LEMMA1_CAP = 16


@dataclass(frozen=True)
class SetFamily:
    """Vertex sets of one common cardinality, sorted, without duplicates."""

    sets: tuple[tuple[int, ...], ...]
    size: int

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], size: int) -> SetFamily:
        members = sorted({tuple(sorted(s)) for s in sets})
        if any(len(s) != size for s in members):
            raise ValueError(f"every set must have cardinality {size}")
        return cls(tuple(members), size)

    @classmethod
    def from_masks(cls, masks: Iterable[int], size: int) -> SetFamily:
        return cls.from_sets((_bits(m) for m in masks), size)

    def __len__(self) -> int:
        return len(self.sets)

    def to_json(self) -> list[list[int]]:
        return [list(s) for s in self.sets]


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def neighbor_masks(f: Forest) -> list[int]:
    masks = []
    for nb in f.adjacency:
        m = 0
        for w in nb:
            m |= 1 << w
        masks.append(m)
    return masks


def is_total_dominating(f: Forest, d: Iterable[int]) -> bool:
    members = set(d)
    return all(any(w in members for w in nb) for nb in f.adjacency)


def brute_gamma_t(f: Forest, cap: int = ORACLE_CAP) -> tuple[int, int, SetFamily]:
    """``(γ_t, ♯γ_t, family)`` by trying subsets in order of cardinality."""
    if f.n == 0 or has_isolated_vertex(f):
        raise GammaUndefined("γ_t is undefined for a forest with an isolated vertex")
    if f.n > cap:
        raise CapExceeded(f"oracle cap is n <= {cap}, got n = {f.n}", f.n)
    size, count, masks = kernels.min_total_dominating(neighbor_masks(f), True)
    return size, count, SetFamily.from_masks(masks, size)


def check_lemma1(t: Forest, cap: int = LEMMA1_CAP) -> tuple[int, tuple[int, ...]]:
    """Largest B whose members are pairwise non-adjacent with no common neighbor.

    Returns the maximum size and one maximizer; the caller compares the
    size against ``n / 2``.
    """
    if not is_tree(t):
        raise NotATree("check_lemma1 needs a single tree")
    if t.n < 2:
        raise ValueError("check_lemma1 needs n >= 2")
    if t.n > cap:
        raise CapExceeded(f"lemma check cap is n <= {cap}, got n = {t.n}", t.n)
    size, mask = kernels.max_packing(neighbor_masks(t))
    return size, tuple(_bits(mask))


def satisfies_lemma1_conditions(t: Forest, b: Sequence[int]) -> bool:
    members = set(b)
    for u, v in t.edges:
        if u in members and v in members:
            return False
    return all(sum(w in members for w in nb) <= 1 for nb in t.adjacency)
