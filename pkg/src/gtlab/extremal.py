"""Hub-of-units trees conjectured to maximize the γ_t-set count.

A *unit* is a top vertex ``t`` joined to a middle vertex ``m`` that carries
``ℓ`` leaves. In the even family the hub is the first top and every other
top hangs off it; in the odd family the hub is a separate vertex with one
pendant middle ``m0`` and all ``k`` tops attached to it.

Vertex numbering is hub first, then tops, then middles, then leaves, each
group in spec order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .forest import Forest, disjoint_union


def _check_ells(ells: Sequence[int]) -> tuple[int, ...]:
    ells = tuple(int(x) for x in ells)
    if not ells:
        raise ValueError("a spec needs at least one ℓ")
    if any(x < 1 for x in ells):
        raise ValueError(f"every ℓ must be at least 1, got {ells}")
    return ells


@dataclass(frozen=True)
class EvenSpec:
    ells: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ells", _check_ells(self.ells))

    @property
    def k(self) -> int:
        return len(self.ells)

    @property
    def order(self) -> int:
        return 2 * self.k + sum(self.ells)

    @property
    def gamma_t(self) -> int:
        return 2 * self.k


@dataclass(frozen=True)
class OddSpec:
    ells: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ells", _check_ells(self.ells))

    @property
    def k(self) -> int:
        return len(self.ells)

    @property
    def order(self) -> int:
        return 2 * (self.k + 1) + sum(self.ells)

    @property
    def gamma_t(self) -> int:
        return 2 * self.k + 1


def _attach_units(edges, tops, middles, ells, next_id):
    for t, m, ell in zip(tops, middles, ells):
        edges.append((t, m))
        for _ in range(ell):
            edges.append((m, next_id))
            next_id += 1
    return next_id


def build_t_even(spec: EvenSpec) -> Forest:
    k = spec.k
    tops = list(range(k))  # tops[0] is the hub
    middles = list(range(k, 2 * k))
    edges = [(0, t) for t in tops[1:]]
    n = _attach_units(edges, tops, middles, spec.ells, 2 * k)
    return Forest.from_edges(n, edges)


def build_t_odd(spec: OddSpec) -> Forest:
    k = spec.k
    tops = list(range(1, k + 1))
    m0 = k + 1
    middles = list(range(k + 2, 2 * k + 2))
    edges = [(0, t) for t in tops] + [(0, m0)]
    n = _attach_units(edges, tops, middles, spec.ells, 2 * k + 2)
    return Forest.from_edges(n, edges)


def closed_count_even(spec: EvenSpec) -> int:
    return prod(ell + 1 for ell in spec.ells)


def closed_count_odd(spec: OddSpec) -> int:
    ells = spec.ells
    return sum(prod(ells[:i]) * prod(e + 1 for e in ells[i + 1 :]) for i in range(len(ells)))


def closed_count_odd_difference(spec: OddSpec) -> int:
    """Telescoped form of :func:`closed_count_odd`."""
    return prod(e + 1 for e in spec.ells) - prod(spec.ells)


def build_star(order: int) -> Forest:
    if order < 2:
        raise ValueError("a star needs at least 2 vertices")
    return Forest.from_edges(order, [(0, v) for v in range(1, order)])


def build_star_union(parts: int, star_order: int) -> Forest:
    if parts < 1:
        raise ValueError("parts must be at least 1")
    return disjoint_union(*(build_star(star_order) for _ in range(parts)))


def _compositions(total: int, k: int, lo: int = 1):
    if k == 1:
        if total >= lo:
            yield (total,)
        return
    for first in range(lo, total - lo * (k - 1) + 1):
        for rest in _compositions(total - first, k - 1, lo):
            yield (first,) + rest


def _partitions(total: int, k: int, hi: int | None = None):
    """Non-increasing k-tuples of positive integers summing to ``total``."""
    if hi is None:
        hi = total
    if k == 1:
        if 1 <= total <= hi:
            yield (total,)
        return
    for first in range(min(hi, total - (k - 1)), 0, -1):
        for rest in _partitions(total - first, k - 1, first):
            yield (first,) + rest


def family_specs(n: int, gamma_t: int) -> list[EvenSpec] | list[OddSpec]:
    """Specs whose tree has order ``n`` and the given γ_t, using every feasible choice of ℓ."""
    if gamma_t < 2:
        return []
    if gamma_t % 2 == 0:
        k = gamma_t // 2
        return [EvenSpec(e) for e in _partitions(n - 2 * k, k)] if n - 2 * k >= k else []
    k = (gamma_t - 1) // 2
    rest = n - 2 * k - 2
    return [OddSpec(e) for e in _compositions(rest, k)] if k >= 1 and rest >= k else []


def best_family_count(n: int, gamma_t: int) -> tuple[int, EvenSpec | OddSpec] | None:
    """Largest closed-form count among feasible specs, with a maximizer."""
    best = None
    for spec in family_specs(n, gamma_t):
        c = closed_count_even(spec) if isinstance(spec, EvenSpec) else closed_count_odd(spec)
        if best is None or c > best[0]:
            best = (c, spec)
    return best
