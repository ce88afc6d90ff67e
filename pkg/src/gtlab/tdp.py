"""Counting minimum total dominating sets of a forest by tree DP.

Every vertex carries four cells of the (min-size, count) semiring, one per
state of the vertex relative to a partial solution D restricted to its
subtree:

=========  ===========  ===================================
state      v in D       v already has a D-neighbor below it
=========  ===========  ===================================
IN_SAT     yes          yes
IN_NEED    yes          no
OUT_SAT    no           yes
OUT_NEED   no           no
=========  ===========  ===================================

In every state all strict descendants of v are already totally dominated.
Children are folded in one at a time into a met/unmet accumulator, which is
how "at least one child in D" is expressed without subtraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import reduce
from itertools import product

from . import kernels
from .errors import CapExceeded, GammaUndefined
from .forest import Forest, RootedView, has_isolated_vertex, root_all
from .oracle import SetFamily

INF = kernels.INF


@dataclass(frozen=True, slots=True)
class MinCount:
    size: int
    count: int

    def __post_init__(self) -> None:
        if (self.size >= INF) != (self.count == 0):
            raise ValueError(f"inconsistent MinCount({self.size}, {self.count})")

    @property
    def feasible(self) -> bool:
        return self.size < INF

    def __add__(self, other: MinCount) -> MinCount:
        return semiring_add(self, other)

    def __mul__(self, other: MinCount) -> MinCount:
        return semiring_mul(self, other)

    def __repr__(self) -> str:
        return "MinCount(INF, 0)" if not self.feasible else f"MinCount({self.size}, {self.count})"


INFEASIBLE = MinCount(INF, 0)
ONE = MinCount(0, 1)


def semiring_add(a: MinCount, b: MinCount) -> MinCount:
    if a.size < b.size:
        return a
    if b.size < a.size:
        return b
    if not a.feasible:
        return INFEASIBLE
    return MinCount(a.size, a.count + b.count)


def semiring_mul(a: MinCount, b: MinCount) -> MinCount:
    if not (a.feasible and b.feasible):
        return INFEASIBLE
    return MinCount(a.size + b.size, a.count * b.count)


class State(IntEnum):
    IN_SAT = 0
    IN_NEED = 1
    OUT_SAT = 2
    OUT_NEED = 3


IN_STATES = (State.IN_SAT, State.IN_NEED)
OUT_STATES = (State.OUT_SAT, State.OUT_NEED)

# (parent in D, parent flag after the fold) -> [(flag before, admissible child states)]
_TRANSITIONS = {
    (True, True): [(True, tuple(State)), (False, IN_STATES)],
    (True, False): [(False, OUT_STATES)],
    (False, True): [(True, (State.IN_SAT, State.OUT_SAT)), (False, (State.IN_SAT,))],
    (False, False): [(False, (State.OUT_SAT,))],
}

Cells = tuple[MinCount, MinCount, MinCount, MinCount]


def leaf_cells() -> Cells:
    return (INFEASIBLE, MinCount(1, 1), INFEASIBLE, MinCount(0, 1))


def fold_child(acc: Cells, child: Cells) -> Cells:
    """Fold one finished child into a parent's accumulator."""
    in_met, in_un, out_met, out_un = acc
    c_in = child[State.IN_SAT] + child[State.IN_NEED]
    c_out = child[State.OUT_SAT] + child[State.OUT_NEED]
    c_adm = child[State.IN_SAT] + child[State.OUT_SAT]
    return (
        in_met * (c_in + c_out) + in_un * c_in,
        in_un * c_out,
        out_met * c_adm + out_un * child[State.IN_SAT],
        out_un * child[State.OUT_SAT],
    )


@dataclass(frozen=True)
class DpTable:
    """Cells of every vertex, plus the accumulator after each folded child.

    ``prefix[v][j]`` is v's accumulator after its first ``j`` children
    (ascending id); ``cells[v] == prefix[v][-1]``.
    """

    rooted: RootedView
    prefix: tuple[tuple[Cells, ...], ...]

    def cells(self, v: int) -> Cells:
        return self.prefix[v][-1]

    def root_value(self, r: int) -> MinCount:
        c = self.cells(r)
        return c[State.IN_SAT] + c[State.OUT_SAT]

    def value(self) -> MinCount:
        return reduce(semiring_mul, (self.root_value(r) for r in self.rooted.roots), ONE)


def _require_defined(f: Forest) -> None:
    if f.n == 0 or has_isolated_vertex(f):
        raise GammaUndefined("γ_t is undefined for a forest with an isolated vertex")


def dp_table(f: Forest) -> DpTable:
    _require_defined(f)
    rv = root_all(f)
    prefix: list[tuple[Cells, ...]] = [()] * f.n
    for v in rv.order:
        steps = [leaf_cells()]
        for c in rv.children[v]:
            steps.append(fold_child(steps[-1], prefix[c][-1]))
        prefix[v] = tuple(steps)
    return DpTable(rv, tuple(prefix))


def dp_gamma_t(f: Forest) -> tuple[int, int]:
    """``(γ_t, ♯γ_t)`` in linear time."""
    _require_defined(f)
    rv = root_all(f)
    parent = [-1 if p is None else p for p in rv.parent]
    size, count = kernels.dp_count(parent, rv.order)
    return size, count


def list_gamma_t_sets(f: Forest, cap: int = 100_000) -> SetFamily:
    """Every γ_t-set, recovered by walking the DP table backwards."""
    table = dp_table(f)
    total = table.value()
    if total.count > cap:
        raise CapExceeded(f"{total.count} γ_t-sets exceed the listing cap {cap}", total.count)
    rv = table.rooted
    memo: dict[tuple[int, int, bool, bool], list[int]] = {}

    def prefix_sets(v: int, j: int, flag: bool, in_d: bool) -> list[int]:
        # D restricted to v and the subtrees of its first j children
        key = (v, j, flag, in_d)
        if key in memo:
            return memo[key]
        state = _state(in_d, flag)
        target = table.prefix[v][j][state]
        out: list[int] = []
        if not target.feasible:
            pass
        elif j == 0:
            out = [1 << v if in_d else 0]
        else:
            child = rv.children[v][j - 1]
            child_cells = table.prefix[child][-1]
            for prev_flag, child_states in _TRANSITIONS[(in_d, flag)]:
                prev = table.prefix[v][j - 1][_state(in_d, prev_flag)]
                for cs in child_states:
                    cell = child_cells[cs]
                    if not (prev.feasible and cell.feasible):
                        continue
                    if prev.size + cell.size != target.size:
                        continue
                    left = prefix_sets(v, j - 1, prev_flag, in_d)
                    right = vertex_sets(child, cs)
                    out.extend(a | b for a in left for b in right)
        memo[key] = out
        return out

    def vertex_sets(v: int, state: State) -> list[int]:
        in_d = state in IN_STATES
        flag = state in (State.IN_SAT, State.OUT_SAT)
        return prefix_sets(v, len(rv.children[v]), flag, in_d)

    per_root = []
    for r in rv.roots:
        best = table.root_value(r)
        masks = []
        for st in (State.IN_SAT, State.OUT_SAT):
            if table.cells(r)[st].size == best.size:
                masks.extend(vertex_sets(r, st))
        per_root.append(masks)
    combined = [reduce(lambda a, b: a | b, combo, 0) for combo in product(*per_root)]
    return SetFamily.from_masks(combined, total.size)


def _state(in_d: bool, flag: bool) -> State:
    if in_d:
        return State.IN_SAT if flag else State.IN_NEED
    return State.OUT_SAT if flag else State.OUT_NEED
