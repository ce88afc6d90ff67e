"""Forests: validated construction, parsing, serialization and rooting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence


class ForestError(ValueError):
    """Base class for rejected forest inputs.

    ``line`` is the 1-based line of the offending input, or ``None`` when the
    input did not come from a document.
    """

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedLine(ForestError):
    pass


class IndexOutOfRange(ForestError):
    pass


class DuplicateEdge(ForestError):
    pass


class SelfLoop(ForestError):
    pass


class CycleDetected(ForestError):
    pass


class InvalidLevelSequence(ForestError):
    pass


class NotATree(ForestError):
    pass


class _DisjointSet:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


@dataclass(frozen=True)
class Forest:
    """An undirected acyclic simple graph on vertices ``0..n-1``.

    Edges are stored normalized (``u < v``) and sorted, so two forests with
    the same edge set compare equal regardless of input order. Construct
    through :meth:`from_edges` to get validation.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> Forest:
        return _build(n, [(u, v, None) for u, v in edges])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __len__(self) -> int:
        return self.n


def _build(n: int, edges: Sequence[tuple[int, int, int | None]]) -> Forest:
    if n < 0:
        raise ForestError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    dsu = _DisjointSet(n)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v, line in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", line)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", line)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key[0]} {key[1]}", line)
        if not dsu.union(u, v):
            raise CycleDetected(f"edge {u} {v} closes a cycle", line)
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Forest(
        n=n,
        edges=tuple(sorted(seen)),
        adjacency=tuple(tuple(sorted(nb)) for nb in adj),
    )


def parse_forest(text: str) -> Forest:
    """Parse the edge-list format: ``n`` on the first line, then ``u v`` lines.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [(i, raw.split("#", 1)[0].strip()) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise MalformedLine("missing vertex count", 1)
    first_no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise MalformedLine(f"expected vertex count, got {first!r}", first_no) from None
    if n < 0:
        raise MalformedLine(f"vertex count must be nonnegative, got {n}", first_no)
    edges = []
    for line_no, s in lines[1:]:
        parts = s.split()
        if len(parts) != 2:
            raise MalformedLine(f"expected 'u v', got {s!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"non-integer vertex in {s!r}", line_no) from None
        edges.append((u, v, line_no))
    return _build(n, edges)


def serialize(f: Forest) -> str:
    out = [str(f.n)]
    out.extend(f"{u} {v}" for u, v in f.edges)
    return "\n".join(out) + "\n"


def validate_level_sequence(seq: Sequence[int]) -> None:
    if not seq:
        raise InvalidLevelSequence("empty level sequence")
    if seq[0] != 0:
        raise InvalidLevelSequence(f"level sequence must start with 0, got {seq[0]}")
    for i in range(1, len(seq)):
        if not 1 <= seq[i] <= seq[i - 1] + 1:
            raise InvalidLevelSequence(
                f"entry {i} is {seq[i]}; must lie in 1..{seq[i - 1] + 1}"
            )


def level_parents(seq: Sequence[int]) -> list[int]:
    """Parent of each vertex of a level sequence (``-1`` for the root).

    The sequence is assumed valid.
    """
    parents = [-1] * len(seq)
    last_at_depth: list[int] = []
    for i, d in enumerate(seq):
        del last_at_depth[d:]
        if d:
            parents[i] = last_at_depth[d - 1]
        last_at_depth.append(i)
    return parents


def from_level_sequence(seq: Sequence[int]) -> Forest:
    """Decode a DFS depth sequence; vertex ``i`` is the ``i``-th vertex visited."""
    seq = list(seq)
    validate_level_sequence(seq)
    parents = level_parents(seq)
    return Forest.from_edges(len(seq), [(p, i) for i, p in enumerate(parents) if p >= 0])


def parse_level_sequences(text: str) -> list[list[int]]:
    out = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s:
            continue
        try:
            seq = [int(tok) for tok in s.split()]
        except ValueError:
            raise MalformedLine(f"non-integer depth in {s!r}", line_no) from None
        try:
            validate_level_sequence(seq)
        except InvalidLevelSequence as exc:
            raise InvalidLevelSequence(str(exc), line_no) from None
        out.append(seq)
    return out


def format_level_sequence(seq: Sequence[int]) -> str:
    return " ".join(map(str, seq))


class Component(NamedTuple):
    forest: Forest
    labels: tuple[int, ...]
    """``labels[i]`` is the vertex of the parent forest relabeled to ``i``."""


def components(f: Forest) -> list[Component]:
    """Connected components in order of their smallest vertex."""
    seen = [False] * f.n
    out = []
    for start in range(f.n):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for w in f.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    stack.append(w)
        members.sort()
        index = {v: i for i, v in enumerate(members)}
        edges = [
            (index[u], index[v]) for u in members for v in f.adjacency[u] if u < v
        ]
        out.append(Component(Forest.from_edges(len(members), edges), tuple(members)))
    return out


def component_count(f: Forest) -> int:
    dsu = _DisjointSet(f.n)
    for u, v in f.edges:
        dsu.union(u, v)
    return sum(1 for v in range(f.n) if dsu.find(v) == v)


def is_tree(f: Forest) -> bool:
    return f.n >= 1 and len(f.edges) == f.n - 1


def has_isolated_vertex(f: Forest) -> bool:
    return any(not nb for nb in f.adjacency)


def disjoint_union(*forests: Forest) -> Forest:
    edges = []
    offset = 0
    for f in forests:
        edges.extend((u + offset, v + offset) for u, v in f.edges)
        offset += f.n
    return Forest.from_edges(offset, edges)


def relabel(f: Forest, perm: Sequence[int]) -> Forest:
    """Forest with vertex ``v`` renamed to ``perm[v]``."""
    return Forest.from_edges(f.n, [(perm[u], perm[v]) for u, v in f.edges])


@dataclass(frozen=True)
class RootedView:
    """Every component rooted at its smallest vertex.

    ``order`` lists children before their parents (DFS post-order, children
    visited in ascending id).
    """

    roots: tuple[int, ...]
    parent: tuple[int | None, ...]
    order: tuple[int, ...]
    children: tuple[tuple[int, ...], ...] = field(repr=False)


def root_all(f: Forest) -> RootedView:
    parent: list[int | None] = [None] * f.n
    visited = [False] * f.n
    children: list[list[int]] = [[] for _ in range(f.n)]
    roots = []
    order = []
    for r in range(f.n):
        if visited[r]:
            continue
        roots.append(r)
        visited[r] = True
        # (vertex, index of next neighbor to try)
        stack = [(r, 0)]
        while stack:
            v, i = stack[-1]
            nbrs = f.adjacency[v]
            while i < len(nbrs) and visited[nbrs[i]]:
                i += 1
            if i == len(nbrs):
                stack.pop()
                order.append(v)
                continue
            w = nbrs[i]
            stack[-1] = (v, i + 1)
            visited[w] = True
            parent[w] = v
            children[v].append(w)
            stack.append((w, 0))
    return RootedView(
        roots=tuple(roots),
        parent=tuple(parent),
        order=tuple(order),
        children=tuple(tuple(c) for c in children),
    )
