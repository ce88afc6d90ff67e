import random
from itertools import combinations

import pytest

from gtlab import _pykernels
from gtlab.forest import Forest, disjoint_union, relabel

try:
    from gtlab import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="compiled"))

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def path(n):
    return Forest.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n, center=0):
    return Forest.from_edges(n, [(center, v) for v in range(n) if v != center])


def prufer_tree(seq, n):
    """Labeled tree from a Prüfer sequence (simple quadratic decoder)."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return Forest.from_edges(n, edges)


def random_tree(rng, n):
    if n == 1:
        return Forest.from_edges(1, [])
    if n == 2:
        return Forest.from_edges(2, [(0, 1)])
    return prufer_tree([rng.randrange(n) for _ in range(n - 2)], n)


def random_forest(rng, max_n=14):
    """Random forest without isolated vertices, vertices shuffled."""
    total = rng.randint(2, max_n)
    sizes = []
    while total - sum(sizes) >= 2:
        sizes.append(rng.randint(2, total - sum(sizes)))
    f = disjoint_union(*(random_tree(rng, s) for s in sizes))
    perm = list(range(f.n))
    rng.shuffle(perm)
    return relabel(f, perm)


def naive_total_dominating_sets(f):
    """All minimum total dominating sets by plain set logic (no bitmasks)."""
    vertices = range(f.n)
    for k in range(1, f.n + 1):
        found = [
            c
            for c in combinations(vertices, k)
            if all(any(w in c for w in f.adjacency[v]) for v in vertices)
        ]
        if found:
            return k, found
    return None, []


@pytest.fixture
def rng():
    return random.Random(20190303)
