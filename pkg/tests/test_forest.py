import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtlab.forest import (
    CycleDetected,
    DuplicateEdge,
    Forest,
    IndexOutOfRange,
    InvalidLevelSequence,
    MalformedLine,
    SelfLoop,
    component_count,
    components,
    disjoint_union,
    format_level_sequence,
    from_level_sequence,
    has_isolated_vertex,
    level_parents,
    parse_forest,
    parse_level_sequences,
    root_all,
    serialize,
)

from conftest import path, random_forest, star


def test_parse_single_edge():
    f = parse_forest("2\n0 1")
    assert f.n == 2
    assert f.edges == ((0, 1),)
    assert f.adjacency == ((1,), (0,))


def test_parse_path_ignores_blank_lines_and_comments():
    f = parse_forest("# P4\n4\n\n0 1\n1 2  # middle\n2 3\n")
    assert f == path(4)


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("3\n0 1\n1 2\n2 0", CycleDetected, 4),
        ("3\n0 1\n1 x", MalformedLine, 3),
        ("3\n0 1 2", MalformedLine, 2),
        ("3\n0 3", IndexOutOfRange, 2),
        ("3\n0 1\n1 0", DuplicateEdge, 3),
        ("3\n1 1", SelfLoop, 2),
        ("", MalformedLine, 1),
        ("three", MalformedLine, 1),
    ],
)
def test_parse_errors_name_the_line(text, error, line):
    with pytest.raises(error) as info:
        parse_forest(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_round_trip_up_to_edge_order():
    f = parse_forest("5\n3 4\n0 1\n2 1\n")
    assert parse_forest(serialize(f)) == f
    assert f == Forest.from_edges(5, [(1, 0), (4, 3), (1, 2)])


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=50)
def test_round_trip_random(seed):
    import random

    f = random_forest(random.Random(seed))
    assert parse_forest(serialize(f)) == f


@pytest.mark.parametrize(
    "seq, edges",
    [
        ([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)]),
        ([0, 1, 1, 1], [(0, 1), (0, 2), (0, 3)]),
        ([0, 1, 2, 2, 1], [(0, 1), (1, 2), (1, 3), (0, 4)]),
    ],
)
def test_from_level_sequence(seq, edges):
    assert from_level_sequence(seq) == Forest.from_edges(len(seq), edges)


def test_spider_degree_sequence():
    f = from_level_sequence([0, 1, 2, 2, 1])
    assert sorted((f.degree(v) for v in range(f.n)), reverse=True) == [3, 2, 1, 1, 1]


@pytest.mark.parametrize("seq", [[], [1, 2], [0, 2], [0, 1, 3], [0, 0]])
def test_invalid_level_sequences(seq):
    with pytest.raises(InvalidLevelSequence):
        from_level_sequence(seq)


def _dfs_depths(f):
    depth = {0: 0}
    out = []
    stack = [0]
    while stack:
        v = stack.pop()
        out.append(depth[v])
        for w in sorted(f.adjacency[v], reverse=True):
            if w not in depth:
                depth[w] = depth[v] + 1
                stack.append(w)
    return out



@st.composite
def valid_level_sequences(draw):
    n = draw(st.integers(1, 16))
    seq = [0]
    for _ in range(n - 1):
        seq.append(draw(st.integers(1, seq[-1] + 1)))
    return seq


@given(valid_level_sequences())
def test_level_sequence_depths_reproduced(seq):
    f = from_level_sequence(seq)
    assert _dfs_depths(f) == seq
    assert [p for p in level_parents(seq)][0] == -1


def test_level_sequence_text_format():
    text = "0 1 2\n\n0 1 1\n"
    seqs = parse_level_sequences(text)
    assert seqs == [[0, 1, 2], [0, 1, 1]]
    assert format_level_sequence(seqs[0]) == "0 1 2"
    with pytest.raises(InvalidLevelSequence) as info:
        parse_level_sequences("0 1\n0 2\n")
    assert info.value.line == 2


def test_components():
    assert [c.forest for c in components(path(4))] == [path(4)]
    k2 = path(2)
    parts = components(disjoint_union(k2, k2))
    assert [c.forest for c in parts] == [k2, k2]
    assert [c.labels for c in parts] == [(0, 1), (2, 3)]
    assert components(Forest.from_edges(0, [])) == []


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=50)
def test_components_partition(seed):
    import random

    f = random_forest(random.Random(seed))
    parts = components(f)
    assert sum(c.forest.n for c in parts) == f.n
    assert len(parts) == component_count(f)
    mapped = sorted(
        tuple(sorted((c.labels[u], c.labels[v]))) for c in parts for u, v in c.forest.edges
    )
    assert mapped == list(f.edges)
    assert len(f.edges) == f.n - len(parts)


def test_root_all_examples():
    rv = root_all(path(2))
    assert rv.roots == (0,) and rv.order == (1, 0)
    assert root_all(path(4)).order == (3, 2, 1, 0)
    rv = root_all(star(4, center=1))
    assert rv.roots == (0,)
    assert rv.parent == (None, 0, 1, 1)
    assert rv.order == (2, 3, 1, 0)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=50)
def test_root_all_children_before_parents(seed):
    import random

    f = random_forest(random.Random(seed))
    rv = root_all(f)
    pos = {v: i for i, v in enumerate(rv.order)}
    assert sorted(rv.order) == list(range(f.n))
    for r in rv.roots:
        assert rv.parent[r] is None
    for v, p in enumerate(rv.parent):
        if p is not None:
            assert pos[v] < pos[p]
            assert (min(v, p), max(v, p)) in f.edges
    assert list(rv.roots) == [c.labels[0] for c in components(f)]


def test_has_isolated_vertex():
    assert not has_isolated_vertex(path(2))
    assert has_isolated_vertex(Forest.from_edges(1, []))
    assert has_isolated_vertex(disjoint_union(path(2), Forest.from_edges(1, [])))
