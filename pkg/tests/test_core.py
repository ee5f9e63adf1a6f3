import pytest

from hgirr import (
    EdgeTrace,
    HypergraphError,
    Partition,
    build,
    components,
    degrees,
    is_connected,
    is_regular,
    relabel,
    symmetric_difference_size,
    union_edges,
    validate_partition,
)
from hgirr.constructions import complete_r_partite, single_edge


def test_build_single_edge():
    H = build(3, 3, [[1, 2, 3]])
    assert (H.r, H.n, H.m) == (3, 3, 1)
    assert H.edges == ((1, 2, 3),)


def test_build_two_path(two_path):
    assert two_path.m == 2
    assert list(degrees(two_path)) == [2, 1, 1, 1, 1]


def test_build_canonicalizes():
    H = build(3, 5, [[5, 4, 1], [3, 2, 1]])
    assert H.edges == ((1, 2, 3), (1, 4, 5))
    assert H == build(3, 5, [[1, 2, 3], [1, 4, 5]])


def test_build_rejects_repeated_vertex():
    with pytest.raises(HypergraphError, match="repeated vertex"):
        build(3, 3, [[1, 2, 2]])


def test_build_rejects_wrong_cardinality():
    with pytest.raises(HypergraphError, match="expected 3"):
        build(3, 4, [[1, 2]])


def test_build_rejects_out_of_range():
    with pytest.raises(HypergraphError, match="out of range"):
        build(3, 3, [[1, 2, 4]])
    with pytest.raises(HypergraphError, match="out of range"):
        build(3, 3, [[0, 1, 2]])


def test_build_duplicate_edge_strict_and_lenient():
    with pytest.raises(HypergraphError, match="duplicate edge"):
        build(3, 4, [[1, 2, 3], [3, 2, 1]])
    H = build(3, 4, [[1, 2, 3], [3, 2, 1]], dedupe=True)
    assert H.m == 1


def test_build_rejects_degenerate_sizes():
    with pytest.raises(HypergraphError):
        build(1, 5, [])
    with pytest.raises(HypergraphError):
        build(3, 2, [])


def test_degree_sum_equals_rm(two_path, star3):
    for H in (two_path, star3, single_edge(4)):
        assert int(degrees(H).sum()) == H.r * H.m


def test_degrees_regular_constant():
    H, _ = complete_r_partite([2, 2, 2])
    assert set(degrees(H).tolist()) == {4}
    assert is_regular(H)


def test_components_connected_identity(two_path):
    comps = components(two_path)
    assert len(comps) == 1
    verts, sub = comps[0]
    assert verts == (1, 2, 3, 4, 5)
    assert sub == two_path
    assert is_connected(two_path)


def test_components_two_disjoint_edges():
    H = build(3, 6, [[1, 2, 3], [4, 5, 6]])
    comps = components(H)
    assert len(comps) == 2
    for verts, sub in comps:
        assert sub == single_edge(3)
    assert not is_connected(H)


def test_components_isolated_vertex(two_path):
    H = build(3, 6, [[1, 2, 3], [1, 4, 5]])
    comps = components(H)
    assert len(comps) == 2
    assert comps[0][1] == two_path
    verts, singleton = comps[1]
    assert verts == (6,)
    assert singleton.n == 1 and singleton.m == 0


def test_components_partition_vertices_and_edges():
    H = build(3, 9, [[1, 2, 3], [3, 4, 5], [6, 7, 8]])
    comps = components(H)
    all_verts = sorted(v for verts, _ in comps for v in verts)
    assert all_verts == list(range(1, 10))
    assert sum(sub.m for _, sub in comps) == H.m
    for _, sub in comps:
        assert len(components(sub)) == 1


def test_validate_partition_examples(two_path, two_path_partition):
    assert validate_partition(two_path, two_path_partition)
    # two class-1 vertices inside the single edge
    H = build(3, 3, [[1, 2, 3]])
    P = Partition((1, 1, 2), 3)
    assert not validate_partition(H, P)


def test_validate_partition_complete_by_construction():
    H, P = complete_r_partite([2, 3, 2])
    assert validate_partition(H, P)


def test_validate_partition_requires_matching_shape(two_path):
    with pytest.raises(HypergraphError):
        validate_partition(two_path, Partition((1, 2, 3), 3))
    with pytest.raises(HypergraphError):
        validate_partition(two_path, Partition((1, 2, 1, 2, 1), 2))


def test_partition_class_accessors(two_path_partition):
    assert two_path_partition.class_sizes == (1, 2, 2)
    assert two_path_partition.classes == ((1,), (2, 4), (3, 5))


def test_partition_rejects_bad_labels():
    with pytest.raises(HypergraphError):
        Partition((1, 4), 3)
    with pytest.raises(HypergraphError):
        Partition((0, 1), 2)


def test_union_idempotent(two_path):
    assert union_edges(two_path, two_path) == two_path


def test_union_disjoint_edges():
    H1 = build(3, 6, [[1, 2, 3]])
    H2 = build(3, 6, [[4, 5, 6]])
    assert union_edges(H1, H2).m == 2


def test_union_absorbs_duplicates():
    H1 = build(3, 4, [[1, 2, 3]])
    H2 = build(3, 4, [[1, 2, 3], [2, 3, 4]])
    assert union_edges(H1, H2).m == 2


def test_union_rank_mismatch(two_path):
    with pytest.raises(HypergraphError, match="rank mismatch"):
        union_edges(two_path, single_edge(2))


def test_symmetric_difference(two_path):
    assert symmetric_difference_size(two_path, two_path) == 0
    swapped = build(3, 5, [[1, 2, 3], [2, 4, 5]])
    assert symmetric_difference_size(two_path, swapped) == 2
    disjoint = build(3, 5, [[2, 3, 4]])
    assert symmetric_difference_size(two_path, disjoint) == 3
    with pytest.raises(HypergraphError, match="rank mismatch"):
        symmetric_difference_size(two_path, single_edge(2))


def test_relabel_roundtrip(two_path):
    perm = [3, 1, 4, 5, 2]
    moved = relabel(two_path, perm)
    assert moved != two_path
    inverse = [0] * 5
    for old, new in enumerate(perm, 1):
        inverse[new - 1] = old
    assert relabel(moved, inverse) == two_path
    with pytest.raises(HypergraphError):
        relabel(two_path, [1, 1, 2, 3, 4])


def test_edge_trace_apply_validates(two_path):
    trace = EdgeTrace((((1, 4, 5), (2, 4, 5)),))
    moved = trace.apply(two_path)
    assert moved.edge_set == frozenset({(1, 2, 3), (2, 4, 5)})
    with pytest.raises(HypergraphError, match="missing edge"):
        EdgeTrace((((2, 4, 5), (3, 4, 5)),)).apply(two_path)
    with pytest.raises(HypergraphError, match="existing edge"):
        EdgeTrace((((1, 2, 3), (1, 4, 5)),)).apply(two_path)


def test_hashable_and_immutable(two_path):
    assert hash(two_path) == hash(build(3, 5, [[1, 4, 5], [1, 2, 3]]))
    with pytest.raises(AttributeError):
        two_path.n = 7
