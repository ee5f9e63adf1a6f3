import pytest

from hgirr import (
    HgrFormatError,
    Partition,
    build,
    complete_r_partite,
    parse_hgr,
    parse_partition_text,
    single_edge,
    write_hgr,
)


def test_parse_two_path(two_path):
    H, P = parse_hgr("hgr 3 5 2\n1 2 3\n1 4 5\n")
    assert H == two_path
    assert P is None


def test_parse_canonicalizes_unsorted_edges(two_path):
    H, _ = parse_hgr("hgr 3 5 2\n3 2 1\n5 1 4\n")
    assert H == two_path


def test_parse_ignores_comments_and_blanks(two_path):
    text = "# a comment\n\nhgr 3 5 2\n1 2 3\n# interior\n\n1 4 5\n"
    H, _ = parse_hgr(text)
    assert H == two_path


def test_parse_partition_line(two_path, two_path_partition):
    H, P = parse_hgr("hgr 3 5 2\n1 2 3\n1 4 5\npartition 1 2 3 2 3\n")
    assert H == two_path
    assert P == two_path_partition


def test_parse_edge_count_mismatch():
    with pytest.raises(HgrFormatError, match="edge count mismatch"):
        parse_hgr("hgr 3 5 3\n1 2 3\n1 4 5\n")
    with pytest.raises(HgrFormatError, match="edge count mismatch"):
        parse_hgr("hgr 3 5 1\n1 2 3\n1 4 5\n")


def test_parse_bad_header():
    with pytest.raises(HgrFormatError, match="header"):
        parse_hgr("graph 3 5 2\n")
    with pytest.raises(HgrFormatError, match="header"):
        parse_hgr("hgr 3 5\n")
    with pytest.raises(HgrFormatError, match="empty"):
        parse_hgr("# nothing\n")


def test_parse_malformed_line_number():
    with pytest.raises(HgrFormatError, match="line 3"):
        parse_hgr("hgr 3 5 2\n1 2 3\n1 4 x\n")
    with pytest.raises(HgrFormatError, match="line 2"):
        parse_hgr("hgr 3 5 1\n1 2\n")


def test_parse_propagates_build_validation():
    with pytest.raises(HgrFormatError, match="repeated vertex"):
        parse_hgr("hgr 3 5 1\n1 2 2\n")
    with pytest.raises(HgrFormatError, match="out of range"):
        parse_hgr("hgr 3 5 1\n1 2 9\n")


def test_parse_partition_validation():
    with pytest.raises(HgrFormatError, match="assigns 3"):
        parse_hgr("hgr 3 5 1\n1 2 3\npartition 1 2 3\n")
    with pytest.raises(HgrFormatError, match="invalid partition"):
        parse_hgr("hgr 3 5 1\n1 2 3\npartition 1 1 2 2 3\n")
    with pytest.raises(HgrFormatError, match="content after partition"):
        parse_hgr("hgr 3 5 2\n1 2 3\npartition 1 2 3 2 3\n1 4 5\n")
    with pytest.raises(HgrFormatError, match="duplicate partition"):
        parse_hgr(
            "hgr 3 5 1\n1 2 3\npartition 1 2 3 2 3\npartition 1 2 3 2 3\n"
        )


def test_write_single_edge():
    assert write_hgr(single_edge(3)) == "hgr 3 3 1\n1 2 3\n"


def test_write_partition_trailing_line(two_path, two_path_partition):
    text = write_hgr(two_path, two_path_partition)
    assert text.endswith("partition 1 2 3 2 3\n")


def test_round_trip_identity(two_path, two_path_partition):
    text = write_hgr(two_path, two_path_partition)
    H, P = parse_hgr(text)
    assert H == two_path and P == two_path_partition
    assert write_hgr(H, P) == text


def test_write_canonical_determinism():
    H, P = complete_r_partite([2, 2])
    text = write_hgr(H, P)
    H2, P2 = parse_hgr(text)
    assert write_hgr(H2, P2) == text


def test_parse_partition_text_forms():
    P = parse_partition_text("partition 1 2 3 2 3\n", 5, 3)
    assert P == Partition((1, 2, 3, 2, 3), 3)
    P = parse_partition_text("# classes\n1 2 3\n2 3\n", 5, 3)
    assert P == Partition((1, 2, 3, 2, 3), 3)
    with pytest.raises(HgrFormatError, match="assigns 4"):
        parse_partition_text("1 2 3 2", 5, 3)
    with pytest.raises(HgrFormatError):
        parse_partition_text("1 2 9 2 3", 5, 3)
