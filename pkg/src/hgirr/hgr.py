"""Plain-text hypergraph documents (the ``hgr`` format).

Layout::

    hgr <r> <n> <m>
    <r space-separated 1-based vertex ids>     (m edge lines)
    partition <c_1> ... <c_n>                  (optional, classes in 1..r)

Blank lines and lines starting with ``#`` are ignored. Edges may appear in
any vertex order; parsing canonicalizes them. Serialization is canonical and
byte-deterministic: edges sorted lexicographically, one trailing newline per
line.
"""

from __future__ import annotations

from .core import HypergraphError, Partition, UniformHypergraph, build, validate_partition

__all__ = ["HgrFormatError", "parse_hgr", "parse_partition_text", "write_hgr"]


class HgrFormatError(HypergraphError):
    """Malformed hgr document; messages carry 1-based line numbers."""


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def _ints(tokens: list[str], lineno: int) -> list[int]:
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise HgrFormatError(f"line {lineno}: expected integer, got {tok!r}") from None
    return values


def parse_hgr(text: str) -> tuple[UniformHypergraph, Partition | None]:
    """Parse an hgr document into a hypergraph and its optional partition."""
    lines = _content_lines(text)
    if not lines:
        raise HgrFormatError("empty document, expected header 'hgr <r> <n> <m>'")

    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 4 or tokens[0] != "hgr":
        raise HgrFormatError(f"line {lineno}: expected header 'hgr <r> <n> <m>'")
    r, n, m = _ints(tokens[1:], lineno)

    body = lines[1:]
    edge_lines = []
    partition_line = None
    for lineno, line in body:
        tokens = line.split()
        if tokens[0] == "partition":
            if partition_line is not None:
                raise HgrFormatError(f"line {lineno}: duplicate partition line")
            partition_line = (lineno, tokens[1:])
            continue
        if partition_line is not None:
            raise HgrFormatError(f"line {lineno}: content after partition line")
        edge_lines.append((lineno, tokens))

    if len(edge_lines) != m:
        raise HgrFormatError(
            f"edge count mismatch: header declares m={m}, found {len(edge_lines)} edge lines"
        )

    edges = []
    for lineno, tokens in edge_lines:
        if len(tokens) != r:
            raise HgrFormatError(
                f"line {lineno}: edge has {len(tokens)} vertices, expected {r}"
            )
        edges.append(_ints(tokens, lineno))

    try:
        H = build(r, n, edges)
    except HypergraphError as exc:
        raise HgrFormatError(str(exc)) from None

    partition = None
    if partition_line is not None:
        lineno, tokens = partition_line
        if len(tokens) != n:
            raise HgrFormatError(
                f"line {lineno}: partition assigns {len(tokens)} vertices, expected {n}"
            )
        class_of = _ints(tokens, lineno)
        try:
            partition = Partition(tuple(class_of), r)
        except HypergraphError as exc:
            raise HgrFormatError(f"line {lineno}: {exc}") from None
        if not validate_partition(H, partition):
            raise HgrFormatError(f"line {lineno}: invalid partition for the given edges")
    return H, partition


def write_hgr(H: UniformHypergraph, partition: Partition | None = None) -> str:
    """Serialize to the canonical hgr form (deterministic bytes)."""
    out = [f"hgr {H.r} {H.n} {H.m}"]
    out.extend(" ".join(str(v) for v in edge) for edge in H.edges)
    if partition is not None:
        if partition.n != H.n:
            raise HypergraphError(
                f"partition covers {partition.n} vertices, hypergraph has {H.n}"
            )
        out.append("partition " + " ".join(str(c) for c in partition.class_of))
    return "\n".join(out) + "\n"


def parse_partition_text(text: str, n: int, r: int) -> Partition:
    """Parse a standalone partition file: n class ids, optionally preceded by
    the word 'partition'; comments and blank lines are ignored."""
    tokens: list[tuple[str, int]] = []
    for lineno, line in _content_lines(text):
        tokens.extend((tok, lineno) for tok in line.split())
    if tokens and tokens[0][0] == "partition":
        tokens = tokens[1:]
    if len(tokens) != n:
        raise HgrFormatError(
            f"partition file assigns {len(tokens)} vertices, expected {n}"
        )
    class_of = [_ints([tok], lineno)[0] for tok, lineno in tokens]
    try:
        return Partition(tuple(class_of), r)
    except HypergraphError as exc:
        raise HgrFormatError(str(exc)) from None
