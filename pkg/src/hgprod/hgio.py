"""The .hg text format: parsing and canonical serialization.

Format:
  - lines starting with '#' are comments, blank lines are ignored
  - first payload line:   ``vertices: t1 t2 ... tn``
  - each later payload line: ``edge: ti tj ...``
  - pair labels serialize as ``(left,right)`` with no interior whitespace,
    nested arbitrarily: ``((a,b),x)``

Serialization is canonical: vertices in label order, edges sorted by
(size, member list), members sorted.  Parsing a serialization yields an
equal hypergraph, and serialize . parse is the identity on canonical text.
"""

from __future__ import annotations

from .core import (
    Atom,
    Edge,
    Hypergraph,
    Label,
    Pair,
    edge_key,
    format_label,
    label_key,
)


class HgParseError(ValueError):
    """Malformed .hg input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_label(text: str) -> Label:
    """Parse a single label token (atom or nested pair)."""
    value, pos = _parse_label_at(text, 0)
    if pos != len(text):
        raise ValueError(f"trailing input after label: {text[pos:]!r}")
    return value


def _parse_label_at(text: str, pos: int) -> tuple[Label, int]:
    if pos >= len(text):
        raise ValueError("empty label")
    if text[pos] == "(":
        left, pos = _parse_label_at(text, pos + 1)
        if pos >= len(text) or text[pos] != ",":
            raise ValueError(f"expected ',' at offset {pos} in label")
        right, pos = _parse_label_at(text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"expected ')' at offset {pos} in label")
        return Pair(left, right), pos + 1
    end = pos
    while end < len(text) and text[end] not in ",()" and not text[end].isspace():
        end += 1
    if end == pos:
        raise ValueError(f"empty atom at offset {pos} in label")
    return Atom(text[pos:end]), end


def parse_hg(text: str) -> Hypergraph:
    """Parse .hg text into a hypergraph.

    Raises HgParseError with a line number on malformed lines, and names the
    offending token when an edge uses an undeclared vertex.
    """
    vertices: set | None = None
    edges: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(":")
        keyword = keyword.strip()
        if keyword == "vertices":
            if vertices is not None:
                raise HgParseError("duplicate vertices line", lineno)
            vertices = set()
            for token in rest.split():
                vertices.add(_parse_token(token, lineno))
        elif keyword == "edge":
            if vertices is None:
                raise HgParseError("edge before vertices line", lineno)
            members = set()
            for token in rest.split():
                label = _parse_token(token, lineno)
                if label not in vertices:
                    raise HgParseError(f"unknown vertex {token!r} in edge", lineno)
                members.add(label)
            if not members:
                raise HgParseError("edge with no members", lineno)
            edges.add(frozenset(members))
        else:
            raise HgParseError(f"expected 'vertices:' or 'edge:', got {line!r}", lineno)
    if vertices is None:
        raise HgParseError("missing vertices line")
    return Hypergraph(frozenset(vertices), frozenset(edges))


def _parse_token(token: str, lineno: int) -> Label:
    try:
        return parse_label(token)
    except ValueError as exc:
        raise HgParseError(f"bad label {token!r}: {exc}", lineno) from exc


def serialize_hg(hg: Hypergraph) -> str:
    """Canonical .hg serialization (sorted vertices, edges and members)."""
    lines = []
    vertex_part = " ".join(format_label(v) for v in sorted(hg.vertices, key=label_key))
    lines.append(f"vertices: {vertex_part}".rstrip())
    for e in sorted(hg.edges, key=edge_key):
        members = " ".join(format_label(m) for m in sorted(e, key=label_key))
        lines.append(f"edge: {members}")
    return "\n".join(lines) + "\n"
