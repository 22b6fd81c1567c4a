"""Finite hypergraphs: vertex labels, edges, validation, rank, homomorphisms.

A hypergraph is a finite vertex set together with a set of non-empty vertex
subsets (the edges).  Vertex labels are either atoms or ordered pairs of
labels; product constructions nest pairs, so labels form binary trees and a
regrouping map can act on them structurally.

All values are immutable and hashable.  Edge sets have set semantics: two
edges with identical member sets are one edge, and hypergraph equality
ignores any presentation order of the vertices.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

# Characters that would make atom tokens ambiguous in the text format.
_FORBIDDEN_IN_ATOM = set(",()") | set(" \t\n\r\f\v")


@dataclass(frozen=True)
class Atom:
    """A leaf vertex label: a non-empty token with no whitespace, comma or parens."""

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("atom token must be non-empty")
        bad = _FORBIDDEN_IN_ATOM.intersection(self.name)
        if bad:
            raise ValueError(f"atom token {self.name!r} contains forbidden character")

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"


@dataclass(frozen=True)
class Pair:
    """An ordered pair of labels; the vertex type of a two-factor product."""

    left: Label
    right: Label

    def __repr__(self) -> str:
        return f"Pair({self.left!r}, {self.right!r})"


Label = Union[Atom, Pair]

# An edge is a frozenset of labels; a mapping is a plain dict between labels.
Edge = frozenset
VertexMapping = Mapping


def label_key(v: Label):
    """Sort key realizing the label order: atoms by token, atom < pair,
    pairs lexicographically by (left, right)."""
    if isinstance(v, Atom):
        return (0, v.name)
    return (1, label_key(v.left), label_key(v.right))


def format_label(v: Label) -> str:
    """Render a label in the text form used by the .hg format: atoms verbatim,
    pairs as ``(left,right)`` with no interior whitespace."""
    if isinstance(v, Atom):
        return v.name
    return f"({format_label(v.left)},{format_label(v.right)})"


def edge_key(e: Edge):
    """Sort key for edges: by size, then by the sorted member list."""
    members = sorted(e, key=label_key)
    return (len(e), [label_key(m) for m in members])


def sorted_members(e: Edge) -> list[Label]:
    return sorted(e, key=label_key)


def format_edge(e: Edge) -> str:
    return " ".join(format_label(m) for m in sorted_members(e))


def atoms(names: str) -> list[Atom]:
    """Split a whitespace-separated token string into atom labels."""
    return [Atom(t) for t in names.split()]


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph: a vertex set and a set of edges.

    Construction does not validate; use :func:`validate` to check the subset
    and non-emptiness invariants.  Equality compares the two frozensets, so
    presentation order never matters.
    """

    vertices: frozenset
    edges: frozenset

    def __repr__(self) -> str:
        vs = " ".join(format_label(v) for v in sorted(self.vertices, key=label_key))
        es = "; ".join(format_edge(e) for e in sorted(self.edges, key=edge_key))
        return f"Hypergraph([{vs}], [{es}])"


def hypergraph(vertices: Iterable[Label], edges: Iterable[Iterable[Label]] = ()) -> Hypergraph:
    """Build a hypergraph from label iterables, deduplicating as sets."""
    return Hypergraph(frozenset(vertices), frozenset(frozenset(e) for e in edges))


def from_tokens(vertex_tokens: str, edge_tokens: Iterable[str] = ()) -> Hypergraph:
    """Convenience builder from whitespace-separated atom tokens.

    ``from_tokens("a b c", ["a b", "b c"])`` is the triangle-path on {a,b,c}.
    """
    return hypergraph(atoms(vertex_tokens), [atoms(e) for e in edge_tokens])


def validate(hg: Hypergraph) -> str | None:
    """Check the hypergraph invariants.

    Returns None when every invariant holds, otherwise a message naming the
    first violated invariant and the offending edge.  Deduplication needs no
    check: vertices and edges are stored as frozensets.
    """
    for e in sorted(hg.edges, key=edge_key):
        if len(e) == 0:
            return "empty edge"
        if not e.issubset(hg.vertices):
            return f"edge not subset of vertices: {{{format_edge(e)}}}"
    return None


def rank(hg: Hypergraph) -> int:
    """Maximum edge cardinality; 0 for an edgeless hypergraph."""
    return max((len(e) for e in hg.edges), default=0)


def is_simple(hg: Hypergraph) -> bool:
    """True iff every edge has >= 2 vertices and no edge contains another."""
    if any(len(e) < 2 for e in hg.edges):
        return False
    for e, f in itertools.permutations(hg.edges, 2):
        if e < f:
            return False
    return True


def is_homomorphism(src: Hypergraph, dst: Hypergraph, phi: VertexMapping) -> bool:
    """True iff phi maps every edge of src onto an edge of dst.

    phi must be total on the source vertices with image inside the target
    vertices; anything else is a precondition violation, not a verdict.
    """
    if not src.vertices <= phi.keys():
        missing = min(src.vertices - phi.keys(), key=label_key)
        raise ValueError(f"mapping not total on source vertices: {format_label(missing)} unmapped")
    image = {phi[v] for v in src.vertices}
    if not image <= dst.vertices:
        stray = min(image - dst.vertices, key=label_key)
        raise ValueError(f"mapping image outside target vertices: {format_label(stray)}")
    return all(frozenset(phi[v] for v in e) in dst.edges for e in src.edges)


def is_bijection(phi: VertexMapping) -> bool:
    return len(set(phi.values())) == len(phi)


def edge_size_multiset(hg: Hypergraph) -> Counter:
    """Multiset of edge cardinalities (an isomorphism invariant)."""
    return Counter(len(e) for e in hg.edges)


def degree_sequence(hg: Hypergraph) -> list[int]:
    """Sorted list of per-vertex edge-membership counts (an isomorphism invariant)."""
    degrees = {v: 0 for v in hg.vertices}
    for e in hg.edges:
        for v in e:
            degrees[v] += 1
    return sorted(degrees.values())


def vertex_signatures(hg: Hypergraph) -> dict:
    """Per-vertex invariant: the sorted tuple of incident edge sizes.

    Finer than the degree (it refines degree by edge sizes); used both as an
    isomorphism screen and to order the backtracking search.
    """
    sig: dict = {v: [] for v in hg.vertices}
    for e in hg.edges:
        for v in e:
            sig[v].append(len(e))
    return {v: tuple(sorted(sizes)) for v, sizes in sig.items()}


def iter_sorted_edges(hg: Hypergraph) -> Iterator[Edge]:
    return iter(sorted(hg.edges, key=edge_key))
