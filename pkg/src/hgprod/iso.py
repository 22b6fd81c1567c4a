"""Isomorphism testing and structural relabeling.

are_isomorphic decides isomorphism for small hypergraphs by invariant
screening followed by backtracking vertex assignment.  The screens (vertex
and edge counts, edge-size multiset, degree sequence, per-vertex incident
edge-size multisets) never reject an isomorphic pair; the search is exact
and returns a verified witness mapping.  Instances beyond a configurable
vertex bound are refused instead of searched.

Also here: the regrouping map (x,(y,z)) <-> ((x,y),z) between the two
groupings of a triple product, and the coordinate swap (x,y) -> (y,x) used
by commutativity audits.  Both act structurally on labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (
    Atom,
    Hypergraph,
    Label,
    Pair,
    edge_size_multiset,
    degree_sequence,
    format_label,
    is_bijection,
    label_key,
    vertex_signatures,
)


class IsoBoundError(ValueError):
    """Instance too large for the backtracking search bound."""


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: dict | None
    nodes_explored: int

    def __post_init__(self) -> None:
        if self.isomorphic != (self.witness is not None):
            raise ValueError("witness must be present exactly when isomorphic")


def apply_mapping(hg: Hypergraph, phi: dict) -> Hypergraph:
    """Relabel a hypergraph along a vertex bijection."""
    if not hg.vertices <= phi.keys():
        raise ValueError("mapping not total on the vertex set")
    if len({phi[v] for v in hg.vertices}) != len(hg.vertices):
        raise ValueError("mapping is not injective on the vertex set")
    return Hypergraph(
        frozenset(phi[v] for v in hg.vertices),
        frozenset(frozenset(phi[v] for v in e) for e in hg.edges),
    )


def relabel(hg: Hypergraph, fn: Callable[[Label], Label]) -> Hypergraph:
    """Relabel through a label function (must be injective on the vertex set)."""
    return apply_mapping(hg, {v: fn(v) for v in hg.vertices})


def regroup_right_to_left(v: Label) -> Label:
    """(x,(y,z)) -> ((x,y),z); raises on any other nesting shape."""
    if not isinstance(v, Pair) or not isinstance(v.right, Pair):
        raise ValueError(f"label {format_label(v)} does not have shape (x,(y,z))")
    return Pair(Pair(v.left, v.right.left), v.right.right)


def regroup_left_to_right(v: Label) -> Label:
    """((x,y),z) -> (x,(y,z)); inverse of regroup_right_to_left."""
    if not isinstance(v, Pair) or not isinstance(v.left, Pair):
        raise ValueError(f"label {format_label(v)} does not have shape ((x,y),z)")
    return Pair(v.left.left, Pair(v.left.right, v.right))


def swap_map(v: Label) -> Label:
    """(l,r) -> (r,l); raises on atoms."""
    if not isinstance(v, Pair):
        raise ValueError(f"label {format_label(v)} is not a pair")
    return Pair(v.right, v.left)


def are_isomorphic(h1: Hypergraph, h2: Hypergraph, max_vertices: int = 12) -> IsoResult:
    """Decide whether two hypergraphs are isomorphic.

    Screens first; only when every invariant agrees does the backtracking
    assignment run.  Raises IsoBoundError when a search would be needed on
    more than max_vertices vertices.
    """
    if len(h1.vertices) != len(h2.vertices) or len(h1.edges) != len(h2.edges):
        return IsoResult(False, None, 0)
    if edge_size_multiset(h1) != edge_size_multiset(h2):
        return IsoResult(False, None, 0)
    if degree_sequence(h1) != degree_sequence(h2):
        return IsoResult(False, None, 0)
    sig1 = vertex_signatures(h1)
    sig2 = vertex_signatures(h2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return IsoResult(False, None, 0)

    if len(h1.vertices) > max_vertices:
        raise IsoBoundError(
            f"{len(h1.vertices)} vertices exceeds the search bound of {max_vertices}"
        )

    classes: dict = {}
    for w in h2.vertices:
        classes.setdefault(sig2[w], []).append(w)
    for members in classes.values():
        members.sort(key=label_key)

    # Rarest invariant class first, ties broken lexicographically.
    order = sorted(h1.vertices, key=lambda v: (len(classes[sig1[v]]), label_key(v)))

    incident1: dict = {v: [] for v in h1.vertices}
    for e in h1.edges:
        for v in e:
            incident1[v].append(e)
    incident2: dict = {w: [] for w in h2.vertices}
    for f in h2.edges:
        for w in f:
            incident2[w].append(f)

    assignment: dict = {}
    inverse: dict = {}
    nodes = 0

    def compatible(v: Label, w: Label) -> bool:
        # Any edge now fully assigned must map to an edge, and any target
        # edge fully covered by the image must pull back to an edge.
        for e in incident1[v]:
            if all(u in assignment for u in e):
                if frozenset(assignment[u] for u in e) not in h2.edges:
                    return False
        for f in incident2[w]:
            if all(u in inverse for u in f):
                if frozenset(inverse[u] for u in f) not in h1.edges:
                    return False
        return True

    def extend(idx: int) -> bool:
        nonlocal nodes
        if idx == len(order):
            return True
        v = order[idx]
        for w in classes[sig1[v]]:
            if w in inverse:
                continue
            nodes += 1
            assignment[v] = w
            inverse[w] = v
            if compatible(v, w) and extend(idx + 1):
                return True
            del assignment[v]
            del inverse[w]
        return False

    if extend(0):
        return IsoResult(True, dict(assignment), nodes)
    return IsoResult(False, None, nodes)
