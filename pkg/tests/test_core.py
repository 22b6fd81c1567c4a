import pytest
from hypothesis import given

import strategies as stg
from hgprod import (
    Atom,
    Pair,
    atoms,
    degree_sequence,
    edge_key,
    edge_size_multiset,
    format_edge,
    format_label,
    from_tokens,
    hypergraph,
    is_bijection,
    is_homomorphism,
    is_simple,
    label_key,
    rank,
    validate,
    vertex_signatures,
)


# ---------------------------------------------------------------- labels

def test_atom_rejects_unusable_names():
    for bad in ["", "a b", "a,b", "(a", "b)", "a\tb"]:
        with pytest.raises(ValueError):
            Atom(bad)


def test_label_ordering_atoms_before_pairs():
    a, b = Atom("a"), Atom("b")
    assert label_key(a) < label_key(b)
    assert label_key(b) < label_key(Pair(a, a))
    assert label_key(Pair(a, b)) < label_key(Pair(b, a))
    # nesting compares recursively
    assert label_key(Pair(a, Pair(a, b))) < label_key(Pair(b, a))


def test_format_label_nested():
    assert format_label(Atom("x1")) == "x1"
    assert format_label(Pair(Atom("a"), Atom("x"))) == "(a,x)"
    inner = Pair(Atom("b"), Pair(Atom("y"), Atom("z")))
    assert format_label(inner) == "(b,(y,z))"


def test_edge_key_orders_by_size_then_members():
    a, b, c = atoms("a b c")
    small = frozenset({c})
    big = frozenset({a, b})
    assert edge_key(small) < edge_key(big)  # size first
    assert edge_key(frozenset({a, c})) < edge_key(frozenset({b, c}))
    assert format_edge(frozenset({b, a})) == "a b"


# ---------------------------------------------------------------- construction

def test_builders_agree():
    g1 = from_tokens("a b c", ["a b", "b c"])
    g2 = hypergraph(atoms("a b c"), [frozenset(atoms("a b")), frozenset(atoms("b c"))])
    assert g1 == g2


def test_equality_ignores_presentation_order():
    assert from_tokens("a b", ["a b"]) == from_tokens("b a", ["b a"])


def test_validate_accepts_running_example(single_edge_factors):
    g, h = single_edge_factors
    assert validate(g) is None
    assert validate(h) is None


def test_validate_flags_foreign_vertex():
    a, b, c = atoms("a b c")
    bad = hypergraph([a, b], [frozenset({a, c})])
    msg = validate(bad)
    assert msg is not None and "not subset" in msg


def test_validate_flags_empty_edge():
    bad = hypergraph(atoms("a"), [frozenset()])
    msg = validate(bad)
    assert msg is not None and "empty" in msg


# ---------------------------------------------------------------- invariants

def test_rank_and_simplicity():
    h = from_tokens("x y z", ["x y z"])
    assert rank(h) == 3
    assert is_simple(h)

    edgeless = from_tokens("x y", [])
    assert rank(edgeless) == 0
    assert is_simple(edgeless)

    nested = from_tokens("x y z", ["x y", "x y z"])
    assert rank(nested) == 3
    assert not is_simple(nested)  # {x,y} sits inside {x,y,z}

    single = from_tokens("x", ["x"])
    assert not is_simple(single)  # singleton edge


def test_edge_size_multiset_and_degrees(single_edge_factors):
    g, h = single_edge_factors
    assert edge_size_multiset(h) == {3: 1}
    assert degree_sequence(h) == [1, 1, 1]
    assert edge_size_multiset(g) == {2: 1}
    assert degree_sequence(g) == [1, 1]


def test_vertex_signatures_distinguish_roles():
    h = from_tokens("a b c", ["a b", "a c"])
    sigs = vertex_signatures(h)
    assert sigs[Atom("a")] == (2, 2)
    assert sigs[Atom("b")] == (2,)
    assert sigs[Atom("c")] == (2,)


# ---------------------------------------------------------------- morphisms

def test_identity_is_homomorphism(single_edge_factors):
    g, _ = single_edge_factors
    ident = {v: v for v in g.vertices}
    assert is_homomorphism(g, g, ident)
    assert is_bijection(ident)


def test_edge_collapse_is_not_homomorphism():
    g = from_tokens("a b", ["a b"])
    h = from_tokens("x", ["x"])
    phi = {Atom("a"): Atom("x"), Atom("b"): Atom("x")}
    # {a,b} maps onto the singleton {x}, which IS an edge of h
    assert is_homomorphism(g, h, phi)
    h2 = from_tokens("x y", ["x y"])
    phi2 = {Atom("a"): Atom("x"), Atom("b"): Atom("x")}
    assert not is_homomorphism(g, h2, phi2)  # image {x} is not an edge


def test_homomorphism_preconditions_raise():
    g = from_tokens("a b", ["a b"])
    h = from_tokens("x y", ["x y"])
    with pytest.raises(ValueError):
        is_homomorphism(g, h, {Atom("a"): Atom("x")})  # not total
    with pytest.raises(ValueError):
        is_homomorphism(g, h, {Atom("a"): Atom("x"), Atom("b"): Atom("q")})


def test_is_bijection_requires_injectivity():
    squash = {Atom("a"): Atom("x"), Atom("b"): Atom("x")}
    assert not is_bijection(squash)


# ---------------------------------------------------------------- properties

@given(stg.hypergraphs(labels=stg.any_labels))
def test_validate_passes_for_built_instances(h):
    assert validate(h) is None


@given(stg.hypergraphs())
def test_relabeling_preserves_invariants(h):
    """Degrees and edge sizes cannot depend on vertex names."""
    fresh = {v: Atom(f"r{i}") for i, v in enumerate(sorted(h.vertices, key=label_key))}
    image = hypergraph(
        fresh.values(),
        [frozenset(fresh[v] for v in e) for e in h.edges],
    )
    assert degree_sequence(image) == degree_sequence(h)
    assert edge_size_multiset(image) == edge_size_multiset(h)
    assert rank(image) == rank(h)
    assert is_simple(image) == is_simple(h)
