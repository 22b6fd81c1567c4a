import json

import pytest

from hgprod import cartesian, from_tokens, parse_hg, serialize_hg, strong
from hgprod.cli import main

G_TEXT = "vertices: a b\nedge: a b\n"
H_TEXT = "vertices: x y z\nedge: x y z\n"


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def files(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def gh(files):
    return files("g.hg", G_TEXT), files("h.hg", H_TEXT)


# ---------------------------------------------------------------- product

def test_product_to_stdout(run, gh):
    g, h = gh
    code, out, err = run("product", "--kind", "cartesian", g, h)
    assert code == 0 and err == ""
    expected = cartesian(from_tokens("a b", ["a b"]), from_tokens("x y z", ["x y z"]))
    assert out == serialize_hg(expected)


def test_product_to_file(run, gh, tmp_path):
    g, h = gh
    out_path = tmp_path / "out.hg"
    code, out, _ = run("product", "--kind", "strong", g, h, "-o", str(out_path))
    assert code == 0 and out == ""
    expected = strong(from_tokens("a b", ["a b"]), from_tokens("x y z", ["x y z"]))
    assert out_path.read_text(encoding="utf-8") == serialize_hg(expected)


def test_product_flatten_emits_legend_and_parses(run, gh):
    g, h = gh
    code, out, _ = run("product", "--kind", "cartesian", g, h, "--flatten")
    assert code == 0
    legend = [line for line in out.splitlines() if line.startswith("#")]
    assert legend[0] == "# v0 = (a,x)"
    assert len(legend) == 6
    flattened = parse_hg(out)  # comment lines are ignored by the parser
    names = {label.name for label in flattened.vertices}
    assert names == {f"v{i}" for i in range(6)}
    expected = cartesian(from_tokens("a b", ["a b"]), from_tokens("x y z", ["x y z"]))
    assert len(flattened.edges) == len(expected.edges)


# ---------------------------------------------------------------- count

def test_count_formula_only(run, gh):
    g, h = gh
    code, out, _ = run("count", "--kind", "dirmax", g, h)
    assert code == 0
    assert "formula_count: 6" in out
    assert "enumerated_count" not in out


def test_count_verify_agreement(run, gh):
    g, h = gh
    code, out, _ = run("count", "--kind", "strong", g, h, "--verify")
    assert code == 0
    assert "formula_count: 11" in out
    assert "enumerated_count: 11" in out
    assert "agreement: true" in out


def test_count_verify_disagreement_exits_1(run, files):
    loop = files("loop.hg", "vertices: a\nedge: a\n")
    code, out, _ = run("count", "--kind", "cartesian", loop, loop, "--verify")
    assert code == 1
    assert "agreement: false" in out


def test_count_json(run, gh):
    g, h = gh
    code, out, _ = run("count", "--kind", "dirmax", g, h, "--verify", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "kind": "dirmax",
        "formula_count": 6,
        "enumerated_count": 6,
        "agreement": True,
    }


# ---------------------------------------------------------------- iso

def test_iso_positive(run, files):
    a = files("a.hg", "vertices: a b c\nedge: a b\nedge: b c\n")
    b = files("b.hg", "vertices: p q r\nedge: q r\nedge: p q\n")
    code, out, _ = run("iso", a, b)
    assert code == 0
    assert "isomorphic: true" in out
    assert "map: " in out


def test_iso_negative(run, files):
    a = files("a.hg", "vertices: 1 2 3 4\nedge: 1 2\nedge: 3 4\n")
    b = files("b.hg", "vertices: 1 2 3 4\nedge: 1 2\nedge: 2 3\n")
    code, out, _ = run("iso", a, b)
    assert code == 1
    assert "isomorphic: false" in out


def test_iso_json_witness_round_trip(run, files):
    a = files("a.hg", "vertices: a b\nedge: a b\n")
    b = files("b.hg", "vertices: p q\nedge: p q\n")
    code, out, _ = run("iso", a, b, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["isomorphic"] is True
    assert sorted(payload["witness"]) == ["a", "b"]


def test_iso_bound_refusal_is_a_usage_error(run, files):
    tokens = " ".join(f"v{i}" for i in range(13))
    edges = "".join(f"edge: v{i} v{i+1}\n" for i in range(12))
    big = files("big.hg", f"vertices: {tokens}\n{edges}")
    code, out, err = run("iso", big, big)
    assert code == 2
    assert "exceeds the search bound" in err
    # explicit override lifts the refusal
    code, out, err = run("iso", big, big, "--max-vertices", "13")
    assert code == 0


# ---------------------------------------------------------------- law audits

def test_assoc_passes_for_cartesian(run, gh):
    g, h = gh
    code, out, _ = run("assoc", "--kind", "cartesian", g, g, h)
    assert code == 0
    assert "psi_iso: true" in out


def test_assoc_fails_for_dirmax(run, gh):
    g, h = gh
    code, out, _ = run("assoc", "--kind", "dirmax", g, g, h, "--full-iso")
    assert code == 1
    assert "left_count: 36" in out
    assert "right_count: 12" in out
    assert "full_iso: false" in out


def test_assoc_json_keys(run, gh):
    g, h = gh
    code, out, _ = run("assoc", "--kind", "dirnon", g, g, h, "--json")
    assert code == 1
    payload = json.loads(out)
    assert set(payload) == {
        "kind", "law", "left_count", "right_count", "psi_iso", "full_iso", "witness",
    }
    assert payload["kind"] == "dirnon"
    assert payload["psi_iso"] is False
    assert payload["witness"] is not None


def test_assoc_full_iso_note_on_oversized_instances(run, files):
    g = files("g.hg", G_TEXT)
    h4 = files("h4.hg", "vertices: w x y z\nedge: w x y z\n")
    code, out, err = run("assoc", "--kind", "dirmax", g, g, h4, "--full-iso")
    assert code == 1
    assert "full_iso: none" in out
    assert "search skipped" in err


def test_commut_passes_for_all_kinds(run, gh):
    g, h = gh
    for kind in ["cartesian", "dirmin", "dirmax", "dirnon", "normal", "strong"]:
        code, out, _ = run("commut", "--kind", kind, g, h)
        assert code == 0, kind
        assert "psi_iso: true" in out


def test_lemma1_equality(run, gh):
    g, h = gh
    code, out, _ = run("lemma1", g, h)
    assert code == 0
    assert "law: lemma1" in out
    assert "left_count: 6" in out


def test_lemma1_precondition_is_a_usage_error(run, files):
    g = files("g.hg", G_TEXT)
    h4 = files("h4.hg", "vertices: w x y z\nedge: w x y z\n")
    code, _, err = run("lemma1", g, h4)
    assert code == 2
    assert "precondition violated" in err
    assert "rank of second factor is 4" in err


# ---------------------------------------------------------------- counterexample

def test_counterexample_output_and_exit(run):
    code, out, _ = run("counterexample")
    assert code == 1
    assert "left_count: 36" in out
    assert "left_count: 82" in out
    assert "right_count: 58" in out
    assert "witness_edge: (a,(a,x)) (a,(b,y)) (b,(b,z))" in out
    assert "witness_image_absent_on_right: ((a,a),x) ((a,b),y) ((b,b),z)" in out


def test_counterexample_json(run):
    code, out, _ = run("counterexample", "--json")
    assert code == 1
    payload = json.loads(out)
    kinds = [r["kind"] for r in payload["reports"]]
    assert kinds == ["dirmax", "dirnon", "strong"]
    assert all(r["full_iso"] is False for r in payload["reports"])


def test_counterexample_is_deterministic(run):
    first = run("counterexample")
    second = run("counterexample")
    assert first == second


# ---------------------------------------------------------------- fuzz

FUZZ_ARGS = [
    "fuzz", "--kind", "dirmax", "--law", "assoc", "--seed", "11",
    "--trials", "25", "--max-vertices", "3", "--max-edges", "2",
]


def test_fuzz_violations_exit_1(run):
    code, out, _ = run(*FUZZ_ARGS)
    assert code == 1
    assert "failures: 0" not in out
    assert "minimal_trial:" in out


def test_fuzz_clean_kind_exits_0(run):
    code, out, _ = run(
        "fuzz", "--kind", "dirmin", "--law", "assoc", "--seed", "11",
        "--trials", "25", "--max-vertices", "3", "--max-edges", "2",
    )
    assert code == 0
    assert "failures: 0" in out


def test_fuzz_json_round_trip(run):
    code, out, _ = run(*FUZZ_ARGS, "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["seed"] == 11 and payload["trials"] == 25
    assert payload["failure_count"] == len(payload["failures"]) > 0
    assert payload["minimal"]["report"]["psi_iso"] is False


def test_fuzz_deterministic_across_job_counts(run):
    serial = run(*FUZZ_ARGS)
    parallel = run(*FUZZ_ARGS, "--jobs", "3")
    assert serial == parallel


def test_fuzz_bad_ranges_are_usage_errors(run):
    code, _, err = run(
        "fuzz", "--kind", "dirmax", "--law", "assoc", "--seed", "1",
        "--trials", "5", "--edge-size-min", "5", "--max-vertices", "4",
    )
    assert code == 2 and "max-vertices" in err
    code, _, err = run(
        "fuzz", "--kind", "dirmax", "--law", "assoc", "--seed", "1",
        "--trials", "5", "--edge-size-max", "1", "--simple",
    )
    assert code == 2 and "empty edge size range" in err


# ---------------------------------------------------------------- fmt + errors

def test_fmt_canonicalizes(run, files):
    messy = files("messy.hg", "# comment\nvertices: b a\n\nedge: b a\n")
    code, out, _ = run("fmt", messy)
    assert code == 0
    assert out == "vertices: a b\nedge: a b\n"


def test_fmt_is_idempotent(run, files):
    messy = files("m.hg", "vertices: c b a\nedge: c a\nedge: b a\n")
    _, once, _ = run("fmt", messy)
    again = files("n.hg", once)
    _, twice, _ = run("fmt", again)
    assert once == twice


def test_parse_errors_exit_2_with_line_number(run, files):
    bad = files("bad.hg", "vertices: a b\nedge: a q\n")
    code, out, err = run("fmt", bad)
    assert code == 2 and out == ""
    assert "line 2" in err and "unknown vertex" in err


def test_missing_file_exits_2(run, tmp_path):
    code, _, err = run("fmt", str(tmp_path / "absent.hg"))
    assert code == 2
    assert "absent.hg" in err


def test_unknown_kind_is_an_argparse_error(gh):
    g, h = gh
    with pytest.raises(SystemExit) as exc:
        main(["product", "--kind", "tensor", g, h])
    assert exc.value.code == 2
