#!/usr/bin/env python3
"""Associativity survey across all six product kinds.

Two phases per kind: an exhaustive sweep of every factor triple drawn from
the family of hypergraphs with <= --max-vertices vertices and <= --max-edges
edges, then a seeded fuzz run on larger random factors.  Ends with a table
of failure counts and the minimal fuzz failure for each violated kind.

The exhaustive family grows fast: --max-vertices 2 gives 10 instances
(1000 triples, under a second), 3 gives 39 instances (59319 triples, a
couple of minutes for all six kinds).  The smallest violations need one
3-vertex factor, so only the larger sweep exposes them exhaustively.

Usage:
    python scripts/associativity_sweep.py
    python scripts/associativity_sweep.py --max-vertices 3 --trials 200 --jobs 4
"""

import argparse
import itertools

from hgprod import (
    Atom,
    GeneratorConfig,
    Hypergraph,
    ProductKind,
    check_associativity,
    format_law_report,
    fuzz_law,
)


def exhaustive_family(max_vertices: int, max_edges: int) -> list:
    """Every hypergraph with at most the given vertex and edge counts."""
    out = []
    for n in range(max_vertices + 1):
        verts = [Atom(f"t{i}") for i in range(n)]
        pool = [
            frozenset(c)
            for s in range(1, n + 1)
            for c in itertools.combinations(verts, s)
        ]
        for m in range(max_edges + 1):
            for combo in itertools.combinations(pool, m):
                out.append(Hypergraph(frozenset(verts), frozenset(combo)))
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-vertices", type=int, default=2)
    parser.add_argument("--max-edges", type=int, default=2)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    family = exhaustive_family(args.max_vertices, args.max_edges)
    triples = len(family) ** 3
    print(f"exhaustive family: {len(family)} instances, {triples} triples per kind")
    cfg = GeneratorConfig(
        seed=args.seed,
        vertex_count=(1, 4),
        edge_count=(1, 3),
        edge_size=(1, 3),
    )
    print(f"fuzz: {args.trials} trials per kind, factor seeds derived from {args.seed}")
    print()

    rows = []
    minimal_reports = []
    for kind in ProductKind:
        exhaustive_failures = 0
        for a, b, c in itertools.product(family, repeat=3):
            if not check_associativity(kind, a, b, c).psi_is_isomorphism:
                exhaustive_failures += 1
        fuzz = fuzz_law(kind, "associativity", cfg, args.trials, jobs=args.jobs)
        verdict = "holds" if exhaustive_failures == 0 and fuzz.failure_count == 0 else "VIOLATED"
        rows.append(
            (kind.value, exhaustive_failures, fuzz.failure_count, verdict)
        )
        if fuzz.minimal is not None:
            minimal_reports.append((kind, fuzz.minimal))

    header = f"{'kind':<10} {'exhaustive':>10} {'fuzz':>6}  verdict"
    print(header)
    print("-" * len(header))
    for kind, exh, fz, verdict in rows:
        print(f"{kind:<10} {exh:>10} {fz:>6}  {verdict}")

    for kind, minimal in minimal_reports:
        print()
        print(f"minimal fuzz failure for {kind.value} (trial {minimal.trial}):")
        for line in format_law_report(minimal.report).splitlines():
            print(f"  {line}")

    return 1 if any(row[3] == "VIOLATED" for row in rows) else 0


if __name__ == "__main__":
    raise SystemExit(main())
