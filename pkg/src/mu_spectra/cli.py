"""Command-line interface: verify, solve, profile, lemmas.

Exit codes: 0 success / all claims hold, 1 semantic failure (invalid
coloring, claim mismatch, failed check), 2 input error (unparseable file,
unknown graph, illegal t). Reports are deterministic for fixed inputs;
wall-clock timing is only attached on request so that default output is
byte-identical across runs.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import time
from pathlib import Path

from .coloring import Certificate, analyze, check_certificate
from .fixtures import fixture_dir
from .graphs import (
    Graph,
    GraphError,
    all_perfect_matchings,
    chromatic_index,
    contains_induced_c6,
    contains_induced_claw,
    delete_vertex,
    from_spec,
    is_petersen_labeled,
    load_graph,
)
from .search import Objective, SearchConfig, legal_t_range, profile, solve
from .structural import (
    is_interval_colorable_regular,
    max_path_forest_subset,
    mu22_cap_from_noninterval,
)


def resolve_graph(spec: str) -> Graph:
    """Catalog name (petersen, cycle:<n>, ...) or @path to a JSON file."""
    if spec.startswith("@"):
        return load_graph(spec[1:])
    return from_spec(spec)


def _resolve_certificate_path(arg: str) -> Path:
    """Literal path, then $MU_SPECTRA_FIXTURES, then the packaged catalog."""
    p = Path(arg)
    candidates = [p]
    names = [p.name] if p.name.endswith(".json") else [p.name + ".json", p.name]
    env = os.environ.get("MU_SPECTRA_FIXTURES")
    if env:
        candidates += [Path(env) / nm for nm in names]
    candidates += [fixture_dir() / nm for nm in names]
    for c in candidates:
        if c.is_file():
            return c
    raise FileNotFoundError(
        f"certificate not found: {arg} (searched the literal path, "
        f"$MU_SPECTRA_FIXTURES, and the packaged catalog)")


def _emit(report: dict, args, human_lines: list[str]) -> None:
    if args.timing:
        report["elapsed_ms"] = round(
            (time.perf_counter() - args._t0) * 1000, 1)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)
        if args.timing:
            print(f"elapsed: {report['elapsed_ms']} ms")


def _search_config(args, for_profile: bool = False) -> SearchConfig:
    kwargs: dict = {"use_reflection_symmetry": not args.no_symmetry}
    if args.node_limit is not None:
        kwargs["profile_node_limit" if for_profile else "node_limit"] = args.node_limit
    if args.time_limit_ms is not None:
        kwargs["time_limit_ms"] = args.time_limit_ms
    if args.threads is not None:
        kwargs["threads"] = args.threads
    return SearchConfig(**kwargs)


def cmd_verify(args) -> int:
    path = _resolve_certificate_path(args.certificate)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GraphError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    cert = Certificate.from_dict(doc)
    result = check_certificate(cert)
    report = {
        "command": "verify",
        "file": str(path),
        "graph": cert.graph.summary(),
        "t": cert.t,
        "claims": doc.get("claims", {}),
        "ok": result.ok,
        "f": result.f,
        "violations": [{"kind": v.kind, "where": v.where, "message": v.message}
                       for v in result.violations],
        "mismatches": list(result.mismatches),
    }
    lines = [f"verify {path}",
             f"graph: {cert.graph.name} ({cert.graph.n} vertices, "
             f"{cert.graph.m} edges), t={cert.t}"]
    if result.violations:
        lines += [f"  violation[{v.kind}] at {v.where}: {v.message}"
                  for v in result.violations]
    else:
        lines.append(f"coloring: valid, f={result.f}")
        lines += [f"  mismatch: {m}" for m in result.mismatches]
    lines.append("PASS" if result.ok else "FAIL")
    _emit(report, args, lines)
    return 0 if result.ok else 1


def _witness_certificate(g: Graph, outcome, graph_arg: str) -> dict | None:
    if outcome.witness is None:
        return None
    f = analyze(g, outcome.witness).f
    source = None if graph_arg.startswith("@") else graph_arg
    cert = Certificate(graph=g, t=outcome.t, colors=outcome.witness.colors,
                       claim_f=f, source=source)
    return cert.to_dict()


def cmd_solve(args) -> int:
    g = resolve_graph(args.graph)
    objective = Objective(args.objective)
    cfg = _search_config(args)
    outcome = solve(g, args.t, objective, cfg)
    report = {
        "command": "solve",
        "graph": g.summary(),
        "outcome": outcome.to_dict(g),
    }
    wcert = _witness_certificate(g, outcome, args.graph)
    if wcert is not None:
        report["witness_certificate"] = wcert
    lines = [f"solve {g.name} t={outcome.t} objective={objective.value}"]
    if outcome.is_exact:
        lines.append(f"status: exact  value: {outcome.value}")
    else:
        lines.append(f"status: bounds-only  lo={outcome.lo} hi={outcome.hi}")
    lines.append(f"nodes visited: {outcome.nodes_visited}  "
                 f"closed by: {outcome.closed_by}")
    for e in outcome.evidence:
        lines.append(f"  evidence[{e.kind.value}] value {e.value}: {e.detail}")
    if wcert is not None:
        lines.append(f"witness (f={wcert['claims']['f']}), certificate JSON:")
        lines.append(json.dumps(wcert, indent=2, sort_keys=True))
    _emit(report, args, lines)
    return 0


def cmd_profile(args) -> int:
    g = resolve_graph(args.graph)
    cfg = _search_config(args, for_profile=True)
    prof = profile(g, cfg)
    report = {
        "command": "profile",
        "graph": g.summary(),
        "profile": prof.to_dict(),
    }
    r = legal_t_range(g)
    lines = [f"profile {g.name} (t in [{r.start}, {r.stop - 1}])",
             f"  {'t':>3}  {'mu1':<12} {'mu2':<12}"]
    for row in prof.rows:
        cells = []
        for o in (row.mu1, row.mu2):
            cells.append(f"{o.value}" if o.is_exact else f"[{o.lo},{o.hi}]")
        lines.append(f"  {row.t:>3}  {cells[0]:<12} {cells[1]:<12}")
    lines.append("aggregates:")
    for name, agg in (("mu11", prof.mu11), ("mu12", prof.mu12),
                      ("mu21", prof.mu21), ("mu22", prof.mu22)):
        if agg.is_exact:
            lines.append(f"  {name} = {agg.value} (exact)")
        else:
            lines.append(f"  {name} in [{agg.lo}, {agg.hi}] (bounds-only)")
    _emit(report, args, lines)
    return 0


def _petersen_checks(g: Graph) -> list[dict]:
    checks: list[dict] = []

    chi = chromatic_index(g)
    checks.append({
        "name": "chromatic-index",
        "ok": chi == 4,
        "detail": f"chromatic index is {chi} (degree 3 plus 1)",
        "counts": {"chromatic_index": chi},
    })

    colorable = is_interval_colorable_regular(g)
    cap = None if colorable else mu22_cap_from_noninterval(g).value
    checks.append({
        "name": "not-interval-colorable",
        "ok": not colorable,
        "detail": ("no coloring makes every spectrum an interval; "
                   f"f <= {cap} at every t" if not colorable
                   else "unexpectedly interval colorable"),
        "counts": {"cap": cap},
    })

    matchings = all_perfect_matchings(g)
    pairs = list(itertools.combinations(matchings, 2))
    hits = sum(1 for a, b in pairs if a & b)
    checks.append({
        "name": "matchings-intersect",
        "ok": len(matchings) == 6 and hits == len(pairs) == 15,
        "detail": f"{len(matchings)} perfect matchings; "
                  f"{hits}/{len(pairs)} pairs intersect",
        "counts": {"matchings": len(matchings), "pairs": len(pairs),
                   "intersecting_pairs": hits},
    })

    total = obstructed = 0
    for size in range(7, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            total += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if contains_induced_claw(g, mask) or contains_induced_c6(g, mask):
                obstructed += 1
    checks.append({
        "name": "large-subsets-obstructed",
        "ok": total == 176 and obstructed == total,
        "detail": f"{obstructed}/{total} subsets with >= 7 vertices contain "
                  f"an induced claw or 6-cycle",
        "counts": {"subsets": total, "obstructed": obstructed},
    })

    deletions = {label: chromatic_index(delete_vertex(g, label))
                 for label in g.vertices}
    good = sum(1 for v in deletions.values() if v == 4)
    checks.append({
        "name": "vertex-deletions-chromatic-index",
        "ok": good == g.n == 10,
        "detail": f"{good}/{g.n} single-vertex deletions have chromatic index 4",
        "counts": {"deletions": g.n, "with_chromatic_index_4": good},
    })

    forest = max_path_forest_subset(g)
    checks.append({
        "name": "max-path-forest",
        "ok": forest == 6,
        "detail": f"largest vertex subset inducing a path forest has "
                  f"{forest} vertices",
        "counts": {"max_subset": forest},
    })
    return checks


def cmd_lemmas(args) -> int:
    g = resolve_graph(args.graph)
    if not is_petersen_labeled(g):
        raise GraphError(
            f"lemma replay is defined for the petersen catalog graph, "
            f"not {g.name}")
    checks = _petersen_checks(g)
    ok = all(c["ok"] for c in checks)
    report = {"command": "lemmas", "graph": g.summary(),
              "checks": checks, "ok": ok}
    lines = [f"lemma replay on {g.name}"]
    for c in checks:
        lines.append(f"  [{'pass' if c['ok'] else 'FAIL'}] {c['name']}: "
                     f"{c['detail']}")
    lines.append("all checks passed" if ok else "SOME CHECKS FAILED")
    _emit(report, args, lines)
    return 0 if ok else 1


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true",
                   help="emit the machine-readable report")
    p.add_argument("--timing", action="store_true",
                   help="attach wall-clock stats (breaks byte-identical output)")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", default="petersen",
                   help="petersen | cycle:<n> | path:<n> | complete:<n> | @file.json")
    p.add_argument("--node-limit", type=int, default=None,
                   help="search node budget")
    p.add_argument("--time-limit-ms", type=int, default=None,
                   help="search time budget in milliseconds")
    p.add_argument("--threads", type=int, default=None,
                   help="worker count (results are identical for any value)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized subroutines")
    p.add_argument("--no-symmetry", action="store_true",
                   help="disable the reflection symmetry reduction")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mu-spectra",
        description="Extremal counts of interval-spectrum vertices in proper "
                    "edge colorings of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="re-check a coloring certificate")
    p.add_argument("certificate",
                   help="path or catalog name (e.g. psi, sigma.json)")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="compute mu1 or mu2 at one t")
    _add_budget(p)
    p.add_argument("--t", type=int, required=True, help="number of colors")
    p.add_argument("--objective", choices=["mu1", "mu2"], required=True)
    _add_common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("profile", help="sweep all legal t and aggregate")
    _add_budget(p)
    _add_common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("lemmas", help="replay the structural checks")
    p.add_argument("--graph", default="petersen",
                   help="must resolve to the petersen graph")
    _add_common(p)
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.perf_counter()
    try:
        return args.func(args)
    except (GraphError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
