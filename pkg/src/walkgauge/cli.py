"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .enumerate import enumerate_trees, enumerate_unicyclic
from .errors import GraphError, NotUnicyclic, ParseError, SizeLimitExceeded, StepCapExceeded
from .exact import fmt_rational
from .graph import Graph, make_cycle, make_P, make_S
from .io import encode_graph6, format_edge_list, parse_graph_text
from .report import invariant_report
from .theorems import (
    check_cc_lower_envelope,
    report_cc_lower_discrepancy,
    verify_bounds_nl,
    verify_extremal_cc,
    verify_extremal_rc,
    verify_family_closed_forms,
    verify_identities,
    verify_trees,
)
from .walk import hitting_times_exact, simulate_hitting_time

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

_FAMILY = re.compile(r"^([SPC]):(\d+)(?:,(\d+))?$")


class UsageError(Exception):
    pass


def parse_family(spec: str) -> Graph:
    """``S:n,l``, ``P:n,l`` or ``C:n``."""
    m = _FAMILY.match(spec.strip())
    if not m:
        raise UsageError(f"bad family spec {spec!r}; expected S:n,l, P:n,l or C:n")
    kind, n, l = m.group(1), int(m.group(2)), m.group(3)
    try:
        if kind == "C":
            if l is not None:
                raise UsageError("C:n takes no cycle length")
            return make_cycle(n)
        if l is None:
            raise UsageError(f"{kind}:n,l needs a cycle length")
        return (make_S if kind == "S" else make_P)(n, int(l))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_graph(args) -> Graph:
    if args.family and args.input:
        raise UsageError("give either an input file or --family, not both")
    if args.family:
        return parse_family(args.family)
    if not args.input:
        raise UsageError("an input file or --family is required")
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    return parse_graph_text(text)


def cmd_invariants(args) -> int:
    g = _load_graph(args)
    if args.unicyclic_only and not g.is_unicyclic:
        raise NotUnicyclic(f"graph has n={g.n}, m={g.m}")
    rep = invariant_report(g, verify=args.verify)
    if args.format == "csv":
        sys.stdout.write(rep.to_csv(approx=args.approx))
    else:
        print(json.dumps(rep.to_dict(approx=args.approx), indent=2))
    return EXIT_OK if rep.verified else EXIT_FAIL


def _n_range(args, default_max):
    if args.n is not None:
        return [args.n]
    lo = args.n_min if args.n_min is not None else 3
    hi = args.n_max if args.n_max is not None else default_max
    return list(range(lo, hi + 1))


def cmd_verify(args) -> int:
    check, jobs = args.check, args.jobs
    reports = []
    if check == "identities":
        hi = args.n_max if args.n_max is not None else (args.n or 8)
        reports.append(verify_identities(hi, args.n_min or 3, jobs=jobs))
    elif check == "extremal-cc":
        reports += [verify_extremal_cc(n, jobs) for n in _n_range(args, 8)]
    elif check == "extremal-rc":
        reports += [verify_extremal_rc(n, jobs) for n in _n_range(args, 8)]
    elif check == "bounds":
        for n in _n_range(args, 8):
            ls = [args.l] if args.l is not None else range(3, n + 1)
            reports += [verify_bounds_nl(n, l, jobs) for l in ls]
    elif check == "family-closed-forms":
        reports.append(verify_family_closed_forms(args.n_max or 30, args.n_min or 3))
    elif check == "trees":
        reports.append(verify_trees(args.n_max or args.n or 8, jobs))
    elif check == "cc-lower-envelope":
        lo = args.n_min if args.n_min is not None else 6
        hi = args.n_max if args.n_max is not None else 100
        ns = [args.n] if args.n is not None else range(lo, hi + 1)
        reports += [check_cc_lower_envelope(n) for n in ns]
    elif check == "cc-lower-discrepancy":
        reports.append(report_cc_lower_discrepancy(args.n_max or 8, jobs=jobs))
    for rep in reports:
        print(rep.to_json())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.trees:
        stream = enumerate_trees(args.n)
    else:
        stream = enumerate_unicyclic(args.n, strategy=args.strategy)
    count = 0
    for g in stream:
        count += 1
        if args.count_only:
            continue
        if args.format == "graph6":
            print(encode_graph6(g))
        else:
            sys.stdout.write(format_edge_list(g) + "\n")
    if args.count_only:
        print(count)
    else:
        print(f"# {count} graphs", file=sys.stderr)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    g = _load_graph(args)
    for v in (args.source, args.target):
        if not 0 <= v < g.n:
            raise UsageError(f"vertex {v} outside 0..{g.n - 1}")
    stats = simulate_hitting_time(g, args.source, args.target, args.trials, args.seed,
                                  step_cap=args.step_cap)
    exact = hitting_times_exact(g, args.target)[args.source]
    out = {"from": args.source, "to": args.target, "trials": stats.trials, "seed": stats.seed,
           "sample_mean": stats.sample_mean, "standard_error": stats.standard_error,
           "capped": stats.capped, "exact": fmt_rational(exact),
           "z_score": stats.z_score(exact)}
    print(json.dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="walkgauge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("input", nargs="?", help="edge-list or graph6 file ('-' for stdin)")
        sp.add_argument("--family", help="S:n,l | P:n,l | C:n")

    sp = sub.add_parser("invariants", help="per-vertex and global invariants of one graph")
    graph_input(sp)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--verify", action="store_true", help="run every redundant computation path")
    sp.add_argument("--approx", action="store_true", help="add 15-digit decimal columns")
    sp.add_argument("--unicyclic-only", action="store_true")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("verify", help="identity and extremal-bound checks")
    sp.add_argument("check", choices=["identities", "extremal-cc", "extremal-rc", "bounds",
                                      "family-closed-forms", "trees", "cc-lower-envelope",
                                      "cc-lower-discrepancy"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="unicyclic graphs (or trees) up to isomorphism")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    sp.add_argument("--strategy", choices=["forest", "prufer"], default="forest")
    sp.add_argument("--trees", action="store_true", help="enumerate trees instead")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("simulate", help="Monte-Carlo hitting time against the exact value")
    graph_input(sp)
    sp.add_argument("--from", dest="source", type=int, required=True)
    sp.add_argument("--to", dest="target", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--step-cap", type=int, default=10**7)
    sp.set_defaults(func=cmd_simulate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, GraphError, OSError) as exc:
        print(f"walkgauge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeLimitExceeded, StepCapExceeded) as exc:
        print(f"walkgauge: limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
