"""Command-line front end.

Exit codes: 0 ok, 1 a checked statement failed, 2 unparseable input or usage,
3 size guard, 4 precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Iterator, Sequence
from pathlib import Path

from .catalog import CATALOG_MAX_N, catalog_lines, iter_graph6_file
from .critical import critical_profile
from .errors import GraphFormatError, PreconditionError, SizeGuardError, TheoremViolation
from .graph import Graph, encode_graph6, format_set, parse_edge_text, parse_graph6
from .independence import DEFAULT_OMEGA_CAP, omega
from .kernels import BACKEND
from .ke import embed_non_ke, is_ke
from .matching import mu
from .report import TheoremReport, Verdict
from .search import SearchSpec, run_search
from .theorems import THEOREMS, SuiteOptions, run_suite

EXIT_OK, EXIT_FAILS, EXIT_PARSE, EXIT_GUARD, EXIT_PRECONDITION = 0, 1, 2, 3, 4

INVARIANT_KEYS = ("alpha", "mu", "d", "core", "corona", "ker", "diadem", "nucleus", "is_ke")


class _UsageError(Exception):
    pass


# -- input ------------------------------------------------------------------------

def _read_graphs(args: argparse.Namespace) -> Iterator[Graph]:
    if args.g6 is not None:
        yield parse_graph6(args.g6)
    elif args.edges is not None:
        yield parse_edge_text(Path(args.edges).read_text())
    elif args.input is not None:
        for _, g in iter_graph6_file(args.input):
            yield g
    elif args.fixture is not None:
        from .fixtures import FIXTURES

        if args.fixture not in FIXTURES:
            raise _UsageError(f"unknown fixture {args.fixture!r}; try: {', '.join(sorted(FIXTURES))}")
        yield FIXTURES[args.fixture]
    else:
        raise _UsageError("give one of --g6, --edges, --input or --fixture")


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _theorem_ids(text: str) -> list[str]:
    if text == "all":
        return list(THEOREMS)
    ids = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [t for t in ids if t not in THEOREMS]
    if unknown:
        raise _UsageError(f"unknown theorem id(s): {', '.join(unknown)}; known: {', '.join(THEOREMS)}")
    return ids


# -- analyze / verify -----------------------------------------------------------------

def _set_value(g: Graph, mask: int, machine: bool):
    return g.names(mask) if machine else format_set(g, mask)


def analysis(g: Graph, opts: SuiteOptions, cap: int, machine: bool, ids: list[str] | None = None) -> dict:
    """Flat report: graph echo, invariants, verdicts, then per-stage timings."""
    timing: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(stage: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        timing[stage] = round(now - clock, 6)
        clock = now

    fam = omega(g, cap)
    lap("omega")
    m = mu(g)
    lap("matching")
    prof = critical_profile(g)
    lap("critical")
    reports = run_suite(g, ids, opts)
    lap("theorems")
    doc = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.m,
        "alpha": fam.alpha,
        "mu": m,
        "d": prof.d,
        "core": _set_value(g, fam.core, machine),
        "corona": _set_value(g, fam.corona, machine),
        "ker": _set_value(g, prof.ker, machine),
        "diadem": _set_value(g, prof.diadem, machine),
        "nucleus": _set_value(g, prof.nucleus, machine),
        "is_ke": fam.alpha + m == g.n,
        "verdicts": {r.theorem: r.verdict.value for r in reports},
        "witnesses": {r.theorem: r.witness for r in reports if r.witness},
        "timing": timing,
    }
    return doc


def _render_text(doc: dict, timing: bool) -> str:
    lines = [f"graph6: {doc['graph6']}  n={doc['n']} m={doc['m']}"]
    for key in INVARIANT_KEYS:
        val = doc[key]
        lines.append(f"  {key:<8} {str(val).lower() if isinstance(val, bool) else val}")
    width = max((len(t) for t in doc["verdicts"]), default=0)
    lines.append("theorems:")
    for tid, verdict in doc["verdicts"].items():
        wit = doc["witnesses"].get(tid)
        lines.append(f"  {tid:<{width}}  {verdict}" + (f"  [{wit}]" if wit else ""))
    if timing:
        lines.append("timing: " + " ".join(f"{k}={v:.4f}s" for k, v in doc["timing"].items()))
    return "\n".join(lines)


def _emit(doc: dict, fmt: str, timing: bool) -> None:
    if not timing:
        doc = {k: v for k, v in doc.items() if k != "timing"}
    if fmt == "machine":
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print(_render_text(doc, timing))


def _suite_opts(args: argparse.Namespace) -> SuiteOptions:
    return SuiteOptions(seed=args.seed, samples=args.samples)


def cmd_analyze(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for g in _read_graphs(args):
        doc = analysis(g, _suite_opts(args), args.cap_omega, args.format == "machine")
        _emit(doc, args.format, not args.no_timing)
        if Verdict.FAILS.value in doc["verdicts"].values():
            code = EXIT_FAILS
    return code


def cmd_verify(args: argparse.Namespace) -> int:
    ids = _theorem_ids(args.theorem)
    code = EXIT_OK
    for g in _read_graphs(args):
        omega(g, args.cap_omega)  # surfaces the cap before any check runs
        reports = run_suite(g, ids, _suite_opts(args))
        _print_reports(g, reports, args.format)
        if any(r.verdict is Verdict.FAILS for r in reports):
            code = EXIT_FAILS
    return code


def _print_reports(g: Graph, reports: Sequence[TheoremReport], fmt: str) -> None:
    g6 = encode_graph6(g)
    if fmt == "machine":
        doc = {"graph6": g6, "verdicts": {r.theorem: r.verdict.value for r in reports}}
        doc["witnesses"] = {r.theorem: r.witness for r in reports if r.witness}
        doc["details"] = {r.theorem: json.dumps(r.details, sort_keys=True) for r in reports if r.details}
        print(json.dumps(doc, ensure_ascii=False))
        return
    print(f"graph6: {g6}")
    for r in reports:
        print("  " + r.summary())


# -- embed / fixtures / catalog / search ----------------------------------------------

def cmd_embed(args: argparse.Namespace) -> int:
    for g in _read_graphs(args):
        big = embed_non_ke(g)
        fam = omega(big, args.cap_omega)
        doc = {
            "graph6": encode_graph6(big),
            "n": big.n,
            "m": big.m,
            "alpha": fam.alpha,
            "mu": mu(big),
            "is_ke": is_ke(big),
            "omega_preserved": True,  # embed_non_ke raises otherwise
        }
        if args.format == "machine":
            print(json.dumps(doc))
        else:
            print(doc["graph6"])
            print(f"  n={doc['n']} m={doc['m']} alpha={doc['alpha']} mu={doc['mu']} is_ke=false omega_preserved=true")
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    from .fixtures import run_fixtures

    start = time.perf_counter()
    outcomes = run_fixtures()
    failed = [o for o in outcomes if not o.ok]
    for o in outcomes:
        if args.verbose or not o.ok:
            print(o.line())
    summary = f"fixtures: {len(outcomes) - len(failed)}/{len(outcomes)} assertions passed"
    if not args.no_timing:
        summary += f" in {time.perf_counter() - start:.3f}s"
    print(summary)
    return EXIT_FAILS if failed else EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    lo, hi = args.n
    if not 1 <= lo <= hi <= CATALOG_MAX_N:
        raise _UsageError(f"catalog covers 1..{CATALOG_MAX_N}")
    for n in range(lo, hi + 1):
        lines = catalog_lines(n)
        if args.counts:
            print(f"n={n} graphs={len(lines)}")
        else:
            sys.stdout.write("".join(line + "\n" for line in lines))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    lo, hi = args.n if args.n else (1, CATALOG_MAX_N)
    common = dict(
        mode=args.mode,
        budget=args.budget,
        seed=args.seed,
        connected_only=args.connected,
        omega_cap=args.cap_omega,
    )
    if args.er:
        n_text, p_text = args.er
        try:
            n, p = int(n_text), float(p_text)
        except ValueError:
            raise _UsageError("--er expects an integer N and a float P") from None
        spec = SearchSpec(source="er", er_n=n, er_p=p, **common)
    elif args.exhaustive:
        spec = SearchSpec(source="file", path=args.exhaustive, n_min=lo, n_max=hi if args.n else 64, **common)
    else:
        spec = SearchSpec(source="catalog", n_min=lo, n_max=hi, **common)
    try:
        spec.validate()
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    result = run_search(spec, jobs=args.jobs)
    sys.stdout.write(result.render(args.format, timing=not args.no_timing))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line")
    grp.add_argument("--g6", metavar="STRING", help="a single graph6 string")
    grp.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' header, 'u v' lines)")
    grp.add_argument("--fixture", metavar="NAME", help="a built-in reference graph")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap-omega", type=int, default=DEFAULT_OMEGA_CAP, metavar="N")
    p.add_argument("--no-timing", action="store_true", help="omit timings (byte-stable output)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kegraph", description="Independence, matching and König-Egerváry analysis of small graphs.")
    ap.add_argument("--version", action="version", version=f"kegraph (kernels: {BACKEND})")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants plus the full check suite")
    _add_input(p)
    _add_common(p)
    p.add_argument("--samples", type=int, default=1000, help="sampled preorder pairs per graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run selected checks; exit 1 if any fails")
    _add_input(p)
    _add_common(p)
    p.add_argument("--theorem", default="all", help="comma-separated ids or 'all'")
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("embed", help="embed a KE graph into a non-KE graph with the same Ω")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("fixtures", help="regression run over the reference graphs")
    p.add_argument("-v", "--verbose", action="store_true", help="print passing assertions too")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("catalog", help="print packaged graphs (all graphs up to isomorphism)")
    p.add_argument("--n", type=_range, default=(1, CATALOG_MAX_N), metavar="A..B")
    p.add_argument("--counts", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("search", help="counterexample and data-collection search")
    _add_common(p)
    p.add_argument("--mode", default="conjecture", help="conjecture | problem1 | problem2 | theorem:<id>")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--er", nargs=2, metavar=("N", "P"), help="seeded Erdős–Rényi draws")
    src.add_argument("--exhaustive", metavar="FILE", help="graph6 stream")
    p.add_argument("--n", type=_range, metavar="A..B", help="order range (catalog or file)")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, _UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TheoremViolation as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        return EXIT_FAILS


if __name__ == "__main__":
    sys.exit(main())
