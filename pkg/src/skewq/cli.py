"""Command-line front end: analyze one sign pattern, sweep, or print catalogs.

Input files are UTF-8 JSON objects {"n": int, "neg_pairs": [[i, j], ...]}
listing the strictly upper pairs carrying coefficient -1 (everything else
is +1).  Exit codes: 0 success, 2 malformed input or flags, 3 invariant
violation (e.g. a failed certificate; the report is still emitted),
4 sweep finished but found conjecture counterexamples.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .classify import (
    CatalogEntry,
    OrbitSummary,
    SweepReport,
    catalog,
    expected_from_ell,
    verify_conjecture,
)
from .clifford import anticommutation_form, explicit_representation, mu_matrix, wedderburn_type
from .oracle import certify_wedderburn, structure_constants
from .pointscheme import count_p1, point_scheme
from .signs import SignMatrix, bad_triples

DEFAULT_SWEEP_LIMIT = 7
SWEEP_LIMIT_ENV = "SKEWQ_MAX_N"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3
EXIT_COUNTEREXAMPLE = 4


class InputError(Exception):
    pass


@dataclass(frozen=True)
class InputSpec:
    n: int
    neg_pairs: tuple[tuple[int, int], ...]


def load_input_spec(path: str) -> InputSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(raw, dict):
        raise InputError(f"{path}: top level must be an object")
    unknown = set(raw) - {"n", "neg_pairs"}
    if unknown:
        raise InputError(f"{path}: unknown keys {sorted(unknown)}")
    n = raw.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"{path}: field 'n' must be a positive integer")
    pairs_raw = raw.get("neg_pairs", [])
    if not isinstance(pairs_raw, list):
        raise InputError(f"{path}: field 'neg_pairs' must be a list of [i, j] pairs")
    pairs = []
    for idx, item in enumerate(pairs_raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise InputError(f"{path}: neg_pairs[{idx}] must be a pair of integers")
        i, j = item
        if not (1 <= i < j <= n):
            raise InputError(f"{path}: neg_pairs[{idx}] = [{i}, {j}] needs 1 <= i < j <= n")
        pairs.append((i, j))
    if len(set(pairs)) != len(pairs):
        raise InputError(f"{path}: duplicate entries in neg_pairs")
    return InputSpec(n, tuple(sorted(pairs)))


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    neg_pairs: tuple[tuple[int, int], ...]
    bad_triples: tuple[tuple[int, int, int], ...]
    components: tuple[tuple[int, ...], ...]
    ell: int
    mu_neg_pairs: tuple[tuple[int, int], ...]
    wedderburn_d: int
    wedderburn_c: int
    category: str
    oracle_certified: bool | None
    conjecture_expected_N: int
    conjecture_match: bool
    certification_failures: tuple[str, ...] = ()


def analyze(spec: InputSpec, run_oracle: bool = True) -> AnalysisReport:
    sign = SignMatrix.from_neg_pairs(spec.n, spec.neg_pairs)
    triples = bad_triples(sign)
    ps = point_scheme(triples)
    ell = count_p1(ps)
    mu = mu_matrix(sign)
    w = wedderburn_type(anticommutation_form(mu))
    certified: bool | None = None
    failures: tuple[str, ...] = ()
    if run_oracle:
        cert = certify_wedderburn(
            structure_constants(mu), w, explicit_representation(mu)
        )
        certified = cert.passed
        failures = cert.failures
    expected = expected_from_ell(spec.n, ell).copies
    return AnalysisReport(
        n=spec.n,
        neg_pairs=spec.neg_pairs,
        bad_triples=triples.triples_sorted(),
        components=ps.sorted_components(),
        ell=ell,
        mu_neg_pairs=tuple(sorted(mu.neg_pairs)),
        wedderburn_d=w.d,
        wedderburn_c=w.c,
        category=_category_str(w.c),
        oracle_certified=certified,
        conjecture_expected_N=expected,
        conjecture_match=w.c == expected,
        certification_failures=failures,
    )


def _category_str(copies: int) -> str:
    return "Db(mod k)" if copies == 1 else f"Db(mod k^{copies})"


def _algebra_str(d: int, c: int) -> str:
    if d == 1:
        return "k" if c == 1 else f"k^{c}"
    return f"M_{d}(k)" if c == 1 else f"M_{d}(k)^{c}"


def _p_str(component: tuple[int, ...]) -> str:
    return "P(" + ",".join(str(x) for x in component) + ")"


def _scheme_str(components) -> str:
    return " ∪ ".join(_p_str(c) for c in components) if components else "(empty)"


# ---------------------------------------------------------------------------
# JSON rendering (fixed key order) and parsing


def analysis_to_json_dict(r: AnalysisReport) -> dict:
    return {
        "n": r.n,
        "neg_pairs": [list(p) for p in r.neg_pairs],
        "bad_triples": [list(t) for t in r.bad_triples],
        "components": [list(c) for c in r.components],
        "ell": r.ell,
        "mu_neg_pairs": [list(p) for p in r.mu_neg_pairs],
        "wedderburn": {"d": r.wedderburn_d, "c": r.wedderburn_c},
        "category": r.category,
        "oracle_certified": r.oracle_certified,
        "conjecture_expected_N": r.conjecture_expected_N,
        "conjecture_match": r.conjecture_match,
        "certification_failures": list(r.certification_failures),
    }


def analysis_from_json_dict(d: dict) -> AnalysisReport:
    return AnalysisReport(
        n=d["n"],
        neg_pairs=tuple(tuple(p) for p in d["neg_pairs"]),
        bad_triples=tuple(tuple(t) for t in d["bad_triples"]),
        components=tuple(tuple(c) for c in d["components"]),
        ell=d["ell"],
        mu_neg_pairs=tuple(tuple(p) for p in d["mu_neg_pairs"]),
        wedderburn_d=d["wedderburn"]["d"],
        wedderburn_c=d["wedderburn"]["c"],
        category=d["category"],
        oracle_certified=d["oracle_certified"],
        conjecture_expected_N=d["conjecture_expected_N"],
        conjecture_match=d["conjecture_match"],
        certification_failures=tuple(d["certification_failures"]),
    )


def sweep_to_json_dict(r: SweepReport) -> dict:
    return {
        "n": r.n,
        "histogram": [
            {"ell": ell, "N": copies, "count": count}
            for (ell, copies), count in sorted(r.histogram.items())
        ],
        "verdict": r.verdict,
        "counterexamples": [[list(t) for t in entry] for entry in r.counterexamples],
        "orbits": [
            {
                "triples": [list(t) for t in orbit.triples],
                "count": orbit.count,
                "ell": orbit.ell,
                "N": orbit.N,
                "d": orbit.d,
                "c": orbit.c,
                "label": orbit.label,
            }
            for orbit in r.orbits
        ],
        "total_configs": r.total_configs,
        "oracle_certified": {"checked": r.certified_checked, "total": r.certified_total},
        "certification_failures": [
            {"triples": [list(t) for t in triples], "failures": list(fails)}
            for triples, fails in r.certification_failures
        ],
        "converse_witnesses": [
            [list(t) for t in entry] for entry in r.converse_witnesses
        ],
        "converse_witness_count": r.converse_witness_count,
    }


def sweep_from_json_dict(d: dict) -> SweepReport:
    return SweepReport(
        n=d["n"],
        total_configs=d["total_configs"],
        histogram={
            (entry["ell"], entry["N"]): entry["count"] for entry in d["histogram"]
        },
        orbits=tuple(
            OrbitSummary(
                triples=tuple(tuple(t) for t in o["triples"]),
                count=o["count"],
                ell=o["ell"],
                N=o["N"],
                d=o["d"],
                c=o["c"],
                label=o["label"],
            )
            for o in d["orbits"]
        ),
        verdict=d["verdict"],
        counterexamples=tuple(
            tuple(tuple(t) for t in entry) for entry in d["counterexamples"]
        ),
        certified_checked=d["oracle_certified"]["checked"],
        certified_total=d["oracle_certified"]["total"],
        certification_failures=tuple(
            (tuple(tuple(t) for t in e["triples"]), tuple(e["failures"]))
            for e in d["certification_failures"]
        ),
        converse_witnesses=tuple(
            tuple(tuple(t) for t in entry) for entry in d["converse_witnesses"]
        ),
        converse_witness_count=d["converse_witness_count"],
    )


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2)


# ---------------------------------------------------------------------------
# Text rendering


def _analysis_text(r: AnalysisReport) -> str:
    lines = [
        f"n: {r.n}",
        "negative pairs: " + (" ".join(f"({i},{j})" for i, j in r.neg_pairs) or "(none)"),
        "bad triples: "
        + (" ".join("{%d,%d,%d}" % t for t in r.bad_triples) or "(none)"),
        "point scheme: " + _scheme_str(r.components),
        f"lines (ell): {r.ell}",
        "mu negative pairs: "
        + (" ".join(f"({i},{j})" for i, j in r.mu_neg_pairs) or "(none)"),
        f"algebra: {_algebra_str(r.wedderburn_d, r.wedderburn_c)}"
        f"  [d={r.wedderburn_d}, c={r.wedderburn_c}]",
        f"stable category: {r.category}",
        "oracle certificate: "
        + ("skipped" if r.oracle_certified is None else "passed" if r.oracle_certified else "FAILED"),
        f"conjecture expects: {_category_str(r.conjecture_expected_N)}"
        f"  match: {'yes' if r.conjecture_match else 'NO'}",
    ]
    if r.certification_failures:
        lines.append("certificate failures: " + "; ".join(r.certification_failures))
    return "\n".join(lines)


def _sweep_text(r: SweepReport) -> str:
    lines = [
        f"sweep n={r.n}: {r.total_configs} gauge patterns",
        "histogram (ell, N) -> count:",
    ]
    for (ell, copies), count in sorted(r.histogram.items()):
        lines.append(f"  ell={ell:>2}  N={copies:<5} {count}")
    lines.append(f"verdict: {r.verdict}")
    if r.counterexamples:
        lines.append(f"counterexamples ({len(r.counterexamples)}):")
        for entry in r.counterexamples:
            lines.append("  " + " ".join("{%d,%d,%d}" % t for t in entry))
    lines.append(f"orbit classes: {len(r.orbits)}")
    for orbit in r.orbits:
        tag = f" {orbit.label}" if orbit.label else ""
        lines.append(
            f"  [{orbit.count:>3} patterns]{tag} ell={orbit.ell} "
            f"{_algebra_str(orbit.d, orbit.c)} -> {_category_str(orbit.N)} "
            + (" ".join("{%d,%d,%d}" % t for t in orbit.triples) or "(no bad triples)")
        )
    lines.append(
        f"oracle certified: {r.certified_checked}/{r.certified_total} patterns"
        + ("" if not r.certification_failures else "  WITH FAILURES")
    )
    lines.append(
        f"converse witnesses (N minimal but locus not the whole space): "
        f"{r.converse_witness_count}"
    )
    return "\n".join(lines)


def _catalog_text(n: int, entries: tuple[CatalogEntry, ...]) -> str:
    lines = [f"catalog n={n}: {len(entries)} orbit classes"]
    for e in entries:
        lines.append(
            f"  {e.tag:<8} {_scheme_str(e.components)}  ell={e.ell}  "
            f"{_algebra_str(e.d, e.c)}  {_category_str(e.N)}  "
            "triples: " + (" ".join("{%d,%d,%d}" % t for t in e.triples) or "(none)")
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Commands


def cmd_analyze(args) -> int:
    try:
        spec = load_input_spec(args.input)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = analyze(spec, run_oracle=not args.no_oracle)
    except ValueError as exc:
        print(f"error: {exc} (try --no-oracle for large n)", file=sys.stderr)
        return EXIT_INPUT
    print(_dump_json(analysis_to_json_dict(report)) if args.json else _analysis_text(report))
    if report.oracle_certified is False:
        print("error: certificate failed", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _sweep_limit() -> int:
    raw = os.environ.get(SWEEP_LIMIT_ENV)
    if raw is None:
        return DEFAULT_SWEEP_LIMIT
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_SWEEP_LIMIT


def cmd_sweep(args) -> int:
    limit = _sweep_limit()
    if not 2 <= args.n <= limit:
        print(
            f"error: sweep needs 2 <= n <= {limit} "
            f"(override the cap with {SWEEP_LIMIT_ENV})",
            file=sys.stderr,
        )
        return EXIT_INPUT
    if args.sample_certify is not None and not 0 <= args.sample_certify <= 100:
        print("error: --sample-certify must be a percentage 0..100", file=sys.stderr)
        return EXIT_INPUT
    report = verify_conjecture(
        args.n,
        jobs=args.jobs,
        sample_certify=args.sample_certify,
        guard_max=limit,
    )
    print(_dump_json(sweep_to_json_dict(report)) if args.json else _sweep_text(report))
    if report.certification_failures:
        print("error: oracle certification failed during sweep", file=sys.stderr)
        return EXIT_INVARIANT
    if report.counterexamples:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_catalog(args) -> int:
    try:
        entries = catalog(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(_catalog_text(args.n, entries))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewq",
        description="Exact classification of quadrics in skew projective coordinates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one sign pattern from a JSON file")
    p_analyze.add_argument("input", help="path to a JSON input file")
    p_analyze.add_argument("--json", action="store_true", help="emit a JSON report")
    p_analyze.add_argument(
        "--no-oracle", action="store_true", help="skip the brute-force certificate"
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_sweep = sub.add_parser("sweep", help="sweep all gauge patterns for one n")
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument(
        "--sample-certify",
        type=int,
        default=None,
        metavar="PERCENT",
        help="percentage of patterns to certify (default: 100 for n<=5, else 1)",
    )
    p_sweep.add_argument("--json", action="store_true", help="emit a JSON report")
    p_sweep.set_defaults(func=cmd_sweep)

    p_catalog = sub.add_parser("catalog", help="print the orbit catalog for one n")
    p_catalog.add_argument("--n", type=int, required=True)
    p_catalog.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
