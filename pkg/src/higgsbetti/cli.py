"""Command-line front end.

Subcommands: ``compute`` (one Betti polynomial), ``table`` (a parameter
grid, optionally with rendered figures), ``verify`` (the identity suite),
``cache`` (list/clear the on-disk store).  Exit codes: 0 success, 2 invalid
input, 3 verification failure, 4 internal assertion failure.

All formats render the same canonical polynomial; json additionally carries
wall-clock timing (the only field that varies between runs).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import cache as cache_mod
from . import checks as checks_mod
from .algebra import LaurentPoly
from .errors import (
    INTERNAL_ERRORS,
    HiggsBettiError,
    InvalidInputError,
    NonCoprimeError,
)
from .specialize import (
    FIELD_COMPLEX,
    FIELD_REAL,
    PIPELINE_FAST,
    PIPELINE_GENERIC,
    T_CTX,
    complex_betti,
    real_betti,
)
from .version import ENGINE_VERSION

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFY_FAILED = 3
EXIT_INTERNAL = 4


@dataclass
class OutputRecord:
    """One computed polynomial plus provenance, ready for rendering."""

    params: Dict
    poly: LaurentPoly
    pipeline: str
    engine_version: str
    wall_ms: float

    def poly_pairs(self) -> List:
        """Ascending [exponent, "num/den"] pairs: the canonical JSON form."""
        pairs = []
        for (e,), c in sorted(self.poly.items()):
            cf = c if isinstance(c, Fraction) else Fraction(c)
            pairs.append([e, f"{cf.numerator}/{cf.denominator}"])
        return pairs

    def as_json_dict(self) -> Dict:
        return {
            "params": self.params,
            "poly": self.poly_pairs(),
            "pipeline": self.pipeline,
            "engine_version": self.engine_version,
            "wall_ms": round(self.wall_ms, 3),
        }


def poly_from_pairs(pairs) -> LaurentPoly:
    """Inverse of :meth:`OutputRecord.poly_pairs` (round-trip parser)."""
    coeffs = {}
    for e, c in pairs:
        num_s, _, den_s = str(c).partition("/")
        frac = Fraction(int(num_s), int(den_s or "1"))
        coeffs[(int(e),)] = int(frac) if frac.denominator == 1 else frac
    return LaurentPoly.from_dict(T_CTX, coeffs)


# ----------------------------------------------------------------------
# rendering
# ----------------------------------------------------------------------

def _poly_compact(poly: LaurentPoly) -> str:
    return poly.pretty()


def _latex_terms(poly: LaurentPoly) -> str:
    parts = []
    for (e,), c in poly.sorted_terms():
        c = int(c)
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{{{e}}}")
        if abs(c) == 1 and mono:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"


def _latex_poly(record: OutputRecord) -> str:
    """Factored 2^b t^v (1-t)^g (...) form for real results, else expanded."""
    params = record.params
    if params.get("field") == FIELD_REAL and record.poly:
        g, b = params["g"], params["b"]
        try:
            quotient = checks_mod.divisibility_quotient(record.poly, g, b)
        except HiggsBettiError:
            quotient = None
        if quotient is not None:
            v = quotient.valuation("t")
            inner = LaurentPoly.from_dict(
                T_CTX, {(e - v,): c for (e,), c in quotient.items()}
            )
            pieces = []
            if b:
                pieces.append(str(1 << b))
            if v:
                pieces.append("t" if v == 1 else f"t^{{{v}}}")
            pieces.append(f"(1-t)^{{{g}}}" if g != 1 else "(1-t)")
            pieces.append(f"({_latex_terms(inner)})")
            return "$" + "".join(pieces) + "$"
    return "$" + _latex_terms(record.poly) + "$"


def _text_lines(record: OutputRecord) -> List[str]:
    p = record.params
    if p.get("field") == FIELD_REAL:
        head = f"P_t(g={p['g']}, b={p['b']}, r={p['r']}, d={p['d']}, real)"
    else:
        head = f"P_t(g={p['g']}, r={p['r']}, d={p['d']}, complex)"
    return [f"{head} = {_poly_compact(record.poly)}", f"  pipeline: {record.pipeline}"]


_CSV_FIELDS = ["g", "b", "r", "d", "field", "pipeline", "degree", "poly"]


def _csv_row(record: OutputRecord) -> List:
    p = record.params
    return [
        p["g"],
        p.get("b", ""),
        p["r"],
        p["d"],
        p["field"],
        record.pipeline,
        record.poly.degree("t"),
        _poly_compact(record.poly),
    ]


def render_records(records: List[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        payload = [r.as_json_dict() for r in records]
        return json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_FIELDS)
        for r in records:
            writer.writerow(_csv_row(r))
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = []
        for r in records:
            p = r.params
            label = (
                f"g={p['g']}, b={p['b']}, r={p['r']}"
                if p.get("field") == FIELD_REAL
                else f"g={p['g']}, r={p['r']}"
            )
            lines.append(f"% {label}")
            lines.append(_latex_poly(r))
        return "\n".join(lines)
    if fmt == "text":
        lines = []
        for r in records:
            lines.extend(_text_lines(r))
        return "\n".join(lines)
    raise InvalidInputError(f"unknown format {fmt!r}")


# ----------------------------------------------------------------------
# computing records
# ----------------------------------------------------------------------

def _validate_coprime(r: int, d: int) -> None:
    if gcd(r, d) != 1:
        raise NonCoprimeError(
            f"rank {r} and degree {d} must be coprime (gcd is {gcd(r, d)})"
        )


def compute_record(
    g: int,
    b: Optional[int],
    r: int,
    d: int,
    field: str,
    pipeline: str,
    config: Optional[cache_mod.CacheConfig],
) -> OutputRecord:
    _validate_coprime(r, d)
    start = time.perf_counter()
    if field == FIELD_REAL:
        if b is None:
            raise InvalidInputError("the real case needs --b (number of circles minus 1)")
        if pipeline == PIPELINE_FAST:
            a = cache_mod.collapsed_real_a(g, b, r, config)
        else:
            a = cache_mod.generic_a(g, r, config)
        result = real_betti(g, b, r, pipeline=pipeline, d=d, a_value=a)
        params = {"g": g, "b": b, "r": r, "d": d, "field": FIELD_REAL}
    elif field == FIELD_COMPLEX:
        if pipeline != PIPELINE_GENERIC:
            raise InvalidInputError("the complex case only uses the generic pipeline")
        a = cache_mod.generic_a(g, r, config)
        result = complex_betti(g, r, d=d, a_value=a)
        params = {"g": g, "b": None, "r": r, "d": d, "field": FIELD_COMPLEX}
    else:
        raise InvalidInputError(f"unknown field case {field!r}")
    wall_ms = (time.perf_counter() - start) * 1000.0
    return OutputRecord(params, result.poly, result.pipeline, ENGINE_VERSION, wall_ms)


def _warm_cache_worker(args) -> None:
    kind, params, directory = args
    config = cache_mod.CacheConfig(Path(directory), True)
    if kind == "apoly":
        cache_mod.generic_a(params["g"], params["r"], config)
    else:
        cache_mod.collapsed_real_a(params["g"], params["b"], params["r"], config)


def _warm_cache(jobs: int, wanted: List[Tuple[str, Dict]], config) -> None:
    """Populate the disk cache for the expensive polynomials in parallel."""
    if jobs <= 1 or config is None or not config.enabled or len(wanted) <= 1:
        return
    args = [(kind, params, str(config.directory)) for kind, params in wanted]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        list(pool.map(_warm_cache_worker, args))


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _cache_config(args) -> Optional[cache_mod.CacheConfig]:
    if getattr(args, "no_cache", False):
        return None
    return cache_mod.CacheConfig.resolve(getattr(args, "cache_dir", None))


def cmd_compute(args) -> int:
    config = _cache_config(args)
    pipeline = PIPELINE_FAST if args.pipeline == "fast" else PIPELINE_GENERIC
    record = compute_record(
        args.g, args.b, args.r, args.d, args.field, pipeline, config
    )
    print(render_records([record], args.format))
    return EXIT_OK


def _parse_range(text: str) -> List[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        value = int(text)
        return [value]
    lo_i, hi_i = int(lo), int(hi)
    if hi_i < lo_i:
        return []
    return list(range(lo_i, hi_i + 1))


def cmd_table(args) -> int:
    config = _cache_config(args)
    g_values = _parse_range(args.g)
    r_values = _parse_range(args.r)
    pipeline = PIPELINE_FAST if args.pipeline == "fast" else PIPELINE_GENERIC
    cells = []
    for g in g_values:
        if args.field == FIELD_COMPLEX:
            b_values: List[Optional[int]] = [None]
        elif args.b == "all":
            b_values = list(range(0, g + 1))
        else:
            b_values = [int(args.b)]
        for b in b_values:
            for r in r_values:
                cells.append((g, b, r))
    wanted = []
    seen = set()
    for g, b, r in cells:
        key = ("apoly", g, r) if pipeline == PIPELINE_GENERIC else ("apoly-fast", g, b, r)
        if key in seen:
            continue
        seen.add(key)
        if pipeline == PIPELINE_GENERIC:
            wanted.append(("apoly", {"g": g, "r": r}))
        else:
            wanted.append(("apoly-fast", {"g": g, "b": b, "r": r}))
    _warm_cache(args.jobs, wanted, config)

    records: List[OutputRecord] = []
    failures: List[str] = []
    for g, b, r in cells:
        try:
            records.append(
                compute_record(g, b, r, args.d, args.field, pipeline, config)
            )
        except HiggsBettiError as exc:
            failures.append(f"g={g} b={b} r={r}: {exc}")
    output = render_records(records, args.format)
    if args.output:
        Path(args.output).write_text(output + "\n")
    else:
        print(output)
    for line in failures:
        print(f"error: {line}", file=sys.stderr)
    if args.plot_dir:
        from . import plotting
        from .specialize import BettiResult, CurveTopology

        for record in records:
            p = record.params
            curve = CurveTopology(p["g"], p.get("b"))
            result = BettiResult(
                curve, p["r"], p["d"], record.poly, p["field"], record.pipeline
            )
            plotting.render_betti_figure(result, Path(args.plot_dir))
    return EXIT_OK if not failures else EXIT_INVALID_INPUT


def cmd_verify(args) -> int:
    config = _cache_config(args)
    wanted = [
        ("apoly", {"g": g, "r": r})
        for g in range(1, args.max_g + 1)
        for r in range(1, args.max_r + 1)
    ]
    _warm_cache(args.jobs, wanted, config)
    provider = None
    if config is not None:
        provider = lambda g, r: cache_mod.generic_a(g, r, config)
    reports = checks_mod.run_suite(args.max_g, args.max_r, a_provider=provider)
    if args.recheck_cache:
        reports.extend(_recheck_cache(args.max_g, args.max_r, config))
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "engine_version": ENGINE_VERSION,
                    "checks": [r.as_dict() for r in reports],
                    "passed": len(reports) - len(failed),
                    "failed": len(failed),
                },
                indent=2,
            )
        )
    else:
        for r in reports:
            print(r.line())
            if not r.passed and r.witness:
                print(f"  witness: {r.witness}")
        print(f"{len(reports) - len(failed)} passed, {len(failed)} failed")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def _recheck_cache(max_g: int, max_r: int, config) -> List[checks_mod.CheckReport]:
    """Recompute-and-compare mode: validate existing cache entries byte-wise."""
    from . import plethystic

    reports = []
    if config is None:
        return reports
    for g in range(1, max_g + 1):
        for r in range(1, max_r + 1):
            params = {"g": g, "r": r}
            path = config.directory / cache_mod.entry_filename("apoly", params)
            if not path.exists():
                continue
            entry = cache_mod.read_entry(path, "apoly", params)
            fresh = plethystic.a_poly_for(plethystic.generic_layout(g), r)
            ok = entry is not None and entry.to_lines() == fresh.to_lines()
            witness = None
            if not ok:
                witness = "corrupt or unparseable entry" if entry is None else "stale entry"
                witness += f": {path.name}"
            reports.append(
                checks_mod.CheckReport(
                    "cache_consistency", (("g", g), ("r", r)), ok, witness
                )
            )
    return reports


def cmd_cache(args) -> int:
    config = cache_mod.CacheConfig.resolve(getattr(args, "cache_dir", None))
    if args.action == "list":
        entries = cache_mod.list_entries(config)
        for name, size in entries:
            print(f"{size:>10}  {name}")
        print(f"{len(entries)} entries in {config.directory}")
        return EXIT_OK
    if args.action == "clear":
        count = cache_mod.clear(config)
        print(f"removed {count} entries from {config.directory}")
        return EXIT_OK
    raise InvalidInputError(f"unknown cache action {args.action!r}")


# ----------------------------------------------------------------------
# parser / entry point
# ----------------------------------------------------------------------

def _add_common(parser, with_b=True):
    parser.add_argument("--g", type=int, required=True, help="genus (>= 1)")
    if with_b:
        parser.add_argument(
            "--b", type=int, default=None,
            help="number of real circles minus 1 (0 <= b <= g); real case only",
        )
    parser.add_argument("--r", type=int, required=True, help="rank (>= 1)")
    parser.add_argument("--d", type=int, default=1, help="degree, coprime to the rank")
    parser.add_argument(
        "--field", choices=[FIELD_REAL, FIELD_COMPLEX], default=FIELD_REAL
    )
    parser.add_argument(
        "--format", choices=["text", "json", "csv", "latex"], default="text"
    )
    parser.add_argument(
        "--pipeline", choices=["generic", "fast"], default="generic",
        help="generic keeps all alpha variables; fast collapses them early",
    )
    parser.add_argument("--no-cache", action="store_true", help="bypass the disk cache")
    parser.add_argument("--cache-dir", default=None, help="override the cache directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgsbetti",
        description=(
            "Exact signed Betti polynomials of moduli spaces of stable Higgs "
            "bundles over real and complex curves"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one Betti polynomial")
    _add_common(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_table = sub.add_parser("table", help="compute a parameter grid")
    p_table.add_argument("--g", required=True, help="genus or range, e.g. 2 or 2..4")
    p_table.add_argument("--b", default="all", help="'all' or a fixed value")
    p_table.add_argument("--r", required=True, help="rank or range, e.g. 1..3")
    p_table.add_argument("--d", type=int, default=1)
    p_table.add_argument(
        "--field", choices=[FIELD_REAL, FIELD_COMPLEX], default=FIELD_REAL
    )
    p_table.add_argument(
        "--format", choices=["text", "json", "csv", "latex"], default="csv"
    )
    p_table.add_argument(
        "--pipeline", choices=["generic", "fast"], default="generic"
    )
    p_table.add_argument("--jobs", type=int, default=1, help="parallel cache warmers")
    p_table.add_argument("--no-cache", action="store_true")
    p_table.add_argument("--cache-dir", default=None)
    p_table.add_argument("--output", default=None, help="write the table to a file")
    p_table.add_argument(
        "--plot-dir", default=None,
        help="render one coefficient figure per row into this directory",
    )
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--max-g", type=int, default=3)
    p_verify.add_argument("--max-r", type=int, default=3)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--no-cache", action="store_true")
    p_verify.add_argument("--cache-dir", default=None)
    p_verify.add_argument(
        "--recheck-cache", action="store_true",
        help="recompute cached polynomials and flag mismatching entries",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_cache = sub.add_parser("cache", help="manage the on-disk cache")
    p_cache.add_argument("action", choices=["list", "clear"])
    p_cache.add_argument("--cache-dir", default=None)
    p_cache.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except INTERNAL_ERRORS as exc:
        print(f"internal assertion failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
