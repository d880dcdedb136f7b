"""Command-line front end: compute diamonds, verify identities, sweep
parameter ranges, and emit deterministic text or JSON reports with
CI-friendly exit codes (0 verified, 1 any failure, 2 usage error)."""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor

from .curves import jacobian_diamond, sym_curve_diamond
from .exactpoly import BiPoly, LaurentPoly
from .fano_even import EvenFanoParams, euler_closed_form, fano_even_diamond
from .fano_odd import OddFanoParams, fano_odd_diamond
from .motivic import (
    FAILED,
    VERIFIED,
    VerificationReport,
    verify_bgmn_crosscheck,
    verify_decomposition,
    verify_hochschild,
    verify_k0_identity,
)
from .stacky import chu_vandermonde_check, gessel_identity_check, stacky_collection_length


class CliUsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialization

def _payload(value):
    """JSON payload for a polynomial-like report side.

    Polynomials become sorted arrays of [exponent(s), coefficient] with
    coefficients as decimal strings (they exceed native integer widths);
    integers become decimal strings; term lists become [index, payload]
    pairs.
    """
    if value is None:
        return None
    if isinstance(value, LaurentPoly):
        return [[e, str(c)] for e, c in value.items()]
    if isinstance(value, BiPoly):
        return [[p, q, str(c)] for (p, q), c in value.items()]
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [[i, _payload(p)] for i, p in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def report_to_json_obj(report: VerificationReport) -> dict:
    return {
        "identity": report.identity,
        "params": {k: report.params[k] for k in sorted(report.params)},
        "status": report.status,
        "lhs": _payload(report.lhs),
        "rhs": _payload(report.rhs),
        "effectivity": [[i, bool(ok)] for i, ok in report.effectivity],
        "observations": {k: report.observations[k] for k in sorted(report.observations)},
        "elapsed_ms": report.elapsed_ms,
    }


def canonical_json(obj) -> str:
    """Canonical dump: sorted keys, fixed separators, trailing newline.
    Parsing and re-serializing an emitted document is byte-identical."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _pretty_side(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, LaurentPoly):
        return value.pretty()
    if isinstance(value, BiPoly):
        return value.pretty()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (tuple, list)):
        return "; ".join(f"[{i}] {_pretty_side(p)}" for i, p in value)
    return str(value)


def report_to_text(report: VerificationReport) -> str:
    head = "PASS" if report.verified else "FAIL"
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    lines = [f"{head} {report.identity} {params} ({report.elapsed_ms} ms)"]
    if not report.verified:
        lines.append(f"  lhs: {_pretty_side(report.lhs)}")
        lines.append(f"  rhs: {_pretty_side(report.rhs)}")
        bad = [i for i, ok in report.effectivity if not ok]
        if bad:
            lines.append(f"  non-effective multiplicities at i = {bad}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# report builders for the checks the library does not package itself

def stacky_counts_report(g: int, k: int) -> VerificationReport:
    """Three-way agreement: Euler characteristic of the diamond, its
    closed form, and the exceptional-collection count."""
    t0 = time.perf_counter()
    diamond_euler = fano_even_diamond(EvenFanoParams(g, k)).euler()
    closed = euler_closed_form(g, k)
    count = stacky_collection_length(g, k)
    ok = diamond_euler == closed == count
    return VerificationReport(
        identity="stacky-counts",
        params={"g": g, "k": k},
        status=VERIFIED if ok else FAILED,
        lhs=diamond_euler,
        rhs=closed,
        observations={"collection_length": str(count)},
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


def gessel_suite_report(max_m: int, max_a: int) -> VerificationReport:
    t0 = time.perf_counter()
    failures = [
        [m, a]
        for m in range(max_m + 1)
        for a in range(0, max_a + 1, 2)
        if not gessel_identity_check(m, a)
    ]
    instances = (max_m + 1) * (max_a // 2 + 1)
    return VerificationReport(
        identity="gessel-identity",
        params={"max_a": max_a, "max_m": max_m},
        status=VERIFIED if not failures else FAILED,
        lhs=None,
        rhs=None,
        observations={"failures": failures, "instances": instances},
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


def chu_vandermonde_suite_report(max_n: int) -> VerificationReport:
    t0 = time.perf_counter()
    failures = [
        [n, j, k]
        for n in range(max_n + 1)
        for k in range(n + 1)
        for j in range(k + 1)
        if not chu_vandermonde_check(n, j, k)
    ]
    instances = sum((k + 1) for n in range(max_n + 1) for k in range(n + 1))
    return VerificationReport(
        identity="chu-vandermonde",
        params={"max_n": max_n},
        status=VERIFIED if not failures else FAILED,
        lhs=None,
        rhs=None,
        observations={"failures": failures, "instances": instances},
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


# ---------------------------------------------------------------------------
# sweep machinery

def sweep_tasks(max_g, max_g_even, max_m, max_a, max_n) -> list[tuple]:
    tasks: list[tuple] = []
    for g in range(2, max_g + 1):
        tasks.append(("k0", g, 0))
        tasks.append(("bgmn", g, 0))
        for k in range(g - 1):
            tasks.append(("decomposition", g, k))
            tasks.append(("hochschild", g, k))
    for g in range(2, max_g_even + 1):
        for k in range(g - 1):
            tasks.append(("stacky", g, k))
    tasks.append(("gessel", max_m, max_a))
    tasks.append(("chu", max_n, 0))
    return tasks


def run_sweep_task(task: tuple) -> VerificationReport:
    kind, a, b = task
    if kind == "decomposition":
        return verify_decomposition(a, b)
    if kind == "hochschild":
        return verify_hochschild(a, b)
    if kind == "k0":
        return verify_k0_identity(a)
    if kind == "bgmn":
        return verify_bgmn_crosscheck(a)
    if kind == "stacky":
        return stacky_counts_report(a, b)
    if kind == "gessel":
        return gessel_suite_report(a, b)
    if kind == "chu":
        return chu_vandermonde_suite_report(a)
    raise ValueError(f"unknown sweep task {kind!r}")


def _report_sort_key(report: VerificationReport):
    return (report.identity, tuple(sorted(report.params.items())))


def run_sweep(max_g, max_g_even, max_m, max_a, max_n, jobs=1) -> list[VerificationReport]:
    """Run the full verification sweep; results are sorted by identity and
    parameters, so the output never depends on worker scheduling."""
    tasks = sweep_tasks(max_g, max_g_even, max_m, max_a, max_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_sweep_task, tasks, chunksize=4))
    else:
        reports = [run_sweep_task(t) for t in tasks]
    reports.sort(key=_report_sort_key)
    return reports


# ---------------------------------------------------------------------------
# argument parsing and dispatch

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoquadrics",
        description=(
            "Exact Hodge diamonds and motivic invariants of Fano schemes of "
            "linear subspaces on smooth intersections of two quadrics."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("--output", metavar="FILE", help="write the result to FILE atomically")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diamond", parents=[common], help="print a Hodge diamond")
    p.add_argument("target", choices=("fano-odd", "fano-even", "sym", "jac"))
    p.add_argument("--g", type=int, help="genus parameter of the associated curve")
    p.add_argument("--k", type=int, help="dimension of the linear subspaces (fano targets)")
    p.add_argument("--n", type=int, help="symmetric-power index (sym target)")

    p = sub.add_parser("verify", parents=[common], help="verify one identity instance")
    p.add_argument("target", choices=("odd", "even", "k0", "bgmn", "hochschild"))
    p.add_argument("--g", type=int, help="genus parameter of the associated curve")
    p.add_argument("--k", type=int, help="dimension of the linear subspaces")

    p = sub.add_parser("identity", parents=[common], help="run a combinatorial identity suite")
    p.add_argument("name", choices=("gessel", "chu-vandermonde"))
    p.add_argument("--max-m", type=int, default=30, help="gessel: largest m (default 30)")
    p.add_argument("--max-a", type=int, default=60, help="gessel: largest even a (default 60)")
    p.add_argument("--max-n", type=int, default=40, help="chu-vandermonde: largest n (default 40)")

    p = sub.add_parser("sweep", parents=[common], help="verify everything over parameter ranges")
    p.add_argument("--max-g", type=int, default=12, help="largest genus, hyperelliptic checks")
    p.add_argument("--max-g-even", type=int, default=20, help="largest genus, stacky counts")
    p.add_argument("--max-m", type=int, default=30, help="gessel suite bound")
    p.add_argument("--max-a", type=int, default=60, help="gessel suite bound (even)")
    p.add_argument("--max-n", type=int, default=40, help="chu-vandermonde suite bound")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")

    return parser


def _require(args, flag: str):
    value = getattr(args, flag.lstrip("-").replace("-", "_"))
    if value is None:
        raise CliUsageError(f"{flag} is required for this command")
    return value


def _reject(args, flag: str):
    if getattr(args, flag.lstrip("-").replace("-", "_")) is not None:
        raise CliUsageError(f"{flag} is not accepted by this command")


def _cmd_diamond(args):
    target = args.target
    g = _require(args, "--g")
    if target == "fano-odd":
        _reject(args, "--n")
        dia = fano_odd_diamond(OddFanoParams(g, _require(args, "--k")))
    elif target == "fano-even":
        _reject(args, "--n")
        dia = fano_even_diamond(EvenFanoParams(g, _require(args, "--k")))
    elif target == "sym":
        _reject(args, "--k")
        dia = sym_curve_diamond(g, _require(args, "--n"))
    else:
        _reject(args, "--k")
        _reject(args, "--n")
        dia = jacobian_diamond(g)
    return 0, dia.to_json_obj(), dia.to_text()


def _cmd_verify(args):
    g = _require(args, "--g")
    target = args.target
    if target == "odd":
        report = verify_decomposition(g, _require(args, "--k"))
    elif target == "even":
        report = stacky_counts_report(g, _require(args, "--k"))
    elif target == "k0":
        _reject(args, "--k")
        report = verify_k0_identity(g)
    elif target == "bgmn":
        _reject(args, "--k")
        report = verify_bgmn_crosscheck(g)
    else:
        report = verify_hochschild(g, _require(args, "--k"))
    code = 0 if report.verified else 1
    return code, report_to_json_obj(report), report_to_text(report)


def _cmd_identity(args):
    if args.name == "gessel":
        report = gessel_suite_report(args.max_m, args.max_a)
    else:
        report = chu_vandermonde_suite_report(args.max_n)
    code = 0 if report.verified else 1
    return code, report_to_json_obj(report), report_to_text(report)


def _cmd_sweep(args):
    for flag in ("max_g", "max_g_even"):
        if getattr(args, flag) < 2:
            raise CliUsageError(f"--{flag.replace('_', '-')} must be at least 2")
    if args.jobs < 1:
        raise CliUsageError("--jobs must be at least 1")
    reports = run_sweep(
        args.max_g, args.max_g_even, args.max_m, args.max_a, args.max_n, jobs=args.jobs
    )
    failed = [r for r in reports if not r.verified]
    payload = {
        "reports": [report_to_json_obj(r) for r in reports],
        "summary": {
            "failed": len(failed),
            "total": len(reports),
            "verified": len(reports) - len(failed),
        },
    }
    lines = [report_to_text(r) for r in reports]
    lines.append(f"verified {len(reports) - len(failed)}/{len(reports)}")
    return (1 if failed else 0), payload, "\n".join(lines)


_DISPATCH = {
    "diamond": _cmd_diamond,
    "verify": _cmd_verify,
    "identity": _cmd_identity,
    "sweep": _cmd_sweep,
}


def _write_atomic(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".twoquadrics-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, json_obj, text = _DISPATCH[args.command](args)
    except (CliUsageError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    rendered = canonical_json(json_obj) if args.format == "json" else text + "\n"
    if args.output:
        _write_atomic(args.output, rendered)
    else:
        sys.stdout.write(rendered)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
