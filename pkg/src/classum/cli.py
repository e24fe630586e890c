"""Command-line interface.

Every command emits a single envelope {tool_version, command, params, result,
status}.  JSON and CSV encode that envelope identically (integers as decimal
strings, so arbitrarily large residues survive any parser); CSV is a
two-column key/value table of the flattened envelope.  Exit status: 0 for a
completed computation, 2 when preconditions reject the request, 1 for an
internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import enum
import io
import json
import sys

from classum import __version__
from classum.class_sums import ClassSumQuery, class_sum, class_sum_oracle
from classum.congruences import (
    CongruenceReport,
    NotApplicableReport,
    QNormalDecomposition,
    qnormal_decompose,
    verify_carlitz,
    verify_carlitz_lift,
    verify_cor13_even,
    verify_cor13_general,
    verify_cor13_period,
    verify_cor13_split,
    verify_cor14,
    verify_dimitrov,
    verify_glaisher,
    verify_hermite,
    verify_lemma21,
    verify_remark11_period,
    verify_remark21,
    verify_theorem11,
    verify_theorem12,
)
from classum.cyclic_ring import Modulus
from classum.errors import InternalInconsistencyError, PreconditionError
from classum.periods import Admissibility, admissible, conjecture_sweep, mu, mu_report, nu

# identity -> (callable, required flags, optional flags)
VERIFIERS = {
    "theorem11": (verify_theorem11, ("q", "m", "l", "r", "n"), ("T",)),
    "theorem12": (verify_theorem12, ("q", "m", "a", "l", "r", "n"), ("T",)),
    "cor13_split": (verify_cor13_split, ("q", "m", "a", "l", "r"), ()),
    "cor13_general": (verify_cor13_general, ("q", "m", "a", "l", "r", "n", "k"), ()),
    "cor13_even": (verify_cor13_even, ("q", "m", "l", "r", "n", "k"), ()),
    "cor13_period": (verify_cor13_period, ("q", "m", "l", "r"), ()),
    "cor14": (verify_cor14, ("q", "m", "l", "r", "k"), ()),
    "glaisher": (verify_glaisher, ("p", "n", "r"), ()),
    "hermite": (verify_hermite, ("p", "n"), ()),
    "carlitz": (verify_carlitz, ("p", "alpha", "n"), ()),
    "carlitz_lift": (verify_carlitz_lift, ("p", "alpha", "n", "r"), ()),
    "dimitrov": (verify_dimitrov, ("p", "r", "k"), ()),
    "remark11_period": (verify_remark11_period, ("q", "m", "a", "n", "r"), ()),
    "lemma21": (verify_lemma21, ("q", "m", "a"), ()),
    "remark21": (verify_remark21, ("q", "m", "a"), ()),
    "qnormal": (qnormal_decompose, ("p", "m", "a", "r"), ()),
}


def encode(obj):
    """Make a payload JSON-safe with every integer as a decimal string."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return encode(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def flatten(obj, prefix: str = "") -> dict[str, str]:
    """Dotted-path view of an encoded envelope, for the CSV table."""
    out: dict[str, str] = {}
    if isinstance(obj, dict):
        for key in sorted(obj):
            path = f"{prefix}.{key}" if prefix else str(key)
            out.update(flatten(obj[key], path))
    elif isinstance(obj, list):
        for i, item in enumerate(obj):
            path = f"{prefix}.{i}" if prefix else str(i)
            out.update(flatten(item, path))
    elif isinstance(obj, bool):
        out[prefix] = "true" if obj else "false"
    elif obj is None:
        out[prefix] = ""
    else:
        out[prefix] = str(obj)
    return out


def _report_payload(report):
    if isinstance(report, CongruenceReport):
        return dataclasses.asdict(report)
    if isinstance(report, QNormalDecomposition):
        return {"identity_id": "qnormal", **dataclasses.asdict(report)}
    if isinstance(report, tuple):
        return {
            "identity_id": report[0].identity_id,
            "branches": [dataclasses.asdict(r) for r in report],
        }
    raise InternalInconsistencyError(f"unexpected report type {type(report).__name__}")


def _report_lines(report):
    if isinstance(report, tuple):
        lines = []
        for r in report:
            tag = r.params.get("branch", "")
            lines.append(
                f"{'HOLDS' if r.holds else 'FAILS'} [{tag}] modulo {r.modulus}: "
                f"lhs = {r.lhs}, rhs = {r.rhs}"
            )
        return lines
    if isinstance(report, QNormalDecomposition):
        pieces = ", ".join(f"{j}: {c}" for j, c in report.coeffs)
        return [
            f"{'HOLDS' if report.holds else 'FAILS'} modulo {report.p} "
            f"(checked n <= {report.checked_upto})",
            f"coefficients {{{pieces}}}",
        ]
    return [
        f"{'HOLDS' if report.holds else 'FAILS'} modulo {report.modulus}: "
        f"lhs = {report.lhs}, rhs = {report.rhs}"
    ]


def _cmd_nu(args):
    value = nu(args.m, args.q)
    return {"nu": value}, [str(value)], "ok", 0


def _cmd_sum(args):
    query = ClassSumQuery(n=args.n, r=args.r, m=args.m, a=args.a, modulus=Modulus(args.q, args.N))
    value = class_sum_oracle(query) if args.oracle else class_sum(query)
    result = {
        "residue": value,
        "modulus": query.modulus.M,
        "route": "oracle" if args.oracle else "ring",
    }
    return result, [str(value)], "ok", 0


def _cmd_mu(args):
    report = mu_report(args.m, args.a, args.q, exhaustive=args.exhaustive)
    result = {
        "mu": report.mu,
        "nu": report.nu,
        "admissibility": report.admissibility,
        "divisors_checked": report.divisors_checked,
    }
    return result, [str(report.mu)], "ok", 0


def _cmd_verify(args):
    fn, required, optional = VERIFIERS[args.identity_id]
    kwargs = {}
    for name in required:
        value = getattr(args, name)
        if value is None:
            raise PreconditionError(f"identity {args.identity_id} requires --{name}")
        kwargs[name] = value
    for name in optional:
        value = getattr(args, name)
        if value is not None:
            kwargs[name] = value
    report = fn(**kwargs)
    if isinstance(report, NotApplicableReport):
        raise PreconditionError(report.reason)
    return _report_payload(report), _report_lines(report), "ok", 0


def _cmd_sweep(args):
    report = conjecture_sweep(args.m, args.q, jobs=args.jobs)
    lines = [f"nu = {report.nu}", f"hypothesis_met = {'true' if report.hypothesis_met else 'false'}"]
    for entry in report.entries:
        lead = f"a = {entry.a_mod_q} (mod {report.q}): {entry.admissibility.value}"
        if entry.mu is not None:
            lead += f", mu = {entry.mu}"
        lines.append(lead)
    lines.append(f"max_mu = {report.max_mu} attained at {list(report.attained_at)}")
    lines.append(f"verdict: {report.verdict}")
    for item in report.discrepancies:
        lines.append(f"discrepancy: {item}")
    return report, lines, "ok", 0


def _selftest_checks():
    yield "nu_7(9)", lambda: nu(7, 9), 2184
    yield "nu_7(5)", lambda: nu(7, 5), 15624
    yield "nu_6(11)", lambda: nu(6, 11), 120
    yield "nu_1(9)", lambda: nu(1, 9), 6
    for m, a, q, want in [
        (7, -1, 9, 1092),
        (7, 1, 9, 546),
        (7, -2, 9, 546),
        (7, 4, 9, 546),
        (7, 3, 9, 3),
        (7, -3, 9, 3),
        (7, 1, 5, 868),
        (7, -1, 5, 1736),
        (7, 2, 5, 2232),
        (7, -2, 5, 15624),
        (6, 1, 11, 60),
        (6, -1, 11, 60),
        (6, 2, 11, 120),
        (7, 0, 9, 1),
    ]:
        yield f"mu_{m}({a},{q})", (lambda m=m, a=a, q=q: mu(m, a, q)), want
    yield "admissible(4,7,9)", lambda: admissible(4, 7, 9).value, "coprime_norm"
    yield "admissible(-1,7,9)", lambda: admissible(-1, 7, 9).value, "a_eq_minus1"
    yield "admissible(5,7,9)", lambda: admissible(5, 7, 9).value, "inadmissible"
    yield "dimitrov(p=5,r=0,k=2)", lambda: verify_dimitrov(5, 0, 2).holds, True
    yield "theorem11(q=5,m=4,l=0,r=2,n=1,T=4)", lambda: verify_theorem11(5, 4, 0, 2, 1, 4).holds, True
    yield "carlitz(p=3,alpha=2,n=2)", lambda: verify_carlitz(3, 2, 2).holds, True


def _cmd_selftest(args):
    checks = []
    failures = 0
    lines = []
    for name, compute, expected in _selftest_checks():
        actual = compute()
        ok = actual == expected
        failures += 0 if ok else 1
        checks.append({"name": name, "expected": expected, "actual": actual, "pass": ok})
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}: expected {expected}, got {actual}")
    lines.append(
        f"{len(checks) - failures}/{len(checks)} checks passed"
        if failures
        else f"all {len(checks)} checks passed"
    )
    status = "ok" if failures == 0 else "internal_error"
    return {"checks": checks, "failures": failures}, lines, status, 0 if failures == 0 else 1


_HANDLERS = {
    "nu": _cmd_nu,
    "sum": _cmd_sum,
    "mu": _cmd_mu,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "selftest": _cmd_selftest,
}

_PARAM_FLAGS = ("m", "q", "N", "n", "r", "a", "l", "k", "T", "p", "alpha")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="classum",
        description="Exact class-sum computations, periods, and congruence checks modulo prime powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    sp = sub.add_parser("nu", help="explicit period of the class-sum sequences mod q")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    common(sp)

    sp = sub.add_parser("sum", help="one class sum mod q^N")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--N", type=int, default=1)
    sp.add_argument("--oracle", action="store_true", help="use the binomial oracle instead of the ring engine")
    common(sp)

    sp = sub.add_parser("mu", help="minimal period for one base a")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--exhaustive", action="store_true", help="scan every candidate period, not just divisors")
    common(sp)

    sp = sub.add_parser("verify", help="check one congruence instance")
    sp.add_argument("identity_id", choices=sorted(VERIFIERS))
    for flag in _PARAM_FLAGS:
        sp.add_argument(f"--{flag}", type=int, default=None)
    common(sp)

    sp = sub.add_parser("sweep", help="minimal periods for every base in [-q, q]")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: cpu count)")
    common(sp)

    sp = sub.add_parser("selftest", help="run the built-in battery of known values")
    common(sp)

    return parser


def _collect_params(args) -> dict:
    params = {}
    if args.command == "verify":
        params["identity_id"] = args.identity_id
    for flag in _PARAM_FLAGS:
        value = getattr(args, flag, None)
        if value is not None:
            params[flag] = value
    for flag in ("oracle", "exhaustive"):
        if getattr(args, flag, False):
            params[flag] = True
    if getattr(args, "jobs", None) is not None:
        params["jobs"] = args.jobs
    return params


def _emit(envelope: dict, fmt: str, plain_lines: list[str]):
    if fmt == "json":
        sys.stdout.write(json.dumps(encode(envelope), sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        flat = flatten(encode(envelope))
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key in sorted(flat):
            writer.writerow([key, flat[key]])
        sys.stdout.write(buf.getvalue())
    else:
        for line in plain_lines:
            sys.stdout.write(line + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = _collect_params(args)
    try:
        result, plain_lines, status, code = _HANDLERS[args.command](args)
    except PreconditionError as exc:
        result = {"reason": str(exc)}
        plain_lines = [f"precondition failed: {exc}"]
        status, code = "precondition_failed", 2
    except InternalInconsistencyError as exc:
        result = {"reason": str(exc)}
        plain_lines = [f"internal error: {exc}"]
        status, code = "internal_error", 1
    envelope = {
        "tool_version": __version__,
        "command": args.command,
        "params": params,
        "result": result,
        "status": status,
    }
    _emit(envelope, args.format, plain_lines)
    return code


if __name__ == "__main__":
    sys.exit(main())
