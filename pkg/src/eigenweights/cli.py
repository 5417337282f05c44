"""Command-line front end.

Every command writes one JSON document (or a plain-text table) to stdout.
Rationals are always rendered as strings ``"p/q"``.  Exit codes: 0 on success,
1 on a formula/oracle mismatch, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from .characters import character
from .formulas import formula_eigen
from .groups import EigenResult, GroupSpec
from .gysin import oracle_eigen
from .partitions import Partition, skew_syt_count, syt_count

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# largest ranks the oracle is run at by `verify`
ORACLE_LIMITS = {"A": 6, "B": 6, "C": 5, "D": 5}
VERIFY_DEFAULTS = {"A": 5, "B": 5, "C": 4, "D": 5}
WORKERS_ENV = "EIGENWEIGHTS_WORKERS"


class UsageError(Exception):
    pass


def rat(x) -> str:
    return str(Fraction(x))


def result_payload(result: EigenResult) -> dict:
    out = {"eigenweights": {k: rat(v) for k, v in result.eigenweights.items()}}
    if result.block is not None:
        block = {
            "basis": list(result.block_basis),
            "matrix": [[rat(x) for x in row] for row in result.block],
        }
        if result.block_eigenvalues is not None:
            block["eigenvalues"] = [rat(x) for x in result.block_eigenvalues]
        else:
            block["char_poly"] = [rat(x) for x in result.char_poly]
        out["block"] = block
    return out


def compare(formula: EigenResult, oracle: EigenResult) -> tuple[dict, list]:
    """Per-label match flags and the list of mismatches."""
    match, diffs = {}, []
    spec = formula.spec
    for label, value in formula.eigenweights.items():
        other = oracle.eigenweights.get(label)
        match[label] = other == value
        if not match[label]:
            diffs.append({"spec": spec.key, "generator": label, "formula": rat(value),
                          "oracle": None if other is None else rat(other)})
    if formula.block is not None or oracle.block is not None:
        same = formula.block == oracle.block
        match["block"] = same
        if not same:
            diffs.append({"spec": spec.key, "generator": "block",
                          "formula": formula.block and [[rat(x) for x in r] for r in formula.block],
                          "oracle": oracle.block and [[rat(x) for x in r] for r in oracle.block]})
    return match, diffs


# -- commands ----------------------------------------------------------------


def make_spec(family: str, n: int, m: Optional[int], coweight: Optional[str]) -> GroupSpec:
    try:
        return GroupSpec(family, n, m=m if family == "A" else None,
                         coweight=(coweight or "spin") if family == "D" else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_eigen(family: str, n: int, m: Optional[int] = None, coweight: Optional[str] = None,
              method: str = "formula") -> tuple[dict, int]:
    spec = make_spec(family, n, m, coweight)
    if method in ("oracle", "both") and spec.family == "D" and spec.coweight == "standard":
        raise UsageError("the oracle does not cover the standard coweight of type D")
    doc = {"command": "eigen",
           "inputs": {"family": family, "n": n, "m": m, "coweight": spec.coweight, "method": method},
           "spec": spec.to_dict()}
    code = EXIT_OK
    if method == "oracle":
        doc.update(result_payload(oracle_eigen(spec)))
        return doc, code
    formula = formula_eigen(spec)
    doc.update(result_payload(formula))
    if method == "both":
        oracle = oracle_eigen(spec)
        match, diffs = compare(formula, oracle)
        doc["oracle"] = result_payload(oracle)
        doc["match"] = match
        if diffs:
            doc["mismatches"] = diffs
            code = EXIT_MISMATCH
    return doc, code


def cmd_char(shape: Sequence[int], class_type: Sequence[int]) -> tuple[dict, int]:
    try:
        shape, class_type = Partition(shape), Partition(sorted(class_type, reverse=True))
        value = character(shape, class_type)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = {"command": "char", "inputs": {"shape": list(shape), "class_type": list(class_type)},
           "results": {"value": value}}
    return doc, EXIT_OK


def cmd_syt(shape: Sequence[int], inner: Optional[Sequence[int]] = None) -> tuple[dict, int]:
    try:
        shape = Partition(shape)
        if inner:
            inner = Partition(inner)
            value = skew_syt_count(shape, inner)
        else:
            value = syt_count(shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = {"command": "syt", "inputs": {"shape": list(shape), "inner": list(inner) if inner else None},
           "results": {"count": value}}
    return doc, EXIT_OK


def verify_specs(bounds: dict) -> list[GroupSpec]:
    specs = []
    lows = {"A": 2, "B": 1, "C": 2, "D": 2}
    for family, (low, high) in sorted(bounds.items()):
        if low < lows[family] or high > ORACLE_LIMITS[family] or low > high:
            raise UsageError(f"rank range {low}..{high} for type {family} is outside "
                             f"{lows[family]}..{ORACLE_LIMITS[family]}")
        for n in range(low, high + 1):
            if family == "A":
                specs.extend(GroupSpec("A", n, m=m) for m in range(1, n))
            elif family == "D":
                specs.append(GroupSpec("D", n, coweight="spin"))
            else:
                specs.append(GroupSpec(family, n))
    return specs


def _check_one(spec: GroupSpec) -> dict:
    start = time.perf_counter()
    formula, oracle = formula_eigen(spec), oracle_eigen(spec)
    match, diffs = compare(formula, oracle)
    return {"spec": spec.key, "pass": not diffs, "seconds": round(time.perf_counter() - start, 3),
            "mismatches": diffs}


def _workers() -> int:
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        return max(1, int(cap))
    return min(os.cpu_count() or 1, 4)


def cmd_verify(bounds: dict, progress=None) -> tuple[dict, int]:
    specs = verify_specs(bounds)
    workers = min(_workers(), len(specs))
    reports = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for report in pool.map(_check_one, specs):
                reports.append(report)
                if progress:
                    progress(report)
    else:
        for spec in specs:
            report = _check_one(spec)
            reports.append(report)
            if progress:
                progress(report)
    mismatches = [d for r in reports for d in r["mismatches"]]
    doc = {"command": "verify",
           "inputs": {f: list(b) for f, b in sorted(bounds.items())},
           "results": {"specs": reports, "passed": sum(r["pass"] for r in reports),
                       "total": len(reports)}}
    if mismatches:
        doc["mismatches"] = mismatches
    return doc, EXIT_MISMATCH if mismatches else EXIT_OK


# -- rendering ---------------------------------------------------------------


def render_table(doc: dict) -> str:
    lines = [f"# {doc['command']}"]
    if doc["command"] == "eigen":
        spec = doc["spec"]
        lines.append("spec: " + ", ".join(f"{k}={v}" for k, v in spec.items()))
        for label, value in doc["eigenweights"].items():
            flag = ""
            if "match" in doc:
                flag = "  ok" if doc["match"].get(label) else "  MISMATCH"
            lines.append(f"{label:>4}  {value}{flag}")
        if "block" in doc:
            block = doc["block"]
            lines.append(f"block on ({', '.join(block['basis'])}):")
            for row in block["matrix"]:
                lines.append("  " + "  ".join(f"{x:>8}" for x in row))
            if "eigenvalues" in block:
                lines.append("eigenvalues: " + ", ".join(block["eigenvalues"]))
            else:
                lines.append("characteristic polynomial: " + ", ".join(block["char_poly"]))
    elif doc["command"] == "verify":
        for report in doc["results"]["specs"]:
            lines.append(f"{report['spec']:<14} {'pass' if report['pass'] else 'FAIL'}  {report['seconds']}s")
        lines.append(f"{doc['results']['passed']}/{doc['results']['total']} passed")
    else:
        lines.append("inputs: " + json.dumps(doc["inputs"]))
        for key, value in doc["results"].items():
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def render(doc: dict, fmt: str) -> str:
    return json.dumps(doc, indent=2) if fmt == "json" else render_table(doc)


# -- argument parsing --------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        value = json.loads(text) if text.strip().startswith("[") else [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from exc
    if not all(isinstance(x, int) for x in value):
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eigenweights", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "table"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    eigen = sub.add_parser("eigen", help="eigenweights of one group and coweight")
    eigen.add_argument("--family", choices=["A", "B", "C", "D"], required=True)
    eigen.add_argument("--n", type=int, required=True)
    eigen.add_argument("--m", type=int)
    eigen.add_argument("--coweight", choices=["spin", "standard"])
    eigen.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")

    char = sub.add_parser("char", help="symmetric group character value")
    char.add_argument("--shape", type=_int_list, required=True, help="e.g. 4,3,2,1 or [4,3,2,1]")
    char.add_argument("--class", dest="class_type", type=_int_list, required=True)

    syt = sub.add_parser("syt", help="number of standard Young tableaux")
    syt.add_argument("--shape", type=_int_list, required=True)
    syt.add_argument("--inner", type=_int_list)

    verify = sub.add_parser("verify", help="cross-check closed formulas against the oracle")
    for family in "ABCD":
        verify.add_argument(f"--max-{family.lower()}", type=_positive, default=None,
                            help=f"largest rank for type {family} (default {VERIFY_DEFAULTS[family]})")
    verify.add_argument("--family", choices=["A", "B", "C", "D"], help="restrict to one family")
    verify.add_argument("--n", type=_positive, help="with --family, check this rank only")

    for p in (eigen, char, syt, verify):
        p.add_argument("--format", choices=["json", "table"], default=argparse.SUPPRESS)
    return parser


def _verify_bounds(args) -> dict:
    lows = {"A": 2, "B": 1, "C": 2, "D": 2}
    highs = {f: getattr(args, f"max_{f.lower()}") or VERIFY_DEFAULTS[f] for f in "ABCD"}
    if args.n is not None and args.family is None:
        raise UsageError("--n needs --family")
    if args.family:
        n = args.n
        return {args.family: (n, n) if n else (lows[args.family], highs[args.family])}
    return {f: (lows[f], highs[f]) for f in "ABCD"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eigen":
            doc, code = cmd_eigen(args.family, args.n, args.m, args.coweight, args.method)
        elif args.command == "char":
            doc, code = cmd_char(args.shape, args.class_type)
        elif args.command == "syt":
            doc, code = cmd_syt(args.shape, args.inner)
        else:
            def progress(report):
                status = "pass" if report["pass"] else "FAIL"
                print(f"{report['spec']}: {status} ({report['seconds']}s)", file=sys.stderr, flush=True)

            doc, code = cmd_verify(_verify_bounds(args), progress)
    except UsageError as exc:
        parser.error(str(exc))
    print(render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
