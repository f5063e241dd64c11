"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid parameters,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._config import BudgetExceededError, resolve_budget
from .codes import (
    LinearCode,
    WeightTable,
    ghw,
    griesmer_report,
    sswd_bruteforce,
    weight_distribution,
)
from .constructions import ConstructionSpec, closed_form, construct, corrupt_bundle, verify
from .reference_tables import TABLES

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _r_list(text: str | None, k: int) -> list[int]:
    if text is None:
        return []
    if text.strip().lower() == "all":
        return list(range(1, k + 1))
    rs = sorted(set(_int_list(text)))
    bad = [r for r in rs if not 1 <= r <= k]
    if bad:
        raise UsageError(f"r values {bad} outside [1, {k}]")
    return rs


def _add_spec_args(p: argparse.ArgumentParser, required: bool) -> None:
    g = p.add_argument_group("construction")
    g.add_argument("--family", type=str.upper, choices=["T33", "T35", "T42", "T51"],
                   required=required)
    g.add_argument("--q", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--u", type=_int_list, help="flag dimensions, e.g. 2,3")
    g.add_argument("--u2", type=int)
    g.add_argument("--u3", type=int)
    g.add_argument("--m", type=int)


def _add_run_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "tsv", "pretty"], default="pretty")
    p.add_argument("--budget", type=int, help="max subspaces/codewords per enumeration")
    p.add_argument("--parallel", type=int, default=1, help="worker threads")
    p.add_argument("--dense", action="store_true", help="print zero multiplicities too")


def spec_from_args(args: argparse.Namespace) -> ConstructionSpec:
    fam = args.family
    if args.q is None or args.k is None:
        raise UsageError("--q and --k are required")
    if fam in ("T33", "T35"):
        if args.u is None or args.t is None:
            raise UsageError(f"{fam} needs --t and --u")
        return ConstructionSpec(fam, args.q, args.k, t=args.t, u=args.u)
    if fam == "T42":
        if args.u2 is not None and args.u3 is not None:
            return ConstructionSpec.t42(args.q, args.k, args.u2, args.u3)
        if args.u is not None and len(args.u) in (2, 3):
            u2, u3 = args.u[-2:]
            return ConstructionSpec.t42(args.q, args.k, u2, u3)
        raise UsageError("T42 needs --u2 and --u3")
    if args.m is None:
        raise UsageError("T51 needs --m")
    return ConstructionSpec.t51(args.q, args.k, args.m)


# -- output ------------------------------------------------------------------------

def _rows(table: WeightTable, dense: bool) -> list[tuple[int, int]]:
    if dense:
        lo = 0 if table.role == "full_distribution" else 1
        return [(w, table[w]) for w in range(lo, table.n + 1)]
    return list(table.items())


def _table_json(table: WeightTable, dense: bool) -> dict:
    out = table.to_json()
    out["entries"] = [[w, str(m)] for w, m in _rows(table, dense)]
    return out


def _compact(table: WeightTable, dense: bool) -> str:
    return "{" + ",".join(f"[{w},{m}]" for w, m in _rows(table, dense)) + "}"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _header(code: LinearCode, d: int | None) -> str:
    return f"[{code.n},{code.k}{',' + str(d) if d is not None else ''}]_{code.q}"


# -- commands ----------------------------------------------------------------------

def cmd_construct(args) -> int:
    spec = spec_from_args(args)
    code = construct(spec)
    d = None
    if code.q**code.k <= resolve_budget(args.budget):
        d = weight_distribution(code, budget=args.budget).min_weight()
    doc = {"construction": spec.to_json(), **code.to_json()}
    if args.out:
        Path(args.out).write_text(_dump(doc) + "\n")
        _emit(_header(code, d))
    else:
        sys.stderr.write(_header(code, d) + "\n")
        _emit(_dump(doc))
    return EXIT_OK


def _load_code(args) -> tuple[str, LinearCode]:
    if args.input:
        path = Path(args.input)
        try:
            obj = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read code file {path}: {exc}")
        try:
            return path.stem, LinearCode.from_json(obj)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed code file {path}: {exc}")
    if args.family is None:
        raise UsageError("give --in PATH or construction flags")
    spec = spec_from_args(args)
    return spec.label(), construct(spec)


def cmd_analyze(args) -> int:
    code_id, code = _load_code(args)
    budget, par = args.budget, args.parallel
    sswd_rs = _r_list(args.sswd, code.k)
    ghw_rs = _r_list(args.ghw, code.k)
    wd = weight_distribution(code, budget=budget) if args.wd else None
    sswd = {r: sswd_bruteforce(code, r, budget=budget, parallel=par) for r in sswd_rs}
    hier = {r: ghw(code, r, budget=budget, parallel=par) for r in ghw_rs}
    grep = griesmer_report(code, budget=budget, parallel=par) if args.griesmer else None

    if args.format == "json":
        doc: dict = {"code_id": code_id, "n": code.n, "k": code.k, "q": code.q}
        if wd is not None:
            doc["weight_distribution"] = _table_json(wd, args.dense)
        if sswd:
            doc["sswd"] = [_table_json(t, args.dense) for t in sswd.values()]
        if hier:
            doc["ghw"] = {str(r): d for r, d in hier.items()}
        if grep is not None:
            doc["griesmer"] = grep.to_json()
        _emit(_dump(doc))
    elif args.format == "tsv":
        lines = ["code_id\tr\tweight\tmultiplicity"]
        if wd is not None:
            lines += [f"{code_id}\twd\t{w}\t{m}" for w, m in _rows(wd, args.dense)]
        for r, t in sswd.items():
            lines += [f"{code_id}\t{r}\t{w}\t{m}" for w, m in _rows(t, args.dense)]
        if hier:
            lines += ["", "code_id\tr\td_r"]
            lines += [f"{code_id}\t{r}\t{d}" for r, d in hier.items()]
        if grep is not None:
            lines += ["", "code_id\tr\td_r\tgriesmer_sum\tdefect"]
            lines += [
                f"{code_id}\t{r}\t{d}\t{g}\t{dl}"
                for r, (d, g, dl) in enumerate(
                    zip(grep.hierarchy, grep.griesmer_sums, grep.defects), start=1)
            ]
        _emit("\n".join(lines))
    else:
        lines = [f"{code_id}: {_header(code, None)}"]
        if wd is not None:
            lines.append(f"weight distribution: {_compact(wd, args.dense)}")
        for r, t in sswd.items():
            lines.append(f"{r}-SSWD: {_compact(t, args.dense)}")
        for r, d in hier.items():
            lines.append(f"d_{r} = {d}")
        if grep is not None:
            lines.append("defects: " + " ".join(f"{r}:{dl}" for r, dl in enumerate(grep.defects, 1)))
            lines.append(f"r-Griesmer index: {grep.r_griesmer_index}")
            lines.append(f"distance optimality: {grep.distance_optimal}")
        _emit("\n".join(lines))
    return EXIT_OK


def _print_report(report, fmt: str) -> None:
    if fmt == "json":
        _emit(_dump(report.to_json()))
        return
    if fmt == "tsv":
        lines = ["check\tr\tweight\tclosed_form\toracle"]
        for m in report.mismatches:
            lines.append("\t".join(str(m.get(key, "")) for key in
                                   ("check", "r", "weight", "closed_form", "oracle")))
        _emit("\n".join(lines))
        return
    lines = [f"{report.spec.label()}: {report.status} ({report.checks} checks, "
             f"{len(report.mismatches)} mismatches)"]
    for m in report.mismatches:
        where = ", ".join(f"{k}={m[k]}" for k in ("r", "weight") if k in m)
        lines.append(f"  MISMATCH {m['check']} {where}: closed form {m['closed_form']}, oracle {m['oracle']}")
    for e in report.budget_errors:
        lines.append(f"  BUDGET {e['what']} r={e['r']}: {e['error']}")
    lines += [f"  note: {n}" for n in report.notes]
    _emit("\n".join(lines))


def cmd_verify(args) -> int:
    spec = spec_from_args(args)
    rs = _r_list(args.r, spec.k)
    bundle = None
    if args.inject_corruption is not None:
        r = args.inject_corruption
        if r not in rs:
            raise UsageError("--inject-corruption must name one of the verified r values")
        bundle = corrupt_bundle(closed_form(spec, rs=rs, budget=args.budget), r)
    report = verify(spec, rs, budget=args.budget, parallel=args.parallel, bundle=bundle)
    _print_report(report, args.format)
    if report.mismatches:
        return EXIT_MISMATCH
    return EXIT_BUDGET if report.budget_errors else EXIT_OK


def regenerate_table(number: int, budget: int | None = None, parallel: int = 1):
    """(code_id, n, k, q, d, {r: oracle SSWD}) for both codes of a reference table."""
    out = []
    for ref in TABLES[number]:
        code = construct(ref.spec)
        d = weight_distribution(code, budget=budget).min_weight()
        sswd = {r: sswd_bruteforce(code, r, budget=budget, parallel=parallel) for r in ref.sswd}
        out.append((ref.code_id, code, d, sswd))
    return out


def cmd_table(args) -> int:
    rows = regenerate_table(args.paper_table, args.budget, args.parallel)
    if args.format == "json":
        doc = {"table": args.paper_table, "codes": [
            {"code_id": cid, "n": c.n, "k": c.k, "q": c.q, "d": d,
             "sswd": [_table_json(t, args.dense) for t in sswd.values()]}
            for cid, c, d, sswd in rows
        ]}
        _emit(_dump(doc))
    elif args.format == "tsv":
        lines = ["code_id\tr\tweight\tmultiplicity"]
        for cid, _, _, sswd in rows:
            for r, t in sswd.items():
                lines += [f"{cid}\t{r}\t{w}\t{m}" for w, m in _rows(t, args.dense)]
        _emit("\n".join(lines))
    else:
        lines = []
        for cid, c, d, sswd in rows:
            lines.append(f"{cid}: {_header(c, d)}")
            lines += [f"  {r}-SSWD: {_compact(t, args.dense)}" for r, t in sswd.items()]
        _emit("\n".join(lines))
    return EXIT_OK


def cmd_selftest(args) -> int:
    failures = 0
    for number, refs in TABLES.items():
        for ref in refs:
            report = verify(ref.spec, budget=args.budget, parallel=args.parallel)
            ok = report.ok and not report.budget_errors
            failures += not ok
            _emit(f"{'PASS' if ok else 'FAIL'} table {number} {ref.code_id} {ref.spec.label()}")
    spec = TABLES[1][0].spec
    bad = corrupt_bundle(closed_form(spec), 2)
    report = verify(spec, budget=args.budget, bundle=bad)
    caught = len(report.mismatches) == 1
    failures += not caught
    _emit(f"{'PASS' if caught else 'FAIL'} corrupted multiplicity detected "
          f"({len(report.mismatches)} mismatch)")
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghwcodes",
        description="Construct few-weight codes and check their weight data by enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a generator matrix and write Code JSON")
    _add_spec_args(p, required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="weight distribution, SSWDs, GHWs, Griesmer defects")
    p.add_argument("--in", dest="input", help="Code JSON file")
    _add_spec_args(p, required=False)
    p.add_argument("--sswd", help="r list or 'all'")
    p.add_argument("--ghw", help="r list or 'all'")
    p.add_argument("--wd", action="store_true", help="full weight distribution")
    p.add_argument("--griesmer", action="store_true", help="Griesmer defects")
    _add_run_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="compare closed forms with the enumeration oracle")
    _add_spec_args(p, required=True)
    p.add_argument("--r", default="all", help="r list or 'all'")
    p.add_argument("--inject-corruption", type=int, metavar="R",
                   help="shift one closed-form r-SSWD entry first (harness check)")
    _add_run_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="regenerate a reference SSWD table by enumeration")
    p.add_argument("--paper-table", type=int, choices=sorted(TABLES), required=True)
    _add_run_args(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selftest", help="verify all reference codes and the mismatch detector")
    p.add_argument("--budget", type=int)
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is not None and args.budget < 1:
        parser.error("--budget must be >= 1")
    if getattr(args, "parallel", 1) < 1:
        parser.error("--parallel must be >= 1")
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"ghwcodes: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"ghwcodes: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
