"""Command-line front end.

Commands: analyze, lc, predict, reduce, verify, sqfree.  Inputs are complex
JSON files ({"n": 5, "facets": [[1,2,3],[3,4,5]]}), the name of a bundled
fixture complex, or the word "corpus" (verify only).  Exit codes: 0 success,
1 verification failure, 2 input error.

Output is deterministic: over Q nothing is sampled at all, and over a prime
field all sampling is driven by --seed, so identical invocations produce
byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import quotient, singularity, verification
from .artinian import determinacy_probe, reduction_hilbert
from .complexes import SimplicialComplex, SizeLimitError
from .corpus import CORPUS_BUILDERS, corpus
from .linalg import FieldSpec
from .local_cohomology import lc_coarse_dim, lc_hilbert_series, make_generic
from .quotient import QuotientLcTable
from .squarefree import SqfreeData, sqfree_hilbert, sqfree_quotient_hilbert

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


class InputError(ValueError):
    pass


def _parse_field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load_inputs(spec: str, allow_corpus: bool) -> dict[str, SimplicialComplex]:
    if spec == "corpus":
        if not allow_corpus:
            raise InputError("'corpus' is only accepted by the verify command")
        return corpus()
    if spec in CORPUS_BUILDERS:
        return {spec: CORPUS_BUILDERS[spec]()}
    try:
        with open(spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        cx = SimplicialComplex.from_json(data)
    except ValueError as exc:
        raise InputError(f"{spec}: {exc}") from None
    return {spec: cx}


def _load_single(spec: str) -> tuple[str, SimplicialComplex]:
    items = _load_inputs(spec, allow_corpus=False)
    return next(iter(items.items()))


def _emit(report: dict, fmt: str, tsv_rows=None, pretty_lines=None):
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    elif fmt == "tsv":
        for row in tsv_rows or []:
            print("\t".join(str(x) for x in row))
    else:
        for line in pretty_lines or []:
            print(line)


def _sd_json(value):
    return "-inf" if value == singularity.NEG_INFINITY else int(value)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    name, cx = _load_single(args.input)
    field = _parse_field(args.field)
    rep = singularity.report(cx, field)
    r = cx.dim
    profile = {
        str(c): singularity.cm_in_codim(cx, c, field) for c in range(0, r + 3)
    }
    report = {
        "command": "analyze",
        "complex": name,
        "field": str(field),
        "d": cx.d,
        "f_vector": list(cx.f_vector()),
        "h_vector": list(cx.h_vector()),
        "singularity_dimension": _sd_json(rep.singularity_dimension),
        "singular_faces": [sorted(F) for F in rep.singular_faces],
        "is_cm": singularity.is_cm(cx, field),
        "is_buchsbaum": singularity.is_buchsbaum(cx, field),
        "cm_in_codim": profile,
    }
    tsv = [["c", "cm_in_codim"]] + [[c, v] for c, v in profile.items()]
    pretty = [
        f"complex {name} (field {field}): d = {cx.d}",
        f"  f-vector {report['f_vector']}  h-vector {report['h_vector']}",
        f"  singularity dimension: {report['singularity_dimension']}",
        f"  singular faces: {report['singular_faces']}",
        f"  Cohen-Macaulay: {report['is_cm']}   Buchsbaum: {report['is_buchsbaum']}",
        "  CM in codimension: "
        + ", ".join(f"{c}:{'yes' if v else 'no'}" for c, v in profile.items()),
    ]
    _emit(report, args.format, tsv, pretty)
    return EXIT_OK


def cmd_lc(args) -> int:
    name, cx = _load_single(args.input)
    field = _parse_field(args.field)
    cutoff = args.cutoff
    rows = []
    for i in range(0, cx.d + 1):
        series = lc_hilbert_series(cx, i, field)
        coeffs = [lc_coarse_dim(cx, i, -j, field) for j in range(0, cutoff + 1)]
        rows.append(
            {
                "i": i,
                "series": series.to_json(),
                "pole_order": series.pole_order,
                "coefficients": coeffs,
            }
        )
    report = {"command": "lc", "complex": name, "field": str(field), "rows": rows}
    tsv = [["i", "pole_order", "numerator", "denom_power", "coefficients"]]
    for row in rows:
        tsv.append(
            [
                row["i"],
                row["pole_order"],
                ",".join(map(str, row["series"]["numerator"])),
                row["series"]["denom_power"],
                ",".join(map(str, row["coefficients"])),
            ]
        )
    pretty = [f"local cohomology of {name} over {field}:"]
    for row in rows:
        num = row["series"]["numerator"]
        e = row["series"]["denom_power"]
        pretty.append(
            f"  i={row['i']}: series {num} / (1-t)^{e}, pole order {row['pole_order']}, "
            f"dims by -degree {row['coefficients']}"
        )
    _emit(report, args.format, tsv, pretty)
    return EXIT_OK


def cmd_predict(args) -> int:
    name, cx = _load_single(args.input)
    field = _parse_field(args.field)
    m = args.m
    if not 0 <= m <= cx.d:
        raise InputError(f"--m must be between 0 and {cx.d} for this complex")
    table = QuotientLcTable.build(cx, m, field, i_max=args.cutoff)
    finite = quotient.predicts_finite_lc(cx, m, field)
    report = {
        "command": "predict",
        "complex": name,
        "field": str(field),
        "finite_local_cohomology": finite,
        "table": table.to_json(),
    }
    tsv = [["l", "i", "dim"]] + [
        [e["l"], e["i"], e["dim"]] for e in table.to_json()["entries"]
    ]
    pretty = [
        f"quotient of {name} by {m} generic forms over {field}: "
        f"finite local cohomology: {finite}",
    ]
    for e in table.to_json()["entries"]:
        pretty.append(f"  l={e['l']} i={e['i']}: {e['dim']}")
    _emit(report, args.format, tsv, pretty)
    return EXIT_OK


def cmd_reduce(args) -> int:
    name, cx = _load_single(args.input)
    field = _parse_field(args.field)
    m = args.m
    if m < 0:
        raise InputError("--m must be nonnegative")
    try:
        if args.trials:
            constant, runs = determinacy_probe(
                cx, m, args.trials, args.cutoff, field, seed=args.seed
            )
            report = {
                "command": "reduce",
                "complex": name,
                "field": str(field),
                "m": m,
                "trials": args.trials,
                "seed": args.seed,
                "determinate": constant,
                "runs": [run.to_json() for run in runs],
            }
            dims_list = [list(run.dims) for run in runs]
            tsv = [["trial"] + [f"deg{j}" for j in range(args.cutoff + 1)]]
            tsv += [[t] + dims for t, dims in enumerate(dims_list)]
            pretty = [
                f"Artinian reduction of {name}, m={m}, {args.trials} trials over {field}:",
                f"  constant Hilbert function: {constant}",
            ] + [f"  trial {t}: {dims}" for t, dims in enumerate(dims_list)]
        else:
            coeffs = make_generic(cx.n, max(m, 1), field, seed=args.seed)
            red = reduction_hilbert(cx, coeffs, m, args.cutoff, field)
            report = {
                "command": "reduce",
                "complex": name,
                "field": str(field),
                "seed": args.seed,
                "result": red.to_json(),
            }
            tsv = [["degree", "dim"]] + [[j, v] for j, v in enumerate(red.dims)]
            pretty = [
                f"Artinian reduction of {name}, m={m} over {field}:",
                f"  Hilbert function {list(red.dims)}",
            ]
    except SizeLimitError as exc:
        raise InputError(str(exc)) from None
    _emit(report, args.format, tsv, pretty)
    return EXIT_OK


def cmd_verify(args) -> int:
    inputs = _load_inputs(args.input, allow_corpus=True)
    field = _parse_field(args.field)
    checks = verification.SUITE_CHECKS if args.check is None else (args.check,)
    i_values = _parse_range(args.i) if args.i else None
    ell_values = (args.l,) if args.l is not None else None
    records = []
    for name, cx in inputs.items():
        records.extend(
            verification.run_checks(
                name, cx, field,
                checks=checks, m_max=args.m_max, m_pin=args.m,
                ell_values=ell_values, i_values=i_values,
                seed=args.seed,
            )
        )
    report = verification.ledger_json(
        records,
        command="verify",
        input=args.input,
        field=str(field),
        seed=args.seed,
        m_max=args.m_max,
        m=args.m,
    )
    tsv = [["check", "complex", "params", "values", "passed"]]
    for rec in records:
        tsv.append(
            [
                rec.check,
                rec.complex_name,
                json.dumps(rec.params, sort_keys=True),
                json.dumps(rec.values, sort_keys=True),
                rec.passed,
            ]
        )
    failed = [r for r in records if not r.passed]
    pretty = [f"verify {args.input} over {field}: {len(records)} checks, {len(failed)} failed"]
    for rec in failed:
        pretty.append(f"  FAIL {rec.check} {rec.complex_name} {rec.params}: {rec.values}")
    if not failed:
        pretty.append("  all checks passed")
    _emit(report, args.format, tsv, pretty)
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def cmd_sqfree(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            data = SqfreeData.from_json(json.load(fh))
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{args.input}: {exc}") from None
    m = args.m
    cutoff = args.cutoff
    module_dims = [sqfree_hilbert(data, i) for i in range(0, cutoff + 1)]
    quotient_dims = [
        {"i": i, "dim": sqfree_quotient_hilbert(data, m, i)} for i in range(m + 1, cutoff + 1)
    ]
    report = {
        "command": "sqfree",
        "input": args.input,
        "m": m,
        "module_hilbert": module_dims,
        "quotient_hilbert": quotient_dims,
        "caveat": "for general squarefree data the quotient formula is asserted only in large degrees",
    }
    tsv = [["i", "module_dim", "quotient_dim"]]
    for i in range(0, cutoff + 1):
        q = next((e["dim"] for e in quotient_dims if e["i"] == i), "")
        tsv.append([i, module_dims[i], q])
    pretty = [f"squarefree data on {data.n} vertices, {len(data)} nonzero degrees, m={m}:"]
    pretty.append(f"  module Hilbert function: {module_dims}")
    pretty.append(f"  quotient Hilbert function (i > {m}): {[e['dim'] for e in quotient_dims]}")
    pretty.append(f"  note: {report['caveat']}")
    _emit(report, args.format, tsv, pretty)
    return EXIT_OK


def _parse_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return (int(text),)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facering",
        description="Exact computations on face rings of simplicial complexes with singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_m=False, with_trials=False, cutoff_default=6):
        p.add_argument("input", help="complex JSON file or a bundled complex name")
        p.add_argument("--field", default="q", help="q or fp:<prime> (default q)")
        p.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
        p.add_argument("--seed", type=int, default=None, help="seed for prime-field sampling")
        p.add_argument("--cutoff", type=int, default=cutoff_default, help="degree cutoff")
        if with_m:
            p.add_argument("--m", type=int, required=True, help="number of generic linear forms")
        if with_trials:
            p.add_argument("--trials", type=int, default=0, help="determinacy probe trials")

    p = sub.add_parser("analyze", help="singular faces, CM/Buchsbaum flags, codimension profile")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lc", help="local cohomology series, pole orders, graded dimensions")
    common(p)
    p.set_defaults(func=cmd_lc)

    p = sub.add_parser("predict", help="predicted local cohomology of a generic quotient")
    common(p, with_m=True)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("reduce", help="brute-force Artinian reduction Hilbert functions")
    common(p, with_m=True, with_trials=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run consistency checks and emit a pass/fail ledger")
    common(p)
    p.add_argument("--check", default=None,
                   choices=verification.SUITE_CHECKS, help="run a single named check")
    p.add_argument("--m", type=int, default=None,
                   help="pin the kernel/reduction checks to one number of forms")
    p.add_argument("--m-max", type=int, default=1, dest="m_max",
                   help="largest number of forms exercised by the heavy checks")
    p.add_argument("--l", type=int, default=None, help="restrict to one cohomological degree")
    p.add_argument("--i", default=None, help="restrict kernel degrees, e.g. 1..4")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sqfree", help="Hilbert formulas on user-supplied squarefree data")
    common(p, with_m=True)
    p.set_defaults(func=cmd_sqfree)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
