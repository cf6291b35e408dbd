"""Command-line interface.

Subcommands:

* ``info``       — validation, case, genus, singular points, local data
* ``basis``      — regular-differential basis of one model
* ``cartier``    — operator matrix on one model (default Ctilde)
* ``verify-hgm`` — compare the power-expansion and series routes entrywise
* ``scan``       — specialize symbolic branch points over a grid and rank

The curve argument is either a path to a JSON file or an inline JSON
object (must start with ``{``) with fields p, N, exponents, lambdas.
Exit codes: 0 success, 2 validation failure (machine-readable error JSON
on stdout), 3 identity failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from multiprocessing import Pool
from pathlib import Path

from .cartier import block_structure, cartier_manin, evaluate_and_rank, gamma_coeffs
from .curve import (
    CurveSpec,
    classify,
    curve_from_json,
    curve_to_json_obj,
    genus,
    hgm_params,
    local_data,
    singular_points,
    INFINITY,
)
from .differentials import MODELS, MODEL_CTILDE, basis
from .errors import (
    AlcurvesError,
    BasisReexpressionFailed,
    BlockViolation,
    DenominatorDivisibleByP,
    InvalidSpecialization,
    NotNormalized,
    ValidationError,
)
from .hypergeometric import gamma_via_hgm

IDENTITY_ERRORS = (BasisReexpressionFailed, BlockViolation, DenominatorDivisibleByP)


# -- report builders ----------------------------------------------------


def info_report(spec: CurveSpec) -> dict:
    case = classify(spec)
    locals_ = [local_data(spec, j) for j in range(spec.r + 1)]
    if case.case != "Case3":
        locals_.append(local_data(spec, INFINITY))
    try:
        params = hgm_params(spec)
        hgm_obj = {
            "a": str(params.a),
            "b": [str(v) for v in params.b],
            "c": str(params.c),
        }
    except NotNormalized:
        hgm_obj = None
    return {
        "curve": curve_to_json_obj(spec),
        "equation": spec.equation_str(),
        "case": case.case,
        "A_inf": case.A_inf,
        "genus": genus(spec),
        "singular_points": [str(v) for v in singular_points(spec)],
        "local_data": [
            {
                "point": str(ld.point),
                "g": ld.g,
                "N_red": ld.N_red,
                "A_red": ld.A_red,
                "m": ld.m,
                "n": ld.n,
            }
            for ld in locals_
        ],
        "series_params": hgm_obj,
    }


def info_text(report: dict) -> str:
    lines = [
        f"curve: {report['equation']}  over "
        + (f"F_{report['curve']['p']}" if report["curve"]["p"] else "Q"),
        f"case: {report['case']} (A_inf = {report['A_inf']})",
        f"genus: {report['genus']}",
        "singular points: "
        + (", ".join(report["singular_points"]) if report["singular_points"] else "(none)"),
        "local data (point: g, N_red, A_red, m, n):",
    ]
    for ld in report["local_data"]:
        lines.append(
            f"  {ld['point']}: g={ld['g']} N_red={ld['N_red']} "
            f"A_red={ld['A_red']} m={ld['m']} n={ld['n']}"
        )
    if report["series_params"] is not None:
        sp = report["series_params"]
        lines.append(
            f"series parameters: a={sp['a']}, b=({', '.join(sp['b'])}), c={sp['c']}"
        )
    return "\n".join(lines)


def basis_report(spec: CurveSpec, model: str) -> dict:
    rep = basis(spec, model)
    per_s = []
    for block in rep.blocks:
        item = {
            "s": block.s,
            "dim": block.dim,
            "forms": [
                {"s": form.s, "numerator": form.numerator.to_json()}
                for form in block.forms
            ],
        }
        if block.factor_exponents is not None:
            item["factor_exponents"] = list(block.factor_exponents)
            item["x_degree_count"] = block.x_degree_count
        per_s.append(item)
    return {
        "model": model,
        "curve": curve_to_json_obj(spec),
        "variables": list(spec.symbolic_vars),
        "per_s": per_s,
        "total": rep.total,
    }


def basis_text(spec: CurveSpec, model: str) -> str:
    rep = basis(spec, model)
    lines = [f"model {model}: {rep.total} regular differential(s)"]
    for block in rep.blocks:
        lines.append(f"s={block.s} (dim {block.dim}):")
        for idx, form in enumerate(block.forms, start=1):
            lines.append(f"  ({block.s},{idx})  {form}")
    return "\n".join(lines)


def cartier_report(spec: CurveSpec, model: str) -> dict:
    mat = cartier_manin(spec, model)
    cmap = block_structure(mat)
    return {
        "model": model,
        "curve": curve_to_json_obj(spec),
        "variables": list(spec.symbolic_vars),
        "basis": [list(lab) for lab in mat.basis_labels],
        "matrix": [
            [entry.to_terms_json() for entry in row] for row in mat.entries
        ],
        "character_map": {str(s): m for s, m in cmap.items()},
        "convention_note": mat.convention_note,
    }


def cartier_text(spec: CurveSpec, model: str) -> str:
    mat = cartier_manin(spec, model)
    cmap = block_structure(mat)
    lines = [
        f"model {model}: {mat.size} x {mat.size} matrix over "
        f"F_{spec.p}[{', '.join(spec.symbolic_vars)}]"
        if spec.symbolic_vars
        else f"model {model}: {mat.size} x {mat.size} matrix over F_{spec.p}",
        f"basis: {', '.join(str(lab) for lab in mat.basis_labels)}",
        "character map: "
        + ", ".join(f"{s} -> {m}" for s, m in cmap.items()),
        f"note: {mat.convention_note}",
        "entries (row by row):",
    ]
    for i, row in enumerate(mat.entries):
        rendered = "; ".join(str(e) for e in row)
        lines.append(f"  row {mat.basis_labels[i]}: {rendered}")
    return "\n".join(lines)


def verify_hgm_report(
    spec: CurveSpec,
    s_filter: list[int] | None,
    l_bounds: tuple[int, int] | None,
    j_bounds: tuple[int, int] | None,
) -> dict:
    p = spec.p
    deg_f = spec.exponent_sum
    characters = s_filter if s_filter else list(range(1, spec.N))
    results = []
    for s in characters:
        data = gamma_coeffs(spec, s)
        for j in range(1, p + 1):
            if j_bounds and not (j_bounds[0] <= j <= j_bounds[1]):
                continue
            l_max = (data.n_prime * deg_f + j) // p - 1
            for l in range(0, l_max + 1):
                if l_bounds and not (l_bounds[0] <= l <= l_bounds[1]):
                    continue
                poly_route = data.gamma((l + 1) * p - j)
                series_route = gamma_via_hgm(spec, s, l, j)
                results.append(
                    {
                        "s": s,
                        "l": l,
                        "j": j,
                        "match": poly_route == series_route,
                    }
                )
    failures = sum(1 for item in results if not item["match"])
    return {
        "curve": curve_to_json_obj(spec),
        "results": results,
        "checked": len(results),
        "failures": failures,
    }


def verify_hgm_text(report: dict) -> str:
    lines = []
    for item in report["results"]:
        tag = "PASS" if item["match"] else "FAIL"
        lines.append(f"{tag} s={item['s']} l={item['l']} j={item['j']}")
    if report["failures"]:
        lines.append(
            f"{report['failures']} of {report['checked']} indices FAILED"
        )
    else:
        lines.append(f"all {report['checked']} indices PASS")
    return "\n".join(lines)


_SCAN_STATE: dict = {}


def _scan_init(matrix, names):
    _SCAN_STATE["matrix"] = matrix
    _SCAN_STATE["names"] = names


def _scan_eval(combo):
    try:
        rank, zero = evaluate_and_rank(
            _SCAN_STATE["matrix"], dict(zip(_SCAN_STATE["names"], combo))
        )
        return combo, rank, zero, True
    except InvalidSpecialization:
        return combo, -1, False, False


def scan_report(
    spec: CurveSpec,
    model: str,
    var_ranges: dict[str, list[int]],
    jobs: int = 1,
) -> dict:
    matrix = cartier_manin(spec, model)
    names = spec.symbolic_vars
    for name in var_ranges:
        if name not in names:
            raise ValidationError(
                f"--var names unknown variable {name!r}; curve has {list(names)}"
            )
    p = spec.p
    ranges = [var_ranges.get(name, list(range(p))) for name in names]
    combos = list(itertools.product(*ranges))
    if jobs > 1 and len(combos) > 1:
        _scan_init(matrix, names)
        with Pool(jobs, initializer=_scan_init, initargs=(matrix, names)) as pool:
            raw = pool.map(_scan_eval, combos)
    else:
        _scan_init(matrix, names)
        raw = [_scan_eval(combo) for combo in combos]
    points = []
    for combo, rank, zero, valid in raw:
        if not valid:
            continue
        points.append(
            {
                "assignment": {name: value for name, value in zip(names, combo)},
                "rank": rank,
                "zero_matrix": zero,
            }
        )
    return {
        "model": model,
        "curve": curve_to_json_obj(spec),
        "grid_order": list(names),
        "points": points,
        "zero_rank_locus": [pt["assignment"] for pt in points if pt["zero_matrix"]],
    }


def scan_text(report: dict) -> str:
    lines = [f"model {report['model']}: {len(report['points'])} valid grid point(s)"]
    for pt in report["points"]:
        assign = ", ".join(f"{k}={v}" for k, v in pt["assignment"].items())
        suffix = " (zero matrix)" if pt["zero_matrix"] else ""
        lines.append(f"  {assign or '(no variables)'}: rank {pt['rank']}{suffix}")
    locus = report["zero_rank_locus"]
    if locus:
        rendered = "; ".join(
            ", ".join(f"{k}={v}" for k, v in item.items()) for item in locus
        )
        lines.append(f"zero-rank locus: {rendered}")
    else:
        lines.append("zero-rank locus: (empty)")
    return "\n".join(lines)


# -- argument handling ---------------------------------------------------


def _load_curve(arg: str) -> CurveSpec:
    text = arg
    if not arg.lstrip().startswith("{"):
        path = Path(arg)
        if not path.exists():
            raise ValidationError(f"curve file not found: {arg}")
        text = path.read_text()
    return curve_from_json(text)


def _parse_int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip() != ""]


def _parse_range_clauses(text: str) -> dict[str, tuple[int, int]]:
    out = {}
    for clause in text.split(";"):
        clause = clause.strip()
        if not clause:
            continue
        name, _, span = clause.partition("=")
        name = name.strip()
        if name not in ("l", "j") or not span:
            raise ValidationError(
                f"bad --range clause {clause!r}; expected l=LO..HI or j=LO..HI"
            )
        lo, sep, hi = span.partition("..")
        out[name] = (int(lo), int(hi) if sep else int(lo))
    return out


def _parse_var_spec(text: str) -> tuple[str, list[int]]:
    name, sep, values = text.partition("=")
    if not sep or not name.strip():
        raise ValidationError(f"bad --var spec {text!r}; expected name=LO..HI or name=V1,V2")
    name = name.strip()
    values = values.strip()
    if ".." in values:
        lo, _, hi = values.partition("..")
        return name, list(range(int(lo), int(hi) + 1))
    return name, [int(v) for v in values.split(",")]


def _emit(args, report: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcurves",
        description=(
            "Exact bases of regular differentials and Cartier operator "
            "matrices for curves y^N = prod (x - lambda_i)^(A_i)"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p_: argparse.ArgumentParser) -> None:
        p_.add_argument("curve", help="path to curve JSON, or inline JSON")
        p_.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p_info = sub.add_parser("info", help="invariants of the curve")
    add_common(p_info)
    p_info.set_defaults(func=cmd_info)

    p_basis = sub.add_parser("basis", help="regular differential basis")
    add_common(p_basis)
    p_basis.add_argument("--model", choices=MODELS, default=MODEL_CTILDE)
    p_basis.set_defaults(func=cmd_basis)

    p_cart = sub.add_parser("cartier", help="Cartier operator matrix")
    add_common(p_cart)
    p_cart.add_argument("--model", choices=MODELS, default=MODEL_CTILDE)
    p_cart.set_defaults(func=cmd_cartier)

    p_verify = sub.add_parser(
        "verify-hgm",
        help="check the power-expansion route against the series route",
    )
    add_common(p_verify)
    p_verify.add_argument(
        "--s", dest="s_filter", default=None, help="comma-separated characters to check"
    )
    p_verify.add_argument(
        "--range",
        dest="ranges",
        default=None,
        help="clauses l=LO..HI and/or j=LO..HI separated by ';'",
    )
    p_verify.set_defaults(func=cmd_verify_hgm)

    p_scan = sub.add_parser("scan", help="rank over a grid of specializations")
    add_common(p_scan)
    p_scan.add_argument("--model", choices=MODELS, default=MODEL_CTILDE)
    p_scan.add_argument(
        "--var",
        dest="vars",
        action="append",
        default=[],
        help="grid values, e.g. z=2..4 or z=2,5 (default: all residues)",
    )
    p_scan.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_scan.set_defaults(func=cmd_scan)
    return parser


# -- subcommand bodies ----------------------------------------------------


def cmd_info(args) -> int:
    spec = _load_curve(args.curve)
    report = info_report(spec)
    _emit(args, report, info_text(report))
    return 0


def cmd_basis(args) -> int:
    spec = _load_curve(args.curve)
    _emit(args, basis_report(spec, args.model), basis_text(spec, args.model))
    return 0


def cmd_cartier(args) -> int:
    spec = _load_curve(args.curve)
    _emit(args, cartier_report(spec, args.model), cartier_text(spec, args.model))
    return 0


def cmd_verify_hgm(args) -> int:
    spec = _load_curve(args.curve)
    s_filter = _parse_int_list(args.s_filter) if args.s_filter else None
    bounds = _parse_range_clauses(args.ranges) if args.ranges else {}
    report = verify_hgm_report(spec, s_filter, bounds.get("l"), bounds.get("j"))
    _emit(args, report, verify_hgm_text(report))
    return 3 if report["failures"] else 0


def cmd_scan(args) -> int:
    spec = _load_curve(args.curve)
    var_ranges = dict(_parse_var_spec(v) for v in args.vars)
    report = scan_report(spec, args.model, var_ranges, jobs=args.jobs)
    _emit(args, report, scan_text(report))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IDENTITY_ERRORS as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 3
    except AlcurvesError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
