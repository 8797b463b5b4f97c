"""Command line interface: ``taqcalc <subcommand> ...``.

Exit status 0 on success, 2 on invalid input, 1 on an internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from importlib import resources

import jsonschema

from . import spectra, symmetric
from .algebra import parse_element
from .derivations import taq_delta
from .free_homology import CellModule, apply_Q, free_algebra_homology, reduced_free_algebra_homology
from .modp import field_from_name

DEFAULT_DEGREE_CAP = 512
CAP_ENV = "TAQCALC_MAX_DEGREE"
PRIMES = ("2", "3", "5", "7")


class InputError(Exception):
    """Invalid user input; maps to exit status 2."""


def degree_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_DEGREE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV} must be an integer, got {raw!r}")


def load_schema(name: str) -> dict:
    text = resources.files("taqcalc").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(obj, schema_name: str):
    """Raise InputError listing every violation with its JSON pointer."""
    validator = jsonschema.Draft202012Validator(load_schema(schema_name))
    errors = sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        lines = []
        for e in errors:
            pointer = "/" + "/".join(str(x) for x in e.absolute_path)
            lines.append(f"{pointer}: {e.message}")
        raise InputError("invalid input:\n  " + "\n  ".join(lines))


def check_output(doc: dict):
    """Every emitted document must match the schema named after its subcommand."""
    validator = jsonschema.Draft202012Validator(load_schema(doc["subcommand"]))
    error = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if error is not None:
        pointer = "/" + "/".join(str(x) for x in error.absolute_path)
        raise RuntimeError(f"output violates its schema at {pointer}: {error.message}")


def _field(name: str, allow_q: bool = True):
    if name == "Q" and allow_q:
        return field_from_name("Q")
    if name not in PRIMES:
        raise InputError(f"prime must be one of {', '.join(PRIMES)}" + (" or Q" if allow_q else ""))
    return field_from_name(name)


def _check_degree(d: int):
    cap = degree_cap()
    if d < 0:
        raise InputError("max degree must be non-negative")
    if d > cap:
        raise InputError(f"max degree {d} exceeds the cap {cap} (set {CAP_ENV} to raise it)")


def _read_cells(path: str) -> CellModule:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")
    validate(obj, "cellmodule")
    try:
        return CellModule.from_json(obj)
    except ValueError as exc:
        raise InputError(str(exc))


def _algebra(args):
    _check_degree(args.max_degree)
    X = _read_cells(args.input)
    if args.p is not None and str(X.field) != str(_field(args.p)):
        raise InputError(f"--p {args.p} disagrees with the input field {X.field}")
    if getattr(args, "reduced", False) or (args.cmd == "delta" and X.bottom_cell):
        return X, reduced_free_algebra_homology(X, args.max_degree)
    return X, free_algebra_homology(X, args.max_degree)


def _text(s: str, args) -> str:
    return spectra.to_unicode(s) if args.unicode else s


# -- subcommands -------------------------------------------------------------

def cmd_basis(args):
    X, A = _algebra(args)
    hilbert = A.hilbert(args.max_degree)
    doc = {
        "subcommand": "basis", "field": str(X.field), "max_degree": args.max_degree,
        "reduced": bool(args.reduced), "hilbert": hilbert,
        "generators": [{"name": g.name, "degree": g.degree} for g in A.generators],
    }
    return doc, [("degree", "dim")] + [(d, n) for d, n in enumerate(hilbert)]


def _parse_op(text: str):
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"operation must be 'r' or 'e,r', got {text!r}")
    if len(parts) == 1:
        return 0, parts[0]
    if len(parts) == 2:
        return parts[0], parts[1]
    raise InputError(f"operation must be 'r' or 'e,r', got {text!r}")


def cmd_apply_q(args):
    X, A = _algebra(args)
    op = _parse_op(args.op)
    if args.target not in A.index:
        raise InputError(f"unknown generator {args.target!r}")
    result = apply_Q(A, op, args.target)
    label = f"Q[{op[0]},{op[1]}]"
    doc = {"subcommand": "apply-q", "field": str(X.field), "operation": label,
           "target": args.target, "result": result.to_json(), "text": _text(str(result), args)}
    return doc, [("input", "value"), (f"{label} {args.target}", doc["text"])]


def cmd_delta(args):
    X, A = _algebra(args)
    try:
        a = parse_element(A, args.element)
    except KeyError as exc:
        raise InputError(f"unknown generator {exc.args[0]!r}")
    v = taq_delta(A, a)
    doc = {"subcommand": "delta", "field": str(X.field), "input": args.element,
           "result": v.to_json(), "text": str(v)}
    return doc, [("input", "value"), (args.element, str(v))]


def _indices(args, lo: int):
    if args.n is not None:
        if args.n < lo:
            raise InputError(f"--n must be at least {lo}")
        return [args.n]
    top = args.max_n
    if top is None:
        raise InputError("give --n or --max-n")
    _check_degree(top)
    return list(range(lo, top + 1))


def cmd_theta_prime(args):
    spec = args.spectrum
    rows = []
    if spec == "MU":
        F = _field(args.p or "2", allow_q=False)
        for k in _indices(args, 1):
            img = spectra.theta_prime_MU(k, F)
            rows.append({"input": f"b{k}", "image": _text(img.label, args),
                         "summand": img.shift, "expanded": _text(str(img.element), args)})
    elif spec == "MSU":
        F = _field("2")
        for k in _indices(args, 2):
            img = spectra.theta_prime_MSU(k)
            rows.append({"input": f"a'{k}", "image": _text(img.label, args),
                         "summand": 4, "expanded": _text(str(img.element), args)})
    elif spec == "MO":
        F = _field("2")
        for n in _indices(args, 1):
            if n & (n + 1) == 0:
                if args.n is not None:
                    raise InputError(f"z{n} is not a generator of pi_*(MO)")
                continue
            img = spectra.theta_MO(n)
            rows.append({"input": f"z{n}", "image": _text(img.label, args),
                         "summand": None, "expanded": _text(str(img.element), args)})
    else:
        F = _field(args.p or "2", allow_q=False)
        for gen, state in spectra.steinberger_theta_H(F).items():
            rows.append({"input": _text(gen, args), "image": state, "summand": None, "expanded": state})
    doc = {"subcommand": "theta-prime", "spectrum": spec, "field": str(F), "rows": rows}
    return doc, [("input", "value")] + [(r["input"], r["image"]) for r in rows]


def _int_list(text: str):
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma separated integers, got {text!r}")
    if any(x < 0 for x in out):
        raise InputError("degrees must be non-negative")
    return out


def cmd_sym_homology(args):
    F = _field(args.p or "3", allow_q=False)
    degrees = _int_list(args.degrees)
    if not degrees or len(degrees) > 3:
        raise InputError("give between 1 and 3 class degrees")
    _check_degree(args.r_max)
    V = symmetric.GradedVectorSpace.of_degrees(F, degrees)
    M = symmetric.TensorPowerModule(V)
    cp, _ = symmetric.homology_Cp(M, args.r_max)
    sp = symmetric.homology_Sigma_p(M, args.r_max)
    doc = {"subcommand": "sym-homology", "field": str(F), "degrees": degrees, "r_max": args.r_max,
           "Cp": cp, "Sigma_p": sp, "survivors": None}
    if len(degrees) == 1:
        doc["survivors"] = [symmetric.survivors(degrees[0], F.p, r) for r in range(args.r_max + 1)]
    return doc, [("degree", "value")] + [(r, d) for r, d in enumerate(sp)]


def cmd_double_cosets(args):
    if args.m + args.n > symmetric.MAX_COSET_SIZE or args.m < 1 or args.n < 1:
        raise InputError(f"need m, n >= 1 and m + n <= {symmetric.MAX_COSET_SIZE}")
    reps = symmetric.double_cosets(args.m, args.n)
    names = [symmetric.cycle_notation(g) for g in reps]
    doc = {"subcommand": "double-cosets", "m": args.m, "n": args.n, "representatives": names,
           "one_line": [list(g) for g in reps],
           "subgroup_identities": symmetric.subgroup_identity_check(args.m, args.n)}
    return doc, [("input", "value")] + [(" ".join(map(str, g)), c) for g, c in zip(reps, names)]


def cmd_indecomposables(args):
    F = _field(args.p or "2", allow_q=False)
    _check_degree(args.max_degree)
    if args.max_degree < 2:
        raise InputError("max degree must be at least 2")
    idx = spectra.mu_dl_indecomposables(F, args.max_degree)
    closed = [k for k in range(1, args.max_degree // 2 + 1)
              if spectra.mu_indecomposable_closed_form(k, F)]
    doc = {"subcommand": "indecomposables", "field": str(F), "max_degree": args.max_degree,
           "indices": idx, "closed_form_agrees": idx == closed}
    return doc, [("input", "value")] + [(f"b{k}", 2 * k) for k in idx]


def cmd_kriz_dims(args):
    _check_degree(args.max_degree)
    if args.max_degree < 1:
        raise InputError("max degree must be at least 1")
    dims = spectra.kriz_taq_dimensions(args.max_degree, args.convention)
    doc = {"subcommand": "kriz-dims", "convention": args.convention,
           "max_degree": args.max_degree, "dims": dims}
    return doc, [("degree", "dim")] + list(enumerate(dims))


def cmd_obstruction(args):
    if args.which == "h-mo":
        report = spectra.h_to_mo_obstruction()
    else:
        F = _field(args.p or "2", allow_q=False)
        _check_degree(args.max_degree)
        if args.max_degree < 2:
            raise InputError("max degree must be at least 2")
        report = spectra.cp_vs_ku_report(F, args.max_degree)
    doc = {"subcommand": "obstruction", "which": args.which, "report": report}
    rows = [("input", "value")] + [(k, v if isinstance(v, str) else json.dumps(v, sort_keys=True))
                                  for k, v in sorted(report.items())]
    return doc, rows


# -- plumbing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="taqcalc", description="Dyer-Lashof and TAQ Hurewicz computations")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", help="write here instead of standard output")
    common.add_argument("--unicode", action="store_true", help="Greek letters and scripts in labels")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    for name, fn, help_ in (("basis", cmd_basis, "Hilbert function of H_*(PX)"),
                            ("apply-q", cmd_apply_q, "apply a Dyer-Lashof operation to a generator"),
                            ("delta", cmd_delta, "TAQ derivation of an element")):
        p = add(name, fn, help_)
        p.add_argument("--p", help="prime (must match the input field) or Q")
        p.add_argument("--input", required=True, help="CellModule JSON file")
        p.add_argument("--max-degree", type=int, required=True)
        if name == "basis":
            p.add_argument("--reduced", action="store_true", help="drop the bottom cell")
        if name == "apply-q":
            p.add_argument("--op", required=True, help="'r' or 'e,r' for beta^e Q^r")
            p.add_argument("--target", required=True, help="generator name, e.g. Q[0,2].x1")
        if name == "delta":
            p.add_argument("--element", required=True, help="e.g. 'x1*x2 + Q[0,2].x1'")

    p = add("theta-prime", cmd_theta_prime, "TAQ Hurewicz images")
    p.add_argument("--spectrum", choices=("MU", "MSU", "MO", "H"), required=True)
    p.add_argument("--p")
    p.add_argument("--n", type=int, help="a single generator index")
    p.add_argument("--max-n", type=int, help="all generator indices up to this bound")

    p = add("sym-homology", cmd_sym_homology, "H_*(C_p) and H_*(Sigma_p) of a tensor power")
    p.add_argument("--p")
    p.add_argument("--degrees", required=True, help="comma separated class degrees")
    p.add_argument("--r-max", type=int, default=8)

    p = add("double-cosets", cmd_double_cosets, "Sigma_m x Sigma_n double cosets")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("indecomposables", cmd_indecomposables, "Dyer-Lashof indecomposables of H_*(MU)")
    p.add_argument("--p")
    p.add_argument("--max-degree", type=int, required=True)

    p = add("kriz-dims", cmd_kriz_dims, "dimensions of TAQ of HF_2")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--convention", choices=("steenrod", "dl"), default="steenrod")

    p = add("obstruction", cmd_obstruction, "obstruction reports")
    p.add_argument("--which", choices=("cp-ku", "h-mo"), required=True)
    p.add_argument("--p")
    p.add_argument("--max-degree", type=int, default=40)
    return ap


def render(doc, rows, fmt: str, unicode: bool) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(rows)
        return buf.getvalue()
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=not unicode) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, rows = args.func(args)
        check_output(doc)
        text = render(doc, rows, args.format, args.unicode)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except (InputError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
