"""Command line front end: ``threelie <verb> <input> [options]``.

``input`` is a catalog id (``dim3``, ``dim4-1`` ... ``dim4-7``), a path to
a JSON file, or inline JSON.  Output is JSON with sorted keys and scalars
in canonical text form.  Exit status: 0 success, 1 a verification found
defects, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import catalog
from .algebra import ThreeLieAlgebra, algebra_from_json, algebra_to_json, check_fundamental_identity
from .cocycle import check_local_cocycle_bialgebra, dual_algebra
from .cybe import (cybe_conditions, cybe_residual_naive, cybe_residual_skew,
                   induced_coproduct_components, induced_coproduct_wedge)
from .double import (bialgebra_verdict, build_double, check_manin_triple, delta_family,
                     double_to_json, eq26_nullspace, forced_parameters, solve_delta_families)
from .report import Report
from .scalar import Scalar, from_json, to_text
from .tensor import Coproduct, RMatrix, Tensor

VERBS = ("catalog", "check-fi", "cybe-residual", "cybe-conditions", "induce-delta",
         "check-local-cocycle", "delta-families", "check-double", "build-double", "check-manin")

_ENTRY_RE = re.compile(r"a_(\d+)_(\d+)")


class InputError(Exception):
    pass


def encode(value):
    """JSON form of anything a report or result may hold."""
    if value is None:
        return None
    if isinstance(value, Scalar):
        return to_text(value)
    if isinstance(value, (int, Fraction)):
        return to_text(Scalar.const(value))
    if isinstance(value, Tensor):
        return value.to_json(to_text)
    if isinstance(value, Coproduct):
        return value.to_json(to_text)
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    return str(value)


# -- input --------------------------------------------------------------------

def _load_json(text: str, what: str):
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: not a catalog id, file or valid JSON ({exc})") from None


def load_algebra(text: str):
    """(algebra, catalog id or None)."""
    if text in catalog.CATALOG:
        return catalog.algebra(text), text
    data = _load_json(text, "algebra")
    if not isinstance(data, dict):
        raise InputError("algebra JSON must be an object with 'dim' and 'brackets'")
    try:
        return algebra_from_json(data), None
    except (ValueError, TypeError) as exc:
        raise InputError(f"algebra: {exc}") from None


def load_r(text, n: int, skew: bool) -> RMatrix:
    """``--r`` as ``{"a_i_j": value}``; omitted means fully symbolic skew r."""
    if text is None:
        return RMatrix.symbolic_skew(n)
    data = _load_json(text, "--r")
    if not isinstance(data, dict):
        raise InputError("--r must be a JSON object like {\"a_1_2\": \"1\"}")
    entries = {}
    for key, value in data.items():
        m = _ENTRY_RE.fullmatch(key)
        if not m:
            raise InputError(f"--r: bad entry name {key!r}, expected a_i_j")
        i, j = int(m.group(1)), int(m.group(2))
        if skew and not i < j:
            raise InputError(f"--r: with --skew give only entries a_i_j with i<j (got {key})")
        try:
            entries[i, j] = from_json(value)
        except (ValueError, TypeError, KeyError) as exc:
            raise InputError(f"--r: bad value for {key}: {exc}") from None
    try:
        return RMatrix.from_upper(n, entries) if skew else RMatrix.from_entries(n, entries)
    except ValueError as exc:
        raise InputError(f"--r: {exc}") from None


def load_params(text):
    if text is None:
        return {}
    data = _load_json(text, "--params")
    if not isinstance(data, dict):
        raise InputError("--params must be a JSON object")
    try:
        return {str(k): from_json(v) for k, v in data.items()}
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"--params: {exc}") from None


def load_delta(text, A: ThreeLieAlgebra, cid, params) -> Coproduct:
    """``--delta`` JSON, or the catalog family (with ``--params`` bound)."""
    if text is None:
        if cid is None:
            raise InputError("--delta is required for algebras outside the catalog")
        fam = delta_family(cid)
        return fam.substitute(params) if params else fam.coproduct
    data = _load_json(text, "--delta")
    try:
        if isinstance(data, dict) and "wedges" in data:
            wedges = {}
            for w in data["wedges"]:
                wedges.setdefault(int(w["i"]), {})[tuple(int(x) for x in w["pqr"])] = from_json(w["coeff"])
            delta = Coproduct.from_wedges(int(data["dim"]), wedges)
        else:
            delta = Coproduct.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"--delta: {exc}") from None
    if delta.dim != A.dim:
        raise InputError(f"--delta has dim {delta.dim}, algebra has dim {A.dim}")
    if not delta.is_alternating():
        raise InputError("--delta must be fully antisymmetric in each component")
    return delta.substitute(params) if params else delta


# -- verbs --------------------------------------------------------------------

def _report(rep: Report):
    return rep.to_json(encode), (0 if rep.passed else 1)


def run(args) -> tuple:
    """Execute one parsed command; returns (result, exit status)."""
    verb = args.verb
    if verb == "catalog":
        ids = catalog.IDS if args.input is None else (args.input,)
        out = []
        for cid in ids:
            try:
                entry = catalog.get(cid)
            except KeyError as exc:
                raise InputError(str(exc.args[0])) from None
            out.append({"id": cid, "algebra": algebra_to_json(entry.algebra, to_text),
                        "parameters": list(entry.parameters), "constraints": list(entry.constraints)})
        return {"catalog": out}, 0

    if args.input is None:
        raise InputError(f"{verb} needs an input algebra")
    A, cid = load_algebra(args.input)
    params = load_params(args.params)
    if params and verb not in ("delta-families", "check-double", "build-double", "check-manin"):
        A = A.substitute(params)

    if verb == "check-fi":
        return _report(check_fundamental_identity(A))

    if verb == "cybe-conditions":
        return {"generators": [to_text(g) for g in cybe_conditions(A)]}, 0

    skew = args.skew or args.r is None
    r = load_r(args.r, A.dim, skew)
    if params:
        r = r.substitute(params)

    if verb == "cybe-residual":
        res = cybe_residual_skew(A, r) if skew else cybe_residual_naive(A, r)
        return {"residual": res.to_json(to_text), "zero": res.is_zero()}, 0

    if verb == "induce-delta":
        if not r.is_skew():
            raise InputError("induce-delta needs a skew r (use --skew)")
        d1, d2, d3 = induced_coproduct_components(A, r)
        return {"delta": induced_coproduct_wedge(A, r).to_json(to_text),
                "components": [d.to_json(to_text) for d in (d1, d2, d3)]}, 0

    if verb == "check-local-cocycle":
        d1, d2, d3 = induced_coproduct_components(A, r)
        return _report(check_local_cocycle_bialgebra(A, d1, d2, d3))

    raise AssertionError(verb)


def run_double(args) -> tuple:
    verb = args.verb
    A, cid = load_algebra(args.input)
    params = load_params(args.params)

    if verb == "delta-families":
        if cid is None:
            basis, names = eq26_nullspace(A)
            return {"nullity": len(basis),
                    "basis": [{n: to_text(v) for n, v in zip(names, vec) if not v.is_zero()} for vec in basis]}, 0
        fam = solve_delta_families(cid)
        kernel, pivots = forced_parameters(A, fam)
        return {"catalog_id": cid, "parameters": list(fam.parameters), "nullity": fam.nullity,
                "delta": fam.coproduct.to_json(to_text), "notes": fam.notes,
                "eq27_solution_dimension": len(kernel)}, 0

    delta = load_delta(args.delta, A, cid, params)
    if verb == "check-double":
        return _report(bialgebra_verdict(A, delta))
    if verb == "build-double":
        try:
            D = build_double(A, dual_algebra(delta))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return double_to_json(D, cid, params), 0
    if verb == "check-manin":
        D = build_double(A, dual_algebra(delta), require_dual_fi=False)
        return _report(check_manin_triple(D))
    raise AssertionError(verb)


def _report_text(rep: dict, indent=0, limit=5) -> str:
    pad = "  " * indent
    status = "pass" if rep["passed"] else "FAIL"
    lines = [f"{pad}{rep['name']}: {status}"]
    for d in rep["defects"][:limit]:
        lines.append(f"{pad}  at {tuple(d['tuple'])}: {json.dumps(d['defect'], ensure_ascii=False)}")
    if len(rep["defects"]) > limit:
        lines.append(f"{pad}  ... {len(rep['defects']) - limit} more")
    lines += [f"{pad}  note: {n}" for n in rep.get("notes", [])]
    for c in rep.get("checks", []):
        lines.append(_report_text(c, indent + 1, limit))
    return "\n".join(lines)


def _text(value, indent=0) -> str:
    pad = "  " * indent
    if isinstance(value, dict) and "passed" in value and "defects" in value:
        return _report_text(value, indent)
    if isinstance(value, dict):
        lines = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
        return "\n".join(lines)
    if isinstance(value, list):
        out = []
        for v in value:
            if isinstance(v, (dict, list)):
                out.append(f"{pad}-")
                out.append(_text(v, indent + 1))
            else:
                out.append(f"{pad}- {v}")
        return "\n".join(out)
    return f"{pad}{value}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="threelie", description="Exact 3-Lie algebra computations.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", nargs="?", help="catalog id, JSON file or inline JSON")
    p.add_argument("--r", help='r-matrix entries as JSON, e.g. {"a_1_2": "1"}; omit for symbolic skew r')
    p.add_argument("--skew", action="store_true", help="--r lists a_i_j for i<j only; a_j_i = -a_i_j")
    p.add_argument("--delta", help="coproduct JSON (default: the catalog family)")
    p.add_argument("--params", help='parameter values as JSON, e.g. {"k": "1"}')
    p.add_argument("--format", choices=("json", "text"), default="json")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb in ("delta-families", "check-double", "build-double", "check-manin"):
            if args.input is None:
                raise InputError(f"{args.verb} needs an input algebra")
            result, status = run_double(args)
        else:
            result, status = run(args)
    except InputError as exc:
        print(f"threelie: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(result, sort_keys=True, ensure_ascii=False, indent=2))
    else:
        print(_text(result))
    return status


if __name__ == "__main__":
    sys.exit(main())
