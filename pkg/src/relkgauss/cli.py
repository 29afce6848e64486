"""Command-line interface: every computation as a subcommand with JSON on stdout.

Exit status is 0 on success, 1 when a verification reports failure and 2 on
bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from . import classgroups, gaussjacobi as gj, relk, weakram
from .cyclonum import CycNum
from .groups import GroupError, build_group, irr_table

WORKERS_ENV = "RELKGAUSS_WORKERS"

_FIELD_SCHEMA = {
    "type": "object",
    "properties": {
        "conductor": {"type": "integer", "minimum": 1},
        "degree": {"type": "integer", "minimum": 1},
        "H": {"type": "array", "items": {"type": "integer"}},
        "name": {"type": "string"},
    },
    "required": ["conductor"],
    "additionalProperties": False,
}

_CYC = {"oneOf": [
    {"type": "integer"},
    {"type": "string"},
    {"type": "object", "required": ["order", "coeffs"],
     "properties": {"order": {"type": "integer"}, "coeffs": {"type": "array"}}},
]}

SCENARIO_SCHEMAS = {
    "label_product": {"required": ["field"], "properties": {"field": _FIELD_SCHEMA, "t": _CYC}},
    "tame_theorem": {"required": ["field", "k"],
                     "properties": {"field": _FIELD_SCHEMA, "k": {"type": "integer", "minimum": 1}}},
    "prepare_proof": {"required": ["field", "a"],
                      "properties": {"field": _FIELD_SCHEMA, "a": {"type": "integer"},
                                     "ideal": {"type": "object",
                                               "additionalProperties": {"type": "integer"}}}},
    "eq112": {"required": ["group", "subgroup_generators"],
              "properties": {"group": {"type": "string"},
                             "subgroup_generators": {"type": "array", "items": {"type": "integer"}},
                             "t": _CYC}},
    "a_equals_c": {"required": ["field"], "properties": {"field": _FIELD_SCHEMA}},
    "cwr_vanish": {"required": ["field"], "properties": {"field": _FIELD_SCHEMA}},
    "key_diagram": {"properties": {"group": {"type": "string"}, "seed": {"type": "integer"},
                                   "samples": {"type": "integer", "minimum": 0}}},
}


class InputError(ValueError):
    pass


# -- JSON helpers -------------------------------------------------------------------

_NUMERIC = False


def cyc(v: CycNum) -> dict:
    out = v.to_json()
    if _NUMERIC:
        z = v.complex_value()
        out["numeric"] = [z.real, z.imag]
    return out


def package(x: gj.EquivariantValue) -> dict:
    return {"group": x.table.group.name,
            "entries": [{"char_index": i, "value": cyc(v)} for i, v in enumerate(x.values)]}


def rep_json(r: relk.RelKRep) -> dict:
    first = {"support": r.first.support,
             "local": {str(l): package(v) for l, v in r.first.local.items()}}
    if r.first.diagonal is not None:
        first["diagonal"] = package(r.first.diagonal)
    return {"first": first, "second": package(r.second)}


def _default(o):
    if isinstance(o, CycNum):
        return cyc(o)
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, relk.RelKRep):
        return rep_json(o)
    if isinstance(o, gj.EquivariantValue):
        return package(o)
    if isinstance(o, (set, frozenset, tuple)):
        return sorted(o) if isinstance(o, (set, frozenset)) else list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n")


# -- argument helpers ---------------------------------------------------------------

def _int_list(s: str) -> list:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def _add_field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--conductor", type=int, required=True, help="conductor m of the ambient Q(zeta_m)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--degree", type=int, help="take the cyclic subfield of this degree")
    g.add_argument("--H", type=_int_list, help="fix the subgroup of (Z/m)^x generated by these residues")


def _field(args) -> gj.AbelianField:
    data = {"conductor": args.conductor}
    if args.degree is not None:
        data["degree"] = args.degree
    if args.H is not None:
        data["H"] = args.H
    return relk.field_from_json(data)


def _character(modulus: int, exps) -> gj.DirichletChar:
    ug = gj.unit_group(modulus)
    if len(exps) != len(ug.gens):
        raise InputError(f"modulus {modulus} needs {len(ug.gens)} exponents "
                         f"(generators {list(ug.gens)} of orders {list(ug.orders)})")
    return gj.DirichletChar(modulus, exps)


def _char_json(chi: gj.DirichletChar) -> dict:
    return {"modulus": chi.modulus, "exponents": list(chi.exps), "conductor": chi.conductor}


# -- subcommands --------------------------------------------------------------------

def cmd_chartable(args) -> int:
    T = irr_table(build_group(args.group))
    out = T.to_json()
    if _NUMERIC:
        out["characters"] = [[cyc(v) for v in chi] for chi in T.chars]
    emit(out)
    return 0


def cmd_gauss(args) -> int:
    if args.exps is not None:
        chis = [_character(args.modulus, args.exps)]
    else:
        chis = gj.primitive_characters(args.modulus)
    rows, ok = [], True
    for chi in chis:
        tau = gj.gauss_sum(chi)
        row = {"character": _char_json(chi), "tau": cyc(tau)}
        if chi.is_primitive():
            f = chi.conductor
            mod_sq = abs(tau.complex_value()) ** 2
            exact = tau * gj.gauss_sum(chi.conj()) == chi.parity() * f
            row["checks"] = {"abs_squared": mod_sq, "abs_squared_ok": abs(mod_sq - f) <= 1e-9 * f,
                             "tau_tau_bar_ok": exact}
            ok = ok and row["checks"]["abs_squared_ok"] and exact
        rows.append(row)
    emit({"modulus": args.modulus, "sums": rows})
    return 0 if ok else 1


def cmd_jacobi(args) -> int:
    a = _character(args.modulus, args.exps1)
    b = _character(args.modulus, args.exps2)
    J = gj.jacobi_sum(a, b)
    out = {"chi1": _char_json(a), "chi2": _char_json(b), "jacobi": cyc(J)}
    if a.is_primitive() and b.is_primitive() and (a * b).is_primitive():
        rel = gj.gauss_sum(a) * gj.gauss_sum(b) == J * gj.gauss_sum(a * b)
        out["gauss_jacobi_relation"] = rel
        emit(out)
        return 0 if rel else 1
    emit(out)
    return 0


def cmd_galois_jacobi(args) -> int:
    F = _field(args)
    J, ok = gj.galois_jacobi(gj.tau_package(F), args.k)
    emit({"field": F.name, "k": args.k, "jacobi_package": package(J), "equivariant": ok})
    return 0 if ok else 1


def cmd_ychar(args) -> int:
    F = _field(args)
    if args.prime is None:
        y = gj.y_package(F)
        emit({"field": F.name, "primes": F.ramified_primes(), "y": package(y)})
        return 0
    d = F.ramification_datum(args.prime)
    vals = [gj.y_char(d, F.table, i) for i in range(len(F.table))]
    emit({"field": F.name, "prime": args.prime, "y": [cyc(v) for v in vals]})
    return 0


def cmd_cchar(args) -> int:
    F = _field(args)
    data = relk.local_data(F)
    terms = []
    for ld in data:
        terms.append({"prime": ld.prime, "decomposition_order": ld.decomposition.group.size,
                      "inertia_order": len(ld.datum.inertia),
                      "nrd": package(relk.twisted_unramified_nrd(ld.datum))})
    c = relk.c_global(F.table, data)
    emit({"field": F.name, "terms": terms, "c": rep_json(c), "c_is_zero": relk.rep_is_trivial(c)})
    return 0


def _parse_cyc(s: str) -> CycNum:
    try:
        return relk._cyc_from_json(json.loads(s))
    except (json.JSONDecodeError, KeyError, ValueError) as e:
        raise InputError(f"cannot parse cyclotomic number {s!r}: {e}") from None


def cmd_resolvent(args) -> int:
    F = _field(args)
    if args.b is None:
        # the trace of zeta_m down to L
        b = sum((CycNum.from_exponents(F.m, {h: 1}) for h in sorted(F.H)), CycNum.rational(0, F.m))
    else:
        b = _parse_cyc(args.b)
    vals = [gj.resolvent(b, F, i) for i in range(len(F.table))]
    emit({"field": F.name, "b": cyc(b), "resolvents": [cyc(v) for v in vals]})
    return 0


def cmd_assemble_a(args) -> int:
    F = _field(args)
    lat = relk.inverse_different_root(F)
    spec = relk.AmbientLatticeSpec.from_lattice(lat)
    a = relk.assemble_a(F, spec)
    c = relk.assemble_c(F)
    holds = relk.rep_is_trivial(a - c)
    emit({"field": F.name, "generator": cyc(spec.b), "local_primes": sorted(spec.local),
          "a": rep_json(a), "a_equals_c": holds})
    return 0 if holds else 1


def cmd_betti(args) -> int:
    G = build_group(args.group)
    rows = classgroups.betti_report(G, args.d)
    ok = all(r["rel_err"] <= args.tol for r in rows)
    emit({"group": G.name, "d": args.d, "characters": rows, "ok": ok})
    return 0 if ok else 1


def cmd_diagram(args) -> int:
    T = irr_table(build_group(args.group))
    ok = classgroups.key_diagram_check(T, args.samples, args.seed)
    emit({"group": T.group.name, "samples": args.samples, "seed": args.seed, "commutes": ok})
    return 0 if ok else 1


def _resolve_scenario(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    packaged = resources.files("relkgauss") / "scenarios" / p.name
    if packaged.is_file():
        return Path(str(packaged))
    raise InputError(f"scenario file not found: {path}")


def validate_scenario(identity: str, data) -> None:
    if identity not in SCENARIO_SCHEMAS:
        raise InputError(f"unknown identity {identity!r}; known: {sorted(SCENARIO_SCHEMAS)}")
    schema = dict(SCENARIO_SCHEMAS[identity], type="object")
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as e:
        raise InputError(f"invalid scenario for {identity}: {e.message}") from None


def _run_identity(item):
    identity, data = item
    holds, witness = relk.verify_identity(identity, data)
    out = {"identity": identity, "holds": holds}
    if not holds:
        out["witness"] = json.loads(json.dumps(witness, default=_default))
    return out


def cmd_verify(args) -> int:
    try:
        data = json.loads(_resolve_scenario(args.scenario).read_text())
    except json.JSONDecodeError as e:
        raise InputError(f"scenario is not valid JSON: {e}") from None
    items = data if isinstance(data, list) else [data]
    for d in items:
        validate_scenario(args.identity, d)
    workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    jobs = [(args.identity, d) for d in items]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_identity, jobs))
    else:
        results = [_run_identity(j) for j in jobs]
    emit(results[0] if not isinstance(data, list) else results)
    return 0 if all(r["holds"] for r in results) else 1


def cmd_enumerate_local(args) -> int:
    if args.family == "p3":
        classes = weakram.enumerate_p3(args.p)
        emit({"family": "p3", "p": args.p, "count": len(classes),
              "classes": [c.to_json() for c in classes]})
    else:
        if args.l is None:
            raise InputError("--l is required for the l2p family")
        classes = weakram.enumerate_l2p(args.l, args.p)
        emit({"family": "l2p", "l": args.l, "p": args.p, "count": len(classes),
              "quotient_module_check": weakram.quotient_module_check(args.l, args.p),
              "classes": [c.to_json() for c in classes]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relkgauss", description=__doc__.splitlines()[0])
    parser.add_argument("--numeric", action="store_true", help="add double-precision renderings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="character table of a finite group")
    p.add_argument("--group", required=True, help="e.g. cyclic:5, abelian:3,3, heisenberg:3")
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("gauss", help="Gauss sums of Dirichlet characters")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--exps", type=_int_list, help="exponents on the unit-group generators; "
                                                  "omit for all primitive characters")
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("jacobi", help="Jacobi sum of two Dirichlet characters")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--exps1", type=_int_list, required=True)
    p.add_argument("--exps2", type=_int_list, required=True)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("galois-jacobi", help="Galois-Jacobi package and its rationality")
    _add_field_args(p)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_galois_jacobi)

    p = sub.add_parser("ychar", help="unramified characteristic")
    _add_field_args(p)
    p.add_argument("--prime", type=int)
    p.set_defaults(func=cmd_ychar)

    p = sub.add_parser("cchar", help="twisted unramified characteristic")
    _add_field_args(p)
    p.set_defaults(func=cmd_cchar)

    p = sub.add_parser("resolvent", help="resolvents of an element of an abelian field")
    _add_field_args(p)
    p.add_argument("--b", help='JSON: {"order": m, "coeffs": [...]} or a rational')
    p.set_defaults(func=cmd_resolvent)

    p = sub.add_parser("assemble-a", help="the square-root-of-inverse-different element")
    _add_field_args(p)
    p.set_defaults(func=cmd_assemble_a)

    p = sub.add_parser("betti", help="metric class of the Betti lattice")
    p.add_argument("--group", required=True)
    p.add_argument("--d", type=int, default=1, help="degree of the base field")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("diagram", help="commutativity of the projection diagram")
    p.add_argument("--group", default="cyclic:3")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("verify", help="check a registered identity on a scenario file")
    p.add_argument("--identity", required=True, choices=sorted(relk.IDENTITIES))
    p.add_argument("--scenario", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate-local", help="enumerate weakly ramified local extensions")
    p.add_argument("--family", required=True, choices=["p3", "l2p"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_enumerate_local)
    return parser


def main(argv=None) -> int:
    global _NUMERIC
    parser = build_parser()
    args = parser.parse_args(argv)
    _NUMERIC = args.numeric
    try:
        return args.func(args)
    except (InputError, GroupError, ValueError, KeyError, OSError) as e:
        sys.stderr.write(json.dumps({"error": str(e)}, sort_keys=True) + "\n")
        return 2
    finally:
        _NUMERIC = False


if __name__ == "__main__":
    sys.exit(main())
