"""Command-line front end.

Matrices come either as explicit exponent tables
`{"order": N, "size": t, "exponents": [[...]]}` or as family descriptors
`{"family": "SuperA", "theta": 3, "order": 5, "J": [2]}`.  Elements use the
expression grammar; relation files hold one expression per line (blank lines
and lines starting with # are skipped).

Exit codes: 0 verified / success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braiding import cartan_matrix, dynkin_diagram, load_matrix
from .checks import check_ids, run_manifest
from .families import FamilySpec, FamilyError, build_family
from .freealg import quantum_symmetrizer, coproduct
from .grammar import parse_element, GrammarError
from .presentations import distinguished_relations, eminent_relations
from .quotient import (GradedIdeal, PBWLetter, graded_dimensions, groebner,
                       is_primitive_in_quotient, pbw_span_check,
                       skew_central_check)
from .series import growth_degree, hilbert_distinguished, hilbert_nichols, \
    series_product_formula
from .weyl import (cartan_roots_positive, gkdim_distinguished, positive_roots,
                   weyl_orbit)

OK, CHECK_FAILED, USAGE = 0, 1, 2


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _matrix_from_args(args):
    return load_matrix(_read_json(args.matrix))


def _read_relations(path, matrix):
    rels = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rels.append(parse_element(line, matrix))
    return rels


def _emit(args, obj, text_lines=None):
    if getattr(args, "json", False) or text_lines is None:
        print(json.dumps(obj, indent=1, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_diagram(args):
    m = _matrix_from_args(args)
    d = dynkin_diagram(m)
    obj = d.to_json()
    lines = [f"vertices: " + ", ".join(repr(v) for v in d.vertex_labels())]
    for i, j, e in d.edge_exps:
        lines.append(f"edge {i + 1} -- {j + 1}: {m.zeta_power(e)!r}")
    _emit(args, obj, lines)
    return OK


def _cmd_cartan(args):
    m = _matrix_from_args(args)
    c = cartan_matrix(m)
    _emit(args, c.to_json(), [" ".join(f"{v:3d}" for v in row) for row in c.rows])
    return OK


def _cmd_roots(args):
    m = _matrix_from_args(args)
    rs = positive_roots(m, height_cap=args.cap)
    obj = rs.to_json()
    lines = [f"finite: {rs.finite} (orbit size {rs.orbit_size})"]
    lines += [f"{r.coords} order={r.order} cartan={r.is_cartan}" for r in rs]
    _emit(args, obj, lines)
    return OK if rs.finite else CHECK_FAILED


def _cmd_orbit(args):
    m = _matrix_from_args(args)
    orb = weyl_orbit(m, cap=args.cap)
    _emit(args, orb.to_json(), [f"diagrams: {len(orb)} (capped: {orb.capped})"])
    return OK if not orb.capped else CHECK_FAILED


def _cmd_cartan_roots(args):
    m = _matrix_from_args(args)
    roots = cartan_roots_positive(m)
    _emit(args, [r.to_json() for r in roots],
          [f"{r.coords} order={r.order}" for r in roots])
    return OK


def _cmd_gkdim(args):
    m = _matrix_from_args(args)
    value = gkdim_distinguished(m)
    _emit(args, {"gkdim_distinguished": value}, [str(value)])
    return OK


def _cmd_coproduct(args):
    m = _matrix_from_args(args)
    el = parse_element(args.element, m)
    delta = coproduct(el)
    _emit(args, {"coproduct": repr(delta)}, [repr(delta)])
    return OK


def _cmd_symmetrize(args):
    m = _matrix_from_args(args)
    el = parse_element(args.element, m)
    image = quantum_symmetrizer(el)
    _emit(args, {"image": repr(image), "in_nichols_ideal": image.is_zero()},
          [repr(image), f"in the defining ideal: {image.is_zero()}"])
    return OK if image.is_zero() else CHECK_FAILED


def _quotient_basis(args, m):
    rels = _read_relations(args.ideal, m)
    return groebner(GradedIdeal(m, rels), args.degree)


def _cmd_verify(args):
    m = _matrix_from_args(args)
    basis = _quotient_basis(args, m)
    el = parse_element(args.element, m)
    r = basis.reduce(el)
    _emit(args, {"vanishes": r.is_zero(), "normal_form": repr(r)},
          [f"normal form: {r!r}", f"vanishes: {r.is_zero()}"])
    return OK if r.is_zero() else CHECK_FAILED


def _cmd_primitive(args):
    m = _matrix_from_args(args)
    rels = _read_relations(args.ideal, m)
    el = parse_element(args.element, m)
    ok = is_primitive_in_quotient(el, GradedIdeal(m, rels), args.degree)
    _emit(args, {"primitive": ok}, [f"primitive modulo the ideal: {ok}"])
    return OK if ok else CHECK_FAILED


def _cmd_central(args):
    m = _matrix_from_args(args)
    basis = _quotient_basis(args, m)
    el = parse_element(args.element, m)
    report = skew_central_check(el, basis, args.degree)
    obj = {"ok": report.ok,
           "scalars": {str(i): repr(c) for i, c in report.scalars.items()},
           "failed_vertex": report.failed_vertex}
    lines = [f"skew-central: {report.ok}"]
    lines += [f"  x{i} scalar: {c!r}" for i, c in report.scalars.items()]
    if not report.ok:
        lines.append(f"  failed at vertex {report.failed_vertex}")
    _emit(args, obj, lines)
    return OK if report.ok else CHECK_FAILED


def _cmd_dims(args):
    m = _matrix_from_args(args)
    basis = _quotient_basis(args, m)
    dims = graded_dimensions(basis, args.degree)
    items = sorted(dims.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    _emit(args, [{"degree": list(k), "dim": v} for k, v in items],
          [f"{k}: {v}" for k, v in items])
    return OK


def _cmd_pbw_check(args):
    m = _matrix_from_args(args)
    basis = _quotient_basis(args, m)
    spec = _read_json(args.pbw)
    letters = [PBWLetter(parse_element(entry["letter"], m), entry.get("height"))
               for entry in spec]
    ok, mismatch = pbw_span_check(letters, basis, args.degree,
                                  return_mismatch=True)
    obj = {"ok": ok}
    lines = [f"PBW monomials match the graded dimensions: {ok}"]
    if mismatch:
        obj["mismatch"] = {"degree": list(mismatch[0]), "dims": mismatch[1],
                           "pbw": mismatch[2]}
        lines.append(f"first mismatch at {mismatch[0]}: quotient {mismatch[1]}"
                     f" vs PBW {mismatch[2]}")
    _emit(args, obj, lines)
    return OK if ok else CHECK_FAILED


def _cmd_hilbert(args):
    spec = FamilySpec.from_json(_read_json(args.family))
    matrix = build_family(spec)
    if args.kind == "nichols":
        series = hilbert_nichols(matrix, args.degree)
    elif args.kind == "distinguished":
        series = hilbert_distinguished(matrix, args.degree)
    else:
        pres = eminent_relations(spec)
        if pres.hilbert is None:
            series = hilbert_distinguished(matrix, args.degree)
        else:
            series = series_product_formula(
                matrix.theta,
                [tuple(v) for v in pres.hilbert["numerators"]],
                [(tuple(v), h) for v, h in pres.hilbert["denominators"]],
                args.degree)
    obj = series.to_json()
    obj["growth_degree"] = growth_degree(series)
    _emit(args, obj, [f"{c['degree']}: {c['dim']}" for c in obj["coefficients"]]
          + [f"growth degree: {obj['growth_degree']}"])
    return OK


def _cmd_catalog(args):
    spec = FamilySpec.from_json(_read_json(args.family))
    pres = eminent_relations(spec) if args.eminent else distinguished_relations(spec)
    obj = {
        "descriptor": spec.to_json(),
        "entry": pres.entry_id,
        "relations": pres.relation_exprs,
        "eminent_is_distinguished": pres.eminent_is_distinguished,
    }
    lines = [f"entry: {pres.entry_id}"] + [f"  {e}" for e in pres.relation_exprs]
    if pres.pbw is not None:
        obj["pbw"] = [{"letter": repr(el), "height": h} for el, h in pres.pbw]
    if pres.hilbert is not None:
        obj["hilbert"] = pres.hilbert
    _emit(args, obj, lines)
    return OK


def _cmd_replay(args):
    manifest = _read_json(args.manifest)
    if args.order_list:
        orders = tuple(int(x) for x in args.order_list.split(","))
        items = manifest.get("checks", manifest) if isinstance(manifest, dict) \
            else manifest
        for item in items:
            if isinstance(item, dict) and item.get("id", "").startswith("hilbert-"):
                item.setdefault("params", {})["orders"] = orders
    results = run_manifest(manifest)
    failed = [r for r in results if not r.ok]
    if getattr(args, "json", False):
        print(json.dumps([{"id": r.check_id, "ok": r.ok, "details": r.details,
                           "seconds": round(r.seconds, 2)} for r in results],
                         indent=1))
    else:
        for r in results:
            print("\n".join(r.lines()))
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return OK if not failed else CHECK_FAILED


def _cmd_checks(args):
    for cid in check_ids():
        print(cid)
    return OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qnichols",
        description="Exact computations for braidings of diagonal type")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        if flags.get("matrix"):
            p.add_argument("--matrix", required=True,
                           help="matrix or family descriptor JSON file")
        if flags.get("element"):
            p.add_argument("--element", required=True)
        if flags.get("ideal"):
            p.add_argument("--ideal", required=True,
                           help="relation file, one expression per line")
        if flags.get("degree"):
            p.add_argument("--degree", type=int, default=flags["degree"])
        if flags.get("cap"):
            p.add_argument("--cap", type=int, default=flags["cap"])
        p.add_argument("--json", action="store_true")
        return p

    add("diagram", _cmd_diagram, matrix=True)
    add("cartan", _cmd_cartan, matrix=True)
    add("roots", _cmd_roots, matrix=True, cap=30)
    add("orbit", _cmd_orbit, matrix=True, cap=10000)
    add("cartan-roots", _cmd_cartan_roots, matrix=True)
    add("gkdim", _cmd_gkdim, matrix=True)
    add("coproduct", _cmd_coproduct, matrix=True, element=True)
    add("symmetrize", _cmd_symmetrize, matrix=True, element=True)
    add("verify", _cmd_verify, matrix=True, ideal=True, element=True, degree=8)
    add("primitive", _cmd_primitive, matrix=True, ideal=True, element=True,
        degree=8)
    add("central", _cmd_central, matrix=True, ideal=True, element=True, degree=8)
    add("dims", _cmd_dims, matrix=True, ideal=True, degree=8)
    p = add("pbw-check", _cmd_pbw_check, matrix=True, ideal=True, degree=8)
    p.add_argument("--pbw", required=True,
                   help='JSON list [{"letter": expr, "height": int|null}, ...]')
    p = add("hilbert", _cmd_hilbert, degree=8)
    p.add_argument("--family", required=True)
    p.add_argument("--kind", choices=["nichols", "distinguished", "eminent"],
                   default="distinguished")
    p = add("catalog", _cmd_catalog)
    p.add_argument("--family", required=True)
    p.add_argument("--eminent", action="store_true")
    p = add("replay", _cmd_replay)
    p.add_argument("--manifest", required=True)
    p.add_argument("--order-list", default=None,
                   help="comma-separated orders for sampled checks")
    add("list-checks", _cmd_checks)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GrammarError, FamilyError, FileNotFoundError, json.JSONDecodeError,
            KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
