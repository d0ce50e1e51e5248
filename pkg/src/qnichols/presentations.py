"""Relation catalogs: presentations of the distinguished pre-Nichols algebras
for every cataloged family, the two exceptional eminent algebras, and the
auxiliary identities used to exercise the quotient engine.

The catalog ships as a versioned JSON data file.  Relations are grammar
strings with index placeholders; case splits carry first-class guard
expressions over (theta, N, J) and the diagram labels, evaluated when a
descriptor is instantiated.  Coefficients that depend on individual matrix
entries (not just on the diagram) are written with `q(i,j)` and evaluate in
the fixed gauge of the family constructors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .braiding import BraidingMatrix, dynkin_diagram
from .families import FamilySpec, FamilyError, build_family
from .freealg import FreeElement
from .grammar import parse_element

__all__ = [
    "Presentation",
    "ConsequenceCheck",
    "distinguished_relations",
    "eminent_relations",
    "consequence_checks",
    "catalog_entries",
    "catalog_version",
]


@dataclass
class Presentation:
    spec: FamilySpec
    matrix: BraidingMatrix
    entry_id: str
    relations: list
    relation_exprs: list
    pbw: list | None = None            # [(FreeElement, height|None)] in order
    hilbert: dict | None = None        # {"numerators": [...], "denominators": [...]}
    central: list | None = None
    extension_sub: dict | None = None
    nichols_minimal: list | None = None
    root_vectors: list | None = None
    eminent_is_distinguished: bool = False


@dataclass
class ConsequenceCheck:
    expr: str
    element: FreeElement
    modulo: list
    expect: str = "vanishes"


def _load_catalog() -> dict:
    data = resources.files("qnichols.data").joinpath("catalog.json").read_text()
    return json.loads(data)


_CATALOG = None


def _catalog() -> dict:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _load_catalog()
    return _CATALOG


def catalog_version() -> int:
    return _catalog()["version"]


def catalog_entries() -> list:
    return list(_catalog()["entries"])


def _context(spec: FamilySpec, matrix: BraidingMatrix) -> dict:
    diag = dynkin_diagram(matrix)
    order = matrix.order
    half = order // 2 if order % 2 == 0 else None

    def minus_one(i: int) -> bool:
        return half is not None and diag.vertex_exps[i - 1] == half

    def connected(i: int, j: int) -> bool:
        return matrix.twiddle_exp(i - 1, j - 1) != 0

    def disconnected(i: int, j: int) -> bool:
        return not connected(i, j)

    def edge_minus_one(i: int, j: int) -> bool:
        return half is not None and matrix.twiddle_exp(i - 1, j - 1) == half

    def cartan_vertex(i: int) -> bool:
        from .braiding import is_cartan_vertex
        return is_cartan_vertex(matrix, i - 1)

    return {
        "theta": spec.theta,
        "N": spec.order,
        "J": set(spec.J),
        "variant": spec.variant,
        "minus_one": minus_one,
        "connected": connected,
        "disconnected": disconnected,
        "edge_minus_one": edge_minus_one,
        "cartan_vertex": cartan_vertex,
        "range": range,
    }


def _eval(expr: str, ctx: dict):
    # catalog guards are trusted package data, not user input
    return eval(expr, {"__builtins__": {}}, ctx)


def _format_vars(spec: FamilySpec, matrix: BraidingMatrix) -> dict:
    # exponent of the family parameter q inside the ambient cyclotomic order
    # (the ambient is always a multiple of the parameter order)
    assert spec.order and matrix.order % spec.order == 0
    return {"theta": spec.theta, "p": matrix.order // spec.order}


def _instantiate_relations(entry: dict, spec: FamilySpec,
                           matrix: BraidingMatrix) -> list[str]:
    ctx = _context(spec, matrix)
    base_fmt = _format_vars(spec, matrix)
    out: list[str] = []
    seen = set()

    def emit(template: str, local: dict):
        fmt = dict(base_fmt)
        fmt.update(local)
        expr = template.format(**fmt)
        if expr not in seen:
            seen.add(expr)
            out.append(expr)

    for item in entry["relations"]:
        template = item["expr"]
        varspecs = item.get("vars", [])
        when = item.get("when")

        def walk(idx: int, local: dict):
            if idx == len(varspecs):
                if when is None or _eval(when, {**ctx, **local}):
                    emit(template, local)
                return
            name, rng = varspecs[idx]
            for value in _eval(rng, {**ctx, **local}):
                walk(idx + 1, {**local, name: value})

        walk(0, {})
    return out


def _matching_entry(spec: FamilySpec, matrix: BraidingMatrix) -> dict:
    ctx = _context(spec, matrix)
    hits = []
    for entry in _catalog()["entries"]:
        if entry["family"] != spec.family:
            continue
        if entry.get("variant") is not None and entry["variant"] != spec.variant:
            continue
        if _eval(entry["applies"], ctx):
            hits.append(entry)
    if not hits:
        raise FamilyError(f"descriptor outside the catalog: {spec}")
    if len(hits) > 1:
        ids = [e["id"] for e in hits]
        raise FamilyError(f"catalog case split is ambiguous for {spec}: {ids}")
    return hits[0]


def distinguished_relations(spec) -> Presentation:
    """The defining relations of the distinguished pre-Nichols algebra for a
    catalog descriptor, selected by its case split."""
    if isinstance(spec, dict):
        spec = FamilySpec.from_json(spec)
    matrix = build_family(spec)
    entry = _matching_entry(spec, matrix)
    exprs = _instantiate_relations(entry, spec, matrix)
    rels = [parse_element(e, matrix) for e in exprs]
    pres = Presentation(spec, matrix, entry["id"], rels, exprs)
    fmt = _format_vars(spec, matrix)
    if "nichols_minimal" in entry:
        pres.nichols_minimal = [parse_element(e.format(**fmt), matrix)
                                for e in entry["nichols_minimal"]]
    if "root_vectors" in entry:
        pres.root_vectors = [parse_element(e.format(**fmt), matrix)
                             for e in entry["root_vectors"]]
    return pres


def eminent_relations(spec) -> Presentation:
    """Presentation of the eminent pre-Nichols algebra.

    Only the two rank-3 type A descriptors have an eminent algebra different
    from the distinguished one; anything else redirects to the distinguished
    presentation (flagged on the result)."""
    if isinstance(spec, dict):
        spec = FamilySpec.from_json(spec)
    for entry in _catalog()["eminent"]:
        if (spec.family == entry["family"] and spec.theta == entry["theta"]
                and set(spec.J) == set(entry["J"])):
            matrix = build_family(spec)
            rels = [parse_element(e, matrix) for e in entry["relations"]]
            pres = Presentation(spec, matrix, entry["id"], rels,
                                list(entry["relations"]))
            pres.pbw = [(parse_element(e, matrix), h) for e, h in entry["pbw"]]
            pres.hilbert = entry["hilbert"]
            pres.central = [parse_element(e, matrix) for e in entry["central"]]
            pres.extension_sub = entry["extension_sub"]
            return pres
    pres = distinguished_relations(spec)
    pres.eminent_is_distinguished = True
    return pres


def consequence_checks(spec) -> list[ConsequenceCheck]:
    """Auxiliary identities attached to a descriptor: elements expected to
    vanish in the quotient by the stated relations."""
    if isinstance(spec, dict):
        spec = FamilySpec.from_json(spec)
    matrix = build_family(spec)
    fmt = _format_vars(spec, matrix)

    keys = []
    for entry in _catalog()["entries"]:
        if entry["family"] == spec.family and "consequences" in entry:
            ctx = _context(spec, matrix)
            if (entry.get("variant") in (None, spec.variant)
                    and _eval(entry["applies"], ctx)):
                keys.append(entry["consequences"])
    for entry in _catalog()["eminent"]:
        if (spec.family == entry["family"] and spec.theta == entry["theta"]
                and set(spec.J) == set(entry["J"])):
            keys.append(entry["id"])

    out = []
    for key in keys:
        table = _catalog()["consequences"][key]
        modulo = [parse_element(e.format(**fmt), matrix) for e in table["modulo"]]
        for raw in table["vanishing"]:
            expr = raw.format(**fmt)
            out.append(ConsequenceCheck(expr, parse_element(expr, matrix),
                                        modulo, "vanishes"))
    return out
