import pytest

from qnichols.families import FamilyError, FamilySpec, build_family, \
    catalog_samples
from qnichols.freealg import quantum_symmetrizer
from qnichols.presentations import (catalog_entries, catalog_version,
                                    consequence_checks,
                                    distinguished_relations, eminent_relations)
from qnichols.quotient import GradedIdeal, graded_dimensions, groebner
from qnichols.series import hilbert_distinguished


def test_catalog_is_versioned_and_keyed():
    assert catalog_version() >= 1
    ids = [e["id"] for e in catalog_entries()]
    assert len(ids) == len(set(ids))
    assert len(ids) >= 40
    for entry in catalog_entries():
        assert entry["family"]
        assert entry["applies"]
        assert entry["relations"]


def test_case_split_totality():
    # every admissible sample selects exactly one entry (selection raises on
    # zero or several hits)
    for spec in catalog_samples():
        pres = distinguished_relations(spec)
        assert pres.relations, spec


def test_descriptor_outside_catalog():
    with pytest.raises(FamilyError):
        distinguished_relations(FamilySpec("CartanG2", 2, 5))


def test_relations_homogeneous_and_in_kernel():
    for spec in catalog_samples():
        pres = distinguished_relations(spec)
        for expr, rel in zip(pres.relation_exprs, pres.relations):
            assert not rel.is_zero(), (spec, expr)
            deg = rel.degree()  # raises if inhomogeneous
            assert sum(deg) >= 2
            if sum(deg) <= 8:
                assert quantum_symmetrizer(rel).is_zero(), (spec, expr)


def test_quotient_dimensions_equal_distinguished_series():
    """The decisive oracle: for every catalog sample the quotient by the
    cataloged relations has exactly the graded dimensions predicted by the
    root system with unbounded Cartan-orbit generators."""
    for spec in catalog_samples():
        bound = 6 if spec.theta <= 3 else 5
        pres = distinguished_relations(spec)
        gens = [r for r in pres.relations if sum(r.degree()) <= bound]
        dims = graded_dimensions(GradedIdeal(pres.matrix, gens), bound)
        series = hilbert_distinguished(pres.matrix, bound)
        assert series.matches_dimensions(dims, bound), (spec, pres.entry_id)


def test_quotient_dimensions_deep_rank4():
    """Degree-7 version of the oracle for the rank-4 entries whose deepest
    relations are invisible below degree 6."""
    targets = [
        FamilySpec("SuperD", 4, 5, frozenset({3}), "chain"),
        FamilySpec("SuperD", 4, 4, frozenset({3}), "chain"),
        FamilySpec("F4", 4, 4, frozenset(), "b"),
        FamilySpec("F4", 4, 4, frozenset(), "e"),
        FamilySpec("F4", 4, 5, frozenset(), "f"),
    ]
    for spec in targets:
        pres = distinguished_relations(spec)
        gens = [r for r in pres.relations if sum(r.degree()) <= 7]
        dims = graded_dimensions(GradedIdeal(pres.matrix, gens), 7)
        series = hilbert_distinguished(pres.matrix, 7)
        assert series.matches_dimensions(dims, 7), (spec, pres.entry_id)


def _count_normal_at(basis, mu):
    forbidden = basis.leading_words()
    theta = basis.matrix.theta
    total = 0

    def walk(word, deg):
        nonlocal total
        if deg == mu:
            total += 1
            return
        for letter in range(theta):
            if deg[letter] + 1 > mu[letter]:
                continue
            nw = word + (letter,)
            if any(len(lm) <= len(nw) and nw[len(nw) - len(lm):] == lm
                   for lm in forbidden):
                continue
            nd = list(deg)
            nd[letter] += 1
            walk(nw, tuple(nd))

    walk((), tuple([0] * theta))
    return total


def test_largest_relation_is_load_bearing():
    """The degree-11 bracket of the rank-4 catalog cuts exactly one dimension
    at its own multidegree; with it the quotient matches the distinguished
    series there, without it the count is one too high."""
    spec = FamilySpec("F4", 4, 5, frozenset(), "e")
    pres = distinguished_relations(spec)
    series = hilbert_distinguished(pres.matrix, 11)
    mu = (1, 3, 5, 2)

    full = groebner(GradedIdeal(pres.matrix, pres.relations), 11)
    assert _count_normal_at(full, mu) == series.coefficient(mu)

    trimmed = [r for r in pres.relations if sum(r.degree()) <= 8]
    partial = groebner(GradedIdeal(pres.matrix, trimmed), 11)
    assert _count_normal_at(partial, mu) == series.coefficient(mu) + 1


def test_supera_schema():
    pres = distinguished_relations(FamilySpec("SuperA", 3, 5, frozenset({2})))
    assert set(pres.relation_exprs) == {
        "xw(1,3)", "xw(1,1,2)", "xw(3,3,2)", "x2^2", "[xint(1,3),x2]"}


def test_cartan_g2_entries():
    p4 = distinguished_relations(FamilySpec("CartanG2", 2, 4))
    assert p4.relation_exprs == ["xw(1,1,1,1,2)", "xw(2,2,1)",
                                 "[xw(1,1,1,2),xw(1,1,2)]"]
    assert p4.nichols_minimal is not None and len(p4.nichols_minimal) == 2
    assert p4.root_vectors is not None and len(p4.root_vectors) == 6
    # root orders at parameter order four are all four
    assert [p4.matrix.root_order(v.degree()) for v in p4.root_vectors] == [4] * 6
    p6 = distinguished_relations(FamilySpec("CartanG2", 2, 6))
    orders = [p6.matrix.root_order(v.degree()) for v in p6.root_vectors]
    assert orders == [6, 2, 6, 6, 2, 2]


def test_eminent_presentations():
    p2 = eminent_relations(FamilySpec("SuperA", 3, 5, frozenset({2})))
    assert set(p2.relation_exprs) == {"x2^2", "xw(1,3)", "xw(1,1,2)",
                                      "xw(3,3,2)"}
    assert not p2.eminent_is_distinguished
    assert len(p2.pbw) == 7
    heights = [h for _, h in p2.pbw]
    assert heights == [None, 2, 2, None, 2, 2, None]
    assert p2.central and p2.hilbert

    p123 = eminent_relations(FamilySpec("SuperA", 3, 5, frozenset({1, 2, 3})))
    assert len(p123.relations) == 5
    assert [h for _, h in p123.pbw] == [2, None, 2, None, 2, None, 2]

    redirect = eminent_relations(FamilySpec("SuperB", 3, 5, frozenset({1})))
    assert redirect.eminent_is_distinguished


def test_eminent_relations_in_kernel():
    for J in ({2}, {1, 2, 3}):
        for n in (5, 8):
            pres = eminent_relations(FamilySpec("SuperA", 3, n, frozenset(J)))
            for rel in pres.relations:
                assert quantum_symmetrizer(rel).is_zero()


def test_consequences_vanish():
    for spec in (FamilySpec("CartanG2", 2, 4), FamilySpec("CartanG2", 2, 6),
                 FamilySpec("SuperA", 3, 5, frozenset({2})),
                 FamilySpec("SuperA", 3, 5, frozenset({1, 2, 3}))):
        checks = consequence_checks(spec)
        assert checks
        matrix = build_family(spec)
        basis = groebner(GradedIdeal(matrix, checks[0].modulo), 9)
        for check in checks:
            if check.element.is_zero():
                continue
            assert sum(check.element.degree()) <= 9
            assert basis.reduce(check.element).is_zero(), (spec, check.expr)


def test_consequences_empty_for_families_without_them():
    assert consequence_checks(FamilySpec("StdG2", 2, 8, frozenset(), "a")) == []


def test_relations_primitive_modulo_lower_degrees():
    """Every cataloged relation of total degree <= 6 is primitive in the
    quotient by the strictly lower-degree relations of the same list."""
    from qnichols.quotient import is_primitive_in_quotient

    for spec in catalog_samples():
        pres = distinguished_relations(spec)
        rels = sorted(pres.relations, key=lambda r: sum(r.degree()))
        for rel in rels:
            degree = sum(rel.degree())
            if degree > 6:
                continue
            lower = [r for r in rels if sum(r.degree()) < degree]
            if not lower:
                continue
            ideal = GradedIdeal(pres.matrix, lower)
            assert is_primitive_in_quotient(rel, ideal, degree), \
                (spec, repr(rel))
