import pytest

from qnichols.braiding import (BraidingMatrix, cartan_matrix, dynkin_diagram,
                               finiteness_obstructions, is_cartan_vertex,
                               load_matrix)
from qnichols.families import FamilyError, build_family, catalog_samples


def a3_j2(n=5):
    return build_family({"family": "SuperA", "theta": 3, "order": n, "J": [2]})


def test_supera_diagram_matches_chain_conditions():
    m = a3_j2()
    d = dynkin_diagram(m)
    # vertices (q^-1, -1, q), edges (q, q^-1) in the ambient order 10
    assert d.vertex_exps == (8, 5, 2)
    assert d.edge_exps == ((0, 1, 2), (1, 2, 8))
    # chain condition at the right end: q_tt^2 qtilde_{t-1,t} = q
    assert (2 * d.vertex_exps[2] + m.twiddle_exp(1, 2)) % 10 == 2


def test_diagonal_matrix_has_edgeless_diagram():
    m = BraidingMatrix(5, ((1, 0, 0), (0, 2, 0), (0, 0, 1)))
    assert dynkin_diagram(m).edge_exps == ()


def test_diagram_gauge_invariance():
    # same q_ii and qtilde_ij, different splittings of the edges
    m1 = a3_j2()
    m2 = BraidingMatrix(10, ((8, 5, 3), (7, 5, 4), (7, 4, 2)))
    assert dynkin_diagram(m1).canonical_key() == dynkin_diagram(m2).canonical_key()
    assert cartan_matrix(m1).rows == cartan_matrix(m2).rows


def test_cartan_matrix_values():
    g2 = build_family({"family": "CartanG2", "order": 4})
    assert cartan_matrix(g2).rows == ((2, -3), (-1, 2))
    std = build_family({"family": "StdG2", "variant": "a"})
    assert cartan_matrix(std).rows == ((2, -3), (-1, 2))
    rank1 = BraidingMatrix(5, ((1,),))
    assert cartan_matrix(rank1).rows == ((2,),)
    assert cartan_matrix(a3_j2()).rows == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


def test_cartan_matrix_rejects_unit_vertex():
    m = BraidingMatrix(5, ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        cartan_matrix(m)


def test_cartan_vertices():
    m = a3_j2()
    assert is_cartan_vertex(m, 0)
    assert not is_cartan_vertex(m, 1)
    assert is_cartan_vertex(m, 2)
    g2 = build_family({"family": "CartanG2", "order": 4})
    assert all(is_cartan_vertex(g2, i) for i in range(2))


def test_family_side_conditions():
    with pytest.raises(FamilyError):
        build_family({"family": "SuperB", "theta": 3, "order": 4, "J": [1]})
    with pytest.raises(FamilyError):
        build_family({"family": "SuperA", "theta": 3, "order": 5})  # empty J
    with pytest.raises(FamilyError):
        build_family({"family": "StdG2", "order": 12, "variant": "a"})
    with pytest.raises(FamilyError):
        build_family({"family": "G3", "theta": 3, "order": 3, "variant": "a"})
    with pytest.raises(FamilyError):
        build_family({"family": "D21alpha", "order": 4, "variant": "path"})
    with pytest.raises(FamilyError):
        build_family({"family": "Mystery", "theta": 2, "order": 5})


def test_f4_first_diagram():
    m = build_family({"family": "F4", "order": 5, "variant": "a"})
    d = dynkin_diagram(m)
    # q^2 -- q^2 -- q -- (-1) with edges q^-2, q^-2, q^-1
    assert d.vertex_exps == (4, 4, 2, 5)
    assert d.edge_exps == ((0, 1, 6), (1, 2, 6), (2, 3, 8))


def test_stdb_head():
    m = build_family({"family": "StdB", "theta": 3, "order": 3, "J": [1]})
    d = dynkin_diagram(m)
    # last vertex zeta_3 with incoming edge -zeta_3 (ambient order 6)
    assert d.vertex_exps[-1] == 2
    assert d.edge_exps[-1] == (1, 2, 5)


def test_obstruction_unit_vertex():
    m = BraidingMatrix(5, ((0, 1), (1, 2)))
    kinds = {o.kind for o in finiteness_obstructions(m)}
    assert "unit-vertex-with-edge" in kinds


def test_obstruction_indefinite_rank2():
    # p -- p^2 -- (-p) with ord(p) = 10
    m = BraidingMatrix(10, ((1, 2), (0, 6)))
    kinds = {o.kind for o in finiteness_obstructions(m)}
    assert "indefinite-rank-two" in kinds


def test_obstruction_long_cycle():
    rows = ((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1))
    kinds = {o.kind for o in finiteness_obstructions(BraidingMatrix(5, rows))}
    assert "long-cycle" in kinds


def test_obstruction_triangle_product():
    rows = ((1, 1, 1), (0, 1, 1), (0, 0, 1))
    kinds = {o.kind for o in finiteness_obstructions(BraidingMatrix(5, rows))}
    assert "triangle-product" in kinds


def test_catalog_families_unobstructed():
    for spec in catalog_samples():
        assert finiteness_obstructions(build_family(spec)) == [], spec


def test_catalog_triangles_multiply_to_one():
    for spec in catalog_samples():
        m = build_family(spec)
        d = dynkin_diagram(m)
        adj = {i: set(d.neighbors(i)) for i in range(m.theta)}
        for i in range(m.theta):
            for j in adj[i]:
                if j <= i:
                    continue
                for k in adj[i] & adj[j]:
                    if k > j:
                        s = (m.twiddle_exp(i, j) + m.twiddle_exp(i, k)
                             + m.twiddle_exp(j, k)) % m.order
                        assert s == 0, (spec, i, j, k)


def test_matrix_json_round_trip():
    m = a3_j2()
    assert BraidingMatrix.from_json(m.to_json()) == m
    assert load_matrix(m.to_json()) == m
    assert load_matrix({"family": "SuperA", "theta": 3, "order": 5,
                        "J": [2]}) == m
