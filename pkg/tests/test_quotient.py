import itertools
import math

import pytest

from qnichols.braiding import BraidingMatrix
from qnichols.cyclo import CycScalar
from qnichols.families import build_family
from qnichols.freealg import (FreeElement, braided_commutator, generator,
                              iterated_bracket, one, quantum_symmetrizer,
                              word_element)
from qnichols.quotient import (GradedIdeal, PBWLetter, TruncationError,
                               graded_dimensions, groebner,
                               is_primitive_in_quotient, normal_form,
                               pbw_span_check, skew_central_check,
                               vanishes_in_quotient)


@pytest.fixture(scope="module")
def a3():
    return build_family({"family": "SuperA", "theta": 3, "order": 5, "J": [2]})


def bhat_ideal(m):
    return GradedIdeal(m, [
        generator(m, 2) ** 2,
        iterated_bracket(m, [1, 3]),
        iterated_bracket(m, [1, 1, 2]),
        iterated_bracket(m, [3, 3, 2]),
    ])


@pytest.fixture(scope="module")
def bhat(a3):
    return groebner(bhat_ideal(a3), 8)


def test_single_binomial_is_confluent(a3):
    x1, x2 = generator(a3, 1), generator(a3, 2)
    basis = groebner(GradedIdeal(a3, [x1 * x2 - a3.entry(0, 1) * (x2 * x1)]), 6)
    assert len(basis) == 1


def test_ideal_rejects_low_degree(a3):
    with pytest.raises(ValueError):
        GradedIdeal(a3, [generator(a3, 1)])
    with pytest.raises(ValueError):
        GradedIdeal(a3, [generator(a3, 1) + generator(a3, 1) ** 2])


def test_normal_words_avoid_squares():
    m = BraidingMatrix(4, ((2, 2), (0, 2)))
    basis = groebner(GradedIdeal(m, [generator(m, 1) ** 2]), 4)
    dims = graded_dimensions(basis)
    assert dims[(1, 1)] == 2 and dims[(0, 2)] == 1
    assert (2, 0) not in dims
    assert dims[(2, 2)] == 3  # 1212, 1221, 2121


def test_normal_form_idempotent_linear(bhat, a3):
    x12 = iterated_bracket(a3, [1, 2])
    el = x12 * x12 + generator(a3, 1) * generator(a3, 2)
    r = bhat.reduce(el)
    assert (bhat.reduce(r) - r).is_zero()
    a = generator(a3, 1) * generator(a3, 2)
    b = generator(a3, 2) * generator(a3, 3)
    lhs = bhat.reduce(a * b)
    rhs = bhat.reduce(bhat.reduce(a) * bhat.reduce(b))
    assert (lhs - rhs).is_zero()


def test_defining_and_derived_relations_vanish(bhat, a3):
    assert bhat.reduce(generator(a3, 2) ** 2).is_zero()
    assert bhat.reduce(iterated_bracket(a3, [1, 2]) ** 2).is_zero()
    assert bhat.reduce(iterated_bracket(a3, [2, 3]) ** 2).is_zero()
    assert bhat.reduce(iterated_bracket(a3, [1, 2, 3]) ** 2).is_zero()
    assert (bhat.reduce(generator(a3, 1)) - generator(a3, 1)).is_zero()
    assert not bhat.reduce(generator(a3, 1) * generator(a3, 2)).is_zero()


def test_vanishes_in_quotient_wrapper(a3):
    x2 = generator(a3, 2)
    assert vanishes_in_quotient(x2 * x2, bhat_ideal(a3), 6)


def test_power_relation_forces_longer_bracket():
    # with x1^4 imposed on the rank-2 Cartan matrix at order 4, the five-fold
    # bracket x_11112 collapses
    g2 = build_family({"family": "CartanG2", "order": 4})
    ideal = GradedIdeal(g2, [generator(g2, 1) ** 4])
    assert vanishes_in_quotient(iterated_bracket(g2, [1, 1, 1, 1, 2]), ideal, 6)


def test_free_algebra_dimensions():
    # no relations: the quotient is free, 2^n words in total degree n
    m = BraidingMatrix(4, ((1, 0), (0, 1)))
    dims = graded_dimensions(GradedIdeal(m, []), 3)
    assert sum(v for k, v in dims.items() if sum(k) == 3) == 8


def test_all_odd_quotient_dimension():
    m = build_family({"family": "SuperA", "theta": 3, "order": 5,
                      "J": [1, 2, 3]})
    gens = [generator(m, i) ** 2 for i in (1, 2, 3)]
    gens.append(iterated_bracket(m, [2, 1, 3]))
    gens.append(braided_commutator(iterated_bracket(m, [1, 2, 3]),
                                   generator(m, 2)))
    dims = graded_dimensions(GradedIdeal(m, gens), 6)
    assert dims[(1, 0, 1)] == 2


def test_truncation_guard(bhat, a3):
    with pytest.raises(TruncationError):
        bhat.reduce(generator(a3, 1) ** 9)
    with pytest.raises(TruncationError):
        groebner(bhat_ideal(a3), 2)


def ideal_span_dims(matrix, gens, maxdeg):
    """Independent oracle: dimension of the ideal's span per multidegree from
    explicit words a*g*b and Gaussian elimination."""
    spans = {}
    theta = matrix.theta
    for g in gens:
        gtot = sum(g.degree())
        for ltot in range(maxdeg - gtot + 1):
            for rtot in range(maxdeg - gtot - ltot + 1):
                for lw in itertools.product(range(theta), repeat=ltot):
                    left = FreeElement(matrix,
                                       {tuple(lw): CycScalar.one(matrix.order)})
                    for rw in itertools.product(range(theta), repeat=rtot):
                        right = FreeElement(
                            matrix, {tuple(rw): CycScalar.one(matrix.order)})
                        el = left * g * right
                        if not el.is_zero():
                            spans.setdefault(el.degree(), []).append(el)
    dims = {}
    for deg, elements in spans.items():
        words = sorted({w for e in elements for w in e.terms})
        index = {w: i for i, w in enumerate(words)}
        rows = []
        for e in elements:
            row = [CycScalar.zero(matrix.order)] * len(words)
            for w, c in e.terms.items():
                row[index[w]] = c
            rows.append(row)
        rank, col = 0, 0
        while col < len(words) and rank < len(rows):
            piv = next((r for r in range(rank, len(rows))
                        if not rows[r][col].is_zero()), None)
            if piv is None:
                col += 1
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = rows[rank][col].inverse()
            rows[rank] = [c * inv for c in rows[rank]]
            for r in range(len(rows)):
                if r != rank and not rows[r][col].is_zero():
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
            col += 1
        dims[deg] = rank
    return dims


def test_dimensions_against_bruteforce_span(a3):
    gens = list(bhat_ideal(a3).generators)
    maxdeg = 5
    oracle = ideal_span_dims(a3, gens, maxdeg)
    dims = graded_dimensions(bhat_ideal(a3), maxdeg)
    for deg in {d for d in set(oracle) | set(dims) if sum(d) <= maxdeg}:
        total = sum(deg)
        words = math.factorial(total) // math.prod(math.factorial(d)
                                                   for d in deg)
        assert words - oracle.get(deg, 0) == dims.get(deg, 0), deg


def test_dimensions_against_bruteforce_span_rank2():
    g2 = build_family({"family": "CartanG2", "order": 4})
    gens = [iterated_bracket(g2, [2, 2, 1]), generator(g2, 1) ** 4,
            braided_commutator(iterated_bracket(g2, [1, 1, 1, 2]),
                               iterated_bracket(g2, [1, 1, 2]))]
    maxdeg = 7
    oracle = ideal_span_dims(g2, gens, maxdeg)
    dims = graded_dimensions(GradedIdeal(g2, gens), maxdeg)
    for deg in {d for d in set(oracle) | set(dims) if sum(d) <= maxdeg}:
        total = sum(deg)
        words = math.factorial(total) // math.prod(math.factorial(d)
                                                   for d in deg)
        assert words - oracle.get(deg, 0) == dims.get(deg, 0), deg


def test_determinism(a3):
    b1 = groebner(bhat_ideal(a3), 8)
    b2 = groebner(bhat_ideal(a3), 8)
    assert len(b1) == len(b2)
    for g1, g2 in zip(b1.elements, b2.elements):
        assert g1.sorted_terms() == g2.sorted_terms()


def test_primitivity_in_quotient(bhat, a3):
    xu = braided_commutator(iterated_bracket(a3, [1, 2, 3]), generator(a3, 2))
    assert is_primitive_in_quotient(xu, bhat, 8)
    small = GradedIdeal(a3, [generator(a3, 2) ** 2])
    assert not is_primitive_in_quotient(
        generator(a3, 1) * generator(a3, 2), small, 6)


def test_primitivity_g2_bracket():
    g2 = build_family({"family": "CartanG2", "order": 4})
    ideal = GradedIdeal(g2, [iterated_bracket(g2, [1, 1, 1, 1, 2]),
                             iterated_bracket(g2, [2, 2, 1])])
    el = braided_commutator(iterated_bracket(g2, [1, 1, 1, 2]),
                            iterated_bracket(g2, [1, 1, 2]))
    assert is_primitive_in_quotient(el, ideal, 8)


def test_skew_central(bhat, a3):
    xu = braided_commutator(iterated_bracket(a3, [1, 2, 3]), generator(a3, 2))
    report = skew_central_check(xu, bhat, 8)
    assert report.ok
    for i in range(3):
        alpha = tuple(1 if j == i else 0 for j in range(3))
        assert report.scalars[i + 1] == a3.bilinear(alpha, (1, 2, 1))
    bad = skew_central_check(generator(a3, 1),
                             GradedIdeal(a3, [generator(a3, 2) ** 2]), 4)
    assert not bad.ok and bad.failed_vertex is not None


def test_pbw_span(bhat, a3):
    x1, x2, x3 = (generator(a3, i) for i in (1, 2, 3))
    xu = braided_commutator(iterated_bracket(a3, [1, 2, 3]), x2)
    letters = [PBWLetter(x3, None),
               PBWLetter(iterated_bracket(a3, [2, 3]), 2),
               PBWLetter(x2, 2),
               PBWLetter(xu, None),
               PBWLetter(iterated_bracket(a3, [1, 2, 3]), 2),
               PBWLetter(iterated_bracket(a3, [1, 2]), 2),
               PBWLetter(x1, None)]
    assert pbw_span_check(letters, bhat, 8)
    missing = letters[:3] + letters[4:]
    ok, mismatch = pbw_span_check(missing, bhat, 8, return_mismatch=True)
    assert not ok and mismatch[0] == (1, 2, 1)


def test_nichols_ideal_from_symmetrizer_kernels_rank2():
    """Generate the defining ideal of the rank-2 Cartan braiding at a third
    root of unity from symmetrizer kernels, and compare the quotient against
    the root-system product formula."""
    from qnichols.series import series_product_formula

    matrix = BraidingMatrix(3, ((1, 2), (0, 1)))
    bound = 8
    gens = []
    known = None
    for total in range(2, bound + 1):
        for a in range(total + 1):
            b = total - a
            words = [w for w in itertools.product(range(2), repeat=total)
                     if sum(1 for l in w if l == 0) == a]
            if not words:
                continue
            imgs = [quantum_symmetrizer(
                word_element(matrix, [l + 1 for l in w])) for w in words]
            cols = sorted({w for im in imgs for w in im.terms})
            index = {w: i for i, w in enumerate(cols)}
            zero = CycScalar.zero(3)
            rows = [[im.terms.get(w, zero) for w in cols] for im in imgs]
            # kernel via elimination on the transpose system rows * x = 0
            kernel = _kernel(rows, matrix)
            for vec in kernel:
                gens.append(FreeElement(
                    matrix, {w: c for w, c in zip(words, vec)}))
    # keep only generators not already reducible (cheap pre-filter)
    ideal = GradedIdeal(matrix, [g for g in gens if not g.is_zero()])
    dims = graded_dimensions(ideal, bound)
    target = series_product_formula(
        2, [], [((1, 0), 3), ((0, 1), 3), ((1, 1), 3)], bound)
    assert target.matches_dimensions(dims, bound)


def _kernel(rows, matrix):
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    # transpose: solutions x with sum x_i rows[i] = 0
    mat = [[rows[r][c] for r in range(nrows)] for c in range(ncols)]
    pivots = []
    rank = 0
    for col in range(nrows):
        piv = next((r for r in range(rank, len(mat))
                    if not mat[r][col].is_zero()), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(nrows) if c not in pivots]
    out = []
    zero = CycScalar.zero(matrix.order)
    one_ = CycScalar.one(matrix.order)
    for fc in free:
        vec = [zero] * nrows
        vec[fc] = one_
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        out.append(vec)
    return out
