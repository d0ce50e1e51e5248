"""The graded free algebra T(V) of a diagonal braiding, as a braided Hopf algebra.

Elements are sparse sums of words over the vertex alphabet with cyclotomic
coefficients.  Words are tuples of 0-based letters; the Z^theta-degree of a
word is its content vector, so homogeneous components are determined by the
words themselves.

The braided structure implemented here:

  * braided commutator  [x, y]_c = xy - q(deg x, deg y) yx   (homogeneous x, y)
  * left adjoint action of the generators, and the iterated root vectors
    x_{i1 i2 ... ik} = (ad x_{i1}) x_{i2 ... ik}
  * the coproduct, the unique algebra map to the braided tensor square with
    primitive generators; on a word it is the q-deconcatenation sum over
    subsets of letter positions
  * the quantum symmetrizer, computed level by level through the coset
    factorization of S_n, so that words of equal content merge as early as
    possible instead of expanding n! terms
"""

from __future__ import annotations

from fractions import Fraction

from .braiding import BraidingMatrix
from .cyclo import CycScalar

__all__ = [
    "FreeElement",
    "TensorElement",
    "generator",
    "word_element",
    "one",
    "zero",
    "multiply",
    "braided_commutator",
    "adjoint",
    "iterated_bracket",
    "interval_bracket",
    "coproduct",
    "is_primitive",
    "quantum_symmetrizer",
    "SYMMETRIZER_DEGREE_CAP",
]

SYMMETRIZER_DEGREE_CAP = 10

Word = tuple[int, ...]


def _multidegree(word: Word, theta: int) -> tuple[int, ...]:
    deg = [0] * theta
    for letter in word:
        deg[letter] += 1
    return tuple(deg)


class FreeElement:
    """Sparse element of T(V); no zero coefficients are stored."""

    __slots__ = ("matrix", "terms")

    def __init__(self, matrix: BraidingMatrix, terms: dict):
        self.matrix = matrix
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- ring structure ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            out[w] = c if acc is None else acc + c
        return FreeElement(self.matrix, out)

    def __neg__(self):
        return FreeElement(self.matrix, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u + v
                c = cu * cv
                acc = out.get(w)
                out[w] = c if acc is None else acc + c
        return FreeElement(self.matrix, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "FreeElement":
        if not isinstance(c, CycScalar):
            c = CycScalar.from_rational(c)
        if c.is_zero():
            return FreeElement(self.matrix, {})
        return FreeElement(self.matrix, {w: x * c for w, x in self.terms.items()})

    def __pow__(self, k: int):
        assert k >= 0
        out = one(self.matrix)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other) -> "FreeElement":
        if isinstance(other, FreeElement):
            if other.matrix is not self.matrix and other.matrix != self.matrix:
                raise ValueError("elements live over different braiding matrices")
            return other
        if isinstance(other, (int, Fraction, CycScalar)):
            return one(self.matrix).scale(other)
        raise TypeError(f"cannot combine FreeElement with {type(other).__name__}")

    # -- structure -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, FreeElement):
            return self.matrix == other.matrix and (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        raise TypeError("FreeElement is not hashable")

    def homogeneous_components(self) -> dict:
        theta = self.matrix.theta
        comps: dict = {}
        for w, c in self.terms.items():
            comps.setdefault(_multidegree(w, theta), {})[w] = c
        return {d: FreeElement(self.matrix, t) for d, t in comps.items()}

    def is_homogeneous(self) -> bool:
        return len(self.homogeneous_components()) <= 1

    def degree(self) -> tuple[int, ...]:
        comps = self.homogeneous_components()
        if len(comps) != 1:
            raise ValueError("element is not homogeneous")
        return next(iter(comps))

    def total_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def scalar_part(self):
        """The coefficient of the empty word, if the element is a scalar."""
        if not self.terms:
            return CycScalar.zero(self.matrix.order)
        if set(self.terms) == {()}:
            return self.terms[()]
        raise ValueError("element is not a scalar")

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mon = "*".join(f"x{letter + 1}" for letter in w) if w else "1"
            cs = repr(c)
            if cs == "1":
                parts.append(mon if w else "1")
            elif cs == "-1":
                parts.append(f"-{mon}" if w else "-1")
            elif ("+" in cs or "-" in cs.lstrip("-")) or (" " in cs):
                parts.append(f"({cs})*{mon}" if w else f"({cs})")
            else:
                parts.append(f"{cs}*{mon}" if w else cs)
        return " + ".join(parts).replace("+ -", "- ")


def zero(matrix: BraidingMatrix) -> FreeElement:
    return FreeElement(matrix, {})


def one(matrix: BraidingMatrix) -> FreeElement:
    return FreeElement(matrix, {(): CycScalar.one(matrix.order)})


def generator(matrix: BraidingMatrix, i: int) -> FreeElement:
    """x_i for 1-based vertex i."""
    assert 1 <= i <= matrix.theta, f"generator index {i} out of range"
    return FreeElement(matrix, {(i - 1,): CycScalar.one(matrix.order)})


def word_element(matrix: BraidingMatrix, letters) -> FreeElement:
    """The monomial x_{i1} ... x_{ik} for 1-based letters."""
    word = tuple(i - 1 for i in letters)
    assert all(0 <= l < matrix.theta for l in word)
    return FreeElement(matrix, {word: CycScalar.one(matrix.order)})


def multiply(a: FreeElement, b: FreeElement) -> FreeElement:
    return a * b


def braided_commutator(a: FreeElement, b: FreeElement) -> FreeElement:
    """[a, b]_c = ab - q(deg a, deg b) ba, extended bilinearly over
    homogeneous components."""
    m = a.matrix
    out = zero(m)
    for da, ca in a.homogeneous_components().items():
        for db, cb in b.homogeneous_components().items():
            factor = m.bilinear(da, db)
            out = out + ca * cb - (cb * ca).scale(factor)
    return out


def adjoint(matrix: BraidingMatrix, i: int, y: FreeElement) -> FreeElement:
    """(ad_c x_i) y; for the primitive generator this is the braided bracket."""
    return braided_commutator(generator(matrix, i), y)


def iterated_bracket(matrix: BraidingMatrix, letters) -> FreeElement:
    """x_{i1 i2 ... ik} = (ad_c x_{i1}) x_{i2 ... ik} (1-based letters)."""
    letters = list(letters)
    assert letters, "iterated bracket needs at least one letter"
    if len(letters) == 1:
        return generator(matrix, letters[0])
    return adjoint(matrix, letters[0], iterated_bracket(matrix, letters[1:]))


def interval_bracket(matrix: BraidingMatrix, i: int, j: int) -> FreeElement:
    """x_{(i j)} = x_{i, i+1, ..., j} for i <= j."""
    assert i <= j
    return iterated_bracket(matrix, range(i, j + 1))


class TensorElement:
    """Sparse element of the braided tensor square T(V) (x) T(V)."""

    __slots__ = ("matrix", "terms")

    def __init__(self, matrix: BraidingMatrix, terms: dict):
        self.matrix = matrix
        self.terms = {uv: c for uv, c in terms.items() if not c.is_zero()}

    @staticmethod
    def simple(a: FreeElement, b: FreeElement) -> "TensorElement":
        out: dict = {}
        for u, cu in a.terms.items():
            for v, cv in b.terms.items():
                out[(u, v)] = cu * cv
        return TensorElement(a.matrix, out)

    def __add__(self, other):
        out = dict(self.terms)
        for uv, c in other.terms.items():
            acc = out.get(uv)
            out[uv] = c if acc is None else acc + c
        return TensorElement(self.matrix, out)

    def __neg__(self):
        return TensorElement(self.matrix, {uv: -c for uv, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Multiplication twisted by the braiding:
        (a (x) b)(c (x) d) = q(deg b, deg c) (ac (x) bd)."""
        m = self.matrix
        theta = m.theta
        out: dict = {}
        for (u1, v1), c1 in self.terms.items():
            d1 = _multidegree(v1, theta)
            for (u2, v2), c2 in other.terms.items():
                d2 = _multidegree(u2, theta)
                key = (u1 + u2, v1 + v2)
                c = c1 * c2 * m.bilinear(d1, d2)
                acc = out.get(key)
                out[key] = c if acc is None else acc + c
        return TensorElement(self.matrix, out)

    def scale(self, c) -> "TensorElement":
        if not isinstance(c, CycScalar):
            c = CycScalar.from_rational(c)
        return TensorElement(self.matrix, {uv: x * c for uv, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TensorElement) and (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (u, v), c in sorted(self.terms.items(),
                                key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0])):
            lu = "*".join(f"x{l + 1}" for l in u) if u else "1"
            lv = "*".join(f"x{l + 1}" for l in v) if v else "1"
            bits.append(f"({c!r})*{lu}(x){lv}")
        return " + ".join(bits)


def coproduct(a: FreeElement) -> TensorElement:
    """Delta(a): on a word, the sum over splittings of its positions into a
    left and right subword, weighted by the braiding factors of the letters
    that cross."""
    m = a.matrix
    exps = m.exponents
    order = m.order
    out: dict = {}
    for w, cw in a.terms.items():
        n = len(w)
        for mask in range(1 << n):
            left = []
            right = []
            eacc = 0
            for t in range(n):
                if (mask >> t) & 1:
                    # letter goes to the left leg: it crosses every earlier
                    # letter already sent right
                    for s in right:
                        eacc += exps[s][w[t]]
                    left.append(w[t])
                else:
                    right.append(w[t])
            key = (tuple(left), tuple(w[t] for t in range(n) if not (mask >> t) & 1))
            c = cw * m.zeta_power(eacc % order)
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
    return TensorElement(m, out)


def is_primitive(a: FreeElement) -> bool:
    """Delta(a) = a (x) 1 + 1 (x) a."""
    delta = coproduct(a)
    prim = TensorElement.simple(a, one(a.matrix)) + TensorElement.simple(one(a.matrix), a)
    return (delta - prim).is_zero()


def _apply_braid(matrix: BraidingMatrix, terms: dict, j: int) -> dict:
    """The braiding at positions (j, j+1), 1-based: swap letters and pick up
    q_{ab}."""
    out: dict = {}
    for w, c in terms.items():
        a, b = w[j - 1], w[j]
        nw = w[:j - 1] + (b, a) + w[j + 1:]
        nc = c * matrix.zeta_power(matrix.entry_exp(a, b))
        acc = out.get(nw)
        out[nw] = nc if acc is None else acc + nc
    return out


def quantum_symmetrizer(a: FreeElement, cap: int = SYMMETRIZER_DEGREE_CAP) -> FreeElement:
    """Image of a under the total symmetrizer (the graded map whose kernel is
    the defining ideal of the Nichols algebra).

    Per length n, the map is built through the chain of partial sums
    (1 + c_1 + c_1 c_2 + ...) arising from the minimal coset representatives
    of S_{n-1} in S_n; intermediate results merge words of equal content, so
    the cost is governed by multinomial sizes rather than n!.
    """
    m = a.matrix
    by_len: dict = {}
    for w, c in a.terms.items():
        if len(w) > cap:
            raise ValueError(
                f"total degree {len(w)} above symmetrizer cap {cap}")
        by_len.setdefault(len(w), {})[w] = c
    total: dict = {}
    for n, terms in by_len.items():
        cur = terms
        for level in range(2, n + 1):
            acc = dict(cur)
            step = cur
            for j in range(level - 1, 0, -1):
                step = _apply_braid(m, step, j)
                for w, c in step.items():
                    old = acc.get(w)
                    acc[w] = c if old is None else old + c
            cur = {w: c for w, c in acc.items() if not c.is_zero()}
        for w, c in cur.items():
            old = total.get(w)
            total[w] = c if old is None else old + c
    return FreeElement(m, total)
