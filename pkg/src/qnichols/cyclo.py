"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is a vector of rationals over the power basis
zeta^0, ..., zeta^{phi(N)-1}, fully reduced modulo the N-th cyclotomic
polynomial.  Equality is therefore decidable coefficient-wise, which is what
relation checking downstream relies on.  Scalars of different orders are
combined by lifting both to Q(zeta_lcm).

No floating point is used anywhere; coefficients are `fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "CycScalar",
    "root_of_unity",
    "rational",
    "mult_order",
    "q_integer",
    "q_binomial",
    "q_factorial",
    "euler_phi",
    "cyclotomic_polynomial",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    assert n >= 1
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (little-endian coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, little-endian, monic of degree phi(n)."""
    assert n >= 1
    if n == 1:
        return (-1, 1)
    # (x^n - 1) / prod_{d | n, d < n} Phi_d
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _zeta_power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta_n^k for 0 <= k < n as integer vectors over the power basis."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    rows = []
    for k in range(phi):
        row = [0] * phi
        row[k] = 1
        rows.append(tuple(row))
    for k in range(phi, n):
        prev = rows[k - 1]
        shifted = [0] + list(prev)
        lead = shifted.pop()
        if lead:
            shifted = [c - lead * m for c, m in zip(shifted, mod[:phi])]
        rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_power_dict(n: int, powers: dict[int, Fraction]) -> tuple[Fraction, ...]:
    """Collapse a {exponent: coefficient} dict into the power basis of Q(zeta_n)."""
    phi = euler_phi(n)
    table = _zeta_power_table(n)
    out = [_ZERO] * phi
    for e, c in powers.items():
        if not c:
            continue
        row = table[e % n]
        for i in range(phi):
            if row[i]:
                out[i] += c * row[i]
    return tuple(out)


class CycScalar:
    """An element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(coeffs) == phi, "coefficient vector must have length phi(N)"
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycScalar is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> "CycScalar":
        return CycScalar(order, [_ZERO] * euler_phi(order))

    @staticmethod
    def one(order: int = 1) -> "CycScalar":
        c = [_ZERO] * euler_phi(order)
        c[0] = _ONE
        return CycScalar(order, c)

    @staticmethod
    def from_rational(x, order: int = 1) -> "CycScalar":
        c = [_ZERO] * euler_phi(order)
        c[0] = Fraction(x)
        return CycScalar(order, c)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return self.coeffs[0]

    def lift(self, order: int) -> "CycScalar":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        assert order % self.order == 0
        step = order // self.order
        powers = {i * step: c for i, c in enumerate(self.coeffs) if c}
        return CycScalar(order, _reduce_power_dict(order, powers))

    def _common(self, other: "CycScalar"):
        if self.order == other.order:
            return self, other
        m = _lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        other = _coerce(other, self.order)
        a, b = self._common(other)
        return CycScalar(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        other = _coerce(other, self.order)
        # rational factors need no convolution; this is the common case in
        # normal-form reduction loops
        if other.is_rational():
            c = other.coeffs[0]
            if not c:
                return CycScalar.zero(self.order)
            if c == 1:
                return self
            return CycScalar(self.order, [x * c for x in self.coeffs])
        if self.is_rational():
            c = self.coeffs[0]
            if not c:
                return CycScalar.zero(other.order)
            if c == 1:
                return other
            return CycScalar(other.order, [x * c for x in other.coeffs])
        a, b = self._common(other)
        n = a.order
        phi = euler_phi(n)
        conv = [_ZERO] * (2 * phi - 1 if phi else 1)
        ac, bc = a.coeffs, b.coeffs
        for i, x in enumerate(ac):
            if not x:
                continue
            for j, y in enumerate(bc):
                if y:
                    conv[i + j] += x * y
        table = _zeta_power_table(n)
        out = list(conv[:phi])
        for k in range(phi, len(conv)):
            c = conv[k]
            if c:
                row = table[k % n]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return CycScalar(n, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        n = self.order
        mod = [Fraction(c) for c in cyclotomic_polynomial(n)]
        # extended Euclid in Q[x]: u*self + v*Phi_n = 1
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            r1 = _poly_trim(r1)
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                powers = {i: c for i, c in enumerate(inv)}
                return CycScalar(n, _reduce_power_dict(n, powers))
            q, r = _poly_divmod(r0, r1)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, r

    def __truediv__(self, other):
        other = _coerce(other, self.order)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.order) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        n, coeffs = _descend_key(self.order, self.coeffs)
        return hash((n, coeffs))

    # -- io -----------------------------------------------------------------

    def to_json(self):
        return {"order": self.order,
                "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> "CycScalar":
        return CycScalar(obj["order"], [Fraction(p, q) for p, q in obj["coeffs"]])

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mon = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{c}*{mon}")
        out = " + ".join(parts).replace("+ -", "- ")
        return out


def _coerce(x, order: int) -> CycScalar:
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycScalar.from_rational(x, order)
    raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def _descend_cache(order: int, coeffs: tuple) -> tuple:
    # smallest cyclotomic field containing the element, for a stable hash
    for d in sorted(_divisors(order)):
        if d == order:
            break
        step = order // d
        phi_d = euler_phi(d)
        # try to write the element in Q(zeta_d): solve by re-lifting basis
        basis = []
        for i in range(phi_d):
            powers = {i * step: _ONE}
            basis.append(_reduce_power_dict(order, powers))
        sol = _solve_in_span(basis, coeffs)
        if sol is not None:
            return (d, tuple(sol))
    return (order, coeffs)


def _descend_key(order: int, coeffs: tuple) -> tuple:
    return _descend_cache(order, coeffs)


def _solve_in_span(basis, target):
    """Solve sum c_i basis_i = target over Q, or None.  Small dense system."""
    rows = len(target)
    cols = len(basis)
    # Gaussian elimination on the transpose
    mat = [[Fraction(basis[j][i]) for j in range(cols)] + [Fraction(target[i])]
           for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    sol = [_ZERO] * cols
    for i, c in enumerate(pivots):
        sol[c] = mat[i][cols]
    for i in range(rows):
        if all(not mat[i][c] for c in range(cols)) and mat[i][cols]:
            return None
    # verify (cheap, keeps this safe against rank deficiencies)
    for i in range(rows):
        acc = sum((sol[j] * basis[j][i] for j in range(cols)), _ZERO)
        if acc != target[i]:
            return None
    return sol


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return tuple(out)


def _poly_trim(p):
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return list(p)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _poly_trim([Fraction(x) for x in b])
    q = [_ZERO] * max(1, len(a) - len(b) + 1)
    while len(_poly_trim(a)) >= len(b) and any(a):
        a = _poly_trim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
    return q, _poly_trim(a)


# -- public operations ------------------------------------------------------

def root_of_unity(order: int, k: int = 1) -> CycScalar:
    """zeta_order^k in canonical form."""
    assert order >= 1
    return CycScalar(order, _reduce_power_dict(order, {k % order: _ONE}))


def rational(x) -> CycScalar:
    return CycScalar.from_rational(x)


def mult_order(x: CycScalar):
    """Least n >= 1 with x^n = 1, or None when x is not a root of unity.

    The roots of unity inside Q(zeta_N) are exactly the lcm(2, N)-th ones,
    so a single power test decides membership.
    """
    if x.is_zero():
        raise ZeroDivisionError("mult_order of zero")
    m = x.order if x.order % 2 == 0 else 2 * x.order
    if not (x ** m).is_one():
        return None
    for d in _divisors(m):
        if (x ** d).is_one():
            return d
    return m


def q_integer(n: int, q: CycScalar) -> CycScalar:
    """(n)_q = 1 + q + ... + q^{n-1}."""
    assert n >= 0
    acc = CycScalar.zero(q.order)
    power = CycScalar.one(q.order)
    for _ in range(n):
        acc = acc + power
        power = power * q
    return acc


def q_binomial(n: int, k: int, q: CycScalar) -> CycScalar:
    """Gaussian binomial via the q-Pascal recursion (division-free)."""
    assert 0 <= k <= n
    row = [CycScalar.one(q.order)]
    for m in range(1, n + 1):
        prev = row
        row = [CycScalar.one(q.order)]
        qp = q
        for j in range(1, m):
            row.append(prev[j - 1] + qp * prev[j])
            qp = qp * q
        row.append(CycScalar.one(q.order))
    return row[k]


def q_factorial(n: int, q: CycScalar) -> CycScalar:
    acc = CycScalar.one(q.order)
    for m in range(1, n + 1):
        acc = acc * q_integer(m, q)
    return acc
