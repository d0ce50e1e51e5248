"""Truncated multivariate Hilbert series and the product formulas they satisfy.

A series is a table of coefficients over N_0^theta, complete up to a total
degree bound.  The product-formula constructor takes PBW-style factor data:
a factor of height h and degree vector v contributes 1 + t^v + ... + t^{(h-1)v},
and an unbounded factor contributes the full geometric series 1/(1 - t^v).
The number of unbounded factors is the polynomial growth degree of the
algebra the series counts, so `growth_degree` is formula metadata, not an
asymptotic estimate.
"""

from __future__ import annotations

from .weyl import InfiniteRootSystem, positive_roots

__all__ = [
    "TruncatedSeries",
    "series_product_formula",
    "series_one",
    "extension_check",
    "growth_degree",
    "hilbert_nichols",
    "hilbert_distinguished",
]


class TruncatedSeries:
    def __init__(self, theta: int, bound: int, coeffs: dict,
                 infinite_factors: int | None = None):
        self.theta = theta
        self.bound = bound
        self.coeffs = {tuple(k): v for k, v in coeffs.items()
                       if v and sum(k) <= bound}
        self.infinite_factors = infinite_factors

    def coefficient(self, alpha) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.theta == other.theta
        bound = min(self.bound, other.bound)
        out: dict = {}
        for a, ca in self.coeffs.items():
            ta = sum(a)
            if ta > bound:
                continue
            for b, cb in other.coeffs.items():
                if ta + sum(b) > bound:
                    continue
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out.get(key, 0) + ca * cb
        inf = None
        if self.infinite_factors is not None and other.infinite_factors is not None:
            inf = self.infinite_factors + other.infinite_factors
        return TruncatedSeries(self.theta, bound, out, inf)

    def equal_up_to(self, other: "TruncatedSeries", bound: int | None = None) -> bool:
        if bound is None:
            bound = min(self.bound, other.bound)
        if bound > min(self.bound, other.bound):
            raise ValueError("comparison beyond truncation bounds")
        keys = {k for k in set(self.coeffs) | set(other.coeffs) if sum(k) <= bound}
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in keys)

    def matches_dimensions(self, dims: dict, bound: int | None = None) -> bool:
        if bound is None:
            bound = self.bound
        keys = {tuple(k) for k in set(self.coeffs) | set(dims) if sum(k) <= bound}
        return all(self.coeffs.get(k, 0) == dims.get(k, 0) for k in keys)

    def to_json(self):
        items = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        return {"bound": self.bound,
                "coefficients": [{"degree": list(k), "dim": v} for k, v in items]}

    def __repr__(self):
        items = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        inner = ", ".join(f"{k}:{v}" for k, v in items[:12])
        more = "..." if len(items) > 12 else ""
        return f"TruncatedSeries(<={self.bound}; {inner}{more})"


def series_one(theta: int, bound: int) -> TruncatedSeries:
    return TruncatedSeries(theta, bound, {tuple([0] * theta): 1}, 0)


def _factor_series(theta: int, bound: int, vector, height) -> TruncatedSeries:
    vector = tuple(vector)
    assert any(vector) and all(v >= 0 for v in vector), "factor vector must be nonzero, nonnegative"
    step = sum(vector)
    coeffs = {}
    e = 0
    while e * step <= bound and (height is None or e < height):
        coeffs[tuple(e * v for v in vector)] = 1
        e += 1
    return TruncatedSeries(theta, bound, coeffs, 1 if height is None else 0)


def series_product_formula(theta: int, numerators, denominators, bound: int) -> TruncatedSeries:
    """Expansion of prod (1 + t^u) * prod_{(v, h)} [h]_{t^v} to the bound,
    where [h]_{t^v} = 1 + t^v + ... + t^{(h-1) v} and h = None means the full
    geometric factor 1/(1 - t^v)."""
    out = series_one(theta, bound)
    for u in numerators:
        out = out * _factor_series(theta, bound, u, 2)
    for v, h in denominators:
        out = out * _factor_series(theta, bound, v, h)
    return out


def extension_check(h_sub: TruncatedSeries, h_quot: TruncatedSeries,
                    h_total: TruncatedSeries, bound: int | None = None) -> bool:
    """Coefficient-wise test of H_total = H_sub * H_quot, the Hilbert-series
    identity of a degree-preserving extension."""
    if bound is None:
        bound = min(h_sub.bound, h_quot.bound, h_total.bound)
    return (h_sub * h_quot).equal_up_to(h_total, bound)


def growth_degree(h: TruncatedSeries):
    """Number of unbounded factors in the product formula behind the series;
    'inconclusive' when the series does not carry formula metadata."""
    if h.infinite_factors is None:
        return "inconclusive"
    return h.infinite_factors


def hilbert_nichols(matrix, bound: int) -> TruncatedSeries:
    """prod over positive roots of (1 - t^{N_a a})/(1 - t^a)."""
    rs = positive_roots(matrix)
    if not rs.finite:
        raise InfiniteRootSystem("cannot form the Nichols Hilbert series")
    dens = [(r.coords, r.order) for r in rs.roots]
    return series_product_formula(matrix.theta, [], dens, bound)


def hilbert_distinguished(matrix, bound: int) -> TruncatedSeries:
    """Same product, with unbounded factors on the Cartan-root orbit."""
    rs = positive_roots(matrix)
    if not rs.finite:
        raise InfiniteRootSystem("cannot form the distinguished Hilbert series")
    dens = [(r.coords, None if r.is_cartan else r.order) for r in rs.roots]
    return series_product_formula(matrix.theta, [], dens, bound)
