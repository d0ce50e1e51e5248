"""Constructors for the cataloged families of diagonal braidings.

Each family is specified by a small descriptor (name, rank, parameter order N,
a subset J of vertices, and for the multi-diagram families a variant tag).
The constructor emits the braiding matrix in a fixed gauge: q_ij carries the
whole edge label and q_ji = 1 for i < j, so diagrams determine matrices
deterministically and golden tests are reproducible.

Families:

  CartanG2(N)                     two vertices q, q^3 joined by q^-3
  SuperA(theta, N, J)             type A chain with odd vertices J
  SuperB(theta, N, J)             A_{theta-1}(q^2; J) chain ending in q
  SuperD(theta, N, J, variant)    variant "chain", "triangle" or "fork"
  D21alpha(N, variant)            variant "path", "minus-path" or "triangle"
  F4(N, variant)                  rank-4 diagrams "a".."f"
  G3(N, variant)                  rank-3 diagrams "a".."d"
  StdB(theta, J)                  standard B: chain over -zeta_3^2 ending in zeta_3
  StdG2(variant)                  standard G2 diagrams "a".."c" at order 8

The ambient cyclotomic order is lcm(2, N) so that -1 is always available.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braiding import BraidingMatrix

__all__ = ["FamilySpec", "FamilyError", "build_family", "catalog_samples"]


class FamilyError(ValueError):
    """A family descriptor violates the side conditions of its catalog entry."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    theta: int
    order: int
    J: frozenset = field(default_factory=frozenset)
    variant: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(int(j) for j in self.J))

    @staticmethod
    def from_json(obj) -> "FamilySpec":
        return FamilySpec(
            family=obj["family"],
            theta=int(obj.get("theta", _DEFAULT_THETA.get(obj["family"], 0))),
            order=int(obj.get("order", _DEFAULT_ORDER.get(obj["family"], 0))),
            J=frozenset(obj.get("J", [])),
            variant=obj.get("variant"),
        )

    def to_json(self) -> dict:
        out = {"family": self.family, "theta": self.theta, "order": self.order}
        if self.J:
            out["J"] = sorted(self.J)
        if self.variant is not None:
            out["variant"] = self.variant
        return out

    def __str__(self):
        j = "{" + ",".join(str(v) for v in sorted(self.J)) + "}"
        var = f", {self.variant}" if self.variant else ""
        return f"{self.family}(theta={self.theta}, N={self.order}, J={j}{var})"


_DEFAULT_THETA = {"CartanG2": 2, "D21alpha": 3, "F4": 4, "G3": 3, "StdG2": 2}
_DEFAULT_ORDER = {"StdB": 3, "StdG2": 8}


def _ambient(n: int) -> int:
    return n if n % 2 == 0 else 2 * n


def _super_a_labels(theta: int, p: int, J, m: int):
    """Vertex/edge exponents of the type-A chain with parameter zeta_m^p.

    Walk from the right end: the last vertex fixes itself from the chain
    condition, every other vertex is determined by whether it is odd (in J,
    label -1, edges inverting) or even (label inverse to both edges).
    """
    assert theta >= 1
    vertex = [0] * theta
    edge = {}
    half = m // 2
    if theta in J:
        vertex[theta - 1] = half
        right = p
    else:
        vertex[theta - 1] = p
        right = (-p) % m
    if theta >= 2:
        edge[(theta - 2, theta - 1)] = right
    for i in range(theta - 1, 0, -1):
        e_right = edge[(i - 1, i)]
        if i in J:
            vertex[i - 1] = half
            nxt = (-e_right) % m
        else:
            vertex[i - 1] = (-e_right) % m
            nxt = e_right
        if i >= 2:
            edge[(i - 2, i - 1)] = nxt
    return vertex, edge


def _assemble(order: int, vertex, edges) -> BraidingMatrix:
    theta = len(vertex)
    rows = [[0] * theta for _ in range(theta)]
    for i in range(theta):
        rows[i][i] = vertex[i] % order
    for (i, j), e in edges.items():
        assert i < j
        rows[i][j] = e % order
    return BraidingMatrix(order, tuple(tuple(r) for r in rows))


def _check(cond: bool, message: str):
    if not cond:
        raise FamilyError(message)


def build_family(spec) -> BraidingMatrix:
    if isinstance(spec, dict):
        spec = FamilySpec.from_json(spec)
    builder = _BUILDERS.get(spec.family)
    if builder is None:
        raise FamilyError(f"unknown family {spec.family!r}")
    return builder(spec)


def _build_cartan_g2(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta == 2, "CartanG2 has rank 2")
    _check(s.order > 3, "CartanG2 needs a parameter of order > 3")
    n = s.order
    return _assemble(n, [1, 3], {(0, 1): (-3) % n})


def _build_super_a(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta >= 1, "rank must be positive")
    _check(s.order > 2, "SuperA needs ord(q) > 2")
    _check(s.J and s.J <= set(range(1, s.theta + 1)),
           "SuperA needs a nonempty J inside I_theta")
    m = _ambient(s.order)
    p = m // s.order
    vertex, edge = _super_a_labels(s.theta, p, s.J, m)
    return _assemble(m, vertex, edge)


def _build_super_b(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta >= 2, "SuperB needs rank >= 2")
    _check(s.order not in (1, 2, 4), "SuperB needs ord(q) != 2, 4")
    _check(s.J and s.J <= set(range(1, s.theta)),
           "SuperB needs a nonempty J avoiding the last vertex")
    m = _ambient(s.order)
    p = m // s.order
    vertex, edge = _super_a_labels(s.theta - 1, (2 * p) % m, s.J, m)
    vertex.append(p)
    edge[(s.theta - 2, s.theta - 1)] = (-2 * p) % m
    return _assemble(m, vertex, edge)


def _build_super_d(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta >= 3, "SuperD needs rank >= 3")
    _check(s.order > 2, "SuperD needs ord(q) > 2")
    m = _ambient(s.order)
    p = m // s.order
    half = m // 2
    t = s.theta
    if s.variant == "chain":
        _check(s.J and s.J <= set(range(1, t)),
               "chain variant carries J inside the A part")
        vertex, edge = _super_a_labels(t - 1, p, s.J, m)
        vertex.append((2 * p) % m)
        edge[(t - 2, t - 1)] = (-2 * p) % m
        return _assemble(m, vertex, edge)
    if s.variant == "triangle":
        _check(t - 1 in s.J and s.J <= set(range(1, t)),
               "triangle variant needs theta-1 in J")
        if t == 3:
            vertex = [half if 1 in s.J else p]
            edge = {}
        else:
            vertex, edge = _super_a_labels(t - 2, p, s.J & set(range(1, t - 1)), m)
        vertex += [half, half]
        edge[(t - 3, t - 2)] = (-p) % m
        edge[(t - 3, t - 1)] = (-p) % m
        edge[(t - 2, t - 1)] = (2 * p) % m
        return _assemble(m, vertex, edge)
    if s.variant == "fork":
        _check(s.J and s.J <= set(range(1, t - 1)),
               "fork variant carries J inside the first theta-2 vertices")
        if t == 3:
            vertex = [half if 1 in s.J else (-p) % m]
            edge = {}
        else:
            vertex, edge = _super_a_labels(t - 2, (-p) % m, s.J, m)
        vertex += [(-p) % m, (-p) % m]
        edge[(t - 3, t - 2)] = p
        edge[(t - 3, t - 1)] = p
        return _assemble(m, vertex, edge)
    raise FamilyError("SuperD variant must be chain, triangle or fork")


def _build_d21alpha(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta == 3, "D(2,1;alpha) has rank 3")
    _check(s.order > 2, "D(2,1;alpha) sample needs ord > 2")
    m = _ambient(s.order)
    p = m // s.order
    half = m // 2
    if s.variant == "path":
        # vertices (q, -1, q), edges (q^-1, q^-1); the hidden third parameter
        # s = (qr)^-1 must avoid 1 and -1
        _check(s.order != 4, "path variant needs (qr)^-1 != -1, excluded at order 4")
        return _assemble(m, [p, half, p], {(0, 1): (-p) % m, (1, 2): (-p) % m})
    if s.variant == "minus-path":
        # q = -1: vertices (-1, -1, r), edges (-1, r^-1)
        return _assemble(m, [half, half, p], {(0, 1): half, (1, 2): (-p) % m})
    if s.variant == "triangle":
        # all vertices -1; edges (-1, r, s) with product 1 and r, s != -1
        return _assemble(m, [half, half, half],
                         {(0, 1): half, (1, 2): p, (0, 2): (half - p) % m})
    raise FamilyError("D21alpha variant must be path, minus-path or triangle")


_F4_SHAPES = {
    "a": ([2, 2, 1, "h"], {(0, 1): -2, (1, 2): -2, (2, 3): -1}),
    "b": ([2, 2, "h", "h"], {(0, 1): -2, (1, 2): -2, (2, 3): 1}),
    "c": ([2, "h", "h", 1], {(0, 1): -2, (1, 2): 2, (1, 3): -1, (2, 3): -1}),
    "d": ([2, "h", "h", "h"], {(0, 1): -2, (1, 2): 1, (1, 3): 2, (2, 3): -3}),
    "e": ([2, 2, "h", -3], {(0, 1): -2, (1, 2): -2, (2, 3): 3}),
    "f": ([2, 1, "h", -3], {(0, 1): -2, (1, 2): -1, (2, 3): 3}),
}

_G3_SHAPES = {
    "a": (["h", 1, 3], {(0, 1): -1, (1, 2): -3}),
    "b": (["h", "h", 3], {(0, 1): 1, (1, 2): -3}),
    "c": (["h-1", "h", 3], {(0, 1): 2, (1, 2): -3}),
    "d": ([1, "h", "h"], {(0, 1): -2, (0, 2): -1, (1, 2): 3}),
}


def _shape_to_matrix(n: int, shape) -> BraidingMatrix:
    m = _ambient(n)
    p = m // n
    half = m // 2
    vertex_spec, edge_spec = shape

    def resolve(v):
        if v == "h":
            return half
        if v == "h-1":
            return (half - p) % m
        return (v * p) % m

    vertex = [resolve(v) for v in vertex_spec]
    edges = {k: (v * p) % m for k, v in edge_spec.items()}
    return _assemble(m, vertex, edges)


def _build_f4(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta == 4, "F(4) has rank 4")
    _check(s.order >= 4, "F(4) needs ord(q) >= 4")
    _check(s.variant in _F4_SHAPES, "F4 variant must be one of a..f")
    return _shape_to_matrix(s.order, _F4_SHAPES[s.variant])


def _build_g3(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta == 3, "G(3) has rank 3")
    _check(s.order > 3, "G(3) needs ord(q) > 3")
    _check(s.variant in _G3_SHAPES, "G3 variant must be one of a..d")
    return _shape_to_matrix(s.order, _G3_SHAPES[s.variant])


def _build_std_b(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta >= 2, "StdB needs rank >= 2")
    _check(s.order == 3, "StdB is defined for zeta of order 3")
    _check(s.J <= set(range(1, s.theta)), "StdB carries J inside I_{theta-1}")
    # ambient order 6: zeta = z^2, -zeta^2 (the chain parameter) = z
    vertex, edge = _super_a_labels(s.theta - 1, 1, s.J, 6)
    vertex.append(2)
    edge[(s.theta - 2, s.theta - 1)] = 5
    return _assemble(6, vertex, edge)


_STDG2_SHAPES = {
    "a": ([2, 7], {(0, 1): 1}),
    "b": ([2, 4], {(0, 1): 3}),
    "c": ([1, 4], {(0, 1): 5}),
}


def _build_std_g2(s: FamilySpec) -> BraidingMatrix:
    _check(s.theta == 2, "StdG2 has rank 2")
    _check(s.order == 8, "StdG2 is defined at order 8")
    _check(s.variant in _STDG2_SHAPES, "StdG2 variant must be one of a..c")
    vertex, edge = _STDG2_SHAPES[s.variant]
    return _assemble(8, list(vertex), dict(edge))


_BUILDERS = {
    "CartanG2": _build_cartan_g2,
    "SuperA": _build_super_a,
    "SuperB": _build_super_b,
    "SuperD": _build_super_d,
    "D21alpha": _build_d21alpha,
    "F4": _build_f4,
    "G3": _build_g3,
    "StdB": _build_std_b,
    "StdG2": _build_std_g2,
}


def catalog_samples() -> list[FamilySpec]:
    """One concrete descriptor per catalog case split, used by property suites."""
    out = [
        FamilySpec("CartanG2", 2, 4),
        FamilySpec("CartanG2", 2, 6),
        FamilySpec("SuperA", 3, 5, frozenset({2})),
        FamilySpec("SuperA", 3, 5, frozenset({1, 2, 3})),
        FamilySpec("SuperA", 4, 5, frozenset({2})),
        FamilySpec("SuperB", 3, 5, frozenset({1})),
        FamilySpec("SuperB", 3, 5, frozenset({2})),
        FamilySpec("SuperB", 3, 3, frozenset({2})),
        FamilySpec("SuperB", 4, 3, frozenset({3})),
        FamilySpec("SuperD", 4, 5, frozenset({2}), "chain"),
        FamilySpec("SuperD", 4, 4, frozenset({2}), "chain"),
        FamilySpec("SuperD", 4, 3, frozenset({2}), "chain"),
        FamilySpec("SuperD", 4, 5, frozenset({3}), "chain"),
        FamilySpec("SuperD", 4, 4, frozenset({3}), "chain"),
        FamilySpec("SuperD", 4, 5, frozenset({3}), "triangle"),
        FamilySpec("SuperD", 4, 4, frozenset({3}), "triangle"),
        FamilySpec("SuperD", 4, 5, frozenset({2, 3}), "triangle"),
        FamilySpec("SuperD", 4, 4, frozenset({2, 3}), "triangle"),
        FamilySpec("SuperD", 4, 5, frozenset({2}), "fork"),
        FamilySpec("SuperD", 4, 4, frozenset({2}), "fork"),
        FamilySpec("SuperD", 4, 5, frozenset({1, 2}), "fork"),
        FamilySpec("SuperD", 4, 4, frozenset({1, 2}), "fork"),
        FamilySpec("D21alpha", 3, 5, frozenset(), "path"),
        FamilySpec("D21alpha", 3, 5, frozenset(), "minus-path"),
        FamilySpec("D21alpha", 3, 5, frozenset(), "triangle"),
        FamilySpec("StdB", 3, 3, frozenset({1})),
        FamilySpec("StdB", 3, 3, frozenset({2})),
        FamilySpec("StdB", 4, 3, frozenset({2})),
        FamilySpec("StdG2", 2, 8, frozenset(), "a"),
        FamilySpec("StdG2", 2, 8, frozenset(), "b"),
        FamilySpec("StdG2", 2, 8, frozenset(), "c"),
    ]
    for variant in "abcdef":
        out.append(FamilySpec("F4", 4, 5, frozenset(), variant))
        out.append(FamilySpec("F4", 4, 4, frozenset(), variant))
    out.append(FamilySpec("F4", 4, 6, frozenset(), "e"))
    out.append(FamilySpec("F4", 4, 6, frozenset(), "f"))
    for variant in "abcd":
        out.append(FamilySpec("G3", 3, 5, frozenset(), variant))
    out.append(FamilySpec("G3", 3, 4, frozenset(), "a"))
    out.append(FamilySpec("G3", 3, 6, frozenset(), "a"))
    out.append(FamilySpec("G3", 3, 6, frozenset(), "c"))
    return out
