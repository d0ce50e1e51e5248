"""Braiding matrices of diagonal type and their generalized Dynkin diagrams.

A braiding is stored as a theta x theta matrix of exponents a_ij with
q_ij = zeta_N^{a_ij} for a common cyclotomic order N.  Keeping exponents
instead of field elements makes the bilinear form q(alpha, beta), Cartan
entries and reflections pure integer arithmetic mod N; field elements are
materialized on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cyclo import CycScalar, root_of_unity

__all__ = [
    "BraidingMatrix",
    "DynkinDiagram",
    "GeneralizedCartanMatrix",
    "Obstruction",
    "dynkin_diagram",
    "cartan_matrix",
    "is_cartan_vertex",
    "finiteness_obstructions",
]


@lru_cache(maxsize=None)
def _zeta(order: int, e: int) -> CycScalar:
    return root_of_unity(order, e)


@dataclass(frozen=True)
class BraidingMatrix:
    order: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.order
        rows = tuple(tuple(e % n for e in row) for row in self.exponents)
        assert all(len(row) == len(rows) for row in rows), "matrix must be square"
        object.__setattr__(self, "exponents", rows)

    @property
    def theta(self) -> int:
        return len(self.exponents)

    # -- scalar views -------------------------------------------------------

    def zeta_power(self, e: int) -> CycScalar:
        return _zeta(self.order, e % self.order)

    def entry_exp(self, i: int, j: int) -> int:
        return self.exponents[i][j]

    def entry(self, i: int, j: int) -> CycScalar:
        return self.zeta_power(self.exponents[i][j])

    def twiddle_exp(self, i: int, j: int) -> int:
        """Exponent of q_ij q_ji (the Dynkin edge label)."""
        return (self.exponents[i][j] + self.exponents[j][i]) % self.order

    def twiddle(self, i: int, j: int) -> CycScalar:
        return self.zeta_power(self.twiddle_exp(i, j))

    # -- bilinear form q(alpha, beta) = prod q_ij^{a_i b_j} ------------------

    def bilinear_exp(self, alpha, beta) -> int:
        total = 0
        for i, a in enumerate(alpha):
            if not a:
                continue
            row = self.exponents[i]
            for j, b in enumerate(beta):
                if b:
                    total += a * row[j] * b
        return total % self.order

    def bilinear(self, alpha, beta) -> CycScalar:
        return self.zeta_power(self.bilinear_exp(alpha, beta))

    def q_alpha_exp(self, alpha) -> int:
        return self.bilinear_exp(alpha, alpha)

    def root_order(self, alpha) -> int:
        """N_alpha = ord q(alpha, alpha)."""
        e = self.q_alpha_exp(alpha)
        return self.order // gcd(self.order, e) if e else 1

    # -- io -------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "size": self.theta,
                "exponents": [list(r) for r in self.exponents]}

    @staticmethod
    def from_json(obj) -> "BraidingMatrix":
        assert obj.get("size", len(obj["exponents"])) == len(obj["exponents"])
        return BraidingMatrix(obj["order"], tuple(tuple(r) for r in obj["exponents"]))

    def __repr__(self):
        rows = "; ".join(" ".join(str(e) for e in row) for row in self.exponents)
        return f"BraidingMatrix(order={self.order}, [{rows}])"


def _canonical_label(order: int, e: int) -> tuple[int, int]:
    e %= order
    g = gcd(order, e) if e else order
    return (order // g, (e // g) % (order // g) if e else 0)


@dataclass(frozen=True)
class DynkinDiagram:
    """Vertices labelled q_ii, edges labelled q_ij q_ji (only when != 1)."""

    order: int
    vertex_exps: tuple[int, ...]
    edge_exps: tuple[tuple[int, int, int], ...]  # (i, j, exponent), i < j

    @property
    def theta(self) -> int:
        return len(self.vertex_exps)

    def vertex_labels(self) -> list[CycScalar]:
        return [_zeta(self.order, e) for e in self.vertex_exps]

    def edge_labels(self) -> dict[tuple[int, int], CycScalar]:
        return {(i, j): _zeta(self.order, e) for i, j, e in self.edge_exps}

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b, _ in self.edge_exps:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def canonical_key(self):
        """Exact labelled diagram, invariant under change of ambient order."""
        verts = tuple(_canonical_label(self.order, e) for e in self.vertex_exps)
        edges = tuple(sorted((i, j) + _canonical_label(self.order, e)
                             for i, j, e in self.edge_exps))
        return (verts, edges)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "vertices": [repr(v) for v in self.vertex_labels()],
            "vertex_exponents": list(self.vertex_exps),
            "edges": [{"i": i + 1, "j": j + 1, "label": repr(_zeta(self.order, e)),
                       "exponent": e} for i, j, e in self.edge_exps],
        }


def dynkin_diagram(q: BraidingMatrix) -> DynkinDiagram:
    verts = tuple(q.entry_exp(i, i) for i in range(q.theta))
    edges = []
    for i in range(q.theta):
        for j in range(i + 1, q.theta):
            t = q.twiddle_exp(i, j)
            if t:
                edges.append((i, j, t))
    return DynkinDiagram(q.order, verts, tuple(edges))


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def theta(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def to_json(self):
        return [list(r) for r in self.rows]


def _cartan_entry(order: int, a_ii: int, twiddle: int) -> int:
    """-min{ n : (n+1)_{q_ii} (1 - q_ii^n qt) = 0 } in exponent arithmetic.

    (n+1)_{q_ii} vanishes iff ord(q_ii) | n+1, and 1 - q_ii^n qt vanishes iff
    n*a_ii + t = 0 mod order.  The scan always terminates before n = ord(q_ii)
    because the first condition fires there.
    """
    ord_qii = order // gcd(order, a_ii)
    n = 0
    while True:
        if (n + 1) % ord_qii == 0:
            return -n
        if (n * a_ii + twiddle) % order == 0:
            return -n
        n += 1


def cartan_matrix(q: BraidingMatrix) -> GeneralizedCartanMatrix:
    """Generalized Cartan matrix with c_ii = 2.

    Requires q_ii != 1 for every vertex; with root-of-unity entries the
    defining minimum always exists.
    """
    n = q.order
    rows = []
    for i in range(q.theta):
        a = q.entry_exp(i, i)
        if a % n == 0:
            raise ValueError(f"vertex {i + 1} has q_ii = 1; Cartan scan undefined")
        row = []
        for j in range(q.theta):
            if i == j:
                row.append(2)
            else:
                row.append(_cartan_entry(n, a, q.twiddle_exp(i, j)))
        rows.append(tuple(row))
    return GeneralizedCartanMatrix(tuple(rows))


def is_cartan_vertex(q: BraidingMatrix, i: int) -> bool:
    """True iff q_ij q_ji = q_ii^{c_ij} for all j != i."""
    c = cartan_matrix(q)
    a = q.entry_exp(i, i)
    for j in range(q.theta):
        if j == i:
            continue
        if (q.twiddle_exp(i, j) - c.entry(i, j) * a) % q.order != 0:
            return False
    return True


@dataclass(frozen=True)
class Obstruction:
    kind: str
    vertices: tuple[int, ...]
    detail: str

    def to_json(self):
        return {"kind": self.kind, "vertices": [v + 1 for v in self.vertices],
                "detail": self.detail}


def finiteness_obstructions(q: BraidingMatrix) -> list[Obstruction]:
    """Scan small subdiagrams for known certificates of an infinite root system.

    Implemented predicates: a vertex labelled 1 with an incident edge; a
    two-vertex subdiagram of shape p --p^2-- (-p) with ord(p) > 2 (Cartan with
    indefinite Cartan matrix); a triangle whose edge labels do not multiply
    to 1; any cycle of length > 3.  An empty list is not a finiteness proof.
    """
    out = []
    n = q.order
    diag = dynkin_diagram(q)
    adj = {i: set(diag.neighbors(i)) for i in range(q.theta)}

    for i in range(q.theta):
        if diag.vertex_exps[i] % n == 0 and adj[i]:
            out.append(Obstruction("unit-vertex-with-edge", (i,),
                                   "vertex labelled 1 carries an edge"))

    half = n // 2 if n % 2 == 0 else None
    for i in range(q.theta):
        for j in adj[i]:
            if j <= i:
                continue
            for a, b in ((i, j), (j, i)):
                p = diag.vertex_exps[a]
                ord_p = n // gcd(n, p) if p else 1
                if ord_p <= 2 or half is None:
                    continue
                minus_p = (p + half) % n
                if diag.vertex_exps[b] == minus_p and q.twiddle_exp(a, b) == (2 * p) % n:
                    out.append(Obstruction(
                        "indefinite-rank-two", (a, b),
                        "subdiagram p --p^2-- (-p) with ord(p) > 2"))

    for i in range(q.theta):
        for j in adj[i]:
            if j <= i:
                continue
            for k in adj[i] & adj[j]:
                if k <= j:
                    continue
                s = (q.twiddle_exp(i, j) + q.twiddle_exp(i, k)
                     + q.twiddle_exp(j, k)) % n
                if s:
                    out.append(Obstruction(
                        "triangle-product", (i, j, k),
                        "triangle edge labels do not multiply to 1"))

    cyc = _shortest_long_cycle(adj, q.theta)
    if cyc is not None:
        out.append(Obstruction("long-cycle", tuple(cyc),
                               f"cycle of length {len(cyc)} > 3"))
    return out


def _shortest_long_cycle(adj, theta):
    """Any simple cycle of length >= 4, or None.

    DFS over simple paths; diagrams here are tiny (theta <= 8), so brute
    force is fine.
    """
    best = None

    def extend(path, seen):
        nonlocal best
        if best is not None and len(path) >= len(best):
            return
        head = path[-1]
        for nxt in sorted(adj[head]):
            if nxt == path[0] and len(path) >= 4:
                if best is None or len(path) < len(best):
                    best = list(path)
            elif nxt not in seen and nxt > path[0]:
                extend(path + [nxt], seen | {nxt})

    for start in range(theta):
        extend([start], {start})
    return best


def load_matrix(path_or_obj) -> BraidingMatrix:
    """Read a braiding matrix from a JSON file path, file object or dict."""
    if isinstance(path_or_obj, dict):
        obj = path_or_obj
    elif hasattr(path_or_obj, "read"):
        obj = json.load(path_or_obj)
    else:
        with open(path_or_obj) as fh:
            obj = json.load(fh)
    if "family" in obj:
        from .families import build_family
        return build_family(obj)
    return BraidingMatrix.from_json(obj)
