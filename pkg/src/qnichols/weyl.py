"""Weyl groupoid machinery: reflections, orbits, root systems, Cartan roots.

Positive roots are found by a reflection-walk closure instead of a reduced
expression of the longest element: starting from the simple roots of every
reachable matrix, apply the reflections s_i until no new (object, root) pair
appears.  For finite generalized root systems both procedures enumerate the
same set; the walk needs no longest-word bookkeeping and extends naturally
to the Cartan-root orbit tracking.

Objects of the groupoid are deduplicated by their exact labelled Dynkin
diagram (no vertex relabeling), since the downstream relation catalogs are
label-sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braiding import (BraidingMatrix, cartan_matrix, dynkin_diagram,
                       is_cartan_vertex)

__all__ = [
    "Root",
    "RootSystem",
    "WeylOrbit",
    "reflect_braiding",
    "reflect_root",
    "weyl_orbit",
    "positive_roots",
    "cartan_roots_positive",
    "gkdim_distinguished",
    "distinguished_heights",
    "InfiniteRootSystem",
]

DEFAULT_HEIGHT_CAP = 30
DEFAULT_ORBIT_CAP = 10_000


class InfiniteRootSystem(RuntimeError):
    """Raised when an operation needs a finite root system but the walk capped."""


def reflect_braiding(q: BraidingMatrix, i: int) -> BraidingMatrix:
    """The reflected matrix rho_i(q), entry-wise
    q_jk q_ik^{-c_ij} q_ji^{-c_ik} q_ii^{c_ij c_ik}."""
    c = cartan_matrix(q)
    n = q.order
    e = q.exponents
    rows = []
    for j in range(q.theta):
        cij = c.entry(i, j)
        row = []
        for k in range(q.theta):
            cik = c.entry(i, k)
            row.append((e[j][k] - cij * e[i][k] - cik * e[j][i]
                        + cij * cik * e[i][i]) % n)
        rows.append(tuple(row))
    return BraidingMatrix(n, tuple(rows))


def reflect_root(q: BraidingMatrix, i: int, beta) -> tuple[int, ...]:
    """s_i(beta) = beta - (sum_j c_ij beta_j) alpha_i."""
    c = cartan_matrix(q)
    coef = sum(c.entry(i, j) * b for j, b in enumerate(beta))
    out = list(beta)
    out[i] = beta[i] - coef
    return tuple(out)


@dataclass(frozen=True)
class Root:
    coords: tuple[int, ...]
    order: int | None  # N_alpha; None encodes infinite order (never happens here)
    is_cartan: bool

    @property
    def height(self) -> int:
        return sum(self.coords)

    def to_json(self):
        return {"coords": list(self.coords), "order": self.order,
                "cartan": self.is_cartan}


@dataclass
class RootSystem:
    matrix: BraidingMatrix
    roots: list[Root]
    finite: bool
    capped: bool
    orbit_size: int

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def coords_set(self):
        return {r.coords for r in self.roots}

    def to_json(self):
        return {"finite": self.finite, "capped": self.capped,
                "count": len(self.roots), "orbit_size": self.orbit_size,
                "roots": [r.to_json() for r in self.roots]}


@dataclass
class WeylOrbit:
    base: BraidingMatrix
    diagrams: dict  # canonical diagram key -> representative BraidingMatrix
    edges: list     # (source key, vertex, target key)
    capped: bool

    def __len__(self):
        return len(self.diagrams)

    def to_json(self):
        keys = {k: idx for idx, k in enumerate(sorted(self.diagrams, key=repr))}
        return {
            "size": len(self.diagrams),
            "capped": self.capped,
            "diagrams": [dynkin_diagram(self.diagrams[k]).to_json()
                         for k in sorted(self.diagrams, key=repr)],
            "edges": [{"from": keys[a], "vertex": i + 1, "to": keys[b]}
                      for a, i, b in self.edges],
        }


def weyl_orbit(q: BraidingMatrix, cap: int = DEFAULT_ORBIT_CAP) -> WeylOrbit:
    """BFS over labelled diagrams under the reflections rho_i."""
    start = dynkin_diagram(q).canonical_key()
    diagrams = {start: q}
    edges = []
    seen_edges = set()
    queue = [start]
    capped = False
    while queue:
        key = queue.pop(0)
        p = diagrams[key]
        for i in range(p.theta):
            r = reflect_braiding(p, i)
            rkey = dynkin_diagram(r).canonical_key()
            if rkey not in diagrams:
                if len(diagrams) >= cap:
                    capped = True
                    continue
                diagrams[rkey] = r
                queue.append(rkey)
            ekey = (min(key, rkey), i, max(key, rkey))
            if ekey not in seen_edges:
                seen_edges.add(ekey)
                edges.append((key, i, rkey))
    return WeylOrbit(q, diagrams, edges, capped)


def positive_roots(q: BraidingMatrix,
                   height_cap: int = DEFAULT_HEIGHT_CAP,
                   orbit_cap: int = DEFAULT_ORBIT_CAP) -> RootSystem:
    """Positive roots of q with root orders and Cartan flags.

    Every object of the orbit holds a growing set of flagged positive roots,
    initialized with its simple roots (flagged at Cartan vertices).  The
    reflection s_i transports roots between p and rho_i(p); iterating to a
    fixpoint enumerates the full positive system when it is finite.  Cap
    overruns flag the result instead of erroring.
    """
    theta = q.theta
    start = dynkin_diagram(q).canonical_key()
    objects = {start: q}
    cartans = {start: cartan_matrix(q)}
    rootsets: dict = {start: _simple_roots(q)}
    dirty = [start]
    capped = False

    while dirty:
        key = dirty.pop()
        p = objects[key]
        c = cartans[key]
        current = list(rootsets[key].items())
        for i in range(theta):
            target = reflect_braiding(p, i)
            tkey = dynkin_diagram(target).canonical_key()
            if tkey not in objects:
                if len(objects) >= orbit_cap:
                    capped = True
                    continue
                objects[tkey] = target
                cartans[tkey] = cartan_matrix(target)
                rootsets[tkey] = _simple_roots(target)
                dirty.append(tkey)
            tset = rootsets[tkey]
            crow = [c.entry(i, j) for j in range(theta)]
            changed = False
            for beta, flag in current:
                if all(b == 0 for k, b in enumerate(beta) if k != i):
                    continue  # beta = alpha_i reflects to -alpha_i
                coef = sum(cj * b for cj, b in zip(crow, beta))
                image = list(beta)
                image[i] = beta[i] - coef
                image = tuple(image)
                assert min(image) >= 0, "reflection left the positive cone"
                if sum(image) > height_cap:
                    capped = True
                    continue
                old = tset.get(image)
                if old is None or (flag and not old):
                    tset[image] = flag or (old or False)
                    changed = True
            if changed and tkey not in dirty:
                dirty.append(tkey)

    base = rootsets[start]
    roots = [Root(coords, q.root_order(coords), flag)
             for coords, flag in base.items()]
    roots.sort(key=lambda r: (r.height, r.coords))
    return RootSystem(q, roots, finite=not capped, capped=capped,
                      orbit_size=len(objects))


def _simple_roots(p: BraidingMatrix) -> dict:
    out = {}
    for i in range(p.theta):
        alpha = tuple(1 if j == i else 0 for j in range(p.theta))
        out[alpha] = is_cartan_vertex(p, i)
    return out


def cartan_roots_positive(q: BraidingMatrix, **kw) -> list[Root]:
    rs = positive_roots(q, **kw)
    if not rs.finite:
        raise InfiniteRootSystem("root walk did not close; no Cartan root set")
    return [r for r in rs.roots if r.is_cartan]


def gkdim_distinguished(q: BraidingMatrix, **kw) -> int:
    """GK dimension of the distinguished pre-Nichols algebra: |O^q_+|."""
    return len(cartan_roots_positive(q, **kw))


def distinguished_heights(q: BraidingMatrix, **kw) -> dict:
    """Height of each PBW generator in the distinguished quotient: N_beta for
    non-Cartan roots, None (infinity) on the Cartan orbit."""
    rs = positive_roots(q, **kw)
    if not rs.finite:
        raise InfiniteRootSystem("root walk did not close")
    return {r.coords: (None if r.is_cartan else r.order) for r in rs.roots}
