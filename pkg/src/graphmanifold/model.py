"""Decorated JSJ graphs of closed orientable graph manifolds.

A manifold is stored as a finite graph whose vertices are Seifert fibred
pieces and whose edges carry 2x2 integer gluing matrices of determinant -1
between boundary tori.  Each edge is stored once, in a declared direction;
the matrix for the opposite direction is always derived with
``reverse_end`` and never stored.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class ConePoint:
    """Exceptional fibre invariants (p, q); p >= 2, gcd(p, q) = 1.

    q is deliberately unnormalised: (p, q) and (p, q + k*p) describe the
    same fibre up to a Dehn twist, and the twist bookkeeping matters.
    """

    p: int
    q: int


@dataclass(frozen=True)
class BaseOrbifold:
    """Base 2-orbifold of a major piece.

    genus is the orientable genus, or the crosscap count when
    non-orientable.  Boundary count is not stored; it equals the degree of
    the vertex in the ambient graph.
    """

    genus: int
    orientable: bool
    cones: tuple  # of ConePoint


@dataclass(frozen=True)
class MajorPiece:
    """Seifert piece whose base orbifold has negative Euler characteristic."""

    base: BaseOrbifold

    @property
    def minor(self):
        return False


@dataclass(frozen=True)
class MinorPiece:
    """The orientable I-bundle over the Klein bottle.

    Carries no parameters.  Its boundary torus has a canonical basis
    (central fibre h = x^2, secondary fibre z = y) coming from the
    Klein-bottle group <x, y | y^x = y^-1>, fixed up to sign.
    """

    @property
    def minor(self):
        return True


MINOR = MinorPiece()


@dataclass(frozen=True)
class GluingMatrix:
    """Integer matrix (alpha beta; gamma delta), det -1, gamma != 0.

    Maps the basis (fibre, section) of the source boundary torus to the
    basis (fibre, section) of the target one, acting on column vectors.
    """

    alpha: int
    beta: int
    gamma: int
    delta: int

    def det(self):
        return self.alpha * self.delta - self.beta * self.gamma

    def negated(self):
        return GluingMatrix(-self.alpha, -self.beta, -self.gamma, -self.delta)

    def entries(self):
        return (self.alpha, self.beta, self.gamma, self.delta)


def reverse_end(a):
    """Matrix of the same gluing read in the opposite direction.

    For det -1 this is the inverse (-delta beta; gamma -alpha); gamma and
    beta are unchanged and the operation is an involution.
    """
    if a.det() != -1:
        raise ValueError("gluing matrix must have determinant -1, got %d" % a.det())
    return GluingMatrix(-a.delta, a.beta, a.gamma, -a.alpha)


@dataclass(frozen=True)
class Edge:
    """Undirected edge stored once, matrix in the frm -> to direction."""

    id: str
    frm: str
    to: str
    matrix: GluingMatrix

    def is_loop(self):
        return self.frm == self.to


@dataclass(frozen=True)
class GraphManifold:
    name: str
    vertices: dict  # id -> MajorPiece | MinorPiece
    edges: tuple  # of Edge


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple  # of (code, location, message)


# Edge ends.  An "end" of an edge is one of its two incidences; for a loop
# both ends sit at the same vertex.  Role "from" is the stored direction.

FROM, TO = "from", "to"


def ends_at(m, v):
    """Edge ends incident to v, as (edge, role) pairs in deterministic order."""
    out = []
    for e in sorted(m.edges, key=lambda e: e.id):
        if e.frm == v:
            out.append((e, FROM))
        if e.to == v:
            out.append((e, TO))
    return out


def end_matrix(edge, role):
    """Gluing matrix in the direction based at the given end's vertex."""
    if role == FROM:
        return edge.matrix
    return reverse_end(edge.matrix)


def degree(m, v):
    return len(ends_at(m, v))


def _chi_negative(base, deg):
    # orbifold Euler characteristic < 0, computed with integer arithmetic:
    # chi = c - deg - sum(1 - 1/p) with c = 2 - 2g (orientable) or 2 - g.
    c = 2 - 2 * base.genus if base.orientable else 2 - base.genus
    lead = c - deg - len(base.cones)
    # chi = lead + sum(1/p) ; compare against 0 without fractions
    num, den = 0, 1
    for cp in base.cones:
        num = num * cp.p + den
        den *= cp.p
    return lead * den + num < 0


def validate(m):
    """Check every structural invariant; report-valued, accepts anything."""
    bad = []

    def hit(code, loc, msg):
        bad.append((code, loc, msg))

    ids = set(m.vertices)
    for vid in sorted(m.vertices):
        piece = m.vertices[vid]
        if not piece.minor:
            b = piece.base
            for i, cp in enumerate(b.cones):
                if cp.p < 2 or gcd(cp.p, cp.q) != 1:
                    hit("GCD", "vertex %s cone %d" % (vid, i),
                        "cone (%d, %d): need p >= 2 and gcd(p, q) = 1" % (cp.p, cp.q))
            if not b.orientable and b.genus < 1:
                hit("CHI_NONNEG", "vertex %s" % vid,
                    "non-orientable base needs crosscap count >= 1")

    for e in sorted(m.edges, key=lambda e: e.id):
        a = e.matrix
        if e.frm not in ids or e.to not in ids:
            hit("CONNECTED", "edge %s" % e.id, "endpoint not a vertex id")
            continue
        if a.gamma == 0:
            hit("GAMMA_ZERO", "edge %s" % e.id, "fibre intersection number gamma is zero")
        if a.det() != -1:
            hit("DET", "edge %s" % e.id, "determinant %d, must be -1" % a.det())
        pf, pt = m.vertices[e.frm], m.vertices[e.to]
        if pf.minor and pt.minor:
            hit("MINOR_ADJ", "edge %s" % e.id, "two minor pieces glued together")
        elif pt.minor and not e.is_loop() and a.alpha == 0:
            # alpha of the major-to-minor direction (stored direction here)
            hit("MINOR_ALPHA", "edge %s" % e.id,
                "neighbour fibre lands in a fibre subgroup of the minor piece")
        elif pf.minor and not e.is_loop() and -a.delta == 0:
            # major-to-minor direction is the reverse; its alpha is -delta
            hit("MINOR_ALPHA", "edge %s" % e.id,
                "neighbour fibre lands in a fibre subgroup of the minor piece")

    for vid in sorted(m.vertices):
        piece = m.vertices[vid]
        deg = degree(m, vid)
        if deg < 1:
            hit("DEGREE", "vertex %s" % vid, "isolated vertex (degree 0)")
        if piece.minor:
            if deg != 1:
                hit("DEGREE", "vertex %s" % vid,
                    "minor piece must have degree exactly 1, has %d" % deg)
        else:
            if deg >= 1 and not _chi_negative(piece.base, deg):
                hit("CHI_NONNEG", "vertex %s" % vid,
                    "major base orbifold must have negative Euler characteristic")

    # connectivity of the underlying graph
    if m.vertices:
        seen = set()
        stack = [min(m.vertices)]
        adj = {v: set() for v in m.vertices}
        for e in m.edges:
            if e.frm in adj and e.to in adj:
                adj[e.frm].add(e.to)
                adj[e.to].add(e.frm)
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v] - seen)
        if seen != set(m.vertices):
            hit("CONNECTED", "manifold %s" % m.name,
                "underlying graph is not connected")
    else:
        hit("CONNECTED", "manifold %s" % m.name, "no vertices")

    bad.sort()
    return ValidationReport(ok=not bad, violations=tuple(bad))


def mirror(m):
    """Orientation reversal: cones (p,q) -> (p,-q), matrices (a b;c d) -> (a -b;-c d).

    An involution; negates every total slope and preserves validity.
    """
    verts = {}
    for vid, piece in m.vertices.items():
        if piece.minor:
            verts[vid] = piece
        else:
            b = piece.base
            cones = tuple(ConePoint(cp.p, -cp.q) for cp in b.cones)
            verts[vid] = MajorPiece(BaseOrbifold(b.genus, b.orientable, cones))
    edges = tuple(
        Edge(e.id, e.frm, e.to,
             GluingMatrix(e.matrix.alpha, -e.matrix.beta,
                          -e.matrix.gamma, e.matrix.delta))
        for e in m.edges)
    return GraphManifold(m.name, verts, edges)


def vertex_signature(m, v):
    """Homeomorphism-invariant local data used to prune isomorphism search.

    (kind, genus, orientable, sorted cone orders, degree, sorted |gamma| of
    incident edge ends).  Matched vertices of any witness must agree.
    """
    piece = m.vertices[v]
    gammas = tuple(sorted(abs(end_matrix(e, r).gamma) for e, r in ends_at(m, v)))
    if piece.minor:
        return ("minor", None, None, (), degree(m, v), gammas)
    b = piece.base
    orders = tuple(sorted(cp.p for cp in b.cones))
    return ("major", b.genus, b.orientable, orders, degree(m, v), gammas)
