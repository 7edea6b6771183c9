"""Numerical invariants and homeomorphism-preserving moves.

Rationals are plain ``fractions.Fraction`` values: always reduced, positive
denominator, structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (
    FROM,
    ConePoint,
    Edge,
    GluingMatrix,
    GraphManifold,
    MajorPiece,
    BaseOrbifold,
    end_matrix,
    ends_at,
)


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of the vertex set; classR contains the smallest vertex id."""

    classR: frozenset
    classB: frozenset


def orbifold_euler_char(piece, deg):
    """chi of the base orbifold of a major piece with the given boundary count.

    Orientable: 2 - 2g - deg - sum(1 - 1/p_i); non-orientable g is the
    crosscap count and the leading term is 2 - g.
    """
    if piece.minor:
        raise ValueError("minor piece stores no base orbifold data")
    if deg < 1:
        raise ValueError("degree must be >= 1")
    b = piece.base
    c = 2 - 2 * b.genus if b.orientable else 2 - b.genus
    chi = Fraction(c - deg)
    for cp in b.cones:
        chi -= 1 - Fraction(1, cp.p)
    return chi


def cone_slope_sum(piece):
    """sum q_i/p_i over the cone points (0 for a minor piece)."""
    if piece.minor:
        return Fraction(0)
    return sum((Fraction(cp.q, cp.p) for cp in piece.base.cones), Fraction(0))


def total_slope(m, v):
    """tau(v) = sum of delta/gamma over edge ends based at v minus sum q_i/p_i.

    For a minor vertex there is no cone correction; with the validation rule
    alpha != 0 at minor ends this makes tau(minor) != 0 always.
    """
    tau = Fraction(0)
    for e, role in ends_at(m, v):
        a = end_matrix(e, role)
        tau += Fraction(a.delta, a.gamma)
    return tau - cone_slope_sum(m.vertices[v])


def bipartition(m):
    """The 2-coloring of the graph, or None if some odd cycle (or loop) exists."""
    color = {}
    for start in sorted(m.vertices):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for e, _role in ends_at(m, v):
                if e.is_loop():
                    return None
                w = e.to if e.frm == v else e.frm
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    lo = min(m.vertices)
    r = frozenset(v for v, c in color.items() if c == color[lo])
    b = frozenset(v for v, c in color.items() if c != color[lo])
    return Bipartition(r, b)


def fiber_flip(m, v):
    """Reverse the fibre and base orientations of the piece at v.

    Negates every matrix on an edge with exactly one end at v; loop matrices
    are conjugated by -I and so unchanged.  An involution.  Total slopes at
    every vertex (including v) are unchanged: they only involve the ratios
    delta/gamma.
    """
    if v not in m.vertices:
        raise KeyError(v)
    edges = []
    for e in m.edges:
        if (e.frm == v) != (e.to == v):
            edges.append(Edge(e.id, e.frm, e.to, e.matrix.negated()))
        else:
            edges.append(e)
    return GraphManifold(m.name, dict(m.vertices), tuple(edges))


def _twist_end(edge, role, k):
    """Dehn twist on one edge end: delta += k*gamma on the side based at role."""
    a = edge.matrix
    if role == FROM:
        new = GluingMatrix(a.alpha, a.beta + k * a.alpha, a.gamma, a.delta + k * a.gamma)
    else:
        new = GluingMatrix(a.alpha - k * a.gamma, a.beta - k * a.delta, a.gamma, a.delta)
    return Edge(edge.id, edge.frm, edge.to, new)


def twist_move(m, v, target_a, target_b, k):
    """Slope-preserving pair of Dehn twists at the major vertex v.

    Targets are ("cone", index) or ("end", edge_id, role).  target_a is
    twisted by k; target_b receives the compensating sign so that tau(v) is
    unchanged (a cone twist contributes -k to tau, an edge twist +k).
    """
    piece = m.vertices[v]
    if piece.minor:
        raise ValueError("twists are only defined at major vertices")
    if target_a == target_b:
        raise ValueError("the two twist targets must differ")

    own_ends = {(e.id, role) for e, role in ends_at(m, v)}

    def check(t):
        if t[0] == "cone":
            if not 0 <= t[1] < len(piece.base.cones):
                raise ValueError("no cone #%r at vertex %s" % (t[1], v))
        elif t[0] == "end":
            if (t[1], t[2]) not in own_ends:
                raise ValueError("edge end %r is not at vertex %s" % (t[1:], v))
        else:
            raise ValueError("bad twist target %r" % (t,))

    check(target_a)
    check(target_b)
    kb = -k if target_a[0] == target_b[0] else k

    vertices = dict(m.vertices)
    edges = list(m.edges)

    def apply(t, kk):
        if t[0] == "cone":
            b = vertices[v].base
            cones = list(b.cones)
            cp = cones[t[1]]
            cones[t[1]] = ConePoint(cp.p, cp.q + kk * cp.p)
            vertices[v] = MajorPiece(BaseOrbifold(b.genus, b.orientable, tuple(cones)))
        else:
            _, eid, role = t
            i = next(i for i, e in enumerate(edges) if e.id == eid)
            edges[i] = _twist_end(edges[i], role, kk)

    apply(target_a, k)
    apply(target_b, kb)
    return GraphManifold(m.name, vertices, tuple(edges))


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_residually_p(piece, p):
    """Whether the Seifert piece has residually-p fundamental group.

    Major: every cone order a power of p, and orientable base unless p = 2.
    Minor: the Klein-bottle I-bundle group is residually 2 and nothing else.
    """
    if not _is_prime(p):
        raise ValueError("%r is not prime" % (p,))
    if piece.minor:
        return p == 2
    b = piece.base
    if p != 2 and not b.orientable:
        return False
    for cp in b.cones:
        n = cp.p
        while n % p == 0:
            n //= p
        if n != 1:
            return False
    return True
