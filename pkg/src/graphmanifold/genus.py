"""Construction of kappa-scaled partner manifolds and enumeration of the
finite profinite genus."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (
    FROM,
    TO,
    BaseOrbifold,
    ConePoint,
    Edge,
    GluingMatrix,
    GraphManifold,
    MajorPiece,
    ends_at,
    validate,
)
from .invariants import bipartition, total_slope, cone_slope_sum
from .decider import check_homeomorphic, modulus_of, units_mod

NON_BIPARTITE = "NON_BIPARTITE"
NONZERO_SLOPE = "NONZERO_SLOPE"
MINOR_PIECE = "MINOR_PIECE"
TRIVIAL_UNIT_GROUP = "TRIVIAL_UNIT_GROUP"
GENUS_COLLAPSE = "GENUS_COLLAPSE"
NOT_RIGID = "NOT_RIGID"


@dataclass(frozen=True)
class GenusResult:
    representatives: tuple  # of GraphManifold, pairwise non-homeomorphic
    kappas: tuple  # of (representative name, kappa residue)
    rigid: bool


def _least_abs(x, n):
    """Representative of x mod n in (-n/2, n/2]."""
    r = x % n
    if 2 * r > n:
        r -= n
    return r


def construct_scaled(m, kappa, bip=None):
    """Partner manifold with Seifert data scaled by kappa across the bipartition.

    R-vertex cones get q' = kappa*q mod p in (0, p); B-vertices use the
    inverse unit.  Edge-end deltas are scaled modulo gamma and the integer
    slope excess at each vertex is cancelled on its lexicographically first
    edge end, so all total slopes stay zero.
    """
    if bip is None:
        bip = bipartition(m)
    if bip is None:
        raise ValueError("manifold is not bipartite")
    if any(p.minor for p in m.vertices.values()):
        raise ValueError("manifold has a minor piece")
    for v in m.vertices:
        if total_slope(m, v) != 0:
            raise ValueError("total slope at %s is nonzero" % v)
    modulus = modulus_of(m, m)
    if modulus == 1:
        kappa, kinv = 0, 0
    else:
        from math import gcd
        if not 0 < kappa < modulus or gcd(kappa, modulus) != 1:
            raise ValueError("kappa must be a unit modulo %d" % modulus)
        kinv = pow(kappa, -1, modulus)

    def scale_at(v):
        return kappa if v in bip.classR else kinv

    vertices = {}
    for vid in sorted(m.vertices):
        b = m.vertices[vid].base
        cones = tuple(ConePoint(cp.p, (scale_at(vid) * cp.q) % cp.p) for cp in b.cones)
        vertices[vid] = MajorPiece(BaseOrbifold(b.genus, b.orientable, cones))

    # delta of each end in its based-at direction; loops cannot occur
    deltas = {}
    for e in m.edges:
        g = abs(e.matrix.gamma)
        deltas[(e.id, FROM)] = _least_abs(scale_at(e.frm) * e.matrix.delta, g)
        deltas[(e.id, TO)] = _least_abs(scale_at(e.to) * -e.matrix.alpha, g)

    for vid in sorted(m.vertices):
        ends = ends_at(m, vid)
        tau = sum(
            (Fraction(deltas[(e.id, role)], e.matrix.gamma) for e, role in ends),
            Fraction(0)) - cone_slope_sum(vertices[vid])
        assert tau.denominator == 1, "slope excess must be integral"
        e0, role0 = min(ends, key=lambda er: (er[0].id, er[1]))
        deltas[(e0.id, role0)] -= int(tau) * e0.matrix.gamma

    edges = []
    for e in sorted(m.edges, key=lambda e: e.id):
        gamma = e.matrix.gamma
        delta = deltas[(e.id, FROM)]
        alpha = -deltas[(e.id, TO)]
        assert (alpha * delta + 1) % gamma == 0, "beta must come out integral"
        beta = (alpha * delta + 1) // gamma
        edges.append(Edge(e.id, e.frm, e.to, GluingMatrix(alpha, beta, gamma, delta)))

    out = GraphManifold("%s.kappa%d" % (m.name, kappa), vertices, tuple(edges))
    rep = validate(out)
    assert rep.ok, rep.violations
    return out


def profinite_genus(m):
    """All manifolds with the same profinite completion, up to homeomorphism.

    Rigid immediately when the graph is non-bipartite, a minor piece is
    present, or some total slope is nonzero; otherwise one partner per unit
    kappa, deduplicated by the homeomorphism decider (mirror allowed).
    """
    bip = bipartition(m)
    if (bip is None
            or any(p.minor for p in m.vertices.values())
            or any(total_slope(m, v) != 0 for v in m.vertices)):
        return GenusResult((m,), ((m.name, 1),), True)
    modulus = modulus_of(m, m)
    units = units_mod(modulus)
    reps = [m]
    kappas = [(m.name, 1 if modulus > 1 else 0)]
    for kappa in units:
        n = construct_scaled(m, kappa, bip)
        if not any(check_homeomorphic(n, r) for r in reps):
            reps.append(n)
            kappas.append((n.name, kappa))
    return GenusResult(tuple(reps), tuple(kappas), len(reps) == 1)


def is_profinitely_rigid(m):
    """(rigid, reason); reason names the first applicable rigidity cause."""
    if bipartition(m) is None:
        return True, NON_BIPARTITE
    if any(p.minor for p in m.vertices.values()):
        return True, MINOR_PIECE
    if any(total_slope(m, v) != 0 for v in m.vertices):
        return True, NONZERO_SLOPE
    if len(units_mod(modulus_of(m, m))) == 1:
        return True, TRIVIAL_UNIT_GROUP
    result = profinite_genus(m)
    if result.rigid:
        return True, GENUS_COLLAPSE
    return False, NOT_RIGID
