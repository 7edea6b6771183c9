"""Shared fixtures and randomized manifold generators for the test suite."""

from fractions import Fraction
from math import gcd

from graphmanifold import (
    BaseOrbifold,
    ConePoint,
    Edge,
    GluingMatrix,
    GraphManifold,
    MajorPiece,
    MINOR,
    fiber_flip,
    mirror,
    total_slope,
    twist_move,
    validate,
)
from graphmanifold.model import ends_at


def major(genus, orientable, cones):
    return MajorPiece(BaseOrbifold(genus, orientable, tuple(ConePoint(p, q) for p, q in cones)))


def W1():
    """Bipartite two-vertex manifold, all total slopes zero, genus 2."""
    return GraphManifold(
        "W1",
        {"x": major(0, True, [(5, 1), (5, 1)]),
         "y": major(0, True, [(5, -1), (5, -1)])},
        (Edge("e", "x", "y", GluingMatrix(2, 1, 5, 2)),))


def N2():
    """Partner of W1 with Seifert data scaled by kappa = 2."""
    return GraphManifold(
        "N2",
        {"x": major(0, True, [(5, 2), (5, 2)]),
         "y": major(0, True, [(5, -3), (5, -3)])},
        (Edge("e", "x", "y", GluingMatrix(6, 5, 5, 4)),))


def TRI():
    """Odd cycle (triangle), hence non-bipartite and rigid."""
    return GraphManifold(
        "TRI",
        {"v1": major(0, True, [(2, 1)]),
         "v2": major(0, True, [(2, 1)]),
         "v3": major(0, True, [(2, 1)])},
        (Edge("e12", "v1", "v2", GluingMatrix(0, 1, 1, 0)),
         Edge("e23", "v2", "v3", GluingMatrix(0, 1, 1, 0)),
         Edge("e31", "v3", "v1", GluingMatrix(0, 1, 1, 0))))


def MIN():
    """Major piece glued to a minor piece; rigid by the minor-piece rule."""
    return GraphManifold(
        "MIN",
        {"x": major(0, True, [(3, 1), (3, 1)]),
         "y": MINOR},
        (Edge("e", "x", "y", GluingMatrix(1, 1, 3, 2)),))


def W1_delta3():
    """W1 with the edge matrix entry delta moved from 2 to 3 (det kept -1)."""
    m = W1()
    return GraphManifold(
        "W1d3", dict(m.vertices),
        (Edge("e", "x", "y", GluingMatrix(3, 2, 5, 3)),))


def TRI_modified():
    """TRI with one cone point negated; distinct from TRI."""
    m = TRI()
    verts = dict(m.vertices)
    verts["v1"] = major(0, True, [(2, -1)])
    return GraphManifold("TRImod", verts, m.edges)


def fixtures():
    return [W1(), N2(), TRI(), MIN()]


# ---------------------------------------------------------------------------
# randomized manifolds

def random_matrix(rng, max_entry=9):
    """Determinant -1 matrix with gamma != 0 and all entries bounded."""
    while True:
        gamma = rng.choice([g for g in range(-max_entry, max_entry + 1) if g])
        delta = rng.randint(-max_entry, max_entry)
        if gcd(delta, gamma) != 1:
            continue
        # alpha*delta = -1 (mod gamma); shift alpha into a small range
        alpha = (-pow(delta, -1, abs(gamma))) % abs(gamma) if abs(gamma) > 1 else rng.randint(-3, 3)
        alpha -= abs(gamma) * rng.randint(0, 1)
        beta, rem = divmod(alpha * delta + 1, gamma)
        if rem:
            continue
        a = GluingMatrix(alpha, beta, gamma, delta)
        if max(abs(v) for v in a.entries()) <= max_entry:
            return a


def random_manifold(rng, max_vertices=5, max_p=7, max_entry=9, allow_minor=True):
    """Arbitrary valid manifold: random tree plus up to 2 extra edges.

    Major vertices get genus 1 so the base orbifold is always hyperbolic.
    """
    n = rng.randint(1, max_vertices)
    ids = ["v%d" % i for i in range(n)]
    vertices = {}
    for v in ids:
        vertices[v] = None  # decided after degrees are known
    edges = []
    for i in range(1, n):
        other = ids[rng.randrange(i)]
        edges.append(Edge("e%d" % len(edges), ids[i], other, random_matrix(rng, max_entry)))
    if n == 1:
        pass  # a single vertex still needs degree >= 1, add a loop
    extra = rng.randint(1 if n == 1 else 0, 2)
    for _ in range(extra):
        u, v = rng.choice(ids), rng.choice(ids)
        edges.append(Edge("e%d" % len(edges), u, v, random_matrix(rng, max_entry)))
    deg = {v: 0 for v in ids}
    for e in edges:
        deg[e.frm] += 1
        deg[e.to] += 1
    for v in ids:
        if (allow_minor and deg[v] == 1 and rng.random() < 0.2
                and minor_end_ok(edges, v)):
            vertices[v] = MINOR
            continue
        cones = []
        for _ in range(rng.randint(0, 3)):
            p = rng.choice([p for p in range(2, max_p + 1)])
            q = rng.choice([q for q in range(-p + 1, p) if q and gcd(p, q) == 1])
            cones.append((p, q))
        orientable = rng.random() < 0.8
        # orientable genus 1 or two crosscaps, so chi < 0 at any degree
        vertices[v] = major(1 if orientable else 2, orientable, cones)
    # no two minors adjacent (only possible if both endpoints got degree 1)
    for e in edges:
        if vertices[e.frm].minor and vertices[e.to].minor:
            vertices[e.to] = major(1, True, [])
    m = GraphManifold("R", vertices, tuple(edges))
    assert validate(m).ok, validate(m).violations
    return m


def minor_end_ok(edges, v):
    """alpha of the major-to-minor direction must be nonzero, no loop."""
    for e in edges:
        if e.is_loop() and v in (e.frm, e.to):
            return False
        if e.to == v:
            return e.matrix.alpha != 0
        if e.frm == v:
            return e.matrix.delta != 0
    return False


def random_bipartite_zero_slope(rng, max_vertices=4):
    """Bipartite manifold with every total slope zero and small modulus.

    Built on a random tree (trees are bipartite); per vertex the fractional
    part of the edge-end slope sum is cancelled by one cone and the integer
    part by a twist on an edge end.  Extra random cones are balanced by
    matching integer multiples.
    """
    n = rng.randint(2, max_vertices)
    ids = ["v%d" % i for i in range(n)]
    edges = []
    for i in range(1, n):
        other = ids[rng.randrange(i)]
        edges.append(Edge("e%d" % len(edges), ids[i], other, random_matrix(rng, 5)))
    vertices = {}
    cones = {v: [] for v in ids}
    for v in ids:
        for _ in range(rng.randint(0, 2)):
            p = rng.choice([2, 3, 5])
            q = rng.choice([q for q in range(1, p)])
            cones[v].append((p, q))
    # zero every slope: cone for the fractional part, end twist for the rest
    for v in ids:
        s = Fraction(0)
        for i, e in enumerate(edges):
            if e.frm == v:
                s += Fraction(e.matrix.delta, e.matrix.gamma)
            if e.to == v:
                a = e.matrix
                s += Fraction(-a.alpha, a.gamma)
        s -= sum((Fraction(q, p) for p, q in cones[v]), Fraction(0))
        if s.denominator > 1:
            cones[v].append((s.denominator, s.numerator % s.denominator))
            s = Fraction((s.numerator - s.numerator % s.denominator), s.denominator)
        k = int(s)
        if k:
            i = next(i for i, e in enumerate(edges) if v in (e.frm, e.to))
            e = edges[i]
            a = e.matrix
            if e.frm == v:
                new = GluingMatrix(a.alpha, a.beta - k * a.alpha, a.gamma, a.delta - k * a.gamma)
            else:
                new = GluingMatrix(a.alpha + k * a.gamma, a.beta + k * a.delta, a.gamma, a.delta)
            edges[i] = Edge(e.id, e.frm, e.to, new)
    for v in ids:
        vertices[v] = major(1, True, cones[v])
    m = GraphManifold("B", vertices, tuple(edges))
    assert validate(m).ok, validate(m).violations
    assert all(total_slope(m, v) == 0 for v in ids)
    return m


def random_move(rng, m):
    """One homeomorphism-preserving move applied to m."""
    kind = rng.choice(["flip", "mirror", "twist"])
    if kind == "flip":
        return fiber_flip(m, rng.choice(sorted(m.vertices)))
    if kind == "mirror":
        return mirror(m)
    majors = [v for v in sorted(m.vertices) if not m.vertices[v].minor]
    rng.shuffle(majors)
    for v in majors:
        targets = [("cone", i) for i in range(len(m.vertices[v].base.cones))]
        targets += [("end", e.id, role) for e, role in ends_at(m, v)]
        if len(targets) < 2:
            continue
        ta, tb = rng.sample(targets, 2)
        return twist_move(m, v, ta, tb, rng.randint(-3, 3))
    return mirror(m)


def scramble(rng, m, moves=5):
    for _ in range(rng.randint(0, moves)):
        m = random_move(rng, m)
    return m


# one PASS/FAIL line per acceptance criterion, emitted after the test run
ACCEPTANCE_LINES = []
