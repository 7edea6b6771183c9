"""Shared example manifolds for the demo scripts."""

from graphmanifold import (
    BaseOrbifold,
    ConePoint,
    Edge,
    GluingMatrix,
    GraphManifold,
    MajorPiece,
    MINOR,
)


def sfs(genus, orientable, cones):
    return MajorPiece(BaseOrbifold(genus, orientable,
                                   tuple(ConePoint(p, q) for p, q in cones)))


# two Seifert pieces over a disk-with-two-cone-points base, glued along a
# torus; total slope zero at both vertices, so the profinite genus is open
W1 = GraphManifold(
    "W1",
    {"x": sfs(0, True, [(5, 1), (5, 1)]),
     "y": sfs(0, True, [(5, -1), (5, -1)])},
    (Edge("e", "x", "y", GluingMatrix(2, 1, 5, 2)),))

# the same graph with Seifert data scaled by 2 across the bipartition
N2 = GraphManifold(
    "N2",
    {"x": sfs(0, True, [(5, 2), (5, 2)]),
     "y": sfs(0, True, [(5, -3), (5, -3)])},
    (Edge("e", "x", "y", GluingMatrix(6, 5, 5, 4)),))

# a triangle of pieces: the odd cycle makes the graph non-bipartite
TRI = GraphManifold(
    "TRI",
    {"v1": sfs(0, True, [(2, 1)]),
     "v2": sfs(0, True, [(2, 1)]),
     "v3": sfs(0, True, [(2, 1)])},
    (Edge("e12", "v1", "v2", GluingMatrix(0, 1, 1, 0)),
     Edge("e23", "v2", "v3", GluingMatrix(0, 1, 1, 0)),
     Edge("e31", "v3", "v1", GluingMatrix(0, 1, 1, 0))))

# a major piece glued to the I-bundle over the Klein bottle
MIN = GraphManifold(
    "MIN",
    {"x": sfs(0, True, [(3, 1), (3, 1)]),
     "y": MINOR},
    (Edge("e", "x", "y", GluingMatrix(1, 1, 3, 2)),))
