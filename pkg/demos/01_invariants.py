"""Walk through the basic invariants of a decorated JSJ graph.

Run with:  python3 demos/01_invariants.py
"""

from graphmanifold import (
    bipartition,
    dumps_manifold,
    fiber_flip,
    is_residually_p,
    orbifold_euler_char,
    total_slope,
    twist_move,
    validate,
)
from graphmanifold.model import degree

from manifolds import MIN, TRI, W1

print("=== the manifold W1, as a JSON document ===")
print(dumps_manifold(W1))

print("=== structural validation ===")
for m in (W1, TRI, MIN):
    print(m.name, "valid:", validate(m).ok)

print()
print("=== per-vertex invariants ===")
for m in (W1, TRI, MIN):
    for v in sorted(m.vertices):
        piece = m.vertices[v]
        chi = (orbifold_euler_char(piece, degree(m, v))
               if not piece.minor else "(minor piece)")
        print("%s.%s  degree %d  chi %s  total slope %s" % (
            m.name, v, degree(m, v), chi, total_slope(m, v)))

print()
print("=== bipartition of the underlying graph ===")
for m in (W1, TRI, MIN):
    b = bipartition(m)
    if b is None:
        print(m.name, "is not bipartite (odd cycle)")
    else:
        print(m.name, "classes:", sorted(b.classR), sorted(b.classB))

print()
print("=== moves leave the total slopes alone ===")
flipped = fiber_flip(W1, "x")
twisted = twist_move(W1, "x", ("cone", 0), ("cone", 1), 3)
for v in sorted(W1.vertices):
    print("slope at", v, "after flip:", total_slope(flipped, v),
          " after twist pair:", total_slope(twisted, v))
print("twisted cones at x:",
      [(c.p, c.q) for c in twisted.vertices["x"].base.cones])

print()
print("=== residually-p pieces ===")
for m in (W1, MIN):
    for v in sorted(m.vertices):
        flags = {p: is_residually_p(m.vertices[v], p) for p in (2, 3, 5)}
        print("%s.%s residually p: %s" % (m.name, v, flags))
