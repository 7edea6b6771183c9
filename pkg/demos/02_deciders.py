"""Decide homeomorphism and profinite isomorphism on the example pairs.

Run with:  python3 demos/02_deciders.py
"""

from graphmanifold import check_homeomorphic, check_profinite_iso, mirror

from manifolds import MIN, N2, TRI, W1

print("=== homeomorphism ===")
pairs = [(W1, W1), (W1, mirror(W1)), (W1, N2), (TRI, MIN)]
for a, b in pairs:
    w = check_homeomorphic(a, b)
    if w is None:
        print("%s vs %s: distinct" % (a.name, b.name))
    else:
        print("%s vs %s: homeomorphic (mirrored=%s, flips=%s, twists=%s)" % (
            a.name, b.name, w.mirrored, w.flips, dict(w.twists)))

print()
print("=== profinite isomorphism of the fundamental groups ===")
for a, b in [(W1, N2), (N2, W1), (W1, TRI), (TRI, TRI)]:
    v = check_profinite_iso(a, b)
    line = "%s vs %s: %s" % (a.name, b.name, v.kind)
    if v.profinite:
        w = v.profinite
        line += "  kappa = %d mod %d, scaled class %s" % (
            w.kappa, w.modulus, list(w.bipartite_orientation[0]))
    print(line)

print()
print("W1 and N2 have non-isomorphic but profinitely isomorphic groups:")
print("  homeomorphic:", check_homeomorphic(W1, N2) is not None)
print("  profinite verdict:", check_profinite_iso(W1, N2).kind)
