"""Enumerate the profinite genus of the examples.

Run with:  python3 demos/03_genus.py
"""

from graphmanifold import (
    check_homeomorphic,
    construct_scaled,
    dumps_manifold,
    is_profinitely_rigid,
    profinite_genus,
)
from graphmanifold.decider import modulus_of, units_mod

from manifolds import MIN, TRI, W1

print("=== rigidity reasons ===")
for m in (W1, TRI, MIN):
    rigid, reason = is_profinitely_rigid(m)
    print(m.name, "rigid:", rigid, " reason:", reason)

print()
print("=== the genus of W1 ===")
res = profinite_genus(W1)
print("representatives:", [r.name for r in res.representatives])
print("kappa per representative:", dict(res.kappas))
print()
print("the nontrivial partner as a document:")
print(dumps_manifold(res.representatives[1]))

print("=== scaled partners for each unit kappa ===")
modulus = modulus_of(W1, W1)
for kappa in units_mod(modulus):
    out = construct_scaled(W1, kappa)
    same = check_homeomorphic(out, W1) is not None
    print("kappa = %d: homeomorphic to W1: %s" % (kappa, same))
