"""Decision procedures: homeomorphism in normal form, and profinite
isomorphism via the bipartite kappa-congruence criterion.

Both searches are exhaustive over a finite witness space and return the
first witness in a fixed deterministic order, so output is reproducible:
homeomorphism witnesses are scanned mirror-setting-first, then candidate
graph isomorphisms, then flip subsets by size; profinite witnesses are
scanned candidate-isomorphism-first, then smallest kappa.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .model import (
    FROM,
    TO,
    mirror,
    reverse_end,
    vertex_signature,
)
from .invariants import bipartition, cone_slope_sum, total_slope


@dataclass(frozen=True)
class IsoCandidate:
    """Signature-preserving graph isomorphism candidate.

    vertex_map: vertex id of m1 -> vertex id of m2.
    edge_map: edge id of m1 -> (edge id of m2, reversed) where reversed
    means the stored directions disagree under the vertex map.
    """

    vertex_map: tuple  # of (v1, v2) pairs, sorted by v1
    edge_map: tuple  # of (e1, e2, reversed) triples, sorted by e1

    def vmap(self):
        return dict(self.vertex_map)

    def emap(self):
        return {a: (b, r) for a, b, r in self.edge_map}


@dataclass(frozen=True)
class HomeoWitness:
    iso: IsoCandidate
    flips: tuple  # vertex ids of m2 whose fibre orientation is reversed
    mirrored: bool
    cone_matchings: tuple  # of (vertex id of m1, tuple of cone index pairs)
    twists: tuple  # of ((edge id of m1, role), integer r)


@dataclass(frozen=True)
class ProfiniteWitness:
    iso: IsoCandidate
    flips: tuple
    edge_signs: tuple  # of (edge id of m1, +1 | -1)
    kappa: int
    modulus: int
    bipartite_orientation: tuple  # (kappa-scaled class of m1, its image in m2)


@dataclass(frozen=True)
class Verdict:
    kind: str  # "homeomorphic" | "equivalent" | "distinct"
    homeo: HomeoWitness | None = None
    profinite: ProfiniteWitness | None = None

    @property
    def distinct(self):
        return self.kind == "distinct"


def _pair_key(u, v):
    return (u, v) if u <= v else (v, u)


def iso_candidates(m1, m2):
    """All incidence-preserving bijections with equal vertex signatures.

    Yields IsoCandidate values in deterministic lexicographic order of the
    assignment of m1's sorted vertices.  Multi-edges and loops are handled;
    a matched loop is tried in both orientations.
    """
    vs1, vs2 = sorted(m1.vertices), sorted(m2.vertices)
    if len(vs1) != len(vs2) or len(m1.edges) != len(m2.edges):
        return
    sig1 = {v: vertex_signature(m1, v) for v in vs1}
    sig2 = {v: vertex_signature(m2, v) for v in vs2}

    pairs1, pairs2 = {}, {}
    for e in sorted(m1.edges, key=lambda e: e.id):
        pairs1.setdefault(_pair_key(e.frm, e.to), []).append(e)
    for e in sorted(m2.edges, key=lambda e: e.id):
        pairs2.setdefault(_pair_key(e.frm, e.to), []).append(e)

    def edge_assignments(vmap):
        groups = []
        for key in sorted(pairs1):
            u, v = key
            key2 = _pair_key(vmap[u], vmap[v])
            es1 = pairs1[key]
            es2 = pairs2.get(key2, [])
            if len(es1) != len(es2):
                return
            groups.append((es1, es2))
        per_group = []
        for es1, es2 in groups:
            opts = []
            for perm in itertools.permutations(es2):
                choices = []
                ok = True
                for a, b in zip(es1, perm):
                    if a.is_loop():
                        choices.append([(a.id, b.id, False), (a.id, b.id, True)])
                    else:
                        rev = vmap[a.frm] != b.frm
                        if vmap[a.frm] != (b.to if rev else b.frm):
                            ok = False
                            break
                        choices.append([(a.id, b.id, rev)])
                if ok:
                    opts.extend(itertools.product(*choices))
            if not opts:
                return
            per_group.append(opts)
        for combo in itertools.product(*per_group):
            triples = sorted(t for grp in combo for t in grp)
            yield IsoCandidate(tuple(sorted(vmap.items())), tuple(triples))

    def extend(i, vmap, used):
        if i == len(vs1):
            yield from edge_assignments(vmap)
            return
        v = vs1[i]
        for w in vs2:
            if w in used or sig1[v] != sig2[w]:
                continue
            ok = True
            for u in vs1[:i]:
                k1 = _pair_key(u, v)
                if len(pairs1.get(k1, [])) != len(pairs2.get(_pair_key(vmap[u], w), [])):
                    ok = False
                    break
            if ok and len(pairs1.get((v, v), [])) != len(pairs2.get((w, w), [])):
                ok = False
            if ok:
                vmap[v] = w
                yield from extend(i + 1, vmap, used | {w})
                del vmap[v]

    yield from extend(0, {}, frozenset())


def _cone_residues(piece, scale=1):
    """Sorted multiset of (p, scale*q mod p) over the cone points."""
    if piece.minor:
        return ()
    return tuple(sorted((cp.p, (scale * cp.q) % cp.p) for cp in piece.base.cones))


def _flip_sign(edge, flips):
    if edge.is_loop():
        return 1
    s = 1
    if edge.frm in flips:
        s = -s
    if edge.to in flips:
        s = -s
    return s


def _subsets(items):
    """Subsets ordered by size then lexicographically."""
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def _greedy_cone_matching(p1, p2):
    """One bijection of cone indices matching (p, q mod p) classes exactly."""
    if p1.minor:
        return ()
    free = {}
    for j, cp in enumerate(p2.base.cones):
        free.setdefault((cp.p, cp.q % cp.p), []).append(j)
    out = []
    for i, cp in enumerate(p1.base.cones):
        out.append((i, free[(cp.p, cp.q % cp.p)].pop(0)))
    return tuple(out)


def _try_twists(m1, t2, cand, flips):
    """Integer Dehn twists r per edge end making all matrices match, or None."""
    vmap = cand.vmap()
    edges2 = {e.id: e for e in t2.edges}
    edges1 = {e.id: e for e in m1.edges}
    twists = {}
    sums = {v: 0 for v in m1.vertices}
    for e1id, (e2id, rev) in sorted(cand.emap().items()):
        e1, e2 = edges1[e1id], edges2[e2id]
        a = e1.matrix
        b = e2.matrix if not rev else reverse_end(e2.matrix)
        if _flip_sign(e2, flips) < 0:
            b = b.negated()
        if b.gamma != a.gamma:
            return None
        d_from = a.delta - b.delta
        d_to = b.alpha - a.alpha
        if d_from % a.gamma or d_to % a.gamma:
            return None
        r_from, r_to = d_from // a.gamma, d_to // a.gamma
        if m1.vertices[e1.frm].minor and r_from != 0:
            return None
        if m1.vertices[e1.to].minor and r_to != 0:
            return None
        twists[(e1id, FROM)] = r_from
        twists[(e1id, TO)] = r_to
        sums[e1.frm] += r_from
        sums[e1.to] += r_to
    for v in m1.vertices:
        need = cone_slope_sum(m1.vertices[v]) - cone_slope_sum(t2.vertices[vmap[v]])
        if Fraction(sums[v]) != need:
            return None
    return tuple(sorted(twists.items()))


def check_homeomorphic(m1, m2):
    """Search for an orientation-insensitive homeomorphism witness.

    Exhausts both mirror settings, all signature-preserving graph
    isomorphisms and all fibre-flip subsets; per candidate the twist
    integers are forced and checked, so the search is complete.
    """
    for mirrored in (False, True):
        t2 = mirror(m2) if mirrored else m2
        res2 = {v: _cone_residues(t2.vertices[v]) for v in t2.vertices}
        res1 = {v: _cone_residues(m1.vertices[v]) for v in m1.vertices}
        for cand in iso_candidates(m1, t2):
            vmap = cand.vmap()
            if any(res1[v] != res2[vmap[v]] for v in res1):
                continue
            for flips in _subsets(sorted(t2.vertices)):
                twists = _try_twists(m1, t2, cand, flips)
                if twists is not None:
                    matchings = tuple(
                        (v, _greedy_cone_matching(m1.vertices[v], t2.vertices[vmap[v]]))
                        for v in sorted(m1.vertices))
                    return HomeoWitness(cand, flips, mirrored, matchings, twists)
    return None


def modulus_of(m1, m2):
    """lcm of all cone orders and all |gamma| of both manifolds."""
    vals = [1]
    for m in (m1, m2):
        for piece in m.vertices.values():
            if not piece.minor:
                vals.extend(cp.p for cp in piece.base.cones)
        vals.extend(abs(e.matrix.gamma) for e in m.edges)
    return lcm(*vals)


def units_mod(n):
    if n == 1:
        return [0]
    return [k for k in range(1, n) if gcd(k, n) == 1]


def _profinite_try(m1, m2, cand, flips, kappa, kinv, scaled, modulus):
    """Check GM-rigidity conditions (a), (c1), (c2) for one configuration."""
    vmap = cand.vmap()
    edges1 = {e.id: e for e in m1.edges}
    edges2 = {e.id: e for e in m2.edges}

    def scale_at(v):
        return kappa if v in scaled else kinv

    for v in sorted(m1.vertices):
        if _cone_residues(m1.vertices[v], scale_at(v)) != _cone_residues(m2.vertices[vmap[v]]):
            return None

    signs = {}
    for e1id, (e2id, rev) in sorted(cand.emap().items()):
        e1, e2 = edges1[e1id], edges2[e2id]
        a = e1.matrix
        b = e2.matrix if not rev else reverse_end(e2.matrix)
        if _flip_sign(e2, flips) < 0:
            b = b.negated()
        if b.gamma == a.gamma:
            sign = 1
        elif b.gamma == -a.gamma:
            # the residual sign is free only next to a non-orientable base
            free = any(
                not m1.vertices[v].minor and not m1.vertices[v].base.orientable
                for v in (e1.frm, e1.to))
            if not free:
                return None
            sign = -1
        else:
            return None
        g = abs(a.gamma)
        if (b.delta - sign * scale_at(e1.frm) * a.delta) % g:
            return None
        if (b.alpha - sign * scale_at(e1.to) * a.alpha) % g:
            return None
        signs[e1id] = sign
    return tuple(sorted(signs.items()))


def check_profinite_iso(m1, m2):
    """Decide whether the profinite completions of pi_1 are isomorphic.

    Returns Homeomorphic when a homeomorphism witness exists (this covers
    the kappa = +-1 degeneration), Equivalent with the kappa congruence
    witness for bipartite all-slopes-zero pairs, and Distinct otherwise.
    The kappa-scaled class is the bipartition class containing the smallest
    vertex id of m1; scanning every unit kappa covers both orientations.
    """
    hw = check_homeomorphic(m1, m2)
    if hw is not None:
        return Verdict("homeomorphic", homeo=hw)
    b1, b2 = bipartition(m1), bipartition(m2)
    if b1 is None or b2 is None:
        return Verdict("distinct")
    for m in (m1, m2):
        for v in m.vertices:
            if total_slope(m, v) != 0:
                return Verdict("distinct")
    modulus = modulus_of(m1, m2)
    scaled = b1.classR
    for cand in iso_candidates(m1, m2):
        vmap = cand.vmap()
        for kappa in units_mod(modulus):
            kinv = pow(kappa, -1, modulus) if modulus > 1 else 0
            for flips in _subsets(sorted(m2.vertices)):
                signs = _profinite_try(m1, m2, cand, flips, kappa, kinv, scaled, modulus)
                if signs is not None:
                    orient = (tuple(sorted(scaled)),
                              tuple(sorted(vmap[v] for v in scaled)))
                    return Verdict("equivalent", profinite=ProfiniteWitness(
                        cand, flips, signs, kappa, modulus, orient))
    return Verdict("distinct")


def kappa_solutions(constraints, modulus):
    """All units kappa mod modulus with kappa^scale = r (mod n) per constraint.

    Each constraint is (r, n, scale) with scale +1 or -1 and n dividing the
    modulus.  Brute force over the unit group.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    for r, n, scale in constraints:
        if n < 1 or modulus % n:
            raise ValueError("constraint modulus %d does not divide %d" % (n, modulus))
        if scale not in (1, -1):
            raise ValueError("scale must be +1 or -1")
    out = set()
    for k in units_mod(modulus):
        ok = True
        for r, n, scale in constraints:
            if scale == 1:
                if (k - r) % n:
                    ok = False
                    break
            else:
                # kappa^-1 = r (mod n)  <=>  kappa * r = 1 (mod n)
                if (k * r - 1) % n:
                    ok = False
                    break
        if ok:
            out.add(k)
    return out
