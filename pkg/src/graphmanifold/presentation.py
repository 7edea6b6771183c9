"""Finite presentations of the fundamental group and finite-quotient
fingerprints (homomorphism counts, subgroup counts).

The census is a soundness check for the deciders: groups with isomorphic
profinite completions have the same number of homomorphisms to every
finite group and the same number of index-n subgroups, so unequal counts
refute an Equivalent verdict while equal counts never prove one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .model import FROM, TO, ends_at, validate


@dataclass(frozen=True)
class Presentation:
    """generators: ordered names; relators: words of signed 1-based indices."""

    generators: tuple
    relators: tuple


@dataclass(frozen=True)
class FiniteGroupSpec:
    """Finite permutation group given by generators on {0..degree-1}."""

    name: str
    degree: int
    generators: tuple  # of permutation tuples


@dataclass(frozen=True)
class CensusVector:
    entries: tuple  # of (group name, hom count)


class BudgetExceeded(Exception):
    """Raised when a counting search exceeds its node budget."""


DEFAULT_BUDGET = 20_000_000


# ---------------------------------------------------------------------------
# words

def _inv(word):
    return tuple(-x for x in reversed(word))


def _pow(word, n):
    if n < 0:
        return _inv(word) * (-n)
    return word * n


def _commutator(a, b):
    return a + b + _inv(a) + _inv(b)


# ---------------------------------------------------------------------------
# presentations of pi_1

def _spanning_tree(m):
    """Edge ids of a BFS spanning tree from the smallest vertex id."""
    tree = set()
    seen = {min(m.vertices)}
    frontier = [min(m.vertices)]
    edges = sorted(m.edges, key=lambda e: e.id)
    while frontier:
        nxt = []
        for v in frontier:
            for e in edges:
                if e.id in tree:
                    continue
                if e.frm == v and e.to not in seen:
                    tree.add(e.id)
                    seen.add(e.to)
                    nxt.append(e.to)
                elif e.to == v and e.frm not in seen:
                    tree.add(e.id)
                    seen.add(e.frm)
                    nxt.append(e.frm)
        frontier = nxt
    return tree


def _sorted_ends(m, v):
    """Ends at v sorted by (neighbour id, edge id, role); end #0 is the
    defined boundary word, the rest get their own section generators."""
    def key(er):
        e, role = er
        neighbour = e.to if role == FROM else e.frm
        return (neighbour, e.id, 0 if role == FROM else 1)
    return sorted(ends_at(m, v), key=key)


def section_name(edge_id, role):
    """Section generator name for a non-#0 edge end: id, with ~ on the
    reverse end."""
    return edge_id if role == FROM else edge_id + "~"


def build_presentation(m):
    """Standard-form presentation of pi_1 from the decorated graph.

    Per major vertex: cone generators, section generators for every end
    but the first, handle generators and the central fibre; the first end
    carries the defined boundary word.  Spanning-tree edges contribute the
    two gluing relators directly, other edges through a stable letter.
    """
    assert validate(m).ok
    names = []
    index = {}

    def add(name):
        index[name] = len(names) + 1  # 1-based
        names.append(name)

    vs = sorted(m.vertices)
    ends = {v: _sorted_ends(m, v) for v in vs}
    tree = _spanning_tree(m)

    for v in vs:
        piece = m.vertices[v]
        if piece.minor:
            add("x_" + v)
            add("y_" + v)
            continue
        b = piece.base
        for i in range(len(b.cones)):
            add("a%d_%s" % (i + 1, v))
        for e, role in ends[v][1:]:
            add(section_name(e.id, role))
        if b.orientable:
            for i in range(b.genus):
                add("u%d_%s" % (i + 1, v))
                add("v%d_%s" % (i + 1, v))
        else:
            for i in range(b.genus):
                add("u%d_%s" % (i + 1, v))
        add("h_" + v)
    for e in sorted(m.edges, key=lambda e: e.id):
        if e.id not in tree:
            add("t_" + e.id)

    def gen(name):
        return (index[name],)

    relators = []
    fibre_word = {}
    section_word = {}

    for v in vs:
        piece = m.vertices[v]
        if piece.minor:
            x, y = gen("x_" + v), gen("y_" + v)
            relators.append(x + y + _inv(x) + y)
            fibre_word[v] = x + x
            (e0, r0), = ends[v]
            section_word[(e0.id, r0)] = y
            continue
        b = piece.base
        h = gen("h_" + v)
        cone_gens = [gen("a%d_%s" % (i + 1, v)) for i in range(len(b.cones))]
        sec_gens = [gen(section_name(e.id, role)) for e, role in ends[v][1:]]
        if b.orientable:
            handles = [(gen("u%d_%s" % (i + 1, v)), gen("v%d_%s" % (i + 1, v)))
                       for i in range(b.genus)]
            handle_word = tuple(x for u, w in handles for x in _commutator(u, w))
            handle_gens = [g for u, w in handles for g in (u, w)]
        else:
            us = [gen("u%d_%s" % (i + 1, v)) for i in range(b.genus)]
            handle_word = tuple(x for u in us for x in u + u)
            handle_gens = us
        for a, cp in zip(cone_gens, b.cones):
            relators.append(_pow(a, cp.p) + _pow(h, cp.q))
        for g in cone_gens + sec_gens:
            relators.append(_commutator(h, g))
        if b.orientable:
            for g in handle_gens:
                relators.append(_commutator(h, g))
        else:
            for u in handle_gens:
                relators.append(u + h + _inv(u) + h)
        fibre_word[v] = h
        body = tuple(x for a in cone_gens for x in a)
        body += tuple(x for s in sec_gens for x in s)
        body += handle_word
        e0, r0 = ends[v][0]
        section_word[(e0.id, r0)] = _inv(body)
        for (e, role), s in zip(ends[v][1:], sec_gens):
            section_word[(e.id, role)] = s

    for e in sorted(m.edges, key=lambda e: e.id):
        a = e.matrix
        hx, hy = fibre_word[e.frm], fibre_word[e.to]
        sx = section_word[(e.id, FROM)]
        sy = section_word[(e.id, TO)]
        lhs1, lhs2 = hx, sx
        if e.id not in tree:
            t = gen("t_" + e.id)
            lhs1 = _inv(t) + hx + t
            lhs2 = _inv(t) + sx + t
        relators.append(lhs1 + _inv(_pow(hy, a.alpha) + _pow(sy, a.gamma)))
        relators.append(lhs2 + _inv(_pow(hy, a.beta) + _pow(sy, a.delta)))

    return Presentation(tuple(names), tuple(relators))


def export_text(p):
    """Line-based text form: one generator list line, then one relator per
    line as run-length words like "a1_x^5 h_x^1"."""
    lines = [" ".join(p.generators)]
    for rel in p.relators:
        toks = []
        for idx, grp in itertools.groupby(rel, key=abs):
            exp = sum(1 if x > 0 else -1 for x in grp)
            if exp:
                toks.append("%s^%d" % (p.generators[idx - 1], exp))
        lines.append(" ".join(toks) if toks else "1")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# finite permutation groups

def _compose(a, b):
    """Apply a first, then b."""
    return tuple(b[x] for x in a)


def _perm_inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def group_elements(spec):
    """Closure of the generators; BFS, deterministic order."""
    ident = tuple(range(spec.degree))
    for g in spec.generators:
        if sorted(g) != list(ident):
            raise ValueError("%r is not a permutation of degree %d" % (g, spec.degree))
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in spec.generators:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order


def _assignment_order(p):
    """Static generator order: greedily complete relators early."""
    n = len(p.generators)
    relgens = [frozenset(abs(x) - 1 for x in rel) for rel in p.relators]
    remaining = set(range(n))
    order = []
    placed = set()
    while remaining:
        def score(g):
            done = sum(1 for rg in relgens if g in rg and rg <= placed | {g})
            touch = sum(1 for rg in relgens if g in rg)
            return (done, touch, -g)
        g = max(sorted(remaining), key=score)
        order.append(g)
        placed.add(g)
        remaining.remove(g)
    return order


def count_homs(p, spec, budget=DEFAULT_BUDGET):
    """Exact number of homomorphisms into the group generated by spec.

    Backtracking over generator images; a relator is checked as soon as all
    its generators are assigned.  Raises BudgetExceeded rather than ever
    returning a wrong count.
    """
    elements = group_elements(spec)
    ident = tuple(range(spec.degree))
    inv = {g: _perm_inverse(g) for g in elements}
    order = _assignment_order(p)
    pos = {g: i for i, g in enumerate(order)}
    checks = [[] for _ in range(len(order) + 1)]
    for rel in p.relators:
        gens = {abs(x) - 1 for x in rel}
        level = max((pos[g] for g in gens), default=-1) + 1
        checks[level].append(rel)
    for rel in checks[0]:
        # relator with no generators is the empty word
        if rel:
            raise AssertionError
    images = [None] * len(p.generators)
    nodes = 0

    def ev(rel):
        acc = ident
        for x in rel:
            g = images[abs(x) - 1]
            acc = _compose(acc, g if x > 0 else inv[g])
        return acc

    def rec(level):
        nonlocal nodes
        if level == len(order):
            return 1
        g = order[level]
        total = 0
        for img in elements:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("hom-count budget of %d nodes exceeded" % budget)
            images[g] = img
            if all(ev(rel) == ident for rel in checks[level + 1]):
                total += rec(level + 1)
        images[g] = None
        return total

    if not p.generators:
        return 1
    return rec(0)


def symmetric_group_spec(n):
    if n <= 1:
        return FiniteGroupSpec("S%d" % n, max(n, 1), ())
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return FiniteGroupSpec("S%d" % n, n, (cycle, swap))


def count_index_subgroups(p, n, budget=DEFAULT_BUDGET):
    """Number of index-n subgroups, by the transitive-count recursion.

    With h_k = |Hom(G, S_k)| and t_k the number of transitive actions on k
    labelled points, h_n = sum C(n-1, k-1) t_k h_{n-k} and the subgroup
    count is t_n / (n-1)!.
    """
    if n < 1:
        raise ValueError("index must be >= 1")
    h = [1]  # h[0]
    for k in range(1, n + 1):
        h.append(count_homs(p, symmetric_group_spec(k), budget))
    t = [0] * (n + 1)
    for k in range(1, n + 1):
        t[k] = h[k] - sum(comb(k - 1, j - 1) * t[j] * h[k - j] for j in range(1, k))
    fact = 1
    for i in range(1, n):
        fact *= i
    assert t[n] % fact == 0
    return t[n] // fact


def builtin_catalogue():
    """Fixed list of small fingerprint groups, as permutation generators."""
    return [
        FiniteGroupSpec("C2", 2, ((1, 0),)),
        FiniteGroupSpec("C3", 3, ((1, 2, 0),)),
        FiniteGroupSpec("C4", 4, ((1, 2, 3, 0),)),
        FiniteGroupSpec("C5", 5, ((1, 2, 3, 4, 0),)),
        FiniteGroupSpec("S3", 3, ((1, 2, 0), (1, 0, 2))),
        FiniteGroupSpec("D8", 4, ((1, 2, 3, 0), (0, 3, 2, 1))),
        FiniteGroupSpec("A4", 4, ((1, 2, 0, 3), (0, 2, 3, 1))),
        # affine maps x -> ax + b over Z/5: generated by x+1 and 2x
        FiniteGroupSpec("F20", 5, ((1, 2, 3, 4, 0), (0, 2, 4, 1, 3))),
    ]


def hom_census(m, catalogue=None, budget=DEFAULT_BUDGET):
    """Homomorphism counts of pi_1(m) into each catalogue group, in order."""
    if catalogue is None:
        catalogue = builtin_catalogue()
    p = build_presentation(m)
    entries = []
    for spec in catalogue:
        try:
            entries.append((spec.name, count_homs(p, spec, budget)))
        except BudgetExceeded as exc:
            raise BudgetExceeded("%s (while counting into %s)" % (exc, spec.name))
    return CensusVector(tuple(entries))
