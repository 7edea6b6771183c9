"""On-disk JSON documents for graph manifolds and canonical report text.

One JSON document per manifold:

    {"name": str,
     "vertices": [{"id": str, "kind": "major"|"minor",
                   "genus": int, "orientable": bool, "cones": [[p, q], ...]}],
     "edges": [{"id": str, "from": str, "to": str,
                "matrix": [[alpha, beta], [gamma, delta]]}]}

Minor vertices omit genus/orientable/cones.  Parsing is strict: unknown
fields and duplicate ids are rejected, then structural validation runs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .model import (
    BaseOrbifold,
    ConePoint,
    Edge,
    GluingMatrix,
    GraphManifold,
    MajorPiece,
    MINOR,
    validate,
)

PARSE, SCHEMA, INVALID = "PARSE", "SCHEMA", "INVALID"


class ManifoldError(Exception):
    def __init__(self, kind, message, location=""):
        super().__init__(message)
        self.kind = kind
        self.location = location

    def __str__(self):
        loc = " at %s" % self.location if self.location else ""
        return "%s%s: %s" % (self.kind, loc, super().__str__())


def _need(obj, keys, loc):
    if not isinstance(obj, dict):
        raise ManifoldError(SCHEMA, "expected an object", loc)
    extra = set(obj) - set(keys)
    if extra:
        raise ManifoldError(SCHEMA, "unknown fields %s" % sorted(extra), loc)


def _int(x, loc):
    if not isinstance(x, int) or isinstance(x, bool):
        raise ManifoldError(SCHEMA, "expected an integer, got %r" % (x,), loc)
    return x


def _str(x, loc):
    if not isinstance(x, str) or not x:
        raise ManifoldError(SCHEMA, "expected a non-empty string, got %r" % (x,), loc)
    return x


def parse_manifold(text):
    """Decode and fully validate one manifold document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifoldError(PARSE, str(exc))
    _need(doc, ("name", "vertices", "edges"), "document")
    for key in ("name", "vertices", "edges"):
        if key not in doc:
            raise ManifoldError(SCHEMA, "missing field %r" % key, "document")
    name = _str(doc["name"], "name")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise ManifoldError(SCHEMA, "vertices and edges must be arrays", "document")

    vertices = {}
    for i, vd in enumerate(doc["vertices"]):
        loc = "vertices[%d]" % i
        _need(vd, ("id", "kind", "genus", "orientable", "cones"), loc)
        vid = _str(vd.get("id"), loc)
        if vid in vertices:
            raise ManifoldError(SCHEMA, "duplicate vertex id %r" % vid, loc)
        kind = vd.get("kind")
        if kind == "minor":
            extra = set(vd) - {"id", "kind"}
            if extra:
                raise ManifoldError(SCHEMA, "minor vertex carries %s" % sorted(extra), loc)
            vertices[vid] = MINOR
        elif kind == "major":
            for key in ("genus", "orientable", "cones"):
                if key not in vd:
                    raise ManifoldError(SCHEMA, "missing field %r" % key, loc)
            genus = _int(vd["genus"], loc + ".genus")
            orientable = vd["orientable"]
            if not isinstance(orientable, bool):
                raise ManifoldError(SCHEMA, "orientable must be a boolean", loc)
            cones = []
            for j, c in enumerate(vd["cones"]):
                cloc = "%s.cones[%d]" % (loc, j)
                if not isinstance(c, list) or len(c) != 2:
                    raise ManifoldError(SCHEMA, "cone must be a [p, q] pair", cloc)
                cones.append(ConePoint(_int(c[0], cloc), _int(c[1], cloc)))
            vertices[vid] = MajorPiece(BaseOrbifold(genus, orientable, tuple(cones)))
        else:
            raise ManifoldError(SCHEMA, "kind must be 'major' or 'minor'", loc)

    edges = []
    seen = set()
    for i, ed in enumerate(doc["edges"]):
        loc = "edges[%d]" % i
        _need(ed, ("id", "from", "to", "matrix"), loc)
        for key in ("id", "from", "to", "matrix"):
            if key not in ed:
                raise ManifoldError(SCHEMA, "missing field %r" % key, loc)
        eid = _str(ed["id"], loc)
        if eid in seen:
            raise ManifoldError(SCHEMA, "duplicate edge id %r" % eid, loc)
        seen.add(eid)
        mat = ed["matrix"]
        if (not isinstance(mat, list) or len(mat) != 2
                or any(not isinstance(r, list) or len(r) != 2 for r in mat)):
            raise ManifoldError(SCHEMA, "matrix must be [[a, b], [g, d]]", loc)
        a, b = (_int(x, loc + ".matrix") for x in mat[0])
        g, d = (_int(x, loc + ".matrix") for x in mat[1])
        frm, to = _str(ed["from"], loc), _str(ed["to"], loc)
        if frm not in vertices or to not in vertices:
            raise ManifoldError(SCHEMA, "edge endpoint is not a vertex id", loc)
        edges.append(Edge(eid, frm, to, GluingMatrix(a, b, g, d)))

    m = GraphManifold(name, vertices, tuple(edges))
    report = validate(m)
    if not report.ok:
        code, where, msg = report.violations[0]
        raise ManifoldError(INVALID, "%s (%s)%s" % (
            msg, code,
            "; %d more" % (len(report.violations) - 1) if len(report.violations) > 1 else ""),
            where)
    return m


def manifold_to_doc(m):
    verts = []
    for vid in sorted(m.vertices):
        piece = m.vertices[vid]
        if piece.minor:
            verts.append({"id": vid, "kind": "minor"})
        else:
            b = piece.base
            verts.append({
                "id": vid, "kind": "major", "genus": b.genus,
                "orientable": b.orientable,
                "cones": [[cp.p, cp.q] for cp in b.cones],
            })
    edges = []
    for e in sorted(m.edges, key=lambda e: e.id):
        a = e.matrix
        edges.append({"id": e.id, "from": e.frm, "to": e.to,
                      "matrix": [[a.alpha, a.beta], [a.gamma, a.delta]]})
    return {"name": m.name, "vertices": verts, "edges": edges}


def dumps_manifold(m):
    return canonical_json(manifold_to_doc(m))


def canonical_json(obj):
    """Deterministic serialization: sorted keys, stable whitespace."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def frac_str(x):
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def kappa_str(kappa, modulus):
    return "%d mod %d" % (kappa, modulus)
