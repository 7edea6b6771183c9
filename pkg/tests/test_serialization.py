import json
import random

import pytest

from graphmanifold import (
    ManifoldError,
    dumps_manifold,
    manifold_to_doc,
    parse_manifold,
)

from helpers import fixtures, random_manifold


def test_round_trip_fixtures():
    for m in fixtures():
        text = dumps_manifold(m)
        again = parse_manifold(text)
        assert manifold_to_doc(again) == manifold_to_doc(m)
        # printing is a fixpoint byte for byte
        assert dumps_manifold(again) == text


def test_round_trip_random():
    rng = random.Random(51)
    for _ in range(30):
        m = random_manifold(rng)
        assert dumps_manifold(parse_manifold(dumps_manifold(m))) == dumps_manifold(m)


def _doc():
    return json.loads(dumps_manifold(fixtures()[0]))


def _expect(kind, doc):
    with pytest.raises(ManifoldError) as exc:
        parse_manifold(json.dumps(doc))
    assert exc.value.kind == kind, str(exc.value)


def test_parse_error():
    with pytest.raises(ManifoldError) as exc:
        parse_manifold("{not json")
    assert exc.value.kind == "PARSE"


def test_schema_errors():
    d = _doc()
    d["surprise"] = 1
    _expect("SCHEMA", d)

    d = _doc()
    del d["edges"]
    _expect("SCHEMA", d)

    d = _doc()
    d["vertices"].append(dict(d["vertices"][0]))
    _expect("SCHEMA", d)  # duplicate vertex id

    d = _doc()
    d["vertices"][0]["cones"] = [[5]]
    _expect("SCHEMA", d)

    d = _doc()
    d["vertices"][0]["genus"] = "zero"
    _expect("SCHEMA", d)

    d = _doc()
    d["edges"][0]["matrix"] = [[2, 1], [5]]
    _expect("SCHEMA", d)

    d = _doc()
    d["edges"][0]["to"] = "nowhere"
    _expect("SCHEMA", d)

    d = _doc()
    d["vertices"][0] = {"id": "x", "kind": "minor", "genus": 0}
    _expect("SCHEMA", d)  # minor vertices carry no orbifold data

    d = _doc()
    d["vertices"][0]["kind"] = "tiny"
    _expect("SCHEMA", d)


def test_invalid_manifolds():
    d = _doc()
    d["edges"][0]["matrix"] = [[2, 1], [5, 3]]
    _expect("INVALID", d)  # determinant

    d = _doc()
    d["edges"][0]["matrix"] = [[1, 1], [0, -1]]
    _expect("INVALID", d)  # gamma zero

    d = _doc()
    d["vertices"][0]["cones"] = [[4, 2]]
    _expect("INVALID", d)  # gcd


def test_error_reports_location():
    d = _doc()
    d["edges"][0]["matrix"] = [[2, 1], [5, "x"]]
    with pytest.raises(ManifoldError) as exc:
        parse_manifold(json.dumps(d))
    assert "edges[0]" in str(exc.value)
