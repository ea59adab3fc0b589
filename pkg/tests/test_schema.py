import json

import pytest

from hopfrad.schema import (
    ParseError,
    SCHEMA_VERSION,
    dump_fixture,
    module_algebra_from_dict,
    module_algebra_to_dict,
)


def roundtrip(fx):
    return module_algebra_from_dict(json.loads(dump_fixture(fx)))


def test_round_trip(corpus_fixture):
    back = roundtrip(corpus_fixture)
    assert back.M == corpus_fixture.M
    assert back.name == corpus_fixture.name
    assert back.expected_level == corpus_fixture.expected_level


def test_dump_is_deterministic(corpus_fixture):
    assert dump_fixture(corpus_fixture) == dump_fixture(corpus_fixture)


def _doc(fx):
    return module_algebra_to_dict(fx.M, fx.name, fx.expected_level)


def test_missing_schema_version(corpus_fixture):
    doc = _doc(corpus_fixture)
    del doc["schema_version"]
    with pytest.raises(ParseError, match="schema_version"):
        module_algebra_from_dict(doc)


def test_future_schema_version(corpus_fixture):
    doc = _doc(corpus_fixture)
    doc["schema_version"] = SCHEMA_VERSION + 1
    with pytest.raises(ParseError):
        module_algebra_from_dict(doc)


def test_index_out_of_range(corpus_fixture):
    doc = _doc(corpus_fixture)
    doc["R"]["mult"].append([99, 0, 0, 1])
    with pytest.raises(ParseError, match="out of range"):
        module_algebra_from_dict(doc)


def test_bad_scalar(corpus_fixture):
    doc = _doc(corpus_fixture)
    doc["R"]["mult"][0][3] = "one half"
    with pytest.raises(ParseError, match="bad scalar"):
        module_algebra_from_dict(doc)


def test_float_scalar_rejected_over_q():
    import hopfrad.fixtures as fx

    doc = _doc(fx.e2())
    doc["R"]["mult"][0][3] = 0.5
    with pytest.raises(ParseError, match="bad scalar"):
        module_algebra_from_dict(doc)


def test_unknown_level():
    import hopfrad.fixtures as fx

    doc = _doc(fx.e2())
    doc["metadata"]["expected_level"] = "super"
    with pytest.raises(ParseError, match="level"):
        module_algebra_from_dict(doc)


def test_rationals_serialized_as_strings():
    import hopfrad.fixtures as fx

    doc = _doc(fx.e2())
    for entry in doc["R"]["mult"]:
        assert isinstance(entry[3], str)
    doc_p = _doc(fx.e2(__import__("hopfrad").GF(3)))
    for entry in doc_p["R"]["mult"]:
        assert isinstance(entry[3], int)


def test_triples_accumulate():
    # two triples for the same entry add up
    import hopfrad.fixtures as fxmod

    doc = _doc(fxmod.e2())
    doc["R"]["mult"] = doc["R"]["mult"] + [[0, 0, 0, "2"], [0, 0, 0, "-2"]]
    back = module_algebra_from_dict(doc)
    assert back.M == fxmod.e2().M
