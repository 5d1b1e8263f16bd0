import json

import pytest
from conftest import random_handlebody_elem, random_surface_elem

from skeinfaith.formats import (
    FormatError,
    element_from_json,
    element_to_json,
    format_record,
    load_element,
    parse_dt,
    parse_handlebody_elem,
    parse_record,
    parse_surface_elem,
    parse_vector,
)
from skeinfaith.graded import GradedHandlebodyElem, GradedSurfaceElem
from skeinfaith.qring import LaurentPoly, RingCtx
from skeinfaith.surface import DTCoord, preset

TORUS = preset("torus")
q = LaurentPoly.monomial(1)


@pytest.mark.parametrize("ctx", [RingCtx.generic(), RingCtx.root(6)])
def test_text_round_trip(tri, rng, ctx):
    for _ in range(30):
        x = random_surface_elem(tri, rng, ctx)
        assert parse_surface_elem(str(x), tri, ctx) == x
        v = random_handlebody_elem(tri, rng, ctx)
        assert parse_handlebody_elem(str(v), tri, ctx) == v


@pytest.mark.parametrize("ctx", [RingCtx.generic(), RingCtx.root(4)])
def test_json_round_trip(tri, rng, ctx):
    for _ in range(30):
        x = random_surface_elem(tri, rng, ctx)
        data = json.loads(json.dumps(element_to_json(x)))
        assert element_from_json(data, tri) == x
        v = random_handlebody_elem(tri, rng, ctx)
        assert element_from_json(element_to_json(v), tri) == v


def test_text_examples():
    x = GradedSurfaceElem(TORUS, RingCtx.generic(), {DTCoord((2,), (1,)): q**-1})
    assert str(x) == "q^-1 * C([2],[1])"
    v = GradedHandlebodyElem(TORUS, RingCtx.generic(), {(1,): 1 + q**3})
    assert parse_handlebody_elem(str(v), TORUS) == v
    assert str(GradedSurfaceElem.zero(TORUS)) == "0"
    assert parse_surface_elem("C([1],[0]) + C([1],[0])", TORUS) == GradedSurfaceElem.basis(
        TORUS, DTCoord((1,), (0,)), coeff=2)


@pytest.mark.parametrize("bad", ["C([1])", "S([1]) +", "(q * C([1],[0])", "C([1],[0]) * q"])
def test_text_rejects(bad):
    with pytest.raises(ValueError):
        parse_surface_elem(bad, TORUS)


def test_json_errors(tmp_path):
    with pytest.raises(FormatError, match="terms"):
        element_from_json({"ring": {"mode": "generic"}}, TORUS)
    with pytest.raises(FormatError, match="mixes"):
        element_from_json({"terms": [{"coeff": "1", "n": [1], "t": [0]}, {"coeff": "1", "n": [1]}]}, TORUS)
    with pytest.raises(FormatError, match="missing"):
        element_from_json({"terms": [{"n": [1], "t": [0]}]}, TORUS)
    with pytest.raises(FormatError, match="no such"):
        load_element(tmp_path / "absent.json", TORUS)
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(FormatError, match="invalid JSON"):
        load_element(tmp_path / "bad.json", TORUS)


def test_ring_from_file_and_override():
    data = {"ring": {"mode": "root", "N": 3}, "terms": [{"coeff": "1*q^3", "n": [2], "t": [0]}]}
    x = element_from_json(data, TORUS)
    assert x.ctx == RingCtx.root(3)
    assert x == GradedSurfaceElem.basis(TORUS, DTCoord((2,), (0,)), RingCtx.root(3))
    y = element_from_json(data, TORUS, RingCtx.generic())
    assert y.ctx.is_generic


def test_coordinate_strings():
    assert parse_vector("1,2,3") == (1, 2, 3)
    assert parse_dt("2,1,1;5,-3,0") == DTCoord((2, 1, 1), (5, -3, 0))
    assert parse_dt("0,1") == DTCoord((0,), (1,))
    with pytest.raises(FormatError):
        parse_dt("1,2,3")
    with pytest.raises(FormatError):
        parse_vector("1,x")


def test_record_round_trip():
    fields = {"cmd": "product", "status": "ok", "exit": 0, "result": "q^-1 * C([2],[1])",
              "flag": True, "probe": [1, 2], "weird": 'a "b" = c'}
    line = format_record(fields)
    assert "\n" not in line
    back = parse_record(line)
    assert back["result"] == "q^-1 * C([2],[1])"
    assert back["flag"] == "true"
    assert back["probe"] == "[1,2]"
    assert back["weird"] == 'a "b" = c'
    assert back["exit"] == "0"
