import json

import crsym


def test_free_growth():
    f = crsym.free_gnla(10)
    assert f.dims == [2, 1, 2, 3, 6, 9, 18, 30, 56, 99]
    assert f.validate() == (True, "")
    assert crsym.necklace_dim(20) == 52377


def test_catalog_and_deprolongation():
    g = crsym.catalog("Gou", 5)
    assert g.growth_reduced() == [2, 1, 1, 1, 1]
    d = crsym.deprolong(g)
    assert d.same_structure(crsym.catalog("Gou", 4))
    assert crsym.cauchy_dim(g, 2) == 1


def test_prolongation_su12():
    rep = json.loads(crsym.prolong_report(crsym.catalog("heis3")))
    assert rep["total"] == 8
    assert rep["dims_positive"] == [2, 1, 0]
    assert crsym.symmetry_bound(crsym.catalog("ell6"), "1", "0") == 8
    # the bound for Goursat symbols is dim + 1
    assert crsym.symmetry_bound(crsym.catalog("Gou", 5), "2", "3") == 7


def test_extensions():
    assert crsym.cocycle_dim(crsym.catalog("m_HC")) == 3
    counts = [len(labels) for _, labels in crsym.enumerate_211(9)]
    assert counts == [1, 1, 2, 1, 2, 1, 2]
    w = [
        {"a": "e1'", "b": "e3'", "value": "1"},
        {"a": "e1''", "b": "e3''", "value": "1"},
    ]
    assert crsym.classify_hc(json.dumps(w)) == "elliptic"


def test_normal_forms():
    assert crsym.normalize_j(crsym.catalog("Gou", 6), "3", "7") == ("1", "0")
    assert crsym.normalize_j(crsym.catalog("nGou", 5), "2", "5") == ("1", "5")
    assert crsym.invariant_j_exists(crsym.catalog("ell6"))
    assert not crsym.invariant_j_exists(crsym.catalog("Gou", 5))


def test_models():
    model = crsym.parse_model(crsym.fixture_source("CAR"))
    assert model.coords == ["z", "u", "v", "w"]
    assert all(model.verify_tangency().values())
    rep = json.loads(model.closure_report())
    assert rep["dimension"] == 7
    sym = json.loads(model.symbol())
    assert sym["r"] == 2
    m2121 = crsym.parse_model(crsym.fixture_source("2121"))
    sym0 = json.loads(m2121.symbol({"a": "0"}))
    assert sym0["type"] == "hyperbolic"
    assert sym0["reduced_growth"] == [2, 1, 2, 1]
