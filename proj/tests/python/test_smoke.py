import hessk3


def test_version():
    assert hessk3.__version__ == "0.1.0"


def test_lattice_summary():
    s = hessk3.lattice_summary()
    assert s["curves"] == 20
    assert s["rank"] == 17
    assert abs(s["det"]) == 16
    assert s["signature"] == (1, 16)
    assert s["invariant_factors"] == [2, 2, 4]
    assert s["isotropic_classes"] == 3
    assert s["oq_order"] == 12
    assert not s["oq_abelian"]
    assert s["oq_center"] == 2


def test_smith_normal_form():
    f = hessk3.smith_normal_form([[0, 2], [2, 0]])
    assert f["invariant_factors"] == [2, 2]


def test_constant_terms():
    assert hessk3.constant_term(0, 0, 0) == "1"
    assert hessk3.constant_term(1, 0, 0) == "-2"
    assert hessk3.constant_term(1, 1, 0) == "12"
    assert hessk3.constant_term(1, 1, 1) == "-120"


def test_reduction_and_enumeration():
    r = hessk3.reduce_triple(7, 4, 5)
    assert r["tag"] in ("M1", "M2")
    assert r["endpoint"] in ((1, 3, 0), (2, 2, 1))
    assert r["steps"] <= 200
    sols = hessk3.enumerate_triples(10)
    assert (2, 2, 1) in sols
    assert all(x * y - z * z == 3 for x, y, z in sols)


def test_fc_scaling():
    sc = hessk3.fc_scaling(4)
    assert sc["matching"] == ["4"]
    assert sc["unique_match"] is True
    assert sc["quoted_scale"] == "-2"


def test_theta_constants():
    tc = hessk3.theta_constants(16)
    assert (tc["c"], tc["c4"], tc["c5"]) == ("1024", "-1024", "1024")
    assert tc["f4_sq_3f8"]
    assert tc["f6_relation"]


def test_verify_report():
    rep = hessk3.verify(suites=["periods"], samples=10)
    assert rep["summary"]["fail"] == 0
    ids = [r["id"] for r in rep["results"]]
    assert ids == sorted(ids)
    assert all(r["citation"] for r in rep["results"])
