import strangedual as sd


def test_transform_det_rules():
    assert sd.transform("1:(2s+3f):6", "rs") == "6:(-3s-2f):1"
    assert sd.transform("1:(2s+3f):6", "rsdagger") == "2:(-1s+6f):-3"


def test_orthogonality_and_count():
    v = "3:(1s+3f):-1"
    assert sd.product_chi(v, v) == "0"
    assert sd.half_dim(v) == "6"
    assert sd.verlinde_count(v, v) == "8316"
    assert sd.verlinde_count(v, v, side="minus") == "924"


def test_euler_characteristic():
    assert sd.euler_char_line(3, 4) == "12"
    assert sd.euler_char_line(6, 2) == "12"


def test_smith_normal_form():
    u, d, v = sd.smith([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == ["1", "6"]
    assert sd.torsion_count(2, 3) == "81"


def test_catalog_subset_passes():
    checks = sd.run_catalog("det-rule-*")
    assert [c["id"] for c in checks] == ["det-rule-rs", "det-rule-rsdagger"]
    assert all(c["status"] == "pass" for c in checks)
    assert "mukai-inversion" in sd.catalog_ids()
