import pytest

import amalgam


def test_parse_and_order():
    r = amalgam.parse("dup(zmod(12); 4)")
    assert r.order == 36
    assert len(r) == 36
    assert r.expr == "dup(zmod(12); 4)"
    assert amalgam.parse("quot(zmod(12); 4)").order == 4


def test_qf_verdicts():
    assert amalgam.is_qf(amalgam.parse("dup(zmod(12); 4)"))
    assert not amalgam.is_qf(amalgam.parse("dup(zmod(12); 2)"))
    for method in ("lattice", "principal", "auto"):
        assert not amalgam.is_qf(amalgam.parse("dup(zmod(4); 2)"), method)
    with pytest.raises(ValueError):
        amalgam.is_qf(amalgam.parse("zmod(2)"), "guess")


def test_ideals_and_idempotents():
    z12 = amalgam.parse("zmod(12)")
    assert amalgam.idempotents(z12) == [0, 1, 4, 9]
    assert len(amalgam.ideals(z12)) == 6
    assert amalgam.ideals(z12)[0] == [0]
    assert not amalgam.is_local(z12)
    assert amalgam.is_local(amalgam.parse("zmod(8)"))


def test_labels():
    d = amalgam.duplicate(amalgam.parse("zmod(4)"), [2])
    assert d.order == 8
    assert d.labels[1] == "(0,0+2)"
    assert d.mul(3, 3) == 2


def test_analyze_and_theorem():
    rep = amalgam.analyze(amalgam.parse("zmod(12)"))
    assert rep["is_qf"] is True
    t = amalgam.theorem(amalgam.parse("zmod(12)"), [4])
    assert t["agrees"] is True
    assert t["lhs_dup_qf"] is True
    with pytest.raises(amalgam.ScopeError):
        amalgam.theorem(amalgam.parse("zmod(6)"), [1])


def test_decompose():
    assert [f.order for f in amalgam.decompose(amalgam.parse("zmod(12)"))] == [4, 3]


def test_errors():
    with pytest.raises(amalgam.ParseError, match="offset 11"):
        amalgam.parse("dup(zmod(12; 4)")
    with pytest.raises(amalgam.CapacityError):
        amalgam.parse("prod(zmod(100), zmod(100))")
    assert issubclass(amalgam.ParseError, amalgam.AmalgamError)


def test_sweep_deterministic():
    a, sa = amalgam.sweep(max_order=16, base_order=6, workers=1)
    b, sb = amalgam.sweep(max_order=16, base_order=6, workers=3)
    assert a == b
    assert sa["failures"] == 0
    assert sa == sb
