import pytest

import chromgl


def coeffs(f):
    return {tuple(c["partition"]): c["value"] for c in f["coeffs"]}


def test_csf_of_path():
    f = chromgl.csf("EESESS")
    assert f["basis"] == "M"
    assert coeffs(f) == {(2, 1): "t", (1, 1, 1): "t^2 + 4*t + 1"}


def test_llt_example():
    assert coeffs(chromgl.llt("EEDSS")) == {(2, 1): "t", (1, 1, 1): "t^2 + 2*t"}


def test_induced_trivial_character():
    # Ind of the trivial character of UT_2(F_2): 1 at the regular unipotent, |GL_2|/|UT_2| at 1
    f = chromgl.induce("chi_bar", "ESES", 2)
    assert {tuple(v["partition"]): v["value"] for v in f["values"]} == {(2,): "1", (1, 1): "3"}


def test_verify_small():
    reports = chromgl.verify(n=2, q=2)
    assert len(reports) == len(chromgl.check_names())
    assert all(r["status"] == "pass" for r in reports)


def test_errors():
    with pytest.raises(chromgl.SizeGuard):
        chromgl.csf("EEEEEEEEESSSSSSSSS")
    with pytest.raises(ValueError):
        chromgl.verify("check_nothing", n=2, q=2)
