import pytest

import rmotivic


def test_adem():
    assert rmotivic.adem_reduce("Sq2 Sq2") == "t Sq3 Sq1"
    assert rmotivic.adem_reduce("Sq1 Sq1") == "0"


def test_parse_error():
    with pytest.raises(ValueError):
        rmotivic.adem_reduce("Sq2 +")


def test_enumeration():
    assert rmotivic.a1_count() == 128


def test_module_json():
    m = rmotivic.module([0] * 7)
    assert len(m["generators"]) == 8


def test_scans():
    assert rmotivic.scan("z", "existence") is None
    assert rmotivic.scan("a1", "uniqueness") == ("h12^2", 4, 1)


def test_verify():
    assert "THM_1_1" in rmotivic.theorem_tags()
    assert rmotivic.verify_theorem("THM_1_1")["verdict"] == "pass"
