from fractions import Fraction

import pytest

import heckecentre as hc


def test_centre_point_and_char_poly():
    assert hc.centre_point([[2, 3]]) == [[Fraction(5), Fraction(6)]]
    assert hc.char_poly([5, 6]) == [6, -5, 1]
    assert hc.centre_point([["1/2", 3]]) == [[Fraction(7, 2), Fraction(3, 2)]]


def test_dense_set_and_split():
    assert hc.dense_set([[1, 3]], q=2)["kind"] == "InS"
    linked = hc.dense_set([[1, 2]], q=2)
    assert linked["kind"] == "Linked"
    assert linked["ratio"] == 2
    assert hc.dense_set([[1, 3], [2, 7]], q=2, mode="all")["kind"] == "Linked"
    s = hc.split_check([[2, 3]])
    assert (s["dim"], s["split"], s["det"]) == (2, True, -1)
    assert not hc.split_check([[1, 1]])["split"]


def test_artin_and_discriminant():
    assert len(hc.artin_basis(3)) == 6
    d = hc.disc_power(2)
    assert d["c"] == 1 and d["k"] == 1


def test_partitions():
    assert len(hc.partitions(5)) == 7
    assert hc.f_lambda([3, 2, 1]) == 16
    assert hc.mult([[2], [2, 1]]) == 2
    assert hc.identity_check([2, 3]) == {"sum_m_sq": 12, "w_size": 12, "ok": True}
    assert hc.count_mult_one([2, 1, 3]) == 4
    assert hc.rsk([1, 0]) == ([[1], [2]], [[1], [2]])


def test_hecke_simple():
    v = hc.simple_check(2, 3, [2, 5])
    assert v["dim"] == 4 and v["centre_dim"] == 1 and v["matrix_algebra"]
    assert not hc.simple_check(2, 2, [1, 2])["matrix_algebra"]


def test_sym_coords_round_trip():
    c = hc.to_sym_coords([2], "1/1*X_{1,1} + 1/1*X_{2,1}")
    assert c == "1/1*s_{1,1}"
    assert hc.from_sym_coords([2], c) == "1/1*X_{1,1} + 1/1*X_{2,1}"


def test_errors_carry_codes():
    with pytest.raises(hc.HeckeError) as info:
        hc.centre_point([[0, 3]])
    assert hc.error_code(info.value) == "ZeroRoot"
    with pytest.raises(ValueError):
        hc.dense_set([[1, 3]], q=1)


def test_run_matches_cli_contract():
    report, code = hc.run("fiber", shape="2", roots=[[2, 3]], q="3")
    assert code == 0
    assert report["status"] == "ok"
    assert report["verdicts"]["split"] is True
    report, code = hc.run("mult", shape="2,3")
    assert code == 0 and report["verdicts"]["ok"]
    report, code = hc.run("fiber", roots=[[0, 3]])
    assert code == 2 and report["error"]["code"] == "ZeroRoot"
    report, code = hc.run("fiber", shape="2", bogus=1)
    assert code == 2 and report["status"] == "input_error"
