import pytest

import weylinv


def test_sp4_pair():
    r = weylinv.invariants("(Sp(4) x Sp(4))/mu(2)")
    assert r["inv_ind"]["factors"] == [2]
    assert r["inv_sd"]["factors"] == [2]
    assert r["Dec"]["hnf"] == [[2, 0], [0, 2]]


def test_pgo8():
    r = weylinv.invariants("PGO(8)")
    assert r["Q"]["hnf"] == [[2]]
    assert r["Sdec"]["hnf"] == [[4]]
    assert r["inv_ind"]["text"] == "Z/2"
    assert r["inv_sd"]["factors"] == []


def test_spec_round_trip():
    s = weylinv.normalize_spec("(E6 x E6)/mu(3)")
    assert weylinv.normalize_spec(s) == s


def test_bad_spec_raises_value_error():
    with pytest.raises(ValueError):
        weylinv.invariants("SL(3")
    with pytest.raises(ValueError):
        weylinv.invariants("SL(3)", sdec_mode="sideways")


def test_c2_and_dec():
    # e^{w1} + e^{-w1} - 2 on SL(2) has degree-2 part w1^2 = -c2 of the orbit sum.
    assert weylinv.c2("SL(2)", "x1 + x1^-1 - 2") in ([1], [-1])
    assert weylinv.dec_at_height("SL(2)", 2) == [[1]]


def test_factor_group_big_integers():
    big = 2**80
    g = weylinv.factor_group([[big]], [[1]], 1)
    assert g["factors"] == [big]
    assert g["free_rank"] == 0
