import math
from fractions import Fraction

import pytest

import dynheight as dh


def z2():
    return dh.Map([1, 0, 0], [0, 0, 1])


def z2_minus_1():
    return dh.Map([1, 0, -1], [0, 0, 1])


def test_resultant_and_coefficients():
    F = z2()
    assert F.degree == 2
    assert F.resultant == 1
    assert F.coefficients == [1, 0, 0, 0, 0, 1]
    assert dh.Map([3, 0, 0], [0, 0, 1]).resultant == 9


def test_big_coefficients_round_trip():
    big = 10**40 + 7
    F = dh.Map([big, 0, 1], [0, 0, 1])
    assert F.coefficients[0] == big


def test_heights():
    h = dh.canonical_height(z2(), "[2:1]")
    assert abs(h["value"] - math.log(2)) <= h["err"] + 1e-15
    assert set(h["per_place"]) == {"inf"}
    assert dh.weil_height((3, 2))["value"] == pytest.approx(math.log(3))
    g = dh.green_pairing(z2(), (2, 1), (3, 1))
    assert abs(g["value"] - math.log(6)) <= 1e-10
    assert dh.green_pairing(z2(), (2, 1), (3, 1), 2)["value"] == 0.0


def test_minimal_resultant():
    c = dh.minimal_resultant(dh.Map([3, 0, 0], [0, 0, 1]), 3)
    assert (c["ord_start"], c["ord_min"]) == (2, 0)
    assert c["conjugator"] == [(3, 0), (0, 1)]
    assert dh.bad_places(z2()) == []


def test_orbits_and_preperiodic():
    r = dh.orbit(z2_minus_1(), "[0:1]")
    assert (r["status"], r["tail"], r["cycle"]) == ("preperiodic", 0, 2)
    pts = dh.preperiodic_points(z2(), math.log(100))
    assert sorted(pts) == sorted([(0, 1), (1, 1), (-1, 1), (1, 0)])
    assert z2()((2, 1)) == (4, 1)


def test_milnor_and_census():
    m = dh.milnor(z2())
    assert m["sigma1"] == Fraction(2) and m["sigma3"] == Fraction(0)
    csv = dh.census_csv(z2_minus_1(), 0.0, 1.0)
    assert csv.splitlines()[0] == "point,weil_h,hhat,hhat_err,preperiodic,tail,cycle"


def test_errors():
    with pytest.raises(dh.InvalidInput):
        dh.Map([1, 0, 0], [1, 0, 0])
    with pytest.raises(dh.UnsupportedDegree):
        dh.milnor(dh.Map([1, 0, 0, 0], [0, 0, 0, 1]))
    with pytest.raises(ValueError):
        dh.canonical_height(z2(), "[0:0]")
