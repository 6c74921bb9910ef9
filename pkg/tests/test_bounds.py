import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittforge.bounds import (
    PARITIES,
    ROST_TABLE,
    RealWitness,
    chernousov_serre_lower,
    grassmannian_penalty,
    hspin_value,
    lower_bound_chain,
    merkurjev_lower,
    pfister3_lower_bound,
    quadratic_check,
    quadratic_coefficients,
    r_plus,
    r_plus_radical,
    rost_table,
    spin_bounds,
    spin_lower,
    spin_upper,
    tn_interval,
)
from wittforge.fields import DomainError


def test_spin_lower_examples():
    assert spin_lower(15).value == 23 and not spin_lower(15).vacuous
    assert spin_lower(14).value == -27 and spin_lower(14).vacuous
    assert spin_lower(16).value == 9
    with pytest.raises(DomainError):
        spin_lower(2)


def test_spin_upper_examples():
    assert spin_upper(16).value == 24
    assert spin_upper(20).value == 342
    assert spin_upper(15).value == 23 == spin_lower(15).value
    assert spin_upper(16).details["rep_dimension"] == 2**7 + 16
    with pytest.raises(DomainError):
        spin_upper(14)
    assert "OUTSIDE" in spin_upper(14, allow_out_of_range=True).validity_note


def test_merkurjev_examples():
    assert merkurjev_lower(20).value == 326
    assert merkurjev_lower(16).value == 24
    assert merkurjev_lower(32).value == 32304
    with pytest.raises(DomainError):
        merkurjev_lower(18)


def test_chernousov_serre_examples():
    assert chernousov_serre_lower(7).value == 4
    assert chernousov_serre_lower(11).value == 5
    assert chernousov_serre_lower(12).value == 6
    for n in (6, 10):
        with pytest.raises(DomainError):
            chernousov_serre_lower(n)


def test_rost_table():
    assert (rost_table(3), rost_table(8), rost_table(14)) == (0, 5, 7)
    assert sorted(ROST_TABLE) == list(range(3, 15))
    for n in (2, 15):
        with pytest.raises(DomainError):
            rost_table(n)


def test_hspin_examples():
    assert hspin_value(20).value == 322
    assert hspin_value(24).value == 1772
    with pytest.raises(DomainError):
        hspin_value(16)
    with pytest.raises(DomainError):
        hspin_value(22)


def test_tn_interval_examples():
    assert [r.value for r in tn_interval(15)] == [22, 23]
    assert [r.value for r in tn_interval(16)] == [23, 24]
    assert [r.value for r in tn_interval(20)] == [325, 342]


def test_grassmannian_penalty_examples():
    assert grassmannian_penalty(0, 7) == 0
    assert grassmannian_penalty(1, 3) == 3
    assert grassmannian_penalty(2, 5) == 11
    with pytest.raises(DomainError):
        grassmannian_penalty(-1, 3)


@given(st.integers(0, 500), st.integers(0, 500))
def test_grassmannian_penalty_is_integral(s, n):
    assert 2 * grassmannian_penalty(s, n) == s * (s + 2 * n - 1)
    assert grassmannian_penalty(s, n) >= 0


def test_pfister3_examples():
    r12 = pfister3_lower_bound(12)
    assert r12.value == Fraction(2, 7) and r12.details["least_integer"] == 1 and not r12.vacuous
    assert pfister3_lower_bound(20).value == 6
    r10 = pfister3_lower_bound(10)
    assert r10.vacuous and r10.value.hi <= 0
    with pytest.raises(DomainError):
        pfister3_lower_bound(13)


@pytest.mark.parametrize("n", range(2, 66, 2))
def test_pfister3_vacuity_threshold(n):
    rep = pfister3_lower_bound(n)
    assert rep.vacuous == (n <= 10)
    v = rep.value
    if isinstance(v, RealWitness):
        # the enclosure really contains the value: compare squares of 7v + n + 2
        assert v.width < Fraction(1, 10**9)
        lo, hi = 7 * v.lo + n + 2, 7 * v.hi + n + 2
        assert lo * lo <= 2 ** ((n + 4) // 2) <= hi * hi
        assert (v.hi > 0) == (n >= 12)
    else:
        assert n % 4 == 0 and (v > 0) == (n >= 12)


def test_quadratic_check_examples():
    assert not quadratic_check(12, 0, "even")
    assert quadratic_check(12, 100, "even")
    for parity in PARITIES:
        w = r_plus(12, parity)
        assert quadratic_check(12, w.ceil(), parity)
        assert not quadratic_check(12, w.floor(), parity)
    with pytest.raises(DomainError):
        quadratic_check(10, 1, "even")
    with pytest.raises(DomainError):
        quadratic_check(12, -1, "even")
    with pytest.raises(DomainError):
        quadratic_check(12, 1, "neither")


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("n", range(12, 66, 2))
def test_polynomial_is_the_chain_scaled(n, parity):
    for r in range(0, 40):
        a, b, c = quadratic_coefficients(n, parity)
        assert 8 * lower_bound_chain(n, r, parity) == a * r * r + b * r + c


def test_even_polynomial_displayed_root():
    # the radical (sqrt(49 * 256 + 1649) - 89) / 49 for n = 12
    w = r_plus_radical(12, "even")
    x = math.sqrt(49 * 256 + 1649)
    assert w.lo <= Fraction((x - 89) / 49) + Fraction(1, 10**12)
    assert Fraction((x - 89) / 49) - Fraction(1, 10**12) <= w.hi


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("n", range(12, 66, 2))
def test_r_plus_enclosure(n, parity):
    w = r_plus(n, parity)
    assert w.width < Fraction(1, 10**9)
    a, b, c = quadratic_coefficients(n, parity)
    assert a * w.lo**2 + b * w.lo + c <= 0 <= a * w.hi**2 + b * w.hi + c
    rad = r_plus_radical(n, parity)
    assert rad.lo <= w.hi and w.lo <= rad.hi
    bound = pfister3_lower_bound(n).value
    assert w.lo >= (bound.hi if isinstance(bound, RealWitness) else bound)


@pytest.mark.parametrize("n", range(15, 41))
def test_bound_ordering(n):
    lo, hi = spin_lower(n).value, spin_upper(n).value
    assert lo <= hi
    if n % 4 == 0:
        assert lo <= merkurjev_lower(n).value <= hi


@pytest.mark.parametrize("n", range(7, 15))
def test_chernousov_serre_below_rost(n):
    try:
        cs = chernousov_serre_lower(n).value
    except DomainError:
        return
    assert cs <= rost_table(n)


@pytest.mark.parametrize("n", range(20, 69, 4))
def test_hspin_identity(n):
    assert hspin_value(n).value == spin_upper(n).value - n


def test_spin_bounds_keys():
    assert set(spin_bounds(20)) == {"spin_lower", "spin_upper", "merkurjev_lower", "chernousov_serre_lower", "hspin"}
    assert set(spin_bounds(8)) == {"spin_lower", "merkurjev_lower", "chernousov_serre_lower", "rost"}


def test_real_witness():
    w = RealWitness(Fraction(1, 3), Fraction(1, 2))
    assert w.ceil() == 1 and w.floor() == 0 and w.midpoint == Fraction(5, 12)
    with pytest.raises(ValueError):
        RealWitness(Fraction(1), Fraction(2)).floor()
    with pytest.raises(ValueError):
        RealWitness(Fraction(2), Fraction(1))
