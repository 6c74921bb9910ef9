import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import hyperbolic_fp, hyperbolic_oracle, in_I3_oracle, isotropic_fp, witt_equivalent_oracle
from wittforge.fields import GF, QQ, REAL, DomainError, Place
from wittforge.forms import DiagonalForm, direct_sum, hyperbolic, signed_discriminant
from wittforge.witt import (
    anisotropic_kernel_fp,
    clifford_defect,
    find_isotropic_vector,
    ideal_membership,
    is_hyperbolic,
    pad_hyperbolic,
    split_hyperbolic_plane,
    witt_class_key_fp,
    witt_equivalent,
)

coeff = st.builds(Fraction, st.integers(-30, 30).filter(bool), st.integers(1, 12))


def F(*xs, field=QQ):
    return DiagonalForm.of(xs, field)


def test_hyperbolic_examples():
    assert is_hyperbolic(F(1, -1))
    assert is_hyperbolic(F())
    assert is_hyperbolic(F(3, -3, Fraction(2, 7), Fraction(-8, 7)))
    assert not is_hyperbolic(F(1, 1))
    assert not is_hyperbolic(F(1, -1, 1))
    assert not is_hyperbolic(F(1, 1, -1, -1, 1, -1, 1, 1))
    # same dimension, discriminant and signature as h+h; decided by Hasse symbols
    assert is_hyperbolic(F(1, 3, -5, -15)) == hyperbolic_oracle([1, 3, -5, -15])
    assert not is_hyperbolic(F(1, 1, -3, -3))


def test_hyperbolic_plane_sums_are_hyperbolic():
    # the raw Hasse product of h^k is (-1,-1)^{k(k-1)/2}, not identically +1
    for k in range(6):
        assert is_hyperbolic(hyperbolic(k))
        assert not clifford_defect(hyperbolic(k))


def test_hyperbolic_over_f5():
    q = F(1, 2, -1, -2, field=GF(5))
    assert is_hyperbolic(q)
    assert hyperbolic_fp([1, 2, -1, -2], 5)
    assert not is_hyperbolic(F(1, 2, field=GF(5)))
    assert not hyperbolic_fp([1, 2], 5)


def test_witt_equivalence_examples():
    assert witt_equivalent(F(1, 1, -1), F(1))
    assert witt_equivalent(F(2, 3), F(5, 30))
    assert not witt_equivalent(F(2, 3), F(1, 6))
    assert not witt_equivalent(F(1, 1), F(1, -1))
    with pytest.raises(DomainError):
        witt_equivalent(F(1), F(1, field=GF(3)))


@settings(max_examples=300, deadline=None)
@given(st.lists(coeff, min_size=0, max_size=6), st.lists(coeff, min_size=0, max_size=6))
def test_witt_equivalent_matches_residue_oracle(c1, c2):
    assert witt_equivalent(DiagonalForm.of(c1), DiagonalForm.of(c2)) == witt_equivalent_oracle(c1, c2)


@settings(max_examples=300, deadline=None)
@given(st.lists(coeff, min_size=0, max_size=8))
def test_I3_matches_residue_oracle(c):
    assert ideal_membership(DiagonalForm.of(c), 3) == in_I3_oracle(c)


@settings(max_examples=100, deadline=None)
@given(st.lists(coeff, max_size=4), st.lists(coeff, max_size=4), st.lists(coeff, max_size=4))
def test_witt_equivalence_is_an_equivalence_relation(a, b, c):
    qa, qb, qc = (DiagonalForm.of(x) for x in (a, b, c))
    assert witt_equivalent(qa, qa)
    assert witt_equivalent(qa, qb) == witt_equivalent(qb, qa)
    if witt_equivalent(qa, qb) and witt_equivalent(qb, qc):
        assert witt_equivalent(qa, qc)
    # adding hyperbolic planes never changes the class
    assert witt_equivalent(qa, direct_sum(qa, hyperbolic(2)))


@settings(max_examples=200, deadline=None)
@given(st.lists(coeff, max_size=8))
def test_ideal_levels_are_nested(c):
    q = DiagonalForm.of(c)
    members = [ideal_membership(q, k) for k in range(4)]
    assert members[0]
    for k in range(3):
        assert members[k] or not members[k + 1]
    if is_hyperbolic(q):
        assert all(members)


def test_ideal_examples():
    assert ideal_membership(F(*[1] * 8), 3)
    assert not ideal_membership(F(*[1] * 4), 3)
    assert ideal_membership(F(*[1] * 4), 2)
    assert not ideal_membership(F(1, 1), 2)
    assert not ideal_membership(F(1), 1)
    with pytest.raises(DomainError):
        ideal_membership(F(1), 4)


def test_clifford_defect_examples():
    assert clifford_defect(F(1, 1, 1, 1)) == {REAL: -1, Place(2): -1}
    assert clifford_defect(F(*[1] * 8)) == {}
    with pytest.raises(DomainError):
        clifford_defect(F(1))


def test_find_isotropic_vector_and_split():
    field = GF(7)
    q = F(1, 1, 1, field=field)
    v = find_isotropic_vector(q)
    assert v is not None and sum(x * x for x in v) % 7 == 0
    rest = split_hyperbolic_plane(q, v)
    assert rest.dim == 1
    assert witt_equivalent(q, rest)
    assert find_isotropic_vector(F(1, 1, field=field)) is None  # -1 is a nonsquare mod 7
    with pytest.raises(DomainError):
        find_isotropic_vector(F(1, 1))


def test_anisotropic_kernel_examples():
    f3 = GF(3)
    k = anisotropic_kernel_fp(F(1, 1, 1, field=f3))
    assert k.dim == 1 and witt_equivalent(k, F(1, 1, 1, field=f3))
    assert anisotropic_kernel_fp(F(1, 1, field=f3)).dim == 2
    assert anisotropic_kernel_fp(F(1, -1, 2, -2, field=GF(5))).dim == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_anisotropic_kernels_exhaustive(p):
    field = GF(p)
    reps = [r.value for r in field.square_class_reps()]
    for dim in range(0, 5):
        for coeffs in itertools.product(reps, repeat=dim):
            q = DiagonalForm.of(coeffs, field)
            k = anisotropic_kernel_fp(q)
            assert k.dim <= 2
            assert k.dim == 0 or not isotropic_fp([c.value for c in k], p)
            assert witt_class_key_fp(k) == witt_class_key_fp(q)
            assert is_hyperbolic(q) == hyperbolic_fp(list(coeffs), p)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_I2_of_finite_field_vanishes(p):
    field = GF(p)
    reps = [r.value for r in field.square_class_reps()]
    for dim in range(0, 7, 2):
        for coeffs in itertools.combinations_with_replacement(reps, dim):
            q = DiagonalForm.of(coeffs, field)
            if ideal_membership(q, 2):
                assert is_hyperbolic(q)
                assert ideal_membership(q, 3)


def test_pad_hyperbolic():
    q = pad_hyperbolic(F(1, 2), 6)
    assert q.dim == 6 and witt_equivalent(q, F(1, 2))
    assert signed_discriminant(q) == signed_discriminant(F(1, 2))
    with pytest.raises(DomainError):
        pad_hyperbolic(F(1, 2), 5)
