"""Exact quadratic ring arithmetic, conjugation and fundamental units."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlat.ring import (
    DomainError,
    QuadraticRingElement,
    fundamental_unit,
    galois_conjugate,
    golden,
    golden_parts,
    ring_norm,
    tau,
    totient,
)

KAPPAS = (2, 3, 5)

small_ints = st.integers(min_value=-50, max_value=50)


def elements(kappa):
    return st.builds(
        lambda p, q, den: QuadraticRingElement(p, q, kappa, den),
        small_ints, small_ints, st.integers(min_value=1, max_value=12),
    )


any_element = st.sampled_from(KAPPAS).flatmap(elements)


def test_canonical_form():
    a = QuadraticRingElement(2, 4, 5, 6)
    assert (a.p, a.q, a.den) == (1, 2, 3)
    b = QuadraticRingElement(1, 1, 5, -2)
    assert b.den == 2 and b.p == -1
    with pytest.raises(DomainError):
        QuadraticRingElement(1, 1, 5, 0)


def test_tau_satisfies_golden_identity():
    t = tau()
    assert t * t == t + 1
    assert t.norm() == -1
    assert galois_conjugate(t) == 1 - t


def test_golden_parts_round_trip():
    for m in range(-5, 6):
        for n in range(-5, 6):
            g = golden(m, n)
            assert golden_parts(g) == (Fraction(m), Fraction(n))
            assert g.is_ring_integer()


@given(st.sampled_from(KAPPAS).flatmap(lambda k: st.tuples(elements(k), elements(k))))
def test_ring_closure_and_commutativity(pair):
    a, b = pair
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) - b == a


@given(st.sampled_from(KAPPAS).flatmap(lambda k: st.tuples(elements(k), elements(k))))
def test_norm_is_multiplicative(pair):
    a, b = pair
    assert ring_norm(a * b) == ring_norm(a) * ring_norm(b)


@given(any_element)
def test_conjugation_is_an_involution(a):
    assert a.conjugate().conjugate() == a
    assert (a + a.conjugate()).q == 0


@given(any_element)
def test_float_and_sign_agree(a):
    f = float(a)
    if abs(f) > 1e-9:
        assert (a._sign() > 0) == (f > 0)


@given(st.sampled_from(KAPPAS).flatmap(lambda k: st.tuples(elements(k), elements(k))))
def test_exact_division(pair):
    a, b = pair
    if not b:
        return
    assert (a / b) * b == a


def test_fundamental_units():
    # tau, the silver ratio, and 2 + sqrt(3)
    assert fundamental_unit(5).unit == tau()
    assert fundamental_unit(2).unit == QuadraticRingElement(1, 1, 2)
    assert fundamental_unit(3).unit == QuadraticRingElement(2, 1, 3)
    with pytest.raises(DomainError):
        fundamental_unit(4)


@pytest.mark.parametrize("kappa", KAPPAS)
def test_fundamental_unit_properties(kappa):
    res = fundamental_unit(kappa)
    u = res.unit
    assert abs(u.norm()) == 1
    assert u > 1
    assert u.is_ring_integer()
    # Pell relation a^2 - delta b^2 = +-4 at the reported solution
    assert res.a ** 2 - res.delta * res.b ** 2 == 4 * res.norm_sign


@pytest.mark.parametrize("kappa", KAPPAS)
def test_fundamental_unit_is_minimal(kappa):
    """Brute-force oracle: no smaller unit > 1 exists in the ring."""
    u = fundamental_unit(kappa).unit
    found = []
    for p in range(-40, 41):
        for q in range(0, 41):
            for den in (1, 2):
                c = QuadraticRingElement(p, q, kappa, den)
                if not c.is_ring_integer():
                    continue
                if abs(c.norm()) == 1 and c > 1:
                    found.append(c)
    assert min(found) == u


def test_totient_values():
    assert [totient(n) for n in (1, 2, 5, 8, 10, 12)] == [1, 1, 4, 4, 4, 4]
    with pytest.raises(DomainError):
        totient(0)


def test_mixed_radicands_rejected():
    a = QuadraticRingElement(0, 1, 5)
    b = QuadraticRingElement(0, 1, 2)
    with pytest.raises(DomainError):
        a + b
