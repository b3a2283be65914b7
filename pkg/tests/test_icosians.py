"""The unit icosians and the icosian ring."""

import random

import pytest

from qlat.quaternions import (
    GoldenQuaternion,
    is_in_icosian_ring,
    left_matrix,
    qconj,
    qmul,
    qnorm,
    require_unit,
    right_matrix,
    unit_icosians,
)
from qlat.ring import DomainError, QuadraticRingElement, golden, tau


def test_unit_icosian_count_and_norms():
    units = unit_icosians()
    assert len(units) == 120
    one = QuadraticRingElement(1)
    for u in units:
        assert qnorm(u) == one


def test_unit_icosians_closed_under_multiplication():
    units = unit_icosians()
    unit_set = set(units)
    for a in units:
        for b in units:
            assert qmul(a, b) in unit_set


def test_unit_icosians_form_a_group():
    units = unit_icosians()
    unit_set = set(units)
    one = GoldenQuaternion(1, 0, 0, 0)
    assert one in unit_set
    for u in units:
        # inverse of a unit quaternion is its conjugate
        assert qmul(u, qconj(u)) == one
        assert qconj(u) in unit_set


def test_golden_half_quaternion_square():
    h = QuadraticRingElement(1, 0, 5, 2)
    q = GoldenQuaternion(h, h, h, h)
    assert qmul(q, q) == GoldenQuaternion(-h, h, h, h)


def test_qnorm_is_multiplicative():
    units = unit_icosians()
    rng = random.Random(5)
    for _ in range(100):
        a = _random_ring_element(rng, bound=3)
        b = _random_ring_element(rng, bound=3)
        assert qnorm(qmul(a, b)) == qnorm(a) * qnorm(b)


def _random_ring_element(rng, bound=4):
    units = unit_icosians()
    total = GoldenQuaternion(0, 0, 0, 0)
    for _ in range(3):
        c = golden(rng.randint(-bound, bound), rng.randint(-bound, bound))
        total = total + rng.choice(units).scale(c)
    return total


def test_random_ring_sums_and_products_stay_in_the_ring():
    rng = random.Random(42)
    for _ in range(10_000):
        a = _random_ring_element(rng, bound=2)
        b = _random_ring_element(rng, bound=2)
        if rng.random() < 0.5:
            c = a + b
        else:
            c = qmul(a, b)
        assert is_in_icosian_ring(c)


def test_norm_one_ring_elements_in_a_box_are_the_unit_icosians():
    """Exhaustive oracle: every icosian of norm 1 with small golden
    coordinates is one of the 120 units."""
    one = QuadraticRingElement(1)
    found = set()
    units = set(unit_icosians())
    coords = [golden(m, n) * QuadraticRingElement(1, 0, 5, 2)
              for m in range(-2, 3) for n in range(-2, 3)]
    norm_one = []
    for w in coords:
        if (w * w) > one:
            continue
        norm_one.append(w)
    for w in norm_one:
        for x in norm_one:
            if w * w + x * x > one:
                continue
            for y in norm_one:
                if w * w + x * x + y * y > one:
                    continue
                for z in norm_one:
                    q = GoldenQuaternion(w, x, y, z)
                    if qnorm(q) == one and is_in_icosian_ring(q):
                        found.add(q)
    assert found == units


def test_left_right_matrices_commute():
    units = unit_icosians()
    from qlat.groups import GroupElement

    rng = random.Random(9)
    for _ in range(10):
        a, b = rng.choice(units), rng.choice(units)
        l = GroupElement(left_matrix(a))
        r = GroupElement(right_matrix(b))
        assert l @ r == r @ l


def test_matrix_realizations_match_quaternion_products():
    units = unit_icosians()
    from qlat.groups import GroupElement

    rng = random.Random(13)
    for _ in range(20):
        a, q = rng.choice(units), rng.choice(units)
        lm = GroupElement(left_matrix(a))
        assert lm.apply(q.as_vector()) == qmul(a, q).as_vector()
        rm = GroupElement(right_matrix(a))
        assert rm.apply(q.as_vector()) == qmul(q, a).as_vector()


def test_require_unit_rejects_non_units():
    with pytest.raises(DomainError):
        require_unit(GoldenQuaternion(2, 0, 0, 0))
    t = tau()
    with pytest.raises(DomainError):
        require_unit(GoldenQuaternion(t, 0, 0, 0))
