"""Root systems: counts, closure under reflection, exact geometry."""

import numpy as np
import pytest

from qlat.ring import DomainError, QuadraticRingElement, tau
from qlat.roots import (
    H3,
    H4,
    I2,
    QUADRATIC_I2,
    RootSystemId,
    embed_float,
    gram,
    is_quadratic,
    root_count_decomposition,
    roots,
    simple_roots,
)
from qlat.vectors import reflect

QUAD_SYSTEMS = [I2(5), I2(8), I2(10), I2(12), H3, H4]


def test_parse():
    assert RootSystemId.parse("H3") == H3
    assert RootSystemId.parse("I2-8") == I2(8)
    assert RootSystemId.parse("I2(12)") == I2(12)
    with pytest.raises(DomainError):
        RootSystemId.parse("E8")
    with pytest.raises(DomainError):
        I2(4)  # crystallographic
    with pytest.raises(DomainError):
        I2(6)


@pytest.mark.parametrize("system,count", [
    (I2(5), 10), (I2(8), 16), (I2(10), 20), (I2(12), 24),
    (H3, 30), (H4, 120),
])
def test_root_counts(system, count):
    assert len(roots(system)) == count
    assert sum(root_count_decomposition(system)) == count


def test_float_i2_root_count():
    assert len(roots(I2(7))) == 14
    assert not is_quadratic(I2(7))


@pytest.mark.parametrize("system", QUAD_SYSTEMS)
def test_roots_come_in_opposite_pairs(system):
    rs = set(roots(system))
    for r in rs:
        assert -r in rs


@pytest.mark.parametrize("system", QUAD_SYSTEMS)
def test_root_lengths(system):
    """Odd systems have one root length; even 2D systems two (the short
    roots of unity and the long adjacent sums), as in B2 and G2."""
    g = gram(system)
    one = QuadraticRingElement(1)
    lengths = {float(r.dot(r, g)) for r in roots(system)}
    if system.family in ("H3", "H4") or system.n % 2 == 1:
        assert all(r.dot(r, g) == one for r in roots(system))
    else:
        assert len(lengths) == 2
        assert min(lengths) == 1.0


@pytest.mark.parametrize("system", QUAD_SYSTEMS)
def test_exact_closure_under_all_reflections(system):
    rs = roots(system)
    g = gram(system)
    root_set = set(rs)
    for r in rs:
        for v in rs:
            assert reflect(v, r, g) in root_set


@pytest.mark.parametrize("system", QUAD_SYSTEMS)
def test_embedding_matches_exact_inner_products(system):
    g = gram(system)
    rs = roots(system)
    for r in rs[:8]:
        for v in rs[:8]:
            exact = float(r.dot(v, g))
            x, y = embed_float(system, r), embed_float(system, v)
            assert abs(float(np.dot(x, y)) - exact) < 1e-12


def test_i2_5_and_i2_10_span_the_same_roots():
    """The decagonal root set is the pentagonal one plus its negatives'
    midpoint pairs; both generate the same integer span."""
    r5 = set(roots(I2(5)))
    r10 = set(roots(I2(10)))
    assert r5 <= r10
    from qlat.modules import membership, ql

    qlm = ql("I2-5")
    for r in r10:
        assert membership(qlm, r).member


def test_h3_golden_coordinate_shape():
    t = tau()
    half = QuadraticRingElement(1, 0, 5, 2)
    rs = roots(H3)
    plain = [r for r in rs if all(c.q == 0 for c in r.coords)]
    assert len(plain) == 6
    assert any(r.coords == (t * half, half, (t - 1) * half) for r in rs)


@pytest.mark.parametrize("system", QUAD_SYSTEMS)
def test_simple_roots_have_correct_count(system):
    sr = simple_roots(system)
    assert len(sr) == system.rank


@pytest.mark.parametrize("system,order", [
    (I2(5), 10), (I2(8), 16), (I2(12), 24), (H3, 120),
])
def test_simple_root_reflections_generate_full_group(system, order):
    from qlat.groups import generate

    assert generate(system).order == order
