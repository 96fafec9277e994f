"""Field tower arithmetic: worked values, axioms, irreducibility oracles."""

import random

import numpy as np
import pytest

from addcyclic.fields import (
    Elem,
    FieldMismatchError,
    FieldTower,
    format_element,
    has_root,
    poly_eval,
    tower,
)

T3 = tower(3)
T4 = tower(4)
T8 = tower(8)
TOWERS = (T3, T4, T8)


def e(field, v):
    return Elem(field, v)


def test_add_mod3():
    assert e(T3.base, 2) + e(T3.base, 2) == e(T3.base, 1)


def test_add_char2():
    u = T4.u
    assert u + u == e(T4.base, 0)


def test_add_f9_componentwise():
    # (2+w) + (1+2w) = 0
    a = e(T3.ext, int(T3.compose(2, 1)))
    b = e(T3.ext, int(T3.compose(1, 2)))
    assert (a + b).value == 0


def test_mul_f4_defining_poly():
    u = T4.u
    assert u * u == e(T4.base, int(T4.base.add(T4.p, 1)))  # u^2 = u+1


def test_mul_f8_defining_poly():
    u = T8.u
    assert (u * u * u).value == 3  # u^3 = u+1, encoded as digits (1,1,0) base 2


def test_mul_f9_omega():
    # w(w+1) = w^2 + w = 2 + w
    w = T3.w
    one = e(T3.ext, 1)
    assert (w * (w + one)).value == int(T3.compose(2, 1))


def test_inv_f4():
    u = T4.u
    assert u.inverse().value == int(T4.base.add(T4.p, 1))  # u+1


def test_inv_f9():
    w = T3.w
    two_w = e(T3.ext, int(T3.compose(0, 2)))
    assert w.inverse() == two_w


def test_inv_zero_raises():
    for tw in TOWERS:
        with pytest.raises(ZeroDivisionError):
            e(tw.ext, 0).inverse()
        with pytest.raises(ZeroDivisionError):
            tw.base.inv(0)


def test_tower_mismatch():
    with pytest.raises(FieldMismatchError):
        e(T3.base, 1) + e(T4.base, 1)
    with pytest.raises(FieldMismatchError):
        e(T3.base, 1) * e(T3.ext, 1)


def test_decompose_examples():
    assert tuple(int(x) for x in T3.decompose(int(T3.compose(2, 1)))) == (2, 1)
    assert tuple(int(x) for x in T3.decompose(0)) == (0, 0)
    # embedded base element of F16 over F4: u -> (u, 0)
    assert tuple(int(x) for x in T4.decompose(T4.p)) == (T4.p, 0)


def test_compose_decompose_roundtrip_exhaustive():
    for tw in TOWERS + (tower(9),):
        for b in range(tw.q):
            for c in range(tw.q):
                z = int(tw.compose(b, c))
                assert tuple(int(x) for x in tw.decompose(z)) == (b, c)


def test_lagrange_exhaustive():
    # x^(|F|-1) = 1 for every nonzero x, all fields up to order 64
    for tw in TOWERS:
        for f in (tw.base, tw.ext):
            for x in range(1, f.order):
                assert f.pow(x, f.order - 1) == 1


@pytest.mark.parametrize("tw", TOWERS, ids=lambda t: f"q{t.q}")
def test_field_axioms_randomized(tw):
    rng = np.random.default_rng(12345)
    n = 10_000
    for f in (tw.base, tw.ext):
        a = rng.integers(0, f.order, n)
        b = rng.integers(0, f.order, n)
        c = rng.integers(0, f.order, n)
        assert np.array_equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c)))
        assert np.array_equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)))
        assert np.array_equal(f.add(a, b), f.add(b, a))
        assert np.array_equal(f.mul(a, b), f.mul(b, a))
        assert np.array_equal(f.mul(a, f.add(b, c)),
                              f.add(f.mul(a, b), f.mul(a, c)))
        assert np.array_equal(f.add(a, f.neg(a)), np.zeros(n, dtype=np.uint8))


def test_inverses_randomized():
    rng = random.Random(7)
    for tw in TOWERS:
        for f in (tw.base, tw.ext):
            for _ in range(200):
                x = rng.randrange(1, f.order)
                assert int(f.mul(x, f.inv(x))) == 1


def test_default_moduli_irreducible_by_root_search():
    # quadratic is irreducible over its base iff it has no root there
    for tw in TOWERS:
        assert not has_root(tw.base, tw.f2)
    assert T4.f2 == (2, 1, 1)   # x^2 + x + u over F_4
    assert T8.f2 == (1, 1, 1)   # x^2 + x + 1 over F_8
    assert T3.f2 == (1, 0, 1)   # x^2 + 1 over F_3


def test_reducible_f2_rejected():
    # x^2 - 1 = (x-1)(x+1) has roots everywhere
    with pytest.raises(ValueError):
        FieldTower(3, f2=(2, 0, 1))
    # x^2+1 is reducible over F_2: 1 is a root
    with pytest.raises(ValueError):
        FieldTower(4, f1=(1, 1, 1), f2=(1, 0, 1))


def test_reducible_f1_rejected():
    with pytest.raises(ValueError):
        FieldTower(4, f1=(1, 0, 1))  # x^2+1 = (x+1)^2 over F_2


def test_non_prime_power_rejected():
    with pytest.raises(ValueError):
        FieldTower(6)


def test_format_element():
    assert format_element(T3.ext, int(T3.compose(2, 2))) == "2w+2"
    assert format_element(T3.ext, 3) == "w"
    assert format_element(T4.base, T4.p) == "u"
    assert format_element(T8.base, int(T8.base.mul(T8.p, T8.base.mul(T8.p, T8.p)))) == "u+1"
    assert format_element(T3.base, 0) == "0"


def test_poly_eval_helper():
    # f2 of the q=3 tower has no roots but f(w) = 0 in the extension
    assert poly_eval(T3.ext, T3.f2, T3.omega) == 0
