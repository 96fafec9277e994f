"""Polynomial arithmetic, gcds, and the table-notation parser."""

import random

import pytest

from addcyclic.fields import tower
from addcyclic.poly import (
    Poly,
    PolyParseError,
    divides,
    format_poly,
    parse_poly,
    parse_scalar,
    poly_ext_gcd,
    poly_gcd,
)

T3 = tower(3)
T4 = tower(4)
T8 = tower(8)


def P(text, tw=T3, ext=False):
    return parse_poly(text, tw.ext if ext else tw.base, tw)


# -- divmod ------------------------------------------------------------------

def test_divmod_example():
    q, r = divmod(P("x^4+2x"), P("x^3+2"))
    assert q == P("x") and r.is_zero()


def test_mod_x3_minus_1():
    assert P("x^5") % P("x^3+2") == P("x^2")


def test_div_by_self():
    a = P("x^2+x+1")
    q, r = divmod(a, a)
    assert q == P("1") and r.is_zero()


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P("x"), Poly.zero(T3.base))


def test_divmod_identity_randomized():
    rng = random.Random(42)
    for tw in (T3, T4, T8):
        f = tw.base
        for _ in range(400):
            a = Poly(f, [rng.randrange(f.order) for _ in range(rng.randrange(9))])
            b = Poly(f, [rng.randrange(f.order) for _ in range(rng.randrange(1, 6))])
            if b.is_zero():
                continue
            q, r = divmod(a, b)
            assert b * q + r == a
            assert r.is_zero() or r.degree() < b.degree()


# -- gcd ---------------------------------------------------------------------

def test_gcd_examples():
    assert poly_gcd(P("x^3+2"), P("x^4+2x")) == P("x^3+2")
    a = P("2x^2+x")
    assert poly_gcd(a, Poly.zero(T3.base)) == a.monic()
    assert poly_gcd(P("x+2"), P("x+1")) == P("1")


def test_gcd_both_zero():
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(T3.base), Poly.zero(T3.base))


def test_gcd_properties_randomized():
    rng = random.Random(99)
    for tw in (T3, T4, T8):
        f = tw.base
        for _ in range(400):
            a = Poly(f, [rng.randrange(f.order) for _ in range(rng.randrange(8))])
            b = Poly(f, [rng.randrange(f.order) for _ in range(rng.randrange(8))])
            if a.is_zero() and b.is_zero():
                continue
            g = poly_gcd(a, b)
            assert g.coeffs[-1] == 1  # monic
            for p in (a, b):
                if not p.is_zero():
                    assert divides(g, p)
            g2, s, t = poly_ext_gcd(a, b)
            assert g2 == g
            assert s * a + t * b == g


# -- divisibility ------------------------------------------------------------

def test_divides_examples():
    assert divides(P("x+2"), P("x^3+2"))
    assert divides(P("x^2+u", T4), P("x^6+1", T4))
    assert not divides(P("x+1"), P("x^3+2"))


def test_divides_zero_divisor():
    with pytest.raises(ValueError):
        divides(Poly.zero(T3.base), P("x"))


# -- parser ------------------------------------------------------------------

def test_parse_table_literals():
    assert P("x^2+ux", T4).coeffs == (0, T4.p, 1)
    assert P("x^3+2").coeffs == (2, 0, 0, 1)


def test_parse_syntax_error_position():
    with pytest.raises(PolyParseError) as info:
        P("x^^2")
    assert info.value.pos == 2


def test_parse_rejects_minus():
    with pytest.raises(PolyParseError):
        P("x^2-1")


def test_parse_w_needs_extension_coefficients():
    with pytest.raises(PolyParseError):
        P("x+w")  # base-field polynomial cannot carry w
    assert P("x+w", ext=True).coeffs == (T3.omega, 1)


def test_parse_u_needs_proper_prime_power():
    with pytest.raises(PolyParseError):
        P("ux")  # q = 3 has no middle generator
    assert P("ux", T8).coeffs == (0, T8.p)


def test_parse_y_alias():
    assert P("y^2+2y") == P("x^2+2x")


def test_parse_parenthesized_coefficients():
    p = P("(2w+2)x^4+(w+1)x^3+2wx^2+(w+2)x+w+1", ext=True)
    assert p.coeffs == (
        int(T3.compose(1, 1)),
        int(T3.compose(2, 1)),
        int(T3.compose(0, 2)),
        int(T3.compose(1, 1)),
        int(T3.compose(2, 2)),
    )


def test_parse_explicit_product_and_whitespace():
    assert P("2*w + 2", ext=True) == P("2w+2", ext=True)


def test_parse_u_powers():
    p = P("x^4+u^5x^3+u^4x^2+x+u^4", T8)
    u = T8.p
    f = T8.base
    assert p.coeffs == (f.pow(u, 4), 1, f.pow(u, 4), f.pow(u, 5), 1)


def test_parse_trailing_garbage():
    with pytest.raises(PolyParseError):
        P("x^2+1)")


def test_parse_scalar():
    assert parse_scalar("2w+1", T3.ext, T3) == int(T3.compose(1, 2))
    with pytest.raises(PolyParseError):
        parse_scalar("x+1", T3.ext, T3)


def test_render_roundtrip_randomized():
    rng = random.Random(5)
    for tw in (T3, T4, T8):
        for f in (tw.base, tw.ext):
            for _ in range(300):
                p = Poly(f, [rng.randrange(f.order)
                             for _ in range(rng.randrange(7))])
                assert parse_poly(format_poly(p), f, tw) == p


def test_cyclic_vector_folds():
    v = P("x^3+2").cyclic_vector(3)  # x^3 == 1 -> 2 + 1 = 0
    assert not v.any()
    assert list(P("x^5").cyclic_vector(3)) == [0, 0, 1]
