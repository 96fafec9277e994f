"""Exact arithmetic in the two-level field tower F_p <= F_q <= F_q2.

Elements are plain integers.  An element of F_(p^m) is encoded by its
coordinate vector (c_0, ..., c_{m-1}) with respect to the power basis
1, u, ..., u^(m-1), packed little-endian in base p:

    value = c_0 + c_1*p + ... + c_{m-1}*p^(m-1)

The quadratic extension F_q2 = F_q[w]/<f2> packs the pair b + w*c as
b + q*c, so base-field elements embed as themselves and decomposition
into components is divmod by q.

All arithmetic goes through precomputed tables (the fields at play have
at most 64 elements), so every operation accepts ints or numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class FieldMismatchError(ValueError):
    """Operands belong to different fields or different towers."""


# Defining polynomials used when the caller does not supply one,
# as coefficient tuples, low degree first.
_DEFAULT_F1 = {
    4: (1, 1, 1),      # x^2 + x + 1 over F_2
    8: (1, 1, 0, 1),   # x^3 + x + 1 over F_2
}
_DEFAULT_F2 = {
    3: (1, 0, 1),      # x^2 + 1 over F_3
    4: (2, 1, 1),      # x^2 + x + u over F_4   (2 encodes u)
    8: (1, 1, 1),      # x^2 + x + 1 over F_8
}


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m = 0
    n = q
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


class Field:
    """A finite field of order <= 64, either F_p or an extension F_sub[t]/<modulus>.

    Carries add/mul/neg/inv lookup tables; `add`, `mul`, etc. broadcast over
    numpy arrays.  `symbol` is the display name of the adjoined generator
    ('u' for the middle level, 'w' for the top level).
    """

    def __init__(self, p, modulus=None, subfield=None, symbol=None):
        self.p = p
        self.subfield = subfield
        self.modulus = tuple(modulus) if modulus is not None else None
        self.symbol = symbol
        if subfield is None:
            self.degree = 1
            self.order = p
            add = np.add.outer(np.arange(p), np.arange(p)) % p
            mul = np.multiply.outer(np.arange(p), np.arange(p)) % p
        else:
            if self.modulus is None or self.modulus[-1] != 1:
                raise ValueError("extension requires a monic modulus")
            self.degree = len(self.modulus) - 1
            self.order = subfield.order ** self.degree
            add = np.zeros((self.order, self.order), dtype=np.uint8)
            mul = np.zeros((self.order, self.order), dtype=np.uint8)
            for a in range(self.order):
                da = self._digits(a)
                for b in range(self.order):
                    db = self._digits(b)
                    add[a, b] = self._pack([subfield.add(x, y) for x, y in zip(da, db)])
                    mul[a, b] = self._pack(self._polymul_mod(da, db))
        self.add_table = add.astype(np.uint8)
        self.mul_table = mul.astype(np.uint8)
        self.neg_table = np.array(
            [int(np.where(self.add_table[a] == 0)[0][0]) for a in range(self.order)],
            dtype=np.uint8,
        )
        inv = np.zeros(self.order, dtype=np.uint8)
        for a in range(1, self.order):
            hits = np.where(self.mul_table[a] == 1)[0]
            if len(hits) == 0:
                raise ValueError("modulus is not irreducible: found a zero divisor")
            inv[a] = hits[0]
        self.inv_table = inv
        self._signature = (p, self.modulus, subfield._signature if subfield else None)

    def _digits(self, a):
        base = self.subfield.order
        return [(a // base**i) % base for i in range(self.degree)]

    def _pack(self, digits):
        base = self.subfield.order
        return sum(int(d) * base**i for i, d in enumerate(digits))

    def _polymul_mod(self, da, db):
        sub = self.subfield
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                prod[i + j] = int(sub.add(prod[i + j], sub.mul(x, y)))
        # reduce by the monic modulus
        for d in range(len(prod) - 1, self.degree - 1, -1):
            c = prod[d]
            if c == 0:
                continue
            prod[d] = 0
            for i, mc in enumerate(self.modulus[:-1]):
                prod[d - self.degree + i] = int(
                    sub.add(prod[d - self.degree + i], sub.neg(sub.mul(c, mc)))
                )
        return prod[: self.degree]

    # -- arithmetic (ints or numpy arrays) --------------------------------

    def add(self, a, b):
        return self.add_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(int(self.inv(a)), -e)
        r = 1
        for _ in range(e):
            r = int(self.mul(r, a))
        return r

    def sum(self, arr, axis=None):
        """Field sum of a numpy array along `axis` (None: all entries)."""
        arr = np.asarray(arr, dtype=np.uint8)
        if axis is None:
            arr = arr.reshape(-1)
            axis = 0
        arr = np.moveaxis(arr, axis, 0)
        acc = np.zeros(arr.shape[1:], dtype=np.uint8)
        for row in arr:
            acc = self.add_table[acc, row]
        return acc if acc.shape else int(acc)

    def dot(self, x, y):
        return self.sum(self.mul(np.asarray(x), np.asarray(y)))

    def elements(self):
        return range(self.order)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and self._signature == other._signature

    def __hash__(self):
        return hash(self._signature)

    def __repr__(self):
        return f"Field(order={self.order})"


@dataclass(frozen=True)
class Elem:
    """A field element tagged with its field, for the checked public API."""

    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"value {self.value} out of range for {self.field}")

    def _check(self, other):
        if not isinstance(other, Elem):
            raise TypeError("expected an Elem")
        if other.field != self.field:
            raise FieldMismatchError(
                f"operands live in different fields "
                f"(orders {self.field.order} and {other.field.order})"
            )

    def __add__(self, other):
        self._check(other)
        return Elem(self.field, int(self.field.add(self.value, other.value)))

    def __sub__(self, other):
        self._check(other)
        return Elem(self.field, int(self.field.sub(self.value, other.value)))

    def __mul__(self, other):
        self._check(other)
        return Elem(self.field, int(self.field.mul(self.value, other.value)))

    def __neg__(self):
        return Elem(self.field, int(self.field.neg(self.value)))

    def inverse(self):
        return Elem(self.field, int(self.field.inv(self.value)))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return format_element(self.field, self.value)


class FieldTower:
    """The tower F_p <= F_q <= F_q2 with fixed defining polynomials.

    p, m      : q = p^m
    f1        : monic defining polynomial of F_q over F_p (None when m == 1)
    f2        : monic irreducible quadratic of F_q2 over F_q
    base, ext : the Field objects for F_q and F_q2
    omega     : the adjoined root of f2, as an integer element of `ext`

    Both defining polynomials are checked for irreducibility at
    construction by exhaustive search: f1 by trial division against every
    monic polynomial of degree <= deg(f1)/2 over F_p, f2 by evaluating at
    all q elements of F_q.  Immutable after construction.
    """

    def __init__(self, q, f1=None, f2=None):
        p, m = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.m = m
        self.prime = Field(p)
        if m == 1:
            if f1 is not None:
                raise ValueError("f1 is only meaningful when q is a proper prime power")
            self.f1 = None
            self.base = self.prime
        else:
            self.f1 = tuple(f1) if f1 is not None else _DEFAULT_F1.get(q)
            if self.f1 is None:
                self.f1 = _search_irreducible(self.prime, m)
            _check_f1(self.prime, self.f1, m)
            self.base = Field(p, modulus=self.f1, subfield=self.prime, symbol="u")
        self.f2 = tuple(f2) if f2 is not None else _DEFAULT_F2.get(q)
        if self.f2 is None:
            self.f2 = _search_irreducible(self.base, 2)
        _check_f2(self.base, self.f2)
        self.ext = Field(p, modulus=self.f2, subfield=self.base, symbol="w")
        self.omega = self.base.order  # 0 + 1*w

    # -- moving between the two levels ------------------------------------

    def compose(self, b, c):
        """The extension element b + w*c from base components (arrays ok)."""
        return np.asarray(b, dtype=np.uint8) + self.q * np.asarray(c, dtype=np.uint8)

    def decompose(self, z):
        """Base-field components (b, c) of z = b + w*c (arrays ok)."""
        z = np.asarray(z)
        return z % self.q, z // self.q

    def embed(self, b):
        """F_q viewed inside F_q2 (the encoding makes this the identity)."""
        return b

    @property
    def u(self):
        """Generator of F_q over F_p (only for proper prime powers q)."""
        if self.m == 1:
            raise ValueError("prime base field has no adjoined generator")
        return Elem(self.base, self.p)

    @property
    def w(self):
        return Elem(self.ext, self.omega)

    def __eq__(self, other):
        return (
            isinstance(other, FieldTower)
            and (self.q, self.f1, self.f2) == (other.q, other.f1, other.f2)
        )

    def __hash__(self):
        return hash((self.q, self.f1, self.f2))

    def __repr__(self):
        return f"FieldTower(q={self.q})"


@lru_cache(maxsize=None)
def tower(q, f1=None, f2=None):
    """Memoized FieldTower factory (f1/f2 as coefficient tuples)."""
    return FieldTower(q, f1=f1, f2=f2)


# -- irreducibility by exhaustive search -----------------------------------


def poly_eval(field, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = int(field.add(field.mul(acc, x), c))
    return acc


def has_root(field, coeffs):
    return any(poly_eval(field, coeffs, x) == 0 for x in field.elements())


def _check_f2(base, f2):
    if len(f2) != 3 or f2[-1] != 1:
        raise ValueError("f2 must be a monic quadratic")
    if any(not 0 <= c < base.order for c in f2):
        raise ValueError("f2 coefficients must lie in the base field")
    if has_root(base, f2):
        raise ValueError(f"f2 {f2} is reducible: it has a root in the base field")


def _check_f1(prime, f1, m):
    if len(f1) != m + 1 or f1[-1] != 1:
        raise ValueError(f"f1 must be monic of degree {m}")
    if any(not 0 <= c < prime.order for c in f1):
        raise ValueError("f1 coefficients must lie in the prime field")
    if not _is_irreducible(prime, f1):
        raise ValueError(f"f1 {f1} is reducible over F_{prime.order}")


def _is_irreducible(field, coeffs):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for packed in range(field.order**d):
            divisor = [(packed // field.order**i) % field.order for i in range(d)] + [1]
            if _poly_divides(field, divisor, coeffs):
                return False
    return True


def _poly_divides(field, a, b):
    rem = list(b)
    da = len(a) - 1
    while len(rem) - 1 >= da and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < da:
            break
        c = int(field.div(rem[-1], a[-1]))
        shift = len(rem) - 1 - da
        for i, ac in enumerate(a):
            rem[shift + i] = int(field.sub(rem[shift + i], field.mul(c, ac)))
    return not any(rem)


def _search_irreducible(field, deg):
    """Smallest (in packed-coefficient order) monic irreducible of degree `deg`."""
    for packed in range(field.order**deg):
        coeffs = tuple((packed // field.order**i) % field.order for i in range(deg)) + (1,)
        if deg == 2:
            ok = not has_root(field, coeffs)
        else:
            ok = _is_irreducible(field, coeffs)
        if ok:
            return coeffs
    raise ValueError(f"no irreducible of degree {deg} found")  # unreachable


# -- element rendering ------------------------------------------------------


def format_element(field, value, parens=False):
    """Render an element in the u/w notation, e.g. 'u^2', '2w+2', '(u+1)w'."""
    value = int(value)
    if field.subfield is None:
        return str(value)
    base = field.subfield.order
    digits = [(value // base**i) % base for i in range(field.degree)]
    terms = []
    for i in range(field.degree - 1, -1, -1):
        d = digits[i]
        if d == 0:
            continue
        if i == 0:
            terms.append(format_element(field.subfield, d))
            continue
        power = field.symbol if i == 1 else f"{field.symbol}^{i}"
        if d == 1:
            terms.append(power)
        else:
            coef = format_element(field.subfield, d, parens=True)
            terms.append(f"{coef}{power}")
    if not terms:
        return "0"
    out = "+".join(terms)
    if parens and "+" in out:
        return f"({out})"
    return out
