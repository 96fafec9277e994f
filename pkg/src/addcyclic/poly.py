"""Dense polynomials over a tower level, plus the table-notation parser.

Coefficients are stored low degree first with no trailing zeros, so the
zero polynomial has an empty coefficient tuple and degree() == -1.

The text format is the one used throughout the built-in code tables:
sums of terms like `x^4`, `ux^2`, `(2w+2)x`, `u^2`, `2w+1`.  There is no
minus sign; negatives are written through their field representatives.
"""

from __future__ import annotations

import numpy as np

from .fields import Field, FieldMismatchError, format_element


class PolyParseError(ValueError):
    """Syntax or coefficient-domain error, with the offending position."""

    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class Poly:
    """A dense polynomial over a fixed field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if any(not 0 <= c < field.order for c in cs):
            raise ValueError("coefficient out of range for the field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def xn_minus_1(cls, field, n):
        cs = [0] * (n + 1)
        cs[0] = int(field.neg(1))
        cs[n] = 1
        return cls(field, cs)

    @classmethod
    def from_vector(cls, field, vec):
        return cls(field, [int(c) for c in vec])

    # -- basic queries -----------------------------------------------------

    def degree(self):
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, d):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [int(f.add(self[i], other[i])) for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [int(f.sub(self[i], other[i])) for i in range(n)])

    def __neg__(self):
        f = self.field
        return Poly(f, [int(f.neg(c)) for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = int(f.add(out[i + j], f.mul(a, b)))
        return Poly(f, out)

    def scale(self, c):
        f = self.field
        return Poly(f, [int(f.mul(c, a)) for a in self.coeffs])

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree()
        lead_inv = int(f.inv(other.coeffs[-1]))
        quot = [0] * max(0, len(rem) - db)
        while len(rem) - 1 >= db:
            c = int(f.mul(rem[-1], lead_inv))
            shift = len(rem) - 1 - db
            quot[shift] = c
            for i, bc in enumerate(other.coeffs):
                rem[shift + i] = int(f.sub(rem[shift + i], f.mul(c, bc)))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(int(self.field.inv(self.coeffs[-1])))

    def __call__(self, x):
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = int(f.add(f.mul(acc, x), c))
        return acc

    # -- the quotient ring F[x]/<x^n - 1> -----------------------------------

    def cyclic_vector(self, n):
        """Coefficient vector of this polynomial mod x^n - 1, as a numpy array."""
        f = self.field
        v = np.zeros(n, dtype=np.uint8)
        for d, c in enumerate(self.coeffs):
            v[d % n] = f.add(v[d % n], c)
        return v

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# -- gcd machinery -----------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; undefined (raises) when both are zero."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(a: Poly, b: Poly):
    """Monic g = gcd(a, b) together with s, t such that s*a + t*b = g."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = int(f.inv(r0.coeffs[-1]))
    return r0.monic(), s0.scale(lead), t0.scale(lead)


def divides(a: Poly, b: Poly) -> bool:
    """True iff a | b; a must be nonzero."""
    if a.is_zero():
        raise ValueError("divisibility by the zero polynomial")
    return (b % a).is_zero()


def lift(p: Poly, ext_field: Field) -> Poly:
    """Reinterpret a base-field polynomial over the extension (same ints)."""
    return Poly(ext_field, p.coeffs)


def split_components(p: Poly, tower) -> tuple[Poly, Poly]:
    """Base-field component polynomials (b, c) of p = b + w*c over F_q2."""
    if p.field != tower.ext:
        raise FieldMismatchError("expected a polynomial over the top field")
    b = [c % tower.q for c in p.coeffs]
    c = [c // tower.q for c in p.coeffs]
    return Poly(tower.base, b), Poly(tower.base, c)


def combine_components(b: Poly, c: Poly, tower) -> Poly:
    """The polynomial b + w*c over F_q2 from base-field components."""
    n = max(len(b.coeffs), len(c.coeffs))
    return Poly(tower.ext, [b[i] + tower.q * c[i] for i in range(n)])


# -- parser -------------------------------------------------------------------

_SYMBOL_ALIASES = {"y": "x"}  # some source tables misprint y for x


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "uwxy":
            tokens.append(("sym", _SYMBOL_ALIASES.get(ch, ch), i))
            i += 1
        elif ch in "+*^()":
            tokens.append((ch, ch, i))
            i += 1
        elif ch == "-":
            raise PolyParseError(
                "minus is not part of the notation; write field representatives",
                text, i,
            )
        else:
            raise PolyParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent for  expr := term (+ term)*,
    term := factor (*? factor)*,  factor := atom (^ uint)?,
    atom := uint | u | w | x | ( expr ).
    """

    def __init__(self, text, field, tower=None):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0
        self.field = field
        self.tower = tower

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek()[0] == "+":
            self.take()
            acc = acc + self.term()
        return acc

    def term(self):
        acc = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("int", "sym", "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            _, _, pos = self.take()
            kind, value, _ = self.peek()
            if kind != "int":
                raise PolyParseError("expected an integer exponent after '^'",
                                     self.text, pos + 1)
            self.take()
            acc = Poly.one(self.field)
            for _ in range(value):
                acc = acc * base
            return acc
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return Poly(self.field, (value % self.field.p,)) if value % self.field.p \
                else Poly.zero(self.field)
        if kind == "sym":
            return self._symbol(value, pos)
        if kind == "(":
            inner = self.expr()
            kind2, _, pos2 = self.take()
            if kind2 != ")":
                raise PolyParseError("unbalanced parenthesis", self.text, pos2)
            return inner
        raise PolyParseError(f"unexpected token {kind!r}", self.text, pos)

    def _symbol(self, name, pos):
        field = self.field
        if name == "x":
            return Poly.x(field)
        if name == "u":
            tw = self.tower
            if tw is None or tw.m == 1:
                raise PolyParseError(
                    "symbol 'u' undefined: the base field is prime", self.text, pos)
            # u is an element of F_q; valid in F_q and (embedded) in F_q2
            return Poly(field, (tw.p,))
        if name == "w":
            tw = self.tower
            if tw is None or field != tw.ext:
                raise PolyParseError(
                    "symbol 'w' is not a valid coefficient here: "
                    "this polynomial must have base-field coefficients",
                    self.text, pos)
            return Poly(field, (tw.omega,))
        raise PolyParseError(f"unknown symbol {name!r}", self.text, pos)


def parse_poly(text: str, field: Field, tower=None) -> Poly:
    """Parse table notation into a Poly over `field`.

    `tower` supplies the meaning of the generators u and w; w is rejected
    unless `field` is the tower's top level.
    """
    parser = _Parser(text, field, tower)
    result = parser.expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise PolyParseError(f"trailing input starting with {kind!r}", text, pos)
    return result


def parse_scalar(text: str, field: Field, tower=None) -> int:
    """Parse a constant (degree <= 0) literal like '2w+1' into an element."""
    p = parse_poly(text, field, tower)
    if p.degree() > 0:
        raise PolyParseError("expected a constant, got a polynomial in x", text, 0)
    return p[0]


# -- rendering ----------------------------------------------------------------


def format_poly(p: Poly) -> str:
    """Render in descending-degree table notation; inverse of parse_poly."""
    if p.is_zero():
        return "0"
    terms = []
    for d in range(p.degree(), -1, -1):
        c = p[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(format_element(p.field, c))
            continue
        power = "x" if d == 1 else f"x^{d}"
        if c == 1:
            terms.append(power)
        else:
            terms.append(f"{format_element(p.field, c, parens=True)}{power}")
    return "+".join(terms)
