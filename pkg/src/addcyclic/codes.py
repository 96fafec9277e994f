"""Additive cyclic codes over F_q2 and over the mixed alphabet F_q x F_q2.

A word is (u | u') in F_q^alpha x F_q2^beta.  The ground truth for every
code object is its F_q-expanded generator matrix: each F_q2 coordinate
contributes two F_q columns (the b then the c component of b + w*c), and
the codeword set is the F_q-row space of all x-shifts of the generators
(the module closure).  Generator-polynomial bookkeeping — spanning sets,
the cardinality formula, canonical triples — is treated as a set of
claims that are checked against that matrix, because degenerate
generator choices (e.g. g ≡ 0 mod x^beta - 1) do occur in practice and
break the formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import linalg
from .fields import (
    Field,
    FieldMismatchError,
    FieldTower,
    _factor_prime_power,
    tower as get_tower,
)
from .poly import (
    Poly,
    combine_components,
    divides,
    lift,
    parse_poly,
    poly_ext_gcd,
    poly_gcd,
)


class CodeConstructionError(ValueError):
    """A generator-polynomial condition failed; the message names it."""


class CanonicalFormError(ValueError):
    """Operation requires canonical generators; use the module closure instead."""


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class MixedWord:
    """(u | u') with u over F_q (length alpha) and u' over F_q2 (length beta)."""

    tower: FieldTower
    u: tuple
    uprime: tuple

    @property
    def alpha(self):
        return len(self.u)

    @property
    def beta(self):
        return len(self.uprime)

    def shift(self):
        """Simultaneous right cyclic shift of both blocks (= multiply by x)."""
        u = self.u[-1:] + self.u[:-1]
        up = self.uprime[-1:] + self.uprime[:-1]
        return MixedWord(self.tower, u, up)

    def expand(self):
        """F_q expansion: [u | b_0, c_0, ..., b_{beta-1}, c_{beta-1}]."""
        t = self.tower
        out = np.zeros(self.alpha + 2 * self.beta, dtype=np.uint8)
        out[: self.alpha] = self.u
        up = np.asarray(self.uprime, dtype=np.uint8)
        b, c = t.decompose(up)
        out[self.alpha :: 2][: self.beta] = b
        out[self.alpha + 1 :: 2] = c
        return out

    @classmethod
    def from_expanded(cls, tower, alpha, beta, vec):
        vec = np.asarray(vec, dtype=np.uint8)
        if len(vec) != alpha + 2 * beta:
            raise ValueError("expanded width does not match the block lengths")
        u = tuple(int(x) for x in vec[:alpha])
        up = tuple(
            int(tower.compose(vec[alpha + 2 * j], vec[alpha + 2 * j + 1]))
            for j in range(beta)
        )
        return cls(tower, u, up)

    @classmethod
    def from_polys(cls, tower, alpha, beta, a: Poly, b: Poly):
        """Word with u = a mod x^alpha - 1 and u' = b mod x^beta - 1."""
        u = tuple(int(v) for v in a.cyclic_vector(alpha)) if alpha else ()
        up = tuple(int(v) for v in b.cyclic_vector(beta))
        return cls(tower, u, up)

    def __add__(self, other):
        if other.tower != self.tower:
            raise FieldMismatchError("words from different towers")
        if (other.alpha, other.beta) != (self.alpha, self.beta):
            raise ValueError("block lengths differ")
        t = self.tower
        u = tuple(int(t.base.add(x, y)) for x, y in zip(self.u, other.u))
        up = tuple(int(t.ext.add(x, y)) for x, y in zip(self.uprime, other.uprime))
        return MixedWord(t, u, up)

    def scale(self, c):
        """Multiply by a base-field scalar."""
        t = self.tower
        u = tuple(int(t.base.mul(c, x)) for x in self.u)
        up = tuple(int(t.ext.mul(c, x)) for x in self.uprime)
        return MixedWord(t, u, up)

    def is_zero(self):
        return not any(self.u) and not any(self.uprime)


def star(s: Poly, word: MixedWord) -> MixedWord:
    """The module action s(x) * (u | u') = (s·u mod x^alpha - 1 | s·u' mod x^beta - 1).

    s must have base-field coefficients; x * word is the simultaneous
    right cyclic shift of both blocks.
    """
    if s.field != word.tower.base:
        raise FieldMismatchError("scalar polynomial must be over the base field")
    acc = MixedWord(word.tower, (0,) * word.alpha, (0,) * word.beta)
    shifted = word
    for d in range(s.degree() + 1):
        if s[d]:
            acc = acc + shifted.scale(s[d])
        shifted = shifted.shift()
    return acc


def inner_product(x: MixedWord, y: MixedWord) -> int:
    """w * sum(u_i v_i) + sum(u'_j v'_j), an element of F_q2."""
    if x.tower != y.tower:
        raise FieldMismatchError("words from different towers")
    if (x.alpha, x.beta) != (y.alpha, y.beta):
        raise ValueError("block lengths differ")
    t = x.tower
    sa = t.base.dot(np.asarray(x.u, np.uint8), np.asarray(y.u, np.uint8)) if x.alpha else 0
    sb = t.ext.dot(np.asarray(x.uprime, np.uint8), np.asarray(y.uprime, np.uint8))
    return int(t.ext.add(t.ext.mul(t.omega, int(sa)), int(sb)))


# ---------------------------------------------------------------------------
# generator-matrix codes (the ground truth)


@dataclass(eq=False)
class GeneratorMatrixCode:
    """An F_q-linear code given by an rref basis matrix.

    For codes on the mixed alphabet the width is alpha + 2*beta with the
    expansion layout of MixedWord.expand; for plain F_q codes (Gray
    images, hulls, projections) alpha/beta describe the original split
    when meaningful and are otherwise None.
    """

    tower: FieldTower
    matrix: np.ndarray
    alpha: int | None = None
    beta: int | None = None
    spanning_rows: np.ndarray | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.matrix = linalg.row_basis(self.tower.base, self.matrix)

    @property
    def field(self):
        return self.tower.base

    @property
    def rank(self):
        return self.matrix.shape[0]

    @property
    def width(self):
        return self.matrix.shape[1]

    @property
    def size(self):
        return self.tower.q ** self.rank

    def contains(self, vec) -> bool:
        return linalg.in_rowspace(self.field, self.matrix, vec)

    def contains_code(self, other) -> bool:
        return all(self.contains(row) for row in other.matrix)

    def equals(self, other) -> bool:
        return self.width == other.width and linalg.rowspace_equal(
            self.field, self.matrix, other.matrix
        )

    def words(self):
        """Iterate all q^rank codewords (small codes only)."""
        f = self.field
        acc = np.zeros((1, self.width), dtype=np.uint8)
        for row in self.matrix:
            acc = f.add(acc[:, None, :], np.array([f.mul(c, row) for c in range(f.order)])[None, :, :])
            acc = acc.reshape(-1, self.width)
        return acc

    def mixed_words(self):
        if self.alpha is None or self.beta is None:
            raise ValueError("code has no mixed-alphabet split")
        return [
            MixedWord.from_expanded(self.tower, self.alpha, self.beta, row)
            for row in self.matrix
        ]


def module_closure(tw: FieldTower, alpha, beta, generators) -> GeneratorMatrixCode:
    """F_q-row space of all x-shifts of the generators, in rref.

    x has order dividing lcm(alpha, beta) on the ambient module, so that
    many shifts of each generator suffice.  This matrix is the
    authoritative codeword-set representation.
    """
    order = math.lcm(alpha, beta) if alpha else beta
    rows = []
    for gen in generators:
        w = gen
        for _ in range(order):
            rows.append(w.expand())
            w = w.shift()
    mat = linalg.as_matrix(rows, width=alpha + 2 * beta)
    return GeneratorMatrixCode(tw, mat, alpha=alpha, beta=beta, spanning_rows=mat)


# ---------------------------------------------------------------------------
# pure codes over F_q2


class PureCode:
    """An additive cyclic code over F_q2 of length n, generated (as an
    F_q[x]-module of F_q2[x]/<x^n - 1>) by g + w*h and w*k, where g, h, k
    have base-field coefficients and g, k divide x^n - 1.

    A polynomial vanishing mod x^n - 1 is normalized to x^n - 1 itself
    (the zero ideal's representative), which keeps degree bookkeeping
    consistent: q^(n - deg) = 1.
    """

    def __init__(self, tw: FieldTower, n: int, g: Poly, h: Poly, k: Poly):
        if n < 1:
            raise ValueError("length must be positive")
        for name, p in (("g", g), ("h", h), ("k", k)):
            if p.field != tw.base:
                raise CodeConstructionError(f"{name} must have base-field coefficients")
        xn1 = Poly.xn_minus_1(tw.base, n)
        g = xn1 if g.is_zero() else g
        k = xn1 if k.is_zero() else k
        if not divides(g, xn1):
            raise CodeConstructionError(f"g = {g} does not divide x^{n}-1 over F_{tw.q}")
        if not divides(k, xn1):
            raise CodeConstructionError(f"k = {k} does not divide x^{n}-1 over F_{tw.q}")
        self.tower = tw
        self.n = n
        self.g = g
        self.h = h
        self.k = k

    @cached_property
    def closure(self) -> GeneratorMatrixCode:
        return module_closure(self.tower, 0, self.n, self.generator_words())

    def generator_words(self):
        tw = self.tower
        gwh = combine_components(self.g, self.h, tw)
        wk = combine_components(Poly.zero(tw.base), self.k, tw)
        return [
            MixedWord.from_polys(tw, 0, self.n, Poly.zero(tw.base), gwh),
            MixedWord.from_polys(tw, 0, self.n, Poly.zero(tw.base), wk),
        ]

    @property
    def dimension(self):
        """F_q-dimension of the codeword set."""
        return self.closure.rank

    def cardinality(self):
        """(formula, actual): q^(n-deg g) * q^(n-deg k) against q^rank."""
        q = self.tower.q
        formula = q ** (self.n - self.g.degree()) * q ** (self.n - self.k.degree())
        return Cardinality(formula, q**self.closure.rank)

    def is_canonical(self):
        g2, h2, k2 = canonicalize_pure(self.tower, self.n, self.g, self.h, self.k)
        return (
            self.g.monic() == g2
            and self.k.monic() == k2
            and (self.h % self.k if not self.k.is_zero() else self.h) == h2
        )

    def basis_words(self):
        """The spanning set {x^i (g + w h)} ∪ {w x^j k} with
        i < n - deg g and j < n - deg k.  Only valid (an actual F_q-basis)
        for canonical generator triples; otherwise it can fail to span and
        this method refuses.
        """
        if not self.is_canonical():
            raise CanonicalFormError(
                "generators are not canonical, so the degree-counted set need "
                "not span; canonicalize first or use the module closure"
            )
        tw = self.tower
        words = []
        gwh, wk = self.generator_words()
        cur = gwh
        for _ in range(self.n - self.g.degree()):
            words.append(cur)
            cur = cur.shift()
        cur = wk
        for _ in range(self.n - self.k.degree()):
            words.append(cur)
            cur = cur.shift()
        return words

    def __repr__(self):
        return (
            f"PureCode(q={self.tower.q}, n={self.n}, g={self.g}, "
            f"h={self.h}, k={self.k})"
        )


def canonicalize_pure(tw: FieldTower, n: int, g: Poly, h: Poly, k: Poly):
    """Canonical generator triple (g*, h*, k*) with the same module closure.

    g* generates the ideal of first components, k* the ideal of w-parts of
    words with zero first component, and h* is the w-part of a preimage of
    g*, reduced mod k*.  Both g* and k* are monic divisors of x^n - 1 (the
    zero ideal is represented by x^n - 1 itself) and the construction is
    idempotent.
    """
    base = tw.base
    xn1 = Poly.xn_minus_1(base, n)
    if g.is_zero() or divides(xn1, g):
        gstar = xn1
        a = Poly.zero(base)
    else:
        gstar, a, _ = poly_ext_gcd(g, xn1)
    kernel_gens = [xn1]
    if not k.is_zero():
        kernel_gens.append(k)
    lifted = h * (xn1 // gstar)
    if not lifted.is_zero():
        kernel_gens.append(lifted)
    kstar = kernel_gens[0]
    for p in kernel_gens[1:]:
        kstar = poly_gcd(kstar, p)
    hstar = (a * h) % xn1
    if not kstar.is_zero():
        hstar = hstar % kstar
    return gstar.monic(), hstar, kstar.monic()


# ---------------------------------------------------------------------------
# mixed codes


@dataclass(frozen=True)
class Cardinality:
    formula: int
    actual: int

    @property
    def agree(self):
        return self.formula == self.actual


@dataclass(frozen=True)
class SpanningSet:
    words: tuple
    spans_ok: bool

    def sizes(self):
        return len(self.words)


class MixedCode:
    """An additive cyclic code of block length (alpha, beta), generated by
    (s | l), (0 | g + w h) and (0 | w k), where s | x^alpha - 1 and
    g, k | x^beta - 1 with base-field coefficients, and l has F_q2
    coefficients.

    Two further generator conditions characterize the canonical
    presentation: k | h (x^beta - 1)/g (skipped when g ≡ 0 mod
    x^beta - 1) and ((x^alpha - 1)/s) l ∈ <g + w h, w k>.  With
    strict=True (the default) a violation raises; with strict=False the
    code is built anyway — its codeword set is still the perfectly
    well-defined module closure of the three generators — and the names
    of the violated conditions are recorded in `condition_failures`.
    Published generator tables do contain such degenerate rows.
    """

    def __init__(self, tw: FieldTower, alpha: int, beta: int,
                 s: Poly, l: Poly, g: Poly, h: Poly, k: Poly, strict=True):
        if alpha < 1 or beta < 1:
            raise ValueError("block lengths must be positive")
        for name, p in (("s", s), ("g", g), ("h", h), ("k", k)):
            if p.field != tw.base:
                raise CodeConstructionError(f"{name} must have base-field coefficients")
        if l.field != tw.ext:
            raise CodeConstructionError("l must have top-field coefficients")
        base = tw.base
        xa1 = Poly.xn_minus_1(base, alpha)
        xb1 = Poly.xn_minus_1(base, beta)
        s = xa1 if s.is_zero() else s
        g = xb1 if g.is_zero() else g
        k = xb1 if k.is_zero() else k
        if not divides(s, xa1):
            raise CodeConstructionError(f"s = {s} does not divide x^{alpha}-1")
        if not divides(g, xb1):
            raise CodeConstructionError(f"g = {g} does not divide x^{beta}-1")
        if not divides(k, xb1):
            raise CodeConstructionError(f"k = {k} does not divide x^{beta}-1")
        self.tower = tw
        self.alpha = alpha
        self.beta = beta
        self.s, self.l, self.g, self.h, self.k = s, l, g, h, k

        failures = []
        g_vanishes = divides(xb1, g)
        if not g_vanishes and not divides(k, h * (xb1 // g)):
            failures.append("k does not divide h*(x^beta-1)/g")
        # membership of ((x^alpha-1)/s) * l in the beta-side kernel module
        leftover = lift(xa1 // s, tw.ext) * l
        member_word = MixedWord.from_polys(tw, 0, beta, Poly.zero(base), leftover)
        kernel_code = module_closure(tw, 0, beta, [
            MixedWord.from_polys(tw, 0, beta, Poly.zero(base),
                                 combine_components(g, h, tw)),
            MixedWord.from_polys(tw, 0, beta, Poly.zero(base),
                                 combine_components(Poly.zero(base), k, tw)),
        ])
        if not kernel_code.contains(member_word.expand()):
            failures.append("((x^alpha-1)/s)*l is not in <g+wh, wk>")
        self.condition_failures = tuple(failures)
        if strict and failures:
            raise CodeConstructionError("; ".join(failures))

    def generator_words(self):
        tw = self.tower
        return [
            MixedWord.from_polys(tw, self.alpha, self.beta, self.s, self.l),
            MixedWord.from_polys(tw, self.alpha, self.beta, Poly.zero(tw.base),
                                 combine_components(self.g, self.h, tw)),
            MixedWord.from_polys(tw, self.alpha, self.beta, Poly.zero(tw.base),
                                 combine_components(Poly.zero(tw.base), self.k, tw)),
        ]

    @cached_property
    def closure(self) -> GeneratorMatrixCode:
        return module_closure(self.tower, self.alpha, self.beta,
                              self.generator_words())

    @property
    def dimension(self):
        return self.closure.rank

    def spanning_set(self) -> SpanningSet:
        """The degree-counted spanning set S1 ∪ S2 ∪ S3 (x-shift ranges of
        the three generators, |S1| = alpha - deg s, |S2| = beta - deg g,
        |S3| = beta - deg k), with spans_ok reporting whether its span
        really is the whole code."""
        gens = self.generator_words()
        counts = [
            self.alpha - self.s.degree(),
            self.beta - self.g.degree(),
            self.beta - self.k.degree(),
        ]
        words = []
        for gen, count in zip(gens, counts):
            cur = gen
            for _ in range(max(count, 0)):
                words.append(cur)
                cur = cur.shift()
        mat = linalg.as_matrix([w.expand() for w in words],
                               width=self.alpha + 2 * self.beta)
        ok = linalg.rowspace_equal(self.tower.base, mat, self.closure.matrix)
        return SpanningSet(tuple(words), ok)

    def cardinality(self) -> Cardinality:
        """(formula, actual) sizes; they agree exactly when the
        degree-counted spanning set spans."""
        q = self.tower.q
        exponent = (
            (self.alpha - self.s.degree())
            + (self.beta - self.g.degree())
            + (self.beta - self.k.degree())
        )
        return Cardinality(q**exponent, q**self.closure.rank)

    def __repr__(self):
        return (
            f"MixedCode(q={self.tower.q}, alpha={self.alpha}, beta={self.beta}, "
            f"s={self.s}, l={self.l}, g={self.g}, h={self.h}, k={self.k})"
        )


# ---------------------------------------------------------------------------
# duality, cyclicity, projections


def _form_matrix(tw: FieldTower, alpha, beta):
    """Gram matrix of the F_q2-valued form on the expanded F_q basis."""
    n = alpha + 2 * beta
    ext = tw.ext
    B = np.zeros((n, n), dtype=np.uint8)
    for i in range(alpha):
        B[i, i] = tw.omega
    wsq = int(ext.mul(tw.omega, tw.omega))
    for j in range(beta):
        b = alpha + 2 * j
        B[b, b] = 1
        B[b, b + 1] = tw.omega
        B[b + 1, b] = tw.omega
        B[b + 1, b + 1] = wsq
    return B


def dual(code) -> GeneratorMatrixCode:
    """All words orthogonal to the code under the mixed inner product.

    Each generator contributes two F_q-linear constraints: the 1- and
    w-components of the F_q2-valued form.  Solved as one kernel
    computation over F_q.
    """
    gm = code.closure if isinstance(code, (PureCode, MixedCode)) else code
    if gm.alpha is None or gm.beta is None:
        raise ValueError("dual needs the mixed-alphabet split")
    tw = gm.tower
    B = _form_matrix(tw, gm.alpha, gm.beta)
    ext = tw.ext
    rows = []
    for x in gm.matrix:
        w = ext.sum(ext.mul(x[:, None], B), axis=0)
        b, c = tw.decompose(w)
        rows.append(b)
        rows.append(c)
    constraints = linalg.as_matrix(rows, width=gm.width)
    basis = linalg.kernel(tw.base, constraints)
    return GeneratorMatrixCode(tw, basis, alpha=gm.alpha, beta=gm.beta)


def shift_columns(alpha, beta, mat):
    """Apply the simultaneous right cyclic shift to expanded rows."""
    out = np.asarray(mat, dtype=np.uint8).copy()
    if alpha:
        out[:, :alpha] = np.roll(out[:, :alpha], 1, axis=1)
    out[:, alpha:] = np.roll(out[:, alpha:], 2, axis=1)
    return out


def is_cyclic(code: GeneratorMatrixCode, alpha=None, beta=None) -> bool:
    """True iff the row space is closed under the simultaneous right
    cyclic shift of the alpha block and the beta block (the latter acting
    on (b, c) column pairs jointly)."""
    alpha = code.alpha if alpha is None else alpha
    beta = code.beta if beta is None else beta
    if alpha is None or beta is None:
        raise ValueError("cyclicity needs the block split")
    if code.width != alpha + 2 * beta:
        raise ValueError("matrix width does not match the declared split")
    shifted = shift_columns(alpha, beta, code.matrix)
    return all(code.contains(row) for row in shifted)


def projections(code):
    """(C_alpha, C_beta): images under the two coordinate projections,
    with the beta side kept in F_q-expanded form."""
    gm = code.closure if isinstance(code, (PureCode, MixedCode)) else code
    if gm.alpha is None or gm.beta is None:
        raise ValueError("projections need the mixed-alphabet split")
    tw = gm.tower
    a = gm.alpha
    c_alpha = GeneratorMatrixCode(tw, gm.matrix[:, :a], alpha=a, beta=0)
    c_beta = GeneratorMatrixCode(tw, gm.matrix[:, a:], alpha=0, beta=gm.beta)
    return c_alpha, c_beta


@dataclass(frozen=True)
class SingletonResult:
    attains: bool
    slack: int


def singleton_check(n: int, size: int, alphabet: int, d: int) -> SingletonResult:
    """Compare |C| against alphabet^(n-d+1).  `slack` is the difference of
    the alphabet-base logarithms; a negative bound violation raises, since
    it means the distance was miscomputed."""
    if d < 1:
        raise ValueError("distance must be >= 1")
    k = 0
    m = size
    while m > 1:
        if m % alphabet:
            raise ValueError("size is not a power of the alphabet size")
        m //= alphabet
        k += 1
    slack = (n - d + 1) - k
    if slack < 0:
        raise ValueError(
            f"Singleton bound violated: |C| = {alphabet}^{k} > {alphabet}^{n - d + 1}"
        )
    return SingletonResult(slack == 0, slack)


# ---------------------------------------------------------------------------
# best-effort generator extraction (for duals)


@dataclass(frozen=True)
class ExtractedGenerators:
    s: Poly
    l: Poly
    g: Poly
    h: Poly
    k: Poly
    closure_ok: bool


def extract_mixed_generators(code: GeneratorMatrixCode):
    """Recover a generator quintuple (s, l, g, h, k) for a cyclic mixed
    code given by its matrix.  Best effort: the result always satisfies
    the divisibility conditions, and closure_ok records whether its
    module closure reproduces the input row space exactly."""
    tw = code.tower
    alpha, beta = code.alpha, code.beta
    if alpha is None or beta is None or alpha < 1:
        raise ValueError("extraction needs a mixed split with alpha >= 1")
    base = tw.base
    xa1 = Poly.xn_minus_1(base, alpha)
    words = code.mixed_words()
    alpha_polys = [Poly(base, w.u) for w in words if any(w.u)]
    if alpha_polys:
        s = xa1
        for p in alpha_polys:
            s = poly_gcd(s, p)
    else:
        s = xa1
    # a word whose alpha part is exactly s
    svec = s.cyclic_vector(alpha)
    sol = linalg.solve(base, code.matrix[:, :alpha].T, svec)
    if sol is None:
        l = Poly.zero(tw.ext)
    else:
        word = tw.base.sum(tw.base.mul(sol[:, None], code.matrix), axis=0)
        mixed = MixedWord.from_expanded(tw, alpha, beta, word)
        l = Poly(tw.ext, mixed.uprime)
    # the kernel of the alpha projection, as a pure code on the beta side
    ker = linalg.intersect(
        base,
        code.matrix,
        np.hstack([
            np.zeros((2 * beta, alpha), dtype=np.uint8),
            np.eye(2 * beta, dtype=np.uint8),
        ]),
    )
    xb1 = Poly.xn_minus_1(base, beta)
    g = xb1
    for row in ker:
        bp = Poly(base, [int(x) for x in row[alpha::2]])
        if not bp.is_zero():
            g = poly_gcd(g, bp)
    # k: generator of the ideal of c-parts of words with both u and b zero
    c_selector = np.zeros((beta, alpha + 2 * beta), dtype=np.uint8)
    for j in range(beta):
        c_selector[j, alpha + 2 * j + 1] = 1
    c_code = linalg.intersect(base, code.matrix, c_selector)
    k = xb1
    for row in c_code:
        cp = Poly(base, [int(x) for x in row[alpha + 1 :: 2]])
        if not cp.is_zero():
            k = poly_gcd(k, cp)
    # h: the c-part of some kernel word whose b-part equals g
    h = Poly.zero(base)
    if not divides(xb1, g) and len(ker):
        kermat = linalg.as_matrix(ker, width=alpha + 2 * beta)
        bcols = kermat[:, alpha::2]
        sol_h = linalg.solve(base, bcols.T, g.cyclic_vector(beta))
        if sol_h is not None:
            word = tw.base.sum(tw.base.mul(sol_h[:, None], kermat), axis=0)
            h = Poly(base, [int(x) for x in word[alpha + 1 :: 2]])
    g, h, k = canonicalize_pure(tw, beta, g, h, k)
    candidate = MixedCode(tw, alpha, beta, s, l, g, h, k, strict=False)
    ok = candidate.closure.equals(code)
    return ExtractedGenerators(s, l, g, h, k, ok)


# ---------------------------------------------------------------------------
# definition documents


def load_definition(doc: dict, strict=True):
    """Build a code from the JSON definition document:
    {"q": int, "alpha": int, "beta": int, "s","l","g","h","k": str,
     "f1": str?, "f2": str?}.  Pure codes use alpha = 0 (s, l omitted)."""
    q = int(doc["q"])
    p, _ = _factor_prime_power(q)
    f1 = f2 = None
    if "f1" in doc:
        f1 = tuple(int(c) for c in parse_poly(doc["f1"], Field(p)).coeffs)
    if "f2" in doc:
        pre = get_tower(q, f1=f1)
        f2 = tuple(int(c) for c in parse_poly(doc["f2"], pre.base, pre).coeffs)
    tw = get_tower(q, f1=f1, f2=f2)
    alpha = int(doc.get("alpha", 0))
    beta = int(doc["beta"])
    g = parse_poly(doc["g"], tw.base, tw)
    h = parse_poly(doc["h"], tw.base, tw)
    k = parse_poly(doc["k"], tw.base, tw)
    if alpha == 0:
        return PureCode(tw, beta, g, h, k)
    s = parse_poly(doc["s"], tw.base, tw)
    l = parse_poly(doc["l"], tw.ext, tw)
    return MixedCode(tw, alpha, beta, s, l, g, h, k, strict=strict)
