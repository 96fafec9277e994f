"""The Gray map from the mixed alphabet down to F_q.

Per coordinate b + w*c of the extension block the map emits (b + c, c);
on a whole word (u | u') it produces (u, b_0+c_0, ..., b_{beta-1}+c_{beta-1},
c_0, ..., c_{beta-1}), an F_q-linear bijection onto F_q^(alpha + 2 beta).
Images of additive cyclic codes are quasi-cyclic of index 3 when
alpha = beta, and more generally invariant under the block-shift
permutation that mirrors multiplication by x upstairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import GeneratorMatrixCode, MixedCode, MixedWord, PureCode

QUASI_CYCLIC_3 = "quasi-cyclic index 3"
GENERALIZED_QC = "generalized quasi-cyclic"
CYCLIC_EQUIVALENT = "equivalent to cyclic"


def gray_block(tower, uprime) -> np.ndarray:
    """Map a vector over F_q2 to the doubled vector (b+c pairs first, then c)."""
    up = np.asarray(uprime, dtype=np.uint8)
    b, c = tower.decompose(up)
    return np.concatenate([tower.base.add(b, c), c]).astype(np.uint8)


def gray_word(word: MixedWord) -> np.ndarray:
    """Map a mixed word to F_q^(alpha + 2 beta)."""
    u = np.asarray(word.u, dtype=np.uint8)
    return np.concatenate([u, gray_block(word.tower, word.uprime)])


def gray_word_inverse(tower, alpha, beta, vec) -> MixedWord:
    """Inverse of gray_word; the map is bijective."""
    vec = np.asarray(vec, dtype=np.uint8)
    if len(vec) != alpha + 2 * beta:
        raise ValueError("vector length does not match the split")
    u = tuple(int(x) for x in vec[:alpha])
    bc = vec[alpha : alpha + beta]
    c = vec[alpha + beta :]
    b = tower.base.sub(bc, c)
    up = tuple(int(x) for x in tower.compose(b, c))
    return MixedWord(tower, u, up)


def classify_gray_image(alpha: int, beta: int) -> str:
    """Structural class of the image of an additive cyclic code:
    index-3 quasi-cyclic when alpha = beta; generalized quasi-cyclic with
    block lengths (alpha, 2 beta) when 3 | alpha + 2 beta; otherwise
    (label only) equivalent to a cyclic code of length alpha + 2 beta."""
    if alpha < 1 or beta < 1:
        raise ValueError("block lengths must be positive")
    if alpha == beta:
        return QUASI_CYCLIC_3
    if (alpha + 2 * beta) % 3 == 0:
        return GENERALIZED_QC
    return CYCLIC_EQUIVALENT


@dataclass(eq=False)
class GrayImageCode:
    """An image code over F_q, remembering the source split."""

    base: GeneratorMatrixCode
    alpha: int
    beta: int
    classification: str

    @property
    def rank(self):
        return self.base.rank

    @property
    def length(self):
        return self.base.width

    @property
    def matrix(self):
        return self.base.matrix


def gray_image(code) -> GrayImageCode:
    """Row space of the Gray images of a code's basis words.  Linearity
    of the map makes this the image of the whole code; bijectivity keeps
    the F_q-dimension equal to the source dimension."""
    gm = code.closure if isinstance(code, (PureCode, MixedCode)) else code
    tw = gm.tower
    alpha, beta = gm.alpha, gm.beta
    rows = [gray_word(w) for w in gm.mixed_words()]
    mat = linalg.as_matrix(rows, width=alpha + 2 * beta)
    image = GeneratorMatrixCode(tw, mat)
    if image.rank != gm.rank:
        raise AssertionError("Gray image lost rank; the map must be injective")
    raw = None
    if gm.spanning_rows is not None:
        raw_rows = [
            gray_word(MixedWord.from_expanded(tw, alpha, beta, r))
            for r in gm.spanning_rows
        ]
        raw = linalg.as_matrix(raw_rows, width=alpha + 2 * beta)
    image.spanning_rows = raw
    # classification is defined for alpha, beta >= 1; a pure code's image
    # is just the doubled extension block
    label = classify_gray_image(alpha, beta) if alpha >= 1 else "extension block only"
    return GrayImageCode(image, alpha, beta, label)


def shift_columns_image(alpha, beta, mat):
    """sigma: cyclic shift of the alpha block and simultaneous cyclic
    shift of the two beta halves.  Intertwines with multiplication by x
    upstairs, so images of additive cyclic codes are invariant."""
    out = np.asarray(mat, dtype=np.uint8).copy()
    if alpha:
        out[:, :alpha] = np.roll(out[:, :alpha], 1, axis=1)
    out[:, alpha : alpha + beta] = np.roll(out[:, alpha : alpha + beta], 1, axis=1)
    out[:, alpha + beta :] = np.roll(out[:, alpha + beta :], 1, axis=1)
    return out


def shift_invariance_check(image: GrayImageCode) -> bool:
    """True iff the image's row space is sigma-invariant; for alpha = beta
    this is exactly quasi-cyclicity of index 3 on three equal blocks."""
    shifted = shift_columns_image(image.alpha, image.beta, image.matrix)
    return all(image.base.contains(row) for row in shifted)
