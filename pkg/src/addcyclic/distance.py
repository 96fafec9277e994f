"""Minimum-distance computation.

The exact engine enumerates the whole message space F_q^rank against a
declared weight profile (which coordinates form one alphabet symbol).
The space is partitioned by the leading message symbols; each partition
is evaluated as one vectorized block of suffix combinations, and a
running best weight is carried across partitions.  The result does not
depend on the partition granularity.  Codes beyond the enumeration
budget get a seeded randomized upper bound instead, reinforced with a
deterministic sweep of sparse combinations of the generating rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .codes import GeneratorMatrixCode

DEFAULT_BUDGET = 2**24
_BLOCK_TARGET = 2**16  # suffix-block row count the partition loop aims for


class DistanceBudgetError(ValueError):
    """Enumeration would exceed the budget; carries the required count."""

    def __init__(self, required, budget):
        super().__init__(
            f"exact enumeration needs {required} codewords but the budget is "
            f"{budget}; raise the budget or use min_distance_upper"
        )
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class WeightProfile:
    """Partition of the columns into alphabet symbols.

    Groups must be consecutive runs covering all columns: alpha singletons
    followed by beta pairs for mixed words, or all singletons for Gray
    images.  A group counts 1 toward the weight iff any of its columns is
    nonzero.
    """

    group_starts: tuple
    width: int

    def __post_init__(self):
        starts = self.group_starts
        if not starts or starts[0] != 0 or any(
            a >= b for a, b in zip(starts, starts[1:])
        ) or starts[-1] >= self.width:
            raise ValueError("groups must be consecutive nonempty runs from 0")

    @classmethod
    def mixed(cls, alpha, beta):
        """alpha singleton groups, then beta two-column groups."""
        starts = tuple(range(alpha)) + tuple(alpha + 2 * j for j in range(beta))
        return cls(starts, alpha + 2 * beta)

    @classmethod
    def singletons(cls, n):
        return cls(tuple(range(n)), n)

    @property
    def groups(self):
        return len(self.group_starts)

    def weights(self, block) -> np.ndarray:
        """Vector of symbol weights for a block of row vectors."""
        block = np.atleast_2d(np.asarray(block))
        if block.shape[1] != self.width:
            raise ValueError("row width does not match the profile")
        nz = block != 0
        grouped = np.bitwise_or.reduceat(nz, self.group_starts, axis=1)
        return grouped.sum(axis=1)


def weight(vec, profile: WeightProfile) -> int:
    """Number of alphabet symbols of a single word that are nonzero."""
    return int(profile.weights(np.asarray(vec).reshape(1, -1))[0])


def _suffix_block(field, rows):
    """All q^len(rows) combinations of the given rows, message order."""
    width = rows.shape[1] if rows.size else 0
    block = np.zeros((1, width), dtype=np.uint8)
    for row in rows:
        multiples = np.array([field.mul(c, row) for c in range(field.order)],
                             dtype=np.uint8)
        block = field.add(block[:, None, :], multiples[None, :, :])
        block = block.reshape(-1, width)
    return block


def min_distance_exact(code: GeneratorMatrixCode, profile: WeightProfile,
                       budget: int = DEFAULT_BUDGET,
                       suffix_rows: int | None = None) -> 'DistanceResult':
    """Exact minimum symbol weight over all nonzero codewords.

    Deterministic and independent of both enumeration order and the
    suffix/prefix partition split.  Refuses when q^rank exceeds `budget`.
    """
    field = code.field
    q = field.order
    r = code.rank
    if r == 0:
        raise ValueError("the zero code has no nonzero codewords")
    total = q**r
    if total > budget:
        raise DistanceBudgetError(total, budget)
    if suffix_rows is None:
        suffix_rows = r
        while q**suffix_rows > _BLOCK_TARGET and suffix_rows > 1:
            suffix_rows -= 1
    suffix_rows = min(max(suffix_rows, 1), r)
    suffix = _suffix_block(field, code.matrix[r - suffix_rows :])
    suffix_weights = profile.weights(suffix)
    prefix_rows = code.matrix[: r - suffix_rows]
    best = int(suffix_weights[1:].min())
    examined = len(suffix) - 1
    if best > 1:
        for msg in product(range(q), repeat=r - suffix_rows):
            if not any(msg):
                continue  # the all-zero prefix block was handled above
            prefix = np.zeros(code.width, dtype=np.uint8)
            for c, row in zip(msg, prefix_rows):
                if c:
                    prefix = field.add(prefix, field.mul(c, row))
            block = field.add(prefix[None, :], suffix)
            w = int(profile.weights(block).min())
            examined += len(block)
            if w < best:
                best = w
                if best == 1:
                    break
    return DistanceResult(value=best, exact=True, witnesses_examined=examined)


def min_distance_upper(code: GeneratorMatrixCode, profile: WeightProfile,
                       samples: int = 2000, seed: int = 0) -> 'DistanceResult':
    """Upper bound: the lightest word among seeded random messages plus a
    deterministic sweep of all single rows, scaled pairs and scaled
    triples of the basis rows and (when recorded) the raw generating
    rows.  Reproducible from the seed; never below the true distance."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    field = code.field
    q = field.order
    r = code.rank
    if r == 0:
        raise ValueError("the zero code has no nonzero codewords")
    pool = [code.matrix]
    if code.spanning_rows is not None:
        pool.append(code.spanning_rows)
    rows = np.unique(np.vstack(pool), axis=0)
    rows = rows[np.any(rows, axis=1)]
    candidates = [rows]
    examined = len(rows)
    nonzero = range(1, q)
    for i, j in combinations(range(len(rows)), 2):
        scaled = np.array([field.add(rows[i], field.mul(c, rows[j]))
                           for c in nonzero], dtype=np.uint8)
        candidates.append(scaled)
        examined += len(scaled)
    # sparse triples of the raw generating rows: x-shifts of the defining
    # generators are where low-weight words tend to live
    triple_pool = code.spanning_rows if code.spanning_rows is not None else rows
    triple_pool = np.unique(np.asarray(triple_pool, dtype=np.uint8), axis=0)
    triple_pool = triple_pool[np.any(triple_pool, axis=1)]
    if len(triple_pool) <= 40:
        for i, j, k in combinations(range(len(triple_pool)), 3):
            for b in nonzero:
                third = np.array(
                    [field.add(field.add(triple_pool[i], field.mul(b, triple_pool[j])),
                               field.mul(c, triple_pool[k]))
                     for c in nonzero], dtype=np.uint8)
                candidates.append(third)
                examined += len(third)
    rng = np.random.default_rng(seed)
    msgs = rng.integers(0, q, size=(samples, r), dtype=np.uint8)
    msgs = msgs[np.any(msgs, axis=1)]
    if len(msgs):
        sampled = np.zeros((len(msgs), code.width), dtype=np.uint8)
        for t in range(r):
            sampled = field.add(sampled, field.mul(msgs[:, t : t + 1], code.matrix[t : t + 1, :]))
        candidates.append(sampled)
        examined += len(sampled)
    stacked = np.vstack(candidates)
    stacked = stacked[np.any(stacked, axis=1)]
    best = int(profile.weights(stacked).min())
    return DistanceResult(value=best, exact=False,
                          witnesses_examined=examined, seed=seed)


@dataclass(frozen=True)
class DistanceResult:
    value: int
    exact: bool
    witnesses_examined: int
    seed: int | None = None
