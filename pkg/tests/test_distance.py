"""Distance engines against a naive full-enumeration oracle.

The oracle below iterates the whole message space with itertools and
computes weights group by group in pure Python; it shares no code with
the vectorized engine it checks.
"""

import random
from itertools import product

import numpy as np
import pytest

from addcyclic.codes import GeneratorMatrixCode, MixedCode
from addcyclic.distance import (
    DistanceBudgetError,
    WeightProfile,
    min_distance_exact,
    min_distance_upper,
    weight,
)
from addcyclic.fields import tower
from addcyclic.gray import gray_image
from addcyclic.poly import parse_poly
from addcyclic.tables import TABLE1, TABLE2, build_table1_code, build_table2_code

from test_codes import random_mixed_code

T3 = tower(3)
T4 = tower(4)


def naive_min_distance(field, matrix, groups):
    """Independent oracle: full message-space enumeration, plain Python."""
    matrix = [list(int(x) for x in row) for row in matrix]
    ncols = len(matrix[0]) if matrix else 0
    best = None
    for msg in product(range(field.order), repeat=len(matrix)):
        if not any(msg):
            continue
        vec = [0] * ncols
        for c, row in zip(msg, matrix):
            if c:
                for i, entry in enumerate(row):
                    vec[i] = int(field.add(vec[i], field.mul(c, entry)))
        w = sum(1 for grp in groups if any(vec[i] for i in grp))
        if best is None or w < best:
            best = w
    return best


def groups_of(profile):
    starts = list(profile.group_starts) + [profile.width]
    return [tuple(range(a, b)) for a, b in zip(starts, starts[1:])]


def test_weight_examples():
    prof = WeightProfile.mixed(2, 2)
    assert weight([1, 0, 0, 0, 0, 1], prof) == 2
    assert weight([0, 0, 0, 0, 0, 0], prof) == 0
    assert weight([1, 1], WeightProfile.singletons(2)) == 2


def test_gray_image_weight_can_exceed_mixed_weight():
    # the word (0 | w) has mixed weight 1; its image (1, 1) has weight 2
    from addcyclic.codes import MixedWord
    from addcyclic.gray import gray_word
    w = MixedWord(T3, (), (T3.omega,))
    assert weight(w.expand(), WeightProfile.mixed(0, 1)) == 1
    img = gray_word(w)
    assert list(img) == [1, 1]
    assert weight(img, WeightProfile.singletons(2)) == 2


def test_weight_profile_validation():
    with pytest.raises(ValueError):
        WeightProfile((1, 2), 4)  # does not start at 0
    with pytest.raises(ValueError):
        WeightProfile((0, 0), 2)  # not increasing
    with pytest.raises(ValueError):
        weight([1, 0, 0], WeightProfile.singletons(2))


def test_exact_all_ones_span():
    rows = np.ones((1, 9), dtype=np.uint8)
    gm = GeneratorMatrixCode(T3, rows)
    res = min_distance_exact(gm, WeightProfile.singletons(9))
    assert res.value == 9 and res.exact


def test_exact_table1_row1():
    code = build_table1_code(TABLE1[0])
    res = min_distance_exact(code.closure, WeightProfile.mixed(0, 5))
    assert res.value == 3


def test_exact_table2_row9_gray():
    code = build_table2_code(TABLE2[8])
    img = gray_image(code)
    res = min_distance_exact(img.base, WeightProfile.singletons(9))
    assert res.value == 3


def test_exact_zero_code():
    gm = GeneratorMatrixCode(T3, np.zeros((0, 4), dtype=np.uint8))
    with pytest.raises(ValueError):
        min_distance_exact(gm, WeightProfile.singletons(4))


def test_budget_refusal_names_requirement():
    code = build_table1_code(TABLE1[6])  # 4^20 codewords
    with pytest.raises(DistanceBudgetError) as info:
        min_distance_exact(code.closure, WeightProfile.mixed(0, 13), budget=1000)
    assert info.value.required == 4**20
    assert info.value.budget == 1000


def test_exact_matches_naive_oracle_randomized():
    rng = random.Random(103)
    checked = 0
    while checked < 150:
        tw = rng.choice((T3, T4))
        alpha, beta = rng.randrange(1, 4), rng.randrange(1, 4)
        code = random_mixed_code(rng, tw, alpha, beta)
        if code.dimension == 0 or code.closure.size > 3**8:
            continue
        profile = WeightProfile.mixed(alpha, beta)
        res = min_distance_exact(code.closure, profile)
        oracle = naive_min_distance(tw.base, code.closure.matrix,
                                    groups_of(profile))
        assert res.value == oracle
        checked += 1


def test_exact_matches_oracle_on_gray_images():
    rng = random.Random(107)
    checked = 0
    while checked < 80:
        code = random_mixed_code(rng, T3, rng.randrange(1, 4), rng.randrange(1, 4))
        if code.dimension == 0 or code.closure.size > 3**7:
            continue
        img = gray_image(code)
        profile = WeightProfile.singletons(img.length)
        res = min_distance_exact(img.base, profile)
        oracle = naive_min_distance(T3.base, img.matrix, groups_of(profile))
        assert res.value == oracle
        checked += 1


def test_partition_split_independence():
    # different suffix sizes must give identical results
    rng = random.Random(109)
    for _ in range(25):
        code = random_mixed_code(rng, T3, rng.randrange(1, 4), rng.randrange(1, 4))
        if code.dimension < 2:
            continue
        profile = WeightProfile.mixed(code.alpha, code.beta)
        values = {
            min_distance_exact(code.closure, profile, suffix_rows=s).value
            for s in range(1, code.dimension + 1)
        }
        assert len(values) == 1


def test_upper_bound_finds_table1_bound_row():
    entry = TABLE1[18]  # q=8, n=17, claimed d=5, |C| = 8^26
    code = build_table1_code(entry)
    res = min_distance_upper(code.closure, WeightProfile.mixed(0, 17), seed=0)
    assert res.value == 5
    assert not res.exact


def test_upper_bound_never_below_exact():
    rng = random.Random(113)
    for _ in range(60):
        code = random_mixed_code(rng, T3, rng.randrange(1, 4), rng.randrange(1, 4))
        if code.dimension == 0:
            continue
        profile = WeightProfile.mixed(code.alpha, code.beta)
        exact = min_distance_exact(code.closure, profile).value
        upper = min_distance_upper(code.closure, profile,
                                   samples=50, seed=rng.randrange(1000)).value
        assert upper >= exact


def test_upper_bound_deterministic_per_seed():
    code = build_table1_code(TABLE1[6])
    profile = WeightProfile.mixed(0, 13)
    a = min_distance_upper(code.closure, profile, samples=1, seed=5)
    b = min_distance_upper(code.closure, profile, samples=1, seed=5)
    assert a == b


def test_singleton_bound_on_computed_distances():
    # d <= n - k + 1 for every enumerated linear code; a violation would
    # mean the engine miscomputed the distance
    rng = random.Random(127)
    for _ in range(200):
        code = random_mixed_code(rng, T3, rng.randrange(1, 4), rng.randrange(1, 4))
        if code.dimension == 0:
            continue
        img = gray_image(code)
        d = min_distance_exact(img.base,
                               WeightProfile.singletons(img.length)).value
        assert d <= img.length - img.rank + 1
