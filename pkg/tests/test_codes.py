import random

import pytest

from oracles import code_distribution_by_enumeration, random_function
from tdesigns.boolfn import BooleanFunction, PointSet
from tdesigns.codes import (
    WeightDistribution,
    code_enumerate,
    code_weight_distribution,
    enumerate_weight_distribution,
)

S5612_CODE_WEIGHTS = {0: 1, 132: 1, 2036: 924, 2048: 6143, 2052: 990, 2100: 132, 2180: 1}


def nonlinear_function(rng, n):
    while True:
        f = BooleanFunction(n, frozenset(random_function(rng, n) - {0}))
        if f.support and not is_linear(f):
            return f


def is_linear(f):
    return any(all(f(x) == (v & x).bit_count() % 2 for x in range(1 << f.n)) for v in range(1 << f.n))


def test_fano_code(fano_design):
    f = fano_design.characteristic_function()
    dist = code_weight_distribution(f)
    assert (dist.length, dist.dimension) == (127, 8)
    assert dist.counts == {0: 1, 7: 1, 57: 8, 63: 56, 64: 127, 65: 56, 71: 7}
    assert dict(code_distribution_by_enumeration(7, set(f.support))) == dist.counts


def test_s5612_code_weights(s5612):
    dist = code_weight_distribution(s5612.characteristic_function())
    assert (dist.length, dist.dimension, dist.minimum_distance) == (4095, 13, 132)
    assert dist.counts == S5612_CODE_WEIGHTS


def test_tiny_code():
    f = BooleanFunction(2, frozenset({0b11}))
    dist = code_weight_distribution(f)
    assert (dist.length, dist.dimension) == (3, 3)
    # u=1 with v in {0, e1, e2} gives weight 1, v = e1+e2 gives weight 3
    assert dist.counts == {0: 1, 1: 3, 2: 3, 3: 1}
    assert dict(code_distribution_by_enumeration(2, {0b11})) == dist.counts


def test_code_enumerate_examples(fano_design):
    f = fano_design.characteristic_function()
    assert code_enumerate(f, 0, 0) == 0
    assert code_enumerate(f, 0, PointSet.from_points(7, [2, 5])) == 64
    assert code_enumerate(f, 1, 0) == 7


def test_preconditions():
    with pytest.raises(ValueError):
        code_weight_distribution(BooleanFunction(3, frozenset({0, 1})))
    with pytest.raises(ValueError):
        code_weight_distribution(BooleanFunction(3, frozenset()))
    # f = x1 + x2 is linear: the codeword for (u, v) = (1, e1+e2) vanishes
    linear = BooleanFunction(3, frozenset(x for x in range(8) if (x & 3).bit_count() == 1))
    with pytest.raises(ValueError, match="linear"):
        code_weight_distribution(linear)


def test_weight_distribution_validation():
    with pytest.raises(ValueError):
        WeightDistribution(3, 2, {0: 1, 2: 2})
    with pytest.raises(ValueError):
        WeightDistribution(3, 1, {0: 2})


def test_closed_form_vs_code_enumerate_exhaustive():
    rng = random.Random(11)
    for n in range(2, 7):
        for _ in range(5):
            f = nonlinear_function(rng, n)
            hist = {}
            for u in (0, 1):
                for v in range(1 << n):
                    w = code_enumerate(f, u, v)
                    hist[w] = hist.get(w, 0) + 1
            assert code_weight_distribution(f).counts == dict(sorted(hist.items()))


def test_library_enumerator_agrees():
    rng = random.Random(3)
    for n in range(2, 10):
        f = nonlinear_function(rng, n)
        assert enumerate_weight_distribution(f) == code_weight_distribution(f)
