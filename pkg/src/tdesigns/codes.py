"""The binary code C_f = {(u f(x) + v.x)_{x != 0}} and its weight distribution."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction, PointSet, _as_mask, popcounts, walsh_full


@dataclass(frozen=True)
class WeightDistribution:
    length: int
    dimension: int
    counts: dict[int, int]

    def __post_init__(self):
        if sum(self.counts.values()) != 2**self.dimension:
            raise ValueError(f"counts total {sum(self.counts.values())}, expected 2^{self.dimension}")
        if self.counts.get(0) != 1:
            raise ValueError("exactly one codeword of weight 0 expected")

    @property
    def minimum_distance(self) -> int:
        return min(w for w, c in self.counts.items() if w and c)

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def _check_code_function(f: BooleanFunction):
    # a linear f makes u f + v.x vanish for some v; only the closed form checks that
    if 0 in f.support:
        raise ValueError("C_f needs f(0) = 0")
    if not f.support:
        raise ValueError("C_f needs f to be nonzero somewhere")


def code_weight_distribution(f: BooleanFunction) -> WeightDistribution:
    """Weight distribution of C_f read off the Walsh spectrum of f.

    Codewords with u = 1 have weight 2^(n-1) + fhat(v) for v != 0 and fhat(0)
    for v = 0; with u = 0 they have weight 2^(n-1) for v != 0 and 0 for v = 0.
    """
    _check_code_function(f)
    n = f.n
    spec = walsh_full(f)
    half = 1 << (n - 1)
    if np.any(spec.values[1:] == -half):
        raise ValueError("f is a linear function, so C_f has dimension n rather than n + 1")
    counts = Counter(int(v) + half for v in spec.values[1:])
    counts[spec[0]] += 1
    counts[half] += (1 << n) - 1
    counts[0] += 1
    return WeightDistribution((1 << n) - 1, n + 1, dict(sorted(counts.items())))


def code_enumerate(f: BooleanFunction, u: int, v: PointSet | int) -> int:
    """Weight of the codeword (u f(x) + v.x)_{x != 0}, by direct evaluation."""
    _check_code_function(f)
    vm = _as_mask(v, f.n)
    u &= 1
    return sum(((u & f(x)) ^ ((vm & x).bit_count() & 1)) for x in range(1, 1 << f.n))


def enumerate_weight_distribution(f: BooleanFunction) -> WeightDistribution:
    """Histogram of all 2^(n+1) codeword weights, each codeword built explicitly."""
    _check_code_function(f)
    n = f.n
    xs = np.arange(1, 1 << n, dtype=np.int64)
    pc = popcounts(n)
    fx = f.truth_table()[1:].astype(np.int64)
    counts: Counter = Counter()
    for vm in range(1 << n):
        lin = pc[xs & vm] & 1
        counts[int(lin.sum())] += 1
        counts[int((lin ^ fx).sum())] += 1
    return WeightDistribution((1 << n) - 1, n + 1, dict(sorted(counts.items())))
