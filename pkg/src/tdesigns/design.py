"""Incidence structures and classical t-design bookkeeping.

Points are 1..n; a block is a mask as in :mod:`tdesigns.boolfn`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .boolfn import BooleanFunction, PointSet, mask_points
from .errors import BudgetExceeded
from .exactmath import binomial

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class IncidenceStructure:
    """Point set [1..n] with a duplicate-free family of k-subsets.

    Blocks are kept sorted by mask value.  Repeated blocks are rejected:
    only simple designs are in scope.
    """

    n: int
    k: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        if not self.blocks:
            raise ValueError("an incidence structure needs at least one block")
        full = 1 << self.n
        seen = set()
        for B in self.blocks:
            if not 0 <= B < full:
                raise ValueError(f"block {B:#x} does not fit in {self.n} points")
            if B.bit_count() != self.k:
                raise ValueError(f"block {mask_points(B)} has size {B.bit_count()}, expected {self.k}")
            if B in seen:
                raise ValueError(f"repeated block {mask_points(B)}")
            seen.add(B)
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int] | PointSet], k: int | None = None) -> IncidenceStructure:
        masks = []
        for B in blocks:
            if isinstance(B, PointSet):
                if B.n != n:
                    raise ValueError(f"block has ambient size {B.n}, expected {n}")
                masks.append(B.mask)
            else:
                masks.append(PointSet.from_points(n, B).mask)
        if k is None:
            if not masks:
                raise ValueError("cannot infer k from an empty block list")
            k = masks[0].bit_count()
        return cls(n, k, tuple(masks))

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_points(self) -> list[tuple[int, ...]]:
        return [mask_points(B) for B in self.blocks]

    def characteristic_function(self) -> BooleanFunction:
        return BooleanFunction(self.n, frozenset(self.blocks))

    def without(self, block: Iterable[int]) -> IncidenceStructure:
        m = PointSet.from_points(self.n, block).mask
        if m not in self.blocks:
            raise ValueError(f"{tuple(block)} is not a block")
        return IncidenceStructure(self.n, self.k, tuple(B for B in self.blocks if B != m))


@dataclass(frozen=True)
class DesignParameters:
    t: int
    n: int
    k: int
    lam: int
    lambda_s: tuple[int, ...]

    @property
    def b(self) -> int:
        return self.lambda_s[0]

    def __str__(self):
        return f"{self.t}-({self.n},{self.k},{self.lam})"


def lambda_table(t: int, n: int, k: int, lam: int) -> DesignParameters | None:
    """lambda_s = lam C(n-s, t-s) / C(k-s, t-s) for s = 0..t; None if any is fractional."""
    if not 1 <= t <= k <= n:
        raise ValueError(f"need 1 <= t <= k <= n, got t={t}, n={n}, k={k}")
    lams = []
    for s in range(t + 1):
        q, r = divmod(lam * binomial(n - s, t - s), binomial(k - s, t - s))
        if r:
            return None
        lams.append(q)
    return DesignParameters(t, n, k, lam, tuple(lams))


def subset_masks(n: int, t: int) -> Iterable[int]:
    for c in combinations(range(n), t):
        m = 0
        for i in c:
            m |= 1 << i
        yield m


def verify_bruteforce(D: IncidenceStructure, t: int, budget: int = DEFAULT_BUDGET) -> DesignParameters | None:
    """Count the blocks through every t-subset; parameters if the count is constant."""
    if not 1 <= t <= D.k:
        raise ValueError(f"need 1 <= t <= k={D.k}, got t={t}")
    work = binomial(D.n, t)
    if work > budget:
        raise BudgetExceeded(f"C({D.n},{t}) = {work} t-subsets exceeds budget {budget}")
    lam = None
    blocks = D.blocks
    for T in subset_masks(D.n, t):
        c = sum(1 for B in blocks if B & T == T)
        if lam is None:
            lam = c
        elif c != lam:
            return None
    return lambda_table(t, D.n, D.k, lam)


def complement_design(D: IncidenceStructure) -> IncidenceStructure:
    if D.k == D.n:
        raise ValueError("the complement of the full block is empty")
    full = (1 << D.n) - 1
    return IncidenceStructure(D.n, D.n - D.k, tuple(B ^ full for B in D.blocks))


def complement_lambda(params: DesignParameters, s: int) -> int:
    """Blocks of the complementary design through an s-set: sum_i (-1)^i C(s,i) lambda_i."""
    if not 0 <= s <= params.t:
        raise ValueError(f"s={s} outside [0, {params.t}]")
    return sum((-1) ** i * binomial(s, i) * params.lambda_s[i] for i in range(s + 1))


def intersection_number(params: DesignParameters, i: int, j: int) -> int:
    """lambda_(i,j): blocks meeting a fixed (i+j)-set exactly in a fixed i-subset of it."""
    if i < 0 or j < 0:
        raise ValueError("i and j must be nonnegative")
    if i + j > params.t:
        raise ValueError(f"lambda_(i,j) is only given by the closed form for i+j <= t={params.t}")
    num = params.lam * binomial(params.n - i - j, params.k - i)
    q, r = divmod(num, binomial(params.n - params.t, params.k - params.t))
    if r:
        raise ValueError(f"non-integral intersection number {num}/{binomial(params.n - params.t, params.k - params.t)}")
    return q


def steiner_intersection(params: DesignParameters, j: int) -> int:
    """For a t-(n, t+1, 1) design, blocks meeting a fixed block X in a fixed (t+1-j)-subset.

    (-1)^(j-1) [sum_{l<j} (-1)^l C(n-t, l+1)] / (n-t) + (-1)^j
    """
    t, n = params.t, params.n
    if params.k != t + 1 or params.lam != 1:
        raise ValueError(f"steiner_intersection needs a t-(n,t+1,1) design, got {params}")
    if not 0 <= j <= t + 1:
        raise ValueError(f"j={j} outside [0, {t + 1}]")
    s = sum((-1) ** l * binomial(n - t, l + 1) for l in range(j))
    q, r = divmod((-1) ** (j - 1) * s, n - t)
    if r:
        raise ValueError(f"non-integral intersection number for {params}, j={j}")
    return q + (-1) ** j


def is_trivial(D: IncidenceStructure, t: int | None = None) -> bool:
    """All k-subsets are blocks (this covers k = n with the single full block)."""
    return D.b == binomial(D.n, D.k)


def count_intersections(D: IncidenceStructure, X: int, Y: int) -> int:
    """Blocks B with B & X == Y, by direct counting."""
    return sum(1 for B in D.blocks if B & X == Y)


def blocks_from_points(n: int, blocks: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(PointSet.from_points(n, B).mask for B in blocks)


def lambda_as_fraction(t: int, n: int, k: int, b: int) -> Fraction:
    """The lambda a t-(n,k,lambda) design with b blocks would have."""
    return Fraction(b * binomial(k, t), binomial(n, t))
