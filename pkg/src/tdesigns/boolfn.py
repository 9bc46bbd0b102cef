"""Boolean functions on GF(2)^n viewed as real {0,1}-valued functions.

A vector of GF(2)^n is identified with its support in [1..n]; both are
stored as an ``n``-bit mask with bit ``i - 1`` standing for point ``i``.
The Walsh transform used throughout is the sum of ``f`` itself,

    fhat(w) = sum_x f(x) (-1)^(w.x),

not of ``(-1)^f``; the latter only appears inside the butterfly kernel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import NotBooleanError

MAX_N = 64
DENSE_CAP = 28


@dataclass(frozen=True, order=True)
class PointSet:
    n: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"ambient size must be in [1, {MAX_N}], got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} has bits above position {self.n}")

    @classmethod
    def from_points(cls, n: int, points: Iterable[int]) -> PointSet:
        mask = 0
        for p in points:
            if not 1 <= p <= n:
                raise ValueError(f"point {p} outside [1, {n}]")
            mask |= 1 << (p - 1)
        return cls(n, mask)

    @property
    def points(self) -> tuple[int, ...]:
        return mask_points(self.mask)

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def complement(self) -> PointSet:
        return PointSet(self.n, self.mask ^ ((1 << self.n) - 1))

    def __repr__(self):
        return f"PointSet({self.n}, {set(self.points) or '{}'})"


def mask_points(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def complement_vector(w: PointSet) -> PointSet:
    return w.complement()


def weight(w: PointSet | int) -> int:
    if isinstance(w, PointSet):
        return w.weight
    return w.bit_count()


def _as_mask(w: PointSet | int, n: int) -> int:
    if isinstance(w, PointSet):
        if w.n != n:
            raise ValueError(f"ambient size mismatch: vector has n={w.n}, function has n={n}")
        return w.mask
    if not 0 <= w < (1 << n):
        raise ValueError(f"mask {w:#x} does not fit in {n} bits")
    return w


def masks_of_weight(n: int, h: int) -> Iterator[int]:
    """All n-bit masks of popcount h, in increasing numeric order (Gosper's hack)."""
    if h < 0 or h > n:
        return
    if h == 0:
        yield 0
        return
    m = (1 << h) - 1
    limit = 1 << n
    while m < limit:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


@dataclass(frozen=True)
class BooleanFunction:
    """A Boolean function given by its support (a set of masks)."""

    n: int
    support: frozenset[int]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"ambient size must be in [1, {MAX_N}], got {self.n}")
        full = 1 << self.n
        for x in self.support:
            if not 0 <= x < full:
                raise ValueError(f"support element {x:#x} does not fit in {self.n} bits")

    @classmethod
    def from_vectors(cls, n: int, vectors: Iterable[PointSet | int]) -> BooleanFunction:
        return cls(n, frozenset(_as_mask(v, n) for v in vectors))

    @classmethod
    def from_truth_table(cls, table) -> BooleanFunction:
        table = np.asarray(table)
        size = table.shape[0]
        n = size.bit_length() - 1
        if size != 1 << n or n < 1:
            raise ValueError(f"truth table length {size} is not a power of two >= 2")
        if not np.isin(table, (0, 1)).all():
            raise ValueError("truth table must be 0/1 valued")
        return cls(n, frozenset(int(x) for x in np.flatnonzero(table)))

    def __call__(self, x: PointSet | int) -> int:
        return int(_as_mask(x, self.n) in self.support)

    @property
    def weight(self) -> int:
        return len(self.support)

    def vectors(self) -> list[PointSet]:
        return [PointSet(self.n, m) for m in sorted(self.support)]

    def truth_table(self) -> np.ndarray:
        if self.n > DENSE_CAP:
            raise ValueError(f"dense table needs n <= {DENSE_CAP}, got {self.n}")
        tt = np.zeros(1 << self.n, dtype=np.uint8)
        if self.support:
            tt[np.fromiter(self.support, dtype=np.int64, count=len(self.support))] = 1
        return tt


def walsh_at(f: BooleanFunction, w: PointSet | int) -> int:
    """fhat(w), summing only over the support of f."""
    m = _as_mask(w, f.n)
    odd = sum((m & x).bit_count() & 1 for x in f.support)
    return len(f.support) - 2 * odd


def _fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalised +/-1 Hadamard transform of an int64 vector of length 2^n."""
    a = a.copy()
    size = a.shape[0]
    h = 1
    while h < size:
        v = a.reshape(-1, 2, h)
        lo = v[:, 0, :].copy()
        hi = v[:, 1, :]
        v[:, 0, :] += hi
        v[:, 1, :] = lo - hi
        h *= 2
    return a


@dataclass(frozen=True)
class WalshSpectrum:
    """Dense spectrum: ``values[w]`` is fhat(w) for every mask w."""

    n: int
    values: np.ndarray

    def __getitem__(self, w: PointSet | int) -> int:
        return int(self.values[_as_mask(w, self.n)])

    def __iter__(self):
        return (int(v) for v in self.values)

    def by_weight(self) -> dict[int, Counter]:
        return spectrum_by_weight(self)

    def total(self) -> int:
        return int(self.values.sum())

    def square_total(self) -> int:
        return sum(int(v) * int(v) for v in self.values)


def popcounts(n: int) -> np.ndarray:
    """Popcount of every n-bit mask, as an int64 array of length 2^n."""
    pc = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        pc[1 << bit: 1 << (bit + 1)] = pc[: 1 << bit] + 1
    return pc


def spectrum_by_weight(spec: WalshSpectrum) -> dict[int, Counter]:
    pc = popcounts(spec.n)
    out: dict[int, Counter] = {}
    for h in range(spec.n + 1):
        vals, counts = np.unique(spec.values[pc == h], return_counts=True)
        out[h] = Counter({int(v): int(c) for v, c in zip(vals, counts)})
    return out


def walsh_full(f: BooleanFunction, cap: int = DENSE_CAP) -> WalshSpectrum:
    """Dense Walsh spectrum by an n 2^n butterfly.

    The butterfly runs on F(x) = (-1)^f(x); since F = 1 - 2f, its transform
    satisfies Fhat(w) = 2^n [w == 0] - 2 fhat(w), which is inverted here.
    """
    if f.n > cap:
        raise ValueError(f"dense Walsh transform capped at n <= {cap}, got n={f.n}")
    signed = 1 - 2 * f.truth_table().astype(np.int64)
    big = _fwht(signed)
    big[0] = (1 << f.n) - big[0]
    big[1:] = -big[1:]
    return WalshSpectrum(f.n, big // 2)


def inverse_walsh(spec: WalshSpectrum) -> BooleanFunction:
    """Recover f from its spectrum via f(x) = 2^-n sum_w fhat(w) (-1)^(w.x)."""
    n = spec.n
    values = np.asarray(spec.values, dtype=np.int64)
    if values.shape != (1 << n,):
        raise ValueError(f"spectrum for n={n} must have {1 << n} entries, got {values.shape}")
    scaled = _fwht(values)
    size = 1 << n
    bad = np.flatnonzero((scaled != 0) & (scaled != size))
    if bad.size:
        x = int(bad[0])
        raise NotBooleanError(
            f"spectrum is not that of a Boolean function: 2^n f(x) = {int(scaled[x])} "
            f"at x = {PointSet(n, x).points or '()'} (mask {x})"
        )
    return BooleanFunction(n, frozenset(int(x) for x in np.flatnonzero(scaled)))


@dataclass(frozen=True)
class AlgebraicNormalForm:
    """Multilinear GF(2) polynomial; each term is the monomial over a mask."""

    n: int
    terms: tuple[int, ...]

    @property
    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(t.bit_count() for t in self.terms).items()))

    @property
    def degree(self) -> int:
        return max((t.bit_count() for t in self.terms), default=-1)

    def terms_of_degree(self, d: int) -> list[tuple[int, ...]]:
        return [mask_points(t) for t in self.terms if t.bit_count() == d]

    def evaluate(self, x: PointSet | int) -> int:
        m = _as_mask(x, self.n)
        return sum(1 for t in self.terms if t & m == t) & 1

    def render(self) -> str:
        return "".join(render_term(t) + "\n" for t in self.terms)


def render_term(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x_{i}" for i in mask_points(mask))


def _term_key(mask: int):
    return (mask.bit_count(), mask_points(mask))


def anf(f: BooleanFunction, cap: int = DENSE_CAP) -> AlgebraicNormalForm:
    """ANF via the GF(2) Moebius transform over the subset lattice."""
    if f.n > cap:
        raise ValueError(f"ANF capped at n <= {cap}, got n={f.n}")
    a = f.truth_table()
    size = a.shape[0]
    h = 1
    while h < size:
        v = a.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h *= 2
    terms = sorted((int(m) for m in np.flatnonzero(a)), key=_term_key)
    return AlgebraicNormalForm(f.n, tuple(terms))
