"""Association-scheme characterisations used as independent cross-checks.

Hamming scheme: orthogonal-array strength from the spectrum of 1_C, and the
inner/outer distributions of a code.  Johnson scheme: the outer-distribution
test for t-designs written through Walsh values.  Relative designs: the
criterion C(n,i) sum_{wt w = i} 1hat(w)^2 = (sum_{y in D} P_i(wt y))^2.

All quantities are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import numpy as np

from .boolfn import BooleanFunction, PointSet, popcounts, walsh_full
from .design import IncidenceStructure, complement_design
from .errors import InconsistencyError
from .exactmath import binomial, eberlein, krawtchouk

CodeLike = BooleanFunction | IncidenceStructure | Iterable[PointSet]


def as_function(C: CodeLike) -> BooleanFunction:
    if isinstance(C, BooleanFunction):
        return C
    if isinstance(C, IncidenceStructure):
        return C.characteristic_function()
    vecs = list(C)
    if not vecs:
        raise ValueError("empty code")
    n = vecs[0].n
    return BooleanFunction.from_vectors(n, vecs)


@dataclass(frozen=True)
class DistanceDistribution:
    n: int
    size: int
    B: tuple[Fraction, ...]


@dataclass(frozen=True)
class OuterDistribution:
    n: int
    Bp: tuple[Fraction, ...]


def inner_distribution(C: CodeLike) -> DistanceDistribution:
    """B_i = #{(u, v) in C^2 : d(u, v) = i} / |C|."""
    f = as_function(C)
    if not f.support:
        raise ValueError("inner distribution of an empty set is undefined")
    vecs = sorted(f.support)
    counts = [0] * (f.n + 1)
    counts[0] = len(vecs)
    for u, v in combinations(vecs, 2):
        counts[(u ^ v).bit_count()] += 2
    size = len(vecs)
    return DistanceDistribution(f.n, size, tuple(Fraction(c, size) for c in counts))


def _weight_class_energy(f: BooleanFunction) -> list[int]:
    """S_h = sum over wt(w) = h of fhat(w)^2, for h = 0..n."""
    spec = walsh_full(f)
    pc = popcounts(f.n)
    sq = spec.values.astype(object) ** 2
    return [int(sq[pc == h].sum()) for h in range(f.n + 1)]


def oa_strength(C: CodeLike) -> int:
    """Largest t with 1hat_C(w) = 0 for every 1 <= wt(w) <= t (n when C is the whole space)."""
    f = as_function(C)
    if not f.support:
        raise ValueError("orthogonal-array strength of an empty set is undefined")
    spec = walsh_full(f)
    pc = popcounts(f.n)
    nz = pc[1:][spec.values[1:] != 0]
    return int(nz.min()) - 1 if nz.size else f.n


def outer_distribution_hamming(C: CodeLike) -> OuterDistribution:
    """B'_k by the Krawtchouk transform of B and by |C|^-2 sum_{wt w = k} 1hat(w)^2; both must agree."""
    f = as_function(C)
    dist = inner_distribution(f)
    n, size = f.n, dist.size
    via_inner = tuple(
        sum(krawtchouk(n, k, i) * dist.B[i] for i in range(n + 1)) / size for k in range(n + 1)
    )
    energy = _weight_class_energy(f)
    via_spectrum = tuple(Fraction(energy[k], size * size) for k in range(n + 1))
    if via_inner != via_spectrum:
        raise InconsistencyError(f"outer distribution routes disagree: {via_inner} vs {via_spectrum}")
    return OuterDistribution(n, via_spectrum)


def _mu(n: int, l: int) -> Fraction:
    return Fraction(n - 2 * l + 1, n - l + 1) * binomial(n, l)


def johnson_outer_distribution(D: IncidenceStructure) -> tuple[Fraction, ...]:
    """B'_0..B'_k of D in J(n, k) through the Walsh energy per weight class.

    The sum over j only runs over j with v_j = C(k,j) C(n-k,j) nonzero.
    """
    n, k = D.n, D.k
    if not 1 <= k <= n // 2:
        raise ValueError(f"Johnson scheme needs 1 <= k <= n/2, got n={n}, k={k}")
    energy = _weight_class_energy(D.characteristic_function())
    size = D.b
    out = []
    for i in range(k + 1):
        mu = _mu(n, i)
        kernel = [
            sum(mu / (binomial(k, j) * binomial(n - k, j)) * eberlein(n, k, j, i) * krawtchouk(n, 2 * j, h)
                for j in range(k + 1))
            for h in range(n + 1)
        ]
        total = sum(energy[h] * kernel[h] for h in range(n + 1))
        out.append(total / (2**n * size * size))
    return tuple(out)


def johnson_design_check(D: IncidenceStructure, t: int) -> bool:
    """t-design test: B'_1 = ... = B'_t = 0 in the Johnson scheme.

    For k > n/2 the test runs on the complementary structure, which lives in
    J(n, n-k); a t-design complements to a t-design, and when t exceeds n-k
    vanishing of every nontrivial B' forces the complete design on both sides.
    """
    if not 1 <= t <= D.k:
        raise ValueError(f"need 1 <= t <= k={D.k}, got t={t}")
    if D.k == D.n:
        return True
    if D.k > D.n // 2:
        D = complement_design(D)
        t = min(t, D.k)
    Bp = johnson_outer_distribution(D)
    return all(Bp[i] == 0 for i in range(1, t + 1))


def relative_design_sides(D: IncidenceStructure, i: int) -> tuple[int, int]:
    """(C(n,i) sum_{wt w = i} 1hat_D(w)^2, (sum_{y in D} P_i(wt y))^2)."""
    n = D.n
    energy = _weight_class_energy(D.characteristic_function())
    lhs = binomial(n, i) * energy[i]
    rhs = sum(krawtchouk(n, i, B.bit_count()) for B in D.blocks) ** 2
    return lhs, rhs


def relative_design_check(D: IncidenceStructure, t: int) -> bool:
    """D is a relative t-design with respect to 0 in the Hamming scheme."""
    if not 1 <= t <= D.k:
        raise ValueError(f"need 1 <= t <= k={D.k}, got t={t}")
    n = D.n
    energy = _weight_class_energy(D.characteristic_function())
    for i in range(1, t + 1):
        rhs = sum(krawtchouk(n, i, B.bit_count()) for B in D.blocks) ** 2
        if binomial(n, i) * energy[i] != rhs:
            return False
    return True


def johnson_inner_distribution(D: IncidenceStructure) -> tuple[Fraction, ...]:
    """B_i = #{(u, v) in D^2 : |u & v| = k - i} / |D|, i = 0..k."""
    counts = [0] * (D.k + 1)
    for u in D.blocks:
        for v in D.blocks:
            counts[D.k - (u & v).bit_count()] += 1
    return tuple(Fraction(c, D.b) for c in counts)

