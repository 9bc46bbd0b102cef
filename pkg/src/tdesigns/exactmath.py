"""Exact integer combinatorics: binomials, Krawtchouk and Eberlein polynomials.

Everything here works on Python ints (or ``Fraction`` where a ratio is
unavoidable), so no value ever overflows or rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import InconsistencyError


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def krawtchouk(n: int, k: int, x: int) -> int:
    """P_k(x) for length n, evaluated from the defining alternating sum

        P_k(x) = sum_j (-1)^j C(x, j) C(n - x, k - j).
    """
    if n < 1:
        raise ValueError(f"krawtchouk needs n >= 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"degree k={k} outside [0, {n}]")
    if not 0 <= x <= n:
        raise ValueError(f"argument x={x} outside [0, {n}]")
    return sum((-1) ** j * binomial(x, j) * binomial(n - x, k - j) for j in range(k + 1))


@dataclass(frozen=True)
class KrawtchoukTable:
    """All values P_k(x), 0 <= k, x <= n.  ``values[k][x]`` is P_k(x)."""

    n: int
    values: tuple[tuple[int, ...], ...]

    def __call__(self, k: int, x: int) -> int:
        return self.values[k][x]

    def row(self, k: int) -> tuple[int, ...]:
        return self.values[k]

    def check_orthogonality(self) -> bool:
        n = self.n
        for r in range(n + 1):
            for s in range(n + 1):
                total = sum(binomial(n, i) * self.values[r][i] * self.values[s][i] for i in range(n + 1))
                if total != (2**n * binomial(n, r) if r == s else 0):
                    return False
        return True


def krawtchouk_table(n: int) -> KrawtchoukTable:
    if n < 1:
        raise ValueError(f"krawtchouk_table needs n >= 1, got {n}")
    values = tuple(tuple(krawtchouk(n, k, x) for x in range(n + 1)) for k in range(n + 1))
    return KrawtchoukTable(n, values)


def eberlein(n: int, k: int, l: int, x: int) -> int:
    """Eberlein polynomial Q_l(x) of the Johnson scheme J(n, k).

    Q_l(x) = sum_j (-1)^j C(x, j) C(k - x, l - j) C(n - k - x, l - j)
    """
    if not 1 <= k <= n // 2:
        raise ValueError(f"Johnson scheme needs 1 <= k <= n/2, got n={n}, k={k}")
    if not 0 <= l <= k:
        raise ValueError(f"index l={l} outside [0, {k}]")
    if not 0 <= x <= k:
        raise ValueError(f"argument x={x} outside [0, {k}]")
    return sum(
        (-1) ** j * binomial(x, j) * binomial(k - x, l - j) * binomial(n - k - x, l - j)
        for j in range(l + 1)
    )


def is_prime(m: int) -> bool:
    if m < 1:
        raise ValueError(f"is_prime needs m >= 1, got {m}")
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm_range(t: int) -> int:
    """lcm(1, 2, ..., t + 1)."""
    if t < 1:
        raise ValueError(f"lcm_range needs t >= 1, got {t}")
    return reduce(math.lcm, range(1, t + 2), 1)


def exact_div(num: int, den: int, what: str = "value") -> int:
    """Integer quotient, raising if ``den`` does not divide ``num``."""
    q, r = divmod(num, den)
    if r:
        raise InconsistencyError(f"{what}: {num}/{den} is not an integer")
    return q

