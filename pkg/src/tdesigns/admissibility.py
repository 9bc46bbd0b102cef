"""Necessary conditions for t-(n,k,lambda) existence and the admissible
(n-2)/2-(n, n/2, 1) parameter scan.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import binomial, gcd, is_prime, krawtchouk, lcm_range

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FilterResult:
    name: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


@dataclass
class AdmissibilityReport:
    n: int
    k: int
    t: int
    lam: int
    passed: list[str] = field(default_factory=list)
    failed: list[tuple[str, dict]] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.failed

    def add(self, result: FilterResult):
        if result.passed:
            self.passed.append(result.name)
        else:
            self.failed.append((result.name, result.witness))

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "passed": list(self.passed),
            "failed": [{"filter": name, **w} for name, w in self.failed],
        }


def filter_divisibility(t: int, n: int, k: int, lam: int) -> FilterResult:
    """C(k-i, t-i) divides lam C(n-i, t-i) for 0 <= i <= t."""
    for i in range(t + 1):
        num, den = lam * binomial(n - i, t - i), binomial(k - i, t - i)
        if num % den:
            return FilterResult("divisibility", False, {"i": i, "numerator": num, "denominator": den})
    return FilterResult("divisibility", True)


def filter_spectral_divisibility(t: int, n: int, k: int, lam: int) -> FilterResult:
    """C(n-t, k-t) divides lam P_k(h) for 0 <= h <= t."""
    den = binomial(n - t, k - t)
    for h in range(t + 1):
        num = lam * krawtchouk(n, k, h)
        if num % den:
            return FilterResult("spectral_divisibility", False, {"h": h, "numerator": num, "denominator": den})
    return FilterResult("spectral_divisibility", True)


def filter_gcd(t: int, n: int) -> FilterResult:
    """For t-(n, t+1, 1): gcd(n - t, lcm(1..t+1)) = 1."""
    g = gcd(n - t, lcm_range(t))
    if g != 1:
        return FilterResult("gcd", False, {"gcd": g})
    return FilterResult("gcd", True)


def _floor_tower(fractions: list[tuple[int, int]]) -> int:
    """floor(a1/b1 floor(a2/b2 floor(... ))) evaluated innermost first; empty tower is 1."""
    value = 1
    for num, den in reversed(fractions):
        value = (num * value) // den
    return value


def johnson_tower_1(t: int, k: int) -> int:
    # k/(t-1), (k-1)/(t-2), ..., (k-t+3)/2
    return _floor_tower([(k - j, t - 1 - j) for j in range(t - 2)])


def johnson_tower_2(t: int, k: int) -> int:
    # k/(k-t+1), (k-1)/(k-t), ..., (t+1)/2
    return _floor_tower([(k - j, k - t + 1 - j) for j in range(k - t)])


def filter_johnson(t: int, n: int, k: int) -> FilterResult:
    """Johnson-bound conditions for Steiner systems (lambda = 1).

    Both nested-floor inequalities, compared cross-multiplied, then
    C(n,t) >= (n/k)^delta C(n-delta, h) C(k,t) with t = 2h + delta.
    """
    if t < 2:
        return FilterResult("johnson", True, {"note": "t < 2, not applicable"})
    witness = {}
    if n - k - 1 > 0:
        lhs1 = Fraction(binomial(k, t - 1) * (k - t), n - k - 1)
        rhs1 = johnson_tower_1(t, k)
        if lhs1 > rhs1:
            witness["bound1"] = {"lhs": str(lhs1), "rhs": rhs1}
        lhs2 = Fraction(binomial(k, k - t + 1) * (k - t), n - k - 1)
        rhs2 = johnson_tower_2(t, k)
        if lhs2 > rhs2:
            witness["bound2"] = {"lhs": str(lhs2), "rhs": rhs2}
    h, delta = divmod(t, 2)
    lhs3 = binomial(n, t) * k**delta
    rhs3 = n**delta * binomial(n - delta, h) * binomial(k, t)
    if lhs3 < rhs3:
        witness["bound3"] = {"lhs": lhs3, "rhs": rhs3}
    return FilterResult("johnson", not witness, witness)


def filter_steiner_half(n: int) -> FilterResult:
    """An (n-2)/2-(n, n/2, 1) design needs n = 0 mod 4 and (n+2)/2 prime."""
    if n % 4:
        return FilterResult("steiner_half", False, {"reason": "n not divisible by 4"})
    if not is_prime((n + 2) // 2):
        return FilterResult("steiner_half", False, {"reason": f"{(n + 2) // 2} is not prime"})
    return FilterResult("steiner_half", True)


def admissibility_report(t: int, n: int, k: int, lam: int = 1) -> AdmissibilityReport:
    """Run every filter that applies to t-(n,k,lam); Steiner-only filters need lam = 1."""
    if not 1 <= t <= k <= n:
        raise ValueError(f"need 1 <= t <= k <= n, got t={t}, n={n}, k={k}")
    report = AdmissibilityReport(n, k, t, lam)
    div = filter_divisibility(t, n, k, lam)
    spec = filter_spectral_divisibility(t, n, k, lam)
    report.add(div)
    report.add(spec)
    if div.passed != spec.passed:
        log.info("divisibility conditions disagree for %d-(%d,%d,%d): %s vs %s", t, n, k, lam, div, spec)
    if lam == 1:
        if k == t + 1:
            report.add(filter_gcd(t, n))
        report.add(filter_johnson(t, n, k))
        if n % 2 == 0 and k == n // 2 and t == (n - 2) // 2:
            sh = filter_steiner_half(n)
            report.add(sh)
            if sh.passed:
                assert n % 4 == 0
    return report


def steiner_half_report(n: int) -> AdmissibilityReport:
    if n % 2 or n < 4:
        raise ValueError(f"need even n >= 4, got {n}")
    return admissibility_report((n - 2) // 2, n, n // 2, 1)


def enumerate_admissible(min_n: int, max_n: int) -> list[int]:
    """Even n in [min_n, max_n] whose (n-2)/2-(n, n/2, 1) parameters pass every filter."""
    if min_n < 8 or min_n > max_n:
        raise ValueError(f"need 8 <= min_n <= max_n, got {min_n}, {max_n}")
    start = min_n + (min_n % 2)
    return [n for n in range(start, max_n + 1, 2) if steiner_half_report(n).admissible]


def divisibility_disagreements(t_n_k_lam) -> list[tuple[int, int, int, int]]:
    """Parameter tuples on which the two divisibility conditions differ."""
    out = []
    for t, n, k, lam in t_n_k_lam:
        if filter_divisibility(t, n, k, lam).passed != filter_spectral_divisibility(t, n, k, lam).passed:
            out.append((t, n, k, lam))
    return out
