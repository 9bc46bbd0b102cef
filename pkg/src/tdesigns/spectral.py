"""Spectral test for t-designs and the spectra of (n-2)/2-(n, n/2, 1) systems.

An incidence structure D with block size k is a t-(n, k, lambda) design iff
for every w of weight h <= t its characteristic function has

    fhat_D(w) = lambda P_k(h) / C(n-t, k-t).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .boolfn import BooleanFunction, PointSet, anf, masks_of_weight, walsh_at
from .design import (
    DEFAULT_BUDGET,
    DesignParameters,
    IncidenceStructure,
    complement_lambda,
    lambda_as_fraction,
    lambda_table,
)
from .errors import BudgetExceeded, InconsistencyError
from .exactmath import binomial, exact_div, krawtchouk

Exact = int | Fraction


def _normalize(q: Fraction) -> Exact:
    return q.numerator if q.denominator == 1 else q


def expected_walsh(t: int, n: int, k: int, lam: int | Fraction, h: int) -> Exact:
    """lambda P_k(h) / C(n-t, k-t); an ``int`` when integral, else a ``Fraction``.

    A ``Fraction`` result means no t-(n,k,lambda) design exists.
    """
    if not 1 <= t <= k <= n:
        raise ValueError(f"need 1 <= t <= k <= n, got t={t}, n={n}, k={k}")
    if not 0 <= h <= t:
        raise ValueError(f"h={h} outside [0, {t}]")
    return _normalize(Fraction(lam) * krawtchouk(n, k, h) / binomial(n - t, k - t))


@dataclass(frozen=True)
class Violation:
    w: PointSet
    expected: Exact
    actual: int


@dataclass(frozen=True)
class SpectralVerdict:
    is_design: bool
    t: int
    lam: int | None = None
    first_violation: Violation | None = None
    params: DesignParameters | None = None

    def __post_init__(self):
        if not self.is_design and self.first_violation is None:
            raise ValueError("a negative verdict must carry a witness")


def verify_spectral(D: IncidenceStructure, t: int, budget: int = DEFAULT_BUDGET) -> SpectralVerdict:
    """Decide whether D is a t-design from its Walsh values on weights 0..t.

    lambda is inferred from fhat(0) = b.  When that lambda is fractional the
    structure cannot be a design; the scan still runs, against the fractional
    targets, so that a concrete witness is reported.  Among all violating w the
    one with the smallest mask is returned.
    """
    n, k = D.n, D.k
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k={k}, got t={t}")
    work = sum(binomial(n, h) for h in range(t + 1)) * D.b
    if work > budget:
        raise BudgetExceeded(f"spectral scan needs {work} sign evaluations, budget {budget}")

    f = D.characteristic_function()
    lam = lambda_as_fraction(t, n, k, walsh_at(f, 0))
    first: Violation | None = None
    for h in range(t + 1):
        target = expected_walsh(t, n, k, lam, h)
        for w in masks_of_weight(n, h):
            if first is not None and w > first.w.mask:
                break
            val = walsh_at(f, w)
            if val != target:
                first = Violation(PointSet(n, w), target, val)
                break
    if first is not None:
        return SpectralVerdict(False, t, first_violation=first)
    if lam.denominator != 1:
        raise InconsistencyError(f"all weight <= {t} values matched a fractional lambda {lam}")
    lam_int = lam.numerator
    return SpectralVerdict(True, t, lam_int, params=lambda_table(t, n, k, lam_int))


@dataclass
class AnfStructureReport:
    degree_histogram: dict[int, int]
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def anf_structure_check(D: IncidenceStructure, params: DesignParameters) -> AnfStructureReport:
    """Check the ANF of f_D against the degree pattern forced by the design.

    1. no term of degree < k;  2. degree-k terms are exactly the blocks;
    3. for 1 <= h <= t, degree n-h terms are all present iff the complementary
       lambda_h is odd, else none;  4. the degree-n term is present iff b is odd.
    """
    n, k = D.n, D.k
    form = anf(D.characteristic_function())
    hist = form.degree_histogram
    terms = set(form.terms)
    report = AnfStructureReport(hist)

    low = {d: c for d, c in hist.items() if d < k}
    if low:
        report.violations.append(("low_degree", f"terms below degree {k}: {low}"))

    deg_k = {m for m in terms if m.bit_count() == k}
    if deg_k != set(D.blocks):
        report.violations.append(("blocks", f"{len(deg_k)} degree-{k} terms vs {D.b} blocks, sets differ"))

    for h in range(1, params.t + 1):
        d = n - h
        if d == k:
            continue
        odd = complement_lambda(params, h) % 2 == 1
        want = binomial(n, d) if odd else 0
        if hist.get(d, 0) != want:
            report.violations.append(
                ("complement_degrees", f"degree {d}: {hist.get(d, 0)} terms, expected {want}")
            )

    top = (1 << n) - 1 in terms
    if top != (D.b % 2 == 1):
        report.violations.append(("top_degree", f"degree-{n} term present={top} but b={D.b}"))
    return report


def _check_steiner_n(n: int):
    if n % 4 or n < 8:
        raise ValueError(f"need n = 0 mod 4 and n >= 8, got n={n}")


def steiner_params(n: int) -> DesignParameters | None:
    """Parameters of a putative (n-2)/2-(n, n/2, 1) design, None if not integral."""
    return lambda_table((n - 2) // 2, n, n // 2, 1)


def steiner_a(n: int) -> int:
    """Walsh value on a block of an (n-2)/2-(n, n/2, 1) system."""
    _check_steiner_n(n)
    m = (n + 2) // 2
    half = n // 2
    total = 0
    for h in range(1, half + 1):
        inner = sum((-1) ** l * binomial(m, l + 1) for l in range(h))
        total += binomial(half, h) * inner
    return 2**half - exact_div(2 * total, n + 2, f"steiner_a({n})")


def steiner_a_tilde(n: int) -> int:
    """Walsh value on a weight-n/2 vector whose support is not a block."""
    a = steiner_a(n)
    return -exact_div(2 * (a - krawtchouk(n, n // 2, n // 2)), n, f"steiner_a_tilde({n})")


def steiner_nonblock_system(n: int, is_block: bool) -> tuple[tuple[int, ...], int]:
    """Solve sum_{i>=r} C(i,r) y_i = C(n/2,r) lambda_r for r = n/2-1 .. 1.

    y_i counts blocks meeting the weight-n/2 set B in i points; the ends are
    fixed by y_0 = y_{n/2} = [B is a block].  The r = 0 equation is kept as a
    consistency check.  Returns (y, sum_i (-1)^i y_i).
    """
    _check_steiner_n(n)
    params = steiner_params(n)
    if params is None:
        raise InconsistencyError(f"no integral lambda table for {(n - 2) // 2}-({n},{n // 2},1)")
    half = n // 2
    lam = params.lambda_s
    y = [0] * (half + 1)
    y[0] = y[half] = int(is_block)
    for r in range(half - 1, 0, -1):
        rhs = binomial(half, r) * lam[r]
        y[r] = rhs - sum(binomial(i, r) * y[i] for i in range(r + 1, half + 1))
    if sum(y) != lam[0]:
        raise InconsistencyError(f"r=0 equation fails: sum y = {sum(y)} != b = {lam[0]}")
    if any(v < 0 for v in y):
        raise InconsistencyError(f"negative intersection count in {y}")
    return tuple(y), sum((-1) ** i * v for i, v in enumerate(y))


def alternating_lambda_sum(n: int) -> int:
    """sum_{r=0}^{(n-2)/2} (-1)^r C(n/2, r) lambda_r, which vanishes for these systems."""
    params = steiner_params(n)
    if params is None:
        raise InconsistencyError(f"no integral lambda table for n={n}")
    half = n // 2
    return sum((-1) ** r * binomial(half, r) * params.lambda_s[r] for r in range(half))


@dataclass(frozen=True)
class SteinerSpectrum:
    n: int
    b: int
    a: int
    a_tilde: int
    by_weight: dict[int, int]

    def multiset(self) -> dict[int, Counter]:
        """weight -> Counter(value -> multiplicity), the full spectrum."""
        n, half = self.n, self.n // 2
        out = {}
        for h in range(n + 1):
            if h == half:
                out[h] = Counter({self.a: self.b, self.a_tilde: binomial(n, half) - self.b})
            else:
                out[h] = Counter({self.by_weight[h]: binomial(n, h)})
        return out


def steiner_full_spectrum(n: int) -> SteinerSpectrum:
    """The spectrum every (n-2)/2-(n, n/2, 1) design must have, whether or not one exists."""
    _check_steiner_n(n)
    t, k, half = (n - 2) // 2, n // 2, n // 2
    params = steiner_params(n)
    if params is None:
        raise InconsistencyError(f"no integral lambda table for {t}-({n},{k},1)")
    sign = (-1) ** k
    by_weight = {}
    for h in range(t + 1):
        v = expected_walsh(t, n, k, 1, h)
        if isinstance(v, Fraction):
            raise InconsistencyError(f"expected Walsh value {v} at weight {h} is not an integer")
        by_weight[h] = v
        by_weight[n - h] = sign * v
    a, a_tilde = steiner_a(n), steiner_a_tilde(n)
    spec = SteinerSpectrum(n, params.b, a, a_tilde, by_weight)
    if not check_sum_identities(n, params.b, spec):
        raise InconsistencyError(f"weight-{half} sum identities fail for n={n}")
    return spec


def check_sum_identities(n: int, b: int, spec: SteinerSpectrum | None = None) -> bool:
    """Sum and sum of squares of the weight-n/2 values against their closed forms.

    Also checks the full Parseval identity sum fhat^2 = 2^n b.
    """
    _check_steiner_n(n)
    half = n // 2
    if spec is None:
        spec = SteinerSpectrum(n, b, steiner_a(n), steiner_a_tilde(n), {})
        t = (n - 2) // 2
        for h in range(t + 1):
            v = expected_walsh(t, n, half, 1, h)
            spec.by_weight[h] = spec.by_weight[n - h] = v
    nonblocks = binomial(n, half) - b
    lin = b * spec.a + nonblocks * spec.a_tilde
    sq = b * spec.a**2 + nonblocks * spec.a_tilde**2
    p = [krawtchouk(n, half, h) for h in range(half)]
    lin_rhs = Fraction(-4, n + 2) * sum(binomial(n, h) * p[h] for h in range(half))
    sq_rhs = 2**n * b - Fraction(8, (n + 2) ** 2) * sum(binomial(n, h) * p[h] ** 2 for h in range(half))
    parseval = sq + sum(binomial(n, h) * Fraction(v) ** 2 for h, v in spec.by_weight.items() if h != half)
    return lin == lin_rhs and sq == sq_rhs and parseval == 2**n * b


def zero_odd_weights_check(D: IncidenceStructure, t: int) -> bool:
    """For k = n/2: fhat_D vanishes on every odd weight h <= t."""
    if D.n % 2 or D.k != D.n // 2:
        raise ValueError(f"needs k = n/2 with n even, got n={D.n}, k={D.k}")
    f = D.characteristic_function()
    return all(walsh_at(f, w) == 0 for h in range(1, t + 1, 2) for w in masks_of_weight(D.n, h))


def weight_class_spectrum(f: BooleanFunction, weights) -> dict[int, Counter]:
    """Walsh values restricted to the given weight classes, without a dense transform."""
    return {h: Counter(walsh_at(f, w) for w in masks_of_weight(f.n, h)) for h in weights}
