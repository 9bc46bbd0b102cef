import random
from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest

from oracles import comb, design_corpus, design_lambda, krawtchouk_alt1
from tdesigns.boolfn import walsh_full
from tdesigns.design import IncidenceStructure, lambda_table, verify_bruteforce
from tdesigns.errors import BudgetExceeded
from tdesigns.spectral import (
    alternating_lambda_sum,
    anf_structure_check,
    check_sum_identities,
    expected_walsh,
    steiner_a,
    steiner_a_tilde,
    steiner_full_spectrum,
    steiner_nonblock_system,
    verify_spectral,
    weight_class_spectrum,
    zero_odd_weights_check,
)

S5612_SPECTRUM = {
    0: {132: 1}, 1: {0: 12}, 2: {-12: 66}, 3: {0: 220}, 4: {4: 495}, 5: {0: 792},
    6: {-12: 792, 52: 132},
    7: {0: 792}, 8: {4: 495}, 9: {0: 220}, 10: {-12: 66}, 11: {0: 12}, 12: {132: 1},
}


def test_expected_walsh_examples():
    assert [expected_walsh(2, 7, 3, 1, h) for h in range(3)] == [7, 1, -1]
    assert expected_walsh(5, 12, 6, 1, 2) == -12
    assert expected_walsh(5, 12, 6, 1, 1) == 0
    assert isinstance(expected_walsh(2, 8, 3, 1, 0), Fraction)


def test_verify_spectral_examples(fano_design, fano_minus, s5612):
    v = verify_spectral(fano_design, 2)
    assert v.is_design and v.lam == 1
    v = verify_spectral(fano_minus, 2)
    assert not v.is_design and v.first_violation is not None
    assert v.first_violation.w.points == (1,)
    assert v.first_violation.expected == Fraction(6, 7)
    v = verify_spectral(s5612, 5)
    assert v.is_design and v.lam == 1 and v.params.lambda_s == (132, 66, 30, 12, 4, 1)


def test_verify_spectral_integral_lambda_witness():
    # 2-subsets of a 4-cycle: integral lambda guess at t=1 fails at t=2 with a weight-2 witness
    D = IncidenceStructure.from_blocks(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert verify_spectral(D, 1).is_design
    v = verify_spectral(D, 2)
    assert not v.is_design
    assert v.first_violation.w.weight <= 2


def test_verify_spectral_budget(s5612):
    with pytest.raises(BudgetExceeded):
        verify_spectral(s5612, 5, budget=1000)


def test_oracle_equivalence_corpus():
    rng = random.Random(2024)
    for n, k, blocks in design_corpus(rng, 200, max_n=10):
        D = IncidenceStructure.from_blocks(n, blocks, k=k)
        for t in range(1, k + 1):
            assert verify_spectral(D, t).is_design == (design_lambda(n, blocks, t) is not None)


def test_complement_spectrum_law():
    rng = random.Random(5)
    for n, k, blocks in design_corpus(rng, 80):
        spec = walsh_full(IncidenceStructure.from_blocks(n, blocks, k=k).characteristic_function())
        full = (1 << n) - 1
        for w in range(1 << n):
            assert spec[w ^ full] == (-1) ** k * spec[w]


def test_nonintegral_expected_value_rules_out_design():
    for n in range(3, 10):
        for k in range(1, n + 1):
            for t in range(1, k + 1):
                for lam in (1, 2):
                    if any(isinstance(expected_walsh(t, n, k, lam, h), Fraction) for h in range(t + 1)):
                        # b = lam C(n,t)/C(k,t); if integral, no such structure can be a design
                        assert lambda_table(t, n, k, lam) is None or _no_design_exists(n, k, t, lam)


def _no_design_exists(n, k, t, lam):
    b = Fraction(lam * comb(n, t), comb(k, t))
    if b.denominator != 1 or b > comb(n, k):
        return True
    # small enough to enumerate every b-subset of k-sets
    all_k = list(combinations(range(1, n + 1), k))
    if comb(len(all_k), int(b)) > 5000:
        pytest.skip("too many candidate structures")
    return all(design_lambda(n, list(c), t) is None for c in combinations(all_k, int(b)))


def test_anf_structure(fano_design, s5612):
    rep = anf_structure_check(fano_design, verify_bruteforce(fano_design, 2))
    assert rep.ok and rep.degree_histogram == {3: 7, 4: 28, 7: 1}
    rep = anf_structure_check(s5612, verify_bruteforce(s5612, 5))
    assert rep.ok and rep.degree_histogram == {6: 132, 7: 792}
    D = IncidenceStructure.from_blocks(4, combinations(range(1, 5), 2))
    rep = anf_structure_check(D, verify_bruteforce(D, 1))
    assert rep.ok and rep.degree_histogram[2] == 6


def test_anf_structure_flags_non_design(fano_design, fano_minus):
    rep = anf_structure_check(fano_minus, verify_bruteforce(fano_design, 2))
    assert not rep.ok


def test_steiner_a_values():
    assert steiner_a(12) == 52
    assert steiner_a_tilde(12) == -12
    assert steiner_a_tilde(12) == expected_walsh(5, 12, 6, 1, 2)
    # inner alternating sums S(h), h = 1..6
    S = [sum((-1) ** l * comb(7, l + 1) for l in range(h)) for h in range(1, 7)]
    assert S == [7, -14, 21, -14, 7, 0]
    assert sum(comb(6, h) * s for h, s in zip(range(1, 7), S)) == 84
    assert 64 - 2 * 84 // 14 == 52


@pytest.mark.parametrize("n", [8, 12])
def test_three_routes_agree(n):
    y_block, a = steiner_nonblock_system(n, True)
    y_non, at = steiner_nonblock_system(n, False)
    assert a == steiner_a(n)
    assert at == steiner_a_tilde(n)
    assert sum(y_block) == sum(y_non) == lambda_table((n - 2) // 2, n, n // 2, 1).b
    assert alternating_lambda_sum(n) == 0


def test_y_system_n12_counts(s5612):
    y, _ = steiner_nonblock_system(12, True)
    B = s5612.blocks[0]
    direct = Counter((B & C).bit_count() for C in s5612.blocks)
    assert y == tuple(direct.get(i, 0) for i in range(7))


def test_full_spectrum_s5612(s5612):
    spec = steiner_full_spectrum(12)
    assert {h: dict(c) for h, c in spec.multiset().items()} == S5612_SPECTRUM
    direct = walsh_full(s5612.characteristic_function()).by_weight()
    assert {h: dict(c) for h, c in direct.items()} == S5612_SPECTRUM


def test_sum_identities_n12():
    assert 132 * 52 + 792 * (-12) == -2640
    rhs = Fraction(-4, 14) * sum(comb(12, h) * krawtchouk_alt1(12, 6, h) for h in range(6))
    assert rhs == -2640
    assert check_sum_identities(12, 132)
    total = sum(v**2 * m for c in S5612_SPECTRUM.values() for v, m in c.items())
    assert total == 2**12 * 132


def test_steiner_n8_spectrum():
    spec = steiner_full_spectrum(8)
    assert (spec.a, spec.a_tilde) == (14, -2)
    ms = spec.multiset()
    assert sum(v**2 * m for c in ms.values() for v, m in c.items()) == 2**8 * 14


def test_steiner_rejects_bad_n():
    for n in (6, 10, 14):
        with pytest.raises(ValueError):
            steiner_a(n)


def test_zero_odd_weights(s5612, fano_design):
    assert zero_odd_weights_check(s5612, 5)
    D = IncidenceStructure.from_blocks(4, combinations(range(1, 5), 2))
    assert zero_odd_weights_check(D, 1)
    assert set(weight_class_spectrum(D.characteristic_function(), [1])[1]) == {0}
    with pytest.raises(ValueError):
        zero_odd_weights_check(fano_design, 2)


def test_weight_class_spectrum_matches_dense(s5612):
    f = s5612.characteristic_function()
    part = weight_class_spectrum(f, range(6))
    dense = walsh_full(f).by_weight()
    assert all(part[h] == dense[h] for h in range(6))
