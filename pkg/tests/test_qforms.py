import random
from itertools import combinations

import pytest

from cssdiag.codes import new_css
from cssdiag.gf2 import BitVector, LinearCode
from cssdiag.qforms import (
    QuadraticForm,
    all_family_pairs,
    build_family,
    character_sums,
    coset_weights,
    decomposition_phase,
    evaluate,
    expected_weight_set,
    logical_decomposition,
    monomial_coset_row,
    parity_logical,
    punctured_congruences,
    rank_symplectic,
    simplex_code,
    verify_family_code,
)


def _all_forms(m: int):
    pairs = list(combinations(range(1, m + 1), 2))
    for mask in range(1 << len(pairs)):
        yield QuadraticForm.from_pairs(m, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


# --- rank -----------------------------------------------------------------------


def test_rank_zero_form():
    assert rank_symplectic(QuadraticForm.zero(4)) == 0


def test_rank_single_pair():
    assert rank_symplectic(QuadraticForm.from_pairs(4, [(1, 2)])) == 2


def test_rank_two_disjoint_pairs():
    assert rank_symplectic(QuadraticForm.from_pairs(4, [(1, 2), (3, 4)])) == 4


def test_strict_upper_enforced():
    from cssdiag.gf2 import BitMatrix

    with pytest.raises(ValueError):
        QuadraticForm(2, BitMatrix.from_strings(["10", "00"]))


# --- coset weights -----------------------------------------------------------------


def test_coset_weights_zero_form_m4():
    hist = coset_weights(QuadraticForm.zero(4))
    assert set(hist) == {0, 8, 16}
    assert sum(hist.values()) == 32


def test_coset_weights_single_pair_m4():
    q = QuadraticForm.from_pairs(4, [(1, 2)])
    assert set(coset_weights(q)) <= {4, 8, 12}


def test_coset_weights_h1_m5():
    q = QuadraticForm.from_pairs(5, [(1, 2)])
    assert set(coset_weights(q)) <= {8, 16, 24}


def test_coset_weights_in_predicted_set_exhaustive_m_le_4():
    for m in (2, 3, 4):
        for q in _all_forms(m):
            assert set(coset_weights(q)) <= expected_weight_set(q), (m, q)


def test_character_sum_identity_exhaustive():
    # square of the full character sum equals 2^m times the nullspace sum
    for m in (2, 3, 4, 5):
        for q in _all_forms(m):
            for a in range(1 << m):
                t, s = character_sums(q, a)
                assert t * t == (1 << m) * s


# --- punctured congruences ------------------------------------------------------------


def test_punctured_congruences_m5_pair():
    q = QuadraticForm.from_pairs(5, [(1, 2)])
    assert rank_symplectic(q) == 2
    assert punctured_congruences(q) == (True, True)


def test_punctured_congruences_zero_form():
    for m in (3, 4, 5):
        assert punctured_congruences(QuadraticForm.zero(m)) == (True, True)


def test_punctured_congruences_family_span_m6():
    rng = random.Random(71)
    admissible = all_family_pairs(6)
    for _ in range(20):
        pairs = [p for p in admissible if rng.random() < 0.5]
        q = QuadraticForm.from_pairs(6, pairs)
        assert rank_symplectic(q) <= 4
        assert punctured_congruences(q) == (True, True)


# --- simplex ------------------------------------------------------------------------------


def test_simplex_m3():
    c = simplex_code(3)
    assert (c.n, c.k) == (7, 3)
    assert c.weight_distribution() == {0: 1, 4: 7}


def test_simplex_m4_two_weight():
    assert simplex_code(4).weight_distribution() == {0: 1, 8: 15}


def test_simplex_m2():
    c = simplex_code(2)
    assert (c.n, c.k) == (3, 2)


def test_simplex_range():
    with pytest.raises(ValueError):
        simplex_code(1)


# --- family construction -----------------------------------------------------------------------


def test_build_family_m5_all_pairs():
    code = build_family(5, all_family_pairs(5))
    assert (code.n, code.k, code.k2) == (31, 5, 5)
    assert str(code.gx[0]) == "1" * 31


def test_build_family_m5_no_pairs():
    code = build_family(5, [])
    assert (code.n, code.k) == (31, 1)
    assert verify_family_code(code)


def test_build_family_m6_seven_rows():
    code = build_family(6, all_family_pairs(6)[:6])
    assert (code.n, code.k) == (63, 7)
    assert verify_family_code(code)


def test_build_family_index_range():
    with pytest.raises(ValueError):
        build_family(5, [(2, 3)])  # i must be <= m-4 = 1
    with pytest.raises(ValueError):
        build_family(4, [])
    with pytest.raises(ValueError):
        build_family(5, [(1, 2), (1, 2)])


def test_family_guard_rank_bound():
    pairs = all_family_pairs(6)
    rng = random.Random(73)
    for _ in range(30):
        selected = [p for p in pairs if rng.random() < 0.5]
        q = QuadraticForm.from_pairs(6, selected)
        assert rank_symplectic(q) <= 2 * (6 - 4)


def test_verify_family_m5():
    assert verify_family_code(build_family(5, all_family_pairs(5)))


def test_verify_family_rejects_cubic_corruption():
    # adding a cubic-coset logical row breaks the mod-8 coset congruence
    m = 5
    c2 = simplex_code(m)
    n = c2.n

    def cubic(p):
        x = [(p >> (m - i)) & 1 for i in range(1, m + 1)]
        return 1 ^ (x[0] & x[1] & x[2])

    rows = [BitVector.ones(n), monomial_coset_row(m, 1, 2), evaluate(m, cubic, punctured=True).bits]
    c1 = LinearCode.from_gen_rows(n, list(c2.gen.rows) + rows)
    corrupted = new_css(c1, c2, BitVector.zeros(n), gx_rows=rows)
    assert not verify_family_code(corrupted)


def test_family_codes_pass_code_invariants():
    code = build_family(5, [(1, 3), (1, 5)])
    for i, w in enumerate(code.gx):
        assert code.c1.contains(w)
        for j, g in enumerate(code.gz):
            assert w.dot(g) == (1 if i == j else 0)
    assert verify_family_code(code)


# --- decomposition --------------------------------------------------------------------------------


def test_decomposition_phase_small_cases():
    assert decomposition_phase(1) == 1
    assert decomposition_phase(2) == 0
    assert decomposition_phase(12) == 0
    assert decomposition_phase(13) == 1


def test_decomposition_phase_parity_up_to_64():
    for k in range(1, 65):
        assert decomposition_phase(k) == k % 2


def test_logical_decomposition_counts():
    d1 = logical_decomposition(1)
    assert (d1.t_count, d1.cpdg_count, d1.ccz_count) == (1, 0, 0)
    assert d1.matches_parity_table
    d2 = logical_decomposition(2)
    assert (d2.t_count, d2.cpdg_count, d2.ccz_count) == (2, 1, 0)
    assert d2.residue == 0
    d5 = logical_decomposition(5)
    assert (d5.t_count, d5.cpdg_count, d5.ccz_count) == (5, 10, 10)
    assert d5.matches_parity_table


def test_logical_decomposition_matches_table_up_to_k10():
    for k in range(1, 11):
        assert logical_decomposition(k).matches_parity_table


def test_parity_logical_table():
    t = parity_logical(3)
    assert t.exponents == (0, 1, 1, 0, 1, 0, 0, 1)
