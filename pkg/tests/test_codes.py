import random

import pytest

from cssdiag.codes import (
    code_from_json,
    code_to_json,
    css_from_standard_form,
    distance_bounds,
    encode_basis,
    ft_local_check,
    new_css,
    standard_form,
    tower_from_standard_form,
    undetectable_z_errors_bounded,
)
from cssdiag.errors import ContainmentError, StandardFormError
from cssdiag.gf2 import BitMatrix, BitVector, LinearCode
from cssdiag.library import code_5_1_2, code_15_1_3, stab_5_1_3, steane_7_1_3

from conftest import random_css_code


# --- construction -----------------------------------------------------------------


def test_new_css_five_qubit():
    code = code_5_1_2()
    assert (code.n, code.k, code.k1, code.k2) == (5, 1, 3, 2)
    assert [str(r) for r in code.gx] == ["11100"]


def test_new_css_trivial_logical_space():
    c = LinearCode.from_gen_rows(4, ["1100", "0011"])
    code = new_css(c, c, BitVector.zeros(4))
    assert code.k == 0
    assert code.gx == () and code.gz == ()


def test_new_css_rm15_logicals():
    code = code_15_1_3()
    assert code.k == 1
    assert str(code.gx[0]) == "1" * 15
    assert str(code.gz[0]) == "1" * 15


def test_new_css_rejects_non_tower():
    c1 = LinearCode.from_gen_rows(4, ["1100"])
    c2 = LinearCode.from_gen_rows(4, ["0011"])
    with pytest.raises(ContainmentError):
        new_css(c1, c2, BitVector.zeros(4))


def test_new_css_rejects_bad_explicit_gx():
    code = code_5_1_2()
    with pytest.raises(ValueError):
        new_css(code.c1, code.c2, code.y, gx_rows=[BitVector.from_string("11010")])


def test_duality_pairing_invariant():
    rng = random.Random(3)
    for _ in range(25):
        code = random_css_code(rng, rng.randint(2, 10))
        for i, w in enumerate(code.gx):
            assert code.c1.contains(w)
            for j, g in enumerate(code.gz):
                assert code.c2.dual().contains(g)
                assert w.dot(g) == (1 if i == j else 0)


# --- encoding ----------------------------------------------------------------------


def test_encode_basis_five_qubit_plus_state():
    code = code_5_1_2()
    state = encode_basis(code, BitVector.from_string("0"))
    assert len(state.amplitudes) == 4
    assert all(abs(a - 0.5) < 1e-12 for a in state.amplitudes.values())
    assert state.support() == frozenset(code.c2.codewords())


def test_encode_basis_k2_zero_single_vector():
    c1 = LinearCode.from_gen_rows(3, ["111"])
    c2 = LinearCode.zero(3)
    y = BitVector.from_string("010")
    code = new_css(c1, c2, y)
    state = encode_basis(code, BitVector.from_string("1"))
    assert len(state.amplitudes) == 1
    (vec,) = state.support()
    assert vec == code.gx[0] ^ y


def test_encode_basis_rm15_alpha_one():
    code = code_15_1_3()
    state = encode_basis(code, BitVector.from_string("1"))
    assert len(state.amplitudes) == 16
    shift = code.gx[0]
    assert state.support() == frozenset(x ^ shift for x in code.c2.codewords())


def test_encoded_states_orthonormal():
    rng = random.Random(5)
    for _ in range(10):
        code = random_css_code(rng, rng.randint(2, 8))
        if code.k > 3:
            continue
        states = [
            encode_basis(code, BitVector(max(code.k, 1), a)) for a in range(1 << code.k)
        ]
        for i, si in enumerate(states):
            for j, sj in enumerate(states):
                expected = 1.0 if i == j else 0.0
                assert abs(si.inner(sj) - expected) < 1e-12


# --- standard form ----------------------------------------------------------------------


def test_standard_form_five_qubit_mixed():
    s = stab_5_1_3()
    assert s.a_rows.nrows == 0
    assert s.b_rows.nrows == 0
    assert s.c_rows.nrows == 4 and s.d_rows.nrows == 4
    # span of (x|z) rows is preserved
    orig = [
        (x, z)
        for x, z in zip(
            ["10010", "01001", "10100", "01010"], ["01100", "00110", "00011", "10001"]
        )
    ]
    orig_ints = [
        BitVector.from_string(x).bits | (BitVector.from_string(z).bits << 5)
        for x, z in orig
    ]
    got_ints = [
        x.bits | (z.bits << 5) for x, z in zip(s.c_rows.rows, s.d_rows.rows)
    ]
    from cssdiag.gf2 import _rref_ints

    assert _rref_ints(orig_ints, 10)[0] == _rref_ints(got_ints, 10)[0]


def test_standard_form_pure_css_input():
    code = code_5_1_2()
    x = BitMatrix(5, tuple(code.c2.gen.rows))
    z = BitMatrix(5, tuple(code.c1.dual().gen.rows))
    zeros = BitMatrix(5, tuple(BitVector.zeros(5) for _ in range(2)))
    s = standard_form(
        BitMatrix(5, x.rows + zeros.rows), BitMatrix(5, zeros.rows + z.rows)
    )
    assert s.c_rows.nrows == 0
    assert s.a_rows.nrows == 2 and s.b_rows.nrows == 2


def test_standard_form_rejects_anticommuting():
    x = BitMatrix.from_strings(["100", "000"])
    z = BitMatrix.from_strings(["000", "100"])
    with pytest.raises(StandardFormError):
        standard_form(x, z)


def test_standard_form_rejects_dependent():
    x = BitMatrix.from_strings(["110", "110"])
    z = BitMatrix.from_strings(["000", "000"])
    with pytest.raises(StandardFormError):
        standard_form(x, z)


def test_standard_form_random_commuting_sets():
    rng = random.Random(9)
    checked = 0
    while checked < 10:
        n = 3
        rows = []
        for _ in range(2):
            x, z = rng.getrandbits(n), rng.getrandbits(n)
            if all(
                ((x & z2).bit_count() + (x2 & z).bit_count()) % 2 == 0
                for x2, z2 in rows
            ):
                rows.append((x, z))
        if len(rows) < 2 or rows[0] == rows[1] or rows[0] == (0, 0) or rows[1] == (0, 0):
            continue
        try:
            s = standard_form(
                BitMatrix(n, tuple(BitVector(n, x) for x, _ in rows)),
                BitMatrix(n, tuple(BitVector(n, z) for _, z in rows)),
            )
        except StandardFormError:
            continue
        checked += 1
        # every output row commutes with every other (re-check)
        all_rows = (
            [(r.bits, 0) for r in s.a_rows.rows]
            + [(0, r.bits) for r in s.b_rows.rows]
            + [(x.bits, z.bits) for x, z in zip(s.c_rows.rows, s.d_rows.rows)]
        )
        for i in range(len(all_rows)):
            for j in range(len(all_rows)):
                x1, z1 = all_rows[i]
                x2, z2 = all_rows[j]
                assert ((x1 & z2).bit_count() + (x2 & z1).bit_count()) % 2 == 0
        assert len(all_rows) == 2


# --- tower extraction ----------------------------------------------------------------------


def test_tower_five_qubit():
    sub, sup = tower_from_standard_form(stab_5_1_3())
    assert (sub.n, sub.k) == (5, 4)
    assert sub.weight_distribution() == {0: 1, 2: 10, 4: 5}
    assert sup == LinearCode.full(5)


def test_tower_css_recovers_classical_pair():
    code = code_5_1_2()
    zeros = tuple(BitVector.zeros(5) for _ in range(2))
    s = standard_form(
        BitMatrix(5, tuple(code.c2.gen.rows) + zeros),
        BitMatrix(5, zeros + tuple(code.c1.dual().gen.rows)),
    )
    sub, sup = tower_from_standard_form(s)
    assert sub == code.c2
    assert sup == code.c1


def test_tower_containment_random():
    rng = random.Random(21)
    built = 0
    while built < 8:
        n = rng.randint(2, 5)
        x, z = rng.getrandbits(n), rng.getrandbits(n)
        if (x, z) == (0, 0):
            continue
        s = standard_form(
            BitMatrix(n, (BitVector(n, x),)), BitMatrix(n, (BitVector(n, z),))
        )
        sub, sup = tower_from_standard_form(s)
        assert sub.is_subcode_of(sup)
        built += 1


def test_css_from_standard_form_five_qubit():
    code = css_from_standard_form(stab_5_1_3())
    assert (code.n, code.k) == (5, 1)
    assert code.gx[0].weight % 2 == 1  # odd-parity logical representative


# --- fault-tolerance locality -----------------------------------------------------------------


def test_ft_local_check_cz_support():
    code = code_5_1_2()
    assert ft_local_check(code, {4, 5})


def test_ft_local_check_empty_support():
    assert ft_local_check(code_5_1_2(), set())


def test_ft_local_check_full_support_fails():
    code = code_5_1_2()
    assert not ft_local_check(code, set(range(1, 6)))


def test_ft_local_check_stabilizer_support_fails():
    code = code_5_1_2()
    assert not ft_local_check(code, {1, 2, 4})  # support of the stabilizer 11010


def test_ft_local_check_monotone():
    rng = random.Random(13)
    for _ in range(20):
        code = random_css_code(rng, rng.randint(2, 9))
        supp = set(rng.sample(range(1, code.n + 1), rng.randint(0, code.n)))
        if ft_local_check(code, supp):
            smaller = {c for c in supp if rng.random() < 0.5}
            assert ft_local_check(code, smaller)


def test_ft_local_check_range():
    with pytest.raises(ValueError):
        ft_local_check(code_5_1_2(), {0})


# --- undetectable Z errors ----------------------------------------------------------------------


def test_undetectable_five_qubit():
    code = code_5_1_2()
    found = undetectable_z_errors_bounded(code, 5)
    assert len(found) == 4
    assert sum(1 for v in found if v.weight == 2) == 2
    # they form a coset of dual(C1) inside dual(C2)
    c1p = code.c1.dual()
    base = found[0]
    assert {(v ^ base).bits for v in found} == {x.bits for x in c1p.codewords()}


def test_undetectable_trivial_logical_space():
    c = LinearCode.from_gen_rows(4, ["1100", "0011"])
    code = new_css(c, c, BitVector.zeros(4))
    assert undetectable_z_errors_bounded(code, 4) == []


def test_undetectable_rm15_distance3():
    assert undetectable_z_errors_bounded(code_15_1_3(), 2) == []


# --- distance reports ------------------------------------------------------------------------------


def test_distance_bounds_steane():
    rep = distance_bounds(steane_7_1_3(), 7)
    assert rep["d_x"] == {"value": 3, "exact": True}
    assert rep["d_z"] == {"value": 3, "exact": True}
    assert rep["d"] == {"value": 3, "exact": True}


def test_distance_bounds_not_found():
    rep = distance_bounds(steane_7_1_3(), 2)
    assert rep["d_x"] == {"lower_bound": 3, "exact": False}
    assert rep["d"] == {"lower_bound": 3, "exact": False}


# --- JSON ---------------------------------------------------------------------------------------------


def test_code_json_roundtrip():
    for code in (code_5_1_2(), code_15_1_3(), steane_7_1_3()):
        back = code_from_json(code_to_json(code))
        assert back == code
        assert back.gx == code.gx and back.gz == code.gz


def test_code_json_without_gx_uses_canonical():
    code = code_15_1_3()
    obj = code_to_json(code)
    del obj["gx_rows"], obj["gz_rows"]
    back = code_from_json(obj)
    assert back.c1 == code.c1 and back.c2 == code.c2
    assert back.gx == code.gx  # canonical choice is the all-ones representative
