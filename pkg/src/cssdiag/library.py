"""Small named codes and gates used by the CLI catalog, fixtures and tests."""

from __future__ import annotations

from .codes import CssCode, StabilizerStandardForm, new_css, standard_form
from .gf2 import BitMatrix, BitVector, LinearCode
from .gates import (
    FactorProductGate,
    LinearForm,
    SymbolicPhaseGate,
    from_factors,
    named_factor,
)
from .qforms import simplex_code


def code_5_1_2() -> CssCode:
    """Distance-2 five-qubit CSS code whose phase-type logical gate is
    realized by a mixed product of local phase gates."""
    c2 = LinearCode.from_gen_rows(5, ["11010", "01101"])
    c1 = LinearCode.from_gen_rows(5, ["11001", "01110"]).dual()
    return new_css(c1, c2, BitVector.zeros(5))


def gate_5_1_2() -> FactorProductGate:
    """P on qubits 1 and 3, P-dagger on 2, controlled-Z on (4, 5)."""
    return from_factors(
        5,
        [
            named_factor("P", [1]),
            named_factor("PDG", [2]),
            named_factor("P", [3]),
            named_factor("CZ", [4, 5]),
        ],
    )


def code_15_1_3() -> CssCode:
    """Punctured first-order Reed-Muller CSS code [[15,1,3]]."""
    c2 = simplex_code(4)
    ones = BitVector.ones(15)
    c1 = LinearCode.from_gen_rows(15, list(c2.gen.rows) + [ones])
    return new_css(c1, c2, BitVector.zeros(15), gx_rows=[ones])


def steane_7_1_3() -> CssCode:
    """Steane code: simplex(3) X-stabilizers inside the Hamming code."""
    c2 = simplex_code(3)
    c1 = c2.dual()
    return new_css(c1, c2, BitVector.zeros(7))


def stab_5_1_3() -> StabilizerStandardForm:
    """Standard form of the five-qubit distance-3 stabilizer code (all
    generators mixed X/Z)."""
    c = BitMatrix.from_strings(["10010", "01001", "10100", "01010"])
    d = BitMatrix.from_strings(["01100", "00110", "00011", "10001"])
    return standard_form(c, d)


def code_6_1_2_dfs() -> CssCode:
    """[[6,1,2]] code whose shifted logical coset has constant weight 3,
    making it oblivious to homogeneous coherent Z-rotations and (with the
    matched angle constraints) an identity-carrier for the paired
    inhomogeneous noise."""
    c2 = LinearCode.from_gen_rows(6, ["111111"])
    c1 = LinearCode.from_gen_rows(6, ["111111", "001100"])
    return new_css(c1, c2, BitVector.from_string("111000"))


def noise_6_1_2(constrained: bool = True) -> SymbolicPhaseGate:
    """Inhomogeneous coherent noise on six qubits: angles
    (t1, t2, t, t, u1, u2), optionally constrained by t1+t2 = u1+u2 = t."""
    names = ["t1", "t2", "t", "t", "u1", "u2"]
    angles = tuple(LinearForm.symbol(s) for s in names)
    constraints: tuple[LinearForm, ...] = ()
    if constrained:
        constraints = (
            LinearForm.make({"t1": 1, "t2": 1, "t": -1}),
            LinearForm.make({"u1": 1, "u2": 1, "t": -1}),
        )
    return SymbolicPhaseGate(6, angles, constraints)


def constant_weight_coset_code() -> CssCode:
    """Alias for the [[6,1,2]] fixture, whose C1 + y weights are all equal."""
    return code_6_1_2_dfs()


__all__ = [
    "code_5_1_2",
    "gate_5_1_2",
    "code_15_1_3",
    "steane_7_1_3",
    "stab_5_1_3",
    "code_6_1_2_dfs",
    "noise_6_1_2",
    "constant_weight_coset_code",
]
