"""Brute-force verification independent of the generator-coefficient path.

Code states are simulated as sparse maps from basis bitstrings to float
amplitudes; applying a diagonal gate multiplies each amplitude by its exact
root-of-unity phase evaluated in floats. Preservation and logical-action
checks compare states amplitude by amplitude, so they share nothing with
the exact coset/cyclotomic machinery they are used to cross-check.
"""

from __future__ import annotations

import cmath

from .codes import CssCode, SparseState, encode_basis
from .errors import EnumerationCapError
from .gencoeff import LogicalDiagonal, gc_matrix
from .gf2 import DEFAULT_ENUM_CAP, BitVector
from .gates import DiagonalGate

AMPLITUDE_TOL = 1e-10
ORACLE_K_CAP = 20


def apply_diagonal(gate: DiagonalGate, state: SparseState) -> SparseState:
    """Multiply each amplitude by the gate phase; support is unchanged."""
    if gate.n != state.n:
        raise ValueError("qubit count mismatch")
    half = 1 << (gate.level - 1)
    phases = {}
    out = {}
    for u, amp in state.amplitudes.items():
        t = gate.entry(u)
        if t not in phases:
            phases[t] = cmath.exp(1j * cmath.pi * t / half)
        out[u] = amp * phases[t]
    return SparseState(state.n, out)


def _states_equal_up_to_phase(
    a: SparseState, b: SparseState, phase: complex, tol: float
) -> bool:
    if a.support() != b.support():
        return False
    return all(abs(b.amplitudes[u] - phase * a.amplitudes[u]) <= tol for u in a.amplitudes)


def verify_logical_action(
    code: CssCode,
    gate: DiagonalGate,
    claimed: LogicalDiagonal,
    tol: float = AMPLITUDE_TOL,
    cap: int = DEFAULT_ENUM_CAP,
) -> bool:
    """Check that the gate multiplies every encoded basis state by exactly
    the claimed logical phase, amplitude by amplitude."""
    if claimed.k != code.k:
        raise ValueError("claimed logical has wrong dimension")
    if code.k > ORACLE_K_CAP:
        raise EnumerationCapError(f"k={code.k} exceeds oracle cap {ORACLE_K_CAP}")
    half = 1 << (claimed.level - 1)
    width = max(code.k, 1)
    for a in range(1 << code.k):
        alpha = BitVector(width, a)
        encoded = encode_basis(code, alpha, cap)
        evolved = apply_diagonal(gate, encoded)
        phase = cmath.exp(1j * cmath.pi * claimed.exponents[a] / half)
        if not _states_equal_up_to_phase(encoded, evolved, phase, tol):
            return False
    return True


def brute_force_preserves(
    code: CssCode,
    gate: DiagonalGate,
    tol: float = AMPLITUDE_TOL,
    cap: int = DEFAULT_ENUM_CAP,
) -> bool:
    """True iff every encoded basis state is mapped to a uniform-phase
    multiple of itself (for diagonal gates this is exactly codespace
    preservation)."""
    if code.k > ORACLE_K_CAP:
        raise EnumerationCapError(f"k={code.k} exceeds oracle cap {ORACLE_K_CAP}")
    width = max(code.k, 1)
    for a in range(1 << code.k):
        alpha = BitVector(width, a)
        encoded = encode_basis(code, alpha, cap)
        evolved = apply_diagonal(gate, encoded)
        ref_u = next(iter(encoded.amplitudes))
        phase = evolved.amplitudes[ref_u] / encoded.amplitudes[ref_u]
        if abs(abs(phase) - 1.0) > tol:
            return False
        if not _states_equal_up_to_phase(encoded, evolved, phase, tol):
            return False
    return True


def completeness_check(code: CssCode, gate: DiagonalGate, cap: int = DEFAULT_ENUM_CAP) -> float:
    """|sum over all generator coefficients of |A|^2 - 1| as a float; the sum
    is computed exactly and must be exactly one."""
    total = gc_matrix(code, gate, cap).completeness_sum()
    return abs(total.to_complex() - 1.0)
