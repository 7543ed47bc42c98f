"""Quadratic forms over F_2^m and the simplex-based CSS family.

Evaluation points x = (x_1, ..., x_m) are enumerated in lexicographic
order with x_1 as the most significant bit of the point index; puncturing
removes the point x = 0. A quadratic form is given by a strictly upper
triangular matrix U with Q(x) = x U x^T, and its symplectic matrix
R = U + U^T has even rank 2h. The weights of the affine words
eps*1 + L_a + Q all lie in {2^(m-1), 2^(m-1) +- 2^(m-h-1)}, which is what
makes the simplex-plus-quadratic-coset family work: for h <= m-4 the
punctured coset weights are 0 mod 8 and the complemented ones are 7 mod 8,
so a transversal level-3 rotation is constant on every coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .codes import CssCode, new_css
from .errors import EnumerationCapError
from .gencoeff import LogicalDiagonal, induced_logical, preserves
from .gf2 import BitMatrix, BitVector, LinearCode
from .gates import WeightRuleGate

MAX_M = 16


@dataclass(frozen=True)
class QuadraticForm:
    """Q(x) = x U x^T with U strictly upper triangular over F_2."""

    m: int
    upper: BitMatrix

    def __post_init__(self) -> None:
        if self.upper.ncols != self.m or self.upper.nrows != self.m:
            raise ValueError("upper must be m x m")
        for i, row in enumerate(self.upper.rows):
            if row.bits & ((1 << (i + 1)) - 1):
                raise ValueError("upper must be strictly upper triangular")

    @classmethod
    def zero(cls, m: int) -> "QuadraticForm":
        return cls(m, BitMatrix(m, tuple(BitVector.zeros(m) for _ in range(m))))

    @classmethod
    def from_pairs(cls, m: int, pairs: list[tuple[int, int]]) -> "QuadraticForm":
        """Sum of monomials x_i x_j for each 1-based pair (i, j), i < j."""
        rows = [0] * m
        for i, j in pairs:
            if not (1 <= i < j <= m):
                raise ValueError(f"bad monomial pair ({i}, {j})")
            rows[i - 1] ^= 1 << (j - 1)
        return cls(m, BitMatrix(m, tuple(BitVector(m, r) for r in rows)))

    def point_value(self, p: int) -> int:
        """Q at the point with index p (x_1 = most significant bit of p)."""
        x = _point_vector(self.m, p)
        total = 0
        for i in range(self.m):
            if (x >> i) & 1:
                total ^= (self.upper.rows[i].bits & x).bit_count() & 1
        return total

    def symplectic_matrix(self) -> BitMatrix:
        """R = U + U^T (symmetric, zero diagonal)."""
        rows = []
        for i in range(self.m):
            r = self.upper.rows[i].bits
            for j in range(self.m):
                if (self.upper.rows[j].bits >> i) & 1:
                    r |= 1 << j
            rows.append(BitVector(self.m, r))
        return BitMatrix(self.m, tuple(rows))


def _point_vector(m: int, p: int) -> int:
    """Map point index p to the packed x with x_i at bit i-1 (x_1 = MSB of p)."""
    x = 0
    for i in range(1, m + 1):
        if (p >> (m - i)) & 1:
            x |= 1 << (i - 1)
    return x


@dataclass(frozen=True)
class EvaluationVector:
    """Values of a boolean function over F_2^m in point order."""

    m: int
    punctured: bool
    bits: BitVector

    def __post_init__(self) -> None:
        expect = (1 << self.m) - (1 if self.punctured else 0)
        if self.bits.n != expect:
            raise ValueError("evaluation vector has wrong length")


def evaluate(m: int, f, punctured: bool = False) -> EvaluationVector:
    """Evaluation vector of ``f(point_index) -> 0/1``."""
    start = 1 if punctured else 0
    bits = BitVector.from_bits([f(p) & 1 for p in range(start, 1 << m)])
    return EvaluationVector(m, punctured, bits)


@lru_cache(maxsize=8)
def _linear_evals(m: int) -> tuple[int, ...]:
    """Packed full-length evaluation vectors of L_a for all a (index = packed a)."""
    out = []
    for a in range(1 << m):
        v = 0
        for p in range(1 << m):
            if (_point_vector(m, p) & a).bit_count() & 1:
                v |= 1 << p
        out.append(v)
    return tuple(out)


def _q_eval_bits(q: QuadraticForm) -> int:
    v = 0
    for p in range(1 << q.m):
        if q.point_value(p):
            v |= 1 << p
    return v


def rank_symplectic(q: QuadraticForm) -> int:
    """Rank of R over GF(2); always even (2h)."""
    r = q.symplectic_matrix().rank()
    if r % 2:
        raise AssertionError("symplectic matrix rank must be even")
    return r


def coset_weights(q: QuadraticForm) -> dict[int, int]:
    """Weight distribution of all 2**(m+1) full-length words eps*1 + L_a + Q."""
    if q.m > MAX_M:
        raise EnumerationCapError(f"m={q.m} exceeds {MAX_M}")
    m = q.m
    qbits = _q_eval_bits(q)
    full = (1 << (1 << m)) - 1
    hist: dict[int, int] = {}
    for lbits in _linear_evals(m):
        for word in (lbits ^ qbits, lbits ^ qbits ^ full):
            w = word.bit_count()
            hist[w] = hist.get(w, 0) + 1
    return hist


def expected_weight_set(q: QuadraticForm) -> set[int]:
    """{2^(m-1), 2^(m-1) +- 2^(m-h-1)} for 2h = rank of R."""
    m, h = q.m, rank_symplectic(q) // 2
    mid = 1 << (m - 1)
    dev = 1 << (m - h - 1)
    return {mid, mid - dev, mid + dev}


def punctured_congruences(q: QuadraticForm) -> tuple[bool, bool]:
    """(divisor check, shifted congruence check) for the punctured cosets.

    Every weight in C(m) + [Q]_{x != 0} must be 0 mod 2^(m-h-1), and every
    weight in that coset plus the all-ones word must be 2^(m-h-1) - 1 mod
    2^(m-h-1).
    """
    if q.m > MAX_M:
        raise EnumerationCapError(f"m={q.m} exceeds {MAX_M}")
    m, h = q.m, rank_symplectic(q) // 2
    modulus = 1 << (m - h - 1)
    qbits = _q_eval_bits(q) >> 1  # drop the x = 0 point
    full = (1 << ((1 << m) - 1)) - 1
    div_ok = True
    shift_ok = True
    for lbits in _linear_evals(m):
        word = (lbits >> 1) ^ qbits
        if word.bit_count() % modulus:
            div_ok = False
        if (word ^ full).bit_count() % modulus != modulus - 1:
            shift_ok = False
    return div_ok, shift_ok


def character_sums(q: QuadraticForm, a: int) -> tuple[int, int]:
    """(T_a, S_a): full-space and R-nullspace character sums of Q + L_a."""
    m = q.m
    t = 0
    for p in range(1 << m):
        x = _point_vector(m, p)
        sign = (q.point_value(p) + ((x & a).bit_count() & 1)) & 1
        t += -1 if sign else 1
    r_rows = [r.bits for r in q.symplectic_matrix().rows]
    s = 0
    for x in range(1 << m):
        if any((x & row).bit_count() & 1 for row in r_rows):
            continue
        p = _point_vector(m, x)  # involution: same mapping both ways
        sign = (q.point_value(p) + ((x & a).bit_count() & 1)) & 1
        s += -1 if sign else 1
    return t, s


# --- simplex family -----------------------------------------------------------


def simplex_code(m: int) -> LinearCode:
    """[2^m - 1, m] code of punctured linear-function evaluations; every
    nonzero weight is 2^(m-1)."""
    if not 2 <= m <= MAX_M:
        raise ValueError(f"m must be in 2..{MAX_M}")
    rows = [
        evaluate(m, lambda p, i=i: (p >> (m - i)) & 1, punctured=True).bits
        for i in range(1, m + 1)
    ]
    return LinearCode.from_gen_rows((1 << m) - 1, rows)


def monomial_coset_row(m: int, i: int, j: int) -> BitVector:
    """Punctured evaluation of 1 + x_i x_j (an even-weight logical row)."""
    q = QuadraticForm.from_pairs(m, [(i, j)])
    return evaluate(m, lambda p: 1 ^ q.point_value(p), punctured=True).bits


def all_family_pairs(m: int) -> list[tuple[int, int]]:
    """Every admissible monomial pair (i, j): 1 <= i <= m-4, i < j <= m."""
    return [(i, j) for i in range(1, m - 3) for j in range(i + 1, m + 1)]


def build_family(m: int, pairs: list[tuple[int, int]]) -> CssCode:
    """CSS family member: C2 = simplex(m), logicals = all-ones plus the
    selected 1 + x_i x_j rows, y = 0.

    Validates the admissible index range, the rank guard on the span of the
    selected monomial forms, and the mod-8 coset congruences for every form
    in that span.
    """
    if m < 5:
        raise ValueError("m must be >= 5")
    if m > MAX_M:
        raise ValueError(f"m must be <= {MAX_M}")
    seen = set()
    for i, j in pairs:
        if not (1 <= i <= m - 4 and i < j <= m):
            raise ValueError(f"pair ({i}, {j}) outside 1 <= i <= {m - 4}, i < j <= {m}")
        if (i, j) in seen:
            raise ValueError(f"duplicate pair ({i}, {j})")
        seen.add((i, j))
    c2 = simplex_code(m)
    n = c2.n
    gx_rows = [BitVector.ones(n)]
    gx_rows += [monomial_coset_row(m, i, j) for i, j in pairs]
    c1 = LinearCode.from_gen_rows(n, [r for r in c2.gen.rows] + gx_rows)
    # defense in depth: verify the congruences for the whole monomial span
    for combo in range(1 << len(pairs)):
        selected = [pairs[t] for t in range(len(pairs)) if (combo >> t) & 1]
        q = QuadraticForm.from_pairs(m, selected)
        if rank_symplectic(q) > 2 * (m - 4):
            raise AssertionError("rank guard violated in the monomial span")
        h = rank_symplectic(q) // 2
        if (1 << (m - h - 1)) % 8:
            raise AssertionError("coset modulus below 8")
        div_ok, shift_ok = punctured_congruences(q)
        if not (div_ok and shift_ok):
            raise AssertionError("coset congruence validation failed")
    code = new_css(c1, c2, BitVector.zeros(n), gx_rows=gx_rows)
    if code.k != 1 + len(pairs):
        raise AssertionError("unexpected logical dimension")
    return code


def family_gate(n: int) -> WeightRuleGate:
    """The level-3 transversal rotation fixing the family: t(u) = -weight(u)
    mod 8 (a dagger rotation on every qubit)."""
    return WeightRuleGate(n, 3, 7)


def parity_logical(k: int) -> LogicalDiagonal:
    """Exponent 0 on even-weight logical bitstrings, 1 (i.e. pi/4) on odd."""
    return LogicalDiagonal(
        k, 3, tuple(a.bit_count() & 1 for a in range(1 << k))
    )


def verify_family_code(code: CssCode, cap: int = 24) -> bool:
    """Check that the dagger weight rule preserves ``code`` and induces the
    parity logical table."""
    gate = family_gate(code.n)
    if not preserves(code, gate, cap):
        return False
    return induced_logical(code, gate, cap) == parity_logical(code.k)


# --- logical-gate decomposition ------------------------------------------------


def decomposition_phase(k: int) -> int:
    """Exponent (units of pi/4, mod 8) of C(k,1)*pi/4 - C(k,2)*pi/2 + C(k,3)*pi:
    0 for even k, 1 for odd k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    e = (comb(k, 1) - 2 * comb(k, 2) + 4 * comb(k, 3)) % 8
    if e not in (0, 1):
        raise AssertionError("phase identity violated")
    return e


@dataclass(frozen=True)
class DecompositionSummary:
    """Gate counts realizing the parity logical table on k qubits."""

    k: int
    t_count: int
    cpdg_count: int
    ccz_count: int
    residue: int
    matches_parity_table: bool


def logical_decomposition(k: int, cap: int = 24) -> DecompositionSummary:
    """Single-qubit rotations on every qubit, dagger controlled-phase on
    every pair, doubly-controlled Z on every triple; verified to reproduce
    the parity table exactly."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > cap:
        raise EnumerationCapError(f"k={k} exceeds cap {cap}")
    target = parity_logical(k)
    ok = True
    for alpha in range(1 << k):
        s = alpha.bit_count()
        e = (comb(s, 1) - 2 * comb(s, 2) + 4 * comb(s, 3)) % 8
        if e != target.exponents[alpha]:
            ok = False
            break
    return DecompositionSummary(
        k=k,
        t_count=comb(k, 1),
        cpdg_count=comb(k, 2),
        ccz_count=comb(k, 3),
        residue=decomposition_phase(k),
        matches_parity_table=ok,
    )
