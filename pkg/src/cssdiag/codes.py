"""CSS and stabilizer code model.

A CSS code is determined by a classical code tower C2 inside C1 plus a
character vector y fixing the signs of the Z-stabilizers (X-stabilizer
signs are irrelevant for diagonal gates and fixed positive). The logical
X generators ``gx`` are coset representatives of C1/C2 and the logical Z
generators ``gz`` are the dual rows inside the dual of C2, paired so that
gx @ gz^T is the identity.

General stabilizer codes enter through the standard form [A 0; 0 B; C D]
with maximal pure-X and pure-Z blocks, which yields the replacement tower
span(A, C) inside dual(span(B)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContainmentError, EnumerationCapError, StandardFormError
from .gf2 import (
    DEFAULT_ENUM_CAP,
    BitMatrix,
    BitVector,
    LinearCode,
    _rref_ints,
    bounded_codewords,
    combine,
    complement_basis,
    lex_greatest_in_affine,
    min_weight_bounded,
    solve_gf2,
)


@dataclass(frozen=True)
class SparseState:
    """Finitely supported state: amplitudes keyed by basis bitstrings."""

    n: int
    amplitudes: dict[BitVector, complex]

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def inner(self, other: "SparseState") -> complex:
        if self.n != other.n:
            raise ValueError("length mismatch")
        keys = self.amplitudes.keys() & other.amplitudes.keys()
        return sum(self.amplitudes[k].conjugate() * other.amplitudes[k] for k in keys)

    def support(self) -> frozenset[BitVector]:
        return frozenset(self.amplitudes)


@dataclass(frozen=True)
class CssCode:
    n: int
    c1: LinearCode
    c2: LinearCode
    y: BitVector
    k: int
    gx: tuple[BitVector, ...]
    gz: tuple[BitVector, ...]

    @property
    def k1(self) -> int:
        return self.c1.k

    @property
    def k2(self) -> int:
        return self.c2.k

    def x_syndrome_reps(self) -> list[BitVector]:
        """Canonical coset representatives of F_2^n modulo dual(C2)."""
        from .gf2 import coset_reps

        return coset_reps(self.c2.dual(), LinearCode.full(self.n))

    def logical_x_rep(self, alpha_bits: int) -> BitVector:
        """alpha . gx for a packed logical bitstring."""
        return combine(list(self.gx), alpha_bits, self.n)

    def logical_z_rep(self, alpha_bits: int) -> BitVector:
        return combine(list(self.gz), alpha_bits, self.n)


def new_css(
    c1: LinearCode,
    c2: LinearCode,
    y: BitVector,
    gx_rows: list[BitVector] | None = None,
) -> CssCode:
    """Validated CSS code from the tower c2 inside c1 and character vector y.

    ``gx_rows`` overrides the canonical coset-representative basis of C1/C2
    (each row must lie in C1 and be independent modulo C2). The gz rows are
    always solved canonically: the lexicographically canonical vector in
    dual(C2) pairing as identity against gx.
    """
    n = c1.n
    if c2.n != n:
        raise ValueError("c1/c2 length mismatch")
    if y.n != n:
        raise ValueError("character vector length mismatch")
    if not c2.is_subcode_of(c1):
        raise ContainmentError("c2 is not contained in c1")
    k = c1.k - c2.k
    if gx_rows is None:
        gx = complement_basis(c2, c1)
    else:
        gx = list(gx_rows)
        if len(gx) != k:
            raise ValueError(f"expected {k} gx rows, got {len(gx)}")
        stacked = [r.bits for r in c2.gen.rows] + [r.bits for r in gx]
        if len(_rref_ints(stacked, n)[0]) != c2.k + k:
            raise ValueError("gx rows dependent modulo c2")
        for r in gx:
            if not c1.contains(r):
                raise ValueError(f"gx row {r} outside c1")
    gz = _solve_gz(c1, c2, gx)
    return CssCode(n=n, c1=c1, c2=c2, y=y, k=k, gx=tuple(gx), gz=tuple(gz))


def _solve_gz(c1: LinearCode, c2: LinearCode, gx: list[BitVector]) -> list[BitVector]:
    """Rows gamma_i in dual(C2) with gx_j . gamma_i = delta_ij.

    The solution set for each row is a coset of dual(C1); the canonical
    (lexicographically greatest bitstring) member is returned.
    """
    n = c1.n
    equations = [r.bits for r in c2.gen.rows] + [r.bits for r in gx]
    k = len(gx)
    gz = []
    for i in range(k):
        rhs = [0] * c2.k + [1 if j == i else 0 for j in range(k)]
        sol = solve_gf2(equations, n, rhs)
        if sol is None:
            raise AssertionError("gz system unsolvable for a valid tower")
        particular, kernel = sol
        gz.append(BitVector(n, lex_greatest_in_affine(particular, kernel)))
    return gz


def encode_basis(code: CssCode, alpha: BitVector, cap: int = DEFAULT_ENUM_CAP) -> SparseState:
    """Encoded computational basis state |alpha> as a sparse state.

    Supported on alpha.gx + C2 + y with equal positive amplitudes
    1/sqrt(|C2|).
    """
    width = max(code.k, 1)
    if alpha.n != width or (code.k == 0 and alpha.bits != 0):
        raise ValueError(f"alpha must be a length-{width} bitstring for k={code.k}")
    if code.k2 > cap:
        raise EnumerationCapError(f"|C2| = 2**{code.k2} exceeds cap")
    shift = code.logical_x_rep(alpha.bits if code.k else 0) ^ code.y
    amp = 1.0 / math.sqrt(1 << code.k2)
    amplitudes = {x ^ shift: complex(amp) for x in code.c2.codewords(cap)}
    return SparseState(code.n, amplitudes)


# --- stabilizer standard form ------------------------------------------------


@dataclass(frozen=True)
class StabilizerStandardForm:
    """Generator matrix [A 0; 0 B; C D]: maximal pure-X block A, maximal
    pure-Z block B, mixed rows (C|D)."""

    n: int
    a_rows: BitMatrix
    b_rows: BitMatrix
    c_rows: BitMatrix
    d_rows: BitMatrix

    @property
    def num_generators(self) -> int:
        return self.a_rows.nrows + self.b_rows.nrows + self.c_rows.nrows


def _symplectic_product(x1: int, z1: int, x2: int, z2: int) -> int:
    return ((x1 & z2).bit_count() + (x2 & z1).bit_count()) & 1


def standard_form(x_parts: BitMatrix, z_parts: BitMatrix) -> StabilizerStandardForm:
    """Standard form of a stabilizer generator list.

    Input rows are (X|Z) pairs; they must commute pairwise and be
    independent. Row operations maximize the pure-X and pure-Z blocks.
    """
    if x_parts.nrows != z_parts.nrows or x_parts.ncols != z_parts.ncols:
        raise ValueError("x/z blocks must have matching shapes")
    n = x_parts.ncols
    rows = [(x.bits, z.bits) for x, z in zip(x_parts.rows, z_parts.rows)]
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if _symplectic_product(*rows[i], *rows[j]):
                raise StandardFormError(f"generators {i} and {j} anticommute")
    # pack (x|z) into a 2n-bit int, z in the high bits
    stacked = [x | (z << n) for x, z in rows]
    reduced, _ = _rref_ints(stacked, 2 * n)
    if len(reduced) != len(rows):
        raise StandardFormError("dependent generators")

    z_mask = ((1 << n) - 1) << n
    x_mask = (1 << n) - 1

    def _pure_kernel(vectors: list[int], part_mask: int) -> list[int]:
        """Basis of span members vanishing on the masked half."""
        work = list(vectors)
        # eliminate using pivots inside the masked part only
        done: list[int] = []
        for col in range(2 * n):
            if not (1 << col) & part_mask:
                continue
            pivot = None
            for idx, r in enumerate(work):
                if (r >> col) & 1:
                    pivot = work.pop(idx)
                    break
            if pivot is None:
                continue
            work = [r ^ pivot if (r >> col) & 1 else r for r in work]
            done.append(pivot)
        kernel = [r for r in work if r]
        return _rref_ints(kernel, 2 * n)[0]

    pure_x = _pure_kernel(reduced, z_mask)  # rows with z-part zero
    pure_z = _pure_kernel(reduced, x_mask)  # rows with x-part zero
    # extend pure blocks to a basis of the full span
    mixed: list[int] = []
    for r in reduced:
        v = r
        for row in pure_x + pure_z + mixed:
            pivot = row & -row
            if v & pivot:
                v ^= row
        if v:
            mixed.append(v)
    mixed = _rref_ints(mixed, 2 * n)[0]

    def _vec(bits: int, lo: bool) -> BitVector:
        return BitVector(n, (bits & x_mask) if lo else (bits >> n))

    return StabilizerStandardForm(
        n=n,
        a_rows=BitMatrix(n, tuple(_vec(r, True) for r in pure_x)),
        b_rows=BitMatrix(n, tuple(_vec(r, False) for r in pure_z)),
        c_rows=BitMatrix(n, tuple(_vec(r, True) for r in mixed)),
        d_rows=BitMatrix(n, tuple(_vec(r, False) for r in mixed)),
    )


def tower_from_standard_form(s: StabilizerStandardForm) -> tuple[LinearCode, LinearCode]:
    """Replacement classical tower: (span(A, C), dual(span(B)))."""
    sub = LinearCode.from_gen_rows(s.n, list(s.a_rows.rows) + list(s.c_rows.rows))
    sup = LinearCode.from_gen_rows(s.n, list(s.b_rows.rows)).dual()
    if not sub.is_subcode_of(sup):
        raise AssertionError("standard-form tower violates containment")
    return sub, sup


def css_from_standard_form(s: StabilizerStandardForm) -> CssCode:
    """CSS-style model of a general stabilizer code via the replacement tower."""
    sub, sup = tower_from_standard_form(s)
    return new_css(sup, sub, BitVector.zeros(s.n))


# --- fault tolerance and error sets ------------------------------------------


def ft_local_check(code: CssCode, support: set[int] | list[int] | tuple[int, ...]) -> bool:
    """True iff puncturing the X-stabilizer generators on ``support``
    (1-based coordinates) leaves full rank, i.e. no nonzero X-stabilizer is
    confined to the support."""
    supp = set(support)
    for c in supp:
        if not 1 <= c <= code.n:
            raise ValueError(f"coordinate {c} outside 1..{code.n}")
    keep = [c for c in range(1, code.n + 1) if c not in supp]
    if not keep:
        return code.k2 == 0
    punctured = [r.restrict(keep) for r in code.c2.gen.rows]
    if not punctured:
        return True
    return BitMatrix(len(keep), tuple(punctured)).rank() == code.k2


def undetectable_z_errors_bounded(code: CssCode, w_max: int) -> list[BitVector]:
    """Z-error patterns of weight <= w_max with trivial X-syndrome but
    nontrivial logical action, i.e. vectors in dual(C2) \\ dual(C1)."""
    if w_max > code.n:
        raise ValueError("w_max exceeds block length")
    return bounded_codewords(code.c2.dual(), code.c1.dual(), w_max)


def distance_bounds(code: CssCode, w_max: int) -> dict[str, dict]:
    """Bounded-search report for d_X (dual(C2) \\ dual(C1)) and d_Z (C1 \\ C2).

    Each entry is exact when the search found a word, else the lower bound
    w_max + 1.
    """
    dx = min_weight_bounded(code.c2.dual(), code.c1.dual(), w_max)
    dz = min_weight_bounded(code.c1, code.c2, w_max)

    def _entry(v):
        if v is None:
            return {"lower_bound": w_max + 1, "exact": False}
        return {"value": v, "exact": True}

    report = {"d_x": _entry(dx), "d_z": _entry(dz)}
    found = [v for v in (dx, dz) if v is not None]
    if found:
        # the unfound side, if any, exceeds w_max and cannot lower the min
        report["d"] = {"value": min(found), "exact": True}
    else:
        report["d"] = {"lower_bound": w_max + 1, "exact": False}
    return report


# --- JSON ---------------------------------------------------------------------


def code_to_json(code: CssCode) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "c1_rows": code.c1.gen.to_strings(),
        "c2_rows": code.c2.gen.to_strings(),
        "y": str(code.y),
        "gx_rows": [str(r) for r in code.gx],
        "gz_rows": [str(r) for r in code.gz],
    }


def code_from_json(obj: dict) -> CssCode:
    n = int(obj["n"])
    c1 = LinearCode.from_gen_rows(n, obj["c1_rows"])
    c2 = LinearCode.from_gen_rows(n, obj["c2_rows"])
    y = BitVector.from_string(obj["y"]) if obj.get("y") else BitVector.zeros(n)
    gx_rows = None
    if obj.get("gx_rows"):
        gx_rows = [BitVector.from_string(r) for r in obj["gx_rows"]]
    return new_css(c1, c2, y, gx_rows=gx_rows)
