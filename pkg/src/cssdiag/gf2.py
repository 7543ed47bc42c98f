"""Bit-packed linear algebra over GF(2).

Vectors are stored as Python ints: bit ``i`` of the int is coordinate ``i+1``
of the vector, so the textual form ``"0110"`` (leftmost character =
coordinate 1) corresponds to the integer ``0b0110`` read right-to-left.
Row reduction scans coordinates left to right, and the canonical
representative of a coset is the lexicographically greatest bitstring in it
(ones pushed as far left as possible).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ContainmentError, EnumerationCapError
from . import kernels

#: Default cap on code dimension for full enumeration (2**24 codewords).
DEFAULT_ENUM_CAP = 24


@dataclass(frozen=True, slots=True)
class BitVector:
    """Fixed-length vector over GF(2), packed into an int."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"length must be >= 1, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits out of range for length {self.n}")

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {s!r}")
        return cls(len(s), int(s[::-1], 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        seq = list(bits)
        value = 0
        for i, b in enumerate(seq):
            if b:
                value |= 1 << i
        return cls(len(seq), value)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        """Build from 1-based coordinate indices."""
        value = 0
        for c in support:
            if not 1 <= c <= n:
                raise ValueError(f"coordinate {c} outside 1..{n}")
            value |= 1 << (c - 1)
        return cls(n, value)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")[::-1]

    def __getitem__(self, i: int) -> int:
        """0-based coordinate access."""
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check_len(other)
        return BitVector(self.n, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check_len(other)
        return BitVector(self.n, self.bits & other.bits)

    def dot(self, other: "BitVector") -> int:
        """GF(2) inner product."""
        self._check_len(other)
        return (self.bits & other.bits).bit_count() & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """1-based coordinates of the nonzero entries."""
        return tuple(i + 1 for i in range(self.n) if (self.bits >> i) & 1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def restrict(self, coords: Iterable[int]) -> "BitVector":
        """Subvector on the given 1-based coordinates, in the order given."""
        return BitVector.from_bits([(self.bits >> (c - 1)) & 1 for c in coords])

    def _check_len(self, other: "BitVector") -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """Rectangular matrix over GF(2) stored as a tuple of BitVector rows.

    ``ncols`` is explicit so that matrices with zero rows keep their width.
    """

    ncols: int
    rows: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        for r in self.rows:
            if r.n != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BitMatrix":
        vecs = tuple(BitVector.from_string(r) for r in rows)
        if not vecs:
            raise ValueError("cannot infer width from an empty list; use BitMatrix(ncols, ())")
        return cls(vecs[0].n, vecs)

    @classmethod
    def from_rows(cls, ncols: int, rows: Iterable[BitVector]) -> "BitMatrix":
        return cls(ncols, tuple(rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_ints(self) -> list[int]:
        return [r.bits for r in self.rows]

    def to_strings(self) -> list[str]:
        return [str(r) for r in self.rows]

    def rref(self) -> tuple["BitMatrix", int]:
        """Reduced row-echelon form and rank; zero rows are dropped."""
        reduced, pivots = _rref_ints(self.row_ints(), self.ncols)
        rows = tuple(BitVector(self.ncols, r) for r in reduced)
        return BitMatrix(self.ncols, rows), len(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            cols.append(BitVector.from_bits([r[j] for r in self.rows]))
        width = len(self.rows)
        if width == 0:
            raise ValueError("cannot transpose a matrix with no rows")
        return BitMatrix(width, tuple(cols))


def _rref_ints(rows: list[int], n: int) -> tuple[list[int], list[int]]:
    """RREF over int-packed rows, pivoting on coordinate 1 first.

    Returns (nonzero reduced rows ordered by pivot, pivot bit positions).
    """
    work = [r for r in rows if r]
    reduced: list[int] = []
    pivots: list[int] = []
    for col in range(n):
        mask = 1 << col
        pivot_row = None
        for idx, r in enumerate(work):
            if r & mask:
                pivot_row = work.pop(idx)
                break
        if pivot_row is None:
            continue
        for i, r in enumerate(reduced):
            if r & mask:
                reduced[i] = r ^ pivot_row
        work = [r ^ pivot_row if r & mask else r for r in work]
        work = [r for r in work if r]
        reduced.append(pivot_row)
        pivots.append(col)
        if not work:
            break
    return reduced, pivots


def solve_gf2(equations: list[int], n: int, rhs: list[int]) -> tuple[int, list[int]] | None:
    """Solve ``eq_i . x = rhs_i`` over GF(2) for x of length n.

    Returns (particular solution, kernel basis in RREF) or None if
    inconsistent. Each equation is an int-packed row; rhs entries are 0/1.
    """
    if len(equations) != len(rhs):
        raise ValueError("equations/rhs length mismatch")
    # Augment: bit n carries the right-hand side (included in the reduction
    # so an inconsistent 0...0|1 row surfaces as a pivot at column n).
    aug = [eq | (b << n) for eq, b in zip(equations, rhs)]
    reduced, pivots = _rref_ints(aug, n + 1)
    left_mask = (1 << n) - 1
    for r in reduced:
        if r & left_mask == 0 and r >> n:
            return None
    pivot_rows = {p: r for p, r in zip(pivots, reduced) if p < n}
    particular = 0
    for p, r in pivot_rows.items():
        if r >> n:
            particular |= 1 << p
    free_cols = [c for c in range(n) if c not in pivot_rows]
    kernel = []
    for f in free_cols:
        v = 1 << f
        for p, r in pivot_rows.items():
            if (r >> f) & 1:
                v |= 1 << p
        kernel.append(v)
    kernel_rref, _ = _rref_ints(kernel, n)
    return particular, kernel_rref


def lex_greatest_in_affine(x0: int, kernel_rref: list[int]) -> int:
    """Lexicographically greatest bitstring (coordinate 1 read first) in
    the affine space x0 + span(kernel_rref)."""
    x = x0
    for row in kernel_rref:
        pivot = row & -row
        if not x & pivot:
            x ^= row
    return x


@dataclass(frozen=True, slots=True)
class LinearCode:
    """[n, k] binary linear code with canonical RREF generator matrix.

    ``check`` spans the dual code, so membership is ``check @ v == 0``.
    Equality and hashing use the canonical generator rows.
    """

    n: int
    k: int
    gen: BitMatrix
    check: BitMatrix

    @classmethod
    def from_gen_rows(cls, n: int, rows: Iterable[BitVector | str | int]) -> "LinearCode":
        ints = []
        for r in rows:
            if isinstance(r, str):
                r = BitVector.from_string(r)
            if isinstance(r, BitVector):
                if r.n != n:
                    raise ValueError("row length mismatch")
                ints.append(r.bits)
            else:
                ints.append(int(r))
        reduced, pivots = _rref_ints(ints, n)
        gen = BitMatrix(n, tuple(BitVector(n, r) for r in reduced))
        check = _dual_basis(reduced, pivots, n)
        return cls(n, len(reduced), gen, check)

    @classmethod
    def zero(cls, n: int) -> "LinearCode":
        return cls.from_gen_rows(n, [])

    @classmethod
    def full(cls, n: int) -> "LinearCode":
        return cls.from_gen_rows(n, [BitVector(n, 1 << i) for i in range(n)])

    def dual(self) -> "LinearCode":
        return LinearCode(self.n, self.n - self.k, self.check, self.gen)

    def contains(self, v: BitVector) -> bool:
        if v.n != self.n:
            raise ValueError(f"length mismatch: {v.n} != {self.n}")
        return all((v.bits & c.bits).bit_count() & 1 == 0 for c in self.check.rows)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        if self.n != other.n:
            return False
        return all(other.contains(g) for g in self.gen.rows)

    def codewords(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[BitVector]:
        """All 2**k codewords in Gray-code order (deterministic, starts at 0)."""
        if self.k > cap:
            raise EnumerationCapError(f"dimension {self.k} exceeds cap {cap}")
        gens = self.gen.row_ints()
        cur = 0
        yield BitVector(self.n, cur)
        for i in range(1, 1 << self.k):
            cur ^= gens[(i & -i).bit_length() - 1]
            yield BitVector(self.n, cur)

    def weight_distribution(
        self, shift: BitVector | None = None, cap: int = DEFAULT_ENUM_CAP
    ) -> dict[int, int]:
        """Multiplicity of each Hamming weight of ``u + shift``, u in the code."""
        if self.k > cap:
            raise EnumerationCapError(f"dimension {self.k} exceeds cap {cap}")
        s = 0
        if shift is not None:
            if shift.n != self.n:
                raise ValueError("shift length mismatch")
            s = shift.bits
        hist = kernels.weight_hist(self.gen.row_ints(), self.n, s)
        return {w: m for w, m in enumerate(hist) if m}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and self.gen.rows == other.gen.rows

    def __hash__(self) -> int:
        return hash((self.n, tuple(r.bits for r in self.gen.rows)))


def _dual_basis(reduced: list[int], pivots: list[int], n: int) -> BitMatrix:
    """Dual code basis from an RREF generator: one row per free coordinate."""
    pivot_set = set(pivots)
    rows = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, g in zip(pivots, reduced):
            if (g >> f) & 1:
                v |= 1 << p
        rows.append(v)
    dual_rref, _ = _rref_ints(rows, n)
    return BitMatrix(n, tuple(BitVector(n, r) for r in dual_rref))


def coset_reduce(v: BitVector, code: LinearCode) -> BitVector:
    """Canonical representative of ``v + code``: the lexicographically
    greatest bitstring in the coset."""
    if v.n != code.n:
        raise ValueError("length mismatch")
    return BitVector(v.n, lex_greatest_in_affine(v.bits, code.gen.row_ints()))


def complement_basis(sub: LinearCode, sup: LinearCode) -> list[BitVector]:
    """Basis of sup/sub as canonical coset representatives.

    Each row is the lex-greatest member of its coset; rows are ordered by
    the RREF pivot positions of the quotient.
    """
    if not sub.is_subcode_of(sup):
        raise ContainmentError("sub is not contained in super")
    sub_rows = sub.gen.row_ints()
    quotient_rows: list[int] = []
    for g in sup.gen.rows:
        v = g.bits
        # reduce modulo sub and modulo the quotient rows collected so far
        for row in sub_rows + quotient_rows:
            pivot = row & -row
            if v & pivot:
                v ^= row
        if v:
            quotient_rows.append(v)
    quotient_rref, _ = _rref_ints(quotient_rows, sup.n)
    return [coset_reduce(BitVector(sup.n, r), sub) for r in quotient_rref]


def coset_reps(sub: LinearCode, sup: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> list[BitVector]:
    """One representative per coset of sub in sup, 2**(k_sup - k_sub) in all.

    The first representative is 0; representative i is the combination of
    the complement basis selected by the bits of i.
    """
    basis = complement_basis(sub, sup)
    dk = len(basis)
    if dk > cap:
        raise EnumerationCapError(f"quotient dimension {dk} exceeds cap {cap}")
    reps = []
    for i in range(1 << dk):
        v = 0
        for j in range(dk):
            if (i >> j) & 1:
                v ^= basis[j].bits
        reps.append(BitVector(sup.n, v))
    return reps


def combine(basis: list[BitVector], alpha_bits: int, n: int) -> BitVector:
    """alpha . basis over GF(2), alpha packed with bit j selecting row j."""
    v = 0
    for j, row in enumerate(basis):
        if (alpha_bits >> j) & 1:
            v ^= row.bits
    return BitVector(n, v)


def min_weight_bounded(
    c: LinearCode, exclude: LinearCode, w_max: int
) -> int | None:
    """Minimum weight over ``c \\ exclude`` if it is <= w_max, else None.

    Searches candidate vectors by increasing weight and tests membership, so
    it works when dim(c) is large but the sought weight is small.
    """
    if not exclude.is_subcode_of(c):
        raise ContainmentError("exclude is not contained in c")
    if w_max > c.n:
        raise ValueError("w_max exceeds block length")
    if c.n <= 64:
        w = kernels.bounded_min_weight(
            c.check.row_ints(), exclude.check.row_ints(), c.n, w_max
        )
        return w if w else None
    for w in range(1, w_max + 1):
        for supp in combinations(range(c.n), w):
            v = BitVector.from_support(c.n, [i + 1 for i in supp])
            if c.contains(v) and not exclude.contains(v):
                return w
    return None


def bounded_codewords(
    c: LinearCode, exclude: LinearCode, w_max: int
) -> list[BitVector]:
    """All vectors of weight <= w_max in ``c \\ exclude``, sorted by
    (weight, bitstring)."""
    if not exclude.is_subcode_of(c):
        raise ContainmentError("exclude is not contained in c")
    if c.n <= 64:
        found = kernels.bounded_collect(
            c.check.row_ints(), exclude.check.row_ints(), c.n, w_max
        )
        vecs = [BitVector(c.n, v) for v in found]
    else:
        vecs = []
        for w in range(1, w_max + 1):
            for supp in combinations(range(c.n), w):
                v = BitVector.from_support(c.n, [i + 1 for i in supp])
                if c.contains(v) and not exclude.contains(v):
                    vecs.append(v)
    return sorted(vecs, key=lambda v: (v.weight, str(v)))
