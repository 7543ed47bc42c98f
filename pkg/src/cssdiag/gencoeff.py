"""Generator-coefficient framework.

For a CSS code and a diagonal gate with entries d_u, the coefficient
pairing an X-syndrome mu with a Z-logical gamma is

    A(mu, gamma) = |C1|^-1 * sum_{u in C1} (-1)^((mu^gamma).u) d_{u^y},

computed exactly over the cyclotomic integers. Preservation of the
codespace is decided by the coset-constancy criterion (d constant on every
coset of C2 inside C1 + y); the norm criterion sum_gamma |A(0,gamma)|^2 = 1
is available as an independent exact cross-check. When the gate preserves
the code, the induced logical gate is diagonal with entries read off the
coset representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .codes import CssCode
from .cyclotomic import Cyclotomic, from_signed_buckets
from .errors import EnumerationCapError, NotPreservedError
from .gf2 import DEFAULT_ENUM_CAP, BitVector
from .gates import (
    CosetRuleGate,
    DiagonalGate,
    SymbolicPhaseGate,
    WeightRuleGate,
)


@dataclass(frozen=True)
class LogicalDiagonal:
    """Diagonal logical gate: exponent t(alpha) at the given level for each
    logical bitstring alpha (indexed by the packed integer)."""

    k: int
    level: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.exponents) != 1 << self.k:
            raise ValueError("need one exponent per logical bitstring")

    def exponent(self, alpha: BitVector) -> int:
        if alpha.n != max(self.k, 1):
            raise ValueError(f"alpha must have length {self.k}")
        return self.exponents[alpha.bits]

    def normalized(self) -> "LogicalDiagonal":
        """Reduce the level while every exponent stays even."""
        level, exps = self.level, list(self.exponents)
        while level > 1 and all(e % 2 == 0 for e in exps):
            exps = [e // 2 for e in exps]
            level -= 1
        return LogicalDiagonal(self.k, level, tuple(exps))

    def equivalent_to(self, other: "LogicalDiagonal") -> bool:
        return self.normalized() == other.normalized()

    def to_json(self) -> dict:
        return {
            "L": self.level,
            "table": {
                str(BitVector(max(self.k, 1), a)): e for a, e in enumerate(self.exponents)
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LogicalDiagonal":
        table = obj["table"]
        k = len(next(iter(table)))
        if len(table) != 1 << k:
            raise ValueError("logical table must cover all bitstrings")
        exps = [0] * len(table)
        for key, e in table.items():
            exps[BitVector.from_string(key).bits] = int(e)
        return cls(k, int(obj["L"]), tuple(exps))

    @classmethod
    def identity(cls, k: int) -> "LogicalDiagonal":
        return cls(k, 1, tuple([0] * (1 << k)))


@dataclass(frozen=True)
class GeneratorCoefficientMatrix:
    """Rows indexed by X-syndrome representatives, columns by Z-logical
    representatives (alpha . gz in packed-alpha order)."""

    mus: tuple[BitVector, ...]
    gammas: tuple[BitVector, ...]
    entries: tuple[tuple[Cyclotomic, ...], ...]

    def completeness_sum(self) -> Cyclotomic:
        total = Cyclotomic.zero()
        for row in self.entries:
            for a in row:
                total = total + a.norm_squared()
        return total

    def row(self, i: int) -> tuple[Cyclotomic, ...]:
        return self.entries[i]

    def to_json(self) -> dict:
        return {
            "mus": [str(m) for m in self.mus],
            "gammas": [str(g) for g in self.gammas],
            "entries": [[a.to_json() for a in row] for row in self.entries],
        }


def _c1_exponents(
    code: CssCode, gate: DiagonalGate, cap: int
) -> tuple[list[int], list[int]]:
    """Codewords of C1 (packed ints, Gray order) and gate exponents on u^y."""
    if code.k1 > cap:
        raise EnumerationCapError(f"dim(C1) = {code.k1} exceeds cap {cap}")
    words: list[int] = []
    exps: list[int] = []
    ybits = code.y.bits
    for u in code.c1.codewords(cap):
        words.append(u.bits)
        exps.append(gate.entry(BitVector(code.n, u.bits ^ ybits)))
    return words, exps


def generator_coeff(
    code: CssCode,
    gate: DiagonalGate,
    mu: BitVector,
    gamma: BitVector,
    cap: int = DEFAULT_ENUM_CAP,
) -> Cyclotomic:
    """Exact generator coefficient A(mu, gamma)."""
    mask = (mu ^ gamma).bits
    if isinstance(gate, WeightRuleGate) and code.y.is_zero():
        buckets = kernels.weightrule_buckets(
            code.c1.gen.row_ints(), code.n, 0, mask, gate.c, 1 << gate.level
        )
    else:
        words, exps = _c1_exponents(code, gate, cap)
        buckets = kernels.signed_buckets(words, exps, mask, 1 << gate.level)
    return from_signed_buckets(gate.level, buckets, code.k1)


def preserves(code: CssCode, gate: DiagonalGate, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Exact preservation decision via coset constancy: the gate fixes the
    codespace iff its exponent is constant on every coset of C2 inside
    C1 + y."""
    if code.k1 > cap:
        raise EnumerationCapError(f"dim(C1) = {code.k1} exceeds cap {cap}")
    if isinstance(gate, WeightRuleGate):
        m = 1 << gate.level
        gen_rows = code.c2.gen.row_ints()
        for alpha in range(1 << code.k):
            shift = code.logical_x_rep(alpha) ^ code.y
            hist = kernels.weight_hist(gen_rows, code.n, shift.bits)
            seen = {(gate.c * w) % m for w, cnt in enumerate(hist) if cnt}
            if len(seen) > 1:
                return False
        return True
    for alpha in range(1 << code.k):
        shift = code.logical_x_rep(alpha) ^ code.y
        first = None
        for x in code.c2.codewords(cap):
            e = gate.entry(x ^ shift)
            if first is None:
                first = e
            elif e != first:
                return False
    return True


def preserves_norm_test(code: CssCode, gate: DiagonalGate, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Independent exact criterion: sum_gamma |A(0, gamma)|^2 == 1."""
    zero = BitVector.zeros(code.n)
    total = Cyclotomic.zero()
    for alpha in range(1 << code.k):
        gamma = code.logical_z_rep(alpha)
        total = total + generator_coeff(code, gate, zero, gamma, cap).norm_squared()
    return total.is_one()


def induced_logical(code: CssCode, gate: DiagonalGate, cap: int = DEFAULT_ENUM_CAP) -> LogicalDiagonal:
    """Diagonal logical gate induced by a preserving physical gate:
    t(alpha) is the gate exponent on the coset representative alpha.gx + y."""
    if not preserves(code, gate, cap):
        raise NotPreservedError("gate does not preserve the codespace")
    exps = []
    for alpha in range(1 << code.k):
        rep = code.logical_x_rep(alpha) ^ code.y
        exps.append(gate.entry(rep))
    return LogicalDiagonal(code.k, gate.level, tuple(exps))


def logical_pauli_expansion(
    code: CssCode, gate: DiagonalGate, cap: int = DEFAULT_ENUM_CAP
) -> dict[BitVector, Cyclotomic]:
    """Pauli-basis coefficients of the induced logical gate: alpha maps to
    A(0, alpha.gz)."""
    zero = BitVector.zeros(code.n)
    width = max(code.k, 1)
    out = {}
    for alpha in range(1 << code.k):
        gamma = code.logical_z_rep(alpha)
        out[BitVector(width, alpha)] = generator_coeff(code, gate, zero, gamma, cap)
    return out


def is_logical_identity(
    code: CssCode,
    gate: DiagonalGate | SymbolicPhaseGate,
    cap: int = DEFAULT_ENUM_CAP,
) -> bool:
    """True iff the gate acts as the identity on the codespace: its entry is
    the same across all of C1 + y (exact exponent or reduced-form equality)."""
    if code.k1 > cap:
        raise EnumerationCapError(f"dim(C1) = {code.k1} exceeds cap {cap}")
    if isinstance(gate, SymbolicPhaseGate):
        first = None
        for u in code.c1.codewords(cap):
            form = gate.symbolic_entry(u ^ code.y)
            if first is None:
                first = form
            elif form != first:
                return False
        return True
    first = None
    for u in code.c1.codewords(cap):
        e = gate.entry(u ^ code.y)
        if first is None:
            first = e
        elif e != first:
            return False
    return True


def oblivious_coherent(code: CssCode, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff every word of C1 + y has the same Hamming weight, i.e. the
    code is oblivious to homogeneous coherent Z-rotation noise."""
    dist = code.c1.weight_distribution(shift=code.y, cap=cap)
    return len(dist) == 1


@dataclass(frozen=True)
class CosetConstraint:
    """One forced diagonal value: every entry on coset_rep + C2 must carry
    ``exponent`` (at ``level``). ``alpha`` is the logical bitstring the coset
    realizes."""

    alpha: BitVector
    coset_rep: BitVector
    exponent: int
    level: int

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "coset_rep": str(self.coset_rep),
            "exponent": self.exponent,
            "level": self.level,
        }


def physical_constraints_for_target(
    code: CssCode, target: LogicalDiagonal
) -> list[CosetConstraint]:
    """All constraints a diagonal physical gate must satisfy to induce
    ``target``: one forced exponent per coset of C2 in C1 + y. Entries
    outside C1 + y are unconstrained."""
    if target.k != code.k:
        raise ValueError(f"target has k={target.k}, code has k={code.k}")
    width = max(code.k, 1)
    out = []
    for alpha in range(1 << code.k):
        rep = code.logical_x_rep(alpha) ^ code.y
        out.append(
            CosetConstraint(
                alpha=BitVector(width, alpha),
                coset_rep=rep,
                exponent=target.exponents[alpha],
                level=target.level,
            )
        )
    return out


def gate_from_constraints(
    code: CssCode,
    constraints: list[CosetConstraint],
    cap: int = DEFAULT_ENUM_CAP,
) -> CosetRuleGate:
    """Coset-rule gate realizing the constraints on C1 + y (entries outside
    stay undeclared/unconstrained)."""
    if code.k1 > cap:
        raise EnumerationCapError(f"dim(C1) = {code.k1} exceeds cap {cap}")
    level = max(c.level for c in constraints)
    entries: dict[BitVector, int] = {}
    for con in constraints:
        e = con.exponent << (level - con.level)
        for x in code.c2.codewords(cap):
            entries[x ^ con.coset_rep] = e % (1 << level)
    return CosetRuleGate(code.n, level, entries)


def gc_matrix(code: CssCode, gate: DiagonalGate, cap: int = DEFAULT_ENUM_CAP) -> GeneratorCoefficientMatrix:
    """Full generator-coefficient matrix over canonical representatives."""
    if code.k1 > cap:
        raise EnumerationCapError(f"dim(C1) = {code.k1} exceeds cap {cap}")
    if code.k2 + code.k > cap:
        raise EnumerationCapError("matrix entry count exceeds cap")
    mus = tuple(code.x_syndrome_reps())
    gammas = tuple(code.logical_z_rep(a) for a in range(1 << code.k))
    use_weightrule = isinstance(gate, WeightRuleGate) and code.y.is_zero()
    if not use_weightrule:
        words, exps = _c1_exponents(code, gate, cap)
    gen_rows = code.c1.gen.row_ints()
    nbuckets = 1 << gate.level
    rows = []
    for mu in mus:
        row = []
        for gamma in gammas:
            mask = (mu ^ gamma).bits
            if use_weightrule:
                buckets = kernels.weightrule_buckets(
                    gen_rows, code.n, 0, mask, gate.c, nbuckets
                )
            else:
                buckets = kernels.signed_buckets(words, exps, mask, nbuckets)
            row.append(from_signed_buckets(gate.level, buckets, code.k1))
        rows.append(tuple(row))
    return GeneratorCoefficientMatrix(mus=mus, gammas=gammas, entries=tuple(rows))
