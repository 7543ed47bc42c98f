"""Diagonal physical gates.

A dyadic diagonal gate at level L has entries d_u = exp(i*pi*t(u)/2**(L-1))
with t(u) in Z_{2**L}, so L=1 covers Z/CZ/CCZ, L=2 the phase gates and L=3
the T family. Four interchangeable representations are provided: a full
exponent table, a weight rule t(u) = c*weight(u), a product of local
factors, and a coset rule defined only on a declared set of bitstrings.
Symbolic gates carry formal per-qubit angles for coherent-noise analysis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .cyclotomic import Cyclotomic
from .errors import GateDomainError
from .gf2 import BitVector

DEFAULT_TABLE_CAP = 16


class DiagonalGate:
    """Common interface: ``n`` qubits, ``level`` L, exact ``entry(u)``."""

    n: int
    level: int

    def entry(self, u: BitVector) -> int:
        raise NotImplementedError

    def entries_table(self, cap: int = DEFAULT_TABLE_CAP) -> dict[BitVector, int]:
        """Materialize the full exponent table (2**n entries)."""
        if self.n > cap:
            raise GateDomainError(f"table for n={self.n} exceeds cap {cap}")
        return {
            BitVector(self.n, u): self.entry(BitVector(self.n, u))
            for u in range(1 << self.n)
        }

    def entry_complex(self, u: BitVector) -> complex:
        return Cyclotomic.root_power(self.level, self.entry(u)).to_complex()

    def _check(self, u: BitVector) -> None:
        if u.n != self.n:
            raise ValueError(f"length mismatch: {u.n} != {self.n}")


@dataclass(frozen=True)
class TableGate(DiagonalGate):
    """Exponent table over all of F_2^n."""

    n: int
    level: int
    table: Mapping[BitVector, int]

    def entry(self, u: BitVector) -> int:
        self._check(u)
        try:
            return self.table[u] % (1 << self.level)
        except KeyError:
            raise GateDomainError(f"no entry for {u}") from None


@dataclass(frozen=True)
class WeightRuleGate(DiagonalGate):
    """t(u) = c * weight(u) mod 2**level; transversal single-qubit rotations."""

    n: int
    level: int
    c: int

    def entry(self, u: BitVector) -> int:
        self._check(u)
        return (self.c * u.weight) % (1 << self.level)


@dataclass(frozen=True)
class Factor:
    """A local diagonal factor on a fixed support of 1-based coordinates.

    ``table`` maps the restriction of u to the support (a BitVector of
    length len(support)) to an exponent; missing restrictions mean 0.
    """

    support: tuple[int, ...]
    level: int
    table: Mapping[BitVector, int]

    def local_exponent(self, u: BitVector) -> int:
        r = u.restrict(self.support)
        return self.table.get(r, 0) % (1 << self.level)


@dataclass(frozen=True)
class FactorProductGate(DiagonalGate):
    """Product of local factors; the common level is the max factor level."""

    n: int
    factors: tuple[Factor, ...]
    level: int = field(init=False)

    def __post_init__(self) -> None:
        lvl = max((f.level for f in self.factors), default=1)
        object.__setattr__(self, "level", lvl)
        for f in self.factors:
            if any(not 1 <= c <= self.n for c in f.support):
                raise ValueError(f"factor support {f.support} outside 1..{self.n}")
            if len(set(f.support)) != len(f.support):
                raise ValueError("repeated coordinate in factor support")
            for key in f.table:
                if key.n != len(f.support):
                    raise ValueError("factor table key has wrong length")

    def entry(self, u: BitVector) -> int:
        self._check(u)
        total = 0
        for f in self.factors:
            total += f.local_exponent(u) << (self.level - f.level)
        return total % (1 << self.level)


@dataclass(frozen=True)
class CosetRuleGate(DiagonalGate):
    """Exponents declared only on a fixed set of bitstrings.

    Entries outside the declared domain are unconstrained and may not be
    queried.
    """

    n: int
    level: int
    entries: Mapping[BitVector, int]

    def entry(self, u: BitVector) -> int:
        self._check(u)
        try:
            return self.entries[u] % (1 << self.level)
        except KeyError:
            raise GateDomainError(f"{u} outside the declared domain") from None

    def domain(self) -> frozenset[BitVector]:
        return frozenset(self.entries)


def identity_gate(n: int) -> WeightRuleGate:
    return WeightRuleGate(n, 1, 0)


# Local factor tables for the usual named gates, keyed by the exponent
# convention d_u = exp(i*pi*t/2**(L-1)).
_LOCAL = {
    "Z": (1, {"1": 1}),
    "P": (2, {"1": 1}),
    "PDG": (2, {"1": 3}),
    "T": (3, {"1": 1}),
    "TDG": (3, {"1": 7}),
    "CZ": (1, {"11": 1}),
    "CCZ": (1, {"111": 1}),
}


def named_factor(name: str, support: Iterable[int]) -> Factor:
    """Factor for a named local gate (Z, P, PDG, T, TDG, CZ, CCZ)."""
    try:
        level, table = _LOCAL[name.upper()]
    except KeyError:
        raise ValueError(f"unknown local gate {name!r}") from None
    supp = tuple(support)
    tbl = {BitVector.from_string(k): v for k, v in table.items()}
    arity = next(iter(tbl)).n
    if len(supp) != arity:
        raise ValueError(f"{name} acts on {arity} qubit(s), got support {supp}")
    return Factor(supp, level, tbl)


def from_factors(n: int, factors: Iterable[Factor]) -> FactorProductGate:
    return FactorProductGate(n, tuple(factors))


def transversal(n: int, name: str) -> WeightRuleGate:
    """Transversal application of a named single-qubit diagonal gate."""
    level, table = _LOCAL[name.upper()]
    key = BitVector.from_string("1")
    local = {BitVector.from_string(k): v for k, v in table.items()}
    if key not in local or any(k.n != 1 for k in local):
        raise ValueError(f"{name} is not single-qubit")
    return WeightRuleGate(n, level, local[key])


def _as_factor_list(g: DiagonalGate, cap: int) -> list[Factor]:
    if isinstance(g, FactorProductGate):
        return list(g.factors)
    if isinstance(g, WeightRuleGate):
        one = BitVector.from_string("1")
        return [Factor((i,), g.level, {one: g.c}) for i in range(1, g.n + 1)]
    if isinstance(g, TableGate):
        if g.n > cap:
            raise GateDomainError("table gate too wide to recompose")
        full = tuple(range(1, g.n + 1))
        return [Factor(full, g.level, dict(g.table))]
    raise GateDomainError(f"cannot convert {type(g).__name__} to factors")


def compose(g1: DiagonalGate, g2: DiagonalGate, cap: int = DEFAULT_TABLE_CAP) -> DiagonalGate:
    """Pointwise product: exponents add at the common level."""
    if g1.n != g2.n:
        raise ValueError("qubit counts differ")
    level = max(g1.level, g2.level)
    if isinstance(g1, WeightRuleGate) and isinstance(g2, WeightRuleGate):
        c = (g1.c << (level - g1.level)) + (g2.c << (level - g2.level))
        return WeightRuleGate(g1.n, level, c % (1 << level))
    if isinstance(g1, CosetRuleGate) or isinstance(g2, CosetRuleGate):
        if isinstance(g1, CosetRuleGate) and isinstance(g2, CosetRuleGate):
            if g1.domain() != g2.domain():
                raise GateDomainError("coset-rule domains differ")
            dom = g1.domain()
        else:
            dom = (g1 if isinstance(g1, CosetRuleGate) else g2).domain()
        entries = {
            u: (g1.entry(u) << (level - g1.level)) + (g2.entry(u) << (level - g2.level))
            for u in dom
        }
        return CosetRuleGate(g1.n, level, {u: e % (1 << level) for u, e in entries.items()})
    return FactorProductGate(g1.n, tuple(_as_factor_list(g1, cap) + _as_factor_list(g2, cap)))


def inverse(g: DiagonalGate, cap: int = DEFAULT_TABLE_CAP) -> DiagonalGate:
    """Pointwise inverse (exponent negation)."""
    m = 1 << g.level
    if isinstance(g, WeightRuleGate):
        return WeightRuleGate(g.n, g.level, (-g.c) % m)
    if isinstance(g, TableGate):
        return TableGate(g.n, g.level, {u: (-e) % m for u, e in g.table.items()})
    if isinstance(g, CosetRuleGate):
        return CosetRuleGate(g.n, g.level, {u: (-e) % m for u, e in g.entries.items()})
    factors = [
        Factor(f.support, f.level, {k: (-v) % (1 << f.level) for k, v in f.table.items()})
        for f in _as_factor_list(g, cap)
    ]
    return FactorProductGate(g.n, tuple(factors))


def pauli_coefficients(g: DiagonalGate, cap: int = DEFAULT_TABLE_CAP) -> dict[BitVector, Cyclotomic]:
    """Exact Pauli-basis coefficients of the diagonal.

    f(v) = 2**-n * sum_u (-1)**(u.v) d_u, computed by an integer fast
    Walsh-Hadamard transform on the zeta-coefficient vectors.
    """
    if g.n > cap:
        raise GateDomainError(f"n={g.n} exceeds transform cap {cap}")
    n, level = g.n, g.level
    half = 1 << (level - 1)
    size = 1 << n
    # rows[u] = integer coefficient vector of d_u over the zeta basis
    rows = [[0] * half for _ in range(size)]
    for u in range(size):
        t = g.entry(BitVector(n, u))
        if t < half:
            rows[u][t] = 1
        else:
            rows[u][t - half] = -1
    stride = 1
    while stride < size:
        for start in range(0, size, stride * 2):
            for i in range(start, start + stride):
                a, b = rows[i], rows[i + stride]
                rows[i] = [x + y for x, y in zip(a, b)]
                rows[i + stride] = [x - y for x, y in zip(a, b)]
        stride *= 2
    return {
        BitVector(n, v): Cyclotomic.make(level, rows[v], n)
        for v in range(size)
        if any(rows[v])
    }


def inverse_pauli_transform(
    n: int, level: int, coeffs: Mapping[BitVector, Cyclotomic]
) -> dict[BitVector, Cyclotomic]:
    """Recover the diagonal from Pauli coefficients: d_u = sum_v (-1)**(uv) f(v)."""
    out = {}
    for u in range(1 << n):
        acc = Cyclotomic.zero()
        for v, f in coeffs.items():
            term = -f if (u & v.bits).bit_count() & 1 else f
            acc = acc + term
        out[BitVector(n, u)] = acc
    return out


# --- symbolic phase gates ---------------------------------------------------


def _canon(form: Mapping[str, Fraction]) -> tuple[tuple[str, Fraction], ...]:
    return tuple(sorted((s, c) for s, c in form.items() if c != 0))


@dataclass(frozen=True)
class LinearForm:
    """Rational linear combination of named angle symbols."""

    terms: tuple[tuple[str, Fraction], ...]

    @classmethod
    def make(cls, mapping: Mapping[str, Fraction | int]) -> "LinearForm":
        return cls(_canon({s: Fraction(c) for s, c in mapping.items()}))

    @classmethod
    def symbol(cls, name: str) -> "LinearForm":
        return cls.make({name: 1})

    @classmethod
    def zero(cls) -> "LinearForm":
        return cls(())

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.terms)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        d = self.as_dict()
        for s, c in other.terms:
            d[s] = d.get(s, Fraction(0)) + c
        return LinearForm(_canon(d))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        d = self.as_dict()
        for s, c in other.terms:
            d[s] = d.get(s, Fraction(0)) - c
        return LinearForm(_canon(d))

    def scale(self, f: Fraction | int) -> "LinearForm":
        f = Fraction(f)
        return LinearForm(_canon({s: c * f for s, c in self.terms}))

    def is_zero(self) -> bool:
        return not self.terms

    def reduce(self, constraints: "list[LinearForm]") -> "LinearForm":
        """Normal form modulo constraint forms (each constraint = 0).

        Constraints are triangularized by eliminating their alphabetically
        last symbol, so base angle names survive substitution (t1 + t2 = t
        rewrites t2, leaving forms expressed in t and t1).
        """
        solved: dict[str, LinearForm] = {}
        for con in constraints:
            con = _substitute(con, solved)
            if con.is_zero():
                continue
            lead, coeff = con.terms[-1]
            rest = LinearForm(con.terms[:-1]).scale(Fraction(-1, 1) / coeff)
            solved[lead] = rest
            solved = {s: _substitute(f, {lead: rest}) for s, f in solved.items()}
        return _substitute(self, solved)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.terms:
            if c == 1:
                parts.append(f"+{s}")
            elif c == -1:
                parts.append(f"-{s}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{s}")
        return "".join(parts).lstrip("+")


def _substitute(form: LinearForm, solved: Mapping[str, LinearForm]) -> LinearForm:
    out: dict[str, Fraction] = {}
    for s, c in form.terms:
        if s in solved:
            for s2, c2 in solved[s].terms:
                out[s2] = out.get(s2, Fraction(0)) + c * c2
        else:
            out[s] = out.get(s, Fraction(0)) + c
    return LinearForm(_canon(out))


def parse_linear_form(text: str) -> LinearForm:
    """Parse forms like ``t1 + t2 - 2*t`` or equations ``t1+t2=t``.

    An equation parses to (lhs - rhs), i.e. a form that must vanish.
    """
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        return parse_linear_form(lhs) - parse_linear_form(rhs)
    form: dict[str, Fraction] = {}
    token = ""
    tokens = []
    for ch in text.replace(" ", ""):
        if ch in "+-":
            if token:
                tokens.append(token)
            tokens.append(ch)
            token = ""
        else:
            token += ch
    if token:
        tokens.append(token)
    sign = Fraction(1)
    for tok in tokens:
        if tok == "+":
            sign = Fraction(1)
        elif tok == "-":
            sign = Fraction(-1)
        else:
            if "*" in tok:
                coeff_s, sym = tok.split("*", 1)
                coeff = Fraction(coeff_s)
            else:
                coeff, sym = Fraction(1), tok
            if not sym:
                raise ValueError(f"bad term in {text!r}")
            form[sym] = form.get(sym, Fraction(0)) + sign * coeff
    return LinearForm.make(form)


@dataclass(frozen=True)
class SymbolicPhaseGate:
    """Diagonal gate with a formal angle on each qubit.

    The phase of |u> is the sum of the angles on supp(u); ``constraints``
    are linear forms required to vanish, applied when comparing entries.
    """

    n: int
    angles: tuple[LinearForm, ...]
    constraints: tuple[LinearForm, ...] = ()

    def __post_init__(self) -> None:
        if len(self.angles) != self.n:
            raise ValueError("need one angle per qubit")

    def symbolic_entry(self, u: BitVector) -> LinearForm:
        if u.n != self.n:
            raise ValueError("length mismatch")
        total = LinearForm.zero()
        for i in range(self.n):
            if u[i]:
                total = total + self.angles[i]
        return total.reduce(list(self.constraints))
