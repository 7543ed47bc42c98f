"""Exact arithmetic in Z[zeta] with power-of-two denominators.

``zeta`` is the primitive 2**L-th root of unity exp(i*pi / 2**(L-1)). A
number is stored as an integer coefficient vector over the basis
{zeta**j : 0 <= j < 2**(L-1)} divided by 2**log2_den; powers j >= 2**(L-1)
fold back with a sign because zeta**(2**(L-1)) = -1. The canonical form has
the smallest level embedding the value and no common factor of 2 between
the numerator vector and the denominator, so equality is plain field
comparison.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Cyclotomic:
    level: int
    coeffs: tuple[int, ...]
    log2_den: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if len(self.coeffs) != 1 << (self.level - 1):
            raise ValueError("coefficient vector has wrong length for level")
        if self.log2_den < 0:
            raise ValueError("denominator exponent must be >= 0")

    # -- constructors ------------------------------------------------------

    @classmethod
    def make(cls, level: int, coeffs: list[int], log2_den: int = 0) -> "Cyclotomic":
        return _normalize(level, list(coeffs), log2_den)

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, (0,), 0)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls(1, (1,), 0)

    @classmethod
    def integer(cls, v: int) -> "Cyclotomic":
        return cls(1, (v,), 0)

    @classmethod
    def dyadic(cls, numerator: int, log2_den: int) -> "Cyclotomic":
        return _normalize(1, [numerator], log2_den)

    @classmethod
    def root_power(cls, level: int, t: int) -> "Cyclotomic":
        """zeta_{2**level} ** t, exactly."""
        half = 1 << (level - 1)
        t %= 2 * half
        coeffs = [0] * half
        if t < half:
            coeffs[t] = 1
        else:
            coeffs[t - half] = -1
        return _normalize(level, coeffs, 0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Cyclotomic") -> "Cyclotomic":
        a, b, level, den = _align(self, other)
        return _normalize(level, [x + y for x, y in zip(a, b)], den)

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.level, tuple(-c for c in self.coeffs), self.log2_den)

    def __sub__(self, other: "Cyclotomic") -> "Cyclotomic":
        return self + (-other)

    def __mul__(self, other: "Cyclotomic") -> "Cyclotomic":
        a, b, level, den = _align(self, other)
        half = 1 << (level - 1)
        out = [0] * half
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                idx = i + j
                if idx < half:
                    out[idx] += x * y
                else:
                    out[idx - half] -= x * y
        return _normalize(level, out, 2 * den)

    def conj(self) -> "Cyclotomic":
        """Complex conjugate: zeta**j -> zeta**(-j)."""
        half = 1 << (self.level - 1)
        out = [0] * half
        out[0] = self.coeffs[0]
        for j in range(1, half):
            # zeta**(-j) = -zeta**(half - j)
            out[half - j] -= self.coeffs[j]
        return _normalize(self.level, out, self.log2_den)

    def norm_squared(self) -> "Cyclotomic":
        """|z|**2, exactly (via the conjugation action, not floats)."""
        return self * self.conj()

    # -- predicates & conversions ------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self == Cyclotomic.one()

    def to_complex(self) -> complex:
        half = 1 << (self.level - 1)
        total = 0j
        for j, c in enumerate(self.coeffs):
            if c:
                total += c * cmath.exp(1j * cmath.pi * j / half)
        return total / (1 << self.log2_den)

    def to_json(self) -> dict:
        return {"L": self.level, "num": list(self.coeffs), "log2den": self.log2_den}

    @classmethod
    def from_json(cls, obj: dict) -> "Cyclotomic":
        return cls.make(obj["L"], list(obj["num"]), obj["log2den"])

    def __str__(self) -> str:
        half = 1 << (self.level - 1)
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            base = "1" if j == 0 else (f"z{1 << self.level}" if j == 1 else f"z{1 << self.level}^{j}")
            if j == 0:
                terms.append(f"{c}")
            elif c == 1:
                terms.append(f"+{base}")
            elif c == -1:
                terms.append(f"-{base}")
            else:
                terms.append(f"{c:+d}*{base}")
        num = "".join(terms).lstrip("+") or "0"
        if self.log2_den:
            return f"({num})/{1 << self.log2_den}"
        return num


def _normalize(level: int, coeffs: list[int], log2_den: int) -> Cyclotomic:
    # strip common powers of two against the denominator
    while log2_den > 0 and all(c % 2 == 0 for c in coeffs):
        coeffs = [c // 2 for c in coeffs]
        log2_den -= 1
    # drop to the smallest level containing the value
    while level > 1 and all(c == 0 for c in coeffs[1::2]):
        coeffs = coeffs[0::2]
        level -= 1
    if all(c == 0 for c in coeffs):
        return Cyclotomic(1, (0,), 0)
    return Cyclotomic(level, tuple(coeffs), log2_den)


def _raise_level(coeffs: tuple[int, ...], levels_up: int) -> list[int]:
    out = list(coeffs)
    for _ in range(levels_up):
        wide = [0] * (2 * len(out))
        wide[0::2] = out
        out = wide
    return out


def _align(a: Cyclotomic, b: Cyclotomic) -> tuple[list[int], list[int], int, int]:
    level = max(a.level, b.level)
    den = max(a.log2_den, b.log2_den)
    ca = _raise_level(a.coeffs, level - a.level)
    cb = _raise_level(b.coeffs, level - b.level)
    ca = [c << (den - a.log2_den) for c in ca]
    cb = [c << (den - b.log2_den) for c in cb]
    return ca, cb, level, den


def cyclo_sum(values) -> Cyclotomic:
    total = Cyclotomic.zero()
    for v in values:
        total = total + v
    return total


def from_signed_buckets(level: int, buckets: list[int], log2_den: int) -> Cyclotomic:
    """Build sum(buckets[t] * zeta**t) / 2**log2_den at the given level.

    ``buckets`` has one signed count per exponent class in Z_{2**level}.
    """
    half = 1 << (level - 1)
    if len(buckets) != 2 * half:
        raise ValueError("bucket count must be 2**level")
    coeffs = [0] * half
    for t, c in enumerate(buckets):
        if not c:
            continue
        if t < half:
            coeffs[t] += c
        else:
            coeffs[t - half] -= c
    return _normalize(level, coeffs, log2_den)
