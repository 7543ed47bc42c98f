import json
import random
from math import comb
from pathlib import Path

import pytest

from cssdiag.codes import CssCode, new_css
from cssdiag.gf2 import BitVector, LinearCode

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name: str) -> dict:
    with open(FIXTURES / f"{name}.json") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


def krawtchouk(n: int, j: int, i: int) -> int:
    return sum((-1) ** l * comb(i, l) * comb(n - i, j - l) for l in range(j + 1))


def macwilliams_transform(n: int, dist: dict[int, int]) -> dict[int, int]:
    """Weight distribution of the dual from the primal distribution."""
    size = sum(dist.values())
    out = {}
    for j in range(n + 1):
        total = sum(mult * krawtchouk(n, j, i) for i, mult in dist.items())
        q, r = divmod(total, size)
        assert r == 0, "MacWilliams transform must be integral"
        if q:
            out[j] = q
    return out


def random_linear_code(rng: random.Random, n: int, max_dim: int | None = None) -> LinearCode:
    max_dim = n if max_dim is None else min(max_dim, n)
    nrows = rng.randint(0, max_dim)
    return LinearCode.from_gen_rows(n, [rng.getrandbits(n) for _ in range(nrows)])


def random_code_tower(
    rng: random.Random, n: int, max_k1: int | None = None
) -> tuple[LinearCode, LinearCode]:
    """Random (c1, c2) with c2 a subcode of c1."""
    c1 = random_linear_code(rng, n, max_k1)
    if c1.k == 0:
        return c1, c1
    sub_rows = []
    k2 = rng.randint(0, c1.k)
    for _ in range(k2):
        combo = rng.getrandbits(c1.k)
        v = 0
        for j in range(c1.k):
            if (combo >> j) & 1:
                v ^= c1.gen.rows[j].bits
        sub_rows.append(v)
    c2 = LinearCode.from_gen_rows(n, sub_rows)
    return c1, c2


def random_css_code(rng: random.Random, n: int, max_k1: int | None = None) -> CssCode:
    c1, c2 = random_code_tower(rng, n, max_k1)
    y = BitVector(n, rng.getrandbits(n))
    return new_css(c1, c2, y)
