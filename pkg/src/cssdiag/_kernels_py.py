"""Pure-Python kernel implementations.

Python ints give word-parallel XOR and popcount for free, so these loops
stay usable at desk scale; the compiled twin in ``_fastkernels.pyx`` is
selected instead when built. Results must be bit-identical between the two.
"""

from __future__ import annotations


def weight_hist(gen_rows: list[int], nbits: int, shift: int) -> list[int]:
    hist = [0] * (nbits + 1)
    cur = shift
    hist[cur.bit_count()] += 1
    for i in range(1, 1 << len(gen_rows)):
        cur ^= gen_rows[(i & -i).bit_length() - 1]
        hist[cur.bit_count()] += 1
    return hist


def signed_buckets(codewords: list[int], exps: list[int], mask: int, nbuckets: int) -> list[int]:
    buckets = [0] * nbuckets
    for cw, e in zip(codewords, exps):
        if (cw & mask).bit_count() & 1:
            buckets[e] -= 1
        else:
            buckets[e] += 1
    return buckets


def weightrule_buckets(
    gen_rows: list[int], nbits: int, shift: int, mask: int, c: int, nbuckets: int
) -> list[int]:
    buckets = [0] * nbuckets
    cur = 0
    for i in range(1 << len(gen_rows)):
        if i:
            cur ^= gen_rows[(i & -i).bit_length() - 1]
        e = (c * (cur ^ shift).bit_count()) % nbuckets
        if (cur & mask).bit_count() & 1:
            buckets[e] -= 1
        else:
            buckets[e] += 1
    return buckets


def _passes(v: int, member_checks: list[int], nonmember_checks: list[int]) -> bool:
    for m in member_checks:
        if (v & m).bit_count() & 1:
            return False
    for e in nonmember_checks:
        if (v & e).bit_count() & 1:
            return True
    return False


def _weight_masks(nbits: int, w: int):
    """All nbits-wide masks of weight w in increasing numeric order
    (Gosper's hack)."""
    v = (1 << w) - 1
    limit = 1 << nbits
    while v < limit:
        yield v
        low = v & -v
        ripple = v + low
        v = ripple | (((v ^ ripple) >> 2) // low)


def bounded_min_weight(
    member_checks: list[int], nonmember_checks: list[int], nbits: int, w_max: int
) -> int:
    for w in range(1, w_max + 1):
        for v in _weight_masks(nbits, w):
            if _passes(v, member_checks, nonmember_checks):
                return w
    return 0


def bounded_collect(
    member_checks: list[int], nonmember_checks: list[int], nbits: int, w_max: int
) -> list[int]:
    out = []
    for w in range(1, w_max + 1):
        for v in _weight_masks(nbits, w):
            if _passes(v, member_checks, nonmember_checks):
                out.append(v)
    return out
