"""Hot-loop kernels with a compiled fast path.

The compiled extension (``cssdiag._fastkernels``, built from Cython) is
selected at import time when available; otherwise the pure-Python
implementations in ``cssdiag._kernels_py`` are used. Both expose the same
int-based API and produce identical results.
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _fastkernels as _fast

    BACKEND = "compiled"
except ImportError:
    _fast = None
    BACKEND = "python"

_MAX_WORD_BITS = 64


def weight_hist(gen_rows: list[int], nbits: int, shift: int) -> list[int]:
    """Histogram of Hamming weights of ``u ^ shift`` over span(gen_rows)."""
    if _fast is not None and nbits <= _MAX_WORD_BITS:
        return _fast.weight_hist(gen_rows, nbits, shift).tolist()
    return _kernels_py.weight_hist(gen_rows, nbits, shift)


def signed_buckets(codewords: list[int], exps: list[int], mask: int, nbuckets: int) -> list[int]:
    """buckets[exps[i]] += (-1)**parity(codewords[i] & mask)."""
    word_limit = 1 << _MAX_WORD_BITS
    if _fast is not None and mask < word_limit and max(codewords, default=0) < word_limit:
        return _fast.signed_buckets(codewords, exps, mask, nbuckets).tolist()
    return _kernels_py.signed_buckets(codewords, exps, mask, nbuckets)


def weightrule_buckets(
    gen_rows: list[int], nbits: int, shift: int, mask: int, c: int, nbuckets: int
) -> list[int]:
    """Signed histogram for weight-rule gates, without materializing the code.

    For every u in span(gen_rows):
    ``buckets[(c * weight(u ^ shift)) % nbuckets] += (-1)**parity(u & mask)``.
    """
    if _fast is not None and nbits <= _MAX_WORD_BITS:
        return _fast.weightrule_buckets(gen_rows, nbits, shift, mask, c, nbuckets).tolist()
    return _kernels_py.weightrule_buckets(gen_rows, nbits, shift, mask, c, nbuckets)


def bounded_min_weight(
    member_checks: list[int], nonmember_checks: list[int], nbits: int, w_max: int
) -> int:
    """Least weight w <= w_max of a vector orthogonal to every member check
    but not orthogonal to every nonmember check; 0 if none exists."""
    if _fast is not None and nbits <= _MAX_WORD_BITS:
        return _fast.bounded_min_weight(member_checks, nonmember_checks, nbits, w_max)
    return _kernels_py.bounded_min_weight(member_checks, nonmember_checks, nbits, w_max)


def bounded_collect(
    member_checks: list[int], nonmember_checks: list[int], nbits: int, w_max: int
) -> list[int]:
    """All weight <= w_max vectors passing the bounded_min_weight test,
    ordered by (weight, numeric value)."""
    if _fast is not None and nbits <= _MAX_WORD_BITS:
        return _fast.bounded_collect(member_checks, nonmember_checks, nbits, w_max)
    return _kernels_py.bounded_collect(member_checks, nonmember_checks, nbits, w_max)
