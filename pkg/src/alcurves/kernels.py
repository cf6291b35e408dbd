"""Dense convolution kernel for polynomial multiplication modulo p.

Multivariate polynomials are flattened to one-dimensional coefficient
"boxes" in row-major order: a polynomial with per-variable coefficient
counts ``dims = (d_1, ..., d_k)`` (count = degree bound + 1) is stored as a
flat list of length ``d_1 * ... * d_k``, the last variable varying fastest.

The product of two boxes is their convolution; every coefficient of the
output is reduced modulo p.  A compiled implementation is used when the
optional extension module built from ``_fastpoly.pyx`` is importable;
otherwise a pure-Python implementation with identical semantics is used.
The pure version is always available as :func:`mul_dense_mod_py` so the
two backends can be compared directly.
"""

from __future__ import annotations

from math import prod
from typing import Sequence

# The compiled kernel accumulates into 64-bit integers; cap p so that the
# worst-case accumulation cannot overflow (terms * (p-1)^2 < 2^63).
MAX_COMPILED_MODULUS = 1 << 20


def output_dims(dims_a: Sequence[int], dims_b: Sequence[int]) -> tuple[int, ...]:
    """Coefficient counts of the product box."""
    if len(dims_a) != len(dims_b):
        raise ValueError("operand boxes have different variable counts")
    return tuple(da + db - 1 for da, db in zip(dims_a, dims_b))


def _strides(dims: Sequence[int]) -> list[int]:
    out = [1] * len(dims)
    for k in range(len(dims) - 2, -1, -1):
        out[k] = out[k + 1] * dims[k + 1]
    return out


def _offsets(flat: Sequence[int], dims: Sequence[int], out_strides: Sequence[int]):
    """Nonzero (offset-in-output, value) pairs for one operand box."""
    nv = len(dims)
    idx = [0] * nv
    pairs = []
    off = 0
    for value in flat:
        if value:
            pairs.append((off, value))
        # advance the mixed-radix index and the running output offset
        for k in range(nv - 1, -1, -1):
            idx[k] += 1
            off += out_strides[k]
            if idx[k] < dims[k]:
                break
            off -= idx[k] * out_strides[k]
            idx[k] = 0
    return pairs


def mul_dense_mod_py(
    a: Sequence[int],
    dims_a: Sequence[int],
    b: Sequence[int],
    dims_b: Sequence[int],
    p: int,
) -> list[int]:
    """Pure-Python convolution of two coefficient boxes, reduced mod p."""
    dims_out = output_dims(dims_a, dims_b)
    if len(a) != prod(dims_a) or len(b) != prod(dims_b):
        raise ValueError("flat coefficient length does not match box dims")
    out_strides = _strides(dims_out)
    pairs_a = _offsets(a, dims_a, out_strides)
    pairs_b = _offsets(b, dims_b, out_strides)
    out = [0] * prod(dims_out)
    if len(pairs_a) > len(pairs_b):
        pairs_a, pairs_b = pairs_b, pairs_a
    for oa, va in pairs_a:
        for ob, vb in pairs_b:
            out[oa + ob] += va * vb
    return [v % p for v in out]


try:  # pragma: no cover - exercised indirectly via backend tests
    from . import _fastpoly as _ext
except ImportError:  # pragma: no cover
    _ext = None

BACKEND = "compiled" if _ext is not None else "python"


def mul_dense_mod(
    a: Sequence[int],
    dims_a: Sequence[int],
    b: Sequence[int],
    dims_b: Sequence[int],
    p: int,
) -> list[int]:
    """Convolution of two coefficient boxes mod p (fastest available backend)."""
    if _ext is not None and 1 < p < MAX_COMPILED_MODULUS:
        return _ext.mul_dense_mod(list(a), tuple(dims_a), list(b), tuple(dims_b), p)
    return mul_dense_mod_py(a, dims_a, b, dims_b, p)
