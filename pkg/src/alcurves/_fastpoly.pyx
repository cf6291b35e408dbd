# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution kernel for dense coefficient boxes modulo p.

Semantics match ``alcurves.kernels.mul_dense_mod_py`` exactly: operands are
row-major flattened coefficient boxes with per-variable coefficient counts
``dims_a`` / ``dims_b``; the result is their convolution with every
coefficient reduced modulo p.
"""

from cpython cimport array

import array as _array


cdef _pack(object flat, object dims, object out_strides):
    """Nonzero entries of one operand as (output-offset, value) arrays."""
    cdef Py_ssize_t nv = len(dims)
    cdef array.array dims_arr = _array.array('q', list(dims))
    cdef array.array str_arr = _array.array('q', list(out_strides))
    cdef array.array idx_arr = _array.array('q', bytes(8 * nv))
    cdef long long[::1] dv = dims_arr
    cdef long long[::1] sv = str_arr
    cdef long long[::1] iv = idx_arr
    cdef Py_ssize_t n = len(flat)
    cdef array.array offs = _array.array('q', bytes(8 * n))
    cdef array.array vals = _array.array('q', bytes(8 * n))
    cdef long long[::1] offv = offs
    cdef long long[::1] valv = vals
    cdef Py_ssize_t count = 0, i
    cdef Py_ssize_t k
    cdef long long off = 0, v
    for i in range(n):
        v = flat[i]
        if v != 0:
            offv[count] = off
            valv[count] = v
            count += 1
        k = nv - 1
        while k >= 0:
            iv[k] += 1
            off += sv[k]
            if iv[k] < dv[k]:
                break
            off -= iv[k] * sv[k]
            iv[k] = 0
            k -= 1
    array.resize(offs, count)
    array.resize(vals, count)
    return offs, vals


def mul_dense_mod(object a, tuple dims_a, object b, tuple dims_b, long long p):
    """Convolve two flattened coefficient boxes and reduce mod p."""
    cdef Py_ssize_t nv = len(dims_a)
    if len(dims_b) != nv:
        raise ValueError("operand boxes have different variable counts")
    if p < 2:
        raise ValueError("modulus must be at least 2")
    cdef Py_ssize_t k
    cdef Py_ssize_t expect_a = 1, expect_b = 1, total_out = 1
    dims_out = [0] * nv
    for k in range(nv):
        dims_out[k] = dims_a[k] + dims_b[k] - 1
        expect_a *= <Py_ssize_t> dims_a[k]
        expect_b *= <Py_ssize_t> dims_b[k]
        total_out *= dims_out[k]
    if len(a) != expect_a or len(b) != expect_b:
        raise ValueError("flat coefficient length does not match box dims")
    strides = [1] * nv
    for k in range(nv - 2, -1, -1):
        strides[k] = strides[k + 1] * dims_out[k + 1]

    offs_a, vals_a = _pack(a, dims_a, strides)
    offs_b, vals_b = _pack(b, dims_b, strides)
    if len(offs_a) == 0 or len(offs_b) == 0:
        return [0] * total_out
    if len(offs_a) > len(offs_b):
        offs_a, offs_b = offs_b, offs_a
        vals_a, vals_b = vals_b, vals_a

    cdef array.array out = _array.array('q', bytes(8 * total_out))
    cdef long long[::1] ov = out
    cdef long long[::1] oa = offs_a
    cdef long long[::1] va = vals_a
    cdef long long[::1] ob = offs_b
    cdef long long[::1] vb = vals_b
    cdef Py_ssize_t na = oa.shape[0], nb = ob.shape[0], ia, ib
    cdef long long base, val
    for ia in range(na):
        base = oa[ia]
        val = va[ia]
        for ib in range(nb):
            ov[base + ob[ib]] += val * vb[ib]
    for ia in range(total_out):
        ov[ia] = ov[ia] % p
    return list(out)
