# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled exact-arithmetic kernels.

Same contract as ``_kernels_py``: flat row-major parallel lists of
numerators and denominators (arbitrary-precision Python ints,
denominators positive, entries reduced).  The big-integer arithmetic
itself stays in CPython longs; the win over the fallback comes from
removing interpreter dispatch in the triple loops and from skipping
zero terms without attribute lookups.
"""

from math import gcd

__all__ = ["mat_mul", "mat_kron", "mat_rank"]


def mat_mul(Py_ssize_t n, Py_ssize_t k, Py_ssize_t m, list anum, list aden, list bnum, list bden):
    cdef Py_ssize_t i, j, t, arow, out
    cdef object acc_n, acc_d, an, bn, tn, td, g
    cdef list cnum = [0] * (n * m)
    cdef list cden = [1] * (n * m)
    for i in range(n):
        arow = i * k
        for j in range(m):
            acc_n = 0
            acc_d = 1
            for t in range(k):
                an = anum[arow + t]
                if an == 0:
                    continue
                bn = bnum[t * m + j]
                if bn == 0:
                    continue
                tn = an * bn
                td = aden[arow + t] * bden[t * m + j]
                acc_n = acc_n * td + tn * acc_d
                acc_d = acc_d * td
            if acc_n != 0:
                g = gcd(acc_n, acc_d)
                out = i * m + j
                cnum[out] = acc_n // g
                cden[out] = acc_d // g
    return cnum, cden


def mat_kron(Py_ssize_t ra, Py_ssize_t ca, Py_ssize_t rb, Py_ssize_t cb, list anum, list aden, list bnum, list bden):
    cdef Py_ssize_t rows = ra * rb
    cdef Py_ssize_t cols = ca * cb
    cdef Py_ssize_t ia, ja, ib, jb, base, brow
    cdef object an, ad, bn, num, den, g
    cdef list cnum = [0] * (rows * cols)
    cdef list cden = [1] * (rows * cols)
    for ia in range(ra):
        for ja in range(ca):
            an = anum[ia * ca + ja]
            if an == 0:
                continue
            ad = aden[ia * ca + ja]
            for ib in range(rb):
                base = (ia * rb + ib) * cols + ja * cb
                brow = ib * cb
                for jb in range(cb):
                    bn = bnum[brow + jb]
                    if bn == 0:
                        continue
                    num = an * bn
                    den = ad * bden[brow + jb]
                    g = gcd(num, den)
                    cnum[base + jb] = num // g
                    cden[base + jb] = den // g
    return cnum, cden


def mat_rank(Py_ssize_t r, Py_ssize_t c, list nums, list dens):
    # Row-wise integer scaling followed by Bareiss elimination with row
    # pivoting; the division by the previous pivot is exact.
    cdef list m = []
    cdef list row
    cdef Py_ssize_t i, j, col, p, pivot_row
    cdef object lcm, d, piv, head, prev
    for i in range(r):
        row = list(nums[i * c : (i + 1) * c])
        lcm = 1
        for j in range(c):
            d = dens[i * c + j]
            lcm = lcm // gcd(lcm, d) * d
        if lcm != 1:
            for j in range(c):
                row[j] = row[j] * (lcm // dens[i * c + j])
        m.append(row)

    cdef Py_ssize_t rank = 0
    prev = 1
    pivot_row = 0
    for col in range(c):
        if pivot_row == r:
            break
        p = pivot_row
        while p < r and (<list> m[p])[col] == 0:
            p += 1
        if p == r:
            continue
        if p != pivot_row:
            m[p], m[pivot_row] = m[pivot_row], m[p]
        piv = (<list> m[pivot_row])[col]
        for i in range(pivot_row + 1, r):
            row = <list> m[i]
            head = row[col]
            for j in range(col + 1, c):
                row[j] = (piv * row[j] - head * (<list> m[pivot_row])[j]) // prev
            row[col] = 0
        prev = piv
        pivot_row += 1
        rank += 1
    return rank
