# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel: identical algorithm to the Python engine.

Evaluates the cubic form in 64-bit and the quintic form in 128-bit
integers, so heights up to 100000 are exact; the dispatcher enforces
that bound.  Division (not multiplication) is used to test for the
square W^2 = F5/F3, which keeps every intermediate inside 128 bits.
"""

from libc.math cimport sqrt

ctypedef long long i64
cdef extern from *:
    ctypedef long long i128 "__int128"


cdef inline i64 _isqrt64(i64 q):
    cdef i64 s = <i64>sqrt(<double>q)
    while s > 0 and s * s > q:
        s -= 1
    while (s + 1) * (s + 1) <= q:
        s += 1
    return s


def enumerate_shard(long long height, long long shard, long long nshards, list tables):
    """Raw (W, X, Y, Z) solutions for one residue class of the X range."""
    cdef i64 h = height
    cdef i64 x, y, z, w, a, quot_s, s3, am, bm
    cdef i128 b, quot
    cdef int nmods = len(tables)
    cdef int[16] mods
    cdef const unsigned char * tptr[16]
    cdef bytes buf
    cdef int i, mi, rejected
    if nmods > 16:
        raise ValueError("too many sieve moduli")
    keep = []
    for i in range(nmods):
        mods[i] = tables[i][0]
        buf = tables[i][1]
        keep.append(buf)
        tptr[i] = <const unsigned char *> buf
    out = []
    x = -h + shard
    while x <= h:
        for y in range(-h, h + 1):
            for z in range(-h, h + 1):
                if x == 0 and y == 0 and z == 0:
                    out.append((1, 0, 0, 0))
                    continue
                s3 = x + y + z
                a = s3 * s3 * s3 + x * x * z + x * y * y + y * z * z + 2 * x * y * z
                b = (
                    (<i128> (z * z) * z) * (x * x)
                    + (<i128> (x * x) * x) * (y * y)
                    + (<i128> (y * y) * y) * (z * z)
                    - (<i128> (x * y) * z) * (y * z + x * y + x * z)
                )
                if a == 0:
                    if b == 0:
                        for w in range(-h, h + 1):
                            out.append((w, x, y, z))
                    continue
                rejected = 0
                for i in range(nmods):
                    mi = mods[i]
                    am = a % mi
                    if am < 0:
                        am += mi
                    bm = <i64> (b % mi)
                    if bm < 0:
                        bm += mi
                    if not tptr[i][am * mi + bm]:
                        rejected = 1
                        break
                if rejected:
                    continue
                if b % a != 0:
                    continue
                quot = b / a
                if quot < 0 or quot > h * h:
                    continue
                quot_s = <i64> quot
                w = _isqrt64(quot_s)
                if w * w != quot_s:
                    continue
                out.append((w, x, y, z))
                if w:
                    out.append((-w, x, y, z))
        x += nshards
    return out
