# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial product.

Handles operands whose keys fit in 64 bits and whose coefficients are
machine-sized ints. Anything else (rational or huge coefficients, wide keys,
intermediate overflow) returns ``None`` and the caller falls back to the
pure-Python kernel.
"""
from libc.stdint cimport uint64_t, int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

cdef extern from *:
    """
    static inline int sl_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sl_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int sl_key_ovf(unsigned long long a, unsigned long long b, unsigned long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int sl_mul_ovf(long long a, long long b, long long *r) nogil
    int sl_add_ovf(long long a, long long b, long long *r) nogil
    int sl_key_ovf(unsigned long long a, unsigned long long b, unsigned long long *r) nogil

cdef uint64_t KEY_LIMIT = 0xFFFFFFFFFFFFFFFF
cdef object INT64_MIN = -(1 << 63)
cdef object INT64_MAX = (1 << 63) - 1


cdef bint _load(dict d, vector[uint64_t]& keys, vector[long long]& coefs):
    cdef object k, c
    keys.reserve(len(d))
    coefs.reserve(len(d))
    for k, c in d.items():
        if type(c) is not int or k > KEY_LIMIT or c < INT64_MIN or c > INT64_MAX:
            return False
        keys.push_back(<uint64_t>k)
        coefs.push_back(<long long>c)
    return True


cdef inline int _xdeg(uint64_t key, uint64_t mask, vector[int]& shifts) nogil:
    cdef int total = 0
    cdef size_t i
    for i in range(shifts.size()):
        total += <int>((key >> shifts[i]) & mask)
    return total


def mul_terms(dict a, dict b, int bits, tuple xshifts, long cap):
    """Same contract as the pure-Python kernel, or ``None`` if unsupported."""
    if bits <= 0 or bits > 32:
        return None
    cdef vector[uint64_t] ka, kb
    cdef vector[long long] ca, cb
    if not _load(a, ka, ca) or not _load(b, kb, cb):
        return None
    cdef vector[int] shifts
    for s in xshifts:
        if s < 0 or s > 63:
            return None
        shifts.push_back(<int>s)

    cdef uint64_t mask = (<uint64_t>1 << bits) - 1
    cdef size_t na = ka.size(), nb = kb.size(), i, j
    cdef vector[int] da, db
    cdef unordered_map[uint64_t, long long] acc
    cdef long long prod, cur
    cdef unsigned long long key
    cdef bint truncate = cap >= 0
    cdef bint overflow = False
    cdef unordered_map[uint64_t, long long].iterator it

    with nogil:
        if truncate:
            da.resize(na)
            db.resize(nb)
            for i in range(na):
                da[i] = _xdeg(ka[i], mask, shifts)
            for j in range(nb):
                db[j] = _xdeg(kb[j], mask, shifts)
        acc.reserve(na * nb if na * nb < 1 << 20 else 1 << 20)
        for i in range(na):
            if truncate and da[i] > cap:
                continue
            for j in range(nb):
                if truncate and da[i] + db[j] > cap:
                    continue
                # key carry out of 64 bits or coefficient overflow: give up
                if sl_key_ovf(ka[i], kb[j], &key) or sl_mul_ovf(ca[i], cb[j], &prod):
                    overflow = True
                    break
                it = acc.find(key)
                if it == acc.end():
                    acc[key] = prod
                else:
                    if sl_add_ovf(deref(it).second, prod, &cur):
                        overflow = True
                        break
                    deref(it).second = cur
            if overflow:
                break

    if overflow:
        return None
    out = {}
    it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out[deref(it).first] = deref(it).second
        inc(it)
    return out
