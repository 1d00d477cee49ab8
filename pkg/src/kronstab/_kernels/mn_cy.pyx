# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Murnaghan-Nakayama kernel.

Same algorithm as ``mn_py``: beta-set bitmasks, border strips removed largest
cycle first, one memo shared across shapes. Suffixes of cycle types are
interned to integer ids so the memo is a vector of hash maps indexed by
suffix id and keyed by the canonical mask. Values are int64; any overflow
raises OverflowError and the caller falls back to the Python kernel.
"""

from cython.operator cimport dereference as deref
from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

ctypedef long long llong

from ..partitions import partitions_of

cdef extern from *:
    """
    static inline int kr_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int kr_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    static inline int kr_add(long long a, long long b, long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    static inline int kr_sub(long long a, long long b, long long *out) {
        return __builtin_sub_overflow(a, b, out);
    }
    """
    int kr_popcount(unsigned long long x) nogil
    int kr_ctz(unsigned long long x) nogil
    int kr_add(long long a, long long b, long long *out) nogil
    int kr_sub(long long a, long long b, long long *out) nogil

BACKEND = "cython"
# beads live at positions <= n, so n must fit in 64 bits
MAX_N = 63


cdef inline uint64_t canonical(uint64_t mask) noexcept nogil:
    cdef uint64_t inv = ~mask
    if inv == 0:
        return 0
    return mask >> kr_ctz(inv)


def beta_mask(tuple lam):
    cdef Py_ssize_t ell = len(lam), i
    mask = 0
    for i in range(ell):
        mask |= 1 << (lam[i] + ell - 1 - i)
    return mask


cdef class CharacterKernel:
    cdef readonly int n
    cdef readonly tuple rhos
    cdef dict _index
    cdef vector[int] _parts
    cdef vector[int] _sids
    cdef vector[Py_ssize_t] _offsets
    cdef vector[unordered_map[uint64_t, llong]] _memo
    cdef bint _overflow

    def __init__(self, int n):
        if n < 0 or n > MAX_N:
            raise OverflowError(f"compiled kernel supports 0 <= n <= {MAX_N}")
        self.n = n
        self.rhos = partitions_of(n)
        self._index = {rho: i for i, rho in enumerate(self.rhos)}
        cdef dict suffix_ids = {}
        cdef Py_ssize_t idx
        for rho in self.rhos:
            self._offsets.push_back(self._parts.size())
            for idx in range(len(rho)):
                suffix = rho[idx:]
                sid = suffix_ids.get(suffix)
                if sid is None:
                    sid = len(suffix_ids)
                    suffix_ids[suffix] = sid
                self._parts.push_back(rho[idx])
                self._sids.push_back(sid)
        self._offsets.push_back(self._parts.size())
        self._memo.resize(len(suffix_ids))

    cdef long long _chi(self, uint64_t mask, Py_ssize_t pos, Py_ssize_t end) noexcept nogil:
        if pos == end:
            return 1
        cdef int sid = self._sids[pos]
        cdef unordered_map[uint64_t, llong].iterator hit = self._memo[sid].find(mask)
        if hit != self._memo[sid].end():
            return deref(hit).second
        cdef int r = self._parts[pos]
        cdef long long total = 0, val
        cdef uint64_t m = mask, child, between
        cdef int b
        while m:
            b = kr_ctz(m)
            m &= m - 1
            if b < r or (mask >> (b - r)) & 1:
                continue
            between = (mask >> (b - r + 1)) & ((<uint64_t>1 << (r - 1)) - 1)
            child = canonical(mask ^ (<uint64_t>1 << b) ^ (<uint64_t>1 << (b - r)))
            val = self._chi(child, pos + 1, end)
            if self._overflow:
                return 0
            if kr_popcount(between) & 1:
                if kr_sub(total, val, &total):
                    self._overflow = True
                    return 0
            else:
                if kr_add(total, val, &total):
                    self._overflow = True
                    return 0
        self._memo[sid][mask] = total
        return total

    cdef long long _eval(self, uint64_t mask, Py_ssize_t i) except? -1:
        cdef long long out
        self._overflow = False
        out = self._chi(mask, self._offsets[i], self._offsets[i + 1])
        if self._overflow:
            self._overflow = False
            raise OverflowError("character value exceeds 64-bit range")
        return out

    def value(self, tuple lam, tuple rho):
        cdef uint64_t mask = canonical(beta_mask(lam))
        return self._eval(mask, self._index[rho])

    def row(self, tuple lam):
        cdef uint64_t mask = canonical(beta_mask(lam))
        cdef Py_ssize_t i, count = len(self.rhos)
        return [self._eval(mask, i) for i in range(count)]

    def memo_size(self):
        cdef size_t total = 0
        cdef Py_ssize_t i
        for i in range(<Py_ssize_t>self._memo.size()):
            total += self._memo[i].size()
        return total
