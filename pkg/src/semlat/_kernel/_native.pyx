# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Native bitset kernel: packed uint64 incidence columns with C inner loops.

Same contract as the pure kernel; masks cross the boundary as Python ints
and are unpacked into word arrays once per call. All per-word work (column
ANDs, subset tests, popcounts) runs without touching Python objects.
"""

from cpython cimport array
import array

from libc.stdint cimport uint64_t
from libc.stdlib cimport qsort


cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int semlat_popcount64(unsigned long long v) {
        return __builtin_popcountll(v);
    }
    static inline int semlat_ctz64(unsigned long long v) {
        return __builtin_ctzll(v);
    }
    #else
    static inline int semlat_popcount64(unsigned long long v) {
        v = v - ((v >> 1) & 0x5555555555555555ULL);
        v = (v & 0x3333333333333333ULL) + ((v >> 2) & 0x3333333333333333ULL);
        v = (v + (v >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
        return (int)((v * 0x0101010101010101ULL) >> 56);
    }
    static inline int semlat_ctz64(unsigned long long v) {
        int n = 0;
        if (!v) return 64;
        while (!(v & 1ULL)) { v >>= 1; n++; }
        return n;
    }
    #endif
    static int semlat_cmp_u64(const void *a, const void *b) {
        unsigned long long x = *(const unsigned long long *)a;
        unsigned long long y = *(const unsigned long long *)b;
        return (x > y) - (x < y);
    }
    """
    int semlat_popcount64(uint64_t v) nogil
    int semlat_ctz64(uint64_t v) nogil
    int semlat_cmp_u64(const void *a, const void *b) nogil


cdef array.array _U64_TEMPLATE = array.array("Q", [])


cdef class NativeKernel:
    """Derivation primitives over a packed boolean incidence matrix."""

    cdef readonly int n_objects
    cdef readonly int n_attributes
    cdef readonly object object_universe
    cdef readonly object attribute_universe
    cdef int obj_words
    cdef int attr_words
    cdef array.array _cols_arr
    cdef uint64_t[::1] _cols          # n_attributes x obj_words, row-major
    cdef array.array _rows_arr
    cdef uint64_t[::1] _rows          # n_objects x attr_words, row-major
    cdef array.array _universe_arr
    cdef uint64_t[::1] _universe      # object universe, packed

    backend = "native"

    def __init__(self, rows, int n_objects, int n_attributes):
        self.n_objects = n_objects
        self.n_attributes = n_attributes
        self.object_universe = ((<object> 1) << n_objects) - 1
        self.attribute_universe = ((<object> 1) << n_attributes) - 1
        self.obj_words = (n_objects + 63) >> 6
        self.attr_words = (n_attributes + 63) >> 6

        # Build columns as Python ints first, then pack once. The shifts
        # stay Python-level on purpose: widths exceed any C integer.
        rows = list(rows)
        cols = [0] * n_attributes
        for i, row in enumerate(rows):
            bit = 1 << i
            m = row
            while m:
                low = m & -m
                cols[low.bit_length() - 1] |= bit
                m ^= low

        cdef int obj_bytes = self.obj_words * 8
        buf = bytearray()
        for col in cols:
            buf += col.to_bytes(obj_bytes, "little")
        self._cols_arr = array.array("Q")
        self._cols_arr.frombytes(bytes(buf))
        self._cols = self._cols_arr

        cdef int attr_bytes = self.attr_words * 8
        buf = bytearray()
        for row in rows:
            buf += row.to_bytes(attr_bytes, "little")
        self._rows_arr = array.array("Q")
        self._rows_arr.frombytes(bytes(buf))
        self._rows = self._rows_arr

        self._universe_arr = array.array("Q")
        self._universe_arr.frombytes(
            self.object_universe.to_bytes(obj_bytes, "little")
        )
        self._universe = self._universe_arr

    cdef array.array _unpack_extent(self, object extent_mask):
        cdef array.array packed = array.array("Q")
        packed.frombytes(extent_mask.to_bytes(self.obj_words * 8, "little"))
        return packed

    cdef array.array _extent_words(self, object intent_mask):
        """Universe narrowed by the columns of every attribute in the mask."""
        cdef array.array ext_arr = array.clone(_U64_TEMPLATE, self.obj_words, False)
        cdef uint64_t[::1] ext = ext_arr
        cdef uint64_t[::1] cols = self._cols
        cdef int w, j
        cdef int nw = self.obj_words
        for w in range(nw):
            ext[w] = self._universe[w]
        m = intent_mask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            for w in range(nw):
                ext[w] &= cols[j * nw + w]
            m ^= low
        return ext_arr

    cdef object _intent_of_words(self, uint64_t[::1] ext):
        """Attribute mask of the objects in ext, via column subset tests."""
        cdef int j, w, wj
        cdef uint64_t bits
        cdef bint ok
        cdef int nw = self.obj_words
        cdef int na = self.n_attributes
        cdef uint64_t[::1] cols = self._cols
        # Collect matching attributes into 64-bit chunks, then assemble the
        # Python mask chunk by chunk so no shift overflows C arithmetic.
        out = 0
        cdef int chunk_base = 0
        bits = 0
        for j in range(na):
            ok = True
            for w in range(nw):
                if ext[w] & ~cols[j * nw + w]:
                    ok = False
                    break
            if ok:
                bits |= (<uint64_t>1) << (j & 63)
            if (j & 63) == 63:
                if bits:
                    out |= (<object>bits) << chunk_base
                bits = 0
                chunk_base += 64
        if bits:
            out |= (<object>bits) << chunk_base
        return out

    def extent(self, object intent_mask):
        """Objects having every attribute in the mask (all objects for 0)."""
        cdef array.array ext_arr = self._extent_words(intent_mask)
        return int.from_bytes(ext_arr.tobytes(), "little")

    def intent(self, object extent_mask):
        """Attributes shared by every object in the mask (all attributes for 0)."""
        cdef array.array packed = self._unpack_extent(extent_mask)
        return self._intent_of_words(packed)

    def close(self, object intent_mask):
        """Extent of the mask plus the closure of the mask."""
        cdef array.array ext_arr = self._extent_words(intent_mask)
        closed = self._intent_of_words(ext_arr)
        return int.from_bytes(ext_arr.tobytes(), "little"), closed

    def close_step(self, object extent_mask, int attr):
        """Closure after narrowing an extent by one more attribute."""
        cdef array.array packed = self._unpack_extent(extent_mask)
        cdef uint64_t[::1] ext = packed
        cdef uint64_t[::1] cols = self._cols
        cdef int w
        cdef int nw = self.obj_words
        for w in range(nw):
            ext[w] &= cols[attr * nw + w]
        closed = self._intent_of_words(ext)
        return int.from_bytes(packed.tobytes(), "little"), closed

    def extent_count(self, object intent_mask):
        """Support count of an attribute set."""
        cdef array.array ext_arr = self._extent_words(intent_mask)
        cdef uint64_t[::1] ext = ext_arr
        cdef int w
        cdef int total = 0
        for w in range(self.obj_words):
            total += semlat_popcount64(ext[w])
        return total

    def upper_candidate_intents(self, object extent_mask, object intent_mask):
        """Distinct intents reachable by adding one outside object.

        The shared attributes of an object set are always a closed set, so
        intent & row(g) is directly the intent of the concept generated by
        extent + {g}; no closure pass is needed.
        """
        cdef array.array ext_packed = self._unpack_extent(extent_mask)
        cdef uint64_t[::1] ext = ext_packed
        cdef uint64_t[::1] rows = self._rows
        cdef int nw = self.obj_words
        cdef int aw = self.attr_words
        cdef int w, g, k, i
        cdef uint64_t miss, intent_word
        cdef array.array cand_arr
        cdef uint64_t[::1] cand

        if aw == 1:
            # intents fit one word: dedupe in C before boxing anything
            intent_word = <uint64_t> intent_mask
            cand_arr = array.clone(_U64_TEMPLATE, self.n_objects, False)
            cand = cand_arr
            k = 0
            for w in range(nw):
                miss = self._universe[w] & ~ext[w]
                while miss:
                    g = (w << 6) + semlat_ctz64(miss)
                    miss &= miss - 1
                    cand[k] = intent_word & rows[g]
                    k += 1
            if k == 0:
                return []
            qsort(&cand[0], k, sizeof(uint64_t), semlat_cmp_u64)
            out = []
            for i in range(k):
                if i == 0 or cand[i] != cand[i - 1]:
                    out.append(cand[i])
            return out

        # wide-intent fallback: box each candidate, dedupe in a Python set
        rows_bytes = self._rows_arr.tobytes()
        seen = set()
        for w in range(nw):
            miss = self._universe[w] & ~ext[w]
            while miss:
                g = (w << 6) + semlat_ctz64(miss)
                miss &= miss - 1
                row_int = int.from_bytes(rows_bytes[g * aw * 8 : (g + 1) * aw * 8], "little")
                seen.add(intent_mask & row_int)
        return list(seen)
