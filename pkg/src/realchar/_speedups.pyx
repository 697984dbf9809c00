# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernels.

Byte-for-byte compatible with ``realchar._kernels_py``: identical element
orders, identical outputs.  Rows live in one flat int array; membership goes
through an open-addressing hash table keyed by an FNV-1a hash of the image
row, verified by direct comparison (so collisions cannot corrupt results).
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcmp, memcpy

BACKEND = "c"

ctypedef long long i64
ctypedef unsigned long long u64


cdef inline u64 _row_hash(const int* row, int n) noexcept nogil:
    cdef u64 h = 1469598103934665603ULL
    cdef int i
    for i in range(n):
        h ^= <u64>(<unsigned int>row[i])
        h *= 1099511628211ULL
    return h


cdef struct HashTable:
    i64* slots
    u64 mask
    i64 used


cdef int _ht_init(HashTable* ht, i64 capacity_hint) except -1:
    cdef u64 cap = 16
    while cap < <u64>(2 * capacity_hint):
        cap <<= 1
    ht.slots = <i64*>malloc(cap * sizeof(i64))
    if ht.slots == NULL:
        raise MemoryError()
    cdef u64 i
    for i in range(cap):
        ht.slots[i] = -1
    ht.mask = cap - 1
    ht.used = 0
    return 0


cdef void _ht_free(HashTable* ht) noexcept:
    if ht.slots != NULL:
        free(ht.slots)
        ht.slots = NULL


cdef int _ht_grow(HashTable* ht, const int* rows, int n) except -1:
    cdef u64 old_cap = ht.mask + 1
    cdef u64 cap = old_cap * 2
    cdef i64* fresh = <i64*>malloc(cap * sizeof(i64))
    if fresh == NULL:
        raise MemoryError()
    cdef u64 i, pos
    cdef u64 mask = cap - 1
    for i in range(cap):
        fresh[i] = -1
    for i in range(old_cap):
        if ht.slots[i] >= 0:
            pos = _row_hash(rows + ht.slots[i] * n, n) & mask
            while fresh[pos] >= 0:
                pos = (pos + 1) & mask
            fresh[pos] = ht.slots[i]
    free(ht.slots)
    ht.slots = fresh
    ht.mask = mask
    return 0


cdef inline i64 _ht_lookup(HashTable* ht, const int* rows, int n, const int* row) noexcept nogil:
    cdef u64 pos = _row_hash(row, n) & ht.mask
    cdef i64 idx
    while True:
        idx = ht.slots[pos]
        if idx < 0:
            return -1
        if memcmp(rows + idx * n, row, n * sizeof(int)) == 0:
            return idx
        pos = (pos + 1) & ht.mask


cdef i64 _ht_insert_new(HashTable* ht, const int* rows, int n, const int* row, i64 idx) except -2:
    # caller guarantees the row is absent
    if 2 * (ht.used + 1) > <i64>(ht.mask + 1):
        _ht_grow(ht, rows, n)
    cdef u64 pos = _row_hash(row, n) & ht.mask
    while ht.slots[pos] >= 0:
        pos = (pos + 1) & ht.mask
    ht.slots[pos] = idx
    ht.used += 1
    return idx


def bfs_closure(int degree, gens, long long cap):
    """Enumerate in BFS insertion order; None once more than cap elements."""
    cdef int n = degree
    cdef int ngens = len(gens)
    cdef int* gen_rows = <int*>malloc(max(ngens, 1) * n * sizeof(int))
    if gen_rows == NULL:
        raise MemoryError()
    cdef int gi, j
    for gi, g in enumerate(gens):
        for j in range(n):
            gen_rows[gi * n + j] = g[j]
    cdef i64 alloc = 64
    cdef int* rows = <int*>malloc(alloc * n * sizeof(int))
    if rows == NULL:
        free(gen_rows)
        raise MemoryError()
    cdef HashTable ht
    _ht_init(&ht, 64)
    cdef i64 count = 1
    for j in range(n):
        rows[j] = j
    _ht_insert_new(&ht, rows, n, rows, 0)
    cdef i64 qi = 0
    cdef int* scratch = <int*>malloc(n * sizeof(int))
    cdef i64 found
    cdef const int* base
    cdef bint overflow = False
    try:
        if scratch == NULL:
            raise MemoryError()
        while qi < count:
            for gi in range(ngens):
                base = rows + qi * n
                for j in range(n):
                    scratch[j] = base[gen_rows[gi * n + j]]
                found = _ht_lookup(&ht, rows, n, scratch)
                if found < 0:
                    if count >= cap:
                        overflow = True
                        break
                    if count == alloc:
                        alloc *= 2
                        rows = <int*>realloc(rows, alloc * n * sizeof(int))
                        if rows == NULL:
                            raise MemoryError()
                    memcpy(rows + count * n, scratch, n * sizeof(int))
                    _ht_insert_new(&ht, rows, n, rows + count * n, count)
                    count += 1
            if overflow:
                break
            qi += 1
        if overflow:
            return None
        out = []
        for i in range(count):
            row_list = []
            for j in range(n):
                row_list.append(rows[i * n + j])
            out.append(tuple(row_list))
        return out
    finally:
        _ht_free(&ht)
        free(rows)
        free(gen_rows)
        if scratch != NULL:
            free(scratch)


cdef class PermTable:
    """Index-level multiplication engine over an enumerated element list."""

    cdef int n
    cdef i64 m
    cdef int* rows
    cdef i64* invarr
    cdef int* scratch
    cdef HashTable ht
    cdef public int degree

    def __cinit__(self, rows_in):
        cdef i64 m = len(rows_in)
        cdef int n = len(rows_in[0]) if m > 0 else 0
        self.m = m
        self.n = n
        self.degree = n
        self.rows = <int*>malloc(max(m * n, 1) * sizeof(int))
        self.invarr = <i64*>malloc(max(m, 1) * sizeof(i64))
        self.scratch = <int*>malloc(max(n, 1) * sizeof(int))
        if self.rows == NULL or self.invarr == NULL or self.scratch == NULL:
            raise MemoryError()
        _ht_init(&self.ht, m if m > 0 else 1)
        cdef i64 i
        cdef int j
        for i, row in enumerate(rows_in):
            for j in range(n):
                self.rows[i * n + j] = row[j]
        for i in range(m):
            if _ht_lookup(&self.ht, self.rows, n, self.rows + i * n) >= 0:
                raise ValueError("duplicate rows in element list")
            _ht_insert_new(&self.ht, self.rows, n, self.rows + i * n, i)
        cdef i64 found
        for i in range(m):
            for j in range(n):
                self.scratch[self.rows[i * n + j]] = j
            found = _ht_lookup(&self.ht, self.rows, n, self.scratch)
            if found < 0:
                raise ValueError("element list is not closed under inversion")
            self.invarr[i] = found

    def __dealloc__(self):
        _ht_free(&self.ht)
        if self.rows != NULL:
            free(self.rows)
        if self.invarr != NULL:
            free(self.invarr)
        if self.scratch != NULL:
            free(self.scratch)

    cdef inline i64 mul_c(self, i64 a, i64 b) noexcept nogil:
        cdef int j
        cdef const int* ra = self.rows + a * self.n
        cdef const int* rb = self.rows + b * self.n
        for j in range(self.n):
            self.scratch[j] = ra[rb[j]]
        return _ht_lookup(&self.ht, self.rows, self.n, self.scratch)

    cdef inline i64 conj_c(self, i64 a, i64 g) noexcept nogil:
        return self.mul_c(self.mul_c(self.invarr[g], a), g)

    def size(self):
        return self.m

    def mul(self, a, b):
        return self.mul_c(a, b)

    def inv(self, a):
        return self.invarr[a]

    def conj(self, a, g):
        return self.conj_c(a, g)

    def order_of(self, a):
        cdef i64 x = a
        cdef i64 k = 1
        while x != 0:
            x = self.mul_c(x, a)
            k += 1
        return k

    cdef tuple _filtered_closure(self, list seed_sorted):
        # seed elements already inside the running closure are skipped, so a
        # huge seed costs one membership test per element; at most log2 |G|
        # generators survive
        cdef list gens = []
        cdef set have = {0}
        for s in seed_sorted:
            if s in have:
                continue
            gens.append(s)
            have = set(self._closure_list(gens))
        return have, gens

    def closure(self, seed):
        have, _ = self._filtered_closure(sorted(set(seed)))
        return sorted(have)

    cdef list _closure_list(self, list gens):
        cdef i64* members = <i64*>malloc(self.m * sizeof(i64))
        cdef char* seen = <char*>malloc(self.m)
        if members == NULL or seen == NULL:
            if members != NULL:
                free(members)
            if seen != NULL:
                free(seen)
            raise MemoryError()
        cdef i64 i
        for i in range(self.m):
            seen[i] = 0
        cdef i64 count = 1
        members[0] = 0
        seen[0] = 1
        cdef i64 ngens = len(gens)
        cdef i64* gen_arr = <i64*>malloc(max(ngens, 1) * sizeof(i64))
        if gen_arr == NULL:
            free(members)
            free(seen)
            raise MemoryError()
        for i in range(ngens):
            gen_arr[i] = gens[i]
        cdef i64 qi = 0, gi, y
        while qi < count:
            for gi in range(ngens):
                y = self.mul_c(members[qi], gen_arr[gi])
                if not seen[y]:
                    seen[y] = 1
                    members[count] = y
                    count += 1
            qi += 1
        cdef list out = []
        for i in range(count):
            out.append(members[i])
        out.sort()
        free(members)
        free(seen)
        free(gen_arr)
        return out

    def normal_closure(self, seed, conjugators):
        cdef list gens = sorted(set(seed) - {0})
        cdef list conj_list = list(conjugators)
        cdef list members
        cdef set memberset
        cdef bint added
        cdef i64 x, c, y
        while True:
            memberset, gens = self._filtered_closure(gens)
            members = sorted(memberset)
            added = False
            for x in members:
                for c in conj_list:
                    y = self.conj_c(x, c)
                    if y not in memberset:
                        gens.append(y)
                        memberset.add(y)
                        added = True
            if not added:
                return members

    def conjugacy_classes(self, gen_idxs):
        cdef i64 ngens = len(gen_idxs)
        cdef i64* gen_arr = <i64*>malloc(max(ngens, 1) * sizeof(i64))
        cdef i64* class_of = <i64*>malloc(self.m * sizeof(i64))
        cdef i64* orbit = <i64*>malloc(self.m * sizeof(i64))
        if gen_arr == NULL or class_of == NULL or orbit == NULL:
            raise MemoryError()
        cdef i64 i
        for i in range(ngens):
            gen_arr[i] = gen_idxs[i]
        for i in range(self.m):
            class_of[i] = -1
        cdef list classes = []
        cdef list cls_list
        cdef i64 x, qi, osize, gi, z, c
        for x in range(self.m):
            if class_of[x] >= 0:
                continue
            c = len(classes)
            class_of[x] = c
            orbit[0] = x
            osize = 1
            qi = 0
            while qi < osize:
                for gi in range(ngens):
                    z = self.conj_c(orbit[qi], gen_arr[gi])
                    if class_of[z] < 0:
                        class_of[z] = c
                        orbit[osize] = z
                        osize += 1
                qi += 1
            cls_list = []
            for i in range(osize):
                cls_list.append(orbit[i])
            cls_list.sort()
            classes.append(cls_list)
        out_class_of = [class_of[i] for i in range(self.m)]
        free(gen_arr)
        free(class_of)
        free(orbit)
        return out_class_of, classes

    def class_matrices(self, class_of, reps):
        cdef i64 k = len(reps)
        cdef i64* cls = <i64*>malloc(self.m * sizeof(i64))
        cdef i64* rep_arr = <i64*>malloc(max(k, 1) * sizeof(i64))
        cdef i64* counts = <i64*>malloc(k * k * k * sizeof(i64))
        if cls == NULL or rep_arr == NULL or counts == NULL:
            raise MemoryError()
        cdef i64 i, t, x, xi, j
        for i in range(self.m):
            cls[i] = class_of[i]
        for i in range(k):
            rep_arr[i] = reps[i]
        for i in range(k * k * k):
            counts[i] = 0
        for x in range(self.m):
            i = cls[x]
            xi = self.invarr[x]
            for t in range(k):
                j = cls[self.mul_c(xi, rep_arr[t])]
                counts[(i * k + j) * k + t] += 1
        mats = [
            [[counts[(i * k + j) * k + t] for t in range(k)] for j in range(k)]
            for i in range(k)
        ]
        free(cls)
        free(rep_arr)
        free(counts)
        return mats

    def centralizer(self, gen_idxs):
        cdef i64 ngens = len(gen_idxs)
        cdef i64* gen_arr = <i64*>malloc(max(ngens, 1) * sizeof(i64))
        if gen_arr == NULL:
            raise MemoryError()
        cdef i64 i, x, gi
        for i in range(ngens):
            gen_arr[i] = gen_idxs[i]
        cdef list out = []
        cdef bint ok
        for x in range(self.m):
            ok = True
            for gi in range(ngens):
                if self.mul_c(x, gen_arr[gi]) != self.mul_c(gen_arr[gi], x):
                    ok = False
                    break
            if ok:
                out.append(x)
        free(gen_arr)
        return out
