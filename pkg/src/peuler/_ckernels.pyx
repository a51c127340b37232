# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py`` for the reference semantics."""
from libc.stdint cimport uint64_t
from itertools import combinations

cdef enum:
    MAXN = 32

STAT_W1 = 0
STAT_DB = 1
STAT_N = 2
STAT_DES = 3
STAT_PEAKS = 4
STAT_AB = 5

MAX_N = MAXN


cdef inline uint64_t _stat_key(int* perm, int n, int stat) nogil:
    cdef uint64_t key = 0
    cdef int i, v, left, right
    if stat == 3:
        for i in range(n - 1):
            if perm[i] > perm[i + 1]:
                key += 1
        return key
    if stat == 4:
        for i in range(1, n - 1):
            if perm[i - 1] < perm[i] and perm[i] > perm[i + 1]:
                key += 1
        return key
    left = n
    for i in range(n):
        v = perm[i]
        right = perm[i + 1] if i + 1 < n else n
        if stat == 0:
            if left > v:
                key |= (<uint64_t>1) << (2 * v)
            if v < right:
                key |= (<uint64_t>2) << (2 * v)
        elif stat == 1:
            if left > v:
                key |= (<uint64_t>1) << v
        elif stat == 5:
            if v < right:
                key |= (<uint64_t>1) << v
        elif stat == 2:
            if (left < v and v > right) or (left > v and v < right):
                key |= (<uint64_t>1) << v
        left = v
    return key


cdef class _Walker:
    """Iterative backtracking over currently-minimal elements."""
    cdef int n
    cdef int depth
    cdef uint64_t used
    cdef int perm[MAXN]
    cdef int cand[MAXN + 1]
    cdef uint64_t pred[MAXN]

    def __cinit__(self, int n, pred):
        if n > MAXN:
            raise ValueError("kernel supports at most %d elements" % MAXN)
        self.n = n
        for i in range(n):
            self.pred[i] = pred[i]
        self.depth = 0
        self.used = 0
        self.cand[0] = 0

    cdef inline bint advance(self) nogil:
        """Move to the next complete extension; False when exhausted."""
        cdef int c
        cdef int n = self.n
        while self.depth >= 0:
            if self.depth == n:
                self.depth -= 1
                self.used &= ~((<uint64_t>1) << self.perm[self.depth])
                self.cand[self.depth] = self.perm[self.depth] + 1
                continue
            c = self.cand[self.depth]
            while c < n and (((self.used >> c) & 1) or (self.pred[c] & ~self.used)):
                c += 1
            if c == n:
                self.depth -= 1
                if self.depth >= 0:
                    self.used &= ~((<uint64_t>1) << self.perm[self.depth])
                    self.cand[self.depth] = self.perm[self.depth] + 1
                continue
            self.perm[self.depth] = c
            self.used |= (<uint64_t>1) << c
            self.depth += 1
            self.cand[self.depth] = 0
            if self.depth == n:
                return True
        return False


def linear_extensions(int n, pred):
    cdef _Walker w = _Walker(n, pred)
    cdef list out = []
    cdef int i
    if n == 0:
        return [()]
    while w.advance():
        out.append(tuple([w.perm[i] + 1 for i in range(n)]))
    return out


def count_extensions(int n, pred):
    cdef _Walker w = _Walker(n, pred)
    cdef long long total = 0
    if n == 0:
        return 1
    with nogil:
        while w.advance():
            total += 1
    return total


def extension_census(int n, pred, int stat):
    cdef _Walker w = _Walker(n, pred)
    cdef dict census = {}
    cdef uint64_t key
    cdef uint64_t last = 0
    cdef long long run = 0
    if n == 0:
        return {0: 1}
    # consecutive extensions often share a key; batch runs before touching the dict
    while w.advance():
        key = _stat_key(w.perm, n, stat)
        if run and key == last:
            run += 1
            continue
        if run:
            census[last] = census.get(last, 0) + run
        last = key
        run = 1
    if run:
        census[last] = census.get(last, 0) + run
    return census


def bullet_words(wbits, int wlen, vbits, int vlen):
    cdef uint64_t wb = wbits
    cdef uint64_t vb = vbits
    cdef uint64_t left, word, tm, sm
    cdef int i, k
    cdef dict out = {}
    cdef list tmasks, smasks
    if wlen + vlen > 64:
        raise ValueError("kernel supports words of total length at most 64")
    downs = [i for i in range(wlen) if not (wb >> i) & 1]
    ups = [i for i in range(vlen) if (vb >> i) & 1]
    for k in range(min(len(downs), len(ups) - 1) + 1):
        tmasks = [sum([1 << i for i in t]) for t in combinations(downs, k)]
        smasks = [sum([1 << i for i in s]) for s in combinations(ups, k + 1)]
        for t in tmasks:
            tm = t
            left = wb | tm
            for s in smasks:
                sm = s
                word = left | ((vb & ~sm) << wlen)
                out[word] = out.get(word, 0) + 1
    return out
