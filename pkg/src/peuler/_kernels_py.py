"""Pure-Python kernels.

Reference implementation of the hot loops; the Cython module ``_ckernels``
implements the same functions with identical results and ordering.

Conventions shared with the compiled kernels:

* permutation values are 1-based in results, 0-based internally;
* ``pred[c]`` is a bitmask of the elements strictly below ``c`` (0-based);
* statistic keys: W1 sets bit ``2v`` for a descent bottom and ``2v+1`` for an
  ascent bottom (``v`` 0-based), DB/AB/N set bit ``v``, DES/PEAKS are counts.
"""
from itertools import combinations, permutations

STAT_W1 = 0
STAT_DB = 1
STAT_N = 2
STAT_DES = 3
STAT_PEAKS = 4
STAT_AB = 5

MAX_N = 32


def _stat_key(perm, n, stat):
    key = 0
    if stat == STAT_DES:
        for i in range(n - 1):
            if perm[i] > perm[i + 1]:
                key += 1
        return key
    if stat == STAT_PEAKS:
        for i in range(1, n - 1):
            if perm[i - 1] < perm[i] > perm[i + 1]:
                key += 1
        return key
    left = n
    for i in range(n):
        v = perm[i]
        right = perm[i + 1] if i + 1 < n else n
        if stat == STAT_W1:
            if left > v:
                key |= 1 << (2 * v)
            if v < right:
                key |= 2 << (2 * v)
        elif stat == STAT_DB:
            if left > v:
                key |= 1 << v
        elif stat == STAT_AB:
            if v < right:
                key |= 1 << v
        elif stat == STAT_N:
            if (left < v > right) or (left > v < right):
                key |= 1 << v
        left = v
    return key


def _iter_extensions(n, pred):
    """Yield linear extensions as 0-based lists in lexicographic order."""
    if not any(pred):
        yield from permutations(range(n))
        return
    perm = [0] * n
    cand = [0] * (n + 1)
    used = 0
    depth = 0
    while depth >= 0:
        if depth == n:
            yield perm
            depth -= 1
            used &= ~(1 << perm[depth])
            cand[depth] = perm[depth] + 1
            continue
        c = cand[depth]
        while c < n and ((used >> c) & 1 or pred[c] & ~used):
            c += 1
        if c == n:
            depth -= 1
            if depth >= 0:
                used &= ~(1 << perm[depth])
                cand[depth] = perm[depth] + 1
            continue
        perm[depth] = c
        used |= 1 << c
        depth += 1
        cand[depth] = 0


def linear_extensions(n, pred):
    return [tuple(v + 1 for v in p) for p in _iter_extensions(n, pred)]


def count_extensions(n, pred):
    return sum(1 for _ in _iter_extensions(n, pred))


def extension_census(n, pred, stat):
    census = {}
    get = census.get
    for p in _iter_extensions(n, pred):
        key = _stat_key(p, n, stat)
        census[key] = get(key, 0) + 1
    return census


def bullet_words(wbits, wlen, vbits, vlen):
    """Expand the bullet product of two u/d words given as bit vectors (u=1)."""
    downs = [i for i in range(wlen) if not (wbits >> i) & 1]
    ups = [i for i in range(vlen) if (vbits >> i) & 1]
    out = {}
    for k in range(min(len(downs), len(ups) - 1) + 1):
        tmasks = [sum(1 << i for i in t) for t in combinations(downs, k)]
        smasks = [sum(1 << i for i in s) for s in combinations(ups, k + 1)]
        for tm in tmasks:
            left = wbits | tm
            for sm in smasks:
                word = left | ((vbits & ~sm) << wlen)
                out[word] = out.get(word, 0) + 1
    return out
