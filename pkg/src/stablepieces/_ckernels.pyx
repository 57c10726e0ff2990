# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""
Compiled kernels for Weyl-group element arithmetic.

Same layout and contracts as ``_pykernels``: flat row-major ``r*r`` tuples of
ints, 0-based letters.  Ranks above ``MAXR`` are delegated to the pure-Python
kernels.
"""

from . import _pykernels as _py

cdef enum:
    MAXR = 32
    MAXN = 1024


cdef inline void _load(tuple t, long *buf, int n):
    cdef int k
    for k in range(n):
        buf[k] = t[k]


cdef inline tuple _store(long *buf, int n):
    cdef list out = [0] * n
    cdef int k
    for k in range(n):
        out[k] = buf[k]
    return tuple(out)


cdef inline void _rmul_s(long *m, int i, long *cart, int r):
    cdef int k, a
    cdef long c
    for k in range(r):
        c = cart[i * r + k]
        if c != 0 and k != i:
            for a in range(r):
                m[a * r + k] -= c * m[a * r + i]
    for a in range(r):
        m[a * r + i] = -m[a * r + i]


cdef inline bint _col_negative(long *m, int b, int r):
    cdef int a
    cdef long e
    for a in range(r):
        e = m[a * r + b]
        if e != 0:
            return e < 0
    return False


cdef inline int _first_descent(long *m, int r):
    cdef int b
    for b in range(r):
        if _col_negative(m, b, r):
            return b
    return -1


cdef inline void _identity(long *m, int r):
    cdef int a
    for a in range(r * r):
        m[a] = 0
    for a in range(r):
        m[a * r + a] = 1


def identity(int r):
    return _py.identity(r)


def mul(tuple x, tuple y, int r):
    if r > MAXR:
        return _py.mul(x, y, r)
    cdef long xb[MAXN]
    cdef long yb[MAXN]
    cdef long ob[MAXN]
    cdef int a, b, k
    cdef long acc
    _load(x, xb, r * r)
    _load(y, yb, r * r)
    for a in range(r):
        for b in range(r):
            acc = 0
            for k in range(r):
                acc += xb[a * r + k] * yb[k * r + b]
            ob[a * r + b] = acc
    return _store(ob, r * r)


def apply(tuple m, v, int r):
    return _py.apply(m, v, r)


def lmul_s(tuple m, int i, tuple cart, int r):
    if r > MAXR:
        return _py.lmul_s(m, i, cart, r)
    cdef long mb[MAXN]
    cdef long cb[MAXN]
    cdef long ob[MAXN]
    cdef int b, j
    cdef long acc
    _load(m, mb, r * r)
    _load(cart, cb, r * r)
    for b in range(r * r):
        ob[b] = mb[b]
    for b in range(r):
        acc = 0
        for j in range(r):
            acc += cb[i * r + j] * mb[j * r + b]
        ob[i * r + b] = mb[i * r + b] - acc
    return _store(ob, r * r)


def rmul_s(tuple m, int i, tuple cart, int r):
    if r > MAXR:
        return _py.rmul_s(m, i, cart, r)
    cdef long mb[MAXN]
    cdef long cb[MAXN]
    _load(m, mb, r * r)
    _load(cart, cb, r * r)
    _rmul_s(mb, i, cb, r)
    return _store(mb, r * r)


def right_descent_mask(tuple m, int r):
    if r > MAXR:
        return _py.right_descent_mask(m, r)
    cdef long mb[MAXN]
    cdef int b
    cdef long mask = 0
    _load(m, mb, r * r)
    for b in range(r):
        if _col_negative(mb, b, r):
            mask |= (<long>1) << b
    return mask


def length(tuple m, tuple cart, int r):
    if r > MAXR:
        return _py.length(m, cart, r)
    cdef long mb[MAXN]
    cdef long cb[MAXN]
    cdef int n = 0
    cdef int i
    _load(m, mb, r * r)
    _load(cart, cb, r * r)
    i = _first_descent(mb, r)
    while i >= 0:
        _rmul_s(mb, i, cb, r)
        n += 1
        i = _first_descent(mb, r)
    return n


cdef void _inverse(long *mb, long *ib, long *cb, int r):
    # destroys mb
    cdef int i
    _identity(ib, r)
    i = _first_descent(mb, r)
    while i >= 0:
        _rmul_s(mb, i, cb, r)
        _rmul_s(ib, i, cb, r)
        i = _first_descent(mb, r)


def inverse(tuple m, tuple cart, int r):
    if r > MAXR:
        return _py.inverse(m, cart, r)
    cdef long mb[MAXN]
    cdef long ib[MAXN]
    cdef long cb[MAXN]
    _load(m, mb, r * r)
    _load(cart, cb, r * r)
    _inverse(mb, ib, cb, r)
    return _store(ib, r * r)


def reduced_word(tuple m, tuple cart, int r):
    if r > MAXR:
        return _py.reduced_word(m, cart, r)
    cdef long mb[MAXN]
    cdef long ib[MAXN]
    cdef long cb[MAXN]
    cdef int i
    cdef list word = []
    _load(m, mb, r * r)
    _load(cart, cb, r * r)
    _inverse(mb, ib, cb, r)
    i = _first_descent(ib, r)
    while i >= 0:
        word.append(i)
        _rmul_s(ib, i, cb, r)
        i = _first_descent(ib, r)
    return tuple(word)


def from_word(word, tuple cart, int r):
    if r > MAXR:
        return _py.from_word(word, cart, r)
    cdef long mb[MAXN]
    cdef long cb[MAXN]
    _load(cart, cb, r * r)
    _identity(mb, r)
    for i in word:
        _rmul_s(mb, i, cb, r)
    return _store(mb, r * r)


def bruhat_leq(tuple u, tuple w, tuple cart, int r):
    if r > MAXR:
        return _py.bruhat_leq(u, w, cart, r)
    cdef long ub[MAXN]
    cdef long wb[MAXN]
    cdef long cb[MAXN]
    cdef int i
    _load(u, ub, r * r)
    _load(w, wb, r * r)
    _load(cart, cb, r * r)
    while True:
        i = _first_descent(wb, r)
        if i < 0:
            return _first_descent(ub, r) < 0
        if _col_negative(ub, i, r):
            _rmul_s(ub, i, cb, r)
        _rmul_s(wb, i, cb, r)


def enumerate_subgroup(tuple cart, int r, long gens_mask, long limit):
    if r > MAXR:
        return _py.enumerate_subgroup(cart, r, gens_mask, limit)
    cdef long mb[MAXN]
    cdef long cb[MAXN]
    cdef int i, b, n = r * r
    cdef bint neg
    cdef list gens = [i for i in range(r) if (gens_mask >> i) & 1]
    _load(cart, cb, n)
    e = _py.identity(r)
    cdef list mats = [e]
    cdef list words = [()]
    cdef set seen = {e}
    cdef list level = [(e, ())]
    cdef list nxt
    while level:
        nxt = []
        for m, wd in level:
            for i in gens:
                _load(m, mb, n)
                if _col_negative(mb, i, r):
                    continue
                _rmul_s(mb, i, cb, r)
                c = _store(mb, n)
                if c in seen:
                    continue
                seen.add(c)
                nxt.append((c, wd + (i,)))
        if len(seen) > limit:
            return None
        for c, wd in nxt:
            mats.append(c)
            words.append(wd)
        level = nxt
    return mats, words
