"""
Pure-Python reference kernels for Weyl-group element arithmetic.

Every element is a flat, row-major ``r*r`` tuple of ints holding the matrix of
its action on the simple-root basis: entry ``m[a*r + b]`` is the coefficient of
``alpha_a`` in ``w(alpha_b)``.  Column ``b`` is therefore the root ``w(alpha_b)``.
The Cartan matrix is passed flat in the same layout, with
``cart[i*r + j] = <alpha_i^vee, alpha_j>``.  Indices are 0-based here; the
public API translates to the 1-based Bourbaki labels.

The compiled extension ``_ckernels`` exports the same functions with the same
signatures and must return identical values.
"""

from __future__ import annotations

Mat = tuple  # flat r*r tuple of ints


def identity(r: int) -> Mat:
    return tuple(1 if a == b else 0 for a in range(r) for b in range(r))


def mul(x: Mat, y: Mat, r: int) -> Mat:
    out = [0] * (r * r)
    for a in range(r):
        row = a * r
        for k in range(r):
            xak = x[row + k]
            if xak:
                krow = k * r
                for b in range(r):
                    out[row + b] += xak * y[krow + b]
    return tuple(out)


def apply(m: Mat, v, r: int) -> tuple:
    return tuple(sum(m[a * r + b] * v[b] for b in range(r)) for a in range(r))


def lmul_s(m: Mat, i: int, cart: Mat, r: int) -> Mat:
    """Return ``s_i * m``; only row ``i`` changes."""
    out = list(m)
    irow = i * r
    for b in range(r):
        acc = 0
        for j in range(r):
            c = cart[irow + j]
            if c:
                acc += c * m[j * r + b]
        out[irow + b] = m[irow + b] - acc
    return tuple(out)


def rmul_s(m: Mat, i: int, cart: Mat, r: int) -> Mat:
    """Return ``m * s_i``; column ``k`` becomes ``col_k - c[i][k] col_i``."""
    out = list(m)
    irow = i * r
    for k in range(r):
        c = cart[irow + k]
        if c:
            for a in range(r):
                out[a * r + k] = m[a * r + k] - c * m[a * r + i]
    return tuple(out)


def _col_negative(m: Mat, b: int, r: int) -> bool:
    # a root has all coordinates of one sign, so the first nonzero decides
    for a in range(r):
        e = m[a * r + b]
        if e:
            return e < 0
    return False


def right_descent_mask(m: Mat, r: int) -> int:
    mask = 0
    for b in range(r):
        if _col_negative(m, b, r):
            mask |= 1 << b
    return mask


def _first_descent(m: Mat, r: int) -> int:
    for b in range(r):
        if _col_negative(m, b, r):
            return b
    return -1


def length(m: Mat, cart: Mat, r: int) -> int:
    n = 0
    i = _first_descent(m, r)
    while i >= 0:
        m = rmul_s(m, i, cart, r)
        n += 1
        i = _first_descent(m, r)
    return n


def inverse(m: Mat, cart: Mat, r: int) -> Mat:
    # strip right descents: m = s_{j_l} ... s_{j_1}, so m^-1 = s_{j_1} ... s_{j_l}
    inv = identity(r)
    i = _first_descent(m, r)
    while i >= 0:
        m = rmul_s(m, i, cart, r)
        inv = rmul_s(inv, i, cart, r)
        i = _first_descent(m, r)
    return inv


def reduced_word(m: Mat, cart: Mat, r: int) -> tuple:
    """Lexicographically smallest reduced word (0-based letters).

    The first letter of the lex-min word of ``w`` is its smallest left
    descent, i.e. the smallest right descent of ``w^-1``; peel those off.
    """
    inv = inverse(m, cart, r)
    word = []
    i = _first_descent(inv, r)
    while i >= 0:
        word.append(i)
        inv = rmul_s(inv, i, cart, r)
        i = _first_descent(inv, r)
    return tuple(word)


def from_word(word, cart: Mat, r: int) -> Mat:
    m = identity(r)
    for i in word:
        m = rmul_s(m, i, cart, r)
    return m


def bruhat_leq(u: Mat, w: Mat, cart: Mat, r: int) -> bool:
    """Subword test of ``u`` against a reduced word of ``w``.

    Walk a reduced word of ``w`` from the right; whenever the current letter
    is a right descent of (what remains of) ``u``, consume it from ``u`` too.
    ``u <= w`` iff ``u`` is exhausted at the end.
    """
    while True:
        i = _first_descent(w, r)
        if i < 0:
            return _first_descent(u, r) < 0
        if _col_negative(u, i, r):
            u = rmul_s(u, i, cart, r)
        w = rmul_s(w, i, cart, r)


def enumerate_subgroup(cart: Mat, r: int, gens_mask: int, limit: int):
    """All elements of the parabolic subgroup generated by ``gens_mask``.

    Returns ``(mats, words)`` ordered by length, then lexicographic reduced
    word, or ``None`` when more than ``limit`` elements would be produced.
    Lex-min reduced words are prefix closed, so extending each element of a
    level (taken in lex order) by increasing letters discovers the next level
    already sorted.
    """
    gens = [i for i in range(r) if gens_mask >> i & 1]
    e = identity(r)
    mats = [e]
    words = [()]
    seen = {e}
    level = [(e, ())]
    while level:
        nxt = []
        for m, wd in level:
            desc = right_descent_mask(m, r)
            for i in gens:
                if desc >> i & 1:
                    continue
                c = rmul_s(m, i, cart, r)
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
