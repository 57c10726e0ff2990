"""
Weyl-group elements, parabolic cosets and Bruhat order.

An element is stored as the integer matrix of its action on the simple-root
basis, so equality is matrix equality and no normal form of words is needed.
Reduced words are the lexicographically smallest ones (the smallest descent is
always peeled first), which keeps every printed word deterministic.

Full enumeration of a group is refused above a configurable bound
(``DEFAULT_BOUND``); everything else works by element arithmetic alone, so E7
and E8 computations never enumerate ``W``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
import math
import operator

import numpy as np

from . import kernels as K
from .rootsys import RootSystem, build

__all__ = [
    "DEFAULT_BOUND", "EnumerationBoundError", "WeylElem", "identity",
    "simple_reflection", "from_word", "parse_word", "format_word", "length",
    "reduced_word", "descents_right", "descents_left", "support",
    "longest_element", "is_min_rep", "coset_decompose", "left_coset_decompose",
    "min_double_rep", "bruhat_leq", "group_order", "enumerate_elements",
    "IndexedGroup", "indexed_group", "set_default_bound",
]

DEFAULT_BOUND = 10**6


def set_default_bound(bound: int) -> None:
    global DEFAULT_BOUND
    DEFAULT_BOUND = int(bound)


class EnumerationBoundError(RuntimeError):
    """Raised instead of enumerating a group larger than the configured bound."""

    def __init__(self, order: int, bound: int, what: str = "W"):
        self.order = order
        self.bound = bound
        super().__init__(f"refusing to enumerate {what}: group order {order} exceeds bound {bound}")


class WeylElem:
    __slots__ = ("rs", "mat", "_inv", "_len", "_word", "_hash")

    def __init__(self, rs: RootSystem, mat: tuple):
        self.rs = rs
        self.mat = mat
        self._inv = None
        self._len = None
        self._word = None
        self._hash = None

    @property
    def rank(self) -> int:
        return self.rs.rank

    def __eq__(self, other):
        if not isinstance(other, WeylElem):
            return NotImplemented
        return self.rs is other.rs and self.mat == other.mat

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.mat)
        return self._hash

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        if not isinstance(other, WeylElem):
            return NotImplemented
        if other.rs is not self.rs:
            raise ValueError("elements of different Weyl groups")
        return WeylElem(self.rs, K.mul(self.mat, other.mat, self.rank))

    def __pow__(self, k: int) -> "WeylElem":
        base = self if k >= 0 else self.inverse()
        out = identity(self.rs)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __repr__(self):
        return f"WeylElem({self.rs.type}, [{format_word(self.reduced_word())}])"

    def inverse(self) -> "WeylElem":
        if self._inv is None:
            inv = WeylElem(self.rs, K.inverse(self.mat, self.rs.cart_flat, self.rank))
            inv._inv = self
            self._inv = inv
        return self._inv

    def length(self) -> int:
        if self._len is None:
            self._len = K.length(self.mat, self.rs.cart_flat, self.rank)
        return self._len

    def reduced_word(self) -> tuple:
        if self._word is None:
            self._word = tuple(a + 1 for a in K.reduced_word(self.mat, self.rs.cart_flat, self.rank))
            self._len = len(self._word)
        return self._word

    def is_identity(self) -> bool:
        return self.mat == K.identity(self.rank)

    def act_root(self, beta) -> tuple:
        return tuple(K.apply(self.mat, tuple(beta), self.rank))

    def act_coweight(self, lam) -> tuple:
        """Action on a coweight written in the simple-coroot basis.

        ``w(alpha_k^vee) = (w alpha_k)^vee`` and ``w`` preserves root lengths,
        so the coroot matrix is ``D M D^-1`` with ``D`` the symmetrizer.
        """
        r = self.rank
        d = self.rs.symmetrizer
        m = self.mat
        return tuple(sum((Fraction(m[a * r + b] * d[a], d[b]) * lam[b] for b in range(r) if lam[b]),
                         Fraction(0)) for a in range(r))

    def descents_right(self) -> frozenset:
        mask = K.right_descent_mask(self.mat, self.rank)
        return frozenset(i + 1 for i in range(self.rank) if mask >> i & 1)

    def descents_left(self) -> frozenset:
        return self.inverse().descents_right()

    def support(self) -> frozenset:
        return frozenset(self.reduced_word())

    def lmul_simple(self, i: int) -> "WeylElem":
        return WeylElem(self.rs, K.lmul_s(self.mat, i - 1, self.rs.cart_flat, self.rank))

    def rmul_simple(self, i: int) -> "WeylElem":
        return WeylElem(self.rs, K.rmul_s(self.mat, i - 1, self.rs.cart_flat, self.rank))

    def sends_positive(self, i: int) -> bool:
        """True when ``w(alpha_i)`` is a positive root."""
        return not (K.right_descent_mask(self.mat, self.rank) >> (i - 1) & 1)


def _rs(rs) -> RootSystem:
    return build(rs) if not isinstance(rs, RootSystem) else rs


def identity(rs) -> WeylElem:
    rs = _rs(rs)
    return WeylElem(rs, K.identity(rs.rank))


def simple_reflection(i: int, rs) -> WeylElem:
    return from_word((i,), rs)


def _check_letters(word, rs):
    for a in word:
        if not (isinstance(a, int) and 1 <= a <= rs.rank):
            raise ValueError(f"letter {a!r} out of range for {rs.type}")


def from_word(word, rs) -> WeylElem:
    """Product ``s_{a_1} s_{a_2} ... s_{a_k}`` of simple reflections."""
    rs = _rs(rs)
    word = tuple(word)
    _check_letters(word, rs)
    return WeylElem(rs, K.from_word(tuple(a - 1 for a in word), rs.cart_flat, rs.rank))


def parse_word(text: str) -> tuple:
    """Parse ``"2 1 3 2"``; ``""`` and ``"-"`` are the empty word."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None


def format_word(word) -> str:
    return " ".join(str(a) for a in word)


def length(w: WeylElem) -> int:
    return w.length()


def reduced_word(w: WeylElem) -> tuple:
    return w.reduced_word()


def descents_right(w: WeylElem) -> frozenset:
    """``L(w) = {i : l(w s_i) < l(w)}``."""
    return w.descents_right()


def descents_left(w: WeylElem) -> frozenset:
    return w.descents_left()


def support(w: WeylElem) -> frozenset:
    return w.support()


def longest_element(J, rs) -> WeylElem:
    """``w_0^J``: climb by right multiplication until every ``s_j``, ``j`` in ``J``, is a descent."""
    rs = _rs(rs)
    J = frozenset(J)
    mat = K.identity(rs.rank)
    mask = sum(1 << (j - 1) for j in J)
    while True:
        asc = mask & ~K.right_descent_mask(mat, rs.rank)
        if not asc:
            return WeylElem(rs, mat)
        i = (asc & -asc).bit_length() - 1
        mat = K.rmul_s(mat, i, rs.cart_flat, rs.rank)


def is_min_rep(w: WeylElem, J, side: str = "right") -> bool:
    """Membership in ``W^J`` (side ``"right"``) or ``^J W`` (side ``"left"``)."""
    if side == "left":
        w = w.inverse()
    elif side != "right":
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return not (w.descents_right() & frozenset(J))


def coset_decompose(w: WeylElem, J):
    """``w = x z`` with ``x`` in ``W^J`` and ``z`` in ``W_J`` (lengths add)."""
    J = frozenset(J)
    rs = w.rs
    mask = sum(1 << (j - 1) for j in J)
    x = w.mat
    zword = []
    while True:
        d = mask & K.right_descent_mask(x, rs.rank)
        if not d:
            break
        i = (d & -d).bit_length() - 1
        x = K.rmul_s(x, i, rs.cart_flat, rs.rank)
        zword.append(i)
    z = K.from_word(tuple(reversed(zword)), rs.cart_flat, rs.rank)
    return WeylElem(rs, x), WeylElem(rs, z)


def left_coset_decompose(w: WeylElem, J):
    """``w = z x`` with ``z`` in ``W_J`` and ``x`` in ``^J W``."""
    x, z = coset_decompose(w.inverse(), J)
    return z.inverse(), x.inverse()


def min_double_rep(w: WeylElem, J, K_) -> WeylElem:
    """The minimal-length element of ``W_J w W_K``."""
    J, K_ = frozenset(J), frozenset(K_)
    while True:
        dl = w.descents_left() & J
        if dl:
            w = w.lmul_simple(min(dl))
            continue
        dr = w.descents_right() & K_
        if dr:
            w = w.rmul_simple(min(dr))
            continue
        return w


def bruhat_leq(u: WeylElem, w: WeylElem) -> bool:
    if u.rs is not w.rs:
        raise ValueError("elements of different Weyl groups")
    return K.bruhat_leq(u.mat, w.mat, u.rs.cart_flat, u.rank)


def _det(a) -> Fraction:
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next(k for k in range(c, n) if m[k][c] != 0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for k in range(c + 1, n):
            f = m[k][c] / m[c][c]
            if f:
                m[k] = [x - f * y for x, y in zip(m[k], m[c])]
    return det


def _components(J, rs):
    J = set(J)
    comps = []
    while J:
        stack = [J.pop()]
        comp = set(stack)
        while stack:
            i = stack.pop()
            for j in list(J):
                if rs.adjacent(i, j):
                    J.discard(j)
                    comp.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def group_order(rs, J=None) -> int:
    """``|W_J|`` (``|W|`` when ``J`` is None), without enumerating.

    Each irreducible component contributes ``k! * f * prod(m_i)``, where the
    ``m_i`` are the coefficients of its highest root and ``f`` is the
    determinant of its Cartan matrix.
    """
    rs = _rs(rs)
    J = rs.index_set if J is None else frozenset(J)
    order = 1
    for comp in _components(J, rs):
        idx = [j - 1 for j in comp]
        sub = [[rs.cartan[a][b] for b in idx] for a in idx]
        roots = [beta for beta in rs.positive_roots
                 if all(beta[k] == 0 for k in range(rs.rank) if k not in idx)]
        top = max(roots, key=sum)
        coeffs = reduce(operator.mul, (top[k] for k in idx), 1)
        order *= math.factorial(len(comp)) * int(_det(sub)) * coeffs
    return order


def enumerate_elements(rs, subgroup=None, right=None, left=None, bound=None) -> list:
    """Elements of ``W_subgroup`` (all of ``W`` by default), optionally
    restricted to ``^left W ^right``.

    Order is by length, then lexicographic reduced word.  Raises
    ``EnumerationBoundError`` when the group to be walked is larger than
    ``bound`` (default ``DEFAULT_BOUND``).
    """
    rs = _rs(rs)
    bound = DEFAULT_BOUND if bound is None else bound
    gens = rs.index_set if subgroup is None else frozenset(subgroup)
    order = group_order(rs, gens)
    if order > bound:
        what = "W" if gens == rs.index_set else f"W_J for J={{{','.join(map(str, sorted(gens)))}}}"
        raise EnumerationBoundError(order, bound, what)
    mask = sum(1 << (j - 1) for j in gens)
    mats, words = K.enumerate_subgroup(rs.cart_flat, rs.rank, mask, order)
    out = []
    for m, wd in zip(mats, words):
        w = WeylElem(rs, m)
        w._word = tuple(a + 1 for a in wd)
        w._len = len(wd)
        out.append(w)
    if right:
        out = [w for w in out if is_min_rep(w, right, "right")]
    if left:
        out = [w for w in out if is_min_rep(w, left, "left")]
    return out


class IndexedGroup:
    """Table representation of a small Weyl group.

    Elements are numbered in enumeration order (length, then lex reduced
    word); generator actions, lengths, inverses and descent masks are numpy
    arrays.  The multiplication table and the Bruhat-order matrix are built on
    first use.
    """

    def __init__(self, rs, bound=None):
        rs = _rs(rs)
        self.rs = rs
        self.elements = enumerate_elements(rs, bound=bound)
        n = self.n = len(self.elements)
        r = rs.rank
        self.index = {w.mat: k for k, w in enumerate(self.elements)}
        self.length = np.array([w.length() for w in self.elements], dtype=np.int32)
        self.parent = np.full(n, -1, dtype=np.int64)
        self.last = np.full(n, -1, dtype=np.int64)
        words = [w.reduced_word() for w in self.elements]
        self.words = words
        word_index = {wd: k for k, wd in enumerate(words)}
        for k, wd in enumerate(words):
            if wd:
                self.parent[k] = word_index[wd[:-1]]
                self.last[k] = wd[-1] - 1
        self.rgen = np.empty((r, n), dtype=np.int64)
        self.lgen = np.empty((r, n), dtype=np.int64)
        for k, w in enumerate(self.elements):
            for a in range(r):
                self.rgen[a, k] = self.index[K.rmul_s(w.mat, a, rs.cart_flat, r)]
                self.lgen[a, k] = self.index[K.lmul_s(w.mat, a, rs.cart_flat, r)]
        self.rdesc = np.array([K.right_descent_mask(w.mat, r) for w in self.elements], dtype=np.int64)
        self.inv = np.array([self.index[K.inverse(w.mat, rs.cart_flat, r)] for w in self.elements],
                            dtype=np.int64)
        self.ldesc = self.rdesc[self.inv]
        self.support_mask = np.array([sum(1 << (a - 1) for a in set(wd)) for wd in words],
                                     dtype=np.int64)
        self._mult = None
        self._leq = None

    def idx(self, w: WeylElem) -> int:
        return self.index[w.mat]

    def elem(self, k: int) -> WeylElem:
        return self.elements[int(k)]

    @staticmethod
    def mask(J) -> int:
        return sum(1 << (j - 1) for j in J)

    def subgroup(self, J) -> np.ndarray:
        """Indices of ``W_J``."""
        m = self.mask(J)
        return np.nonzero((self.support_mask & ~m) == 0)[0]

    def min_reps(self, J, side: str = "right") -> np.ndarray:
        m = self.mask(J)
        desc = self.rdesc if side == "right" else self.ldesc
        return np.nonzero((desc & m) == 0)[0]

    @property
    def mult(self) -> np.ndarray:
        """``mult[u, w]`` is the index of ``u w``."""
        if self._mult is None:
            n = self.n
            t = np.empty((n, n), dtype=np.int64)
            t[:, 0] = np.arange(n)
            for k in range(1, n):
                t[:, k] = self.rgen[self.last[k], t[:, self.parent[k]]]
            self._mult = t
        return self._mult

    @property
    def leq(self) -> np.ndarray:
        """Bruhat order: ``leq[u, w]`` is True iff ``u <= w``.

        Column ``w`` comes from column ``w s`` for the last letter ``s`` of
        its word: ``u <= w`` iff ``u s <= w s`` when ``u s < u``, and iff
        ``u <= w s`` otherwise.
        """
        if self._leq is None:
            n = self.n
            t = np.zeros((n, n), dtype=bool)
            t[0, 0] = True
            u = np.arange(n)
            for k in range(1, n):
                a = self.last[k]
                p = self.parent[k]
                has = (self.rdesc >> a) & 1 == 1
                t[:, k] = np.where(has, t[self.rgen[a, u], p], t[u, p])
            self._leq = t
        return self._leq


_INDEXED = {}


def indexed_group(rs, bound=None) -> IndexedGroup:
    rs = _rs(rs)
    key = rs.type
    if key not in _INDEXED:
        _INDEXED[key] = IndexedGroup(rs, bound=bound)
    return _INDEXED[key]
