"""
Irreducible reduced root systems with Bourbaki labelling.

Roots are integer vectors in the simple-root basis, coweights are rational
vectors in the simple-coroot basis, and the pairing between them goes through
the Cartan matrix ``c[i][j] = <alpha_i^vee, alpha_j>``.  Indices in the public
API are the 1-based Bourbaki labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
import re

from .linalg import inverse_matrix

__all__ = [
    "SeriesRank", "RootSystem", "build", "pairing", "fundamental_coweight",
    "simple_coroot", "orthogonal_simple_set", "reflect_root", "reflect_coweight",
    "format_subset", "parse_subset",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class SeriesRank:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"invalid rank {n!r}")
        if s in _MIN_RANK:
            if n < _MIN_RANK[s]:
                raise ValueError(f"type {s}{n} does not exist (rank must be >= {_MIN_RANK[s]})")
        elif s in _EXCEPTIONAL:
            if n not in _EXCEPTIONAL[s]:
                raise ValueError(f"type {s}{n} does not exist")
        else:
            raise ValueError(f"unknown series {s!r}")

    @classmethod
    def parse(cls, text: str) -> "SeriesRank":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse root system type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


# Exceptional Cartan matrices, transcribed from the Bourbaki plates.
# Row i, column j holds <alpha_i^vee, alpha_j>.
_CARTAN_G2 = (
    (2, -3),
    (-1, 2),
)
_CARTAN_F4 = (
    (2, -1, 0, 0),
    (-1, 2, -1, 0),
    (0, -2, 2, -1),
    (0, 0, -1, 2),
)
_CARTAN_E8 = (
    (2, 0, -1, 0, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)

# Highest roots in the simple-root basis (Bourbaki plates I-IX).
_HIGHEST_EXCEPTIONAL = {
    ("E", 6): (1, 2, 2, 3, 2, 1),
    ("E", 7): (2, 2, 3, 4, 3, 2, 1),
    ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
    ("F", 4): (2, 3, 4, 2),
    ("G", 2): (3, 2),
}


def _classical_cartan(series: str, n: int):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for i in range(n - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    if series == "B":
        # alpha_n short
        c[n - 1][n - 2] = -2
    elif series == "C":
        # alpha_n long
        c[n - 2][n - 1] = -2
    elif series == "D":
        # alpha_{n-2} branches to alpha_{n-1} and alpha_n
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
    return tuple(tuple(row) for row in c)


def _highest_classical(series: str, n: int):
    if series == "A":
        return (1,) * n
    if series == "B":
        return (1,) + (2,) * (n - 1)
    if series == "C":
        return (2,) * (n - 1) + (1,)
    # D_n, n >= 4; D_3 = A_3 with the labelling 2-1-3
    if n == 3:
        return (1, 1, 1)
    return (1,) + (2,) * (n - 3) + (1, 1)


def _cartan(t: SeriesRank):
    if t.series in "ABCD":
        return _classical_cartan(t.series, t.rank)
    if t.series == "G":
        return _CARTAN_G2
    if t.series == "F":
        return _CARTAN_F4
    n = t.rank
    return tuple(row[:n] for row in _CARTAN_E8[:n])


class RootSystem:
    """Cartan data and positive roots of one irreducible type."""

    def __init__(self, type: SeriesRank):
        self.type = type
        self.rank = n = type.rank
        self.cartan = _cartan(type)
        self.cart_flat = tuple(x for row in self.cartan for x in row)
        self.index_set = frozenset(range(1, n + 1))
        self.positive_roots = self._close_roots()
        self._pos_set = frozenset(self.positive_roots)

    def __repr__(self):
        return f"RootSystem({self.type})"

    def _close_roots(self):
        n = self.rank
        simple = [tuple(int(a == b) for a in range(n)) for b in range(n)]
        seen = set(simple) | {tuple(-x for x in v) for v in simple}
        todo = list(seen)
        while todo:
            beta = todo.pop()
            for i in range(1, n + 1):
                gamma = reflect_root(beta, i, self)
                if gamma not in seen:
                    seen.add(gamma)
                    todo.append(gamma)
        pos = [v for v in seen if all(x >= 0 for x in v)]
        pos.sort(key=lambda v: (sum(v), tuple(-x for x in v)))
        return tuple(pos)

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in self._pos_set or tuple(-x for x in v) in self._pos_set

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self._pos_set

    @property
    def highest_root(self):
        return self.positive_roots[-1]

    @property
    def bourbaki_highest_root(self):
        s, n = self.type.series, self.rank
        if s in "ABCD":
            return _highest_classical(s, n)
        return _HIGHEST_EXCEPTIONAL[(s, n)]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0

    def neighbours(self, i: int) -> frozenset:
        return frozenset(j for j in self.index_set if self.adjacent(i, j))

    @cached_property
    def symmetrizer(self) -> tuple:
        """Half squared lengths ``d_i`` of the simple roots, smallest equal 1.

        ``(alpha_i, alpha_j) = d_i * c[i][j]``.
        """
        n = self.rank
        d = [None] * n
        d[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(n):
                if d[j] is None and self.cartan[i][j]:
                    d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                    todo.append(j)
        m = min(d)
        return tuple(int(x / m) for x in d)

    @cached_property
    def cartan_inverse(self):
        return inverse_matrix(self.cartan)

    def simple_root(self, i: int) -> tuple:
        _check_index(i, self)
        return tuple(int(a == i - 1) for a in range(self.rank))

    def coroot_of(self, beta) -> tuple:
        """The coroot of a root, in the simple-coroot basis."""
        if not self.is_root(beta):
            raise ValueError(f"{beta} is not a root of {self.type}")
        d = self.symmetrizer
        n = self.rank
        # (beta, beta) / 2 from the invariant form (alpha_i, alpha_j) = d_i c[i][j]
        d_beta = Fraction(sum(d[i] * self.cartan[i][j] * beta[i] * beta[j]
                              for i in range(n) for j in range(n)), 2)
        out = tuple(beta[j] * d[j] / d_beta for j in range(n))
        return tuple(int(x) for x in out)


@lru_cache(maxsize=None)
def _build_cached(series: str, rank: int) -> RootSystem:
    return RootSystem(SeriesRank(series, rank))


def build(type) -> RootSystem:
    """Root system of the given type (``SeriesRank`` or a string like ``"E6"``)."""
    if isinstance(type, str):
        type = SeriesRank.parse(type)
    return _build_cached(type.series, type.rank)


def _check_index(i, rs):
    if not (isinstance(i, int) and 1 <= i <= rs.rank):
        raise ValueError(f"index {i!r} out of range for {rs.type}")


def _check_dim(v, rs):
    if len(v) != rs.rank:
        raise ValueError(f"vector of length {len(v)} does not match rank {rs.rank}")


def pairing(lam, beta, rs: RootSystem) -> Fraction:
    """``<lam, beta>`` for a coweight ``lam`` and a root-lattice vector ``beta``."""
    _check_dim(lam, rs)
    _check_dim(beta, rs)
    c = rs.cartan
    n = rs.rank
    return sum((Fraction(lam[i]) * c[i][j] * beta[j]
                for i in range(n) for j in range(n) if lam[i] and beta[j]), Fraction(0))


def _pair_simple(lam, j: int, rs: RootSystem):
    # <lam, alpha_j>, 0-based j
    c = rs.cartan
    return sum(Fraction(lam[i]) * c[i][j] for i in range(rs.rank) if lam[i])


def simple_coroot(i: int, rs: RootSystem) -> tuple:
    _check_index(i, rs)
    return tuple(Fraction(int(a == i - 1)) for a in range(rs.rank))


def fundamental_coweight(i: int, rs: RootSystem) -> tuple:
    """``omega_i^vee`` in the simple-coroot basis: row ``i`` of the inverse Cartan matrix."""
    _check_index(i, rs)
    return tuple(rs.cartan_inverse[i - 1])


def orthogonal_simple_set(lam, rs: RootSystem) -> frozenset:
    """``I(lam)``: simple indices ``j`` with ``<lam, alpha_j> = 0``."""
    _check_dim(lam, rs)
    return frozenset(j + 1 for j in range(rs.rank) if _pair_simple(lam, j, rs) == 0)


def reflect_root(beta, i: int, rs: RootSystem) -> tuple:
    """``s_i(beta) = beta - <alpha_i^vee, beta> alpha_i``."""
    row = rs.cartan[i - 1]
    k = sum(row[j] * beta[j] for j in range(rs.rank))
    out = list(beta)
    out[i - 1] -= k
    return tuple(out)


def reflect_coweight(lam, i: int, rs: RootSystem) -> tuple:
    """``s_i(lam) = lam - <lam, alpha_i> alpha_i^vee``."""
    k = _pair_simple(lam, i - 1, rs)
    out = [Fraction(x) for x in lam]
    out[i - 1] -= k
    return tuple(out)


def format_subset(J) -> str:
    return ",".join(str(j) for j in sorted(J))


def parse_subset(text: str) -> frozenset:
    text = text.strip()
    if text in ("", "-"):
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse index set {text!r}") from None
