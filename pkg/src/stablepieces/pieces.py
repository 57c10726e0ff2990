"""
Labels ``(J, w)`` of G-stable pieces, the beta-sequence attached to a label,
and the point-count polynomials of the pieces and of the compactification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import weyl as W
from .qpoly import Q, QPoly
from .rootsys import RootSystem, build, format_subset
from .weyl import WeylElem

__all__ = [
    "PieceLabel", "BetaStep", "BetaChain", "ChainError", "subsets", "ad_image",
    "w_J_of", "beta_sequence", "terminal_levi", "poincare_polynomial",
    "piece_count_poly", "group_compactification_count", "enumerate_pieces",
]


class ChainError(RuntimeError):
    """The beta-sequence did not stabilise within its step guard."""


@dataclass(frozen=True)
class PieceLabel:
    J: frozenset
    w: WeylElem

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))
        if not W.is_min_rep(self.w, self.J, "right"):
            raise ValueError(f"{self.w!r} is not in W^J for J={{{format_subset(self.J)}}}")

    def to_json(self) -> dict:
        return {"J": sorted(self.J), "w": W.format_word(self.w.reduced_word())}


def subsets(index_set) -> list:
    """All subsets of ``index_set``, by size then lexicographically."""
    items = sorted(index_set)
    return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]


def ad_image(v: WeylElem, J):
    """``Ad(v)J`` as an index set, or None if some ``v(alpha_j)`` is not simple."""
    out = set()
    for j in J:
        col = v.act_root(v.rs.simple_root(j))
        if sorted(col) != [0] * (len(col) - 1) + [1]:
            return None
        out.add(col.index(1) + 1)
    return frozenset(out)


def _check_label(J, w, rs):
    if not W.is_min_rep(w, J, "right"):
        raise ValueError(f"{w!r} is not in W^J for J={{{format_subset(J)}}}")


def w_J_of(J, w: WeylElem, rs=None) -> WeylElem:
    """``w_J = w_0 w_0^J w^-1``, which lies in ``^{J*}W``."""
    rs = w.rs if rs is None else build(rs) if not isinstance(rs, RootSystem) else rs
    J = frozenset(J)
    _check_label(J, w, rs)
    y0 = W.longest_element(rs.index_set, rs) * W.longest_element(J, rs)
    return y0 * w.inverse()


@dataclass
class BetaStep:
    J: frozenset
    J_prime: frozenset
    u: WeylElem
    y: WeylElem
    v: WeylElem

    def to_json(self) -> dict:
        return {
            "J": sorted(self.J),
            "J_prime": sorted(self.J_prime),
            "u": W.format_word(self.u.reduced_word()),
            "y": W.format_word(self.y.reduced_word()),
            "v": W.format_word(self.v.reduced_word()),
        }


@dataclass
class BetaChain:
    """The sequence ``(J_k, J'_k, u_k, y_k, v_k)`` of a piece label.

    ``v_k`` is the remaining part of ``w_J`` after ``u_0 ... u_{k-1}`` has been
    split off, so ``y_k = v_k w`` throughout.
    """

    J: frozenset
    w: WeylElem
    steps: list = field(default_factory=list)
    terminal: frozenset = frozenset()

    def product_u(self) -> WeylElem:
        out = W.identity(self.w.rs)
        for s in self.steps:
            out = out * s.u
        return out

    def check(self) -> list:
        """Return the list of violated chain invariants (empty when sound)."""
        bad = []
        w = self.w
        rs = w.rs
        steps = self.steps
        for k, s in enumerate(steps):
            if ad_image(s.y, s.J) != s.J_prime:
                bad.append(f"step {k}: J'_k != Ad(y_k)J_k")
            if not (W.is_min_rep(s.u, s.J, "right") and W.is_min_rep(s.u, s.J_prime, "left")):
                bad.append(f"step {k}: u_k not in ^J'_k W^J_k")
            if not (W.is_min_rep(s.y, s.J, "right") and W.is_min_rep(s.y, s.J_prime, "left")):
                bad.append(f"step {k}: y_k not in ^J'_k W^J_k")
            if s.y != s.v * w:
                bad.append(f"step {k}: y_k != v_k w")
            if k + 1 < len(steps):
                nxt = steps[k + 1]
                if not nxt.J <= s.J:
                    bad.append(f"step {k}: J_(k+1) not contained in J_k")
                if not nxt.u.support() <= s.J:
                    bad.append(f"step {k}: u_(k+1) not in W_J_k")
                if nxt.v != s.u.inverse() * s.v:
                    bad.append(f"step {k}: v_(k+1) != u_k^-1 v_k")
        if self.product_u() != w_J_of(self.J, w, rs):
            bad.append("u_0 ... u_n != w_J")
        if steps and not steps[-1].u.is_identity():
            bad.append("final u is not the identity")
        T = self.terminal
        if ad_image(w, T) != T:
            bad.append("Ad(w) does not preserve J_inf")
        if not (W.is_min_rep(w, T, "right") and W.is_min_rep(w, T, "left")):
            bad.append("w not in ^J_inf W^J_inf")
        return bad

    def to_json(self) -> dict:
        return {
            "J": sorted(self.J),
            "w": W.format_word(self.w.reduced_word()),
            "steps": [s.to_json() for s in self.steps],
            "J_inf": sorted(self.terminal),
        }


def beta_sequence(J, w: WeylElem, rs=None) -> BetaChain:
    """Run the beta-sequence for the label ``(J, w)``.

    Start from ``v_0 = w_J`` and ``y_0 = w_0 w_0^J``.  At each step ``u_k`` is
    the ``W^{J_k}`` factor of ``v_k``, then ``v_{k+1} = u_k^-1 v_k``,
    ``y_{k+1} = u_k^-1 y_k`` and ``J_{k+1}`` keeps those ``j`` in ``J_k`` for
    which ``y_{k+1}(alpha_j)`` is a simple root indexed by ``J_k``.  The
    sequence stops once ``u_k = 1`` and ``J_{k+1} = J_k``.
    """
    rs = w.rs if rs is None else build(rs) if not isinstance(rs, RootSystem) else rs
    J = frozenset(J)
    _check_label(J, w, rs)
    y = W.longest_element(rs.index_set, rs) * W.longest_element(J, rs)
    v = y * w.inverse()
    Jk = J
    chain = BetaChain(J=J, w=w)
    guard = 4 * rs.rank + 4
    for _ in range(guard):
        Jp = ad_image(y, Jk)
        u, _z = W.coset_decompose(v, Jk)
        chain.steps.append(BetaStep(Jk, Jp if Jp is not None else frozenset(), u, y, v))
        uinv = u.inverse()
        v = uinv * v
        y = uinv * y
        Jn = frozenset(j for j in Jk if (img := ad_image(y, (j,))) is not None and img <= Jk)
        if u.is_identity() and Jn == Jk:
            chain.terminal = Jk
            return chain
        Jk = Jn
    raise ChainError(f"beta-sequence for J={{{format_subset(J)}}}, w={w!r} did not stabilise "
                     f"within {guard} steps")


def terminal_levi(J, w: WeylElem, rs=None) -> frozenset:
    """``J_inf``: the simple roots of the terminal Levi of the piece."""
    return beta_sequence(J, w, rs).terminal


def poincare_polynomial(rs) -> QPoly:
    """``sum_{u in W} q^l(u)`` as a product of q-integers over the exponents.

    The exponents are read off the heights of positive roots: the number of
    exponents equal to ``h`` is ``#(height h) - #(height h+1)``.
    """
    rs = build(rs) if not isinstance(rs, RootSystem) else rs
    by_height = {}
    for beta in rs.positive_roots:
        by_height[sum(beta)] = by_height.get(sum(beta), 0) + 1
    out = QPoly.const(1)
    for h, n in by_height.items():
        for _ in range(n - by_height.get(h + 1, 0)):
            out = out * QPoly.q_integer(h + 1)
    return out


def piece_count_poly(p: PieceLabel, rs=None) -> QPoly:
    """``|Z_{J,w}|_q = P_W(q) (q-1)^|J| q^l(w_0 w)``."""
    rs = p.w.rs if rs is None else build(rs) if not isinstance(rs, RootSystem) else rs
    top = len(rs.positive_roots)
    return poincare_polynomial(rs) * (Q - 1) ** len(p.J) * QPoly.monomial(top - p.w.length())


def _weight(u: WeylElem) -> QPoly:
    # q^(l(u) + |L(u)|)
    return QPoly.monomial(u.length() + len(u.descents_right()))


def group_compactification_count(rs, bound=None) -> QPoly:
    """``|Gbar|_q = P_W(q) * sum_{w in W} q^(l(w_0 w) + |L(w_0 w)|)``."""
    rs = build(rs) if not isinstance(rs, RootSystem) else rs
    w0 = W.longest_element(rs.index_set, rs)
    total = QPoly()
    for w in W.enumerate_elements(rs, bound=bound):
        total = total + _weight(w0 * w)
    return poincare_polynomial(rs) * total


def enumerate_pieces(rs, bound=None) -> list:
    """Every label ``(J, w)`` with ``w`` in ``W^J``, ``J`` by size then lex."""
    rs = build(rs) if not isinstance(rs, RootSystem) else rs
    elements = W.enumerate_elements(rs, bound=bound)
    out = []
    for J in subsets(rs.index_set):
        for w in elements:
            if not (w.descents_right() & J):
                out.append(PieceLabel(J, w))
    return out
