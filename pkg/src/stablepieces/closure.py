"""
Closures of ``B x B``-orbits ``[J, x, w]`` and the pieces making up the
boundary of the unipotent variety.

The boundary listed by ``boundary_pieces`` (and counted by
``boundary_count_poly``) is the same for the closure of every Steinberg
fiber, not only for the unipotent one, so no separate fiber API exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import weyl as W
from .coxeter import is_coxeter
from .pieces import PieceLabel, _weight, poincare_polynomial, subsets
from .qpoly import QPoly
from .rootsys import RootSystem, build, format_subset
from .weyl import WeylElem

__all__ = [
    "OrbitLabel", "ClosureWitness", "normalize_orbit", "orbit_closure_contains",
    "orbit_labels", "closure_matrix", "boundary_pieces", "boundary_count_poly",
    "coxeter_piece_closure",
]

# groups up to this order are handled with numpy tables
TABLE_LIMIT = 5000


@dataclass(frozen=True)
class OrbitLabel:
    J: frozenset
    x: WeylElem
    w: WeylElem

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))
        if not W.is_min_rep(self.x, self.J, "right"):
            raise ValueError(f"{self.x!r} is not in W^J for J={{{format_subset(self.J)}}}")

    @property
    def rs(self) -> RootSystem:
        return self.x.rs

    def to_json(self) -> dict:
        return {"J": sorted(self.J), "x": W.format_word(self.x.reduced_word()),
                "w": W.format_word(self.w.reduced_word())}


@dataclass(frozen=True)
class ClosureWitness:
    contains: bool
    u: Optional[WeylElem] = None
    v: Optional[WeylElem] = None

    def __bool__(self):
        return self.contains

    def to_json(self) -> dict:
        out = {"contains": self.contains}
        if self.contains:
            out["u"] = W.format_word(self.u.reduced_word())
            out["v"] = W.format_word(self.v.reduced_word())
        return out


def normalize_orbit(J, u: WeylElem, v: WeylElem) -> OrbitLabel:
    """``[J, u, v] = [J, x, v z^-1]`` where ``u = x z``, ``x`` in ``W^J``."""
    x, z = W.coset_decompose(u, J)
    return OrbitLabel(frozenset(J), x, v * z.inverse())


def _use_table(rs) -> bool:
    return W.group_order(rs) <= TABLE_LIMIT


def _contains_table(a: OrbitLabel, b: OrbitLabel) -> ClosureWitness:
    g = W.indexed_group(a.rs)
    mult, leq, ln, inv = g.mult, g.leq, g.length, g.inv
    U = g.subgroup(b.J)
    V = np.intersect1d(g.subgroup(a.J), g.min_reps(b.J, "right"))
    x, w = g.idx(a.x), g.idx(a.w)
    x2, w2 = g.idx(b.x), g.idx(b.w)
    wv = mult[w, V]
    keep = ln[wv] == ln[w] + ln[V]
    if not keep.any():
        return ClosureWitness(False)
    V, wv = V[keep], wv[keep]
    xv = mult[x, V]
    c1 = leq[mult[xv[:, None], inv[U][None, :]], x2]
    c2 = leq[mult[w2, U][None, :], wv[:, None]]
    hit = np.argwhere(c1 & c2)
    if not len(hit):
        return ClosureWitness(False)
    i, j = hit[0]
    return ClosureWitness(True, g.elem(U[j]), g.elem(V[i]))


def _contains_direct(a: OrbitLabel, b: OrbitLabel, bound=None) -> ClosureWitness:
    rs = a.rs
    Us = W.enumerate_elements(rs, subgroup=b.J, bound=bound)
    Vs = W.enumerate_elements(rs, subgroup=a.J, right=b.J, bound=bound)
    lw = a.w.length()
    for v in Vs:
        wv = a.w * v
        if wv.length() != lw + v.length():
            continue
        xv = a.x * v
        for u in Us:
            if W.bruhat_leq(xv * u.inverse(), b.x) and W.bruhat_leq(b.w * u, wv):
                return ClosureWitness(True, u, v)
    return ClosureWitness(False)


def orbit_closure_contains(a: OrbitLabel, b: OrbitLabel, bound=None) -> ClosureWitness:
    """Decide whether ``b`` lies in the closure of ``a``.

    True iff ``K`` is contained in ``J`` and some ``u`` in ``W_K`` and ``v`` in
    ``W_J`` with ``v`` in ``W^K`` satisfy ``x v u^-1 <= x'``, ``w' u <= w v``
    and ``l(wv) = l(w) + l(v)``, where ``a = [J, x, w]`` and
    ``b = [K, x', w']``.  The result is truthy and carries ``(u, v)``.
    """
    if a.rs is not b.rs:
        raise ValueError("orbit labels of different types")
    if not b.J <= a.J:
        return ClosureWitness(False)
    if _use_table(a.rs):
        return _contains_table(a, b)
    return _contains_direct(a, b, bound)


def orbit_labels(rs, bound=None) -> list:
    """All ``[J, x, w]`` with ``x`` in ``W^J``."""
    rs = build(rs) if not isinstance(rs, RootSystem) else rs
    els = W.enumerate_elements(rs, bound=bound)
    out = []
    for J in subsets(rs.index_set):
        for x in els:
            if not (x.descents_right() & J):
                out.extend(OrbitLabel(J, x, w) for w in els)
    return out


def closure_matrix(labels) -> np.ndarray:
    """``m[p, q]`` is True iff ``labels[q]`` lies in the closure of ``labels[p]``."""
    n = len(labels)
    m = np.zeros((n, n), dtype=bool)
    for p, a in enumerate(labels):
        for q, b in enumerate(labels):
            m[p, q] = bool(orbit_closure_contains(a, b))
    return m


def boundary_pieces(rs, bound=None) -> list:
    """Labels ``(J, w)``, ``J`` a proper subset of ``I``, ``w`` in ``W^J`` of full support."""
    rs = build(rs) if not isinstance(rs, RootSystem) else rs
    I = rs.index_set
    full = [w for w in W.enumerate_elements(rs, bound=bound) if w.support() == I]
    return [PieceLabel(J, w) for J in subsets(I) if J != I
            for w in full if not (w.descents_right() & J)]


def boundary_count_poly(rs, bound=None) -> QPoly:
    """``P_W(q) * sum over full-support w of q^(l(w_0 w) + |L(w_0 w)|)``."""
    rs = build(rs) if not isinstance(rs, RootSystem) else rs
    w0 = W.longest_element(rs.index_set, rs)
    total = QPoly()
    for w in W.enumerate_elements(rs, bound=bound):
        if w.support() == rs.index_set:
            total = total + _weight(w0 * w)
    return poincare_polynomial(rs) * total


def coxeter_piece_closure(i: int, w: WeylElem, rs=None, bound=None) -> list:
    """Pieces in the closure of ``Z_{I-{i}, w}`` for a Coxeter element ``w``.

    These are the ``(K, w')`` with ``K`` inside ``I - {i}``, ``w'`` in
    ``W^K`` and ``supp(w') = I``.
    """
    rs = w.rs if rs is None else build(rs) if not isinstance(rs, RootSystem) else rs
    if i not in rs.index_set:
        raise ValueError(f"index {i} out of range for {rs.type}")
    J = rs.index_set - {i}
    if not is_coxeter(w):
        raise ValueError(f"{w!r} is not a Coxeter element")
    if not W.is_min_rep(w, J, "right"):
        raise ValueError(f"{w!r} is not in W^J for J={{{format_subset(J)}}}")
    I = rs.index_set
    full = [x for x in W.enumerate_elements(rs, bound=bound) if x.support() == I]
    return [PieceLabel(K, x) for K in subsets(J) for x in full if not (x.descents_right() & K)]
