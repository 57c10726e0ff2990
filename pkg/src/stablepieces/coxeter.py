"""
Coxeter elements: enumeration, conjugation by cyclic shifts, finding a
Coxeter element below a full-support element, and the layered Coxeter
element ``w^J`` attached to a node ``i`` together with its beta-sequence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import weyl as W
from .rootsys import RootSystem, build, format_subset
from .weyl import WeylElem

__all__ = [
    "is_coxeter", "enumerate_coxeter", "conjugating_sequence", "coxeter_below",
    "layers", "layer_product", "w_J_coxeter", "ClaimReport",
    "check_layer_closed_forms",
]


def _rs(rs) -> RootSystem:
    return build(rs) if not isinstance(rs, RootSystem) else rs


def is_coxeter(w: WeylElem) -> bool:
    n = w.rank
    return w.length() == n and len(w.support()) == n


def _edges(rs):
    return [(a, b) for a in sorted(rs.index_set) for b in sorted(rs.index_set)
            if a < b and rs.adjacent(a, b)]


def enumerate_coxeter(rs) -> list:
    """All Coxeter elements, sorted by reduced word.

    A Coxeter element only depends on which of two adjacent letters comes
    first, and the Dynkin diagram is a tree, so each of the ``2^(r-1)``
    orientations of its edges gives exactly one element: read off any
    topological order of the orientation.
    """
    rs = _rs(rs)
    edges = _edges(rs)
    out = set()
    for bits in range(1 << len(edges)):
        before = {i: set() for i in rs.index_set}
        for k, (a, b) in enumerate(edges):
            if bits >> k & 1:
                before[b].add(a)
            else:
                before[a].add(b)
        order, placed = [], set()
        while len(order) < rs.rank:
            nxt = min(i for i in rs.index_set if i not in placed and before[i] <= placed)
            order.append(nxt)
            placed.add(nxt)
        out.add(W.from_word(order, rs))
    return sorted(out, key=lambda c: c.reduced_word())


def conjugating_sequence(c: WeylElem, c2: WeylElem, i: int, rs=None) -> tuple:
    """A word ``g`` over ``I - {i}`` with ``g c g^-1 = c2``.

    Breadth-first search over cyclic shifts ``c -> s_a c s_a`` (``a`` a left
    descent of ``c``).  A shift by ``a != i`` is conjugation by ``s_a``; a
    shift by ``i`` itself equals conjugation by ``s_i c``, whose support
    avoids ``i``.
    """
    rs = c.rs if rs is None else _rs(rs)
    if not (is_coxeter(c) and is_coxeter(c2)):
        raise ValueError("both elements must be Coxeter elements")
    if i not in rs.index_set:
        raise ValueError(f"index {i} out of range for {rs.type}")
    prev = {c: None}
    todo = deque([c])
    while todo:
        cur = todo.popleft()
        if cur == c2:
            break
        for a in sorted(cur.descents_left()):
            nxt = cur.lmul_simple(a).rmul_simple(a)
            if nxt not in prev:
                g = (a,) if a != i else cur.lmul_simple(i).reduced_word()
                prev[nxt] = (cur, g)
                todo.append(nxt)
    else:
        raise RuntimeError("cyclic-shift graph is disconnected; this cannot happen")
    word = ()
    cur = c2
    while prev[cur] is not None:
        cur, g = prev[cur]
        word = word + g
    # collected newest conjugator first, which is the required order
    return W.from_word(word, rs).reduced_word()


def coxeter_below(J, w: WeylElem, rs=None) -> WeylElem:
    """A Coxeter element ``w'`` in ``W^J`` with ``w' <= w``.

    Requires ``w`` in ``W^J`` with full support.  Peel the smallest left
    descent ``s_i``: if the rest still has the same support recurse on it,
    otherwise recurse inside ``W_{K - {i}}`` and put ``s_i`` back in front.
    Other descents are tried only if the smallest one leads nowhere.
    """
    rs = w.rs if rs is None else _rs(rs)
    J = frozenset(J)
    if not W.is_min_rep(w, J, "right"):
        raise ValueError(f"{w!r} is not in W^J for J={{{format_subset(J)}}}")
    if w.support() != rs.index_set:
        raise ValueError(f"{w!r} does not have full support")
    out = _below(J, w, rs.index_set, {})
    if out is None:
        raise RuntimeError(f"no Coxeter element of W^J found below {w!r}")
    return out


def _below(J, w, K, memo):
    key = (w, K)
    if key in memo:
        return memo[key]
    if w.length() == len(K):
        memo[key] = w
        return w
    res = None
    for i in sorted(w.descents_left()):
        w1 = w.lmul_simple(i)
        if w1.support() == K:
            res = _below(J, w1, K, memo)
        else:
            sub = _below(J, w1, K - {i}, memo)
            if sub is not None:
                res = sub.lmul_simple(i)
                if not W.is_min_rep(res, J, "right"):
                    res = None
        if res is not None:
            break
    memo[key] = res
    return res


def layers(i: int, rs) -> list:
    """``I_1 = {i}``, ``I_2``, ...: the distance layers of the Dynkin graph from ``i``."""
    rs = _rs(rs)
    if i not in rs.index_set:
        raise ValueError(f"index {i} out of range for {rs.type}")
    out = [frozenset({i})]
    seen = {i}
    while True:
        nxt = frozenset(j for j in rs.index_set - seen
                        if any(rs.adjacent(j, m) for m in out[-1]))
        if not nxt:
            return out
        out.append(nxt)
        seen |= nxt


def layer_product(S, rs) -> WeylElem:
    """``s_S``: product over a set of pairwise orthogonal simple reflections."""
    return W.from_word(sorted(S), rs)


def w_J_coxeter(i: int, rs) -> WeylElem:
    """``w^J = s_{I_n} ... s_{I_2} s_{I_1}`` for ``J = I - {i}``."""
    rs = _rs(rs)
    out = W.identity(rs)
    for S in layers(i, rs):
        out = layer_product(S, rs) * out
    return out


@dataclass
class ClaimReport:
    claim: str
    status: str
    witness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"claim": self.claim, "status": self.status, "witness": self.witness}


def check_layer_closed_forms(i: int, rs) -> ClaimReport:
    """Compare the beta-sequence of ``(I - {i}, w^J)`` with its closed forms.

    With ``J_{-1} = I``, ``J_0 = I - {i}`` and layers ``I_1, I_2, ...``:
    ``J_k = J_{k-1} - I_{k+1}``,
    ``u_k = w_0^{J_{k-1}} w_0^{J_k} s_{I_{k+1}} w_0^{J_{k+1}} w_0^{J_k}``,
    ``y_k = w_0^{J_{k-1}} w_0^{J_k} s_{I_k} ... s_{I_1}``, and the terminal
    set is empty.
    """
    from .pieces import beta_sequence

    rs = _rs(rs)
    I = rs.index_set
    lay = layers(i, rs)
    claim = f"closed forms of the beta-sequence for {rs.type}, i={i}"

    def layer(k):  # I_k, 1-based, empty past the end
        return lay[k - 1] if 1 <= k <= len(lay) else frozenset()

    w = w_J_coxeter(i, rs)
    chain = beta_sequence(I - {i}, w, rs)
    w0 = lambda S: W.longest_element(S, rs)  # noqa: E731

    # predicted J_k for k = -1, 0, 1, ...
    Js = [I]
    for k in range(len(chain.steps) + 2):
        Js.append(Js[-1] - layer(k + 1))
    J = lambda k: Js[k + 1]  # noqa: E731

    for k, step in enumerate(chain.steps):
        wit = {"step": k, "J_k": sorted(step.J)}
        if step.J != J(k):
            wit["expected_J_k"] = sorted(J(k))
            return ClaimReport(claim, "fail", wit)
        u = w0(J(k - 1)) * w0(J(k)) * layer_product(layer(k + 1), rs) * w0(J(k + 1)) * w0(J(k))
        if step.u != u:
            wit.update(u_k=W.format_word(step.u.reduced_word()), expected_u_k=W.format_word(u.reduced_word()))
            return ClaimReport(claim, "fail", wit)
        y = w0(J(k - 1)) * w0(J(k))
        for m in range(k, 0, -1):
            y = y * layer_product(layer(m), rs)
        if step.y != y:
            wit.update(y_k=W.format_word(step.y.reduced_word()), expected_y_k=W.format_word(y.reduced_word()))
            return ClaimReport(claim, "fail", wit)
    if chain.terminal:
        return ClaimReport(claim, "fail", {"J_inf": sorted(chain.terminal)})
    return ClaimReport(claim, "pass", {"steps": len(chain.steps), "w": W.format_word(w.reduced_word()),
                                       "layers": [sorted(S) for S in lay]})
