"""
Admissible pairs ``(x, lambda)`` for multiplicity-free ``x`` and the root-level
hypotheses that let a ``y``-twist be absorbed into a unipotent factor.

For ``x = s_{i_1} ... s_{i_n}`` with distinct letters,
``(1 - x^-1) omega_{i_j}^vee = s_{i_n} ... s_{i_{j+1}} alpha_{i_j}^vee`` and
``(1 - x^-1) omega_k^vee = 0`` for ``k`` not a letter.  A coweight in the
``N``-span of these vectors gives an admissible pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import weyl as W
from .linalg import rank, solve_in_span
from .rootsys import (RootSystem, _pair_simple, build, fundamental_coweight,
                      simple_coroot)
from .weyl import WeylElem

__all__ = [
    "AdmissibilityBasis", "AdmissibilityResult", "admissibility_basis",
    "is_admissible", "admissible_from_regular", "LiftingReport",
    "lifting_hypotheses", "fmt_coweight",
]


def _rs(rs) -> RootSystem:
    return build(rs) if not isinstance(rs, RootSystem) else rs


def fmt_coweight(lam) -> list:
    """JSON-friendly coordinates: ints where integral, ``"p/q"`` strings otherwise."""
    out = []
    for c in lam:
        c = Fraction(c)
        out.append(int(c) if c.denominator == 1 else str(c))
    return out


@dataclass(frozen=True)
class AdmissibilityBasis:
    word: tuple
    vectors: tuple

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


def _check_word(word, rs):
    word = tuple(word)
    for a in word:
        if not (isinstance(a, int) and 1 <= a <= rs.rank):
            raise ValueError(f"letter {a!r} out of range for {rs.type}")
    if len(set(word)) != len(word):
        raise ValueError(f"word {list(word)} repeats a letter")
    return word


def admissibility_basis(word, rs) -> AdmissibilityBasis:
    """``gamma_j = s_{i_n} ... s_{i_{j+1}} alpha_{i_j}^vee`` for a word with distinct letters.

    A word without repeated letters is automatically reduced.
    """
    rs = _rs(rs)
    word = _check_word(word, rs)
    vecs = []
    for j, a in enumerate(word):
        tail = W.from_word(tuple(reversed(word[j + 1:])), rs)
        vecs.append(tail.act_coweight(simple_coroot(a, rs)))
    return AdmissibilityBasis(word, tuple(vecs))


@dataclass(frozen=True)
class AdmissibilityResult:
    admissible: bool
    coeffs: tuple | None
    residual: tuple
    mode: str

    def __bool__(self):
        return self.admissible

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "mode": self.mode,
            "coeffs": None if self.coeffs is None else fmt_coweight(self.coeffs),
            "residual": fmt_coweight(self.residual),
        }


def is_admissible(word, lam, rs, mode: str = "integral") -> AdmissibilityResult:
    """Decide whether ``lam`` lies in the cone spanned by the admissibility basis.

    ``mode="integral"`` asks for coefficients in ``N``; ``mode="rational"``
    only asks for nonnegative rational coefficients.
    """
    if mode not in ("integral", "rational"):
        raise ValueError(f"mode must be 'integral' or 'rational', not {mode!r}")
    rs = _rs(rs)
    if len(lam) != rs.rank:
        raise ValueError(f"coweight of length {len(lam)} does not match rank {rs.rank}")
    basis = admissibility_basis(word, rs)
    if not basis.vectors:
        ok = all(Fraction(c) == 0 for c in lam)
        return AdmissibilityResult(ok, () if ok else None, tuple(Fraction(c) for c in lam), mode)
    coeffs, residual = solve_in_span(basis.vectors, lam)
    if coeffs is None:
        return AdmissibilityResult(False, None, residual, mode)
    ok = all(c >= 0 for c in coeffs)
    if mode == "integral":
        ok = ok and all(c.denominator == 1 for c in coeffs)
    return AdmissibilityResult(ok, coeffs, residual, mode)


def admissible_from_regular(w: WeylElem, lam, rs=None) -> tuple:
    """``lam - w^-1 lam`` for a dominant regular coweight ``lam``."""
    rs = w.rs if rs is None else _rs(rs)
    if any(_pair_simple(lam, j, rs) <= 0 for j in range(rs.rank)):
        raise ValueError("coweight is not dominant regular")
    moved = w.inverse().act_coweight(lam)
    return tuple(Fraction(a) - b for a, b in zip(lam, moved))


@dataclass
class LiftingReport:
    orthogonal: bool
    first: tuple
    second: tuple
    first_ok: bool
    second_ok: bool
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.orthogonal and self.first_ok and self.second_ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "orthogonal": self.orthogonal,
            "first": fmt_coweight(self.first),
            "first_ok": self.first_ok,
            "second": fmt_coweight(self.second),
            "second_ok": self.second_ok,
            "notes": list(self.notes),
        }


def _positive_on(vec, letters) -> bool:
    letters = set(letters)
    return all((c > 0) if k + 1 in letters else (c == 0) for k, c in enumerate(vec))


def lifting_hypotheses(w: WeylElem, x: WeylElem, y1_word, y2_word, i: int, rs=None) -> LiftingReport:
    """Check the root-level hypotheses for absorbing ``y_1 y_2``.

    With ``y_1 = s_{i_1} ... s_{i_l}`` and ``y_2 = s_{i_{l+1}} ... s_{i_{l+k}}``
    (all letters distinct) the hypotheses are:

    * the letters of ``y_1`` are pairwise orthogonal;
    * ``(1 - y_1 y_2) x omega_i^vee`` has strictly positive coefficients on
      every letter of ``y_1 y_2`` and vanishes elsewhere;
    * ``(1 - y_1) w omega_i^vee`` has strictly positive coefficients on every
      letter of ``y_1`` and vanishes elsewhere.

    Both vectors are returned so a failure can be inspected.
    """
    rs = w.rs if rs is None else _rs(rs)
    y1_word = tuple(y1_word)
    y2_word = tuple(y2_word)
    _check_word(y1_word + y2_word, rs)
    orth = all(rs.cartan[a - 1][b - 1] == 0 for k, a in enumerate(y1_word) for b in y1_word[k + 1:])
    om = fundamental_coweight(i, rs)
    y1 = W.from_word(y1_word, rs)
    y12 = y1 * W.from_word(y2_word, rs)
    xo = x.act_coweight(om)
    first = tuple(a - b for a, b in zip(xo, y12.act_coweight(xo)))
    wo = w.act_coweight(om)
    second = tuple(a - b for a, b in zip(wo, y1.act_coweight(wo)))
    rep = LiftingReport(
        orthogonal=orth,
        first=first,
        second=second,
        first_ok=_positive_on(first, y1_word + y2_word),
        second_ok=_positive_on(second, y1_word),
    )
    if not y1_word and not y2_word:
        rep.notes.append("no letters: hypotheses hold vacuously")
    return rep


def basis_rank(word, rs) -> int:
    return rank(admissibility_basis(word, rs).vectors)
