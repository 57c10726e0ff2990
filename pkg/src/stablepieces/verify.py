"""
Verification suites.

Each suite runs over one root system type and returns a list of ``Result``
records.  ``run_suites`` fans the (suite, type) pairs out over worker
processes and returns them in a deterministic order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import permutations
import random

import yaml

from . import weyl as W
from .admissible import admissibility_basis, fmt_coweight
from .cases import (NotCovered, case_data, type_a_conjugation_check,
                    type_a_coweight_check, verify_case)
from .closure import boundary_count_poly, boundary_pieces
from .coxeter import (check_layer_closed_forms, conjugating_sequence, coxeter_below,
                      enumerate_coxeter, is_coxeter)
from .pieces import (beta_sequence, enumerate_pieces, group_compactification_count,
                     piece_count_poly, subsets)
from .qpoly import QPoly
from .rootsys import SeriesRank, build, fundamental_coweight

__all__ = ["SUITES", "ALIASES", "Result", "types_up_to", "run_suite", "run_suites",
           "known_issues", "is_documented"]

# exhaustive sweeps are skipped above these group orders
CHAIN_LIMIT = 2000
COXETER_BELOW_LIMIT = 2000
ADMISSIBILITY_EXHAUSTIVE_RANK = 5
ADMISSIBILITY_SAMPLES = 500


@dataclass
class Result:
    suite: str
    type: str
    check: str
    status: str  # pass | fail | skip | info
    detail: dict = field(default_factory=dict)
    documented: bool = False

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_json(self) -> dict:
        return {"suite": self.suite, "type": self.type, "check": self.check,
                "status": self.status, "documented": self.documented, "detail": self.detail}


def types_up_to(max_rank: int) -> list:
    """Every irreducible type of rank at most ``max_rank``, without duplicates."""
    out = []
    for n in range(1, max_rank + 1):
        out.append(SeriesRank("A", n))
        if n >= 2:
            out.append(SeriesRank("B", n))
        if n >= 3:
            out.append(SeriesRank("C", n))
        if n >= 4:
            out.append(SeriesRank("D", n))
    for s, n in (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)):
        if n <= max_rank:
            out.append(SeriesRank(s, n))
    return sorted(out, key=lambda t: (t.rank, t.series))


@lru_cache(maxsize=None)
def known_issues() -> tuple:
    """Registered (type, i, check) diagnostics that are explained in KNOWN_ISSUES.md."""
    f = resources.files("stablepieces").joinpath("fixtures", "known_issues.yaml")
    data = yaml.safe_load(f.read_text()) or []
    return tuple(data)


def is_documented(typ: str, i: int, check: str) -> str | None:
    for item in known_issues():
        if item["type"] == typ and item["i"] == i and check in item["checks"]:
            return item["id"]
    return None


# ---------------------------------------------------------------- suites

def _counts(typ, bound):
    rs = build(typ)
    t = str(typ)
    out = []
    total = QPoly()
    for p in enumerate_pieces(rs, bound):
        total = total + piece_count_poly(p, rs)
    gbar = group_compactification_count(rs, bound)
    out.append(Result("counts", t, "partition", "pass" if total == gbar else "fail",
                      {"sum_pieces": str(total), "compactification": str(gbar)}))
    side = QPoly()
    for p in boundary_pieces(rs, bound):
        side = side + piece_count_poly(p, rs)
    closed = boundary_count_poly(rs, bound)
    out.append(Result("counts", t, "boundary", "pass" if side == closed else "fail",
                      {"sum_pieces": str(side), "closed_form": str(closed)}))
    if t == "A1":
        q = QPoly.monomial(1)
        ok = gbar == (1 + q) * (1 + q * q) and closed == 1 + q
        out.append(Result("counts", t, "anchors", "pass" if ok else "fail",
                          {"compactification": str(gbar), "boundary": str(closed)}))
    return out


def _coxeter(typ, bound):
    rs = build(typ)
    t = str(typ)
    out = []
    cox = enumerate_coxeter(rs)
    bad = []
    for i in sorted(rs.index_set):
        for c in cox:
            for c2 in cox:
                g = W.from_word(conjugating_sequence(c, c2, i, rs), rs)
                if i in g.support() or g * c * g.inverse() != c2:
                    bad.append({"i": i, "c": W.format_word(c.reduced_word()),
                                "c2": W.format_word(c2.reduced_word())})
    out.append(Result("coxeter", t, "conjugation", "fail" if bad else "pass",
                      {"coxeter_elements": len(cox), "failures": bad[:5]}))

    if W.group_order(rs) <= COXETER_BELOW_LIMIT:
        els = [w for w in W.enumerate_elements(rs, bound=bound) if w.support() == rs.index_set]
        bad, n = [], 0
        for J in subsets(rs.index_set):
            if J == rs.index_set:
                continue
            for w in els:
                if w.descents_right() & J:
                    continue
                n += 1
                c = coxeter_below(J, w, rs)
                if not (is_coxeter(c) and W.is_min_rep(c, J) and W.bruhat_leq(c, w)):
                    bad.append({"J": sorted(J), "w": W.format_word(w.reduced_word())})
        out.append(Result("coxeter", t, "below", "fail" if bad else "pass",
                          {"labels": n, "failures": bad[:5]}))
    else:
        out.append(Result("coxeter", t, "below", "skip", {"reason": f"|W| > {COXETER_BELOW_LIMIT}"}))

    for i in sorted(rs.index_set):
        rep = check_layer_closed_forms(i, rs)
        out.append(Result("coxeter", t, f"closed_forms i={i}", rep.status, rep.witness))
    return out


def _chains(typ, bound):
    rs = build(typ)
    t = str(typ)
    if W.group_order(rs) > CHAIN_LIMIT:
        return [Result("chains", t, "invariants", "skip", {"reason": f"|W| > {CHAIN_LIMIT}"})]
    bad, n = [], 0
    for p in enumerate_pieces(rs, bound):
        n += 1
        viol = beta_sequence(p.J, p.w, rs).check()
        if viol:
            bad.append({**p.to_json(), "violations": viol})
    return [Result("chains", t, "invariants", "fail" if bad else "pass",
                   {"labels": n, "failures": bad[:5]})]


def _cases(typ, bound):
    t = str(typ)
    out = []
    for i in range(1, typ.rank + 1):
        try:
            cd = case_data(typ, i)
        except NotCovered as e:
            out.append(Result("cases", t, f"i={i}", "skip", {"reason": str(e)}))
            continue
        rep = verify_case(cd)
        for name, chk in rep.checks.items():
            status = {"pass": "pass", "fail": "fail", "skip": "skip"}.get(chk.status, "info")
            issue = is_documented(t, i, name) if status in ("fail", "info") else None
            det = {"status": chk.status, **chk.detail}
            if issue:
                det["known_issue"] = issue
            out.append(Result("cases", t, f"i={i} {name}", status, det, documented=bool(issue)))
    if typ.series == "A":
        n = typ.rank + 1
        for i in range(1, n // 2 + 1):
            for j in range(1, i + 1):
                r = type_a_coweight_check(n, i, j)
                out.append(Result("cases", t, f"i={i} coweight j={j}", r["status"], r))
            r = type_a_conjugation_check(n, i)
            out.append(Result("cases", t, f"i={i} conjugation", r["status"], r))
    return out


def _words(rs):
    letters = sorted(rs.index_set)
    if rs.rank <= ADMISSIBILITY_EXHAUSTIVE_RANK:
        for k in range(1, rs.rank + 1):
            yield from permutations(letters, k)
    else:
        rng = random.Random(f"words-{rs.type}")
        for _ in range(ADMISSIBILITY_SAMPLES):
            k = rng.randint(1, rs.rank)
            yield tuple(rng.sample(letters, k))


def _admissibility(typ, bound):
    rs = build(typ)
    t = str(typ)
    bad, n = [], 0
    for word in _words(rs):
        n += 1
        x = W.from_word(word, rs)
        xinv = x.inverse()
        basis = admissibility_basis(word, rs)
        for k in sorted(rs.index_set):
            om = fundamental_coweight(k, rs)
            lhs = tuple(a - b for a, b in zip(om, xinv.act_coweight(om)))
            rhs = basis.vectors[word.index(k)] if k in word else (0,) * rs.rank
            if tuple(lhs) != tuple(rhs):
                bad.append({"word": list(word), "k": k, "lhs": fmt_coweight(lhs), "rhs": fmt_coweight(rhs)})
    mode = "exhaustive" if rs.rank <= ADMISSIBILITY_EXHAUSTIVE_RANK else "sampled"
    return [Result("admissibility", t, "coroot_identity", "fail" if bad else "pass",
                   {"words": n, "mode": mode, "failures": bad[:5]})]


SUITES = {
    "counts": _counts,
    "coxeter": _coxeter,
    "cases": _cases,
    "chains": _chains,
    "admissibility": _admissibility,
}
ALIASES = {"section3": "cases", "lemma32": "admissibility"}


def _task(args):
    suite, typ, bound = args
    try:
        return SUITES[suite](typ, bound)
    except W.EnumerationBoundError as e:
        return [Result(suite, str(typ), "bound", "fail", {"error": str(e), "bound_refusal": True})]


def run_suite(suite: str, typ, bound=None) -> list:
    suite = ALIASES.get(suite, suite)
    if isinstance(typ, str):
        typ = SeriesRank.parse(typ)
    return _task((suite, typ, bound))


def run_suites(suites, types, bound=None, jobs: int = 1) -> list:
    """Run every suite on every type; results are ordered by (suite, type)."""
    names = []
    for s in suites:
        if s == "all":
            names.extend(SUITES)
        else:
            names.append(ALIASES.get(s, s))
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    names = list(dict.fromkeys(names))
    tasks = [(s, t, bound) for s in names for t in types]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_task, tasks))
    else:
        chunks = [_task(a) for a in tasks]
    return [r for chunk in chunks for r in chunk]
