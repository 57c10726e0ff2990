import re
from fractions import Fraction
from pathlib import Path

import pytest

from stablepieces import weyl as W
from stablepieces.cases import (NotCovered, case_data, covered_cases, parse_coroot,
                                parse_element, parse_root, segment, type_a_conjugation_check,
                                type_a_coweight_check, type_a_parameters, verify_case, w_k)
from stablepieces.coxeter import w_J_coxeter
from stablepieces.rootsys import build, fundamental_coweight
from stablepieces.verify import is_documented, known_issues

ROOT = Path(__file__).resolve().parents[1]


def e(word, t):
    return W.from_word(word, build(t))


def test_parse_linear():
    e8 = build("E8")
    assert parse_root("-a4 - sum(a2..a7)", e8) == (0, -1, -1, -2, -1, -1, -1, 0)
    assert parse_root("a1 + 2 a3 - (a2 + a5)", e8) == (1, -1, 2, 0, -1, 0, 0, 0)
    assert parse_coroot("c1 + 3/2 c5", e8)[4] == Fraction(3, 2)
    assert parse_coroot("0", e8) == (0,) * 8
    for bad in ("a9", "c1", "a1 +", "a1 a2", "1/2 a1"):
        with pytest.raises(ValueError):
            parse_root(bad, e8)


def test_parse_element():
    a3 = build("A3")
    assert parse_element("s1 s2", 2, a3) == e([1, 2], "A3")
    assert parse_element("wJ", 2, a3) == w_J_coxeter(2, a3)
    assert parse_element("wJ^2 wJ^-2", 2, a3).is_identity()
    assert parse_element("w_2 w_2^-1 1", 2, a3).is_identity()
    assert w_k(2, 1, a3) == w_J_coxeter(2, a3)
    assert w_k(2, 2, a3) == e([1, 3], "A3")
    for bad in ("s4", "t1", "w_2^2"):
        with pytest.raises(ValueError):
            parse_element(bad, 2, a3)


def test_segment():
    a4 = build("A4")
    assert segment(1, 3, a4) == e([3, 2, 1], "A4")
    assert segment(3, 2, a4).is_identity()


def test_g2_example():
    cd = case_data("G2", 1)
    assert cd.v == e([1], "G2") and cd.x == e([2, 1], "G2")
    assert cd.lam == (1, 0) and cd.y1 + cd.y2 == (2,)
    rep = verify_case(cd)
    assert rep.ok and all(c.status in ("pass", "skip") for c in rep.checks.values())
    y = e([2], "G2")
    assert cd.x.inverse() * y * cd.v * cd.x == e([2, 1], "G2")


def test_f4_example():
    cd = case_data("F4", 2)
    f4 = build("F4")
    assert cd.v == e([1, 3], "F4")
    assert cd.x == W.from_word([2], f4) * w_J_coxeter(2, f4) ** 2
    assert cd.lam == (1, 0, 1, 0)
    assert cd.y1 + cd.y2 == (2, 4)


def test_e6_lambda_example():
    cd = case_data("E6", 1)
    e6 = build("E6")
    assert cd.lam == (1, 0, 2, 0, 1, 2)
    assert tuple(3 * c for c in cd.x.act_coweight(fundamental_coweight(1, e6))) == cd.lam
    assert verify_case(cd).checks["lambda"].status == "pass"


def test_type_a_parameters_example():
    p = type_a_parameters(4, 2)
    assert p.a[1:3] == (0, 2)
    assert p.b[2] == 0 and p.b[3] == 2
    with pytest.raises(ValueError):
        type_a_parameters(4, 3)


def test_type_a_coweight_example():
    r = type_a_coweight_check(4, 2, 1)
    assert r["status"] == "pass" and r["direct"] == [2, 0, 2]
    r = type_a_coweight_check(6, 3, 3)
    rs = build("A5")
    assert r["direct"] == [6 * c for c in fundamental_coweight(3, rs)]
    with pytest.raises(ValueError):
        type_a_coweight_check(4, 2, 3)


@pytest.mark.parametrize("n", range(2, 13))
def test_type_a_all(n):
    for i in range(1, n // 2 + 1):
        assert type_a_conjugation_check(n, i)["status"] == "pass"
        for j in range(1, i + 1):
            assert type_a_coweight_check(n, i, j)["status"] == "pass"
    for i in range(1, n):
        assert verify_case(case_data(f"A{n - 1}", i)).ok


def test_type_b_not_covered():
    with pytest.raises(NotCovered):
        case_data("B3", 1)
    assert covered_cases("B4") == []
    with pytest.raises(NotCovered):
        case_data("G2", 3)


@pytest.mark.parametrize("t", ["G2", "F4", "E7", "E8", "C3", "C6", "C8", "D5", "D7"])
def test_clean_types(t):
    for i in covered_cases(t):
        rep = verify_case(case_data(t, i))
        assert rep.ok, (i, rep.failures)


def test_e6_failures_are_lambda_only():
    for i in covered_cases("E6"):
        rep = verify_case(case_data("E6", i))
        assert rep.failures == (["lambda"] if i == 4 else [])
    rep = verify_case(case_data("E6", 4))
    assert rep.checks["lambda"].detail["scale_x_omega"] == [0, 1, 1, 0, 1, 0]
    assert rep.checks["lambda"].detail["computed_admissible"]


def test_reports_serialize():
    import json
    rep = verify_case(case_data("D6", 6))
    data = json.loads(json.dumps(rep.to_json()))
    assert data["checks"]["conjugate"]["status"] == "fail"
    assert data["checks"]["conjugate"]["lhs"] != data["checks"]["conjugate"]["w^J"]


def all_case_types():
    out = [f"A{n - 1}" for n in range(2, 13)] + [f"C{n}" for n in range(3, 9)]
    out += [f"D{n}" for n in range(4, 9)] + ["G2", "F4", "E6", "E7", "E8"]
    return out


def test_every_non_pass_is_registered():
    for t in all_case_types():
        for i in covered_cases(t):
            rep = verify_case(case_data(t, i))
            for name, chk in rep.checks.items():
                if chk.status in ("fail", "unstated"):
                    assert is_documented(t, i, name), (t, i, name, chk.detail)


def test_registry_entries_are_live():
    # every registered item still produces the diagnostic it documents
    for item in known_issues():
        rep = verify_case(case_data(item["type"], item["i"]))
        for name in item["checks"]:
            assert rep.checks[name].status in ("fail", "unstated"), item


def test_registry_ids_documented():
    text = (ROOT / "KNOWN_ISSUES.md").read_text()
    ids = set(re.findall(r"^##+ (KI-\d+)", text, flags=re.M))
    assert {item["id"] for item in known_issues()} <= ids
