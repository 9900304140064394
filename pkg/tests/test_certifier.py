import itertools
import json
from fractions import Fraction

import pytest

from golodavoid import (
    BoundViolation,
    BudgetExceeded,
    InvalidTarget,
    analyze,
    certify,
    compare,
    lemma5_closed_form,
    parse_pattern,
    zimin,
)
from golodavoid.certifier import (
    ANALYTIC,
    CLASSICAL,
    EMPIRICAL,
    INCONCLUSIVE,
    MULTIPLICITY,
    comparison_csv,
)

P = parse_pattern


def canonical_patterns(max_len, letters="xyz"):
    seen = set()
    for n in range(1, max_len + 1):
        for w in itertools.product(letters, repeat=n):
            p = P("".join(w)).canonical()
            if p not in seen:
                seen.add(p)
                yield p


def test_two_variable_length_sixteen_is_proved_over_two_letters():
    cert = certify(P("xxxxyyyyxxxxyyyy"), 2)
    assert cert.verdict == "proved" and cert.method == ANALYTIC
    assert cert.threshold == 16 and cert.threshold_met
    assert cert.mu >= 4 and cert.factor.k == 2
    assert cert.lam == Fraction(97, 50)
    assert cert.verified_order == 200


def test_below_threshold_uses_pattern_itself():
    cert = certify(P("xxxxyyyy"), 2)
    assert not cert.threshold_met
    assert (cert.factor_span.start, cert.factor_span.end) == (0, 8)
    assert cert.verdict == "proved" and cert.lam == Fraction(97, 50)


def test_single_variable_goes_to_thue():
    cert = certify(P("xxxx"), 2)
    assert cert.method == CLASSICAL and cert.verdict == "cited"
    assert certify(P("xx"), 3).verdict == "cited"
    assert certify(P("xx"), 4).verdict == "cited"
    assert certify(P("xx"), 2).verdict == "inconclusive"
    assert certify(P("x"), 2).verdict == "inconclusive"


def test_zimin_below_threshold():
    z = zimin(3)
    cert = certify(z, 4)
    assert not cert.threshold_met and cert.threshold == 8 and cert.pattern_length == 7
    assert cert.verdict == "inconclusive"


def test_doubled_two_variable_pattern_over_four_letters():
    # the Golod series for occurrences (2, 2) over 4 letters turns negative at n = 17
    cert = certify(P("xyxy"), 4)
    assert cert.method == INCONCLUSIVE
    assert any("n=17" in n for n in cert.notes)


def test_empirical_path():
    cert = certify(P("xyzxyz"), 4)
    assert cert.method == EMPIRICAL and cert.verdict == "empirical"
    assert cert.verified_order == 200
    assert 1 < cert.lam < 4


def test_invalid_target():
    with pytest.raises(InvalidTarget):
        certify(P("xx"), 5)


def test_certificates_deterministic_json():
    a = certify(P("xxxyyyxxxyyy"), 3).to_json()
    b = certify(P("xxxyyyxxxyyy"), 3).to_json()
    assert a == b
    keys = list(json.loads(a))
    assert keys[:5] == ["pattern", "target_m", "k", "length", "threshold"]
    assert keys[-1] == "tool_version"


@pytest.mark.parametrize("target", [2, 3, 4])
def test_certificate_invariants_over_small_patterns(target):
    for p in canonical_patterns(7, "xyz"):
        cert = certify(p, target, order=60)
        if cert.method == ANALYTIC:
            assert cert.verdict == "proved"
            assert cert.factor.k >= 2 and cert.mu >= 2
            res = lemma5_closed_form(cert.established_m, cert.mu, cert.lam, 2)
            assert res.holds and res.side_condition
        elif cert.method == CLASSICAL:
            assert cert.verdict == "cited" and cert.factor.k == 1
            assert cert.mu >= (3 if cert.established_m == 2 else 2)
        elif cert.method == EMPIRICAL:
            assert cert.verdict == "empirical"
        else:
            assert cert.verdict == "inconclusive"


@pytest.mark.parametrize("target", [2, 3, 4])
def test_threshold_factor_is_balanced(target):
    from golodavoid import balanced_factor, factor_pattern
    mu0 = MULTIPLICITY[target]
    for text in ["xyxyxyxyxyxyxyxy", "xxyyxyxyyxyxxyyx", "xxxxyyyyxxxxyyyy", "xyz" * 22]:
        p = P(text)
        assert len(p) >= mu0 ** p.k
        sub = factor_pattern(p, balanced_factor(p.symbols, mu0, p.variables))
        assert all(c % mu0 == 0 and c >= mu0 for c in sub.occurrence_vector)


def test_monotonicity():
    for p in canonical_patterns(8, "xy"):
        if certify(p, 2, order=60).verdict in ("proved", "cited"):
            for target in (3, 4):
                assert certify(p, target, order=60).verdict != "inconclusive", p.text


def test_lifted_certificate_records_alphabet():
    cert = certify(P("xyxyxyxyxyxyxyxy"), 4)
    assert cert.verdict == "proved" and cert.target_m == 4
    cert = certify(P("xxxyyyxyxyxyxyxy"), 4)
    assert cert.verdict in ("proved", "cited")


def test_compare_cube_binary():
    rows = compare(P("xxx"), 2, 6)
    assert [r.golod_bound for r in rows] == [1, 2, 4, 6, 8, 8, 0]
    assert [r.brute_count for r in rows] == [1, 2, 4, 6, 10, 16, 24]
    assert all(r.applicable for r in rows)
    assert rows[5].gap == 8


def test_compare_square_seven_letters():
    rows = compare(P("xx"), 7, 6)
    assert all(r.applicable and r.golod_bound > 0 for r in rows)
    assert all(r.brute_count >= r.golod_bound for r in rows)


def test_compare_flags_inapplicable_rows():
    rows = compare(P("xx"), 3, 5)
    assert rows[5].golod_bound == -54
    assert [r.applicable for r in rows] == [True] * 5 + [False]
    csv = comparison_csv(rows).splitlines()
    assert csv[0] == "n,golod,brute,gap,applicable"
    assert csv[-1] == "5,-54,30,84,false"


def test_compare_single_letter():
    rows = compare(P("xx"), 1, 3)
    assert [r.brute_count for r in rows] == [1, 1, 0, 0]


def test_compare_budget_propagates():
    with pytest.raises(BudgetExceeded):
        compare(P("xxx"), 2, 25, budget=100)


def test_compare_raises_on_violation(monkeypatch):
    import golodavoid.certifier as cert_mod
    from golodavoid.oracle import CountTable
    monkeypatch.setattr(cert_mod, "count_avoiders",
                        lambda m, p, n, budget=None: CountTable(m, p, (1, 2, 3)))
    with pytest.raises(BoundViolation):
        compare(P("xxx"), 2, 2)


def test_analyze():
    r = analyze(P("xyxy"))
    assert (r["k"], r["length"]) == (2, 4)
    assert r["thresholds"] == {"4-avoidable": 4, "3-avoidable": 9, "2-avoidable": 16}
    assert r["clauses"] == ["a"] and r["doubled"]
    r = analyze(zimin(3))
    assert r["length"] == 7 and r["clauses"] == []
    assert "unavoidable" in r["remarks"][0]
    r = analyze(P("x"))
    assert r["clauses"] == [] and "unavoidable" in r["remarks"][0]
