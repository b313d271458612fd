import pytest

from nilcirc import circring
from nilcirc.errors import InvalidInput, InvalidPrime
from nilcirc.nilpotence import (
    ZmClause,
    annihilation_check,
    decide_zm,
    decide_zm_via_primes,
    decide_zp,
    index_expansion,
    index_formula,
    necessity_checks,
    witness_nonvanishing,
)
from nilcirc.numutil import factorize
from nilcirc.oracle import min_nilpotent_index


# ---------------------------------------------------------------------------
# decide_zp


def test_decide_zp_examples():
    v = decide_zp(8, 2, 2)
    assert (v.nilpotent, v.index, v.a, v.b) == (True, 8, 3, 1)
    v = decide_zp(9, 3, 3)
    assert (v.nilpotent, v.index) == (True, 5)
    v = decide_zp(4, 6, 3)
    assert not v.nilpotent and (v.n_star, v.m_star) == (4, 2)
    v = decide_zp(6, 4, 2)
    assert not v.nilpotent and (v.n_star, v.m_star) == (3, 1)
    for p in (2, 3, 5):
        v = decide_zp(1, p, p)
        assert (v.nilpotent, v.index) == (True, 1)


def test_decide_zp_verdict_fields():
    v = decide_zp(8, 2, 2)
    assert (v.qdiv, v.rdiv) == (3, 0)
    assert v.a == v.b * v.qdiv + v.rdiv
    v = decide_zp(4, 6, 3)
    assert v.index is None and v.qdiv is None and v.rdiv is None


def test_decide_zp_rejects_bad_input():
    with pytest.raises(InvalidPrime):
        decide_zp(8, 2, 4)
    with pytest.raises(InvalidInput):
        decide_zp(0, 2, 2)
    with pytest.raises(InvalidInput):
        decide_zp(2, 0, 2)


def test_decide_zp_index_bound():
    for p in (2, 3, 5, 7):
        for n in range(1, 30):
            for m in range(1, 30):
                v = decide_zp(n, m, p)
                if v.nilpotent:
                    assert 1 <= v.index <= n


def test_decide_zp_valuations_recompose():
    for (n, m, p) in [(48, 36, 2), (45, 15, 3), (50, 35, 5)]:
        v = decide_zp(n, m, p)
        assert p**v.a * v.n_star == n
        assert p**v.b * v.m_star == m
        assert v.n_star % p and v.m_star % p


def test_zp_json_schema():
    assert decide_zp(8, 2, 2).to_json_dict() == {
        "n": 8, "m": 2, "p": 2, "a": 3, "b": 1, "n_star": 1, "m_star": 1,
        "nilpotent": True, "index": 8,
    }
    assert decide_zp(4, 6, 3).to_json_dict()["index"] is None


# ---------------------------------------------------------------------------
# index formula and expansion


def test_index_formula_examples():
    assert index_formula(3, 1, 2) == 8
    assert index_formula(0, 2, 3) == 1
    assert index_formula(2, 1, 3) == 5


def test_index_formula_rejects_bad_input():
    with pytest.raises(InvalidPrime):
        index_formula(3, 1, 6)
    with pytest.raises(InvalidInput):
        index_formula(3, 0, 2)


def test_index_expansion_examples():
    assert index_expansion(3, 1, 2) == (3, 0, 8)
    assert index_expansion(2, 1, 3) == (2, 0, 5)
    assert index_expansion(3, 2, 2) == (1, 1, 3)


def test_index_expansion_requires_full_division_step():
    with pytest.raises(InvalidInput):
        index_expansion(1, 2, 2)
    with pytest.raises(InvalidInput):
        index_expansion(3, 0, 2)


def test_expansion_equals_formula():
    for p in (2, 3, 5, 7):
        for b in range(1, 5):
            for a in range(b, 13):
                qdiv, rdiv, value = index_expansion(a, b, p)
                assert a == b * qdiv + rdiv and 0 <= rdiv < b
                assert value == index_formula(a, b, p)


# ---------------------------------------------------------------------------
# decide_zm, both routes


def test_decide_zm_examples():
    v = decide_zm(8, 4)
    assert v.nilpotent and v.clause is ZmClause.SAME_PRIME_POWERS
    v = decide_zm(6, 6)
    assert v.nilpotent and v.clause is ZmClause.MULTI_PRIME_DIVIDES
    v = decide_zm(4, 6)
    assert not v.nilpotent and v.clause is ZmClause.NOT_NILPOTENT


def test_decide_zm_via_primes_examples():
    v = decide_zm_via_primes(6, 6)
    assert v.nilpotent
    assert [(z.p, z.nilpotent) for z in v.per_prime] == [(2, True), (3, True)]
    v = decide_zm_via_primes(4, 6)
    assert not v.nilpotent
    assert [(z.p, z.nilpotent) for z in v.per_prime] == [(2, True), (3, False)]
    assert decide_zm_via_primes(1, 2).nilpotent


def test_decide_zm_rejects_bad_input():
    for fn in (decide_zm, decide_zm_via_primes):
        with pytest.raises(InvalidInput):
            fn(4, 1)
        with pytest.raises(InvalidInput):
            fn(0, 6)


def test_n_equals_one_counts_as_zeroth_power():
    # T over Z_m is the 1x1 matrix [m] = [0]; the same-prime clause covers it
    for m in (2, 4, 9, 25):
        v = decide_zm(1, m)
        assert v.nilpotent and v.clause is ZmClause.SAME_PRIME_POWERS


def test_zm_routes_agree_on_grid():
    for m in range(2, 37):
        for n in range(1, 37):
            lit = decide_zm(n, m)
            per = decide_zm_via_primes(n, m)
            assert lit.nilpotent == per.nilpotent
            assert lit.clause is per.clause


def test_zm_clause_invariants():
    for m in range(2, 37):
        m_primes = factorize(m).primes()
        for n in range(1, 37):
            v = decide_zm(n, m)
            if v.clause is ZmClause.SAME_PRIME_POWERS:
                assert len(m_primes) == 1
                assert n == 1 or factorize(n).primes() == m_primes
            elif v.clause is ZmClause.MULTI_PRIME_DIVIDES:
                assert len(m_primes) >= 2 and m % n == 0
            assert v.nilpotent == (v.clause is not ZmClause.NOT_NILPOTENT)


def test_per_prime_verdicts_all_nilpotent_when_zm_is():
    for m in range(2, 25):
        for n in range(1, 25):
            v = decide_zm_via_primes(n, m)
            if v.nilpotent:
                assert all(z.nilpotent for z in v.per_prime)
            assert len(v.per_prime) == len(factorize(m).primes())


def test_zm_json_schema():
    d = decide_zm_via_primes(6, 6).to_json_dict()
    assert d["nilpotent"] is True
    assert d["clause"] == "multi_prime_divides"
    assert [z["p"] for z in d["per_prime"]] == [2, 3]
    assert "index" not in d  # exact index only appears once the oracle fills it


# ---------------------------------------------------------------------------
# witness, annihilation, degenerate case


def test_witness_examples():
    for n, m, p in [(8, 2, 2), (9, 3, 3), (4, 2, 2)]:
        elem, matches = witness_nonvanishing(n, m, p)
        assert matches
        assert elem.coeffs == (1,) * n  # these three cases have r=0, scale 1
        assert not circring.is_zero(elem)


def test_witness_with_nonzero_remainder():
    # n=8, m=4, p=2: a=3, b=2, so a = 2*1 + 1 and the step is p**1 = 2
    v = decide_zp(8, 4, 2)
    assert (v.qdiv, v.rdiv) == (1, 1)
    elem, matches = witness_nonvanishing(8, 4, 2)
    assert matches
    assert elem == circring.multiples_indicator(8, 2, 2)


def test_witness_precondition_errors():
    with pytest.raises(InvalidInput):
        witness_nonvanishing(4, 6, 3)  # not nilpotent
    with pytest.raises(InvalidInput):
        witness_nonvanishing(2, 4, 2)  # a=1 < b=2
    with pytest.raises(InvalidInput):
        annihilation_check(4, 6, 3)


def test_annihilation_examples():
    assert annihilation_check(8, 2, 2)
    assert annihilation_check(9, 3, 3)
    assert annihilation_check(4, 2, 2)


def test_witness_power_annihilates():
    for n, m, p in [(8, 2, 2), (9, 3, 3), (8, 4, 2), (27, 6, 3)]:
        v = decide_zp(n, m, p)
        assert v.nilpotent
        t = circring.geom_sum(n, m, p)
        last = circring.power(t, v.index - 1)
        assert not circring.is_zero(last)
        assert circring.is_zero(circring.mul(last, t))


def test_degenerate_below_one_division_step():
    # wherever b > a and the verdict is nilpotent, T itself is zero mod p
    for p in (2, 3, 5):
        for n in range(1, 28):
            for m in range(1, 28):
                v = decide_zp(n, m, p)
                if v.nilpotent and v.a < v.b:
                    assert v.index == 1
                    assert circring.is_zero(circring.geom_sum(n, m, p))


# ---------------------------------------------------------------------------
# necessity


def test_necessity_examples():
    r = necessity_checks(8, 2, 2)
    assert r.row_sum_ok and r.oracle_nilpotent and r.implication_ok
    r = necessity_checks(4, 6, 5)
    assert r.row_sum_ok and not r.oracle_nilpotent and r.implication_ok
    r = necessity_checks(6, 4, 2)
    assert r.row_sum_ok and r.implication_ok
    assert not r.oracle_nilpotent and not r.n_divides_m_pk


def test_necessity_row_sum_values():
    # the coefficient sum of T**k is m**k mod p
    t = circring.geom_sum(4, 6, 5)
    assert circring.row_sum(circring.power(t, 3)) == pow(6, 3, 5) == 1


def test_necessity_agrees_with_oracle_on_sample():
    for n, m, p in [(8, 2, 2), (12, 6, 2), (9, 6, 3), (10, 4, 2), (7, 5, 5)]:
        r = necessity_checks(n, m, p)
        truth = min_nilpotent_index(circring.geom_sum(n, m, p), n) is not None
        assert r.oracle_nilpotent == truth
        assert r.implication_ok
