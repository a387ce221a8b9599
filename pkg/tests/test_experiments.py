import json
from math import factorial

import pytest

from chessfock.arith import tri_count
from chessfock.experiments import (FactorizationRow, chess_table,
                                   cross_model_check, exhaustive_bound_check,
                                   factorial_check, factorize,
                                   general_e_scan, rows_to_csv, rows_to_jsonl,
                                   scan_row)
from chessfock.tableaux import OracleLimitError, ResidueWord, alternating_word

# The first 18 alternating-word pair sums, written as they factor:
#   1, 2, 2, 2^2, 2^3, 2^4, 2^4*3, 2^5*5, 2^6*7, 2^11, 2^8*5^2, 2^9*61,
#   2^10*3*41, 2^11*5*59, 2^11*1523, 2^13*23*83, 2^13*11411, 2^15*103*163
CHESS_VALUES = [
    1,
    2,
    2,
    2 ** 2,
    2 ** 3,
    2 ** 4,
    2 ** 4 * 3,
    2 ** 5 * 5,
    2 ** 6 * 7,
    2 ** 11,
    2 ** 8 * 5 ** 2,
    2 ** 9 * 61,
    2 ** 10 * 3 * 41,
    2 ** 11 * 5 * 59,
    2 ** 11 * 1523,
    2 ** 13 * 23 * 83,
    2 ** 13 * 11411,
    2 ** 15 * 103 * 163,
]


def test_factorize():
    assert factorize(1) == ((), 1)
    assert factorize(48) == (((2, 4), (3, 1)), 1)
    assert factorize(550141952) == (((2, 15), (103, 1), (163, 1)), 1)
    # primes above the trial bound stay in the cofactor, flagged
    big = 1_000_003 * 1_000_033
    factors, cofactor = factorize(2 * big)
    assert factors == ((2, 1),)
    assert cofactor == big
    with pytest.raises(ValueError):
        factorize(0)


def test_row_rendering():
    row = FactorizationRow(n=7, value=48, v2=4, bound=4,
                           factors=((2, 4), (3, 1)))
    assert row.factorization() == "2^4*3"
    assert row.verdict == "PASS"
    obs = FactorizationRow(n=3, value=6, v2=1, bound=None,
                           factors=((2, 1), (3, 1)))
    assert obs.verdict == "OBS"
    flagged = FactorizationRow(n=1, value=14, v2=1, bound=0,
                               factors=((2, 1),), cofactor=7)
    assert flagged.factorization() == "2*[7]"
    one = FactorizationRow(n=1, value=1, v2=0, bound=0, factors=())
    assert one.factorization() == "1"


def test_chess_table_values():
    rows = chess_table(18)
    assert [row.value for row in rows] == CHESS_VALUES
    for row in rows:
        assert row.bound == row.n - tri_count(row.n)
        assert row.verdict == "PASS"
        assert row.cofactor == 1
        rebuilt = 1
        for p, e in row.factors:
            rebuilt *= p ** e
        assert rebuilt == row.value
    # the n = 10 row is the striking one: value 2^11, far above bound 6
    ten = rows[9]
    assert ten.v2 == 11 and ten.bound == 6


def test_chess_table_matches_pair_sum():
    rows = chess_table(6)
    from chessfock.fock import pair_sum
    for row in rows:
        w = alternating_word(row.n)
        assert row.value == pair_sum(w, w)


def test_csv_and_jsonl_golden():
    rows = chess_table(3)
    assert rows_to_csv(rows) == (
        "n,value,v2,bound,factorization,verdict\n"
        "1,1,0,0,1,PASS\n"
        "2,2,1,1,2,PASS\n"
        "3,2,1,1,2,PASS\n"
    )
    lines = rows_to_jsonl(rows).strip().split("\n")
    payload = json.loads(lines[2])
    assert payload == {"n": 3, "value": 2, "v2": 1, "bound": 1,
                       "factorization": "2", "factors": [[2, 1]],
                       "cofactor": 1, "verdict": "PASS"}


def test_exhaustive_bound_check_small():
    for n in range(1, 9):
        report = exhaustive_bound_check(n)
        assert report.verdict == "PASS", report.to_json()
        assert report.required == n - tri_count(n)
        assert report.tight
    with pytest.raises(OracleLimitError):
        exhaustive_bound_check(11)
    assert exhaustive_bound_check(3, limit=3).verdict == "PASS"


def test_factorial_check():
    for n in range(9):
        assert factorial_check(n)


def test_general_e_scan_modulus_one():
    for row in general_e_scan(7, 1, 2):
        assert row.value == factorial(row.n)
        assert row.verdict == "OBS"
        assert row.bound is None


def test_general_e_scan_modulus_two_matches_chess_table():
    scan = general_e_scan(9, 2, 2)
    chess = chess_table(9)
    for left, right in zip(scan, chess):
        assert (left.n, left.value, left.v2, left.bound) == \
            (right.n, right.value, right.v2, right.bound)
        assert left.verdict == "PASS"


def test_general_e_scan_other_modulus_is_observational():
    rows = general_e_scan(8, 3, 3)
    assert all(row.verdict == "OBS" for row in rows)
    assert all(row.bound is None for row in rows)
    # by hand: the images are |1>, |11>, then |21> + |111>
    assert [row.value for row in rows][:3] == [1, 1, 2]
    with pytest.raises(ValueError):
        general_e_scan(5, 3, 4)


def test_scan_row_explicit_words():
    row = scan_row(alternating_word(7), alternating_word(7), 2)
    assert row.value == 48 and row.v2 == 4 and row.bound == 4
    row = scan_row(alternating_word(7), alternating_word(7), 3)
    assert row.bound is None and row.v2 == 1
    with pytest.raises(ArithmeticError):
        scan_row(ResidueWord(2, (0, 0)), ResidueWord(2, (0, 0)), 2)


def test_cross_model_check_small():
    for n in range(1, 7):
        summary = cross_model_check(n)
        assert summary["ok"], summary
        assert summary["support_match"]
        m = summary["nonzero_words"]
        assert summary["pairs"] == m * (m + 1) // 2
