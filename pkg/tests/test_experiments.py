import json
from fractions import Fraction
from math import comb

import pytest

from levcent import closed_forms as cf
from levcent import experiments as ex
from levcent import generators as gen
from levcent.centrality import DegreeProfile, leverage_vertex, realize_profile
from levcent.errors import DomainError, ResourceError
from levcent.graph import path_power
from oracles import naive_zero_profiles


@pytest.mark.parametrize("n, m, count", [(5, 2, 6), (5, 3, 10), (6, 2, 6)])
def test_bruteforce_counts(n, m, count):
    res = ex.count_distinct_bruteforce(gen.path(n), m)
    assert res.distinct_count == count and res.matches_bound
    assert res.method == "brute-force"


def test_bruteforce_budget():
    with pytest.raises(ResourceError, match="class-enumeration"):
        ex.count_distinct_bruteforce(gen.path(5), 4, budget=600)


@pytest.mark.parametrize("m, count", [(1, 3), (6, 28), (10, 66)])
def test_class_counts(m, count):
    res = ex.count_distinct_classes(m)
    assert res.distinct_count == count == res.bound


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", [5, 6, 7])
def test_method_agreement(m, n):
    if n**m > 20000:
        pytest.skip("above desk-scale budget")
    assert (ex.count_distinct_bruteforce(gen.path(n), m).distinct_count
            == ex.count_distinct_classes(m).distinct_count)


def test_sorted_classes_m6_matches_reference():
    assert [c.ji for c in ex.sorted_classes(6)] == ex.REFERENCE_ORDERINGS[6]


def test_conjecture_scan_k1():
    res = ex.conjecture_scan(1, 5, 3)
    assert [r.distinct_count for r in res] == [3, 6, 10]
    assert all(r.matches_bound and r.exploratory for r in res)


def test_conjecture_scan_records_k2():
    res = ex.conjecture_scan(2, 9, 2)
    assert [r.bound for r in res] == [comb(4, 3), comb(5, 3)]
    # P_9^2 endpoints through center: -4/15, -1/35, 5/42, 1/28, 0
    assert res[0].distinct_count == 5
    assert res[0].exceeds_bound and not res[0].matches_bound


def test_conjecture_scan_hypothesis_and_budget():
    with pytest.raises(DomainError):
        ex.conjecture_scan(2, 8, 1)
    with pytest.raises(ResourceError):
        ex.conjecture_scan(2, 9, 3, budget=500)


def test_path_power_leverage_by_hand():
    from levcent.centrality import leverage_values
    vals = leverage_values(path_power(9, 2))
    assert vals[:5] == [Fraction(-4, 15), Fraction(-1, 35), Fraction(5, 42),
                        Fraction(1, 28), Fraction(0)]


def test_zero_search_k3():
    assert ex.zero_search(3, 20).solutions == [(1, 2, 17), (1, 3, 9)]


def test_zero_search_includes_reference_rows():
    assert (1, 2, 5, 41) in ex.zero_search(4, 50).solutions
    assert (1, 2, 3, 6, 36, 66) in ex.zero_search(6, 70).solutions


@pytest.mark.parametrize("k", range(2, 9))
def test_zero_search_near_regular_family(k):
    # one neighbor of degree 1, the rest of degree k + 2
    row = (1,) + (k + 2,) * (k - 1)
    assert row in ex.zero_search(k, k + 2, require_distinct=False).solutions


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("distinct", [True, False])
def test_zero_search_complete_against_naive(k, distinct):
    for bound in (1, 5, 12, 30):
        got = ex.zero_search(k, bound, distinct).solutions
        assert got == naive_zero_profiles(k, bound, distinct)


def test_zero_search_worker_independent():
    serial = ex.zero_search(7, 85)
    parallel = ex.zero_search(7, 85, workers=3)
    assert serial.solutions == parallel.solutions


def test_zero_solutions_realize():
    for k, bound in [(3, 20), (5, 40), (6, 40)]:
        for sol in ex.zero_search(k, bound).solutions:
            assert len(sol) == k and max(sol) <= bound
            assert list(sol) == sorted(set(sol))
            g, c = realize_profile(DegreeProfile(k, sol))
            assert leverage_vertex(g, c) == 0


def test_zero_search_json():
    d = json.loads(json.dumps(ex.zero_search(3, 20).to_dict()))
    assert d["solutions"] == [[1, 2, 17], [1, 3, 9]] and d["count"] == 2


def test_zero_search_domain():
    with pytest.raises(DomainError):
        ex.zero_search(0, 5)


def test_convergence_table():
    rows = ex.convergence_table(100)
    assert rows[0] == (1, Fraction(-1, 3), Fraction(1, 6))
    assert rows[1] == (2, Fraction(-1, 5), Fraction(1, 14))
    assert rows[-1] == (100, Fraction(-1, 201), Fraction(1, 798))
    from levcent.centrality import leverage_all
    r = leverage_all(gen.lattice(2, 5))
    assert (r.minimum, r.maximum) == rows[1][1:]
    assert ex.convergence_rows(1) == [{"m": 1, "min": "-1/3", "max": "1/6"}]


def test_result_serialization():
    d = ex.count_distinct_classes(4).to_dict()
    assert d["matches_bound"] and d["method"] == "class-enumeration" and d["bound"] == 15
