import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from levcent import generators as gen
from levcent.centrality import (DegreeProfile, degree_centrality, leverage_all,
                                leverage_of_profile, leverage_values, leverage_vertex,
                                realize_profile, vertex_profile)
from levcent.errors import DomainError
from levcent.experiments import random_corpus
from levcent.graph import Graph, iterated_product
from oracles import naive_leverage


# Rows of a published 10-vertex example: center degree plus neighbor degrees,
# with neighbors of equal degree (zero terms) filled in to reach the degree.
PUBLISHED_ROWS = [
    (DegreeProfile.of(4, 5, 5, 5, 5), Fraction(1, 45)),
    (DegreeProfile.of(6, 5, 5, 5, 5), Fraction(-1, 55)),
    (DegreeProfile.of(5, 5, 5, 3, 6, 6), Fraction(10, 99)),
    (DegreeProfile.of(6, 5, 5, 3), Fraction(-22, 315)),
    (DegreeProfile.of(6, 6, 3), Fraction(-2, 9)),
    (DegreeProfile.of(5, 5, 4, 3, 6, 6), Fraction(59, 495)),
    (DegreeProfile.of(6, 6, 4, 5, 5), Fraction(-7, 495)),
    (DegreeProfile.of(6), Fraction(-5, 7)),
    (DegreeProfile.of(5, 5, 5, 1, 6, 6), Fraction(38, 231)),
]


@pytest.mark.parametrize("profile, value", PUBLISHED_ROWS)
def test_profile_rows(profile, value):
    assert leverage_of_profile(profile) == value


def test_profile_examples():
    assert leverage_of_profile(DegreeProfile(3, [1, 2, 17])) == 0
    assert leverage_of_profile(DegreeProfile(3, [3, 3, 3])) == 0


def test_profile_validation():
    with pytest.raises(DomainError):
        DegreeProfile(0, [])
    with pytest.raises(DomainError):
        DegreeProfile(2, [1])
    with pytest.raises(DomainError):
        DegreeProfile(2, [1, 0])


def test_k3_pendant_values():
    g = gen.k3_pendant()
    assert leverage_vertex(g, 2) == Fraction(-1, 2)
    # (1/3)(1/2 + 1/5 + 1/5)
    assert leverage_vertex(g, 1) == Fraction(1, 3) * (Fraction(1, 2) + Fraction(2, 5)) == Fraction(3, 10)
    assert leverage_vertex(g, 0) == leverage_vertex(g, 3) == Fraction(-1, 10)


def test_isolated_vertex_is_error():
    g = Graph(3)
    g.add_edge(0, 1)
    with pytest.raises(DomainError, match="vertex 2"):
        leverage_all(g)
    with pytest.raises(DomainError):
        leverage_vertex(g, 2)


def test_star_report():
    r = leverage_all(gen.star(5))
    assert r.minimum == Fraction(-3, 5) and r.argmin == [1, 2, 3, 4]
    assert r.maximum == Fraction(3, 5) and r.argmax == [0]
    assert r.distinct_count == 2
    assert (r.positive_count, r.negative_count, r.zero_count) == (1, 4, 0)


def test_path_report():
    r = leverage_all(gen.path(7))
    assert r.distinct == {Fraction(-1, 3), Fraction(1, 6), Fraction(0)}


def test_grid_report():
    r = leverage_all(iterated_product(gen.path(5), 2))
    assert r.total < 0
    assert r.distinct_count == 6
    assert r.distinct == {Fraction(-1, 5), Fraction(2, 105), Fraction(-1, 21),
                          Fraction(1, 14), Fraction(1, 28), Fraction(0)}


def test_report_serialization():
    r = leverage_all(gen.k3_pendant())
    d = json.loads(json.dumps(r.to_dict(decimals=3)))
    assert d["vertices"][1] == {"id": 1, "label": "v2", "degree": 3, "leverage": "3/10",
                                "decimal": "0.300"}
    assert d["sum"] == "-2/5" and d["distinct_count"] == 3
    lines = r.to_csv().splitlines()
    assert lines[0] == "id,label,degree,leverage"
    assert lines[3] == "2,v3,1,-1/2"


def test_degree_centrality():
    assert degree_centrality(gen.star(5)) == [4, 1, 1, 1, 1]
    assert degree_centrality(gen.complete(4)) == [3, 3, 3, 3]
    g, u, v = gen.dumbbell_claw(5)
    deg, lev = degree_centrality(g), leverage_values(g)
    assert deg.index(max(deg)) != lev.index(max(lev))


@pytest.mark.parametrize("k, degs", [(3, [1, 2, 17]), (1, [1]), (2, [1, 4])])
def test_realize_profile_zero(k, degs):
    g, c = realize_profile(DegreeProfile(k, degs))
    assert leverage_vertex(g, c) == 0
    assert vertex_profile(g, c) == DegreeProfile(k, degs)


def test_realize_profile_size():
    g, _ = realize_profile(DegreeProfile(3, [1, 2, 17]))
    assert g.vertex_count == 1 + 3 + 0 + 1 + 16


@given(st.lists(st.integers(1, 100), min_size=1, max_size=8))
def test_realize_round_trip(degs):
    p = DegreeProfile(len(degs), degs)
    g, c = realize_profile(p)
    assert leverage_vertex(g, c) == leverage_of_profile(p)


CORPUS = random_corpus(count=500)


def test_matches_naive_oracle():
    for g in CORPUS[:150]:
        assert leverage_values(g) == naive_leverage(g.vertex_count, list(g.edges()))


def test_sum_nonpositive_iff_regular():
    regular = [gen.cycle(7), gen.complete(6), gen.complete_multipartite([3, 3, 3])]
    for g in CORPUS + regular:
        total = leverage_all(g).total
        assert total <= 0
        assert (total == 0) == g.is_regular()


def test_bound_and_extremal_signs():
    for g in CORPUS:
        n = g.vertex_count
        vals = leverage_values(g)
        deg = g.degrees()
        assert all(abs(x) <= 1 - Fraction(2, n) for x in vals)
        for v, x in enumerate(vals):
            if deg[v] == min(deg):
                assert x <= 0
            if deg[v] == max(deg):
                assert x >= 0


def test_profile_consistency():
    for g in CORPUS[:100]:
        vals = leverage_values(g)
        for v in range(g.vertex_count):
            assert leverage_of_profile(vertex_profile(g, v)) == vals[v]


def test_random_corpus_is_deterministic_and_connected():
    a, b = random_corpus(count=20, seed=7), random_corpus(count=20, seed=7)
    assert all(x == y for x, y in zip(a, b))
    for g in a:
        assert 4 <= g.vertex_count <= 40
        seen, stack = {0}, [0]
        while stack:
            for u in g.adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        assert len(seen) == g.vertex_count


def test_realize_random_profiles():
    rng = random.Random(11)
    for _ in range(1000):
        k = rng.randint(1, 8)
        p = DegreeProfile(k, [rng.randint(1, 100) for _ in range(k)])
        g, c = realize_profile(p)
        assert leverage_vertex(g, c) == leverage_of_profile(p)
