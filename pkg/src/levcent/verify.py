"""Named verification checks: each pairs a closed form or structural claim
with a brute-force computation and reports the first counterexample."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from . import closed_forms as cf
from . import experiments as ex
from . import generators as gen
from .centrality import (DegreeProfile, leverage_of_profile, leverage_values,
                         leverage_vertex, realize_profile, vertex_profile)
from .errors import UnknownCheckError
from .graph import Graph, cartesian_product, lattice_coordinates


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    detail: str = ""
    counterexample: dict | None = None
    extra: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name}  ({self.cases} cases)"
        if self.detail:
            text += f"  {self.detail}"
        return text


class _Fail(Exception):
    def __init__(self, **info):
        self.info = info


def _expect(cond: bool, **info) -> None:
    if not cond:
        raise _Fail(**{k: str(v) for k, v in info.items()})


CHECKS: dict[str, Callable[[], tuple[int, str]]] = {}


def check(name: str):
    def deco(fn):
        CHECKS[name] = fn
        return fn
    return deco


def regular_corpus() -> list[Graph]:
    gs: list[Graph] = [gen.cycle(n) for n in range(3, 13)] + [gen.complete(n) for n in range(2, 10)]
    gs += [cartesian_product(gen.cycle(a), gen.cycle(b)) for a in (3, 4, 5) for b in (3, 4)]
    gs += [gen.complete_multipartite([t] * r) for t in (2, 3) for r in (2, 3, 4)]
    return gs


def _lattices(m_max: int = 4, ns=(5, 6, 7)):
    for m in range(1, m_max + 1):
        for n in ns:
            yield m, n, gen.lattice(m, n)


@check("sum-nonpositive")
def _sum_nonpositive():
    cases = 0
    for idx, g in enumerate(ex.random_corpus()):
        total = sum(leverage_values(g), Fraction(0))
        _expect(total <= 0, graph=f"corpus[{idx}]", total=total)
        _expect((total == 0) == g.is_regular(), graph=f"corpus[{idx}]", total=total,
                regular=g.is_regular())
        cases += 1
    for g in regular_corpus():
        _expect(sum(leverage_values(g), Fraction(0)) == 0, graph=repr(g))
        cases += 1
    return cases, f"seed={ex.DEFAULT_SEED}"


@check("leverage-bound")
def _leverage_bound():
    cases = 0
    graphs = ex.random_corpus() + regular_corpus() + [gen.star(n) for n in range(3, 31)]
    for g in graphs:
        n = g.vertex_count
        cap = 1 - Fraction(2, n)
        for v, x in enumerate(leverage_values(g)):
            _expect(abs(x) <= cap, graph=repr(g), vertex=v, leverage=x, bound=cap)
            cases += 1
    for n in range(3, 31):
        vals = leverage_values(gen.star(n))
        cap = 1 - Fraction(2, n)
        _expect(vals[0] == cap and all(x == -cap for x in vals[1:]), star=n)
    return cases, "tight on stars n=3..30"


@check("extremal-degree-signs")
def _extremal_degree_signs():
    cases = 0
    for idx, g in enumerate(ex.random_corpus()):
        deg = g.degrees()
        lo, hi = min(deg), max(deg)
        for v, x in enumerate(leverage_values(g)):
            if deg[v] == lo:
                _expect(x <= 0, graph=f"corpus[{idx}]", vertex=v, leverage=x)
            if deg[v] == hi:
                _expect(x >= 0, graph=f"corpus[{idx}]", vertex=v, leverage=x)
            cases += 1
    return cases, ""


@check("profile-consistency")
def _profile_consistency():
    cases = 0
    for idx, g in enumerate(ex.random_corpus(count=100)):
        vals = leverage_values(g)
        for v in range(g.vertex_count):
            p = vertex_profile(g, v)
            _expect(leverage_of_profile(p) == vals[v] == leverage_vertex(g, v),
                    graph=f"corpus[{idx}]", vertex=v)
            cases += 1
    return cases, ""


@check("realize-roundtrip")
def _realize_roundtrip():
    rng = random.Random(ex.DEFAULT_SEED)
    for _ in range(1000):
        k = rng.randint(1, 8)
        p = DegreeProfile(k, [rng.randint(1, 100) for _ in range(k)])
        g, c = realize_profile(p)
        _expect(vertex_profile(g, c) == p, profile=p)
        _expect(leverage_vertex(g, c) == leverage_of_profile(p), profile=p)
    return 1000, ""


@check("star-extremes")
def _star_extremes():
    for n in range(3, 31):
        vals = leverage_values(gen.star(n))
        _expect(vals[0] == 1 - Fraction(2, n), n=n, center=vals[0])
        _expect(all(x == -1 + Fraction(2, n) for x in vals[1:]), n=n)
    return 28, ""


@check("regular-zero")
def _regular_zero():
    cases = 0
    for g in regular_corpus():
        _expect(all(x == 0 for x in leverage_values(g)), graph=repr(g))
        cases += 1
    return cases, ""


@check("positive-count")
def _positive_count():
    cases = 0
    for n in range(11, 26):
        g = gen.positive_construction_a(n)
        vals = leverage_values(g)
        _expect(sum(x > 0 for x in vals) == n - 1, construction="a", n=n)
        want = Fraction(n - 10, n * (2 * n - 5))
        _expect(all(vals[i] == want for i in range(n - 4, n - 1)), construction="a", n=n,
                expected=want, actual=vals[n - 4])
        cases += 1
    for n in range(12, 26):
        g = gen.positive_construction_b(n)
        vals = leverage_values(g)
        _expect(sum(x > 0 for x in vals) == n - 1, construction="b", n=n)
        want = Fraction(n * n - 15 * n + 40, 2 * n**3 - 9 * n**2 + 4 * n + 15)
        _expect(all(vals[i] == want for i in range(n - 5, n - 1)), construction="b", n=n,
                expected=want, actual=vals[n - 5])
        cases += 1
    return cases, "n-1 positive each"


@check("degree-vs-leverage")
def _degree_vs_leverage():
    for n in range(5, 16):
        g, u, v = gen.dumbbell_claw(n)
        vals = leverage_values(g)
        deg = g.degrees()
        _expect(deg[u] == n > deg[v] == 4, n=n)
        _expect(vals[u] == Fraction(1, 2 * n * n - n), n=n, lu=vals[u])
        _expect(vals[v] == Fraction(8, 15), n=n, lv=vals[v])
        _expect(max(vals) == vals[v] and deg[v] < max(deg), n=n)
    return 11, ""


@check("multipartite-oracle")
def _multipartite_oracle():
    cases = 0
    for r in range(2, 5):
        for sizes in product(range(1, 6), repeat=r):
            vals = leverage_values(gen.complete_multipartite(sizes))
            for i in range(r):
                want = cf.multipartite_leverage(sizes, i)
                for v in gen.part_vertices(sizes, i):
                    _expect(vals[v] == want, spec=sizes, part=i, expected=want, actual=vals[v])
                cases += 1
    return cases, ""


@check("product-oracle")
def _product_oracle():
    rng = random.Random(ex.DEFAULT_SEED)
    cases = 0
    factors = [(r, gen.cycle(r), r_deg) for r, r_deg in ((3, 2), (4, 2), (5, 2))]
    factors += [(m, gen.complete(m), m - 1) for m in (2, 3, 4)]
    bases = [ex.random_connected_graph(rng, rng.randint(2, 10)) for _ in range(50)]
    for size, factor, reg in factors:
        is_complete = factor.edge_count == size * (size - 1) // 2
        for bi, base in enumerate(bases):
            vals = leverage_values(cartesian_product(factor, base))
            nb = base.vertex_count
            for u in range(size):
                for v in range(nb):
                    p = vertex_profile(base, v)
                    want = (cf.complete_product_leverage(size, p) if is_complete
                            else cf.regular_product_leverage(reg, p))
                    _expect(vals[u * nb + v] == want, factor=repr(factor), base=bi,
                            vertex=(u, v), expected=want, actual=vals[u * nb + v])
                    cases += 1
    return cases, f"seed={ex.DEFAULT_SEED}"


@check("lattice-classes")
def _lattice_classes():
    cases = 0
    for m, n, g in _lattices():
        for v, x in enumerate(leverage_values(g)):
            c = cf.LatticeClass.of_coordinates(lattice_coordinates(g, v), n)
            want = cf.lattice_class_leverage(c)
            _expect(x == want, m=m, n=n, vertex=g.label(v), expected=want, actual=x)
            _expect(want == cf.lattice_leverage_ji(m, *c.ji), m=m, cls=c)
            cases += 1
        counts: dict = {}
        for v in range(g.vertex_count):
            c = cf.LatticeClass.of_coordinates(lattice_coordinates(g, v), n)
            counts[c] = counts.get(c, 0) + 1
        for c in cf.enumerate_classes(m):
            _expect(counts.get(c, 0) == cf.class_multiplicity(c, n), m=m, n=n, cls=c)
    return cases, "m<=4, n in 5..7"


def _is_corner(coords, n):
    return all(c in (1, n) for c in coords)


def _is_inner_corner(coords, n):
    return all(c in (2, n - 1) for c in coords)


@check("lattice-extremes")
def _lattice_extremes():
    cases = 0
    for m, n, g in _lattices():
        vals = leverage_values(g)
        lo, hi = cf.corner_leverage(m), cf.inner_corner_leverage(m)
        _expect(min(vals) == lo and max(vals) == hi, m=m, n=n)
        for v, x in enumerate(vals):
            coords = lattice_coordinates(g, v)
            if _is_corner(coords, n):
                _expect(x == lo, m=m, n=n, vertex=g.label(v), actual=x)
            else:
                _expect(x > lo, m=m, n=n, vertex=g.label(v), actual=x)
            if _is_inner_corner(coords, n):
                _expect(x == hi, m=m, n=n, vertex=g.label(v), actual=x)
            else:
                _expect(x < hi, m=m, n=n, vertex=g.label(v), actual=x)
            cases += 1
    return cases, "m<=4, n in 5..7"


@check("lattice-degrees")
def _lattice_degrees():
    cases = 0
    for m, n, g in _lattices():
        deg = g.degrees()
        for v in range(g.vertex_count):
            _expect(m <= deg[v] <= 2 * m, m=m, n=n, vertex=g.label(v))
            for u in g.adj[v]:
                _expect(abs(deg[u] - deg[v]) <= 1, m=m, n=n, edge=(g.label(v), g.label(u)))
                cases += 1
    return cases, "neighbor degrees within 1; m <= deg <= 2m"


@check("convergence")
def _convergence():
    rows = ex.convergence_table(1000)
    for (m0, lo0, hi0), (m1, lo1, hi1) in zip(rows, rows[1:]):
        _expect(lo0 < lo1 < 0 < hi1 < hi0, m=m1)
    _expect(rows[-1][1] == Fraction(-1, 2001) and rows[-1][2] == Fraction(1, 7998))
    return len(rows), "m=1..1000"


@check("triangle-counts")
def _triangle_counts():
    cases = 0
    for m in range(1, 11):
        res = ex.count_distinct_classes(m)
        _expect(res.matches_bound, m=m, count=res.distinct_count, bound=res.bound)
        cases += 1
    for m in range(1, 6):
        for n in (5, 6, 7):
            if n**m > 20000:
                continue
            res = ex.count_distinct_bruteforce(gen.path(n), m)
            _expect(res.distinct_count == ex.count_distinct_classes(m).distinct_count,
                    m=m, n=n, brute=res.distinct_count)
            cases += 1
    return cases, "classes m<=10, brute force m<=5"


@check("ordering-chains")
def _ordering_chains():
    for m, chain in ex.REFERENCE_ORDERINGS.items():
        vals = [cf.lattice_leverage_ji(m, j, i) for j, i in chain]
        _expect(all(a < b for a, b in zip(vals, vals[1:])), m=m)
        got = [c.ji for c in ex.sorted_classes(m)]
        _expect(got == chain, m=m, got=got)
    return len(ex.REFERENCE_ORDERINGS), "m=4,5,6"


@check("zero-profiles")
def _zero_profiles():
    cases = 0
    for k, bound in ((3, 20), (4, 50), (5, 40), (6, 70), (7, 85)):
        res = ex.zero_search(k, bound)
        found = set(res.solutions)
        for row in ex.REFERENCE_ZERO_PROFILES[k]:
            _expect(row in found, k=k, bound=bound, missing=row)
        for sol in res.solutions:
            g, c = realize_profile(DegreeProfile(k, sol))
            _expect(leverage_vertex(g, c) == 0, k=k, profile=sol)
            cases += 1
    return cases, "every reference row found; all solutions realize to 0"


def available_checks() -> list[str]:
    return list(CHECKS)


def verify_suite(name: str) -> CheckResult:
    if name not in CHECKS:
        raise UnknownCheckError(
            f"unknown check {name!r}; available: {', '.join(available_checks())}")
    try:
        cases, detail = CHECKS[name]()
    except _Fail as fail:
        return CheckResult(name, False, detail="counterexample found",
                           counterexample=fail.info)
    return CheckResult(name, True, cases, detail)


def verify_all() -> list[CheckResult]:
    return [verify_suite(name) for name in CHECKS]
