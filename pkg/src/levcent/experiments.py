"""Computational experiments: distinct-value counts on lattices, the
path-power scan, exhaustive zero-leverage profile search, convergence table,
and the seeded random-graph corpus used by the property checks."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import closed_forms as cf
from .centrality import leverage_values
from .errors import DomainError
from .exactq import to_text
from .graph import Graph, check_budget, iterated_product, path_power

DEFAULT_SEED = 2015


@dataclass
class DistinctCountResult:
    m: int
    n: int | None
    k: int
    method: str
    distinct_count: int
    bound: int
    elapsed: float = 0.0
    exploratory: bool = False

    @property
    def matches_bound(self) -> bool:
        return self.distinct_count == self.bound

    @property
    def exceeds_bound(self) -> bool:
        return self.distinct_count > self.bound

    def to_dict(self) -> dict:
        d = asdict(self)
        d["matches_bound"] = self.matches_bound
        d["elapsed"] = round(self.elapsed, 6)
        return d


def count_distinct_bruteforce(base: Graph, m: int, k: int = 1,
                              budget: int | None = None) -> DistinctCountResult:
    """Build the m-fold product of ``base`` and count distinct leverage values.

    ``k`` only selects the comparison bound C(m+k+1, k+1); pass the path
    power order when ``base`` is P_n^k.
    """
    t0 = time.perf_counter()
    check_budget(base.vertex_count**m, budget)
    g = iterated_product(base, m, budget)
    count = len(set(leverage_values(g)))
    return DistinctCountResult(m=m, n=base.vertex_count, k=k, method="brute-force",
                               distinct_count=count, bound=cf.polytopal_bound(m, k),
                               elapsed=time.perf_counter() - t0)


def class_values(m: int) -> dict[cf.LatticeClass, Fraction]:
    return {c: cf.lattice_class_leverage(c) for c in cf.enumerate_classes(m)}


def count_distinct_classes(m: int) -> DistinctCountResult:
    """Distinct values over coordinate classes; valid for every n >= 5."""
    t0 = time.perf_counter()
    count = len(set(class_values(m).values()))
    return DistinctCountResult(m=m, n=None, k=1, method="class-enumeration",
                               distinct_count=count, bound=cf.triangle_bound(m),
                               elapsed=time.perf_counter() - t0)


def conjecture_scan(k: int, n: int, m_max: int,
                    budget: int | None = None) -> list[DistinctCountResult]:
    """Distinct counts on m-fold products of P_n^k against C(m+k+1, k+1).

    Exploratory: results are reported, never asserted.
    """
    if n < 4 * k + 1:
        raise DomainError(f"scan needs n >= 4k+1 = {4 * k + 1}, got n={n}")
    if m_max < 1:
        raise DomainError("m_max must be >= 1")
    base = path_power(n, k)
    check_budget(n**m_max, budget)
    out = []
    for m in range(1, m_max + 1):
        res = count_distinct_bruteforce(base, m, k=k, budget=budget)
        res.exploratory = True
        out.append(res)
    return out


# (j, i) pairs listed from smallest to largest leverage, as printed for m = 4..6.
REFERENCE_ORDERINGS: dict[int, list[tuple[int, int]]] = {
    4: [(0, 0), (1, 1), (1, 0), (2, 2), (2, 1), (3, 3), (4, 4), (3, 2), (2, 0),
        (4, 3), (3, 1), (4, 2), (3, 0), (4, 1), (4, 0)],
    5: [(0, 0), (1, 1), (1, 0), (2, 2), (2, 1), (3, 3), (2, 0), (3, 2), (4, 4),
        (5, 5), (4, 3), (3, 1), (5, 4), (4, 2), (3, 0), (5, 3), (4, 1), (5, 2),
        (4, 0), (5, 1), (5, 0)],
    6: [(0, 0), (1, 1), (1, 0), (2, 2), (2, 1), (3, 3), (2, 0), (3, 2), (4, 4),
        (3, 1), (4, 3), (5, 5), (6, 6), (5, 4), (4, 2), (3, 0), (6, 5), (5, 3),
        (4, 1), (6, 4), (5, 2), (6, 3), (4, 0), (5, 1), (6, 2), (5, 0), (6, 1),
        (6, 0)],
}


def sorted_classes(m: int) -> list[cf.LatticeClass]:
    """Classes in increasing order of leverage."""
    vals = class_values(m)
    return sorted(vals, key=vals.__getitem__)


# ---------------------------------------------------------------------------
# zero-leverage profile search

@dataclass
class ZeroSearchResult:
    center_degree: int
    bound: int
    require_distinct: bool
    solutions: list[tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "center_degree": self.center_degree,
            "bound": self.bound,
            "require_distinct": self.require_distinct,
            "count": len(self.solutions),
            "solutions": [list(s) for s in self.solutions],
        }


# Float sums only prune; every reported solution is confirmed exactly.
_SLACK = 1e-9


def _is_zero_profile(k: int, seq) -> bool:
    return sum(Fraction(k - d, k + d) for d in seq) == 0


def _search_first(k: int, bound: int, distinct: bool, first: int) -> list[tuple[int, ...]]:
    f = [0.0] + [(k - d) / (k + d) for d in range(1, bound + 1)]
    f_min = f[bound]
    out: list[tuple[int, ...]] = []
    prefix = [first]

    def solve_last(s: float, start: int) -> None:
        # f(d) = -s  <=>  d = k (1 + s) / (1 - s)
        if not -1.0 < s < 1.0:
            return
        est = k * (1 + s) / (1 - s)
        base = int(est)
        for d in (base - 1, base, base + 1):
            if start <= d <= bound and abs(s + f[d]) < _SLACK:
                seq = prefix + [d]
                if _is_zero_profile(k, seq):
                    out.append(tuple(seq))

    def rec(s: float, start: int, left: int) -> None:
        if left == 1:
            solve_last(s, start)
            return
        for d in range(start, bound + 1):
            ns = s + f[d]
            nxt = d + 1 if distinct else d
            if nxt > bound:
                break
            rest = left - 1
            if ns + rest * f[nxt] < -_SLACK:
                break
            if ns + rest * f_min > _SLACK:
                continue
            prefix.append(d)
            rec(ns, nxt, rest)
            prefix.pop()

    if k == 1:
        if first == 1 and bound >= 1:
            out.append((1,))
        return out
    s0 = f[first]
    nxt = first + 1 if distinct else first
    if nxt <= bound:
        rest = k - 1
        if s0 + rest * f[nxt] >= -_SLACK and s0 + rest * f_min <= _SLACK:
            rec(s0, nxt, rest)
    return out


def zero_search(k: int, bound: int, require_distinct: bool = True,
                workers: int = 1) -> ZeroSearchResult:
    """All sorted neighbor-degree tuples (entries <= ``bound``) giving leverage
    exactly 0 at a center of degree ``k``. Strictly increasing tuples only when
    ``require_distinct``. Output is lexicographic regardless of ``workers``."""
    if k < 1 or bound < 1:
        raise DomainError(f"need k >= 1 and bound >= 1, got k={k}, bound={bound}")
    firsts = range(1, bound + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_search_first, *zip(*((k, bound, require_distinct, a)
                                                        for a in firsts))))
    else:
        parts = [_search_first(k, bound, require_distinct, a) for a in firsts]
    sols = sorted(s for part in parts for s in part)
    return ZeroSearchResult(k, bound, require_distinct, sols)


# neighbor-degree tuples printed as zero-leverage examples, keyed by center degree
REFERENCE_ZERO_PROFILES: dict[int, list[tuple[int, ...]]] = {
    3: [(1, 2, 17), (1, 3, 9)],
    4: [(1, 2, 5, 41)],
    5: [(1, 2, 4, 13, 37), (1, 2, 5, 10, 37), (1, 3, 5, 7, 35)],
    6: [(1, 2, 3, 6, 36, 66)],
    7: [(1, 2, 3, 7, 11, 33, 77), (1, 2, 3, 9, 11, 33, 41), (1, 2, 3, 11, 13, 23, 33),
        (1, 2, 5, 7, 11, 21, 49), (1, 2, 5, 7, 11, 28, 33), (1, 2, 5, 8, 13, 17, 38),
        (1, 2, 5, 9, 11, 13, 73), (1, 2, 5, 11, 14, 17, 21), (1, 3, 4, 5, 8, 37, 81),
        (1, 3, 5, 7, 8, 21, 49), (1, 3, 5, 7, 8, 28, 33), (1, 3, 5, 8, 9, 13, 73),
        (1, 3, 5, 8, 14, 17, 21)],
}


def convergence_table(m_max: int) -> list[tuple[int, Fraction, Fraction]]:
    if m_max < 1:
        raise DomainError("m_max must be >= 1")
    return [(m, cf.corner_leverage(m), cf.inner_corner_leverage(m))
            for m in range(1, m_max + 1)]


def convergence_rows(m_max: int) -> list[dict]:
    return [{"m": m, "min": to_text(lo), "max": to_text(hi)}
            for m, lo, hi in convergence_table(m_max)]


# ---------------------------------------------------------------------------
# random corpus

def random_connected_graph(rng: random.Random, n: int, extra: float | None = None) -> Graph:
    """Random recursive spanning tree plus ``extra`` x n random extra edges."""
    g = Graph(n)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], order[rng.randrange(i)])
    if extra is None:
        extra = rng.uniform(0.0, 2.0)
    max_edges = n * (n - 1) // 2
    target = min(max_edges, g.edge_count + int(extra * n))
    while g.edge_count < target:
        u, v = rng.sample(range(n), 2)
        g.add_edge(u, v)
    return g


def random_corpus(count: int = 500, seed: int = DEFAULT_SEED,
                  n_range: tuple[int, int] = (4, 40)) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(*n_range)) for _ in range(count)]
