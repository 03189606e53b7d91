"""Independent brute-force references. Deliberately naive and sharing no
code with the package beyond plain edge lists."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product


def naive_leverage(n, edges):
    nbrs = {v: [] for v in range(n)}
    for u, v in set(map(tuple, map(sorted, edges))):
        nbrs[u].append(v)
        nbrs[v].append(u)
    deg = {v: len(nbrs[v]) for v in nbrs}
    out = []
    for v in range(n):
        terms = [Fraction(deg[v] - deg[u], deg[v] + deg[u]) for u in nbrs[v]]
        out.append(sum(terms, Fraction(0)) / deg[v])
    return out


def naive_zero_profiles(k, bound, distinct=True):
    pick = combinations if distinct else combinations_with_replacement
    return sorted(c for c in pick(range(1, bound + 1), k)
                  if sum(Fraction(k - d, k + d) for d in c) == 0)


def grid_edges(m, n):
    """Edges of the m-fold P_n lattice keyed by coordinate tuples (1-based)."""
    pts = list(product(range(1, n + 1), repeat=m))
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for p in pts:
        for axis in range(m):
            if p[axis] < n:
                q = p[:axis] + (p[axis] + 1,) + p[axis + 1:]
                edges.append((index[p], index[q]))
    return pts, edges


def cross_less(a: Fraction, b: Fraction) -> bool:
    # denominators positive
    return a.numerator * b.denominator < b.numerator * a.denominator
