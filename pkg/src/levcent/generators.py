"""Graph families: standard ones plus the specific constructions whose
leverage values are worked out by hand (positive-majority graphs, the
degree-vs-leverage dumbbell, the triangle with a pendant)."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import GraphError
from .graph import Graph, iterated_product, path_power


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(n: int) -> Graph:
    """P_n with vertices labelled 1..n."""
    _need(n >= 2, f"path needs n >= 2, got {n}")
    return path_power(n, 1)


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _need(n >= 2, f"complete needs n >= 2, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n-1} with the center at id 0."""
    _need(n >= 2, f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """K_{t_1,...,t_r}; vertices are numbered part by part, labelled ``part:i``
    with 0-based part index ``i``."""
    sizes = list(part_sizes)
    _need(len(sizes) >= 2, "complete multipartite graph needs at least two parts")
    _need(all(t >= 1 for t in sizes), f"part sizes must be positive: {sizes}")
    part_of = [i for i, t in enumerate(sizes) for _ in range(t)]
    g = Graph(len(part_of), [f"part:{i}" for i in part_of])
    for u, v in combinations(range(len(part_of)), 2):
        if part_of[u] != part_of[v]:
            g.add_edge(u, v)
    return g


def part_vertices(part_sizes: Sequence[int], part: int) -> range:
    """Ids of the vertices of ``part`` in :func:`complete_multipartite`."""
    start = sum(part_sizes[:part])
    return range(start, start + part_sizes[part])


def lattice(m: int, n: int) -> Graph:
    """The m-fold product of P_n, labelled by coordinate tuples in 1..n."""
    return iterated_product(path(n), m)


def path_power_lattice(m: int, n: int, k: int) -> Graph:
    return iterated_product(path_power(n, k), m)


def k3_pendant() -> Graph:
    """Triangle v1 v2 v4 with pendant v3 hanging off v2 (ids 0..3 = v1..v4)."""
    return Graph.from_edges(4, [(0, 1), (1, 3), (0, 3), (1, 2)],
                            labels=["v1", "v2", "v3", "v4"])


def positive_construction_a(n: int) -> Graph:
    """n-1 vertices of positive leverage (needs n >= 11).

    Clique on v_1..v_{n-4}, joined completely to v_{n-3}, v_{n-2}, v_{n-1},
    which are in turn the only neighbors of v_n.
    """
    _need(n >= 11, f"positive_construction_a needs n >= 11, got {n}")
    g = Graph(n, [f"v{i}" for i in range(1, n + 1)])
    core = range(n - 4)
    for u, v in combinations(core, 2):
        g.add_edge(u, v)
    for j in range(n - 4, n - 1):
        for i in core:
            g.add_edge(i, j)
        g.add_edge(j, n - 1)
    return g


def positive_construction_b(n: int) -> Graph:
    """Second n-1-positive construction (needs n >= 12).

    Clique on v_1..v_{n-5} joined to v_{n-4}..v_{n-1}, plus the matching
    v_{n-4}v_{n-2}, v_{n-3}v_{n-1}, and v_n adjacent to all four of
    v_{n-4}..v_{n-1}. Each of those four then has n-5 neighbors of degree
    n-2, one of degree n-3 and one of degree 4.
    """
    _need(n >= 12, f"positive_construction_b needs n >= 12, got {n}")
    g = Graph(n, [f"v{i}" for i in range(1, n + 1)])
    core = range(n - 5)
    for u, v in combinations(core, 2):
        g.add_edge(u, v)
    outer = range(n - 5, n - 1)
    for j in outer:
        for i in core:
            g.add_edge(i, j)
        g.add_edge(j, n - 1)
    g.add_edge(n - 5, n - 3)
    g.add_edge(n - 4, n - 2)
    return g


# fixed ids in dumbbell_claw
DUMBBELL_U = 0


def dumbbell_claw(n: int) -> tuple[Graph, int, int]:
    """Near-complete K_{n+1} tied to a claw by a short path.

    Returns ``(graph, u, v)`` where ``u`` has degree n and neighbor degrees
    {n-1, n, ..., n}, and ``v`` is the claw base of degree 4 with neighbor
    degrees {2, 1, 1, 1}.

    Layout: ``u = 0``, ``a_1..a_n = 1..n`` (clique with u, minus a_1 a_2),
    path ``a_2 - p_1 - p_2 - v`` and leaves ``l_1..l_3`` on v.
    """
    _need(n >= 5, f"dumbbell_claw needs n >= 5, got {n}")
    u = DUMBBELL_U
    a = list(range(1, n + 1))
    p1, p2, v = n + 1, n + 2, n + 3
    leaves = [n + 4, n + 5, n + 6]
    labels = ["u"] + [f"a{i}" for i in range(1, n + 1)] + ["p1", "p2", "v", "l1", "l2", "l3"]
    g = Graph(n + 7, labels)
    for x, y in combinations([u] + a, 2):
        if {x, y} != {a[0], a[1]}:
            g.add_edge(x, y)
    g.add_edge(a[1], p1)
    g.add_edge(p1, p2)
    g.add_edge(p2, v)
    for leaf in leaves:
        g.add_edge(v, leaf)
    return g, u, v


FAMILIES = (
    "path", "cycle", "complete", "star", "multipartite", "lattice",
    "path-power-lattice", "k3-pendant", "positive-a", "positive-b", "dumbbell-claw",
)
