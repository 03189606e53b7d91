"""Simple undirected graphs on dense integer ids, Cartesian products, edge-list I/O."""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence, TextIO

from .errors import GraphError, ParseError, ResourceError

DEFAULT_VERTEX_BUDGET = 20_000_000
BUDGET_ENV = "LEVERAGE_VERTEX_BUDGET"


def vertex_budget() -> int:
    """The brute-force vertex budget, overridable through the environment."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_VERTEX_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise GraphError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise GraphError(f"{BUDGET_ENV} must be positive")
    return value


def check_budget(count: int, budget: int | None = None) -> None:
    limit = vertex_budget() if budget is None else budget
    if count > limit:
        raise ResourceError(
            f"{count} vertices exceeds the vertex budget of {limit} "
            f"(set {BUDGET_ENV} or use the class-enumeration method)"
        )


class Graph:
    """Finite simple undirected graph with vertices ``0..n-1``.

    Adjacency is a list of sets, so duplicate edges collapse and symmetry is
    maintained by :meth:`add_edge`. Labels are optional display strings; when
    absent, :meth:`label` falls back to the id.
    """

    __slots__ = ("adj", "_labels")

    def __init__(self, n: int, labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        self.adj: list[set[int]] = [set() for _ in range(n)]
        if labels is not None and len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")
        self._labels = list(labels) if labels is not None else None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> Graph:
        g = cls(n, labels)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def __len__(self) -> int:
        return len(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj

    __hash__ = None  # mutable during construction

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @property
    def has_labels(self) -> bool:
        return self._labels is not None

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self.adj):
            raise GraphError(f"vertex {v} out of range 0..{len(self.adj) - 1}")

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in increasing id order."""
        self._check(v)
        return sorted(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as ``(min, max)`` pairs in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    def label(self, v: int) -> str:
        self._check(v)
        return self._labels[v] if self._labels is not None else str(v)

    def labels(self) -> list[str]:
        return [self.label(v) for v in range(len(self.adj))]

    def is_regular(self) -> bool:
        return len({len(s) for s in self.adj}) <= 1

    def copy(self) -> Graph:
        g = Graph(0)
        g.adj = [set(s) for s in self.adj]
        g._labels = list(self._labels) if self._labels is not None else None
        return g


def cartesian_product(f: Graph, h: Graph, budget: int | None = None) -> Graph:
    """F x H with vertex ``(u, v)`` at id ``u * |H| + v``.

    Labels are joined with a comma when either factor carries labels, so
    iterated products of labelled paths get tuple labels like ``"1,3,2"``.
    """
    nf, nh = f.vertex_count, h.vertex_count
    if nf == 0 or nh == 0:
        raise GraphError("cartesian product needs nonempty factors")
    check_budget(nf * nh, budget)
    labels = None
    if f.has_labels or h.has_labels:
        fl, hl = f.labels(), h.labels()
        labels = [f"{a},{b}" for a in fl for b in hl]
    g = Graph(nf * nh, labels)
    adj = g.adj
    h_edges = list(h.edges())
    f_edges = list(f.edges())
    for u in range(nf):
        base = u * nh
        for a, b in h_edges:
            adj[base + a].add(base + b)
            adj[base + b].add(base + a)
    for v in range(nh):
        for a, b in f_edges:
            adj[a * nh + v].add(b * nh + v)
            adj[b * nh + v].add(a * nh + v)
    return g


def iterated_product(g: Graph, m: int, budget: int | None = None) -> Graph:
    """Left fold of :func:`cartesian_product` over ``m`` copies of ``g``."""
    if m < 1:
        raise GraphError(f"iterated product needs m >= 1, got {m}")
    check_budget(g.vertex_count**m, budget)
    out = g.copy()
    for _ in range(m - 1):
        out = cartesian_product(out, g, budget)
    return out


def path_power(n: int, k: int) -> Graph:
    """P_n^k: vertices labelled 1..n, ``i ~ j`` iff ``1 <= |i - j| <= k``."""
    if n < 2 or k < 1:
        raise GraphError(f"path_power needs n >= 2 and k >= 1, got n={n}, k={k}")
    g = Graph(n, [str(i) for i in range(1, n + 1)])
    for i in range(n):
        for j in range(i + 1, min(n, i + k + 1)):
            g.add_edge(i, j)
    return g


def lattice_coordinates(g: Graph, v: int) -> tuple[int, ...]:
    """Parse the tuple label of a lattice vertex back into integer coordinates."""
    return tuple(int(x) for x in g.label(v).split(","))


def read_edge_list(source: TextIO | Iterable[str]) -> Graph:
    """Parse the edge-list format.

    One ``u v`` pair per line, ``#`` comments, blank lines ignored. An optional
    ``n <count>`` header (first content line) fixes the vertex count; otherwise
    it is one more than the largest id. Comments of the form
    ``# label <id> <text>`` (as written by ``gen --labels``) set vertex labels.
    """
    n_header = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    seen_content = False
    for lineno, raw in enumerate(source, start=1):
        line, _, comment = raw.partition("#")
        line = line.strip()
        directive = comment.split(None, 2)
        if len(directive) == 3 and directive[0] == "label" and directive[1].isdigit():
            labels[int(directive[1])] = directive[2].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_content:
                raise ParseError("header 'n <count>' must come first", lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"malformed header {line!r}", lineno)
            n_header = int(parts[1])
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected two nonnegative integers, got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(f"self-loop {u} {v}", lineno)
        if n_header is not None and max(u, v) >= n_header:
            raise ParseError(f"vertex id {max(u, v)} >= declared count {n_header}", lineno)
        edges.append((u, v))
    n = n_header if n_header is not None else 1 + max((max(e) for e in edges), default=-1)
    label_list = None
    if labels:
        label_list = [labels.get(v, str(v)) for v in range(n)]
    return Graph.from_edges(n, edges, label_list)


def write_edge_list(g: Graph, out: TextIO) -> None:
    """Write sorted ``min max`` lines.

    A header is emitted only when the vertex count is not implied by the
    edges (trailing isolated vertices or no edges at all).
    """
    edges = list(g.edges())
    implied = 1 + max((v for _, v in edges), default=-1)
    if implied != g.vertex_count:
        out.write(f"n {g.vertex_count}\n")
    for u, v in edges:
        out.write(f"{u} {v}\n")
