"""Leverage centrality: per-vertex values, whole-graph reports, profiles."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .exactq import to_decimal_string, to_text
from .graph import Graph


@dataclass(frozen=True)
class DegreeProfile:
    """A vertex degree together with the multiset of its neighbors' degrees."""

    center_degree: int
    neighbor_degrees: tuple[int, ...]

    def __init__(self, center_degree: int, neighbor_degrees: Iterable[int]):
        nbrs = tuple(sorted(neighbor_degrees))
        if center_degree < 1:
            raise DomainError(f"leverage undefined for degree {center_degree}")
        if len(nbrs) != center_degree:
            raise DomainError(
                f"profile has {len(nbrs)} neighbor degrees for center degree {center_degree}")
        if nbrs[0] < 1:
            raise DomainError(f"neighbor degrees must be >= 1: {nbrs}")
        object.__setattr__(self, "center_degree", center_degree)
        object.__setattr__(self, "neighbor_degrees", nbrs)

    @classmethod
    def of(cls, *neighbor_degrees: int) -> DegreeProfile:
        return cls(len(neighbor_degrees), neighbor_degrees)


def _profile_value(k: int, nbr_degrees: Iterable[int]) -> Fraction:
    total = Fraction(0)
    for d, c in Counter(nbr_degrees).items():
        if d != k:
            total += Fraction(c * (k - d), k + d)
    return total / k


def leverage_of_profile(p: DegreeProfile) -> Fraction:
    """(1/k) * sum over neighbors of (k - d)/(k + d)."""
    return _profile_value(p.center_degree, p.neighbor_degrees)


def vertex_profile(g: Graph, v: int) -> DegreeProfile:
    k = g.degree(v)
    if k == 0:
        raise DomainError(f"vertex {v} ({g.label(v)}) is isolated; leverage undefined")
    adj = g.adj
    return DegreeProfile(k, (len(adj[u]) for u in g.neighbors(v)))


def leverage_vertex(g: Graph, v: int) -> Fraction:
    return leverage_of_profile(vertex_profile(g, v))


@dataclass
class LeverageReport:
    values: list[Fraction]
    degrees: list[int]
    labels: list[str]
    total: Fraction = field(init=False)
    minimum: Fraction = field(init=False)
    maximum: Fraction = field(init=False)
    argmin: list[int] = field(init=False)
    argmax: list[int] = field(init=False)
    distinct: frozenset = field(init=False)
    positive_count: int = field(init=False)
    negative_count: int = field(init=False)
    zero_count: int = field(init=False)

    def __post_init__(self):
        vals = self.values
        self.total = sum(vals, Fraction(0))
        self.minimum = min(vals)
        self.maximum = max(vals)
        self.argmin = [v for v, x in enumerate(vals) if x == self.minimum]
        self.argmax = [v for v, x in enumerate(vals) if x == self.maximum]
        self.distinct = frozenset(vals)
        self.positive_count = sum(1 for x in vals if x > 0)
        self.negative_count = sum(1 for x in vals if x < 0)
        self.zero_count = len(vals) - self.positive_count - self.negative_count

    @property
    def distinct_count(self) -> int:
        return len(self.distinct)

    def __len__(self) -> int:
        return len(self.values)

    def to_dict(self, decimals: int | None = None) -> dict:
        vertices = []
        for v, (x, d, lab) in enumerate(zip(self.values, self.degrees, self.labels)):
            row = {"id": v, "label": lab, "degree": d, "leverage": to_text(x)}
            if decimals:
                row["decimal"] = to_decimal_string(x, decimals)
            vertices.append(row)
        return {
            "vertices": vertices,
            "sum": to_text(self.total),
            "min": {"value": to_text(self.minimum), "vertices": self.argmin},
            "max": {"value": to_text(self.maximum), "vertices": self.argmax},
            "distinct_count": self.distinct_count,
            "distinct_values": [to_text(x) for x in sorted(self.distinct)],
            "positive_count": self.positive_count,
            "negative_count": self.negative_count,
            "zero_count": self.zero_count,
        }

    def to_csv(self, decimals: int | None = None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["id", "label", "degree", "leverage"] + (["decimal"] if decimals else [])
        w.writerow(header)
        for v, (x, d, lab) in enumerate(zip(self.values, self.degrees, self.labels)):
            row = [v, lab, d, to_text(x)]
            if decimals:
                row.append(to_decimal_string(x, decimals))
            w.writerow(row)
        return buf.getvalue()


def leverage_values(g: Graph) -> list[Fraction]:
    """Leverage of every vertex in id order.

    Vertices sharing a degree profile share a value, so profiles are memoized;
    this keeps lattices (a handful of profiles, many vertices) cheap.
    """
    adj = g.adj
    deg = [len(s) for s in adj]
    cache: dict[tuple, Fraction] = {}
    out = []
    for v, nbrs in enumerate(adj):
        k = deg[v]
        if k == 0:
            raise DomainError(f"vertex {v} ({g.label(v)}) is isolated; leverage undefined")
        key = (k, tuple(sorted(deg[u] for u in nbrs)))
        val = cache.get(key)
        if val is None:
            val = cache[key] = _profile_value(k, key[1])
        out.append(val)
    return out


def leverage_all(g: Graph) -> LeverageReport:
    if g.vertex_count == 0:
        raise DomainError("empty graph")
    return LeverageReport(leverage_values(g), g.degrees(), g.labels())


def degree_centrality(g: Graph) -> list[int]:
    return g.degrees()


def realize_profile(p: DegreeProfile) -> tuple[Graph, int]:
    """Smallest tree realizing ``p`` at its center (returned as id 0).

    The center gets k fresh neighbors, and neighbor i is padded to degree d_i
    with d_i - 1 pendant leaves.
    """
    k = p.center_degree
    n = 1 + k + sum(d - 1 for d in p.neighbor_degrees)
    g = Graph(n)
    nxt = k + 1
    for i, d in enumerate(p.neighbor_degrees, start=1):
        g.add_edge(0, i)
        for _ in range(d - 1):
            g.add_edge(i, nxt)
            nxt += 1
    return g, 0
