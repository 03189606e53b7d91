"""Closed-form leverage values for multipartite graphs, products with a
regular factor, and the path lattice.

Lattice vertices are grouped by coordinate class ``(x1, x2, x3)``: how many
coordinates sit on an end of the path (1 or n), next to an end (2 or n-1),
or strictly inside (3..n-2). For n >= 5 the class fixes the degree profile
and therefore the leverage. The triangle-number indexing ``(j, i)`` used in
the literature is ``j = x2 + x3`` (degree minus m) and ``i = x3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .centrality import DegreeProfile
from .errors import DomainError


@dataclass(frozen=True, order=True)
class LatticeClass:
    x1: int
    x2: int
    x3: int

    def __post_init__(self):
        if min(self.x1, self.x2, self.x3) < 0:
            raise DomainError(f"negative class multiplicity in {self}")
        if self.m == 0:
            raise DomainError("lattice class needs m >= 1")

    @property
    def m(self) -> int:
        return self.x1 + self.x2 + self.x3

    @property
    def degree(self) -> int:
        return 2 * self.m - self.x1

    @property
    def ji(self) -> tuple[int, int]:
        return self.x2 + self.x3, self.x3

    @classmethod
    def from_ji(cls, m: int, j: int, i: int) -> LatticeClass:
        if not 0 <= i <= j <= m:
            raise DomainError(f"need 0 <= i <= j <= m, got m={m}, j={j}, i={i}")
        return cls(m - j, j - i, i)

    @classmethod
    def of_coordinates(cls, coords: Sequence[int], n: int) -> LatticeClass:
        """Class of a lattice vertex given its 1-based coordinates in P_n."""
        _require_n(n)
        x1 = x2 = 0
        for c in coords:
            if not 1 <= c <= n:
                raise DomainError(f"coordinate {c} outside 1..{n}")
            if c in (1, n):
                x1 += 1
            elif c in (2, n - 1):
                x2 += 1
        return cls(x1, x2, len(coords) - x1 - x2)

    def profile(self) -> DegreeProfile:
        k = self.degree
        return DegreeProfile(k, [k + 1] * self.x1 + [k - 1] * self.x2
                             + [k] * (self.x2 + 2 * self.x3))


def _require_n(n: int) -> None:
    if n < 5:
        raise DomainError(f"coordinate classes need n >= 5, got {n}")


def multipartite_leverage(part_sizes: Sequence[int], part: int) -> Fraction:
    """Leverage of any vertex in part ``part`` (0-based) of K_{t_1..t_r}."""
    t = list(part_sizes)
    if len(t) < 2 or min(t) < 1:
        raise DomainError(f"invalid multipartite spec {t}")
    if not 0 <= part < len(t):
        raise DomainError(f"part index {part} out of range 0..{len(t) - 1}")
    total = sum(t)
    deg_i = total - t[part]
    acc = Fraction(0)
    for k, tk in enumerate(t):
        if k != part:
            acc += Fraction(tk * (tk - t[part]), deg_i + total - tk)
    return acc / deg_i


def regular_product_leverage(r: int, profile: DegreeProfile) -> Fraction:
    """Leverage of ``(u, v)`` in G_r x G, where G_r is r-regular and
    ``profile`` is v's degree profile in G."""
    if r < 0:
        raise DomainError(f"regular degree must be >= 0, got {r}")
    k = profile.center_degree
    acc = Fraction(0)
    for kj in profile.neighbor_degrees:
        acc += Fraction(k - kj, 2 * r + k + kj)
    return acc / (r + k)


def complete_product_leverage(m: int, profile: DegreeProfile) -> Fraction:
    """Specialization to K_m x G (K_m is (m-1)-regular)."""
    if m < 1:
        raise DomainError(f"K_m needs m >= 1, got {m}")
    return regular_product_leverage(m - 1, profile)


def corner_leverage(m: int) -> Fraction:
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return Fraction(-1, 2 * m + 1)


def inner_corner_leverage(m: int) -> Fraction:
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return Fraction(1, 8 * m - 2)


def lattice_class_leverage(c: LatticeClass) -> Fraction:
    # x1 neighbors one degree up, x2 one degree down, the rest level.
    k = c.degree
    return (Fraction(c.x2, 2 * k - 1) - Fraction(c.x1, 2 * k + 1)) / k


def lattice_leverage_ji(m: int, j: int, i: int) -> Fraction:
    """The same value written in triangle-number indexing (degree m + j)."""
    if not 0 <= i <= j <= m or m < 1:
        raise DomainError(f"need 0 <= i <= j <= m, m >= 1; got m={m}, j={j}, i={i}")
    k = m + j
    return (Fraction(j - i, 2 * k - 1) - Fraction(m - j, 2 * k + 1)) / k


def enumerate_classes(m: int) -> list[LatticeClass]:
    """All (x1, x2, x3) with sum m, lexicographic."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return [LatticeClass(a, b, m - a - b) for a in range(m + 1) for b in range(m + 1 - a)]


def class_multiplicity(c: LatticeClass, n: int) -> int:
    """Number of vertices of the m-fold P_n lattice in class ``c``."""
    _require_n(n)
    multinom = factorial(c.m) // (factorial(c.x1) * factorial(c.x2) * factorial(c.x3))
    return multinom * 2**c.x1 * 2**c.x2 * (n - 4) ** c.x3


def triangle_bound(m: int) -> int:
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return comb(m + 2, 2)


def polytopal_bound(m: int, k: int) -> int:
    if m < 1 or k < 1:
        raise DomainError(f"need m, k >= 1; got m={m}, k={k}")
    return comb(m + k + 1, k + 1)
