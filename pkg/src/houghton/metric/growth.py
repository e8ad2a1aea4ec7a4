"""Counting elements by complexity, and growth reports built on BFS balls."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

from ..element import RayPoint, complexity, make_element, transposition
from ..errors import InputError, NotBijective, TooLarge
from .search import bfs_ball

__all__ = [
    "depth_family",
    "enumerate_complexity_class",
    "ComplexityClassReport",
    "complexity_class_witnesses",
    "growth_rows",
]

ENUMERATION_LIMIT = 1_000_000


def depth_family(n: int, k: int) -> list:
    """A transposition pinning (0, k) to (1, 1), times every permutation of the
    remaining ``n*k - 2`` points of the depth-k grid.

    Every member moves (0, k) and nothing deeper than k on any ray; members
    are pairwise distinct, one per permutation.
    """
    if n < 3 or k < 1:
        raise InputError("need n >= 3 and k >= 1")
    if math.factorial(n * k - 2) > ENUMERATION_LIMIT:
        raise TooLarge(f"({n}*{k}-2)! permutations exceed the enumeration limit")
    pinned = (RayPoint(0, k), RayPoint(1, 1)) if k > 1 else (RayPoint(0, 1), RayPoint(1, 1))
    rest = [RayPoint(r, m) for r in range(n) for m in range(1, k + 1) if RayPoint(r, m) not in pinned]
    swap = transposition(n, *pinned)
    family = []
    for images in permutations(rest):
        mix = {x: y for x, y in zip(rest, images) if x != y}
        family.append(swap * make_element(n, (0,) * n, mix))
    return family


def enumerate_complexity_class(n: int, k: int) -> list:
    """Every element of H_n with complexity exactly k.

    An element with depth vector p sends the grid {(i,m): m <= p_i} onto
    {(i,m): m <= p_i + t_i} and translates everything deeper, so it is fixed
    by p, t and a bijection between those two finite sets.
    """
    if n < 2 or k < 0:
        raise InputError("need n >= 2 and k >= 0")
    if math.factorial(k) * (k + 1) ** (2 * n) > ENUMERATION_LIMIT * 100:
        raise TooLarge(f"complexity class C_{k} in H_{n} is too large to enumerate")
    found = []
    for p in product(range(k + 1), repeat=n):
        if sum(p) != k:
            continue
        grid = [RayPoint(r, m) for r in range(n) for m in range(1, p[r] + 1)]
        for t in product(range(-k, k + 1), repeat=n):
            if sum(t) != 0 or any(t[r] < -p[r] for r in range(n)):
                continue
            targets = [RayPoint(r, m) for r in range(n) for m in range(1, p[r] + t[r] + 1)]
            for images in permutations(targets):
                mapping = dict(zip(grid, images))
                # the deepest grid point of every ray has to be exceptional
                if any(p[r] and mapping[(r, p[r])] == (r, p[r] + t[r]) for r in range(n)):
                    continue
                try:
                    e = make_element(n, t, mapping)
                except NotBijective:  # pragma: no cover - targets are exact
                    continue
                found.append(e)
    return found


@dataclass(frozen=True)
class ComplexityClassReport:
    n: int
    k: int
    lower: int  # (nk - 2)!
    class_size: int  # |C_k|, elements of complexity exactly k
    family_size: int  # distinct members of depth_family
    family_complexities: tuple  # (min P, max P) over the family

    @property
    def verified(self) -> bool:
        return self.class_size >= self.lower


def complexity_class_witnesses(n: int, k: int) -> ComplexityClassReport:
    """Check the count |C_k| >= (nk-2)! by explicit construction.

    ``class_size`` counts distinct elements verified to have complexity k.
    The depth family is reported alongside: its members are distinct, but
    their complexity ranges between k and n*k.
    """
    if n < 3 or k < 1:
        raise InputError("need n >= 3 and k >= 1")
    lower = math.factorial(n * k - 2)
    cls = enumerate_complexity_class(n, k)
    assert all(complexity(e).P == k for e in cls)
    distinct = len(set(cls))
    family = depth_family(n, k)
    Ps = [complexity(e).P for e in family]
    return ComplexityClassReport(n, k, lower, distinct, len(set(family)), (min(Ps), max(Ps)))


def growth_rows(n: int, genset: str, radius: int, cap: int | None = None) -> list:
    """Rows ``(r, |S_r|, |B_r|, |B_r|/|B_{r-1}|, 2^r, |B_r| >= 2^r)``."""
    kwargs = {} if cap is None else {"cap": cap}
    ball = bfs_ball(n, genset, radius, **kwargs)
    rows = []
    prev = None
    for r, (s, b) in enumerate(zip(ball.sphere_sizes(), ball.ball_sizes())):
        ratio = round(b / prev, 6) if prev else None
        rows.append({"radius": r, "sphere": s, "ball": b, "ratio": ratio, "floor": 2**r, "above_floor": b >= 2**r})
        prev = b
    return rows
