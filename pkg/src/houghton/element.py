"""Elements of Houghton's group H_n.

An element is a permutation of the ray system ``Z_n x N`` that acts as a
translation ``k -> k + t[i]`` on ray ``i`` outside a finite set of points.  We
store the translation vector together with the finite *exception map*: the
points whose image differs from their translate.  Exception maps are kept
minimal, so two elements are equal exactly when their ``(n, t, exceptions)``
data agree.

Actions are on the right: ``x(ab) = (xa)b``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    BadPoint,
    EqualPoints,
    InputError,
    NotBijective,
    NotFinitary,
    RayCountMismatch,
    RayOutOfRange,
    SameRay,
    ZeroSumViolation,
)

__all__ = [
    "RayPoint",
    "Element",
    "ComplexityProfile",
    "make_element",
    "identity",
    "generator",
    "transposition",
    "finitary",
    "apply",
    "compose",
    "compose_all",
    "inverse",
    "power",
    "equals",
    "abelianization",
    "complexity",
    "is_finitary",
    "sign",
    "support",
    "translation_amount",
]


class RayPoint(NamedTuple):
    ray: int
    pos: int

    def __str__(self):
        return f"({self.ray},{self.pos})"


def _point(x, n: int) -> RayPoint:
    try:
        ray, pos = x
    except (TypeError, ValueError):
        raise InputError(f"not a ray point: {x!r}") from None
    if isinstance(ray, bool) or isinstance(pos, bool) or not isinstance(ray, int) or not isinstance(pos, int):
        raise InputError(f"ray point coordinates must be integers: {x!r}")
    if not 0 <= ray < n:
        raise RayOutOfRange(f"ray {ray} out of range for n={n}")
    if pos < 1:
        raise BadPoint(f"position must be >= 1, got {x!r}")
    return RayPoint(ray, pos)


class Element:
    """An element of H_n.  Treat instances as immutable values.

    Use :func:`make_element` (or the helper constructors) to build elements
    from user data; the plain constructor trusts its arguments.
    """

    __slots__ = ("n", "t", "_map", "_depths", "_key", "_hash")

    def __init__(self, n: int, t: tuple, exceptions: dict):
        self.n = n
        self.t = t
        self._map = exceptions
        depths = [0] * n
        for r, k in exceptions:
            if k > depths[r]:
                depths[r] = k
        self._depths = tuple(depths)
        self._key = None
        self._hash = None

    @property
    def exceptions(self) -> Mapping[RayPoint, RayPoint]:
        """Read-only view of the minimal exception map."""
        return dict(self._map)

    @property
    def depths(self) -> tuple:
        """Deepest exceptional position on each ray (0 for none)."""
        return self._depths

    @property
    def key(self) -> tuple:
        """Canonical, totally ordered serialization used for hashing and BFS."""
        if self._key is None:
            self._key = (self.n, self.t, tuple(sorted(self._map.items())))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.t == other.t and self._map == other._map

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    def __mul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def __invert__(self) -> "Element":
        return inverse(self)

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def __call__(self, x) -> RayPoint:
        return apply(self, x)

    def __repr__(self):
        return f"Element(n={self.n}, t={list(self.t)}, map={[[list(a), list(b)] for a, b in self.key[2]]})"

    def is_identity(self) -> bool:
        return not self._map and not any(self.t)

    def window(self) -> int:
        """Bound M beyond which every ray acts as a pure translation."""
        deepest = max(self._depths, default=0)
        for y in self._map.values():
            deepest = max(deepest, y.pos)
        return 1 + max(abs(v) for v in self.t) + deepest

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "t": list(self.t),
            "map": [[[a.ray, a.pos], [b.ray, b.pos]] for a, b in self.key[2]],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    @classmethod
    def from_record(cls, record: Mapping) -> "Element":
        try:
            n = record["n"]
            t = record["t"]
            pairs = record.get("map", [])
        except (KeyError, TypeError, AttributeError):
            raise InputError("element record needs fields 'n', 't' and 'map'") from None
        try:
            exceptions = {tuple(a): tuple(b) for a, b in pairs}
        except (TypeError, ValueError):
            raise InputError("element 'map' must be a list of [[ray,pos],[ray,pos]] pairs") from None
        return make_element(n, t, exceptions)

    @classmethod
    def from_json(cls, text: str) -> "Element":
        try:
            record = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid element JSON: {exc}") from None
        return cls.from_record(record)


@dataclass(frozen=True)
class ComplexityProfile:
    """Per-ray depths ``p``, complexity ``P = sum(p)`` and translation amount ``T``."""

    p: tuple
    P: int
    T: int

    def __post_init__(self):
        if self.P != sum(self.p):
            raise ValueError("P must equal sum(p)")
        if self.P < self.T:
            raise ValueError(f"complexity {self.P} below translation amount {self.T}")


def make_element(n: int, t: Iterable[int], exceptions: Mapping | Iterable = ()) -> Element:
    """Validate and canonicalize element data.

    ``exceptions`` maps points to their images (a mapping or an iterable of
    pairs); entries agreeing with the translation are dropped.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"number of rays must be an integer >= 2, got {n!r}")
    t = tuple(t)
    if len(t) != n or not all(isinstance(v, int) and not isinstance(v, bool) for v in t):
        raise InputError(f"translation vector must have {n} integer entries")
    if sum(t) != 0:
        raise ZeroSumViolation(f"translations must sum to zero, got {list(t)}")
    items = exceptions.items() if isinstance(exceptions, Mapping) else exceptions
    raw = {}
    for x, y in items:
        x, y = _point(x, n), _point(y, n)
        if x in raw and raw[x] != y:
            raise NotBijective(f"point {x} given two images")
        raw[x] = y
    canon = {x: y for x, y in raw.items() if y != (x.ray, x.pos + t[x.ray])}
    e = Element(n, t, canon)
    _check_bijective(e)
    return e


def _check_bijective(e: Element) -> None:
    # Beyond M every ray translates, so the points up to M must map onto the
    # complement of the translated tails, i.e. onto {(i,k): k <= M + t_i}.
    M = e.window()
    seen = set()
    for r in range(e.n):
        tr = e.t[r]
        for k in range(1, M + 1):
            y = e._map.get((r, k))
            if y is None:
                if k + tr < 1:
                    raise NotBijective(f"point ({r},{k}) would be translated off its ray")
                y = (r, k + tr)
            if y[1] > M + e.t[y[0]] or y in seen:
                raise NotBijective(f"map is not a bijection (collision at {y})")
            seen.add(y)


def identity(n: int) -> Element:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"number of rays must be an integer >= 2, got {n!r}")
    return Element(n, (0,) * n, {})


def generator(n: int, i: int, j: int) -> Element:
    """The element g_ij moving ray i towards ray j along the joined line."""
    if i == j:
        raise SameRay(f"g_ij needs distinct rays, got i=j={i}")
    for r in (i, j):
        if not 0 <= r < n:
            raise RayOutOfRange(f"ray {r} out of range for n={n}")
    t = [0] * n
    t[i], t[j] = -1, 1
    return Element(n, tuple(t), {RayPoint(i, 1): RayPoint(j, 1)})


def transposition(n: int, a, b) -> Element:
    a, b = _point(a, n), _point(b, n)
    if a == b:
        raise EqualPoints(f"cannot transpose {a} with itself")
    return Element(n, (0,) * n, {a: b, b: a})


def finitary(n: int, mapping: Mapping) -> Element:
    """Finitary permutation given by ``mapping`` (points not listed are fixed)."""
    return make_element(n, (0,) * n, mapping)


def apply(e: Element, x) -> RayPoint:
    r, k = x
    if not 0 <= r < e.n:
        raise RayOutOfRange(f"ray {r} out of range for n={e.n}")
    if k < 1:
        raise BadPoint(f"position must be >= 1, got {x!r}")
    y = e._map.get((r, k))
    if y is not None:
        return y
    return RayPoint(r, k + e.t[r])


def compose(a: Element, b: Element) -> Element:
    """Right-action product: x(ab) = (xa)b."""
    n = a.n
    if b.n != n:
        raise RayCountMismatch(f"cannot compose elements of H_{a.n} and H_{b.n}")
    ta, tb, amap, bmap = a.t, b.t, a._map, b._map
    t = tuple(x + y for x, y in zip(ta, tb))
    pa, pb = a._depths, b._depths
    out = {}
    for r in range(n):
        # past this depth, x is regular for a and xa is regular for b
        w = max(pa[r], pb[r] - ta[r])
        tr = t[r]
        for k in range(1, w + 1):
            x = (r, k)
            y = amap.get(x)
            if y is None:
                y = (r, k + ta[r])
            z = bmap.get(y)
            if z is None:
                z = RayPoint(y[0], y[1] + tb[y[0]])
            if z[0] != r or z[1] != k + tr:
                out[RayPoint(r, k)] = z
    return Element(n, t, out)


def compose_all(elements: Iterable[Element], n: int | None = None) -> Element:
    result = None
    for e in elements:
        result = e if result is None else compose(result, e)
    if result is None:
        if n is None:
            raise InputError("empty product needs the number of rays")
        return identity(n)
    return result


def inverse(e: Element) -> Element:
    t = e.t
    out = {}
    for x, y in e._map.items():
        # y -> x is exceptional for the inverse unless x is y shifted by -t
        if x[0] != y[0] or x[1] != y[1] - t[y[0]]:
            out[y] = x
    return Element(e.n, tuple(-v for v in t), out)


def power(e: Element, k: int) -> Element:
    if k < 0:
        e, k = inverse(e), -k
    result = identity(e.n)
    base = e
    while k:
        if k & 1:
            result = compose(result, base)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def equals(a: Element, b: Element) -> bool:
    if a.n != b.n:
        raise RayCountMismatch(f"cannot compare elements of H_{a.n} and H_{b.n}")
    return a == b


def abelianization(e: Element) -> tuple:
    """Image in Z^(n-1): the first n-1 eventual translations."""
    return e.t[:-1]


def translation_amount(e: Element) -> int:
    return sum(abs(v) for v in e.t) // 2


def complexity(e: Element) -> ComplexityProfile:
    p = e._depths
    return ComplexityProfile(p, sum(p), translation_amount(e))


def is_finitary(e: Element) -> bool:
    return not any(e.t)


def sign(e: Element) -> int:
    """Parity of a finitary element as a permutation: +1 even, -1 odd."""
    if not is_finitary(e):
        raise NotFinitary("sign is only defined for finitary elements")
    m = e._map
    seen = set()
    transpositions = 0
    for start in m:
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = m[x]
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def support(e: Element) -> list:
    """Moved points of a finitary element, sorted."""
    if not is_finitary(e):
        raise NotFinitary("support is only finite for finitary elements")
    return sorted(e._map)
