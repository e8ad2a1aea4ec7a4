"""Injective homomorphisms between Houghton groups.

* :func:`include_rays` -- H_n as the subgroup of H_m fixing the extra rays.
* :func:`cohopf_double` -- the doubling map H_n -> H_n, injective but not onto.
* :func:`stabilizer_embed` -- H_n onto the stabilizer of a point.
"""

from __future__ import annotations

from ..element import Element, RayPoint, apply, make_element
from ..errors import InputError, RayOutOfRange, Shrinking

__all__ = [
    "include_rays",
    "sigma_n",
    "cohopf_double",
    "is_in_double_image",
    "double_preimage",
    "stabilizer_embed",
]


def include_rays(e: Element, m: int) -> Element:
    if m < e.n:
        raise Shrinking(f"cannot include H_{e.n} into H_{m}")
    return Element(m, e.t + (0,) * (m - e.n), e.exceptions)


def sigma_n(rays: int, k: int) -> Element:
    """Swap (0, j) with (1, j) for every j <= k."""
    if rays < 2 or k < 1:
        raise InputError("sigma_n needs rays >= 2 and k >= 1")
    swaps = {}
    for j in range(1, k + 1):
        swaps[RayPoint(0, j)] = RayPoint(1, j)
        swaps[RayPoint(1, j)] = RayPoint(0, j)
    return Element(rays, (0,) * rays, swaps)


def cohopf_double(e: Element) -> Element:
    """f(e): (i,2k-1) -> (j,2m-1) and (i,2k) -> (j,2m) whenever (i,k)e = (j,m)."""
    out = {}
    for (i, k), (j, m) in e.exceptions.items():
        out[RayPoint(i, 2 * k - 1)] = RayPoint(j, 2 * m - 1)
        out[RayPoint(i, 2 * k)] = RayPoint(j, 2 * m)
    return Element(e.n, tuple(2 * v for v in e.t), out)


def double_preimage(e: Element) -> Element | None:
    """The element s with f(s) = e, or None if e is not in the image of f."""
    if any(v % 2 for v in e.t):
        return None
    # points past the window are translated by an even amount, hence paired
    window = e.window()
    window += window % 2
    pre = {}
    for i in range(e.n):
        for k in range(1, window // 2 + 1):
            a = apply(e, (i, 2 * k - 1))
            b = apply(e, (i, 2 * k))
            if a.pos % 2 == 0 or b != (a.ray, a.pos + 1):
                return None
            pre[RayPoint(i, k)] = RayPoint(a.ray, (a.pos + 1) // 2)
    return make_element(e.n, tuple(v // 2 for v in e.t), pre)


def is_in_double_image(e: Element) -> bool:
    return double_preimage(e) is not None


def stabilizer_embed(e: Element, q) -> Element:
    """Conjugate e by the order-preserving bijection R_n -> R_n minus {q}.

    Points of ray q.ray at or past q.pos move one step deeper; the result
    fixes q and acts like e on everything else.
    """
    qr, qk = q
    if not 0 <= qr < e.n:
        raise RayOutOfRange(f"ray {qr} out of range for n={e.n}")
    if qk < 1:
        raise InputError("stabilized point must have pos >= 1")

    def shift(x):
        return RayPoint(x[0], x[1] + 1) if x[0] == qr and x[1] >= qk else RayPoint(*x)

    out = {}
    t = e.t
    # beyond the window both e and the shift are translations on every ray
    window = e.window() + qk + 1
    for r in range(e.n):
        for k in range(1, window + 1):
            x = RayPoint(r, k)
            z, image = shift(x), shift(apply(e, x))
            if image != (z.ray, z.pos + t[z.ray]):
                out[z] = image
    if t[qr]:
        out[RayPoint(qr, qk)] = RayPoint(qr, qk)
    return Element(e.n, t, out)
