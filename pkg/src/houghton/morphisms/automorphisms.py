"""Automorphisms of H_n: conjugation by H_n itself and by permutations of the rays."""

from __future__ import annotations

from dataclasses import dataclass

from ..element import Element, RayPoint, compose, inverse
from ..errors import InputError, SizeMismatch

__all__ = ["RayPermutation", "conj_by_ray_perm", "Automorphism"]


@dataclass(frozen=True)
class RayPermutation:
    """Permutation of the ray indices; ray ``i`` goes to ``perm[i]``."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise InputError(f"not a permutation of the rays: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "RayPermutation":
        return cls(tuple(range(n)))

    @classmethod
    def cycle(cls, n: int, *rays: int) -> "RayPermutation":
        perm = list(range(n))
        for a, b in zip(rays, rays[1:] + rays[:1]):
            perm[a] = b
        return cls(tuple(perm))

    def __len__(self):
        return len(self.perm)

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def then(self, other: "RayPermutation") -> "RayPermutation":
        """Apply self first, then other."""
        if len(other) != len(self):
            raise SizeMismatch("ray permutations of different sizes")
        return RayPermutation(tuple(other.perm[i] for i in self.perm))

    def inverse(self) -> "RayPermutation":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return RayPermutation(tuple(inv))


def conj_by_ray_perm(e: Element, r: RayPermutation) -> Element:
    """Relabel rays: (r(i), k) -> (r(j), m) whenever (i, k) e = (j, m)."""
    if len(r) != e.n:
        raise SizeMismatch(f"ray permutation on {len(r)} rays applied to H_{e.n}")
    t = [0] * e.n
    for i, v in enumerate(e.t):
        t[r(i)] = v
    out = {RayPoint(r(x.ray), x.pos): RayPoint(r(y.ray), y.pos) for x, y in e.exceptions.items()}
    return Element(e.n, tuple(t), out)


@dataclass(frozen=True)
class Automorphism:
    """Conjugation by ``conjugator`` followed by relabelling the rays with ``rays``.

    As permutations of the ray system this is conjugation by
    ``conjugator * rho`` where rho moves (i, k) to (rays(i), k); every
    automorphism of H_n (n >= 2) has this form.
    """

    conjugator: Element
    rays: RayPermutation

    def __post_init__(self):
        if len(self.rays) != self.conjugator.n:
            raise SizeMismatch("conjugator and ray permutation disagree on n")

    def __call__(self, e: Element) -> Element:
        h = self.conjugator
        return conj_by_ray_perm(compose(compose(inverse(h), e), h), self.rays)

    def then(self, other: "Automorphism") -> "Automorphism":
        # h rho_r k rho_s = (h . rho_r k rho_r^-1) rho_r rho_s
        moved = conj_by_ray_perm(other.conjugator, self.rays.inverse())
        return Automorphism(compose(self.conjugator, moved), self.rays.then(other.rays))
