"""Finite-index subgroups U_p, ray splitting and commensurations.

U_p is generated by the finitary alternating group and the p-th powers of
the generators g_i = g_{i,i+1}.  Splitting every ray into p interleaved rays
turns U_p into a subgroup of H_{np}; a commensuration normalizing U_p is
then an element of H_{np} followed by a permutation of the split rays that
respects the grouping into blocks of p (see :class:`NpElement`).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from ..element import (
    Element,
    RayPoint,
    complexity,
    compose,
    generator,
    identity,
    inverse,
    is_finitary,
    make_element,
    sign,
    transposition,
)
from ..errors import BadP, InputError, NotFinitary, NotInUp, TooLarge, TrivialPhi
from ..words import Letter, Word, evaluate, generating_set
from .automorphisms import RayPermutation

__all__ = [
    "residue",
    "up_member",
    "coset_label",
    "up_index",
    "split_point",
    "unsplit_point",
    "split_rays",
    "NpElement",
    "conjugate_finitary",
    "qi_witness",
]

INDEX_LIMIT = 1_000_000


def _check_p(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise BadP(f"p must be an integer >= 1, got {p!r}")


def _untranslate_word(n: int, t) -> Word:
    # prod_i g_i^{S_i} with S_i the prefix sums of t cancels the translations
    letters = []
    running = 0
    for i in range(n - 1):
        running += t[i]
        letter = Letter(i, i + 1) if running > 0 else Letter(i + 1, i)
        letters.extend([letter] * abs(running))
    return Word(n, tuple(letters))


def residue(e: Element) -> Element:
    """Finitary part of e: e times the fixed word in the g_i cancelling t(e)."""
    return compose(e, evaluate(_untranslate_word(e.n, e.t)))


def _parity_matters(n: int, p: int) -> bool:
    return n == 2 or p % 2 == 0


def up_member(e: Element, p: int) -> bool:
    """Membership in U_p."""
    _check_p(p)
    if any(v % p for v in e.t):
        return False
    if _parity_matters(e.n, p):
        return sign(residue(e)) == 1
    return True


def coset_label(e: Element, p: int) -> tuple:
    """Complete invariant of the coset U_p e: translations mod p and, when
    U_p meets the finitary group only in even permutations, the parity of
    the residue."""
    _check_p(p)
    t = tuple(v % p for v in e.t[:-1])
    if _parity_matters(e.n, p):
        return t + (sign(residue(e)),)
    return t


def _letters_for(n: int):
    return generating_set("h2" if n == 2 else "gi", n).letters


def _sample_subgroup(n: int, p: int) -> list:
    """A few elements of U_p: p-th powers of generators and an even permutation."""
    out = []
    for i in range(n - 1):
        g = generator(n, i, i + 1)
        out.append(g**p)
    out.append(compose(transposition(n, (0, 1), (1, 1)), transposition(n, (1, 1), (0, 2))))
    if not _parity_matters(n, p):
        out.append(transposition(n, (0, 3), (n - 1, 2)))
    return out


def up_index(n: int, p: int) -> int:
    """|H_n : U_p| by enumerating the cosets reachable from U_p under the generators.

    Every coset is stored with a representative; the labels are checked to be
    well defined (invariant under left multiplication by elements of U_p) and
    to separate cosets (up_member on quotients of representatives).
    """
    _check_p(p)
    if n < 2:
        raise InputError("need n >= 2")
    states = p ** (n - 1) * (2 if _parity_matters(n, p) else 1)
    if states > INDEX_LIMIT:
        raise TooLarge(f"index enumeration for n={n}, p={p} exceeds {INDEX_LIMIT} cosets")
    letters = _letters_for(n)
    gens = [evaluate(Word(n, (a,))) for a in letters]
    start = identity(n)
    reps = {coset_label(start, p): start}
    queue = deque([start])
    while queue:
        e = queue.popleft()
        for g in gens:
            f = compose(e, g)
            label = coset_label(f, p)
            if label not in reps:
                reps[label] = f
                queue.append(f)

    # the action must not depend on the representative
    samples = _sample_subgroup(n, p)
    for label, rep in reps.items():
        for u in samples:
            assert up_member(u, p)
            other = compose(u, rep)
            if coset_label(other, p) != label:
                raise AssertionError(f"coset label not invariant at {label}")
            for g in gens:
                if coset_label(compose(other, g), p) != coset_label(compose(rep, g), p):
                    raise AssertionError(f"generator action not well defined at {label}")
    # distinct labels are distinct cosets
    items = list(reps.items())
    for a, ra in items[:8]:
        for b, rb in items[:8]:
            if up_member(compose(ra, inverse(rb)), p) != (a == b):
                raise AssertionError("labels do not separate cosets")
    return len(reps)


def split_point(x, p: int) -> RayPoint:
    i, k = x
    return RayPoint(i * p + (k - 1) % p, (k - 1) // p + 1)


def unsplit_point(y, p: int) -> RayPoint:
    r, m = y
    return RayPoint(r // p, (m - 1) * p + r % p + 1)


def split_rays(e: Element, p: int) -> Element:
    """The image of e in H_{np} after splitting each ray into p rays."""
    _check_p(p)
    if not up_member(e, p):
        raise NotInUp(f"element is not in U_{p}")
    n = e.n
    t = tuple(e.t[r // p] // p for r in range(n * p))
    window = e.window() // p + 2
    out = {}
    for r in range(n * p):
        for m in range(1, window + 1):
            y = RayPoint(r, m)
            z = split_point(e(unsplit_point(y, p)), p)
            if z != (r, m + t[r]):
                out[y] = z
    return Element(n * p, t, out)


@dataclass(frozen=True)
class NpElement:
    """A commensuration acting on the split ray system.

    ``base`` in H_{np} acts first, then split ray ``r`` is relabelled
    ``blocks[r]``; ``blocks`` must carry each block {ip, ..., ip+p-1} onto a
    block.
    """

    p: int
    base: Element
    blocks: tuple

    def __post_init__(self):
        p = self.p
        if isinstance(p, bool) or not isinstance(p, int) or p < 2 or p % 2:
            raise BadP(f"commensuration data needs an even p >= 2, got {p!r}")
        if self.base.n % p:
            raise InputError(f"base element has {self.base.n} rays, not a multiple of p={p}")
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if sorted(blocks) != list(range(self.base.n)):
            raise InputError("blocks must be a permutation of the split rays")
        for c in range(self.n):
            targets = {blocks[c * p + s] // p for s in range(p)}
            if len(targets) != 1:
                raise InputError(f"block {c} is not carried onto a single block")

    @property
    def n(self) -> int:
        return self.base.n // self.p

    def is_trivial(self) -> bool:
        return self.base.is_identity() and self.blocks == tuple(range(self.base.n))

    def act_split(self, y) -> RayPoint:
        z = self.base(y)
        return RayPoint(self.blocks[z.ray], z.pos)

    def act(self, x) -> RayPoint:
        """Image of a point of the original ray system R_n."""
        return unsplit_point(self.act_split(split_point(x, self.p)), self.p)

    def window(self) -> int:
        """Positions in R_n past which the action is eventually regular."""
        return self.p * (self.base.window() + 1)

    @classmethod
    def from_ray_perm(cls, r: RayPermutation, p: int) -> "NpElement":
        n = len(r)
        blocks = tuple(r(c // p) * p + c % p for c in range(n * p))
        return cls(p, identity(n * p), blocks)

    @classmethod
    def from_element(cls, e: Element, p: int) -> "NpElement":
        """An element of H_n, viewed on the split ray system."""
        n = e.n
        blocks = [0] * (n * p)
        shift = [0] * (n * p)
        for c in range(n * p):
            i, s = divmod(c, p)
            blocks[c] = i * p + (s + e.t[i]) % p
            shift[c] = (s + e.t[i]) // p
        inv_blocks = [0] * (n * p)
        for c, b in enumerate(blocks):
            inv_blocks[b] = c
        # base = (e on split coordinates) followed by blocks^-1
        window = e.window() // p + 2
        out = {}
        for c in range(n * p):
            for m in range(1, window + 1):
                z = split_point(e(unsplit_point((c, m), p)), p)
                z = RayPoint(inv_blocks[z.ray], z.pos)
                if z != (c, m + shift[c]):
                    out[RayPoint(c, m)] = z
        return cls(p, make_element(n * p, tuple(shift), out), tuple(blocks))

    def to_record(self) -> dict:
        return {"p": self.p, "base": self.base.to_record(), "blocks": list(self.blocks)}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    @classmethod
    def from_record(cls, record) -> "NpElement":
        try:
            return cls(record["p"], Element.from_record(record["base"]), tuple(record["blocks"]))
        except (KeyError, TypeError):
            raise InputError("commensuration record needs 'p', 'base' and 'blocks'") from None

    @classmethod
    def from_json(cls, text: str) -> "NpElement":
        try:
            return cls.from_record(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid commensuration JSON: {exc}") from None


def conjugate_finitary(s: Element, phi: NpElement) -> Element:
    """s^phi = phi^-1 s phi for a finitary s, pulled back to R_n."""
    if not is_finitary(s):
        raise NotFinitary("only finitary elements are conjugated here")
    if s.n != phi.n:
        raise InputError(f"element of H_{s.n} conjugated by a commensuration of H_{phi.n}")
    return make_element(s.n, (0,) * s.n, {phi.act(x): phi.act(y) for x, y in s.exceptions.items()})


def _eventual(phi: NpElement, ray: int):
    """(target ray, offset) if phi eventually translates ``ray`` into one ray, else
    (target ray or None, None)."""
    start = phi.window() + 1
    images = [phi.act((ray, k)) for k in range(start, start + phi.p)]
    rays = {y.ray for y in images}
    offsets = {y.pos - k for y, k in zip(images, range(start, start + phi.p))}
    target = rays.pop() if len(rays) == 1 else None
    offset = offsets.pop() if target is not None and len(offsets) == 1 else None
    return target, offset


def _certificate(s: Element, phi: NpElement) -> int:
    return complexity(compose(inverse(s), conjugate_finitary(s, phi))).P


def qi_witness(phi: NpElement, N: int) -> tuple:
    """An element s of H_n with P(s^-1 s^phi) >= N, and that certified value.

    Complexity bounds the g_ij word length from below, so the certificate
    bounds the distance between s and s^phi.
    """
    if phi.is_trivial():
        raise TrivialPhi("the identity commensuration has no witness")
    if N < 1:
        raise InputError("N must be >= 1")
    n = phi.n
    behaviour = [_eventual(phi, i) for i in range(n)]
    extra = phi.window() + 2 * phi.p + 2

    def swap_on(ray):
        for depth in range(N, N + extra + 1):
            s = transposition(n, (ray, depth), (ray, depth + 1))
            cert = _certificate(s, phi)
            if cert >= N:
                return s, cert
        return None

    # a ray translated by a nonzero amount
    for i, (target, offset) in enumerate(behaviour):
        if offset:
            found = swap_on(i)
            if found:
                return found
    # rays carried onto other rays: work on a ray j sent to some i != j
    for i in range(n):
        for j, (target, _) in enumerate(behaviour):
            if j != i and target == i:
                found = swap_on(j)
                if found:
                    return found
    # rays whose points are shuffled without a single translation
    for i, (target, offset) in enumerate(behaviour):
        if target is None or offset is None:
            found = swap_on(i)
            if found:
                return found
    # finitary: move the support far down ray 0 with disjoint transpositions
    window = phi.window()
    moved = [RayPoint(r, k) for r in range(n) for k in range(1, window + 1) if phi.act((r, k)) != (r, k)]
    depth = max(N, max(x.pos for x in moved) + 1)
    pairs = {}
    for idx, x in enumerate(moved):
        far = RayPoint(0, depth + idx)
        pairs[x], pairs[far] = far, x
    s = make_element(n, (0,) * n, pairs)
    cert = _certificate(s, phi)
    if cert < N:  # pragma: no cover - disjoint supports force cert >= depth
        raise AssertionError("finitary witness failed to certify")
    return s, cert
