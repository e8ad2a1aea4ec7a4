"""Generator alphabets, words and random elements.

Word text is a whitespace separated list of tokens ``g(i,j)``,
``g(i,j)^k`` (``k`` a nonzero integer; negative exponents invert) and ``t``
for the H_2 transposition.  The inverse of ``g(i,j)`` is ``g(j,i)``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache

from .element import Element, RayPoint, compose, generator, transposition
from .errors import InputError, ParseError, RayOutOfRange, SameRay, TauOutsideH2

__all__ = [
    "Letter",
    "TAU",
    "Word",
    "GeneratingSet",
    "generating_set",
    "letter_element",
    "evaluate",
    "invert_word",
    "free_reduce",
    "parse",
    "format_word",
    "random_element",
    "random_word",
]


@dataclass(frozen=True, order=True)
class Letter:
    """``G(i, j)`` for g_ij, or the H_2 transposition when ``tau`` is set."""

    i: int = -1
    j: int = -1
    tau: bool = False

    @classmethod
    def g(cls, i: int, j: int) -> "Letter":
        if i == j:
            raise SameRay(f"g({i},{j}) needs distinct rays")
        return cls(i, j)

    def inverse(self) -> "Letter":
        return self if self.tau else Letter(self.j, self.i)

    def validate(self, n: int) -> None:
        if self.tau:
            if n != 2:
                raise TauOutsideH2(f"the letter t only exists in H_2, not H_{n}")
            return
        if self.i == self.j:
            raise SameRay(f"g({self.i},{self.j}) needs distinct rays")
        for r in (self.i, self.j):
            if not 0 <= r < n:
                raise RayOutOfRange(f"ray {r} out of range for n={n}")

    def __str__(self):
        return "t" if self.tau else f"g({self.i},{self.j})"


TAU = Letter(tau=True)


@lru_cache(maxsize=None)
def letter_element(letter: Letter, n: int) -> Element:
    letter.validate(n)
    if letter.tau:
        return transposition(2, RayPoint(0, 1), RayPoint(1, 1))
    return generator(n, letter.i, letter.j)


@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            letter.validate(self.n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if other.n != self.n:
            raise InputError("cannot concatenate words over different ray counts")
        return Word(self.n, self.letters + other.letters)

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True)
class GeneratingSet:
    """A named generating family, closed under inverses."""

    name: str
    n: int
    letters: tuple

    def elements(self) -> list:
        return [letter_element(a, self.n) for a in self.letters]


def generating_set(name: str, n: int) -> GeneratingSet:
    """Build ``gij`` (all g_ij), ``gi`` (g_i = g_{i,i+1} and inverses) or ``h2``."""
    name = name.lower()
    if name == "gij":
        if n < 2:
            raise InputError("gij needs n >= 2")
        letters = tuple(Letter(i, j) for i in range(n) for j in range(n) if i != j)
    elif name == "gi":
        if n < 3:
            raise InputError("the g_i generating set needs n >= 3")
        letters = []
        for i in range(n):
            letters.append(Letter(i, (i + 1) % n))
            letters.append(Letter((i + 1) % n, i))
        letters = tuple(letters)
    elif name == "h2":
        if n != 2:
            raise InputError("the h2 generating set only exists for n = 2")
        letters = (Letter(0, 1), Letter(1, 0), TAU)
    else:
        raise InputError(f"unknown generating set {name!r} (expected gij, gi or h2)")
    return GeneratingSet(name, n, letters)


def evaluate(w: Word) -> Element:
    """Left-to-right product of the letters of ``w``.

    Rather than multiplying elements, every ray is treated as a stack of
    labelled points (top at position 1) and the letters are replayed as
    moves; a ray is popped at most once per letter, so tracking that many
    points per ray is enough.
    """
    n = w.n
    pops = [0] * n
    for a in w.letters:
        if a.tau:
            pops[0] += 1
            pops[1] += 1
        else:
            pops[a.i] += 1
    depth = [c + 1 for c in pops]
    stacks = [[RayPoint(r, k) for k in range(depth[r], 0, -1)] for r in range(n)]
    for a in w.letters:
        if a.tau:
            s0, s1 = stacks
            s0[-1], s1[-1] = s1[-1], s0[-1]
        else:
            stacks[a.j].append(stacks[a.i].pop())
    t = tuple(len(stacks[r]) - depth[r] for r in range(n))
    out = {}
    for r in range(n):
        stack = stacks[r]
        height = len(stack)
        for idx, x in enumerate(stack):
            pos = height - idx
            if x.ray != r or pos != x.pos + t[r]:
                out[x] = RayPoint(r, pos)
    return Element(n, t, out)


def invert_word(w: Word) -> Word:
    return Word(w.n, tuple(a.inverse() for a in reversed(w.letters)))


def free_reduce(w: Word) -> Word:
    out = []
    for a in w.letters:
        if out and out[-1] == a.inverse():
            out.pop()
        else:
            out.append(a)
    return Word(w.n, tuple(out))


_SPACE = re.compile(r"\s*")
_TOKEN = re.compile(r"g\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)(?:\^(-?\d+))?|t(?:\^(-?\d+))?")


def parse(text: str, n: int) -> Word:
    """Parse word text over H_n."""
    letters = []
    pos = 0
    while True:
        gap = _SPACE.match(text, pos)
        pos = gap.end()
        if pos == len(text):
            break
        tm = _TOKEN.match(text, pos)
        if tm is None:
            token = text[pos:].split(maxsplit=1)[0]
            raise ParseError(f"unrecognized token {token!r}", pos)
        token = tm.group()
        if token.startswith("t"):
            exp = int(tm.group(4)) if tm.group(4) is not None else 1
            letter = TAU
        else:
            i, j = int(tm.group(1)), int(tm.group(2))
            exp = int(tm.group(3)) if tm.group(3) is not None else 1
            if i == j:
                raise ParseError(f"g({i},{j}) needs distinct rays", pos)
            letter = Letter(i, j)
        if exp == 0:
            raise ParseError("exponent must be nonzero", pos)
        try:
            letter.validate(n)
        except InputError as exc:
            raise type(exc)(f"{exc} (at position {pos})") from None
        if exp < 0:
            letter = letter.inverse()
        letters.extend([letter] * abs(exp))
        pos = tm.end()
    return Word(n, tuple(letters))


def format_word(w: Word, compact: bool = True) -> str:
    """Canonical text; with ``compact`` runs of a letter become ``g(i,j)^k``."""
    tokens = []
    letters = w.letters
    idx = 0
    while idx < len(letters):
        a = letters[idx]
        run = 1
        if compact and not a.tau:
            while idx + run < len(letters) and letters[idx + run] == a:
                run += 1
        tokens.append(str(a) if run == 1 else f"{a}^{run}")
        idx += run
    return " ".join(tokens)


def random_word(n: int, length: int, seed, genset: GeneratingSet | None = None) -> Word:
    rng = random.Random(seed)
    letters = (genset or generating_set("h2" if n == 2 else "gij", n)).letters
    return Word(n, tuple(rng.choice(letters) for _ in range(length)))


def _random_composition(rng: random.Random, total: int, parts: int) -> list:
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0] + cuts + [total]
    return [bounds[k + 1] - bounds[k] for k in range(parts)]


def _random_translation(rng: random.Random, n: int, amount: int) -> list:
    """Random zero-sum vector with half absolute sum equal to ``amount``."""
    t = [0] * n
    if amount == 0:
        return t
    rays = list(range(n))
    rng.shuffle(rays)
    split = rng.randint(1, n - 1)
    pos_rays, neg_rays = rays[:split], rays[split:]
    for r, v in zip(pos_rays, _random_composition(rng, amount, len(pos_rays))):
        t[r] = v
    for r, v in zip(neg_rays, _random_composition(rng, amount, len(neg_rays))):
        t[r] = -v
    return t


def random_element(n: int, budget: int, seed) -> Element:
    """Deterministic pseudo-random element of complexity at most ``budget``.

    The element is a random permutation of a prefix grid of every ray followed
    by a random zero-sum translation whose forced bottom points are matched at
    random.  Both parts use about half of the budget, so results range from
    finitary to translation dominated elements.
    """
    if budget < 0:
        raise InputError("budget must be >= 0")
    rng = random.Random(seed)
    depth = rng.randint(0, budget // (2 * n))
    amount = rng.randint(0, budget // 2)

    grid = [RayPoint(r, k) for r in range(n) for k in range(1, depth + 1)]
    images = grid[:]
    rng.shuffle(images)
    mix = Element(n, (0,) * n, {x: y for x, y in zip(grid, images) if x != y})

    t = _random_translation(rng, n, amount)
    sources = [RayPoint(r, k) for r in range(n) if t[r] < 0 for k in range(1, -t[r] + 1)]
    targets = [RayPoint(r, k) for r in range(n) if t[r] > 0 for k in range(1, t[r] + 1)]
    rng.shuffle(targets)
    shift = Element(n, tuple(t), dict(zip(sources, targets)))
    # depths: at most max(depth, |t_r|) on each ray, so P <= budget/2 + T
    return compose(mix, shift)

