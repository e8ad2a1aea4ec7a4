"""Breadth-first search in Cayley graphs of H_n: balls, exact lengths, growth."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import product

from ..element import Element, compose, identity
from ..errors import BudgetExceeded, InputError
from ..words import GeneratingSet, Letter, Word, generating_set, letter_element

__all__ = [
    "DEFAULT_CAP",
    "BallTable",
    "bfs_ball",
    "word_length",
    "geodesic",
    "free_semigroup_check",
    "free_semigroup_count",
]

DEFAULT_CAP = 5_000_000


@dataclass
class BallTable:
    """Exact word lengths of every element within ``radius`` of the identity.

    ``elements`` is in BFS discovery order, which is deterministic; ``parents``
    records one predecessor and the letter leading from it, enough to recover
    a geodesic word for every element.
    """

    n: int
    genset: GeneratingSet
    radius: int
    elements: list = field(default_factory=list)
    lengths: dict = field(default_factory=dict)
    parents: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, e: Element) -> bool:
        return e in self.lengths

    def length(self, e: Element) -> int:
        return self.lengths[e]

    def sphere_sizes(self) -> list:
        sizes = [0] * (self.radius + 1)
        for d in self.lengths.values():
            sizes[d] += 1
        return sizes

    def ball_sizes(self) -> list:
        out, total = [], 0
        for s in self.sphere_sizes():
            total += s
            out.append(total)
        return out

    def geodesic(self, e: Element) -> Word:
        letters = []
        while True:
            step = self.parents[e]
            if step is None:
                break
            e, letter = step
            letters.append(letter)
        return Word(self.n, tuple(reversed(letters)))

    def growth_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["length", "count"])
        for d, count in enumerate(self.sphere_sizes()):
            writer.writerow([d, count])
        return buf.getvalue()

    def dump_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["element", "length"])
        for e in self.elements:
            writer.writerow([e.to_json(), self.lengths[e]])
        return buf.getvalue()


def _resolve(n: int, genset) -> GeneratingSet:
    if isinstance(genset, GeneratingSet):
        if genset.n != n:
            raise InputError("generating set built for a different number of rays")
        return genset
    return generating_set(genset, n)


def bfs_ball(n: int, genset="gij", radius: int = 3, cap: int = DEFAULT_CAP) -> BallTable:
    """All elements of word length <= radius, with their exact lengths."""
    if radius < 0:
        raise InputError("radius must be >= 0")
    gs = _resolve(n, genset)
    gens = list(zip(gs.letters, gs.elements()))
    start = identity(n)
    table = BallTable(n, gs, radius, [start], {start: 0}, {start: None})
    frontier = [start]
    for d in range(1, radius + 1):
        nxt = []
        for e in frontier:
            for letter, g in gens:
                f = compose(e, g)
                if f not in table.lengths:
                    table.lengths[f] = d
                    table.parents[f] = (e, letter)
                    table.elements.append(f)
                    nxt.append(f)
                    if len(table.elements) > cap:
                        raise BudgetExceeded(f"ball of radius {radius} exceeds {cap} elements")
        frontier = nxt
    return table


def _expand(frontier, seen, gens, cap_counter, cap):
    nxt = {}
    for e in frontier:
        for letter, g in gens:
            f = compose(e, g)
            if f not in seen and f not in nxt:
                nxt[f] = (e, letter)
                cap_counter[0] += 1
                if cap_counter[0] > cap:
                    raise BudgetExceeded(f"search exceeded {cap} elements")
    return nxt


def word_length(e: Element, genset="gij", max_length: int | None = None, cap: int = DEFAULT_CAP):
    """Exact word length of ``e`` by bidirectional BFS.

    Returns ``None`` when the length exceeds ``max_length``.  Raises
    :class:`BudgetExceeded` once more than ``cap`` elements were visited.
    """
    found = geodesic(e, genset, max_length, cap)
    return None if found is None else len(found)


def geodesic(e: Element, genset="gij", max_length: int | None = None, cap: int = DEFAULT_CAP):
    """A shortest word for ``e`` (or ``None`` beyond ``max_length``)."""
    n = e.n
    gs = _resolve(n, genset)
    gens = list(zip(gs.letters, gs.elements()))
    start = identity(n)
    if e == start:
        return Word(n)
    # forward side grows from the identity, backward side from e; both use
    # right multiplication, valid because the letter set is closed under inverses
    fwd = {start: None}
    bwd = {e: None}
    fwd_frontier, bwd_frontier = [start], [e]
    fwd_radius = bwd_radius = 0
    counter = [2]
    while max_length is None or fwd_radius + bwd_radius < max_length:
        if not fwd_frontier or not bwd_frontier:
            return None
        grow_forward = len(fwd_frontier) <= len(bwd_frontier)
        if grow_forward:
            new = _expand(fwd_frontier, fwd, gens, counter, cap)
            fwd.update(new)
            fwd_frontier = list(new)
            fwd_radius += 1
            meets = [f for f in fwd_frontier if f in bwd]
        else:
            new = _expand(bwd_frontier, bwd, gens, counter, cap)
            bwd.update(new)
            bwd_frontier = list(new)
            bwd_radius += 1
            meets = [f for f in bwd_frontier if f in fwd]
        if meets:
            best = min(meets, key=lambda m: _depth(fwd, m) + _depth(bwd, m))
            return Word(n, _path(fwd, best) + _reverse_path(bwd, best))
    return None


def _depth(tree, x) -> int:
    d = 0
    while tree[x] is not None:
        x = tree[x][0]
        d += 1
    return d


def _path(tree, x) -> tuple:
    letters = []
    while tree[x] is not None:
        x, letter = tree[x]
        letters.append(letter)
    return tuple(reversed(letters))


def _reverse_path(tree, x) -> tuple:
    # tree grows from e by right multiplication: x = e * w, so x -> e is w^-1
    letters = []
    while tree[x] is not None:
        x, letter = tree[x]
        letters.append(letter.inverse())
    return tuple(letters)


def free_semigroup_check(max_length: int) -> bool:
    """Whether positive words in g_01, g_02 of length <= L are pairwise distinct."""
    return free_semigroup_count(max_length) == 2 ** (max_length + 1) - 2


def free_semigroup_count(max_length: int) -> int:
    if max_length < 1:
        raise InputError("maximum length must be >= 1")
    a, b = letter_element(Letter(0, 1), 3), letter_element(Letter(0, 2), 3)
    seen = set()
    level = [identity(3)]
    for _ in range(max_length):
        level = [compose(x, g) for x, g in product(level, (a, b))]
        seen.update(level)
    return len(seen)
