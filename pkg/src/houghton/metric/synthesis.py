"""Constructive upper bound: explicit g_ij words of length at most 7 P log2 P.

Rays behave like stacks whose top is position 1: ``g_ij`` pops the top point
of ray ``i`` and pushes it onto ray ``j``.  The synthesis works on the
inverse of the target element in three phases: cancel translations, move
every point back into its own ray, then merge-sort each ray's initial
segment through two buffer rays.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from ..element import Element, complexity, compose, generator, inverse, is_finitary
from ..errors import NeedThreeRays, NotFinitary, WrongShape
from ..words import Letter, Word, evaluate, invert_word

__all__ = [
    "SynthesisReport",
    "synthesis_bound",
    "reduce_translations",
    "push_to_initial_segments",
    "sort_initial_segments",
    "sort_bound",
    "synthesize_word",
]

# segments up to this size are sorted by table lookup of an optimal move list
_BASE = 5


def synthesis_bound(P: int) -> int:
    if P <= 1:
        return P
    return math.ceil(7 * P * math.log2(P))


def sort_bound(sizes) -> float:
    """Allowed sorting cost: sum of 2 |I| log2 |I| over segments longer than 1."""
    return sum(2 * m * math.log2(m) for m in sizes if m > 1)


@dataclass(frozen=True)
class SynthesisReport:
    word: Word
    P: int
    bound: int
    phase_lengths: tuple

    def to_record(self) -> dict:
        return {
            "word": str(self.word),
            "length": len(self.word),
            "P": self.P,
            "bound": self.bound,
            "phase_lengths": list(self.phase_lengths),
        }


def _need_three(e: Element) -> None:
    if e.n < 3:
        raise NeedThreeRays(f"word synthesis needs at least 3 rays, got n={e.n}")


def reduce_translations(e: Element) -> tuple[Word, Element]:
    """Append g_ij (smallest i with t_i > 0, smallest j with t_j < 0) until finitary."""
    _need_three(e)
    t = list(e.t)
    letters = []
    while True:
        i = next((r for r in range(e.n) if t[r] > 0), None)
        if i is None:
            break
        j = next(r for r in range(e.n) if t[r] < 0)
        # each g_ij lowers t_i and raises t_j by one
        steps = min(t[i], -t[j])
        letters.extend([Letter(i, j)] * steps)
        t[i] -= steps
        t[j] += steps
    rho = Word(e.n, tuple(letters))
    return rho, compose(e, evaluate(rho))


class _Stacks:
    """Tracked tops of the rays; ``lists[r][-1]`` sits at position 1 of ray r."""

    def __init__(self, n: int):
        self.lists = [[] for _ in range(n)]
        self.letters = []

    def move(self, a: int, b: int) -> None:
        self.lists[b].append(self.lists[a].pop())
        self.letters.append(Letter(a, b))


def push_to_initial_segments(e: Element) -> tuple[Word, Element]:
    """Word mu with e*mu mapping every ray into itself; |mu| <= 4 P(e)."""
    _need_three(e)
    if not is_finitary(e):
        raise NotFinitary("push_to_initial_segments needs a finitary element")
    n = e.n
    p = e.depths
    total = sum(p)
    if total == 0:
        return Word(n), e
    inv = inverse(e)
    st = _Stacks(n)
    # token at point y is labelled with the ray it has to return to
    for r in range(n):
        st.lists[r] = [inv((r, k)).ray for k in range(p[r], 0, -1)]

    for r in range(1, n):
        for _ in range(p[r]):
            st.move(r, 0)
    for _ in range(total):
        label = st.lists[0][-1]
        st.move(0, 1 if label == 0 else label)
    for _ in range(p[0] + p[1]):
        label = st.lists[1][-1]
        st.move(1, 0 if label == 0 else 2)
    for _ in range(p[1]):
        st.move(2, 1)

    mu = Word(n, tuple(st.letters))
    return mu, compose(e, evaluate(mu))


@lru_cache(maxsize=None)
def _optimal_moves(m: int) -> dict:
    """Shortest move lists sorting m tokens on stack 0 with stacks 1, 2 as buffers.

    Keys are the top-down rank sequences on stack 0; the goal is ranks
    0..m-1 read top-down with both buffers empty again.
    """
    goal = (tuple(range(m - 1, -1, -1)), (), ())
    toward_goal = {goal: None}
    queue = deque([goal])
    while queue:
        s = queue.popleft()
        for a in range(3):
            if not s[a]:
                continue
            for b in range(3):
                if a == b:
                    continue
                nxt = list(s)
                nxt[b] = s[b] + (s[a][-1],)
                nxt[a] = s[a][:-1]
                nxt = tuple(nxt)
                if nxt not in toward_goal:
                    toward_goal[nxt] = (b, a)
                    queue.append(nxt)
    table = {}
    for perm in permutations(range(m)):
        s = (tuple(reversed(perm)), (), ())
        moves = []
        while toward_goal[s] is not None:
            a, b = toward_goal[s]
            moves.append((a, b))
            nxt = list(s)
            nxt[b] = s[b] + (s[a][-1],)
            nxt[a] = s[a][:-1]
            s = tuple(nxt)
        table[perm] = tuple(moves)
    return table


def _in_order(tokens: list, ascending: bool) -> bool:
    # tokens are stored bottom..top, so top-down ascending means list descending
    pairs = zip(tokens, tokens[1:])
    return all(a > b for a, b in pairs) if ascending else all(a < b for a, b in pairs)


def _sort_top(st: _Stacks, x: int, y: int, z: int, m: int, ascending: bool) -> None:
    """Reorder the top m tokens of stack x, using y and z as scratch stacks."""
    if m <= 1:
        return
    top = st.lists[x][-m:]
    if _in_order(top, ascending):
        return
    if m <= _BASE:
        order = sorted(top) if ascending else sorted(top, reverse=True)
        rank = {v: r for r, v in enumerate(order)}
        perm = tuple(rank[v] for v in reversed(top))
        names = (x, y, z)
        for a, b in _optimal_moves(m)[perm]:
            st.move(names[a], names[b])
        return
    order = sorted(top) if ascending else sorted(top, reverse=True)
    upper = set(order[: m // 2])
    for _ in range(m):
        st.move(x, z if st.lists[x][-1] in upper else y)
    deep, shallow = m - m // 2, m // 2
    # a stack moved token by token arrives reversed, so sort the other way round
    _sort_top(st, y, x, z, deep, not ascending)
    for _ in range(deep):
        st.move(y, x)
    _sort_top(st, z, x, y, shallow, not ascending)
    for _ in range(shallow):
        st.move(z, x)


def sort_initial_segments(e: Element) -> Word:
    """Word w with e*w the identity, for e permuting an initial segment of each ray."""
    _need_three(e)
    n = e.n
    if any(e.t) or any(x.ray != y.ray for x, y in e.exceptions.items()):
        raise WrongShape("element must map every ray onto itself")
    inv = inverse(e)
    st = _Stacks(n)
    for r in range(n):
        m = e.depths[r]
        if m < 2:
            continue
        # the point now at (r, k) must travel to position pos((r,k) e^-1)
        st.lists[r] = [inv((r, k)).pos for k in range(m, 0, -1)]
        _sort_top(st, r, (r + 1) % n, (r + 2) % n, m, True)
        st.lists[r] = []
    return Word(n, tuple(st.letters))


def synthesize_word(e: Element) -> SynthesisReport:
    """A g_ij word evaluating to e, of length at most ceil(7 P log2 P)."""
    _need_three(e)
    n = e.n
    P = complexity(e).P
    bound = synthesis_bound(P)
    if P == 0:
        return SynthesisReport(Word(n), 0, 0, (0, 0, 0))
    if P == 1:
        for i in range(n):
            for j in range(n):
                if i != j and generator(n, i, j) == e:
                    return SynthesisReport(Word(n, (Letter(i, j),)), 1, 1, (0, 0, 1))
        raise AssertionError("complexity-one element is not a generator")  # pragma: no cover

    rho, finite = reduce_translations(e)
    mu, segmented = push_to_initial_segments(finite)
    sorter = sort_initial_segments(segmented)
    # e * rho * mu * sorter is the identity
    word = invert_word(rho + mu + sorter)
    return SynthesisReport(word, P, bound, (len(rho), len(mu), len(sorter)))
