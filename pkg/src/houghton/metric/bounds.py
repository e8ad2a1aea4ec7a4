"""Complexity lower bound and the effect of one generator on complexity."""

from __future__ import annotations

from ..element import Element, apply, complexity, compose, generator
from ..errors import InputError
from ..words import Letter


def lower_bound(e: Element) -> int:
    """Lower bound on the g_ij word length: the complexity P(e)."""
    return complexity(e).P


def _check_letter(e: Element, letter: Letter) -> None:
    if letter.tau:
        raise InputError("complexity steps are defined for g_ij letters only")
    letter.validate(e.n)


def generator_complexity_step(e: Element, letter: Letter) -> int:
    """P(e * g_ij) - P(e), computed by multiplying out."""
    _check_letter(e, letter)
    after = compose(e, generator(e.n, letter.i, letter.j))
    return complexity(after).P - complexity(e).P


def predicted_complexity_step(e: Element, letter: Letter) -> int:
    """The same difference read off from e alone.

    Only two depths can move: p_i grows by one when (i, p_i + 1) lands on
    (i, 1), and p_j shrinks by one when (j, p_j + 1) lands on (j, 1) while
    (j, p_j) lands on (i, 1).
    """
    _check_letter(e, letter)
    i, j = letter.i, letter.j
    p = e.depths
    if apply(e, (i, p[i] + 1)) == (i, 1):
        return 1
    if p[j] >= 1 and apply(e, (j, p[j] + 1)) == (j, 1) and apply(e, (j, p[j])) == (i, 1):
        return -1
    return 0
