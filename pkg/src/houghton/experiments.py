"""Reproducible experiment drivers behind the command line interface."""

from __future__ import annotations

from itertools import product

from .element import compose, identity, transposition
from .metric.growth import growth_rows
from .metric.search import DEFAULT_CAP, word_length
from .morphisms.embeddings import cohopf_double, double_preimage, is_in_double_image, sigma_n
from .report import ExperimentReport
from .words import Letter, Word, evaluate, letter_element, random_element

__all__ = [
    "sigma_word",
    "distortion_report",
    "growth_report",
    "cohopf_report",
    "free_report",
]

H2_LENGTH_CAP = 40
H3_LENGTH_CAP = 8


def sigma_word(k: int) -> Word:
    """g_02^k g_12^k g_02^-k g_12^-k in H_3."""
    a, b = Letter(0, 2), Letter(1, 2)
    letters = [a] * k + [b] * k + [a.inverse()] * k + [b.inverse()] * k
    return Word(3, tuple(letters))


def distortion_report(
    max_k: int = 3,
    h2_cap: int = H2_LENGTH_CAP,
    h3_cap: int = H3_LENGTH_CAP,
    identity_k: int = 100,
    cap: int = DEFAULT_CAP,
) -> ExperimentReport:
    """Length of sigma_k in H_2 (exact BFS) against its length in H_3.

    Rows run to ``max(max_k, identity_k)``; H_2 lengths are searched only for
    k <= max_k and reported empty when longer than ``h2_cap``.
    """
    rows = []
    for k in range(1, max(max_k, identity_k) + 1):
        word = sigma_word(k)
        identity_ok = evaluate(word) == sigma_n(3, k)
        h2 = h3 = None
        if k <= max_k:
            h2 = word_length(sigma_n(2, k), "h2", max_length=h2_cap, cap=cap)
            h3 = word_length(sigma_n(3, k), "gij", max_length=h3_cap, cap=cap)
        rows.append(
            {
                "k": k,
                "h2_length": h2,
                "h2_per_k": None if h2 is None else round(h2 / k, 6),
                "h3_word_length": len(word),
                "h3_identity": identity_ok,
                "h3_exact": h3,
            }
        )
    params = {"max_k": max_k, "h2_cap": h2_cap, "h3_cap": h3_cap, "identity_k": identity_k}
    return ExperimentReport("distortion", params, rows)


def growth_report(n: int, genset: str, radius: int, cap: int = DEFAULT_CAP) -> ExperimentReport:
    return ExperimentReport("growth", {"n": n, "genset": genset, "radius": radius}, growth_rows(n, genset, radius, cap))


def cohopf_report(seed: int = 1, pairs: int = 200, n: int = 3, budget: int = 40) -> ExperimentReport:
    """Homomorphism, round-trip and non-surjectivity checks for the doubling map."""
    hom = roundtrip = 0
    for idx in range(pairs):
        a = random_element(n, budget, f"{seed}:a:{idx}")
        b = random_element(n, budget, f"{seed}:b:{idx}")
        if cohopf_double(compose(a, b)) == compose(cohopf_double(a), cohopf_double(b)):
            hom += 1
        image = cohopf_double(a)
        if is_in_double_image(image) and double_preimage(image) == a:
            roundtrip += 1
    witness = transposition(n, (0, 2), (0, 3))
    rows = [
        {"check": "homomorphism", "passed": hom, "total": pairs, "ok": hom == pairs},
        {"check": "preimage_roundtrip", "passed": roundtrip, "total": pairs, "ok": roundtrip == pairs},
        {"check": "non_image_witness", "passed": int(not is_in_double_image(witness)), "total": 1,
         "ok": not is_in_double_image(witness)},
        {"check": "identity_fixed", "passed": int(cohopf_double(identity(n)) == identity(n)), "total": 1,
         "ok": cohopf_double(identity(n)) == identity(n)},
    ]
    return ExperimentReport("check-cohopf", {"seed": seed, "pairs": pairs, "n": n, "budget": budget}, rows)


def free_report(max_length: int = 10) -> ExperimentReport:
    """Distinct elements among positive words in g_01, g_02, by word length."""
    a, b = letter_element(Letter(0, 1), 3), letter_element(Letter(0, 2), 3)
    seen = set()
    level = [identity(3)]
    rows = []
    for d in range(1, max_length + 1):
        level = [compose(x, g) for x, g in product(level, (a, b))]
        seen.update(level)
        expected = 2 ** (d + 1) - 2
        rows.append({"length": d, "words": expected, "distinct": len(seen), "ok": len(seen) == expected})
    return ExperimentReport("check-free", {"max_length": max_length}, rows)
