"""Acceptance criteria, one test per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import random
import time

from houghton import (
    RayPermutation,
    RayPoint,
    NpElement,
    apply,
    bfs_ball,
    cohopf_double,
    complexity,
    complexity_class_witnesses,
    compose,
    compose_all,
    conj_by_ray_perm,
    double_preimage,
    enumerate_complexity_class,
    evaluate,
    generating_set,
    generator,
    identity,
    inverse,
    is_in_double_image,
    make_element,
    predicted_complexity_step,
    generator_complexity_step,
    qi_witness,
    random_element,
    sigma_n,
    split_rays,
    stabilizer_embed,
    synthesis_bound,
    synthesize_word,
    transposition,
    up_index,
    up_member,
)
from houghton.experiments import distortion_report, free_report, growth_report, sigma_word
from houghton.morphisms.commensurations import conjugate_finitary, split_point

PAIRS = 200


def seeded(n, count, budget, tag):
    return [random_element(n, budget, f"acc:{tag}:{i}") for i in range(count)]


def test_ac01_generator_semantics():
    start = time.perf_counter()
    for n in (2, 3, 4):
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                g = generator(n, i, j)
                assert apply(g, (i, 1)) == (j, 1)
                for k in range(1, 101):
                    assert apply(g, (j, k)) == (j, k + 1)
                    if k >= 2:
                        assert apply(g, (i, k)) == (i, k - 1)
                    for r in range(n):
                        if r not in (i, j):
                            assert apply(g, (r, k)) == (r, k)
    assert time.perf_counter() - start < 1.0


def test_ac02_commutator():
    g0, g1 = generator(3, 0, 1), generator(3, 1, 2)
    assert compose_all([inverse(g0), inverse(g1), g0, g1]) == transposition(3, (1, 1), (2, 1))


def test_ac03_metric_lower_bound():
    start = time.perf_counter()
    ball = bfs_ball(3, "gij", 7)
    for e in ball.elements:
        assert complexity(e).P <= ball.length(e)
    letters = generating_set("gij", 3).letters
    radius6 = [e for e in ball.elements if ball.length(e) <= 6]
    assert len(radius6) == 6330
    for e in radius6:
        for a in letters:
            d = generator_complexity_step(e, a)
            assert abs(d) <= 1
            assert d == predicted_complexity_step(e, a)
    assert time.perf_counter() - start <= 60


def test_ac04_metric_upper_bound():
    start = time.perf_counter()
    checked = 0
    seed = 0
    while checked < 1000:
        e = random_element(3, 300, f"acc:upper:{seed}")
        seed += 1
        P = complexity(e).P
        if not 2 <= P <= 300:
            continue
        rep = synthesize_word(e)
        assert evaluate(rep.word) == e
        assert len(rep.word) <= synthesis_bound(P)
        checked += 1
    assert time.perf_counter() - start <= 60


def test_ac05_oracle_sandwich():
    ball = bfs_ball(3, "gij", 5)
    assert len(ball.elements) == 1755
    for e in ball.elements:
        synthesized = len(synthesize_word(e).word)
        assert complexity(e).P <= ball.length(e) <= synthesized


def test_ac06_sigma_identity():
    for k in range(1, 101):
        assert evaluate(sigma_word(k)) == sigma_n(3, k)


def test_ac07_distortion_table():
    start = time.perf_counter()
    report = distortion_report(max_k=3, identity_k=100)
    rows = report.rows
    assert len(rows) == 100
    assert all(r["h3_identity"] and r["h3_word_length"] <= 4 * r["k"] for r in rows)
    h2 = [r["h2_length"] for r in rows[:3]]
    assert None not in h2
    assert h2[0] == 1
    ratios = [length / k for k, length in enumerate(h2, start=1)]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert time.perf_counter() - start <= 300


def test_ac08_up_indices():
    assert up_index(3, 2) == 8
    assert up_index(3, 3) == 9
    assert up_index(3, 4) == 32
    assert up_index(4, 2) == 16


def _into_u2(e):
    sq = compose(e, e)
    return sq if up_member(sq, 2) else compose(sq, transposition(3, (0, 1), (1, 1)))


def test_ac09_ray_splitting():
    left = [_into_u2(e) for e in seeded(3, PAIRS, 30, "split-a")]
    right = [_into_u2(e) for e in seeded(3, PAIRS, 30, "split-b")]
    for a, b in zip(left, right):
        assert up_member(a, 2) and up_member(b, 2)
        sa, sb = split_rays(a, 2), split_rays(b, 2)
        assert split_rays(compose(a, b), 2) == compose(sa, sb)
        for i in range(3):
            assert sa.t[2 * i] == sa.t[2 * i + 1]
        for x in [(r, k) for r in range(3) for k in range(1, a.window() + 2)]:
            assert apply(sa, split_point(x, 2)) == split_point(apply(a, x), 2)


def test_ac10_cohopf():
    left, right = seeded(3, PAIRS, 40, "cohopf-a"), seeded(3, PAIRS, 40, "cohopf-b")
    for a, b in zip(left, right):
        assert cohopf_double(compose(a, b)) == compose(cohopf_double(a), cohopf_double(b))
        image = cohopf_double(a)
        assert is_in_double_image(image)
        assert double_preimage(image) == a
    assert not is_in_double_image(transposition(3, (0, 2), (0, 3)))


def test_ac11_stabilizer_embedding():
    rng = random.Random("acc:stab")
    left, right = seeded(3, PAIRS, 40, "stab-a"), seeded(3, PAIRS, 40, "stab-b")
    for a, b in zip(left, right):
        q = RayPoint(rng.randrange(3), rng.randint(1, 10))
        sa = stabilizer_embed(a, q)
        assert apply(sa, q) == q
        assert make_element(sa.n, sa.t, sa.exceptions) == sa
        assert stabilizer_embed(compose(a, b), q) == compose(sa, stabilizer_embed(b, q))


def test_ac12_free_subsemigroup():
    rows = free_report(10).rows
    assert rows[-1]["distinct"] == 2046
    assert all(r["ok"] for r in rows)
    growth = growth_report(3, "gij", 7).rows
    assert all(r["ball"] >= 2 ** r["radius"] for r in growth)


def test_ac13_complexity_class_count():
    report = complexity_class_witnesses(3, 2)
    assert report.lower == 24
    cls = enumerate_complexity_class(3, 2)
    assert all(complexity(e).P == 2 for e in cls)
    assert len(set(cls)) == report.class_size >= 24


def test_ac14_qi_witnesses():
    archetypes = {
        "translation": NpElement.from_element(generator(3, 1, 0), 2),
        "ray swap": NpElement.from_ray_perm(RayPermutation.cycle(3, 0, 1), 2),
        "finitary": NpElement.from_element(transposition(3, (0, 1), (1, 2)), 2),
    }
    for phi in archetypes.values():
        s, cert = qi_witness(phi, 50)
        assert cert >= 50
        assert complexity(compose(inverse(s), conjugate_finitary(s, phi))).P == cert
    s, _ = qi_witness(archetypes["ray swap"], 50)
    assert {x.ray for x in s.exceptions} == {1}


def test_ac15_automorphism_action():
    rng = random.Random("acc:aut")
    left, right = seeded(4, PAIRS, 40, "aut-a"), seeded(4, PAIRS, 40, "aut-b")
    for a, b in zip(left, right):
        r = RayPermutation(tuple(rng.sample(range(4), 4)))
        s = RayPermutation(tuple(rng.sample(range(4), 4)))
        assert conj_by_ray_perm(compose(a, b), r) == compose(conj_by_ray_perm(a, r), conj_by_ray_perm(b, r))
        assert conj_by_ray_perm(conj_by_ray_perm(a, r), s) == conj_by_ray_perm(a, r.then(s))
        assert conj_by_ray_perm(a, RayPermutation.identity(4)) == a
        assert conj_by_ray_perm(identity(4), r).is_identity()
