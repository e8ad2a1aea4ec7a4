"""Shared generators of random test data."""


from hypothesis import strategies as st

from houghton import RayPermutation, make_element, random_element


def rand_elements(n, count, budget=40, seed="t"):
    return [random_element(n, budget, f"{seed}:{i}") for i in range(count)]


def rand_ray_perm(n, rng):
    perm = list(range(n))
    rng.shuffle(perm)
    return RayPermutation(tuple(perm))


@st.composite
def elements(draw, n=3, budget=30):
    seed = draw(st.integers(min_value=0, max_value=10**9))
    return random_element(n, draw(st.integers(0, budget)), seed)


@st.composite
def finitary_elements(draw, n=3, depth=4):
    points = [(r, k) for r in range(n) for k in range(1, depth + 1)]
    images = draw(st.permutations(points))
    return make_element(n, (0,) * n, dict(zip(points, images)))
