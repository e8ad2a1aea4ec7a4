import json

import pytest
from hypothesis import given, settings

from houghton import (
    BadPoint,
    ComplexityProfile,
    Element,
    EqualPoints,
    NotBijective,
    NotFinitary,
    RayCountMismatch,
    RayOutOfRange,
    RayPoint,
    SameRay,
    ZeroSumViolation,
    abelianization,
    apply,
    complexity,
    compose,
    compose_all,
    equals,
    finitary,
    generator,
    identity,
    inverse,
    is_finitary,
    make_element,
    power,
    sign,
    support,
    translation_amount,
    transposition,
)

from .helpers import elements, finitary_elements, rand_elements


def points(n, depth):
    return [(r, k) for r in range(n) for k in range(1, depth + 1)]


# construction and validation


def test_generator_is_canonical_form():
    assert make_element(3, (-1, 1, 0), {(0, 1): (1, 1)}) == generator(3, 0, 1)


def test_redundant_exceptions_are_dropped():
    e = make_element(3, (0, 0, 0), {(0, 1): (0, 1), (2, 5): (2, 5)})
    assert e.is_identity()
    assert e.exceptions == {}


def test_zero_sum_is_enforced():
    with pytest.raises(ZeroSumViolation):
        make_element(3, (1, 0, 0), {})


@pytest.mark.parametrize(
    "t, mapping",
    [
        ((0, 0, 0), {(0, 1): (1, 1)}),  # (1,1) hit twice
        ((-1, 1, 0), {}),  # (0,1) would leave its ray
        ((0, 0, 0), {(0, 1): (0, 2), (0, 2): (0, 3)}),  # (0,1) never hit
    ],
)
def test_non_bijective_data_is_rejected(t, mapping):
    with pytest.raises(NotBijective):
        make_element(3, t, mapping)


def test_point_validation():
    with pytest.raises(RayOutOfRange):
        make_element(3, (0, 0, 0), {(3, 1): (0, 1)})
    with pytest.raises(BadPoint):
        apply(identity(3), (0, 0))
    with pytest.raises(RayOutOfRange):
        apply(identity(3), (5, 1))


def test_constructor_errors():
    with pytest.raises(SameRay):
        generator(3, 1, 1)
    with pytest.raises(RayOutOfRange):
        generator(3, 0, 3)
    with pytest.raises(EqualPoints):
        transposition(3, (0, 1), (0, 1))


# action and products


def test_generator_action():
    g = generator(3, 0, 1)
    assert apply(g, (0, 1)) == (1, 1)
    assert apply(g, (0, 5)) == (0, 4)
    assert apply(g, (1, 3)) == (1, 4)
    assert apply(g, (2, 7)) == (2, 7)
    assert g((0, 2)) == RayPoint(0, 1)


def test_generator_square_by_hand():
    g = generator(3, 0, 1)
    # (0,1) -> (1,1) -> (1,2) and (0,2) -> (0,1) -> (1,1)
    expected = make_element(3, (-2, 2, 0), {(0, 1): (1, 2), (0, 2): (1, 1)})
    assert compose(g, g) == expected
    assert g**2 == expected


def test_commutator_of_g0_g1():
    g0, g1 = generator(3, 0, 1), generator(3, 1, 2)
    assert compose_all([~g0, ~g1, g0, g1]) == transposition(3, (1, 1), (2, 1))


@settings(max_examples=60, deadline=None)
@given(elements(), elements())
def test_compose_is_pointwise_right_action(a, b):
    ab = compose(a, b)
    depth = max(a.window(), b.window()) + 5
    for x in points(3, depth):
        assert apply(ab, x) == apply(b, apply(a, x))


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=60, deadline=None)
@given(elements())
def test_inverse_laws(e):
    assert compose(e, inverse(e)).is_identity()
    assert compose(inverse(e), e).is_identity()
    assert inverse(inverse(e)) == e
    depth = e.window() + 3
    for x in points(3, depth):
        assert apply(inverse(e), apply(e, x)) == x


@settings(max_examples=40, deadline=None)
@given(elements(n=4))
def test_power_matches_repeated_product(e):
    assert power(e, 0) == identity(4)
    assert power(e, 3) == compose_all([e, e, e])
    assert power(e, -2) == compose(inverse(e), inverse(e))


def test_compose_checks_ray_count():
    with pytest.raises(RayCountMismatch):
        compose(identity(3), identity(4))
    with pytest.raises(RayCountMismatch):
        equals(identity(3), identity(4))


def test_equality_and_hash_follow_canonical_form():
    a = make_element(3, (0, 0, 0), {(0, 1): (1, 1), (1, 1): (0, 1), (2, 2): (2, 2)})
    b = transposition(3, (1, 1), (0, 1))
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
    assert equals(a, b)


# invariants


def test_complexity_of_generators_and_identity():
    assert complexity(identity(3)) == ComplexityProfile((0, 0, 0), 0, 0)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert complexity(generator(3, i, j)).P == 1


def test_complexity_profile_oracle():
    e = make_element(3, (-2, 2, 0), {(0, 1): (1, 2), (0, 2): (1, 1)})
    prof = complexity(e)
    assert prof.p == (2, 0, 0)
    assert prof.P == 2 and prof.T == 2


def test_complexity_profile_rejects_inconsistent_data():
    with pytest.raises(ValueError):
        ComplexityProfile((1, 1), 3, 0)
    with pytest.raises(ValueError):
        ComplexityProfile((1, 0), 1, 2)


def test_abelianization_is_a_homomorphism():
    for a, b in zip(rand_elements(4, 50, seed="ab-a"), rand_elements(4, 50, seed="ab-b")):
        lhs = abelianization(compose(a, b))
        rhs = tuple(x + y for x, y in zip(abelianization(a), abelianization(b)))
        assert lhs == rhs


def test_translation_amount():
    assert translation_amount(generator(4, 0, 3)) == 1
    assert translation_amount(make_element(3, (-2, 2, 0), {(0, 1): (1, 2), (0, 2): (1, 1)})) == 2


def test_sign_and_support():
    t = transposition(3, (0, 1), (2, 4))
    assert sign(t) == -1
    assert support(t) == [(0, 1), (2, 4)]
    cyc = finitary(3, {(0, 1): (1, 1), (1, 1): (2, 1), (2, 1): (0, 1)})
    assert sign(cyc) == 1
    assert is_finitary(cyc) and not is_finitary(generator(3, 0, 1))
    with pytest.raises(NotFinitary):
        sign(generator(3, 0, 1))


@settings(max_examples=60, deadline=None)
@given(finitary_elements(), finitary_elements())
def test_sign_is_multiplicative(a, b):
    assert sign(compose(a, b)) == sign(a) * sign(b)


# serialization


@settings(max_examples=60, deadline=None)
@given(elements(n=4))
def test_json_round_trip(e):
    assert Element.from_json(e.to_json()) == e
    assert Element.from_record(json.loads(e.to_json())) == e


def test_record_format():
    rec = generator(3, 0, 1).to_record()
    assert rec == {"n": 3, "t": [-1, 1, 0], "map": [[[0, 1], [1, 1]]]}
