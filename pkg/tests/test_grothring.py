"""Unit tests for the Z[L] arithmetic and the arrangement-class formulas."""

import json
import random

import pytest

from sncdegen.grothring import (
    GrothClass,
    L,
    ONE,
    ZERO,
    arrangement_class_closed,
    arrangement_class_inclusion_exclusion,
    arrangement_class_recursive,
    binomial_congruence_check,
    proj_space_class,
    reduce_mod_L,
)


def rand_class(rng, max_degree=8, bound=100):
    return GrothClass([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_degree + 1))])


# -- representation -----------------------------------------------------


def test_trailing_zeros_trimmed():
    assert GrothClass([1, 2, 0, 0]).coeffs == (1, 2)
    assert GrothClass([0, 0]).coeffs == ()
    assert GrothClass().coeffs == ()


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        GrothClass([1.5])
    with pytest.raises(TypeError):
        GrothClass(["1"])


def test_immutable():
    x = GrothClass([1, 2])
    with pytest.raises(AttributeError):
        x._coeffs = (3,)
    assert hash(x) == hash(GrothClass([1, 2, 0]))


def test_degree():
    assert ZERO.degree == -1
    assert ONE.degree == 0
    assert L.degree == 1
    assert proj_space_class(4).degree == 4


def test_render():
    assert ZERO.render() == "0"
    assert ONE.render() == "1"
    assert L.render() == "L"
    assert GrothClass([-1]).render() == "-1"
    assert GrothClass([1, 1, 1]).render() == "1 + L + L^2"
    assert GrothClass([0, -1, 2]).render() == "-L + 2*L^2"
    assert GrothClass([2, 0, -3]).render() == "2 - 3*L^2"


def test_json_round_trip():
    for cs in [(), (1,), (0, -1, 2), (5, 4, 3, 2, 1)]:
        x = GrothClass(cs)
        blob = json.dumps(x.to_json_dict())
        assert GrothClass.from_json_dict(json.loads(blob)) == x
    assert GrothClass([1, 2, 0]).to_json_dict() == {"coeffs": [1, 2]}


# -- ring structure -----------------------------------------------------


def test_basic_arithmetic():
    assert L + 1 == GrothClass([1, 1])
    assert 1 + L == GrothClass([1, 1])
    assert L - L == ZERO
    assert 2 - L == GrothClass([2, -1])
    assert L * L == GrothClass([0, 0, 1])
    assert 3 * L == GrothClass([0, 3])
    assert L**0 == ONE
    assert L**3 == GrothClass([0, 0, 0, 1])
    assert (L - 1) ** 2 == GrothClass([1, -2, 1])
    assert -proj_space_class(1) == GrothClass([-1, -1])
    assert bool(ZERO) is False and bool(L) is True


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        L ** (-1)


def test_ring_axioms_random():
    rng = random.Random(20260823)
    for _ in range(200):
        a, b, c = (rand_class(rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a * ZERO == ZERO
        assert a - a == ZERO


def test_reduce_mod_L_is_ring_hom():
    rng = random.Random(987)
    assert reduce_mod_L(ZERO) == 0
    assert reduce_mod_L(GrothClass([1, 2, 1])) == 1
    for _ in range(200):
        a, b = rand_class(rng), rand_class(rng)
        assert reduce_mod_L(a + b) == reduce_mod_L(a) + reduce_mod_L(b)
        assert reduce_mod_L(a * b) == reduce_mod_L(a) * reduce_mod_L(b)


def test_evaluate():
    assert proj_space_class(3).evaluate(1) == 4
    assert (L**2 - L).evaluate(5) == 20
    assert ZERO.evaluate(7) == 0


# -- arrangement classes ------------------------------------------------


def test_proj_space_validation():
    with pytest.raises(ValueError):
        proj_space_class(-1)


def test_closed_known_values():
    assert arrangement_class_closed(1, 4) == proj_space_class(4)
    assert arrangement_class_closed(2, 1) == GrothClass([1, 2])
    assert arrangement_class_closed(3, 1) == GrothClass([0, 3])
    assert arrangement_class_closed(5, 0) == GrothClass([5])
    assert arrangement_class_closed(3, 2) == GrothClass([1, 0, 3])
    assert arrangement_class_closed(4, 2) == GrothClass([2, -2, 4])


def test_inclusion_exclusion_known_values():
    assert arrangement_class_inclusion_exclusion(2, 1) == GrothClass([1, 2])
    assert arrangement_class_inclusion_exclusion(3, 1) == GrothClass([0, 3])
    assert reduce_mod_L(arrangement_class_inclusion_exclusion(3, 1)) == 0
    assert reduce_mod_L(arrangement_class_inclusion_exclusion(4, 2)) == 2


def test_recursive_base_cases():
    assert arrangement_class_recursive(1, 4) == proj_space_class(4)
    assert arrangement_class_recursive(7, 0) == GrothClass([7])
    assert arrangement_class_recursive(2, 1) == GrothClass([1, 2])


def test_triple_agreement():
    for r in range(1, 13):
        for n in range(0, 13):
            closed = arrangement_class_closed(r, n)
            assert arrangement_class_recursive(r, n) == closed, (r, n)
            assert arrangement_class_inclusion_exclusion(r, n) == closed, (r, n)


def test_congruence_low_range():
    for n in range(0, 13):
        for r in range(1, n + 2):
            assert reduce_mod_L(arrangement_class_closed(r, n)) == 1, (r, n)


def test_congruence_boundary():
    for n in range(0, 13):
        residue = reduce_mod_L(arrangement_class_closed(n + 2, n))
        assert residue == 1 + (-1) ** n, n


def test_binomial_congruence_check():
    assert binomial_congruence_check(1, 0) == 1
    assert binomial_congruence_check(4, 3) == 1
    assert binomial_congruence_check(7, 10) == 1
    for n in range(0, 15):
        for r in range(1, n + 2):
            assert binomial_congruence_check(r, n) == 1


def test_argument_validation():
    for bad in [(0, 2), (-1, 2), (2, -1)]:
        with pytest.raises(ValueError):
            arrangement_class_closed(*bad)
        with pytest.raises(ValueError):
            arrangement_class_recursive(*bad)
        with pytest.raises(ValueError):
            arrangement_class_inclusion_exclusion(*bad)
    with pytest.raises(ValueError):
        arrangement_class_inclusion_exclusion(31, 2)
    with pytest.raises(ValueError):
        binomial_congruence_check(5, 3)
