"""Unit tests for the cone/fan machinery and the toric resolution."""

import json
import random

import pytest

from oracles import (
    affine_union_class_oracle,
    dual_rays_brute,
    orbit_class_oracle,
    random_unimodular_cone,
)
from sncdegen.grothring import GrothClass, L, reduce_mod_L
from sncdegen.toriclat import (
    ChartPresentation,
    Cone,
    Coordinate,
    Fan,
    blowup_chart_sequence,
    contains,
    dual_cone,
    dual_generators,
    fiber_class,
    greedy_decompose,
    is_smooth,
    model_cone,
    resolution_fan,
    semistable_fiber_check,
    sigma_subcone,
    singular_model_chart,
    toric_class,
    unit_vector,
    verify_partition,
)

E = unit_vector


def orthant(rank):
    return Cone([E(rank, i) for i in range(rank)])


# -- Cone construction and canonicalization -----------------------------


def test_cone_canonicalizes_generators():
    c = Cone([(2, 0), (1, 0), (0, 3), (1, 1)])
    assert c.rays == ((0, 1), (1, 0))
    assert c.dim == 2 and c.rank == 2


def test_cone_rejects_zero_generator():
    with pytest.raises(ValueError):
        Cone([(0, 0), (1, 0)])


def test_cone_rejects_line():
    with pytest.raises(ValueError):
        Cone([(1, 0), (-1, 0), (0, 1)])


def test_cone_rejects_mixed_lengths():
    with pytest.raises(ValueError):
        Cone([(1, 0), (1, 0, 0)])


def test_lower_dimensional_cone():
    c = Cone([(1, 1, 0)])
    assert c.dim == 1 and c.rank == 3
    assert c.inequalities is None
    with pytest.raises(ValueError):  # dependent generators, lower dimension
        Cone([(1, 0, 0), (-1, 0, 0)])


def test_empty_cone_needs_rank():
    with pytest.raises(ValueError):
        Cone([])
    c = Cone([], rank=2)
    assert c.rays == () and c.dim == 0


def test_inequality_cache_validated():
    c = Cone([(1, 0), (0, 1)], inequalities=[(1, 0), (0, 1), (1, 1)])
    assert c.inequalities == ((0, 1), (1, 0), (1, 1))
    with pytest.raises(ValueError):  # inequality violated by a generator
        Cone([(1, 0), (0, 1)], inequalities=[(1, 0), (0, 1), (1, -5)])
    with pytest.raises(ValueError):  # cuts out a strictly larger cone
        Cone([(1, 0), (0, 1)], inequalities=[(1, 0)])
    with pytest.raises(ValueError):  # cuts out a different cone
        Cone([(1, 0), (0, 1)], inequalities=[(1, 0), (1, -1)])
    with pytest.raises(ValueError):  # caches only for full-dimensional cones
        Cone([(1, 1, 0)], inequalities=[(1, 0, 0)])


def test_cone_value_semantics():
    a = Cone([(1, 0), (0, 1), (1, 1)])
    b = orthant(2)
    assert a == b and hash(a) == hash(b)
    assert a != Cone([(1, 0), (1, 2)])


# -- membership ---------------------------------------------------------


def test_contains_orthant():
    c = orthant(3)
    assert c.contains((1, 2, 3))
    assert not c.contains((1, -1, 0))
    assert contains(c, (0, 0, 0))
    with pytest.raises(ValueError):
        c.contains((1, 2))


def test_contains_model_generator():
    assert model_cone(2).contains((1, 0, 1))


def test_contains_lower_dimensional():
    c = Cone([(1, 1, 0), (0, 0, 1)])
    assert c.contains((2, 2, 3))
    assert not c.contains((1, 0, 0))   # outside the span
    assert not c.contains((-1, -1, 0))  # in the span, wrong sign


# -- duality ------------------------------------------------------------


def test_orthant_self_dual():
    for rank in range(1, 5):
        assert dual_cone(orthant(rank)) == orthant(rank)


def test_dual_of_model_cone_n2():
    d = dual_cone(model_cone(2))
    assert set(d.rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)}


def test_dual_generators_match():
    for n in range(2, 9):
        d = dual_cone(model_cone(n))
        assert sorted(d.rays) == sorted(dual_generators(n)), n


def test_dual_rejects_lower_dimensional():
    with pytest.raises(ValueError):
        dual_cone(Cone([(1, 1, 0)]))


def test_dual_against_brute_oracle():
    rng = random.Random(42)
    for _ in range(40):
        c = random_unimodular_cone(rng, max_rank=4)
        assert sorted(dual_cone(c).rays) == dual_rays_brute(c)
    for n in (1, 2, 3):
        assert sorted(dual_cone(model_cone(n)).rays) == dual_rays_brute(model_cone(n))


def test_duality_involution_small():
    rng = random.Random(7)
    for _ in range(40):
        c = random_unimodular_cone(rng, max_rank=5)
        assert dual_cone(dual_cone(c)) == c


def test_dual_pairing_definition():
    rng = random.Random(11)
    for _ in range(20):
        c = random_unimodular_cone(rng, max_rank=4)
        d = dual_cone(c)
        for _ in range(20):
            v = tuple(rng.randint(-4, 4) for _ in range(c.rank))
            in_dual = all(sum(a * b for a, b in zip(v, r)) >= 0 for r in c.rays)
            assert d.contains(v) == in_dual


# -- greedy decomposition in the dual model cone ------------------------


def test_greedy_examples():
    gens = dual_generators(2)
    assert greedy_decompose((1, 1, -1), gens) == [0, 0, 0, 1]
    assert greedy_decompose((2, 1, -1), gens) == [1, 0, 0, 1]
    assert greedy_decompose((1, 0, -1), gens) is None
    assert greedy_decompose((3, 2, 5), gens) == [3, 2, 5, 0]


def test_greedy_rejects_wrong_generators():
    with pytest.raises(ValueError):
        greedy_decompose((1, 1, -1), dual_generators(3))
    with pytest.raises(ValueError):
        greedy_decompose((1, 1, -1), list(reversed(dual_generators(2))))


def test_greedy_exhaustive_small():
    for n in (1, 2, 3):
        gens = dual_generators(n)
        dual = dual_cone(model_cone(n))
        points = [(), ]
        grid = range(-3, 4)
        import itertools as it
        for v in it.product(grid, repeat=n + 1):
            coeffs = greedy_decompose(v, gens)
            if dual.contains(v):
                assert coeffs is not None, v
                acc = tuple(sum(c * g[i] for c, g in zip(coeffs, gens))
                            for i in range(n + 1))
                assert acc == v
                assert all(c >= 0 for c in coeffs)
            else:
                assert coeffs is None, v


# -- smoothness ---------------------------------------------------------


def test_is_smooth_examples():
    assert is_smooth(sigma_subcone(2, 1))
    assert is_smooth(sigma_subcone(2, 2))
    assert not is_smooth(model_cone(2))
    assert not is_smooth(Cone([(1, 1), (1, -1)]))          # index 2 sublattice
    assert not is_smooth(Cone([(0, 1, 1), (0, 1, -1)]))    # same, lower dim
    assert is_smooth(Cone([(1, 1, 0)]))
    assert is_smooth(Cone([], rank=3))
    assert is_smooth(orthant(4))


# -- the model cone and its subdivision ---------------------------------


def test_model_cone_rays():
    c = model_cone(2)
    assert set(c.rays) == {(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert c.dim == 3


def test_model_cone_n1_equals_sigma1():
    assert model_cone(1) == sigma_subcone(1, 1)
    assert len(resolution_fan(1)) == 1


def test_resolution_fan_n2():
    fan = resolution_fan(2)
    ray_sets = [set(c.rays) for c in fan]
    assert ray_sets == [
        {(1, 0, 1), (1, 0, 0), (0, 1, 0)},
        {(1, 0, 1), (0, 1, 1), (0, 1, 0)},
    ]


def test_resolution_fan_smooth():
    for n in range(1, 6):
        fan = resolution_fan(n)
        assert len(fan) == n
        assert all(is_smooth(c) for c in fan), n


def test_sigma_subcone_validation():
    with pytest.raises(ValueError):
        sigma_subcone(3, 0)
    with pytest.raises(ValueError):
        sigma_subcone(3, 4)
    with pytest.raises(ValueError):
        model_cone(0)


def test_fan_rejects_non_face_intersection():
    a = Cone([(1, 0), (1, 1)])
    b = Cone([(2, 1), (0, 1)])
    with pytest.raises(ValueError):
        Fan([a, b], rank=2)


def test_fan_rejects_mixed_rank():
    with pytest.raises(ValueError):
        Fan([orthant(2), orthant(3)], rank=2)
    with pytest.raises(ValueError):
        Fan([], rank=2)
    with pytest.raises(ValueError):
        Fan([Cone([(1, 1, 0)])], rank=3)


def test_fan_accepts_disjoint_halves():
    a = Cone([(1, 0), (0, 1)])
    b = Cone([(-1, 0), (0, -1)])
    fan = Fan([a, b], rank=2)  # they meet only in the origin
    assert len(fan) == 2


def test_fan_json_round_trip():
    for n in (1, 2, 4):
        fan = resolution_fan(n)
        data = fan.to_json_dict()
        blob = json.dumps(data)
        again = Fan.from_json_dict(json.loads(blob))
        assert again == fan
        assert again.to_json_dict() == data


def test_fan_rays_sorted_dedup():
    fan = resolution_fan(3)
    rays = fan.rays()
    assert rays == tuple(sorted(set(rays)))
    assert len(rays) == 6  # e1..e3, f1..f3


# -- partition certification --------------------------------------------


def test_partition_model_n2():
    assert verify_partition(resolution_fan(2), model_cone(2), bound=6)


def test_partition_missing_cone_fails():
    partial = Fan([sigma_subcone(2, 1)], rank=3)
    assert not verify_partition(partial, model_cone(2), bound=6)


def test_partition_model_n4():
    assert verify_partition(resolution_fan(4), model_cone(4), bound=4)


def test_partition_wrong_parent_fails():
    # sigma(2) sits inside the orthant but does not fill it: e3 is missed
    assert not verify_partition(resolution_fan(2), orthant(3), bound=2)


def test_partition_negative_coordinates():
    wedge = Cone([(1, 1), (-1, 1)])  # y >= |x|, needs the signed sweep
    left = Cone([(-1, 1), (0, 1)])
    right = Cone([(0, 1), (1, 1)])
    assert verify_partition(Fan([left, right], rank=2), wedge, bound=3)
    assert not verify_partition(Fan([right], rank=2), wedge, bound=3)


def test_partition_validation():
    with pytest.raises(ValueError):
        verify_partition(resolution_fan(2), model_cone(2), bound=0)
    with pytest.raises(ValueError):
        verify_partition(resolution_fan(2), Cone([(1, 1, 0)]), bound=2)


# -- semistability ------------------------------------------------------


def test_semistable_resolution_n3():
    check = semistable_fiber_check(resolution_fan(3), E(4, 3))
    assert (check.reduced, check.smooth, check.snc) == (True, True, True)


def test_semistable_singular_model():
    fan = Fan([model_cone(2)], rank=3)
    check = semistable_fiber_check(fan, E(3, 2))
    assert check.reduced and not check.smooth and not check.snc


def test_semistable_doubled_direction():
    check = semistable_fiber_check(resolution_fan(2), (0, 0, 2))
    assert not check.reduced and not check.snc


def test_semistable_validation():
    with pytest.raises(ValueError):
        semistable_fiber_check(resolution_fan(2), (1, 0))


def test_fiber_check_json():
    check = semistable_fiber_check(resolution_fan(2), E(3, 2))
    assert check.to_json_dict() == {"reduced": True, "smooth": True, "snc": True}


# -- orbit-cone class counting ------------------------------------------


def test_toric_class_orthant():
    assert toric_class(Fan([orthant(2)], rank=2)) == L**2
    assert toric_class(Fan([orthant(5)], rank=5)) == L**5


def test_toric_class_resolution_n2():
    assert toric_class(resolution_fan(2)) == L**3 + L**2


def test_toric_class_against_oracle():
    for n in (1, 2, 3, 4):
        fan = resolution_fan(n)
        assert toric_class(fan) == orbit_class_oracle(fan), n


def test_toric_class_counts_max_cones_at_one():
    for n in (1, 2, 3, 4, 5):
        fan = resolution_fan(n)
        cls = toric_class(fan)
        assert cls.coeffs[-1] == 1 and cls.degree == n + 1
        assert cls.evaluate(1) == len(fan)


def test_fiber_class_resolution_n2():
    assert fiber_class(resolution_fan(2), E(3, 2)) == 2 * L**2


def test_fiber_class_mod_L_matches_singular_model():
    resolved = fiber_class(resolution_fan(2), E(3, 2))
    singular = L * (2 * L - 1)  # {z1*z2 = 0} x A^1_y, by scissor relations
    assert reduce_mod_L(resolved) == reduce_mod_L(singular) == 0


def test_fiber_class_against_oracle():
    for n in (1, 2, 3, 4):
        fan = resolution_fan(n)
        d = E(n + 1, n)
        assert fiber_class(fan, d) == orbit_class_oracle(fan, d), n


def test_orbit_counting_rejects_singular_fan():
    fan = Fan([model_cone(2)], rank=3)
    with pytest.raises(ValueError):
        toric_class(fan)
    with pytest.raises(ValueError):
        fiber_class(fan, E(3, 2))
    with pytest.raises(ValueError):
        fiber_class(resolution_fan(2), (1, 0))


def test_scissor_oracle_consistency():
    for k in range(1, 11):
        assert L**k - (L - 1) ** k == affine_union_class_oracle(k), k


# -- chart presentations ------------------------------------------------


def test_chart_relation_validation():
    z = Coordinate("z", (1, 0))
    w = Coordinate("w", (0, 1))
    p = Coordinate("p", (1, 1))
    chart = ChartPresentation((z, w, p), relation=((2,), (0, 1)))
    assert chart.render_relation() == "p = z*w"
    with pytest.raises(ValueError):
        ChartPresentation((z, w, p), relation=((2,), (0, 0)))
    with pytest.raises(ValueError):
        ChartPresentation((z, w, p), relation=((3,), (0, 1)))
    with pytest.raises(ValueError):
        ChartPresentation(())
    with pytest.raises(ValueError):
        ChartPresentation((z, Coordinate("bad", (1, 0, 0))))


def test_singular_model_chart():
    chart = singular_model_chart(2)
    assert [c.name for c in chart.coordinates] == ["z1", "z2", "t", "y"]
    assert chart.monomials() == ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1))
    assert chart.render_relation() == "t*y = z1*z2"
    assert chart.monomial_cone() == dual_cone(model_cone(2))


def test_blowup_charts_n2():
    u1, u2 = blowup_chart_sequence(2)
    assert [c.name for c in u1.coordinates] == ["t", "z1'", "z2", "y"]
    assert set(u1.monomials()) == {(0, 0, 1), (1, 0, -1), (0, 1, 0), (1, 1, -1)}
    assert u1.monomial_cone() == dual_cone(sigma_subcone(2, 1))
    assert u1.render_relation() == "y = z1'*z2"

    assert [c.name for c in u2.coordinates] == ["t1", "z1", "z2", "y"]
    assert (-1, 0, 1) in u2.monomials() and (1, 1, -1) in u2.monomials()
    assert u2.monomial_cone() == dual_cone(sigma_subcone(2, 2))
    assert u2.render_relation() == "t1*y = z2"


def test_blowup_charts_match_duals():
    for n in range(2, 7):
        charts = blowup_chart_sequence(n)
        assert len(charts) == n
        for k, chart in enumerate(charts, start=1):
            assert chart.monomial_cone() == dual_cone(sigma_subcone(n, k)), (n, k)
            assert chart.relation is not None
            assert is_smooth(chart.monomial_cone()), (n, k)


def test_blowup_needs_n_at_least_2():
    with pytest.raises(ValueError):
        blowup_chart_sequence(1)


def test_chart_json_round_trip():
    for chart in blowup_chart_sequence(3) + [singular_model_chart(3)]:
        blob = json.dumps(chart.to_json_dict())
        again = ChartPresentation.from_json_dict(json.loads(blob))
        assert again == chart
        assert again.to_json_dict() == chart.to_json_dict()
