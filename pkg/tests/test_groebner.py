import random

import pytest

from cubicaut.groebner import (
    BudgetExceeded,
    Ideal,
    NonIsolatedPoint,
    groebner,
    local_multiplicity,
    normal_form,
    proj_dim_degree,
    radical_member,
    saturated_equal,
)
from cubicaut.poly import FieldDomain, PolyRing

R3 = PolyRing(("x", "y", "z"), FieldDomain())
X, Y, Z = R3.gens()


def test_ideal_generators():
    ideal = Ideal([X, Y])
    assert len(ideal.generators) == 2
    assert all(not g.is_zero() for g in ideal.generators)


def test_unit_ideal():
    gb = groebner(Ideal([X, X + R3.one]))
    assert gb.contains_one()
    assert gb.reduce(Y).is_zero()


def test_groebner_membership():
    gb = groebner(Ideal([X * X - Y, Y * Y - Z]))
    assert gb.contains(X * X - Y)
    assert gb.contains(X * X * X * X - Z)
    assert not gb.contains(X - Y)


def test_spairs_reduce_to_zero():
    gb = groebner(Ideal([X * X - Y * Z, X * Y - Z * Z, Y * Y - X * Z]))
    assert gb.spairs_reduce_to_zero()


def test_normal_form_idempotent_linear():
    basis = groebner(Ideal([X * X - Y])).elements
    f = X * X * X + X * Y
    r = normal_form(f, basis)
    assert normal_form(r, basis) == r
    g = Y * Y
    assert normal_form(f + g, basis) == normal_form(
        normal_form(f, basis) + normal_form(g, basis), basis)


def test_radical_membership():
    assert radical_member(X, Ideal([X * X]))
    assert radical_member(X * Y, Ideal([X * X * Y * Y * Y]))
    assert not radical_member(Y, Ideal([X * X]))
    assert not radical_member(X + Y, Ideal([X * X]))


def test_proj_dim_degree_point():
    assert proj_dim_degree(Ideal([X, Y])) == (0, 1)


def test_proj_dim_degree_coordinate_points():
    # the three coordinate points of P^2 cut out by the pairwise products
    ideal = Ideal([X * Y, X * Z, Y * Z])
    assert proj_dim_degree(ideal) == (0, 3)


def test_proj_dim_degree_hypersurface():
    dim, deg = proj_dim_degree(Ideal([X * X - Y * Z]))
    assert dim == 1
    assert deg == 2


def test_local_multiplicity_node():
    # Jacobian of x^2 + y^2 + z^2 at the origin
    assert local_multiplicity([2 * X, 2 * Y, 2 * Z], [0, 0, 0]) == 1


def test_local_multiplicity_higher_order():
    R4 = PolyRing(("a", "b", "c", "t"), FieldDomain())
    a, b, c, t = R4.gens()
    assert local_multiplicity([2 * a, 2 * b, 2 * c, 2 * t], [0, 0, 0, 0]) == 1
    assert local_multiplicity([2 * a, 2 * b, 2 * c, 3 * t * t],
                              [0, 0, 0, 0]) == 2
    assert local_multiplicity([2 * a, 2 * b, 2 * c, 4 * t * t * t],
                              [0, 0, 0, 0]) == 3


def test_local_multiplicity_off_origin():
    R2 = PolyRing(("u", "v"), FieldDomain())
    u, v = R2.gens()
    shifted = [u - R2.one, v + R2.one]
    assert local_multiplicity(shifted, [1, -1]) == 1


def test_local_multiplicity_non_isolated():
    R2 = PolyRing(("u", "v"), FieldDomain())
    u, _ = R2.gens()
    with pytest.raises(NonIsolatedPoint):
        local_multiplicity([u], [0, 0])


def test_saturated_equal():
    assert saturated_equal(Ideal([X * Y]), Ideal([Y]), X)
    assert not saturated_equal(Ideal([X * Y]), Ideal([X]), X)
    assert saturated_equal(Ideal([X * X * Y]), Ideal([X * Y]), X)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        groebner(Ideal([X ** 4 + Y ** 4 + Z ** 4 - R3.one,
                        X * Y * Z - R3.constant(2),
                        X ** 3 * Y - Z]), budget=20)


def test_random_bases_are_groebner():
    rng = random.Random(17)
    checked = 0
    for _ in range(40):
        f = R3.zero
        g = R3.zero
        for _ in range(3):
            f = f + R3.monomial(tuple(rng.randrange(3) for _ in range(3)),
                                rng.randint(-3, 3))
            g = g + R3.monomial(tuple(rng.randrange(3) for _ in range(3)),
                                rng.randint(-3, 3))
        if f.is_zero() or g.is_zero():
            continue
        gb = groebner(Ideal([f, g]), budget=50_000)
        assert gb.spairs_reduce_to_zero()
        checked += 1
    assert checked >= 30


def test_groebner_reduce_is_zero_on_members():
    gb = groebner(Ideal([X * X - Y, Y * Z - X]))
    member = (X * X - Y) * Z + (Y * Z - X) * X
    assert gb.reduce(member).is_zero()
