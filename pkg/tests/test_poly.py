import random
from fractions import Fraction

import pytest

from cubicaut.field import ONE, rational, zeta
from cubicaut.linalg import mat
from cubicaut.poly import (
    FieldDomain,
    MultiPoly,
    ParamDomain,
    PolyRing,
    coefficient_conditions,
    proportionality,
)

R3 = PolyRing(("x", "y", "z"), FieldDomain())
X, Y, Z = R3.gens()


def _rand_poly(rng, ring, nterms=4, maxdeg=2):
    f = ring.zero
    n = ring.nvars
    for _ in range(nterms):
        exps = tuple(rng.randrange(maxdeg + 1) for _ in range(n))
        f = f + ring.monomial(exps, rng.randint(-3, 3))
    return f


def test_ring_basics():
    assert R3.nvars == 3
    assert R3.names == ("x", "y", "z")
    assert R3.zero.is_zero()
    assert not R3.one.is_zero()
    assert R3.constant(Fraction(1, 2)) + R3.constant(Fraction(1, 2)) == R3.one
    g = R3.gens()
    assert len(g) == 3 and g[0] == X


def test_from_terms_and_monomial():
    f = R3.from_terms({(1, 1, 0): ONE, (0, 0, 2): rational(2)})
    assert f == X * Y + R3.monomial((0, 0, 2), 2)
    assert R3.monomial((0, 0, 0), 5) == R3.constant(5)


def test_extend_drop_fresh_name():
    big = R3.extend(("t",))
    assert big.nvars == 4 and big.names[-1] == "t"
    small = R3.drop(2)
    assert small.names == ("x", "y")
    assert R3.fresh_name("x") not in R3.names


def test_grevlex_leading_monomials():
    # total degree first
    assert (X + Y * Y).leading_monomial() == (0, 2, 0)
    # among equal degrees the earlier variables win
    assert (X * Y + Z * Z).leading_monomial() == (1, 1, 0)
    assert (X * Y + Y * Z).leading_monomial() == (1, 1, 0)


def test_order_is_multiplicative():
    rng = random.Random(3)
    for _ in range(30):
        f = _rand_poly(rng, R3)
        g = _rand_poly(rng, R3)
        if f.is_zero() or g.is_zero():
            continue
        lead = (f * g).leading_monomial()
        combined = tuple(a + b for a, b in zip(f.leading_monomial(),
                                               g.leading_monomial()))
        assert lead == combined


def test_ring_axioms_spot():
    rng = random.Random(4)
    for _ in range(30):
        f, g, h = (_rand_poly(rng, R3) for _ in range(3))
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) * h == f * h + g * h
        assert f + R3.zero == f
        assert f * R3.one == f
        assert (f - f).is_zero()


def test_degree_and_scalar_ops():
    f = X * X * Y + Z
    assert f.degree() == 3
    assert (f + f) == 2 * f
    assert (-f) + f == R3.zero
    assert (f * Fraction(1, 2)) * 2 == f


def test_evaluate():
    f = X * X + Y * Z - R3.constant(3)
    val = f.evaluate([Fraction(2), Fraction(1), Fraction(5)])
    assert val == rational(4 + 5 - 3)
    with pytest.raises(ValueError):
        f.evaluate([Fraction(1)])


def test_substitute_concrete():
    f = X * Y
    images = [Y, X, Z]
    assert f.substitute(images, R3) == X * Y
    g = (X + Y).substitute([X + Z, Y, Z], R3)
    assert g == X + Y + Z


def test_substitute_functoriality_small():
    rng = random.Random(6)
    for _ in range(20):
        f = _rand_poly(rng, R3, nterms=3)
        sigma = [_rand_poly(rng, R3, nterms=2, maxdeg=1) for _ in range(3)]
        tau = [_rand_poly(rng, R3, nterms=2, maxdeg=1) for _ in range(3)]
        once = f.substitute(sigma, R3).substitute(tau, R3)
        composed = [s.substitute(tau, R3) for s in sigma]
        assert once == f.substitute(composed, R3)


def test_compose_matrix_matches_substitute():
    m = mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    f = X * X + 2 * Y * Z
    assert f.compose_matrix(m) == f.substitute([Y, X, Z], R3)


def test_derivative_and_gradient():
    f = X * X * Y + 3 * Z
    assert f.derivative(0) == 2 * X * Y
    assert f.derivative(1) == X * X
    assert f.derivative(2) == R3.constant(3)
    assert f.gradient() == [f.derivative(i) for i in range(3)]


def test_euler_identity_homogeneous():
    f = X * X * Y + Y * Y * Z + Z * Z * X
    total = R3.zero
    for i, g in enumerate(f.gradient()):
        total = total + R3.gens()[i] * g
    assert total == 3 * f


def test_dehomogenize():
    f = X * Y + Z * Z
    aff = f.dehomogenize(2)
    assert aff.ring.names == ("x", "y")
    assert aff == aff.ring.gens()[0] * aff.ring.gens()[1] + aff.ring.one


def test_lift_to():
    big = R3.extend(("t",))
    f = X * Y
    lifted = f.lift_to(big, {0: 0, 1: 1, 2: 2})
    tb = big.gens()
    assert lifted == tb[0] * tb[1]


def test_map_coefficients_and_monic():
    f = 2 * X + 4 * Y
    doubled = f.map_coefficients(lambda c: c + c)
    assert doubled == 4 * X + 8 * Y
    m = f.monic()
    assert m == X + 2 * Y


def test_cyclotomic_coefficients():
    w = zeta(3)
    f = X + w * Y
    g = X + w * w * Y
    prod = f * g
    # (x + wy)(x + w^2 y) = x^2 + (w + w^2) xy + y^2 = x^2 - xy + y^2
    assert prod == X * X - X * Y + Y * Y


def test_proportionality():
    f = X * Y + Z * Z
    assert proportionality(f, 3 * f) == rational(3)
    assert proportionality(f, f) == ONE
    assert proportionality(f, f + X) is None
    assert proportionality(f, R3.zero) is None


def test_param_domain_conditions():
    params = PolyRing(("a", "b"), FieldDomain())
    dom = ParamDomain(params)
    ring = PolyRing(("x", "y"), dom)
    x, y = ring.gens()
    a, b = params.gens()
    f = ring.monomial((1, 0), a) + ring.monomial((0, 1), 1)
    g = ring.monomial((1, 0), 1) + ring.monomial((0, 1), b)
    conds = coefficient_conditions(f, g)
    # proportionality of (a, 1) and (1, b) comes down to ab - 1 = 0
    assert conds
    assert any(c == a * b - params.one or c == params.one - a * b
               for c in conds)
