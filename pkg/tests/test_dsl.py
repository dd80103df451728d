from fractions import Fraction

import pytest

from cubicaut.catalog import RING5
from cubicaut.dsl import DslError, parse_cycles, parse_point, parse_poly
from cubicaut.field import rational, zeta
from cubicaut.groups import Perm
from cubicaut.poly import FieldDomain, PolyRing

R2 = PolyRing(("x0", "x1"), FieldDomain())


def test_parse_simple_poly():
    f = parse_poly("x0*x1 + 2*x0*x0", R2)
    a, b = R2.gens()
    assert f == a * b + 2 * a * a


def test_parse_fractions_and_signs():
    f = parse_poly("1/2*x0 - x1", R2)
    a, b = R2.gens()
    assert f == Fraction(1, 2) * a - b


def test_parse_cyclotomic_scalars():
    a, b = R2.gens()
    assert parse_poly("w*x0", R2) == zeta(3) * a
    assert parse_poly("i*x1", R2) == zeta(4) * b
    assert parse_poly("z5*x0*x1", R2) == zeta(5) * a * b


def test_parse_whitespace_insensitive():
    assert parse_poly(" x0 * x1+x0*x0 ", R2) == parse_poly("x0*x1 + x0*x0", R2)


def test_parse_rejects_unknown_names():
    with pytest.raises(DslError):
        parse_poly("y0*x1", R2)
    with pytest.raises(DslError):
        parse_poly("x0 + q", R2)


def test_parse_rejects_out_of_range_variable():
    with pytest.raises(DslError):
        parse_poly("x7", R2)


def test_parse_catalog_sized_form():
    text = "x0*x1*x2 + x1*x2*x3 + x2*x3*x4 + x3*x4*x0 + x4*x0*x1"
    f = parse_poly(text, RING5)
    assert f.degree() == 3
    assert len(f.terms) == 5


def test_parse_point():
    p = parse_point("(1 : -2 : 0 : w : 2/3)")
    assert p.ambient == 4
    assert p.vector()[0] == rational(1)
    assert p.vector()[3] == zeta(3)
    # projective normalization: scaling gives the same point
    q = parse_point("(2 : -4 : 0 : 2*w : 4/3)")
    assert p == q


def test_parse_point_rejects_zero():
    with pytest.raises(ValueError):
        parse_point("(0 : 0 : 0)")


def test_parse_cycles_identity():
    assert parse_cycles("", 4) == Perm.identity(4)
    assert parse_cycles("()", 4) == Perm.identity(4)
    assert parse_cycles("id", 4) == Perm.identity(4)


def test_parse_cycles_one_indexed():
    p = parse_cycles("(1,2,3)", 3)
    assert p.images == (1, 2, 0)


def test_parse_cycles_rightmost_first():
    p = parse_cycles("(1,2)(2,3)", 3)
    # apply (2,3) then (1,2): the product is the 3-cycle 1->2->3->1
    assert p.images == (1, 2, 0)
    assert p == (Perm.from_cycles(((0, 1),), 3)
                 * Perm.from_cycles(((1, 2),), 3))


def test_parse_cycles_errors():
    with pytest.raises(DslError):
        parse_cycles("(1,5)", 3)
    with pytest.raises(DslError):
        parse_cycles("(1,1)", 3)
    with pytest.raises(DslError):
        parse_cycles("1,2", 3)
