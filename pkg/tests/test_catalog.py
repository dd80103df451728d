import pytest

from cubicaut.catalog import (
    FAMILY_TAGS,
    RING5,
    TAGS,
    catalog_build,
    hyperplane_restrict,
    perm6_to_p4,
    specialize,
)
from cubicaut.field import zeta
from cubicaut.geometry import preserves
from cubicaut.groups import Perm
from cubicaut.linalg import matmul

ROW_DATA = {
    # tag: (s, aut_name, aut_order, p)
    "J15": (10, "Sym6", 720, 15),
    "J14": (9, "Sym3^2:C2", 72, 9),
    "J9a": (6, "Sym5", 120, 0),
    "J9b": (6, "Sym3^2:C2", 72, 0),
    "J5a": (5, "Sym5", 120, 0),
    "J5b": (5, "Alt5", 60, 0),
}


@pytest.mark.parametrize("tag", TAGS)
def test_rows_build(tag):
    entry = catalog_build(tag)
    s, name, order, p = ROW_DATA[tag]
    assert entry.tag == tag
    assert entry.s == s
    assert entry.aut_name == name
    assert entry.aut_order == order
    assert entry.p == p
    assert len(entry.singular_points) == s


@pytest.mark.parametrize("tag", TAGS)
def test_forms_are_homogeneous_cubics(tag):
    entry = catalog_build(tag)
    assert all(sum(e) == 3 for e in entry.form.terms)
    assert not entry.form.is_zero()


@pytest.mark.parametrize("tag", TAGS)
def test_recorded_points_are_singular(tag):
    entry = catalog_build(tag)
    grads = entry.form.gradient()
    for p in entry.singular_points:
        vec = list(p.vector())
        assert entry.form.evaluate(vec).is_zero()
        assert all(g.evaluate(vec).is_zero() for g in grads)


@pytest.mark.parametrize("tag", TAGS)
def test_seed_planes_lie_on_variety(tag):
    entry = catalog_build(tag)
    for plane in entry.seed_planes:
        assert plane.dim_proj() == 2


def test_family_tags_build():
    for tag in FAMILY_TAGS:
        entry = catalog_build(tag)
        assert entry.tag == tag
        assert all(sum(e) == 3 for e in entry.form.terms)


def test_unknown_tag():
    with pytest.raises((KeyError, ValueError)):
        catalog_build("J99")


def test_specialize_plain_ints():
    fam = catalog_build("F-J9")
    member = specialize(fam.form, {"A": 1, "B": 1, "C": -1, "D": -1})
    assert member.ring.names == RING5.names
    assert all(sum(e) == 3 for e in member.terms)


def test_perm6_to_p4_is_a_homomorphism():
    a = Perm.from_cycles(((0, 1),), 6)
    b = Perm.from_cycles(((0, 1, 2, 3, 4, 5),), 6)
    ta, tb = perm6_to_p4(a), perm6_to_p4(b)
    tab = perm6_to_p4(a * b)
    assert tab.matrix == matmul(ta.matrix, tb.matrix) or tab == ta * tb


def test_perm6_lifts_preserve_j15():
    entry = catalog_build("J15")
    for cycles in (((0, 1),), ((0, 1, 2, 3, 4, 5),)):
        t = perm6_to_p4(Perm.from_cycles(cycles, 6))
        assert preserves(t, entry.form)


def test_j5b_has_cube_root_coefficients():
    entry = catalog_build("J5b")
    coeffs = set(entry.form.terms.values())
    assert zeta(3) in coeffs
    assert entry.conductor % 3 == 0


def test_j15_conductor_is_rational():
    entry = catalog_build("J15")
    assert all(c.is_rational() for c in entry.form.terms.values())


def test_hyperplane_restrict_drops_a_variable():
    fam = catalog_build("J15")
    assert fam.form.ring.nvars == 5
    # restricting any RING6 symmetric cubic along x5 = -(x0+..+x4) lands in 5
    from cubicaut.catalog import RING6
    y = RING6.gens()
    cubic = RING6.zero
    for i in range(6):
        for j in range(i + 1, 6):
            for k in range(j + 1, 6):
                cubic = cubic + y[i] * y[j] * y[k]
    relation = sum(y, RING6.zero)
    restricted = hyperplane_restrict(cubic, relation)
    assert restricted.ring.nvars == 5
    assert all(sum(e) == 3 for e in restricted.terms)


def test_minimal_subgroup_specs_present():
    for tag in TAGS:
        entry = catalog_build(tag)
        for spec in entry.minimal_subgroups:
            assert spec.label
            assert spec.kind in ("full", "perm6", "point-perm", "index2")
