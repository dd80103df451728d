import pytest

from cubicaut.catalog import catalog_build
from cubicaut.dsl import parse_cycles
from cubicaut.field import rational, zeta
from cubicaut.geometry import (
    DegenerateFrame,
    LinearSubspace,
    ProjPoint,
    ProjTransform,
    diagonal_lifts,
    frame_map,
    general_position,
    plane_contained,
    preserves,
    span_meet,
)
from cubicaut.linalg import mat
from cubicaut.poly import FieldDomain, PolyRing

R5 = PolyRing(("x0", "x1", "x2", "x3", "x4"), FieldDomain())


def _pt(*coords):
    return ProjPoint(list(coords))


def test_projpoint_normalization():
    p = _pt(2, 4, 0)
    assert p.vector()[0] == rational(1)
    assert p == _pt(1, 2, 0)
    assert p.ambient == 2
    q = _pt(0, 0, 7)
    assert q.vector() == (rational(0), rational(0), rational(1))


def test_projpoint_hash_eq():
    assert hash(_pt(3, 3, 3)) == hash(_pt(1, 1, 1))
    assert _pt(1, 0, 1) != _pt(1, 1, 0)
    with pytest.raises(ValueError):
        ProjPoint([0, 0, 0])


def test_subspace_from_points():
    line = LinearSubspace.from_points([_pt(1, 0, 0, 0), _pt(0, 1, 0, 0)])
    assert line.dim_proj() == 1
    assert line.contains_point(_pt(1, 1, 0, 0))
    assert line.contains_point(_pt(1, -5, 0, 0))
    assert not line.contains_point(_pt(0, 0, 1, 0))


def test_subspace_from_equations():
    # x2 = x3 = 0 in P^3 is the same line
    line = LinearSubspace.from_equations([[0, 0, 1, 0], [0, 0, 0, 1]])
    assert line == LinearSubspace.from_points([_pt(1, 0, 0, 0),
                                               _pt(0, 1, 0, 0)])
    eqs = line.equations()
    assert len(eqs) == 2


def test_subspace_containment():
    plane = LinearSubspace.from_points(
        [_pt(1, 0, 0, 0), _pt(0, 1, 0, 0), _pt(0, 0, 1, 0)])
    line = LinearSubspace.from_points([_pt(1, 0, 0, 0), _pt(0, 1, 0, 0)])
    assert plane.contains(line)
    assert not line.contains(plane)
    assert plane.dim_proj() == 2


def test_span_meet():
    a = LinearSubspace.from_points([_pt(1, 0, 0), _pt(0, 1, 0)])
    b = LinearSubspace.from_points([_pt(0, 1, 0), _pt(0, 0, 1)])
    m = span_meet(a, b)
    assert m.dim_proj() == 0
    assert m.contains_point(_pt(0, 1, 0))


def test_subspace_apply():
    line = LinearSubspace.from_points([_pt(1, 0, 0), _pt(0, 1, 0)])
    rot = mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    moved = line.apply(rot)
    assert moved.dim_proj() == 1
    assert moved.contains_point(_pt(0, 1, 0))
    assert moved.contains_point(_pt(0, 0, 1))


def test_general_position():
    frame = [_pt(1, 0, 0), _pt(0, 1, 0), _pt(0, 0, 1), _pt(1, 1, 1)]
    assert general_position(frame)
    assert not general_position(frame[:3] + [_pt(1, 1, 0)])


def test_permutation_transform():
    t = ProjTransform.permutation((1, 2, 0))
    assert t.apply(_pt(1, 0, 0)) == _pt(0, 1, 0)
    assert t.apply(_pt(0, 0, 1)) == _pt(1, 0, 0)
    assert t.n == 3
    assert (t * t * t) == ProjTransform.identity(3)
    assert t.inverse() * t == ProjTransform.identity(3)


def test_point_permutation():
    pts = [_pt(1, 0, 0), _pt(0, 1, 0), _pt(0, 0, 1)]
    t = ProjTransform.permutation((1, 0, 2))
    assert t.point_permutation(pts) == (1, 0, 2)
    # a transform moving a listed point outside the list reports None
    s = ProjTransform(mat([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    assert s.point_permutation(pts) is None


def test_frame_map():
    std = [_pt(1, 0, 0), _pt(0, 1, 0), _pt(0, 0, 1), _pt(1, 1, 1)]
    dst = [_pt(0, 1, 0), _pt(1, 0, 0), _pt(0, 0, 1), _pt(1, 1, 2)]
    t = frame_map(std, dst)
    for a, b in zip(std, dst):
        assert t.apply(a) == b
    with pytest.raises(DegenerateFrame):
        frame_map(std, std[:3] + [_pt(1, 1, 0)])


def test_preserves_symmetric_form():
    x = R5.gens()
    f = R5.zero
    for i in range(5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                f = f + x[i] * x[j] * x[k]
    swap = ProjTransform.permutation((1, 0, 2, 3, 4))
    assert preserves(swap, f)
    shear = ProjTransform(mat([[1, 1, 0, 0, 0], [0, 1, 0, 0, 0],
                               [0, 0, 1, 0, 0], [0, 0, 0, 1, 0],
                               [0, 0, 0, 0, 1]]))
    assert not preserves(shear, f)


def test_plane_contained():
    x = R5.gens()
    f = x[3] * x[0] * x[0] + x[4] * x[1] * x[1]
    plane = LinearSubspace.from_points(
        [_pt(1, 0, 0, 0, 0), _pt(0, 1, 0, 0, 0), _pt(0, 0, 1, 0, 0)])
    assert plane_contained(plane, f)
    g = f + x[0] * x[1] * x[2]
    assert not plane_contained(plane, g)


def test_diagonal_lifts_counts():
    j5a = catalog_build("J5a")
    j5b = catalog_build("J5b")
    five = parse_cycles("(1,2,3,4,5)", 5)
    twist = parse_cycles("(2,3,5,4)", 5)
    assert len(diagonal_lifts(j5a.form, five)) == 1
    assert len(diagonal_lifts(j5a.form, twist)) == 1
    assert len(diagonal_lifts(j5b.form, five)) == 1
    assert diagonal_lifts(j5b.form, twist) == []


def test_diagonal_lifts_preserve():
    j5a = catalog_build("J5a")
    five = parse_cycles("(1,2,3,4,5)", 5)
    (t,) = diagonal_lifts(j5a.form, five)
    assert preserves(t, j5a.form)
    pts = [_pt(*[1 if i == k else 0 for i in range(5)]) for k in range(5)]
    assert t.point_permutation(pts) == five.images


def test_diagonal_lifts_rejects_bad_input():
    j5a = catalog_build("J5a")
    with pytest.raises(ValueError):
        diagonal_lifts(j5a.form, (0, 1, 2))
