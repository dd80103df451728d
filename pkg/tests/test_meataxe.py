from cubicaut.geometry import ProjPoint, ProjTransform
from cubicaut.groups import closure
from cubicaut.meataxe import fixed_flats, invariant_subspaces


def _perm_group(*image_tuples):
    return closure([ProjTransform.permutation(im) for im in image_tuples])


def _invariant_under(sub, group):
    return all(sub.apply(g.matrix) == sub for g in group.generators)


def test_cyclic_shift_eigenlines():
    c5 = _perm_group((1, 2, 3, 4, 0))
    search = invariant_subspaces(c5, 1)
    assert search.complete
    assert len(search.subspaces) == 5
    for sub in search.subspaces:
        assert _invariant_under(sub, c5)


def test_cyclic_shift_flats():
    c5 = _perm_group((1, 2, 3, 4, 0))
    report = fixed_flats(c5)
    assert report.complete
    assert len(report.points) == 5
    assert len(report.lines) == 10
    assert len(report.planes) == 10
    # the rational fixed point is the all-ones vector
    assert ProjPoint([1, 1, 1, 1, 1]) in report.points


def test_full_symmetric_rep():
    s5 = _perm_group((1, 0, 2, 3, 4), (1, 2, 3, 4, 0))
    assert s5.order == 120
    report = fixed_flats(s5)
    assert report.complete
    assert report.points == [ProjPoint([1, 1, 1, 1, 1])]
    assert report.lines == []
    assert report.planes == []


def test_incomplete_on_repeated_pieces():
    # two commuting swaps fix coordinate 4; the trivial piece repeats,
    # so the full invariant list is infinite and the search must say so
    g = _perm_group((1, 0, 2, 3, 4), (0, 1, 3, 2, 4))
    report = fixed_flats(g)
    assert not report.complete
    for sub in report.lines + report.planes:
        assert _invariant_under(sub, g)
    for p in report.points:
        assert all(t.apply(p) == p for t in g.generators)


def test_conductor_cap_reported_not_fatal():
    c5 = _perm_group((1, 2, 3, 4, 0))
    search = invariant_subspaces(c5, 1, max_conductor=2)
    assert not search.complete
    assert any("conductor" in note for note in search.notes)
    for sub in search.subspaces:
        assert _invariant_under(sub, c5)


def test_three_cycle_block():
    # C3 rotating the first three coordinates of P^4 fixes a whole plane,
    # so the point list cannot be complete; what is listed must be invariant
    c3 = _perm_group((1, 2, 0, 3, 4))
    search = invariant_subspaces(c3, 1)
    assert not search.complete
    for sub in search.subspaces:
        assert _invariant_under(sub, c3)
