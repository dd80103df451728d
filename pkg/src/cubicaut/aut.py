"""Automorphism groups of nodal cubics, computed from the singular points.

Every linear automorphism permutes the singular points.  With at least
six points containing a six-point frame, each automorphism is pinned down
by where it sends one fixed base frame, so enumerating frames drawn from
the singular points and keeping the lifts that permute the whole set and
preserve the form is exhaustive.  With exactly five points in general
position the frame is one point short; there the diagonal ambiguity is
resolved coefficient-wise, permutation by permutation.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .field import ZERO
from .geometry import (
    ProjPoint,
    ProjTransform,
    frame_map,
    general_position,
    diagonal_lifts,
    preserves,
)
from .groups import GroupHandle, Perm, group_from_elements
from .linalg import inverse, matvec, transpose
from .poly import MultiPoly

__all__ = [
    "FrameSearchError",
    "compute_automorphism_group",
    "point_permutation_group",
]


class FrameSearchError(RuntimeError):
    """The point set supports neither the frame method nor the five-point one."""


def compute_automorphism_group(f: MultiPoly, points) -> GroupHandle:
    """All projectivities preserving f, found through the singular points.

    `points` must be the full singular locus; the group returned is a
    matrix group handle whose elements all permute the given points.
    """
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("singular points must be pairwise distinct")
    if len(pts) >= 6:
        found = _frame_method(f, pts)
        if found is not None:
            return found
    if len(pts) == 5:
        ok, _ = general_position(pts)
        if ok:
            return _five_point_method(f, pts)
    raise FrameSearchError(
        "no six-point frame among the singular points and not the "
        "five-point case; this configuration needs family-specific handling"
    )


def _standard_frame(n: int):
    pts = [ProjPoint([1 if j == i else 0 for j in range(n)]) for i in range(n)]
    pts.append(ProjPoint([1] * n))
    return pts


def _frame_method(f: MultiPoly, pts):
    n = len(pts)
    vecs = [p.vector() for p in pts]
    index = {p: i for i, p in enumerate(pts)}
    base = None
    for combo in combinations(range(n), 6):
        ok, _ = general_position([pts[i] for i in combo])
        if ok:
            base = combo
            break
    if base is None:
        return None
    std = _standard_frame(5)
    base_inv = inverse(
        [list(r) for r in frame_map(std, [pts[i] for i in base]).matrix]
    )
    rest_all = list(range(n))
    kept = []
    for combo in combinations(range(n), 5):
        cols = [vecs[i] for i in combo]
        mat = transpose(cols)
        try:
            mat_inv = inverse(mat)
        except ValueError:
            continue
        sixths = []
        for i6 in rest_all:
            if i6 in combo:
                continue
            mu = matvec(mat_inv, vecs[i6])
            if all(not m.is_zero() for m in mu):
                sixths.append((i6, mu))
        if not sixths:
            continue
        for order in permutations(range(5)):
            ordered = [combo[k] for k in order]
            for i6, mu in sixths:
                # frame matrix columns: point vectors scaled by the mu of
                # the sixth point, then moved to act on the base frame
                cand = [
                    [vecs[ordered[c]][r] * mu[order[c]] for c in range(5)]
                    for r in range(5)
                ]
                cand = _matmul5(cand, base_inv)
                perm_ok = True
                for p in pts:
                    image = ProjPoint(matvec(cand, p.vector()))
                    if image not in index:
                        perm_ok = False
                        break
                if not perm_ok:
                    continue
                t = ProjTransform(cand)
                if preserves(t, f):
                    kept.append(t)
    return group_from_elements(kept)


def _matmul5(a, b):
    out = []
    for r in range(5):
        row = []
        for c in range(5):
            acc = ZERO
            for k in range(5):
                x, y = a[r][k], b[k][c]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def _five_point_method(f: MultiPoly, pts):
    coordinate = _standard_frame(5)[:5]
    if set(pts) == set(coordinate):
        to_std = None
        g = f
        positions = [coordinate.index(p) for p in pts]
    else:
        # move the points onto the coordinate points first
        to_std = ProjTransform(transpose([p.vector() for p in pts]))
        g = f.compose_matrix(to_std.matrix)
        positions = list(range(5))
    kept = []
    for images in permutations(range(5)):
        # permutation of the given points, rewritten on coordinate slots
        coord_images = [0] * 5
        for a in range(5):
            coord_images[positions[a]] = positions[images[a]]
        for lift in diagonal_lifts(g, tuple(coord_images)):
            if to_std is not None:
                lift = to_std * lift * to_std.inverse()
            kept.append(lift)
    return group_from_elements(kept)


def point_permutation_group(group: GroupHandle, points) -> GroupHandle:
    """The permutation image of a matrix group on the given points."""
    pts = list(points)
    perms = []
    for g in group.elements:
        images = g.point_permutation(pts)
        if images is None:
            raise ValueError("a group element does not permute the points")
        perms.append(Perm(list(images)))
    return group_from_elements(perms)
