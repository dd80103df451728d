"""Projective points, linear subspaces, and projectivities over exact fields.

Ambient spaces are P4 and P5.  Points and transforms are canonicalized by
scaling the first nonzero entry to 1, so equality and hashing are plain
structural comparisons.  Subspaces store the reduced echelon basis of their
spanning vectors.
"""

from __future__ import annotations

from itertools import combinations

from . import linalg
from .field import Cyclotomic, ONE, ZERO, coerce_scalar
from .poly import MultiPoly, PolyRing, proportionality

__all__ = [
    "ProjPoint",
    "LinearSubspace",
    "ProjTransform",
    "DegenerateFrame",
    "general_position",
    "frame_map",
    "preserves",
    "plane_contained",
    "span_meet",
    "diagonal_lifts",
]


class DegenerateFrame(ValueError):
    """The points do not determine a unique projectivity."""


def _normalize(coords):
    vec = [coerce_scalar(x) for x in coords]
    for x in vec:
        if not x.is_zero():
            inv = x.inverse()
            return tuple(c * inv for c in vec)
    return None


class ProjPoint:
    """Point of Pn; first nonzero coordinate scaled to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        vec = _normalize(coords)
        if vec is None:
            raise ValueError("the zero vector is not a projective point")
        self.coords = vec

    @property
    def ambient(self) -> int:
        return len(self.coords) - 1

    def vector(self):
        return list(self.coords)

    def apply(self, matrix) -> "ProjPoint":
        return ProjPoint(linalg.matvec(matrix, list(self.coords)))

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


class LinearSubspace:
    """Linear subspace of Pn given by a spanning set, stored in echelon form.

    The empty subspace (no basis vectors) is allowed so that meets are total.
    """

    __slots__ = ("rows", "ambient_len")

    def __init__(self, rows, ambient_len=None):
        rows = [[coerce_scalar(x) for x in r] for r in rows]
        if rows:
            ambient_len = len(rows[0])
        elif ambient_len is None:
            raise ValueError("empty subspace needs an explicit ambient length")
        echelon, _ = linalg.rref(rows)
        self.rows = tuple(tuple(r) for r in echelon)
        self.ambient_len = ambient_len

    @classmethod
    def empty(cls, ambient_len: int) -> "LinearSubspace":
        return cls([], ambient_len)

    @classmethod
    def from_points(cls, points) -> "LinearSubspace":
        return cls([p.vector() for p in points])

    @classmethod
    def from_equations(cls, eq_rows, ambient_len=None) -> "LinearSubspace":
        """Solution space of the given linear forms (coefficient rows)."""
        eq_rows = [[coerce_scalar(x) for x in r] for r in eq_rows]
        if not eq_rows:
            if ambient_len is None:
                raise ValueError("no equations and no ambient length")
            return cls(linalg.identity(ambient_len))
        return cls(linalg.nullspace(eq_rows), len(eq_rows[0]))

    @property
    def basis(self):
        return [list(r) for r in self.rows]

    @property
    def dim_proj(self) -> int:
        return len(self.rows) - 1

    def is_empty(self) -> bool:
        return not self.rows

    def equations(self):
        """Covector rows cutting this subspace out."""
        if not self.rows:
            return linalg.identity(self.ambient_len)
        return linalg.nullspace([list(r) for r in self.rows])

    def _reduce(self, vec):
        vec = list(vec)
        for row in self.rows:
            pivot = next(i for i, x in enumerate(row) if not x.is_zero())
            c = vec[pivot]
            if not c.is_zero():
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def contains_point(self, p: ProjPoint) -> bool:
        return all(x.is_zero() for x in self._reduce(p.coords))

    def contains(self, other: "LinearSubspace") -> bool:
        return all(
            all(x.is_zero() for x in self._reduce(r)) for r in other.rows
        )

    def apply(self, matrix) -> "LinearSubspace":
        return LinearSubspace(
            [linalg.matvec(matrix, list(r)) for r in self.rows], self.ambient_len
        )

    def points(self):
        """The basis rows as projective points (requires nonempty)."""
        return [ProjPoint(r) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, LinearSubspace)
            and self.ambient_len == other.ambient_len
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_len, self.rows))

    def __repr__(self):
        return f"LinearSubspace(dim_proj={self.dim_proj}, ambient=P{self.ambient_len - 1})"


def span_meet(a: LinearSubspace, b: LinearSubspace):
    """Join and intersection of two subspaces of a common ambient space."""
    if a.ambient_len != b.ambient_len:
        raise ValueError("subspaces from different ambient spaces")
    n = a.ambient_len
    span = LinearSubspace([list(r) for r in a.rows + b.rows], n)
    if a.is_empty() or b.is_empty():
        return span, LinearSubspace.empty(n)
    # x lies in a row space iff it annihilates the space's right kernel
    duals = linalg.nullspace([list(r) for r in a.rows]) + linalg.nullspace(
        [list(r) for r in b.rows]
    )
    if not duals:
        return span, LinearSubspace(linalg.identity(n))
    meet_rows = linalg.nullspace(duals)
    meet = LinearSubspace(meet_rows, n) if meet_rows else LinearSubspace.empty(n)
    return span, meet


def general_position(points):
    """True iff every d of the points span a P^(d-1), for d up to n+1.

    Returns (True, None) or (False, first violating index tuple).
    """
    if not points:
        return True, None
    n_len = len(points[0].coords)
    for p in points:
        if len(p.coords) != n_len:
            raise ValueError("points from different ambient spaces")
    for d in range(2, min(len(points), n_len) + 1):
        for idx in combinations(range(len(points)), d):
            rows = [points[i].vector() for i in idx]
            if linalg.rank(rows) < d:
                return False, idx
    return True, None


class ProjTransform:
    """Invertible projectivity; matrix scaled so its first nonzero entry is 1."""

    __slots__ = ("matrix", "_h")

    def __init__(self, matrix):
        rows = [[coerce_scalar(x) for x in row] for row in matrix]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        scale = None
        for row in rows:
            for x in row:
                if not x.is_zero():
                    scale = x.inverse()
                    break
            if scale is not None:
                break
        if scale is None:
            raise ValueError("zero matrix")
        rows = [[x * scale for x in row] for row in rows]
        if linalg.det(rows).is_zero():
            raise ValueError("singular matrix does not define a projectivity")
        self.matrix = tuple(tuple(r) for r in rows)
        self._h = None

    @classmethod
    def identity(cls, n: int) -> "ProjTransform":
        return cls(linalg.identity(n))

    @classmethod
    def permutation(cls, images) -> "ProjTransform":
        """Coordinate permutation sending e_j to e_images[j]."""
        n = len(images)
        m = [[ZERO] * n for _ in range(n)]
        for j, i in enumerate(images):
            m[i][j] = ONE
        return cls(m)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def apply(self, obj):
        if isinstance(obj, ProjPoint):
            return obj.apply([list(r) for r in self.matrix])
        if isinstance(obj, LinearSubspace):
            return obj.apply([list(r) for r in self.matrix])
        raise TypeError("apply expects a point or a subspace")

    def __mul__(self, other):
        if not isinstance(other, ProjTransform):
            return NotImplemented
        return ProjTransform(
            linalg.matmul([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        )

    def inverse(self) -> "ProjTransform":
        return ProjTransform(linalg.inverse([list(r) for r in self.matrix]))

    def point_permutation(self, points):
        """Images of the given points as an index tuple, or None if the set
        is not carried into itself."""
        index = {p: i for i, p in enumerate(points)}
        out = []
        for p in points:
            q = self.apply(p)
            j = index.get(q)
            if j is None:
                return None
            out.append(j)
        if len(set(out)) != len(points):
            return None
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, ProjTransform) and self.matrix == other.matrix

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.matrix)
        return self._h

    def __repr__(self):
        return f"ProjTransform({self.n}x{self.n})"


def frame_map(src, dst) -> ProjTransform:
    """The unique projectivity with src[i] -> dst[i].

    Expects n+2 points of Pn on each side, in general position.
    """
    if len(src) != len(dst):
        raise ValueError("frames of different sizes")
    n_len = len(src[0].coords)
    if len(src) != n_len + 1:
        raise DegenerateFrame(f"a frame of P{n_len - 1} needs {n_len + 1} points")
    return ProjTransform(
        linalg.matmul(_frame_matrix(dst), linalg.inverse(_frame_matrix(src)))
    )


def _frame_matrix(points):
    """Matrix sending the standard frame (e_0, ..., e_n, sum e_i) to `points`."""
    n_len = len(points[0].coords)
    cols = [p.vector() for p in points[: n_len]]
    p_mat = linalg.transpose(cols)
    mu = linalg.solve([list(r) for r in p_mat], points[n_len].vector())
    if mu is None or any(m.is_zero() for m in mu):
        raise DegenerateFrame("frame points are not in general position")
    return [[p_mat[i][j] * mu[j] for j in range(n_len)] for i in range(n_len)]


def preserves(transform: ProjTransform, f: MultiPoly) -> bool:
    """True iff f composed with the transform is proportional to f."""
    if transform.n != f.ring.nvars:
        raise ValueError("dimension mismatch")
    return proportionality(f, f.compose_matrix(transform.matrix)) is not None


def plane_contained(sub: LinearSubspace, f: MultiPoly) -> bool:
    """True iff f vanishes identically on the subspace."""
    if sub.ambient_len != f.ring.nvars:
        raise ValueError("dimension mismatch")
    if sub.is_empty():
        return True
    k = len(sub.rows)
    t_ring = PolyRing(tuple(f"t{i}" for i in range(k)))
    images = []
    for j in range(sub.ambient_len):
        img = t_ring.zero
        for i in range(k):
            img = img + t_ring.var(i) * sub.rows[i][j]
        images.append(img)
    return f.substitute(images, t_ring).is_zero()


def _squarefree_triples(n=5):
    return list(combinations(range(n), 3))


def diagonal_lifts(f: MultiPoly, perm):
    """Projectivities inducing the permutation on the coordinate points and
    preserving f.

    f must be a cubic in 5 variables whose singular points are the five
    coordinate points; then every lift is a coordinate permutation composed
    with a diagonal map, and matching coefficients fixes the diagonal up to
    scale, so at most one lift exists.
    """
    images = tuple(getattr(perm, "images", perm))
    if f.ring.nvars != 5 or sorted(images) != list(range(5)):
        raise ValueError("expected a cubic in 5 variables and a degree-5 permutation")
    coeff = {}
    for t in _squarefree_triples():
        e = [0] * 5
        for i in t:
            e[i] = 1
        c = f.terms.get(tuple(e), ZERO)
        if c.is_zero():
            raise ValueError(
                "every squarefree triple coefficient must be nonzero "
                "(vanishing ones force a degenerate singular locus)"
            )
        coeff[t] = c
    if len(f.terms) != 10:
        raise ValueError("the form must be supported on the squarefree triples")

    def image_triple(t):
        return tuple(sorted(images[i] for i in t))

    # d_0 = 1; d_m from the pair of triples (t+{m}, t+{0}) for a 2-set t
    d = [ONE, None, None, None, None]
    for m in range(1, 5):
        t = tuple(i for i in range(5) if i not in (0, m))[:2]
        u = tuple(sorted(t + (m,)))
        u0 = tuple(sorted(t + (0,)))
        d[m] = (coeff[u] * coeff[image_triple(u0)]) / (
            coeff[u0] * coeff[image_triple(u)]
        )
    m = [[ZERO] * 5 for _ in range(5)]
    for j in range(5):
        m[images[j]][j] = d[j]
    cand = ProjTransform(m)
    if preserves(cand, f):
        return [cand]
    return []
