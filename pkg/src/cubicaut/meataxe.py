"""Invariant subspaces of finite matrix groups, exactly.

The module decomposes the ambient space into minimal invariant subspaces by
eigen-splitting along group elements (their eigenvalues are roots of unity
up to the projective scalar, so everything stays inside the cyclotomic
tower) and Maschke averaging for complements.  A piece whose commutant has
dimension one is absolutely irreducible, and pairwise vanishing hom spaces
make the decomposition multiplicity free; in that case every invariant
subspace is a subset sum of the pieces, so the search is provably complete.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from .field import ONE, ZERO, coerce_scalar, rational, zeta
from .geometry import LinearSubspace, ProjPoint, ProjTransform
from .groups import GroupHandle
from .linalg import identity, inverse, matmul, matvec, nullspace, rref

__all__ = [
    "ConductorEscape",
    "SubspaceSearch",
    "FlatReport",
    "invariant_subspaces",
    "fixed_flats",
]

MAX_CONDUCTOR = 240
_WORD_SEED = 20240823


class ConductorEscape(RuntimeError):
    """Splitting needs an eigenvalue outside the supported cyclotomic tower."""

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


def _vector_key(v):
    return tuple(c.sort_key() for c in v)


def _reduce_against(basis, v):
    """Reduce v against rref basis rows; returns the remainder as a list."""
    v = list(v)
    for row, pivot in basis:
        if v[pivot]:
            f = v[pivot]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def _normalize_row(v):
    piv = next((i for i, c in enumerate(v) if c), None)
    if piv is None:
        return None, None
    inv = v[piv].inverse()
    return [c * inv for c in v], piv


class _Span:
    """Incrementally maintained reduced row space."""

    def __init__(self, length):
        self.length = length
        self.rows = []  # list of (row, pivot), pivots strictly increasing

    def add(self, v):
        """Insert if independent; returns True when the span grew."""
        rem = _reduce_against(self.rows, v)
        row, piv = _normalize_row(rem)
        if row is None:
            return False
        for other, opiv in self.rows:
            if other[piv]:
                f = other[piv]
                for i in range(self.length):
                    other[i] = other[i] - f * row[i]
        self.rows.append((row, piv))
        self.rows.sort(key=lambda rp: rp[1])
        return True

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [list(row) for row, _ in self.rows]


def _spin(seeds, mats, length):
    """Smallest subspace containing the seeds and closed under the matrices."""
    span = _Span(length)
    queue = []
    for s in seeds:
        if span.add(s):
            queue.append(list(s))
    while queue:
        v = queue.pop()
        for m in mats:
            w = matvec(m, v)
            if span.add(w):
                queue.append(w)
    return span.basis()


def _coordinate_map(basis_vectors, ambient):
    """Map from ambient vectors inside the span to coordinates in the basis."""
    cols = [[basis_vectors[j][i] for j in range(len(basis_vectors))] for i in range(ambient)]
    reduced, pivots = rref([list(r) for r in zip(*cols)])
    # pivots index ambient positions where the basis matrix has full rank
    sub = [[cols[r][j] for j in range(len(basis_vectors))] for r in pivots]
    sub_inv = inverse(sub)

    def coords(vec):
        return matvec(sub_inv, [vec[r] for r in pivots])

    return coords


def _restrict(matrix, basis_vectors, coords):
    """Matrix of the action in the given basis; None if not invariant."""
    k = len(basis_vectors)
    columns = []
    for b in basis_vectors:
        image = matvec(matrix, b)
        c = coords(image)
        # verify the image really lies in the span
        recon = [ZERO] * len(b)
        for j, cj in enumerate(c):
            if cj:
                for i in range(len(b)):
                    recon[i] = recon[i] + cj * basis_vectors[j][i]
        if recon != list(image):
            return None
        columns.append(c)
    return [[columns[j][i] for j in range(k)] for i in range(k)]


def _commutant_dimension(mats, k):
    """Dimension of {M : M A = A M for all A}, unknowns the k*k entries."""
    rows = []
    for a in mats:
        for i in range(k):
            for j in range(k):
                row = [ZERO] * (k * k)
                for l in range(k):
                    row[i * k + l] = row[i * k + l] + a[l][j]
                    row[l * k + j] = row[l * k + j] - a[i][l]
                rows.append(row)
    if not rows:
        return k * k
    return len(nullspace(rows))


def _hom_dimension(src_mats, dst_mats, ks, kd):
    """dim Hom_G(src, dst): solutions X with X A_src = A_dst X."""
    rows = []
    for a_s, a_d in zip(src_mats, dst_mats):
        for i in range(kd):
            for j in range(ks):
                row = [ZERO] * (kd * ks)
                for l in range(ks):
                    row[i * ks + l] = row[i * ks + l] + a_s[l][j]
                for l in range(kd):
                    row[l * ks + j] = row[l * ks + j] - a_d[i][l]
                rows.append(row)
    if not rows:
        return kd * ks
    return len(nullspace(rows))


def _scalar_power(mat, cap):
    """Smallest m with mat^m scalar; returns (m, scalar) or None."""
    k = len(mat)
    power = [list(r) for r in mat]
    for m in range(1, cap + 1):
        diag = power[0][0]
        if all(
            power[i][j] == (diag if i == j else ZERO)
            for i in range(k)
            for j in range(k)
        ):
            return m, diag
        power = matmul(power, mat)
    return None


def _root_ladder(c, m, max_conductor):
    """All k-th roots of the root of unity c, for k = m."""
    order = c.multiplicative_order(limit=max_conductor)
    if order is None:
        raise ConductorEscape("projective scalar is not a root of unity within the tower")
    exponent = next(a for a in range(order) if zeta(order, a) == c)
    needed = lcm(order * m, 1)
    if needed > max_conductor:
        raise ConductorEscape(
            f"splitting needs conductor {needed}, above the cap {max_conductor}",
            needed=needed,
        )
    base = zeta(order * m, exponent)
    return [base * zeta(m, j) for j in range(m)]


def _splitter_words(n_gens, rng_seed=_WORD_SEED, extra=48):
    words = [(i,) for i in range(n_gens)]
    words += [(i, j) for i in range(n_gens) for j in range(n_gens)]
    rng = random.Random(rng_seed)
    for _ in range(extra):
        length = rng.randint(3, 6)
        words.append(tuple(rng.randrange(n_gens) for _ in range(length)))
    return words


@dataclass
class _Piece:
    basis: list
    mats: list
    certified: bool
    note: str = ""

    @property
    def dim(self):
        return len(self.basis)


_decomposition_cache = {}


def _decompose(group: GroupHandle, max_conductor: int):
    """Split the ambient module into minimal pieces; honest about failures."""
    cache_key = (group.elements, max_conductor)
    if cache_key in _decomposition_cache:
        return _decomposition_cache[cache_key]
    gens = [list(map(list, g.matrix)) for g in group.generators]
    n = len(gens[0])
    notes = []
    pieces = []
    stack = [[list(row) for row in identity(n)]]
    while stack:
        basis = stack.pop()
        k = len(basis)
        if k == 0:
            continue
        coords = _coordinate_map(basis, n)
        rmats = []
        for g in gens:
            r = _restrict(g, basis, coords)
            if r is None:
                raise RuntimeError("internal error: candidate basis is not invariant")
            rmats.append(r)
        if k == 1:
            pieces.append(_Piece(basis, rmats, True))
            continue
        if all(_is_scalar(r) for r in rmats):
            # every subspace is invariant; peel off coordinate lines
            stack.append(basis[1:])
            stack.append(basis[:1])
            continue
        if _commutant_dimension(rmats, k) == 1:
            pieces.append(_Piece(basis, rmats, True))
            continue
        split = _find_split(group, basis, rmats, coords, k, max_conductor, notes)
        if split is None:
            pieces.append(
                _Piece(basis, rmats, False, note="no splitting element found")
            )
            notes.append(f"piece of dimension {k}: no splitting element found")
            continue
        sub_basis, complement_basis = split
        stack.append(complement_basis)
        stack.append(sub_basis)
    pieces.sort(key=lambda p: (p.dim, [_vector_key(v) for v in p.basis]))
    _decomposition_cache[cache_key] = (pieces, notes)
    return pieces, notes


def _is_scalar(m):
    diag = m[0][0]
    return all(
        m[i][j] == (diag if i == j else ZERO)
        for i in range(len(m))
        for j in range(len(m))
    )


def _find_split(group, basis, rmats, coords, k, max_conductor, notes):
    for word in _splitter_words(len(rmats)):
        s = rmats[word[0]]
        for idx in word[1:]:
            s = matmul(s, rmats[idx])
        found = _scalar_power(s, cap=group.order)
        if found is None:
            continue
        m, c = found
        if m == 1:
            continue
        try:
            roots = _root_ladder(c, m, max_conductor)
        except ConductorEscape as esc:
            notes.append(str(esc))
            continue
        eye = identity(k)
        for lam in roots:
            shifted = [
                [s[i][j] - (lam if i == j else ZERO) for j in range(k)]
                for i in range(k)
            ]
            for vec in nullspace(shifted):
                spun = _spin([vec], rmats, k)
                if 0 < len(spun) < k:
                    comp = _invariant_complement(group, basis, spun, k)
                    return _to_ambient(spun, basis), _to_ambient(comp, basis)
    return None


def _to_ambient(coord_rows, basis):
    n = len(basis[0])
    k = len(basis)
    out = []
    for r in coord_rows:
        vec = [ZERO] * n
        for j in range(k):
            if r[j]:
                for i in range(n):
                    vec[i] = vec[i] + r[j] * basis[j][i]
        out.append(vec)
    return out


def _invariant_complement(group, basis, sub_coords, k):
    """Maschke averaging: exact G-stable complement of the submodule."""
    coords = _coordinate_map(basis, len(basis[0]))
    relements = []
    for g in group.elements:
        r = _restrict(list(map(list, g.matrix)), basis, coords)
        if r is None:
            raise RuntimeError("internal error: element does not preserve the module")
        relements.append(r)
    # projector onto the submodule along a coordinate complement
    span = _Span(k)
    for v in sub_coords:
        span.add(v)
    pivots = {piv for _, piv in span.rows}
    cols = [list(v) for v in sub_coords]
    for j in range(k):
        if j not in pivots:
            unit = [ZERO] * k
            unit[j] = ONE
            cols.append(unit)
    change = [[cols[j][i] for j in range(k)] for i in range(k)]
    change_inv = inverse(change)
    r = len(sub_coords)
    proj_diag = [
        [ONE if (i == j and i < r) else ZERO for j in range(k)] for i in range(k)
    ]
    proj = matmul(matmul(change, proj_diag), change_inv)
    total = [[ZERO] * k for _ in range(k)]
    for rg in relements:
        term = matmul(matmul(rg, proj), inverse(rg))
        for i in range(k):
            for j in range(k):
                total[i][j] = total[i][j] + term[i][j]
    scale = rational(Fraction(1, len(relements)))
    averaged = [[scale * total[i][j] for j in range(k)] for i in range(k)]
    return nullspace(averaged)


@dataclass
class SubspaceSearch:
    dimension: int
    subspaces: list
    complete: bool
    piece_dims: tuple
    certificate: str | None = None
    flag: list = dc_field(default_factory=list)
    notes: tuple = ()


def invariant_subspaces(
    group: GroupHandle, d: int, max_conductor: int = MAX_CONDUCTOR
) -> SubspaceSearch:
    """All G-invariant subspaces of linear dimension d, when provable.

    The returned search is complete whenever the decomposition is certified
    and multiplicity free; a trivial or scalar group yields an uncertified
    full flag instead of the (infinite) list.
    """
    if not group.elements or not isinstance(group.elements[0], ProjTransform):
        raise TypeError("matrix group required")
    n = group.elements[0].n
    if not 0 <= d <= n:
        raise ValueError(f"dimension {d} out of range for ambient {n}")
    pieces, notes = _decompose(group, max_conductor)
    certified = all(p.certified for p in pieces)
    mult_free = certified and _multiplicity_free(pieces)
    found = []
    if d == 0:
        return SubspaceSearch(d, [], True, tuple(p.dim for p in pieces), notes=tuple(notes))
    for subset in _subset_sums([p.dim for p in pieces], d):
        vectors = []
        for i in subset:
            vectors.extend(pieces[i].basis)
        sub = LinearSubspace.from_points([ProjPoint(v) for v in vectors])
        for g in group.generators:
            if sub.apply(g.matrix) != sub:
                raise RuntimeError("internal error: assembled subspace not invariant")
        found.append(sub)
    flag = []
    if len(pieces) > 1:
        acc = []
        for p in pieces:
            acc.extend(p.basis)
            flag.append(LinearSubspace.from_points([ProjPoint(v) for v in acc]))
    certificate = None
    if len(pieces) == 1 and pieces[0].certified and 0 < d < n:
        certificate = "irreducible: commutant has dimension 1"
    complete = mult_free or (certificate is not None)
    return SubspaceSearch(
        dimension=d,
        subspaces=found,
        complete=complete,
        piece_dims=tuple(p.dim for p in pieces),
        certificate=certificate,
        flag=flag,
        notes=tuple(notes),
    )


def _multiplicity_free(pieces):
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if pieces[i].dim == pieces[j].dim:
                if _hom_dimension(
                    pieces[i].mats, pieces[j].mats, pieces[i].dim, pieces[j].dim
                ):
                    return False
    return True


def _subset_sums(dims, target):
    """Index subsets with the prescribed total, in stable order."""
    out = []

    def walk(start, remaining, chosen):
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for i in range(start, len(dims)):
            if dims[i] <= remaining:
                chosen.append(i)
                walk(i + 1, remaining - dims[i], chosen)
                chosen.pop()

    walk(0, target, [])
    return out


@dataclass
class FlatReport:
    points: list
    lines: list
    planes: list
    complete: bool
    notes: tuple = ()


def fixed_flats(group: GroupHandle, max_conductor: int = MAX_CONDUCTOR) -> FlatReport:
    """Fixed points, invariant lines, invariant planes of a group in P^(n-1)."""
    searches = [invariant_subspaces(group, d, max_conductor) for d in (1, 2, 3)]
    one, two, three = searches
    points = [ProjPoint(sub.basis[0]) for sub in one.subspaces]
    return FlatReport(
        points=points,
        lines=list(two.subspaces),
        planes=list(three.subspaces),
        complete=all(s.complete for s in searches),
        notes=tuple(n for s in searches for n in s.notes),
    )
