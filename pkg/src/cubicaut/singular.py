"""Certified singular loci and per-point classification for cubics.

Certification has two independent halves.  Soundness: every claimed point
kills the whole gradient.  Completeness: the quadrics through the claimed
set all lie in the radical of the Jacobian ideal, and the Jacobian scheme
is zero dimensional of degree equal to the claimed count, so no component
of the singular locus escapes the claimed set.

Classification moves the point to an affine chart origin and reads the
Hessian.  Full rank is a node.  Corank one is handled by eliminating the
mixed terms against the nondegenerate block and reading the vanishing
order along the kernel line; only the order is reported, never a normal
form, so no square roots are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .field import ZERO, coerce_scalar
from .geometry import ProjPoint
from .groebner import (
    DEFAULT_BUDGET,
    Ideal,
    NonIsolatedPoint,
    local_multiplicity,
    proj_dim_degree,
    radical_member,
)
from .linalg import inverse, nullspace, rank
from .poly import MultiPoly, PolyRing

__all__ = [
    "CertificationFailure",
    "DegreeBudgetExhausted",
    "SingularLocusCertificate",
    "SingularityReport",
    "certify_singular_locus",
    "classify_singularity",
    "dual_degree_budget",
    "find_rational_singular_points",
    "FEASIBILITY_BOUND",
]

FEASIBILITY_BOUND = 3
_SLICE_PARAMETERS = (2, 3, 5, 7, 11, 13, 17, 19)
_CLASSIFY_DEGREE_CAP = 8


class CertificationFailure(RuntimeError):
    """One half of the locus certificate failed; carries the witness."""

    def __init__(self, half: str, message: str, witness=None):
        super().__init__(message)
        self.half = half
        self.witness = witness


class DegreeBudgetExhausted(RuntimeError):
    """Vanishing order not visible within the degree cap."""


@dataclass(frozen=True)
class SingularLocusCertificate:
    label: str
    points: tuple
    gradient_checks: tuple  # per point: tuple of evaluated partials (all zero)
    radical_transcript: tuple  # per quadric generator: its string form
    dim_degree: tuple
    multiplicities: tuple = ()  # scheme multiplicity of each claimed point


@dataclass(frozen=True)
class SingularityReport:
    point: ProjPoint
    hessian_rank: int
    type: str
    mu: int
    mu_section: int

    @property
    def m(self) -> int:
        return self.mu + self.mu_section


def _gradient(f: MultiPoly):
    return [f.derivative(i) for i in range(f.ring.nvars)]


def certify_singular_locus(
    f: MultiPoly, claimed, budget: int = DEFAULT_BUDGET, label: str = ""
) -> SingularLocusCertificate:
    """Certificate that the singular locus of f is exactly the claimed set."""
    points = tuple(claimed)
    if len(set(points)) != len(points):
        raise ValueError("claimed points must be pairwise distinct")
    n = f.ring.nvars
    grads = _gradient(f)
    checks = []
    for p in points:
        if p.ambient + 1 != n:
            raise ValueError("point dimension does not match the form")
        values = tuple(g.evaluate(p.vector()) for g in grads)
        if any(not v.is_zero() for v in values):
            raise CertificationFailure(
                "soundness", f"claimed point {p} is smooth", witness=p
            )
        checks.append(values)
    jac = Ideal(tuple(g for g in grads if not g.is_zero()))
    dim, degree = proj_dim_degree(jac, budget=budget)
    # the scheme degree exceeds the point count at degenerate points, so
    # set-theoretic completeness rests on dim 0 plus the radical transcript
    if dim != 0:
        raise CertificationFailure(
            "completeness",
            f"Jacobian scheme has (dim, degree) = ({dim}, {degree}), "
            "so the singular locus is not a finite point set",
            witness=(dim, degree),
        )
    transcript = []
    for q in _quadrics_through(f.ring, points):
        if not radical_member(q, jac, budget=budget):
            raise CertificationFailure(
                "completeness",
                "a singular component escapes the claimed set "
                f"(quadric {q} through the set is not in the radical)",
                witness=q,
            )
        transcript.append(str(q))
    # degree accounting: the claimed points must exhaust the scheme degree,
    # which rules out components of the locus away from the claimed set
    mults = tuple(_point_multiplicity(jac.generators, p, budget) for p in points)
    if sum(mults) != degree:
        raise CertificationFailure(
            "completeness",
            f"claimed points carry multiplicity {sum(mults)} of the "
            f"degree-{degree} Jacobian scheme",
            witness=mults,
        )
    return SingularLocusCertificate(
        label=label,
        points=points,
        gradient_checks=tuple(checks),
        radical_transcript=tuple(transcript),
        dim_degree=(dim, degree),
        multiplicities=mults,
    )


def _point_multiplicity(gens, p: ProjPoint, budget: int) -> int:
    chart = next(i for i, c in enumerate(p.coords) if not c.is_zero())
    affine = [g.dehomogenize(chart) for g in gens]
    coords = [c for i, c in enumerate(p.vector()) if i != chart]
    return local_multiplicity(affine, coords, budget=budget)


def _quadrics_through(ring: PolyRing, points):
    """Basis of the degree-2 part of the vanishing ideal of the point set."""
    n = ring.nvars
    monos = list(combinations_with_replacement(range(n), 2))
    rows = []
    for p in points:
        vec = p.vector()
        rows.append([vec[i] * vec[j] for i, j in monos])
    basis = nullspace(rows)
    out = []
    for coeffs in basis:
        q = ring.zero
        for c, (i, j) in zip(coeffs, monos):
            if c:
                exps = [0] * n
                exps[i] += 1
                exps[j] += 1
                q = q + ring.monomial(tuple(exps), c)
        out.append(q)
    return out


def _chart_function(f: MultiPoly, p: ProjPoint):
    """Local equation with p at the origin; returns (g, chart index, ring)."""
    vec = p.vector()
    chart = next(i for i, c in enumerate(vec) if not c.is_zero())
    local = f.ring.drop(chart)
    images = []
    k = 0
    for i in range(f.ring.nvars):
        if i == chart:
            images.append(local.one)
        else:
            shift = local.constant(vec[i]) if vec[i] else local.zero
            images.append(local.var(k) + shift)
            k += 1
    return f.substitute(images, local), chart, local


def _hessian_at_origin(g: MultiPoly):
    n = g.ring.nvars
    zeros = [ZERO] * n
    h = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(g.derivative(i).derivative(j).evaluate(zeros))
        h.append(row)
    return h


def _corank_one_order(g: MultiPoly, hessian, kernel_vec):
    """Vanishing order along the kernel after mixed-term elimination."""
    n = g.ring.nvars
    block_idx = None
    for combo in combinations(range(n), n - 1):
        sub = [[hessian[i][j] for j in combo] for i in combo]
        if rank(sub) == n - 1:
            block_idx = combo
            break
    if block_idx is None:
        raise RuntimeError("internal error: no nondegenerate principal block")
    # coordinates: z along the kernel, w along the chosen block axes
    ring = PolyRing(("z",) + tuple(f"w{i}" for i in range(n - 1)), g.ring.domain)
    z = ring.var(0)
    w = [ring.var(1 + i) for i in range(n - 1)]
    cur = [z * ring.constant(c) if c else ring.zero for c in kernel_vec]
    for pos, i in enumerate(block_idx):
        cur[i] = cur[i] + w[pos]

    def truncate(poly):
        # substitution images never lower total degree, so jets above the
        # cap cannot influence any reported order and are dropped
        kept = {m: c for m, c in poly.terms.items()
                if sum(m) <= _CLASSIFY_DEGREE_CAP + 1}
        return ring.from_terms(kept)

    h = truncate(g.substitute(cur, ring))
    block = [[hessian[i][j] for j in block_idx] for i in block_idx]
    block_inv = inverse(block)
    for _ in range(_CLASSIFY_DEGREE_CAP):
        # terms linear in w with z-degree >= 2 spoil the splitting
        offenders = [ring.zero for _ in range(n - 1)]
        found = False
        for mono, coeff in h.terms.items():
            wdeg = sum(mono[1:])
            if wdeg == 1 and mono[0] >= 2:
                which = next(i for i in range(n - 1) if mono[1 + i])
                offenders[which] = offenders[which] + ring.monomial(
                    (mono[0],) + (0,) * (n - 1), coeff
                )
                found = True
        if not found:
            break
        correction = []
        for i in range(n - 1):
            acc = ring.zero
            for j in range(n - 1):
                entry = block_inv[i][j]
                if entry and not offenders[j].is_zero():
                    acc = acc + offenders[j] * ring.constant(entry)
            correction.append(acc)
        images = [z]
        for i in range(n - 1):
            images.append(w[i] - correction[i])
        h = truncate(h.substitute(images, ring))
    pure = h.substitute([z] + [ring.zero] * (n - 1), ring)
    if pure.is_zero():
        return None
    order = min(sum(m) for m in pure.terms)
    if order > _CLASSIFY_DEGREE_CAP:
        return None
    return order


def _kernel_restriction_order(g: MultiPoly, kernel_basis):
    """Lowest degree of g restricted to the span of the kernel vectors."""
    k = len(kernel_basis)
    ring = PolyRing(tuple(f"s{i}" for i in range(k)), g.ring.domain)
    params = [ring.var(i) for i in range(k)]
    images = []
    for i in range(g.ring.nvars):
        acc = ring.zero
        for j in range(k):
            c = kernel_basis[j][i]
            if c:
                acc = acc + params[j] * ring.constant(c)
        images.append(acc)
    restricted = g.substitute(images, ring)
    if restricted.is_zero():
        return None
    return min(sum(m) for m in restricted.terms)


def _slice_multiplicity(g: MultiPoly, covector, budget):
    """Milnor number of g cut by the hyperplane covector . y = 0."""
    n = g.ring.nvars
    pivot = next((i for i in range(n) if covector[i]), None)
    if pivot is None:
        return None
    small = g.ring.drop(pivot)
    inv = covector[pivot].inverse()
    images = []
    k = 0
    for i in range(n):
        if i == pivot:
            acc = small.zero
            kk = 0
            for j in range(n):
                if j == pivot:
                    continue
                c = covector[j]
                if c:
                    acc = acc - small.var(kk) * small.constant(c * inv)
                kk += 1
            images.append(acc)
        else:
            images.append(small.var(k))
            k += 1
    sliced = g.substitute(images, small)
    grads = [sliced.derivative(i) for i in range(small.nvars)]
    origin = [ZERO] * small.nvars
    try:
        return local_multiplicity(grads, origin, budget=budget)
    except NonIsolatedPoint:
        return None


def classify_singularity(
    f: MultiPoly, p: ProjPoint, budget: int = DEFAULT_BUDGET
) -> SingularityReport:
    """Hessian type, Milnor number, and section Milnor number at p."""
    g, chart, local = _chart_function(f, p)
    n = local.nvars
    origin = [ZERO] * n
    grads = [g.derivative(i) for i in range(n)]
    if any(not gr.evaluate(origin).is_zero() for gr in grads):
        raise ValueError(f"{p} is not a singular point of the form")
    hess = _hessian_at_origin(g)
    hrank = rank(hess)
    corank = n - hrank
    if corank == 0:
        kind = "A1"
    elif corank == 1:
        kernel = nullspace(hess)
        order = _corank_one_order(g, hess, kernel[0])
        if order is None:
            raise DegreeBudgetExhausted(
                f"no finite vanishing order along the kernel at {p} "
                f"within degree {_CLASSIFY_DEGREE_CAP}"
            )
        kind = f"cA{order - 1}-class"
    else:
        kernel = nullspace(hess)
        order = _kernel_restriction_order(g, kernel)
        kind = f"other(corank={corank}, order={order})"
    mu = local_multiplicity(grads, origin, budget=budget)
    mu_section = _stable_slice_multiplicity(g, p, chart, budget)
    report = SingularityReport(
        point=p, hessian_rank=hrank, type=kind, mu=mu, mu_section=mu_section
    )
    if (report.type == "A1") != (hrank == n) or (hrank == n) != (mu == 1):
        raise RuntimeError(f"inconsistent classification at {p}: {report}")
    return report


def _stable_slice_multiplicity(g, p, chart, budget):
    """Section Milnor number, accepted at the first stable pair of slices."""
    n_full = p.ambient + 1
    vec = p.vector()
    previous = None
    for t in _SLICE_PARAMETERS:
        raw = [coerce_scalar(Fraction(t) ** k) for k in range(n_full)]
        shift = sum((raw[i] * vec[i] for i in range(n_full)), ZERO)
        adjusted = list(raw)
        adjusted[chart] = adjusted[chart] - shift
        covector = [adjusted[i] for i in range(n_full) if i != chart]
        value = _slice_multiplicity(g, covector, budget)
        if value is not None:
            if previous == value:
                return value
            previous = value
        else:
            previous = None
    raise DegreeBudgetExhausted(
        f"hyperplane-section multiplicity did not stabilize at {p}"
    )


def dual_degree_budget(reports) -> int:
    """24 minus the total of m = mu + mu_section over the reports."""
    return 24 - sum(r.m for r in reports)


def find_rational_singular_points(f: MultiPoly, height: int = 5):
    """Rational projective points of bounded height killing the gradient.

    A plain search over coordinate boxes; meant for user-supplied input,
    where the certificate afterwards decides whether anything was missed.
    """
    n = f.ring.nvars
    grads = [g for g in _gradient(f) if not g.is_zero()]
    values = list(range(-height, height + 1))
    found = []

    def test(coords):
        vec = [coerce_scalar(c) for c in coords]
        if all(g.evaluate(vec).is_zero() for g in grads):
            found.append(ProjPoint(vec))

    def fill(prefix, remaining):
        if remaining == 0:
            test(prefix)
            return
        for v in values:
            fill(prefix + [v], remaining - 1)

    for chart in range(n):
        # first nonzero coordinate equals one: canonical representatives
        prefix = [0] * chart + [1]
        fill(prefix, n - chart - 1)
    return found
