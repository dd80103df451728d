"""Groebner bases and ideal-theoretic predicates over exact fields.

Buchberger with normal pair selection refined by the sugar heuristic, a hard
budget on S-pair reductions, reduced bases for determinism, radical
membership via an inverted-generator trick, dimension and degree from the
Hilbert series of the leading-term ideal, local multiplicities by adic
truncation, and saturated locus equality by mutual radical membership.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .poly import (
    MultiPoly,
    PolyRing,
    grevlex_key,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "BudgetExceeded",
    "NonIsolatedPoint",
    "DEFAULT_BUDGET",
    "groebner",
    "normal_form",
    "radical_member",
    "proj_dim_degree",
    "local_multiplicity",
    "saturated_equal",
]

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """The cap on S-pair reductions was reached before the basis stabilised."""


class NonIsolatedPoint(RuntimeError):
    """Adic truncation dimensions kept growing: the point is not isolated."""


@dataclass(frozen=True)
class Ideal:
    generators: tuple
    ring: PolyRing = field(init=False, repr=False)

    def __init__(self, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        if not gens:
            raise ValueError("ideal needs at least one nonzero generator")
        ring = gens[0].ring
        for g in gens:
            if g.ring.key() != ring.key():
                raise ValueError("generators from different rings")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "ring", ring)


def _as_generators(ideal):
    if isinstance(ideal, Ideal):
        return list(ideal.generators)
    return [g for g in ideal if not g.is_zero()]


def normal_form(f: MultiPoly, basis) -> MultiPoly:
    """Full remainder of f under multivariate division by basis."""
    gens = [(g.leading_monomial(), g.leading_coefficient(), g) for g in _as_generators(basis)]
    work = dict(f.terms)
    remainder = {}
    ring = f.ring
    while work:
        e = max(work, key=grevlex_key)
        c = work.pop(e)
        for lm, lc, g in gens:
            if mono_divides(lm, e):
                shift = mono_div(e, lm)
                factor = c / lc
                for ge, gc in g.terms.items():
                    ne = mono_mul(ge, shift)
                    if ne == e:
                        continue
                    acc = work.get(ne)
                    s = -(factor * gc) if acc is None else acc - factor * gc
                    if s.is_zero():
                        work.pop(ne, None)
                    else:
                        work[ne] = s
                break
        else:
            remainder[e] = c
    return MultiPoly(ring, remainder)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    ring: PolyRing
    reductions: int  # S-pair reductions spent building it

    def contains_one(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self.elements)

    def contains(self, f: MultiPoly) -> bool:
        return self.reduce(f).is_zero()

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.elements]

    def spairs_reduce_to_zero(self) -> bool:
        """Direct confluence check of the finished basis."""
        els = list(self.elements)
        for i in range(len(els)):
            for j in range(i + 1, len(els)):
                s = _s_poly(els[i], els[j])
                if not normal_form(s, els).is_zero():
                    return False
        return True


def _s_poly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lf, lg)
    mf = MultiPoly(f.ring, {mono_div(lcm, lf): f.leading_coefficient().inverse()})
    mg = MultiPoly(g.ring, {mono_div(lcm, lg): g.leading_coefficient().inverse()})
    return mf * f - mg * g


def _sugar(f: MultiPoly) -> int:
    return f.degree()


def groebner(ideal, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis in grevlex order; deterministic."""
    gens = _as_generators(ideal)
    if not gens:
        raise ValueError("cannot take a Groebner basis of the zero ideal")
    ring = gens[0].ring
    if not ring.domain.is_field:
        raise TypeError("Groebner bases require coefficients in a field")

    basis = []
    sugars = []
    pairs = []  # heap of (sugar, lcm_key, i, j)
    counter = 0

    def add_poly(f, sugar):
        nonlocal counter
        idx = len(basis)
        basis.append(f.monic())
        sugars.append(sugar)
        lf = f.leading_monomial()
        for i in range(idx):
            li = basis[i].leading_monomial()
            lcm = mono_lcm(li, lf)
            if lcm == mono_mul(li, lf):
                continue  # coprime leading terms reduce to zero
            s = max(
                sugars[i] + mono_degree(mono_div(lcm, li)),
                sugar + mono_degree(mono_div(lcm, lf)),
            )
            counter += 1
            heapq.heappush(pairs, (s, grevlex_key(lcm), i, idx, counter))

    seen = set()
    for g in sorted(gens, key=lambda p: grevlex_key(p.leading_monomial())):
        g = normal_form(g, basis) if basis else g
        if g.is_zero():
            continue
        key = frozenset(g.monic().terms.items())
        if key in seen:
            continue
        seen.add(key)
        add_poly(g, _sugar(g))

    reductions = 0
    while pairs:
        _, _, i, j, _ = heapq.heappop(pairs)
        li, lj = basis[i].leading_monomial(), basis[j].leading_monomial()
        lcm = mono_lcm(li, lj)
        # chain criterion: a third basis element dividing the lcm strictly
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            lk = basis[k].leading_monomial()
            if mono_divides(lk, lcm) and mono_lcm(li, lk) != lcm and mono_lcm(lj, lk) != lcm:
                skip = True
                break
        if skip:
            continue
        reductions += 1
        if reductions > budget:
            raise BudgetExceeded(f"S-pair reduction budget of {budget} exceeded")
        s = _s_poly(basis[i], basis[j])
        r = normal_form(s, basis)
        if not r.is_zero():
            sug = max(
                sugars[i] + mono_degree(mono_div(lcm, li)),
                sugars[j] + mono_degree(mono_div(lcm, lj)),
            )
            add_poly(r, max(sug, _sugar(r)))

    reduced = _reduce_basis(basis)
    return GroebnerBasis(tuple(reduced), ring, reductions)


def _reduce_basis(basis):
    # minimalise
    keep = []
    lms = [g.leading_monomial() for g in basis]
    for i, g in enumerate(basis):
        li = lms[i]
        if any(
            j != i and mono_divides(lms[j], li) and (j < i or lms[j] != li)
            for j in range(len(basis))
        ):
            continue
        keep.append(g)
    # inter-reduce tails
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = normal_form(g, others)
        if not r.is_zero():
            out.append(r.monic())
    out.sort(key=lambda p: grevlex_key(p.leading_monomial()), reverse=True)
    return out


# -- radical membership ----------------------------------------------------

def radical_member(f: MultiPoly, ideal, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff f vanishes on the zero locus of the ideal (f in its radical)."""
    gens = _as_generators(ideal)
    ring = gens[0].ring
    if f.is_zero():
        return True
    big = ring.extend((ring.fresh_name("t_rad"),))
    var_map = list(range(ring.nvars))
    lifted = [g.lift_to(big, var_map) for g in gens]
    t = big.var(big.nvars - 1)
    lifted.append(big.one - t * f.lift_to(big, var_map))
    return groebner(lifted, budget).contains_one()


# -- Hilbert series, dimension, degree -------------------------------------

def _minimalize_monomials(ms):
    ms = sorted(set(ms), key=grevlex_key)
    out = []
    for m in ms:
        if not any(mono_divides(o, m) for o in out):
            out.append(m)
    return out


def _hilbert_numerator(ms, cache):
    """Numerator of the Hilbert series of a monomial ideal over (1-t)^n,
    as a dict degree -> integer coefficient."""
    ms = _minimalize_monomials(ms)
    key = frozenset(ms)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not ms:
        out = {0: 1}
    elif any(mono_degree(m) == 0 for m in ms):
        out = {}
    else:
        pivot = ms[-1]
        rest = ms[:-1]
        a = _hilbert_numerator(rest, cache)
        colon = [tuple(max(x - y, 0) for x, y in zip(m, pivot)) for m in rest]
        b = _hilbert_numerator(colon, cache)
        out = dict(a)
        d = mono_degree(pivot)
        for deg, c in b.items():
            out[deg + d] = out.get(deg + d, 0) - c
        out = {k: v for k, v in out.items() if v}
    cache[key] = out
    return out


def proj_dim_degree(ideal, budget: int = DEFAULT_BUDGET):
    """(projective dimension, degree) of the locus of a homogeneous ideal.

    Empty loci report (-1, None).  Degree counts multiplicity.
    """
    gens = _as_generators(ideal)
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("projective dimension needs homogeneous generators")
    gb = groebner(gens, budget)
    n = gb.ring.nvars
    num = _hilbert_numerator(gb.leading_monomials(), {})
    if not num:
        return (-1, None)
    # divide the numerator by (1 - t) as often as it stays a polynomial
    coeffs = [0] * (max(num) + 1)
    for d, c in num.items():
        coeffs[d] = c
    cancelled = 0
    while cancelled < n and sum(coeffs) == 0:
        # synthetic division by (1 - t):  q_k = sum_{j<=k} c_j
        acc = 0
        q = []
        for c in coeffs[:-1]:
            acc += c
            q.append(acc)
        coeffs = q if q else [0]
        cancelled += 1
    krull = n - cancelled
    if krull <= 0:
        return (-1, None)
    return (krull - 1, sum(coeffs))


# -- local multiplicity ----------------------------------------------------

def _monomials_of_degree(ring: PolyRing, d: int):
    n = ring.nvars
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def local_multiplicity(gens, point, budget: int = DEFAULT_BUDGET, max_order: int = 8) -> int:
    """Multiplicity of the common zero `point` of affine generators.

    Computed as the stabilising dimension of the quotient by the ideal plus
    increasing powers of the maximal ideal at the point.
    """
    gens = _as_generators(gens)
    ring = gens[0].ring
    point = [ring.domain.coerce(p) for p in point]
    for g in gens:
        if not g.evaluate(point).is_zero():
            raise ValueError("the point is not a zero of every generator")
    shift = [ring.var(i) + point[i] for i in range(ring.nvars)]
    shifted = [g.substitute(shift, ring) for g in gens]
    prev = None
    for order in range(1, max_order + 1):
        extra = [ring.monomial(e) for e in _monomials_of_degree(ring, order)]
        gb = groebner(shifted + extra, budget)
        lms = gb.leading_monomials()
        dim = 0
        for d in range(order):
            for e in _monomials_of_degree(ring, d):
                if not any(mono_divides(lm, e) for lm in lms):
                    dim += 1
        if prev is not None and dim == prev:
            return dim
        prev = dim
    raise NonIsolatedPoint(
        f"local dimension did not stabilise below adic order {max_order}"
    )


# -- saturation ------------------------------------------------------------

def saturated_equal(left, right, sat: MultiPoly, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the two ideals cut out the same locus away from sat = 0.

    Decided by mutual radical membership of each generator in the other
    ideal extended with 1 - t*sat.
    """
    lgens = _as_generators(left)
    rgens = _as_generators(right)
    ring = lgens[0].ring

    def extended(gens):
        big = ring.extend((ring.fresh_name("t_sat"),))
        var_map = list(range(ring.nvars))
        lifted = [g.lift_to(big, var_map) for g in gens]
        t = big.var(big.nvars - 1)
        lifted.append(big.one - t * sat.lift_to(big, var_map))
        return big, var_map, lifted

    for source, target in ((lgens, rgens), (rgens, lgens)):
        big, var_map, lifted = extended(target)
        for g in source:
            if not radical_member(g.lift_to(big, var_map), lifted, budget):
                return False
    return True
