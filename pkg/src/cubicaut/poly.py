"""Sparse multivariate polynomials with exact coefficients.

Coefficients live either in the cyclotomic tower (FieldDomain) or in a
polynomial ring over Q in named parameters (ParamDomain), so one form can
carry symbolic coefficients like A, B, C, D while its variables stay
geometric.  Terms are keyed by exponent tuples; the canonical term order is
graded reverse lexicographic throughout.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .field import Cyclotomic, ZERO, ONE, coerce_scalar

__all__ = [
    "PolyRing",
    "MultiPoly",
    "FieldDomain",
    "ParamDomain",
    "grevlex_key",
    "mono_mul",
    "mono_divides",
    "mono_div",
    "mono_lcm",
    "mono_degree",
    "proportionality",
    "substitute_linear",
    "coefficient_conditions",
]


# -- monomial utilities ----------------------------------------------------

def grevlex_key(exps):
    """Sort key; max() under this key is the grevlex leading monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


# -- coefficient domains ---------------------------------------------------

class FieldDomain:
    """Scalars from Q and its small cyclotomic extensions."""

    is_field = True

    def coerce(self, x):
        if isinstance(x, MultiPoly):
            raise TypeError("polynomial where a field scalar was expected")
        return coerce_scalar(x)

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE

    def key(self):
        return ("field",)

    def __eq__(self, other):
        return isinstance(other, FieldDomain)

    def __hash__(self):
        return hash(("field",))


class ParamDomain:
    """Scalars from a polynomial ring Q[params]."""

    is_field = False

    def __init__(self, ring: "PolyRing"):
        if not isinstance(ring.domain, FieldDomain):
            raise TypeError("parameter coefficients must live over the rational field")
        self.ring = ring

    def coerce(self, x):
        if isinstance(x, MultiPoly):
            if x.ring.key() != self.ring.key():
                raise TypeError("parameter polynomial from a different ring")
            return x
        c = coerce_scalar(x)
        if not c.is_rational():
            raise TypeError("parameter coefficients must be rational")
        return self.ring.constant(c)

    @property
    def zero(self):
        return self.ring.zero

    @property
    def one(self):
        return self.ring.one

    def key(self):
        return ("param", self.ring.names)

    def __eq__(self, other):
        return isinstance(other, ParamDomain) and other.ring.names == self.ring.names

    def __hash__(self):
        return hash(self.key())


def _coef_is_zero(c):
    if isinstance(c, MultiPoly):
        return c.is_zero()
    return c.is_zero()


# -- rings and polynomials -------------------------------------------------

class PolyRing:
    def __init__(self, names, domain=None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.domain = domain if domain is not None else FieldDomain()

    @property
    def nvars(self):
        return len(self.names)

    def key(self):
        return (self.names, self.domain.key())

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    # -- constructors ------------------------------------------------------

    @property
    def zero(self):
        return MultiPoly(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.domain.coerce(c)
        if _coef_is_zero(c):
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: c})

    def var(self, i):
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): self.domain.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coef=1):
        coef = self.domain.coerce(coef)
        if _coef_is_zero(coef):
            return self.zero
        return MultiPoly(self, {tuple(exps): coef})

    def from_terms(self, terms):
        out = {}
        for exps, coef in terms.items():
            coef = self.domain.coerce(coef)
            if not _coef_is_zero(coef):
                out[tuple(exps)] = coef
        return MultiPoly(self, out)

    def extend(self, extra_names) -> "PolyRing":
        return PolyRing(self.names + tuple(extra_names), self.domain)

    def drop(self, index) -> "PolyRing":
        names = list(self.names)
        del names[index]
        return PolyRing(names, self.domain)

    def fresh_name(self, stem: str) -> str:
        if stem not in self.names:
            return stem
        k = 1
        while f"{stem}{k}" in self.names:
            k += 1
        return f"{stem}{k}"


class MultiPoly:
    """Immutable sparse polynomial; do not mutate .terms."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(e) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(mono_degree(e) == 0 for e in self.terms)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.domain.zero)

    def leading_monomial(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lead = max(self.terms, key=grevlex_key)
        return self._lead

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _same_ring(self, other):
        if self.ring.key() != other.ring.key():
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, MultiPoly) or other.ring.key() != self.ring.key():
            try:
                other = self.ring.constant(other)
            except TypeError:
                return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            s = c if acc is None else acc + c
            if _coef_is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly) or other.ring.key() != self.ring.key():
            try:
                other = self.ring.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly) and other.ring.key() == self.ring.key():
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = mono_mul(e1, e2)
                    p = c1 * c2
                    acc = out.get(e)
                    s = p if acc is None else acc + p
                    if _coef_is_zero(s):
                        out.pop(e, None)
                    else:
                        out[e] = s
            return MultiPoly(self.ring, out)
        try:
            c = self.ring.domain.coerce(other)
        except TypeError:
            return NotImplemented
        if _coef_is_zero(c):
            return self.ring.zero
        return MultiPoly(self.ring, {e: x * c for e, x in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = self.ring.domain.coerce(scalar)
        if isinstance(c, MultiPoly):
            raise TypeError("cannot divide by a parameter polynomial")
        return self * c.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def monic(self):
        lc = self.leading_coefficient()
        return self / lc

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if self.is_constant():
                try:
                    return self.constant_coefficient() == self.ring.domain.coerce(other)
                except TypeError:
                    return NotImplemented
            return NotImplemented
        return self.ring.key() == other.ring.key() and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.key(), frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def derivative(self, i) -> "MultiPoly":
        if isinstance(i, str):
            i = self.ring.names.index(i)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(self.ring, {e: c for e, c in out.items() if not _coef_is_zero(c)})

    def gradient(self):
        return [self.derivative(i) for i in range(self.ring.nvars)]

    # -- substitution ------------------------------------------------------

    def substitute(self, images, target=None) -> "MultiPoly":
        """Map variable i to images[i] (polynomials of a common target ring)."""
        if target is None:
            target = images[0].ring if images else self.ring
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        pows = [{0: target.one} for _ in images]

        def power(i, e):
            cache = pows[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        acc = target.zero
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, exp in enumerate(e):
                if exp:
                    term = term * power(i, exp)
            acc = acc + term
        return acc

    def compose_matrix(self, matrix) -> "MultiPoly":
        """Pullback along x -> M x: substitute x_i by sum_j M[i][j] x_j."""
        images = []
        for row in matrix:
            img = self.ring.zero
            for j, a in enumerate(row):
                if isinstance(a, Cyclotomic) and a.is_zero():
                    continue
                img = img + self.ring.var(j) * a
            images.append(img)
        return self.substitute(images, self.ring)

    def evaluate(self, values):
        """Evaluate at scalar values; returns a domain element."""
        if len(values) != self.ring.nvars:
            raise ValueError("need one value per variable")
        vals = [self.ring.domain.coerce(v) for v in values]
        acc = self.ring.domain.zero
        pows = [{0: self.ring.domain.one} for _ in vals]

        def power(i, e):
            cache = pows[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * vals[i]
            return cache[e]

        for e, c in self.terms.items():
            t = c
            for i, exp in enumerate(e):
                if exp:
                    t = t * power(i, exp)
            acc = acc + t
        return acc

    def dehomogenize(self, chart: int) -> "MultiPoly":
        """Set variable `chart` to 1, landing in the ring without it."""
        small = self.ring.drop(chart)
        images = []
        k = 0
        for i in range(self.ring.nvars):
            if i == chart:
                images.append(small.one)
            else:
                images.append(small.var(k))
                k += 1
        return self.substitute(images, small)

    def lift_to(self, big: PolyRing, var_map) -> "MultiPoly":
        """Structurally re-index variables: old i becomes var_map[i] in big."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * big.nvars
            for i, exp in enumerate(e):
                ne[var_map[i]] = exp
            out[tuple(ne)] = c
        return MultiPoly(big, out)

    def map_coefficients(self, fn, target_ring=None) -> "MultiPoly":
        ring = target_ring if target_ring is not None else self.ring
        out = {}
        for e, c in self.terms.items():
            nc = fn(c)
            nc = ring.domain.coerce(nc)
            if not _coef_is_zero(nc):
                out[e] = nc
        return MultiPoly(ring, out)

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            names = []
            for i, exp in enumerate(e):
                if exp == 1:
                    names.append(self.ring.names[i])
                elif exp > 1:
                    names.append(f"{self.ring.names[i]}^{exp}")
            mono = "*".join(names)
            cs = str(c)
            if isinstance(c, MultiPoly) and len(c.terms) > 1:
                cs = f"({cs})"
            elif " " in cs:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


# -- relations between two polynomials ------------------------------------

def proportionality(f: MultiPoly, g: MultiPoly):
    """Scalar c with g = c*f, or None.  (0, 0) gives 1."""
    f._same_ring(g)
    if not f.ring.domain.is_field:
        raise TypeError("proportionality needs field coefficients; "
                        "use coefficient_conditions for parametric forms")
    if f.is_zero() and g.is_zero():
        return f.ring.domain.one
    if f.is_zero() or g.is_zero():
        return None
    if set(f.terms) != set(g.terms):
        return None
    lead = f.leading_monomial()
    ratio = g.terms[lead] / f.terms[lead]
    for e, c in f.terms.items():
        if g.terms[e] != c * ratio:
            return None
    return ratio


def substitute_linear(f: MultiPoly, transform) -> MultiPoly:
    """f composed with a linear change of coordinates.

    Accepts a raw square matrix or any object exposing one through a
    `matrix` attribute.
    """
    matrix = getattr(transform, "matrix", transform)
    if len(matrix) != f.ring.nvars:
        raise ValueError("matrix size does not match the variable count")
    return f.compose_matrix(matrix)


def coefficient_conditions(f: MultiPoly, g: MultiPoly):
    """Generators (2x2 minors over the shared support) whose vanishing is
    exactly the condition that f and g are proportional."""
    f._same_ring(g)
    support = sorted(set(f.terms) | set(g.terms), key=grevlex_key)
    zero = f.ring.domain.zero
    pairs = [(f.terms.get(e, zero), g.terms.get(e, zero)) for e in support]
    out = []
    for (a1, b1), (a2, b2) in combinations(pairs, 2):
        m = a1 * b2 - a2 * b1
        if not _coef_is_zero(m):
            out.append(m)
    return out
