"""Finite permutation and matrix groups by exhaustive enumeration.

Everything here assumes small groups (orders divide 720 in practice, hard
cap 10,000), so closures, conjugacy classes, derived series, and subgroup
scans all work on full element lists.  Matrix elements are projective
transforms, already canonical up to scalar, so set membership is plain
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .geometry import ProjTransform

__all__ = [
    "Perm",
    "GroupHandle",
    "Fingerprint",
    "OrderBoundExceeded",
    "closure",
    "group_from_elements",
    "orbits",
    "is_transitive",
    "fingerprint",
    "subgroup_scan",
    "index_two_subgroups",
    "reference_group",
    "reference_fingerprint",
    "identify",
    "REFERENCE_NAMES",
]

CLOSURE_BOUND = 10_000


class OrderBoundExceeded(RuntimeError):
    """Enumeration grew past the configured bound."""


class Perm:
    """Permutation of {0, ..., n-1}; (p*q)(i) = p(q(i))."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Perm":
        """Build from 0-indexed cycles, applied right to left."""
        out = cls.identity(n)
        for cyc in reversed(list(cycles)):
            images = list(range(n))
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
            out = cls(images) * out
        return out

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Perm":
        out = [0] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = i
        return Perm(out)

    def cycles(self):
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (len(c) for c in self.cycles()), 1)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycs)

    def __repr__(self):
        return f"Perm{self.images}"


def element_key(x):
    """Deterministic sort key for group elements."""
    if isinstance(x, Perm):
        return x.images
    if isinstance(x, ProjTransform):
        return tuple(c.sort_key() for row in x.matrix for c in row)
    raise TypeError(f"unsupported element type {type(x)!r}")


def _identity_like(x):
    if isinstance(x, Perm):
        return Perm.identity(x.degree)
    if isinstance(x, ProjTransform):
        return ProjTransform.identity(x.n)
    raise TypeError(f"unsupported element type {type(x)!r}")


def closure(generators, bound: int = CLOSURE_BOUND) -> "GroupHandle":
    """Full element enumeration of the generated group; deterministic."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    ident = _identity_like(gens[0])
    seen = {ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for g in gens:
            y = x * g
            if y not in seen:
                if len(seen) >= bound:
                    raise OrderBoundExceeded(f"group order exceeds the bound {bound}")
                seen.add(y)
                queue.append(y)
    elements = tuple(sorted(seen, key=element_key))
    return GroupHandle(tuple(gens), elements)


def group_from_elements(elements) -> "GroupHandle":
    """Group handle from a complete element collection.

    Extracts a short generator list greedily and checks that its closure
    reproduces the collection exactly.
    """
    pool = sorted(set(elements), key=element_key)
    if not pool:
        raise ValueError("no elements")
    ident = _identity_like(pool[0])
    gens = []
    have = {ident}
    for x in pool:
        if x not in have:
            gens.append(x)
            have = set(closure(gens, bound=len(pool) + 1).elements)
    if not gens:
        gens = [ident]
    if have != set(pool):
        raise ValueError("element collection is not closed under the group laws")
    return GroupHandle(tuple(gens), tuple(pool))


class GroupHandle:
    """Finite group with its full element list; write-once caches."""

    def __init__(self, generators, elements):
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._set = frozenset(elements)
        self._inv = None
        self._classes = None
        self._derived = None
        self._quotient = None
        self._fingerprint = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self):
        return _identity_like(self.elements[0])

    def __contains__(self, x):
        return x in self._set

    def __iter__(self):
        return iter(self.elements)

    def element_set(self) -> frozenset:
        return self._set

    def is_subgroup_of(self, other: "GroupHandle") -> bool:
        return self._set <= other._set

    def inverse_of(self, x):
        if self._inv is None:
            self._inv = {e: e.inverse() for e in self.elements}
        return self._inv[x]

    def subgroup(self, gens) -> "GroupHandle":
        sub = closure(list(gens), bound=self.order + 1)
        if not sub.is_subgroup_of(self):
            raise ValueError("generators escape the group")
        return sub

    # -- conjugation structure --------------------------------------------

    def conjugacy_classes(self):
        """Partition into conjugacy classes, each sorted, in stable order."""
        if self._classes is not None:
            return self._classes
        remaining = set(self.elements)
        classes = []
        for x in self.elements:
            if x not in remaining:
                continue
            orbit = {x}
            queue = [x]
            while queue:
                y = queue.pop()
                for g in self.generators:
                    z = self.inverse_of(g) * y * g
                    if z not in orbit:
                        orbit.add(z)
                        queue.append(z)
            remaining -= orbit
            classes.append(tuple(sorted(orbit, key=element_key)))
        self._classes = tuple(classes)
        return self._classes

    def class_representatives(self):
        return [c[0] for c in self.conjugacy_classes()]

    def conjugate_subgroup(self, sub_elements, g):
        ginv = self.inverse_of(g)
        return frozenset(ginv * x * g for x in sub_elements)

    def normal_closure(self, seed) -> "GroupHandle":
        gens = sorted(set(seed), key=element_key)
        if not gens:
            return closure([self.identity], bound=self.order + 1)
        while True:
            sub = closure(gens, bound=self.order + 1)
            new = set()
            for x in sub.generators:
                for g in self.generators:
                    y = self.inverse_of(g) * x * g
                    if y not in sub:
                        new.add(y)
            if not new:
                return sub
            gens.extend(sorted(new, key=element_key))

    # -- abstract invariants ----------------------------------------------

    def element_order(self, x) -> int:
        if isinstance(x, Perm):
            return x.order()
        k = 1
        y = x
        ident = self.identity
        while y != ident:
            y = y * x
            k += 1
            if k > self.order:
                raise RuntimeError("element order exceeds the group order")
        return k

    def element_order_histogram(self):
        hist = {}
        for x in self.elements:
            o = self.element_order(x)
            hist[o] = hist.get(o, 0) + 1
        return tuple(sorted(hist.items()))

    def center_order(self) -> int:
        return sum(
            1 for x in self.elements if all(x * g == g * x for g in self.generators)
        )

    def derived_subgroup(self) -> "GroupHandle":
        if self._derived is None:
            seed = []
            for a in self.generators:
                for b in self.generators:
                    seed.append(self.inverse_of(a) * self.inverse_of(b) * a * b)
            self._derived = self.normal_closure(seed)
        return self._derived

    def derived_series_orders(self):
        """Orders along the derived series, stopping at the first repeat."""
        out = [self.order]
        current = self
        while True:
            nxt = current.derived_subgroup()
            if nxt.order == out[-1]:
                return tuple(out)
            out.append(nxt.order)
            if nxt.order == 1:
                return tuple(out)
            current = nxt

    def _abelian_quotient(self):
        """Coset representatives and multiplication table of G modulo G'."""
        if self._quotient is None:
            derived = self.derived_subgroup()
            # identity first so coset index 0 is the neutral element
            reps = [self.identity]
            for x in self.elements:
                if not any(self.inverse_of(r) * x in derived for r in reps):
                    reps.append(x)

            def rep_index(x):
                for i, r in enumerate(reps):
                    if self.inverse_of(r) * x in derived:
                        return i
                raise RuntimeError("coset representative lookup failed")

            table = tuple(tuple(rep_index(a * b) for b in reps) for a in reps)
            self._quotient = (derived, tuple(reps), table)
        return self._quotient

    def abelian_invariants(self):
        """Invariant factors of the abelianization, ascending divisibility."""
        _, reps, table = self._abelian_quotient()
        n = len(reps)
        if n == 1:
            return ()
        orders = []
        for i in range(n):
            j, k = i, 1
            while j != 0:
                j = table[j][i]
                k += 1
            orders.append(k)
        exponents_by_prime = {}
        for p in _prime_factors(n):
            # c = number of quotient elements of order dividing p^k
            col = []
            prev, pk = 1, p
            while True:
                c = sum(1 for o in orders if pk % o == 0)
                step = _log_int(c // prev, p)
                if step == 0:
                    break
                col.append(step)
                prev, pk = c, pk * p
            # conjugate partition: exponents of the cyclic p-factors, desc
            exponents_by_prime[p] = [
                sum(1 for s in col if s >= i) for i in range(1, col[0] + 1)
            ]
        width = max(len(v) for v in exponents_by_prime.values())
        factors_desc = []
        for i in range(width):
            d = 1
            for p, exps in exponents_by_prime.items():
                if i < len(exps):
                    d *= p ** exps[i]
            factors_desc.append(d)
        return tuple(reversed(factors_desc))

    def fingerprint(self) -> "Fingerprint":
        if self._fingerprint is None:
            self._fingerprint = Fingerprint(
                order=self.order,
                element_orders=self.element_order_histogram(),
                abelianization=self.abelian_invariants(),
                center_order=self.center_order(),
                derived_series=self.derived_series_orders(),
            )
        return self._fingerprint

    def __repr__(self):
        return f"GroupHandle(order={self.order})"


def _prime_factors(n: int):
    out = []
    p = 2
    while n > 1:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    return out


def _log_int(q: int, p: int) -> int:
    k = 0
    while q > 1:
        q //= p
        k += 1
    return k


@dataclass(frozen=True)
class Fingerprint:
    order: int
    element_orders: tuple
    abelianization: tuple
    center_order: int
    derived_series: tuple

    def as_dict(self):
        return {
            "order": self.order,
            "element_orders": [list(p) for p in self.element_orders],
            "abelianization": list(self.abelianization),
            "center_order": self.center_order,
            "derived_series": list(self.derived_series),
        }


def fingerprint(group: GroupHandle) -> Fingerprint:
    return group.fingerprint()


# -- actions ---------------------------------------------------------------

def default_action(g, item):
    if isinstance(g, Perm) and isinstance(item, int):
        return g(item)
    if isinstance(g, ProjTransform):
        return g.apply(item)
    raise TypeError("no default action for these types")


def orbits(group: GroupHandle, items, act=default_action):
    """Orbit partition of `items`, orbits and members in stable order."""
    items = list(items)
    item_set = set(items)
    placed = set()
    out = []
    for start in items:
        if start in placed:
            continue
        orbit = [start]
        placed.add(start)
        queue = [start]
        while queue:
            x = queue.pop()
            for g in group.generators:
                y = act(g, x)
                if y not in placed:
                    if y not in item_set:
                        raise ValueError(f"action leaves the item set: {y}")
                    placed.add(y)
                    orbit.append(y)
                    queue.append(y)
        out.append(orbit)
    return out


def is_transitive(group: GroupHandle, items, act=default_action) -> bool:
    return len(orbits(group, items, act)) == 1


# -- subgroup search -------------------------------------------------------

def subgroup_scan(group: GroupHandle, predicate=None, max_order=None, budget=100_000):
    """Subgroups of `group` up to conjugacy, optionally filtered.

    Breadth-first over subgroups.  Each known subgroup is extended by double
    coset representatives only (g and h*g*h' generate the same extension),
    and each newly found subgroup registers its whole conjugation orbit so
    conjugates are never explored twice.
    """
    max_order = max_order or group.order
    trivial = closure([group.identity], bound=2)
    seen = {trivial.element_set()}
    reps = [trivial]
    queue = [trivial]
    spent = 0
    while queue:
        sub = queue.pop(0)
        if sub.order * 2 > max_order:
            continue
        covered = set(sub.elements)
        for g in group.elements:
            if g in covered:
                continue
            for h1 in sub.elements:
                x = h1 * g
                for h2 in sub.elements:
                    covered.add(x * h2)
            spent += 1
            if spent > budget:
                raise OrderBoundExceeded("subgroup scan budget exceeded")
            try:
                new = closure(list(sub.generators) + [g], bound=max_order)
            except OrderBoundExceeded:
                continue
            key = new.element_set()
            if key in seen:
                continue
            reps.append(new)
            queue.append(new)
            orbit = {key}
            work = [key]
            while work:
                cur = work.pop()
                for h in group.generators:
                    conj = group.conjugate_subgroup(cur, h)
                    if conj not in orbit:
                        orbit.add(conj)
                        work.append(conj)
            seen |= orbit
    if predicate is None:
        return reps
    return [s for s in reps if predicate(s)]


def index_two_subgroups(group: GroupHandle):
    """All index-2 subgroups, via characters of the abelianization."""
    derived, reps, table = group._abelian_quotient()
    n = len(reps)
    if n % 2:
        return []
    # the subgroup generated by squares; every index-2 kernel contains it
    span = {0} | {table[i][i] for i in range(n)}
    changed = True
    while changed:
        changed = False
        for a in list(span):
            for b in list(span):
                c = table[a][b]
                if c not in span:
                    span.add(c)
                    changed = True
    inv_q = [row.index(0) for row in table]
    # quotient mod squares is elementary abelian over GF(2)
    coset_of = {}
    coset_reps = []
    for i in range(n):
        home = None
        for r in coset_reps:
            if table[inv_q[r]][i] in span:
                home = r
                break
        if home is None:
            coset_reps.append(i)
            home = i
        coset_of[i] = home
    if len(coset_reps) == 1:
        return []
    # GF(2) coordinates from a greedy basis
    assigned = {coset_reps[0]: 0}
    rank = 0
    for r in coset_reps[1:]:
        if r in assigned:
            continue
        bit = 1 << rank
        rank += 1
        for known, v in list(assigned.items()):
            assigned[coset_of[table[known][r]]] = v | bit
    out = []
    for mask in range(1, 1 << rank):
        kernel = {r for r, v in assigned.items() if bin(v & mask).count("1") % 2 == 0}
        elems = [
            reps[i] * d
            for i in range(n)
            if coset_of[i] in kernel
            for d in derived.elements
        ]
        out.append(group_from_elements(elems))
    out.sort(key=lambda h: [element_key(x) for x in h.elements])
    return out


# -- reference groups ------------------------------------------------------

_REFERENCE_GENERATORS = {
    "Sym6": [((0, 1),), ((0, 1, 2, 3, 4, 5),)],
    "Sym5": [((0, 1),), ((0, 1, 2, 3, 4),)],
    "Alt6": [((0, 1, 2),), ((1, 2, 3, 4, 5),)],
    "Alt5": [((0, 1, 2),), ((2, 3, 4),)],
    "Sym3^2:C2": [
        ((0, 1),),
        ((0, 1, 2),),
        ((3, 4),),
        ((3, 4, 5),),
        ((0, 3), (1, 4), (2, 5)),
    ],
    "Sym3^2": [((0, 1),), ((0, 1, 2),), ((3, 4),), ((3, 4, 5),)],
    "C3^2:C4": [((0, 1, 2),), ((3, 4, 5),), ((0, 3), (1, 4, 2, 5))],
    "C5:C4": [((0, 1, 2, 3, 4),), ((1, 2, 4, 3),)],
    "Dih12": [((0, 1, 2, 3, 4, 5),), ((0, 5), (1, 4), (2, 3))],
    "Sym4xC2": [((0, 1),), ((0, 1, 2, 3),), ((4, 5),)],
}

REFERENCE_NAMES = tuple(_REFERENCE_GENERATORS)

_reference_cache = {}
_reference_fp_cache = {}


def _perm_degree(cycle_lists):
    top = 0
    for cycles in cycle_lists:
        for cyc in cycles:
            top = max(top, max(cyc))
    return top + 1


def reference_group(name: str) -> GroupHandle:
    if name not in _REFERENCE_GENERATORS:
        raise KeyError(f"unknown reference group {name!r}")
    if name not in _reference_cache:
        cycle_lists = _REFERENCE_GENERATORS[name]
        n = _perm_degree(cycle_lists)
        gens = [Perm.from_cycles(cycles, n) for cycles in cycle_lists]
        _reference_cache[name] = closure(gens)
    return _reference_cache[name]


def reference_fingerprint(name: str) -> Fingerprint:
    if name not in _reference_fp_cache:
        _reference_fp_cache[name] = reference_group(name).fingerprint()
    return _reference_fp_cache[name]


def identify(fp: Fingerprint):
    """Reference group name with this fingerprint, or None."""
    for name in REFERENCE_NAMES:
        if reference_fingerprint(name) == fp:
            return name
    return None
