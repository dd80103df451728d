"""Exact arithmetic in the rationals and in cyclotomic fields Q(zeta_n).

An element is a residue modulo the n-th cyclotomic polynomial, stored as a
dense coefficient vector of length phi(n) over Fraction, and always reduced
to its minimal conductor.  Equal values therefore have identical
representations, no matter how they were produced, and hash consistently.
Arithmetic between different conductors goes through the lcm conductor.
No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta",
    "rational",
    "ZERO",
    "ONE",
]


def _poly_div_int(num: list[int], den) -> list[int]:
    # exact division of integer polynomials, constant term first
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        if c % den[-1]:
            raise ArithmeticError("inexact polynomial division")
        c //= den[-1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[i + k] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder in polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_int(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _residue_pow(n: int, e: int) -> tuple[int, ...]:
    """t^e reduced modulo Phi_n, as an integer vector of length phi(n)."""
    phi = euler_phi(n)
    if e < phi:
        v = [0] * phi
        v[e] = 1
        return tuple(v)
    prev = _residue_pow(n, e - 1)
    shifted = [0] + list(prev[:-1])
    top = prev[-1]
    if top:
        head = cyclotomic_polynomial(n)[:-1]
        for i, c in enumerate(head):
            shifted[i] -= top * c
    return tuple(shifted)


@lru_cache(maxsize=None)
def _proper_divisors_by_phi(n: int) -> tuple[int, ...]:
    ds = [d for d in range(1, n) if n % d == 0]
    ds.sort(key=lambda d: (euler_phi(d), d))
    return tuple(ds)


def _embed_raw(coeffs, n: int, m: int) -> list[Fraction]:
    """Coefficients of an element of Q(zeta_n) rewritten in Q(zeta_m), n | m."""
    step = m // n
    out = [Fraction(0)] * euler_phi(m)
    for i, c in enumerate(coeffs):
        if c:
            for j, r in enumerate(_residue_pow(m, i * step)):
                if r:
                    out[j] += c * r
    return out


def _subfield_coords(coeffs, n: int, d: int):
    """Solve for the Q(zeta_d) coordinates of an element of Q(zeta_n), or None."""
    phi_n, phi_d = euler_phi(n), euler_phi(d)
    step = n // d
    cols = [_residue_pow(n, j * step) for j in range(phi_d)]
    # Gaussian elimination on the phi_n x phi_d system  cols * y = coeffs
    rows = [[Fraction(cols[j][i]) for j in range(phi_d)] + [coeffs[i]] for i in range(phi_n)]
    pivots = []
    r = 0
    for col in range(phi_d):
        piv = next((i for i in range(r, phi_n) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(phi_n):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for i in range(r, phi_n):
        if rows[i][phi_d]:
            return None
    y = [Fraction(0)] * phi_d
    for i, col in enumerate(pivots):
        y[col] = rows[i][phi_d]
    return y


class Cyclotomic:
    """An element of some Q(zeta_n), stored at its minimal conductor."""

    __slots__ = ("n", "c", "_h")

    def __init__(self, n: int, c: tuple):
        # raw constructor: callers must pass a canonical (minimal-conductor) form
        self.n = n
        self.c = c
        self._h = None

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(n: int, coeffs) -> "Cyclotomic":
        coeffs = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        if n == 1:
            return Cyclotomic(1, (coeffs[0],))
        if not any(coeffs[1:]):
            return Cyclotomic(1, (coeffs[0],))
        for d in _proper_divisors_by_phi(n):
            if d == 1:
                continue
            y = _subfield_coords(coeffs, n, d)
            if y is not None:
                return Cyclotomic(d, tuple(y))
        return Cyclotomic(n, tuple(coeffs))

    @staticmethod
    def from_rational(x) -> "Cyclotomic":
        return Cyclotomic(1, (Fraction(x),))

    @staticmethod
    def root_of_unity(n: int, power: int = 1) -> "Cyclotomic":
        power %= n
        return Cyclotomic._make(n, list(_residue_pow(n, power)))

    # -- basic queries -----------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return self.n == 1 and not self.c[0]

    def is_rational(self) -> bool:
        return self.n == 1

    def as_fraction(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def _aligned(self, other: "Cyclotomic"):
        m = self.n * other.n // gcd(self.n, other.n)
        a = self.c if self.n == m else _embed_raw(self.c, self.n, m)
        b = other.c if other.n == m else _embed_raw(other.c, other.n, m)
        return m, a, b

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.n == other.n:
            if self.n == 1:
                return Cyclotomic(1, (self.c[0] + other.c[0],))
            return Cyclotomic._make(self.n, [a + b for a, b in zip(self.c, other.c)])
        m, a, b = self._aligned(other)
        return Cyclotomic._make(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Cyclotomic(1, (self.c[0] * other.c[0],))
        m, a, b = self._aligned(other)
        phi = len(a)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        for e in range(phi, 2 * phi - 1):
            if conv[e]:
                for j, r in enumerate(_residue_pow(m, e)):
                    if r:
                        out[j] += conv[e] * r
        return Cyclotomic._make(m, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.n == 1:
            return Cyclotomic(1, (1 / self.c[0],))
        # extended Euclid in Q[t] for (self, Phi_n)
        a = list(self.c)
        b = [Fraction(x) for x in cyclotomic_polynomial(self.n)]
        sa, sb = [Fraction(1)], [Fraction(0)]
        while any(b):
            q, r = _poly_divmod(a, b)
            a, b = b, r
            sa, sb = sb, _poly_sub(sa, _poly_mul(q, sb))
        lead = a[_poly_deg(a)]
        inv_coeffs = [x / lead for x in sa]
        phi = euler_phi(self.n)
        out = [Fraction(0)] * phi
        for e, c in enumerate(inv_coeffs):
            if c:
                for j, r in enumerate(_residue_pow(self.n, e)):
                    if r:
                        out[j] += c * r
        return Cyclotomic._make(self.n, out)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            if not other.c[0]:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return Cyclotomic(1, (self.c[0] / other.c[0],))
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta_n -> zeta_n^k, gcd(k, n) = 1."""
        if gcd(k, self.n) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        out = [Fraction(0)] * euler_phi(self.n)
        for i, c in enumerate(self.c):
            if c:
                for j, r in enumerate(_residue_pow(self.n, (i * k) % self.n if self.n > 1 else 0)):
                    if r:
                        out[j] += c * r
        return Cyclotomic._make(self.n, out)

    def multiplicative_order(self, limit: int = 120):
        """Order as a root of unity, or None if none up to limit."""
        if self.is_zero():
            return None
        acc = self
        for k in range(1, limit + 1):
            if acc == ONE:
                return k
            acc = acc * self
        return None

    def sort_key(self):
        return (self.n, tuple((f.numerator, f.denominator) for f in self.c))

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.n, self.c))
        return self._h

    # -- display -----------------------------------------------------------

    def __str__(self):
        if self.n == 1:
            return str(self.c[0])
        sym = {3: "w", 4: "i", 5: "z5"}.get(self.n, f"z{self.n}")
        parts = []
        for e, c in enumerate(self.c):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
                continue
            p = sym if e == 1 else f"{sym}^{e}"
            if c == 1:
                parts.append(p)
            elif c == -1:
                parts.append(f"-{p}")
            else:
                parts.append(f"{c}*{p}")
        out = " + ".join(parts).replace("+ -", "- ")
        return out or "0"

    def __repr__(self):
        return f"Cyclotomic({self})"


def _coerce(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, int):
        return Cyclotomic(1, (Fraction(x),))
    if isinstance(x, Fraction):
        return Cyclotomic(1, (x,))
    return None


def coerce_scalar(x) -> Cyclotomic:
    c = _coerce(x)
    if c is None:
        raise TypeError(f"cannot interpret {x!r} as a field element")
    return c


# -- helpers for the inverse ----------------------------------------------

def _poly_deg(p) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    db = _poly_deg(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(_poly_deg(a) - db, -1, -1):
        c = a[db + k] / b[db]
        if c:
            q[k] = c
            for i in range(db + 1):
                a[i + k] -= c * b[i]
    return q, a


def zeta(n: int, power: int = 1) -> Cyclotomic:
    """Primitive n-th root of unity (raised to power)."""
    return Cyclotomic.root_of_unity(n, power)


def rational(x) -> Cyclotomic:
    return Cyclotomic.from_rational(x)


ZERO = Cyclotomic(1, (Fraction(0),))
ONE = Cyclotomic(1, (Fraction(1),))
