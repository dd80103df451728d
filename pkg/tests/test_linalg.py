import random
from fractions import Fraction

from cubicaut.field import ONE, ZERO, rational, zeta
from cubicaut.linalg import (
    det,
    identity,
    inverse,
    mat,
    matmul,
    matvec,
    nullspace,
    rank,
    rref,
    solve,
    transpose,
)


def _rand_mat(rng, n, m=None):
    m = n if m is None else m
    return mat([[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)])


def test_identity_and_matmul():
    e = identity(3)
    a = mat([[1, 2, 0], [0, 1, 1], [2, 0, 1]])
    assert matmul(a, e) == a
    assert matmul(e, a) == a
    v = [rational(1), rational(-1), rational(2)]
    assert matvec(e, v) == v


def test_transpose_involution():
    a = mat([[1, 2, 3], [4, 5, 6]])
    assert transpose(transpose(a)) == a


def test_rank_and_rref():
    a = mat([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(a) == 2
    r = rref(a)
    assert rref(r) == r
    assert rank(identity(4)) == 4


def test_vandermonde_in_roots_of_unity():
    # distinct fifth roots of unity give an invertible Vandermonde matrix
    z = zeta(5)
    a = [[z ** (i * j) for j in range(3)] for i in range(3)]
    assert rank(a) == 3
    assert not det(a).is_zero()


def test_inverse_and_det():
    rng = random.Random(11)
    for _ in range(10):
        a = _rand_mat(rng, 3)
        if det(a).is_zero():
            continue
        b = inverse(a)
        assert matmul(a, b) == identity(3)
        assert matmul(b, a) == identity(3)


def test_det_multiplicative():
    rng = random.Random(12)
    for _ in range(10):
        a = _rand_mat(rng, 3)
        b = _rand_mat(rng, 3)
        assert det(matmul(a, b)) == det(a) * det(b)


def test_solve():
    a = mat([[2, 1], [1, 3]])
    x = [rational(Fraction(1, 2)), rational(-2)]
    b = matvec(a, x)
    assert solve(a, b) == x


def test_nullspace():
    a = mat([[1, 1, 0], [0, 0, 1]])
    ns = nullspace(a)
    assert len(ns) == 1
    v = ns[0]
    assert all(x.is_zero() for x in matvec(a, v))
    assert rank([v]) == 1


def test_cyclotomic_entries():
    w = zeta(3)
    a = [[ONE, w], [w * w, ONE]]
    # det = 1 - w^3 = 0, so rank drops
    assert det(a) == ONE - w ** 3
    assert det(a).is_zero()
    assert rank(a) == 1
    assert any(not x.is_zero() for row in a for x in row)
    assert nullspace(a)
    assert all(x.is_zero() for x in matvec(a, nullspace(a)[0]))
    assert ZERO.is_zero()
