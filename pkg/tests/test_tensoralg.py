import random
from fractions import Fraction

import pytest

from quadralg.composition import CompositionAlgebra, fresh_names
from quadralg.errors import IsotropicSkew, ResultNotSkew
from quadralg.fields import FieldCtx
from quadralg.linalg import Span, mat_eq, mat_mul, mat_vec
from quadralg.tensoralg import (
    TensorAlgebra,
    as_skew,
    lmul_matrix,
    peirce_project,
    product_coord,
    skew_pair,
    skew_pair_fast,
    skew_pair_is_nonzero,
)

QQ = FieldCtx.rationals()


@pytest.fixture(scope="module")
def e6_tensor():
    c1 = CompositionAlgebra(QQ, [QQ.scalar(-1)] * 3)
    c2 = CompositionAlgebra(QQ, [QQ.scalar(-1)])
    return TensorAlgebra(c1, c2)


def test_unit_and_involution(e6_tensor):
    T = e6_tensor
    rng = random.Random(0)
    x = T.random_element(rng)
    assert T.one() * x == x and x * T.one() == x
    s = T.skew(T.c1.basis(1), T.c2.zero())
    assert s.to_tensor().involution() == -s.to_tensor()
    for _ in range(100):
        x, y = T.random_element(rng), T.random_element(rng)
        assert (x * y).involution() == y.involution() * x.involution()
        assert x.involution().involution() == x


def test_skew_dimension(e6_tensor):
    assert e6_tensor.skew_dim == 8 == e6_tensor.c1.dim + e6_tensor.c2.dim - 2
    assert len(e6_tensor.skew_basis()) == 8


def test_albert_form(e6_tensor):
    T = e6_tensor
    s = T.skew(T.c1.basis(1), T.c2.basis(1))
    assert s.albert() == QQ.zero()  # q1(i1) - q2(i2) with i1^2 = i2^2 = a
    assert T.skew(T.c1.basis(1), T.c2.zero()).albert() == QQ.one()
    rng = random.Random(4)
    for _ in range(50):
        s, t = T.random_skew(rng), T.random_skew(rng)
        lhs = s.albert_bil(t)
        rhs = (s + t).albert() - s.albert() - t.albert()
        assert lhs == rhs


def test_sharp_and_inverse(e6_tensor):
    T = e6_tensor
    s = T.skew(T.c1.basis(1), T.c2.basis(1))
    assert s.sharp() == T.skew(T.c1.basis(1), -T.c2.basis(1))
    assert s.sharp().sharp() == s
    with pytest.raises(IsotropicSkew):
        s.inverse()
    rng = random.Random(5)
    done = 0
    while done < 500:
        sv = T.random_skew(rng)
        if not sv.albert():
            continue
        x = T.random_element(rng)
        assert sv.to_tensor() * (sv.inverse().to_tensor() * x) == x
        done += 1


def test_skew_sandwich_matrices(e6_tensor):
    T = e6_tensor
    rng = random.Random(6)
    assert mat_vec(lmul_matrix(T, T.one()), T.one().flat_coords())[0] == QQ.one()
    for _ in range(30):
        s1, s2 = T.random_skew(rng), T.random_skew(rng)
        t1, t2 = s1.to_tensor(), s2.to_tensor()
        assert t1 * (t2 * t1) == (t1 * t2) * t1
        L = lmul_matrix(T, (t1 * t2) * t1)
        R = mat_mul(lmul_matrix(T, s1), mat_mul(lmul_matrix(T, s2), lmul_matrix(T, s1)))
        assert mat_eq(L, R)


def test_lmul_matrix_consistency(e6_tensor):
    T = e6_tensor
    rng = random.Random(7)
    for _ in range(30):
        s = T.random_skew(rng)
        x = T.random_element(rng)
        assert mat_vec(lmul_matrix(T, s), x.flat_coords()) == \
            (s.to_tensor() * x).flat_coords()


def test_skew_pair_antisymmetry_and_closed_form(e6_tensor):
    T = e6_tensor
    rng = random.Random(8)
    x = T.random_element(rng)
    assert skew_pair(x, x).is_zero()
    # hand expansion: (1 (x) 1, i1 (x) 1) = -2 i1 (x) 1
    sp = skew_pair(T.one(), T.skew(T.c1.basis(1), T.c2.zero()).to_tensor())
    assert sp.s1 == T.c1.basis(1).scale(QQ.scalar(-2)) and sp.s2.is_zero()

    # decomposables: (x1 (x) x2, y1 (x) y2)
    #   = (f2(x2,y2) psi(x1,y1) (x) 1 + 1 (x) f1(x1,y1) psi(x2,y2)) / 2
    # symbolically over indeterminate coordinates (the 1/2 comes from the
    # full-polarization convention f(x, x) = 2 q(x))
    names = fresh_names(QQ, "_p", 8) + fresh_names(QQ, "_q", 2) \
        + fresh_names(QQ, "_r", 8) + fresh_names(QQ, "_s", 2)
    ext = QQ.extend(names)
    T2 = T.lift(ext)
    g = ext.gens()
    x1 = T2.c1.element(g[:8])
    x2 = T2.c2.element(g[8:10])
    y1 = T2.c1.element(g[10:18])
    y2 = T2.c2.element(g[18:20])
    sp = skew_pair(T2.pure(x1, x2), T2.pure(y1, y2))
    half = ext.one() / ext.scalar(2)

    def psi(u, v):
        return u * v.conjugate() - v * u.conjugate()

    assert sp.s1 == psi(x1, y1).scale(half * x2.bil(y2))
    assert sp.s2 == psi(x2, y2).scale(half * x1.bil(y1))


def test_skew_pair_grading_assertion(e6_tensor):
    T = e6_tensor
    x = T.basis(1, 1)  # i1 (x) i2 is not skew
    with pytest.raises(ResultNotSkew):
        as_skew(x)


def test_fast_skew_pair_and_coords(e6_tensor):
    T = e6_tensor
    rng = random.Random(9)
    for _ in range(60):
        x, y = T.random_element(rng), T.random_element(rng)
        full = skew_pair(x, y)
        assert skew_pair_fast(x, y) == full
        assert skew_pair_is_nonzero(x, y) == (not full.is_zero())
        prod = x * y
        for r1 in range(T.c1.dim):
            for r2 in range(T.c2.dim):
                assert product_coord(x, y, r1, r2) == prod.coords[r1][r2]
                break  # one column per row keeps this quick


def test_peirce_projection(e6_tensor):
    T = e6_tensor
    a = QQ.scalar(-1)
    rng = random.Random(10)
    p00, p01 = peirce_project(T, a, T.one())
    expect = T.one().scale(Fraction(1, 2)) + T.basis(1, 1).scale(Fraction(1, 2) / a)
    assert p00 == expect
    for _ in range(50):
        x = T.random_element(rng)
        x0, x1 = peirce_project(T, a, x)
        assert x0 + x1 == x
        y0, y1 = peirce_project(T, a, x0)
        assert y0 == x0 and y1.is_zero()
    span = Span(QQ, 16)
    for p in range(8):
        for q in range(2):
            x0, _ = peirce_project(T, a, T.basis(p, q))
            span.add(x0.flat_coords())
    assert span.dim == 8  # dim X0 for the 8 (x) 2 case


def test_witt_pair_structure(e6_tensor):
    T = e6_tensor
    u = T.skew(T.c1.basis(2), T.c2.zero())
    qau = u.albert()
    mu = qau / (QQ.scalar(4) * QQ.scalar(-1))
    e0 = T.skew(T.c1.basis(1), T.c2.basis(1))
    e1 = e0.sharp().scale(mu)
    assert e0.albert() == QQ.zero() and e1.albert() == QQ.zero()
    assert e0.albert_bil(e1) == -qau != QQ.zero()
    assert e0.albert_bil(u) == QQ.zero() and e1.albert_bil(u) == QQ.zero()
