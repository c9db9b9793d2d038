import random
from fractions import Fraction

import pytest

from quadralg.composition import CompositionAlgebra
from quadralg.errors import NotIdempotent
from quadralg.fields import FieldCtx
from quadralg.jordan import (
    HermMat2,
    ReducedSpin,
    U_lin,
    U_op,
    halfspace_invertibility_sample,
    jordan_identity_random,
    jordan_identity_symbolic,
    peirce_decompose,
    u_containments,
)
from quadralg.quadforms import PointedQuadSpace, QuadraticForm

QQ = FieldCtx.rationals()


def spin(*diag, base=None):
    q = QuadraticForm(QQ, [QQ.scalar(d) for d in diag])
    if base is None:
        base = [QQ.one()] + [QQ.zero()] * (len(diag) - 1)
    return ReducedSpin(PointedQuadSpace(q, base))


@pytest.fixture(scope="module")
def J3():
    return spin(1, 1, 1)


@pytest.fixture(scope="module")
def herm_gauss():
    return HermMat2(CompositionAlgebra(QQ, [QQ.scalar(-1)]))


@pytest.fixture(scope="module")
def herm_quat():
    return HermMat2(CompositionAlgebra(QQ, [QQ.scalar(-1), QQ.scalar(-1)]))


def test_idempotents_and_unit(J3):
    e0, e1 = J3.e0(), J3.e1()
    assert (e0 * e1).is_zero()
    assert e0 * e0 == e0 and e1 * e1 == e1
    rng = random.Random(0)
    x = J3.random_element(rng)
    assert J3.unit() * x == x


def test_spin_products(J3):
    rng = random.Random(1)
    q, f = J3.space.form, J3.space.form.polarize
    for _ in range(100):
        v = J3.half_element([QQ.scalar(rng.randint(-9, 9)) for _ in range(3)])
        w = J3.half_element([QQ.scalar(rng.randint(-9, 9)) for _ in range(3)])
        half = Fraction(1, 2)
        assert v * w == J3.unit().scale(half * f(v.half_part, w.half_part))
        t = QQ.scalar(rng.randint(-9, 9))
        assert J3.e0().scale(t) * v == v.scale(half * t)


def test_spin_u_operators(J3):
    rng = random.Random(2)
    q, f = J3.space.form, J3.space.form.polarize
    for _ in range(200):
        v = J3.half_element([QQ.scalar(rng.randint(-9, 9)) for _ in range(3)])
        w = J3.half_element([QQ.scalar(rng.randint(-9, 9)) for _ in range(3)])
        qv = q.eval(v.half_part)
        assert U_op(v, J3.e0()) == J3.e1().scale(qv)
        assert U_op(v, J3.e1()) == J3.e0().scale(qv)
        assert U_op(v, w) == v.scale(f(v.half_part, w.half_part)) - w.scale(qv)
        x = J3.random_element(rng)
        assert U_op(J3.unit(), x) == x


def test_jordan_identity_symbolic(J3, herm_gauss, herm_quat):
    jordan_identity_symbolic(J3)
    jordan_identity_symbolic(herm_gauss)
    jordan_identity_symbolic(herm_quat)
    jordan_identity_symbolic(spin(1, 2, 3, 5, 7, 11))  # dim V = 6


def test_herm_mat2_u_closed_forms(herm_quat):
    H = herm_quat
    L = H.L
    rng = random.Random(3)
    for _ in range(100):
        ell = L.random_element(rng)
        al = QQ.scalar(rng.randint(-9, 9))
        v = H.half_element(ell.coords)
        # U_v(alpha e0) = (ell alpha conj(ell)) e1 with alpha central
        lam = (ell * ell.conjugate()).coords[0] * al
        assert U_op(v, H.e0().scale(al)) == H.e1().scale(lam)
        assert U_op(v, H.e1().scale(al)) == H.e0().scale(lam)
        # U_{v1} v2 in the half space: conj(l1) l2 conj(l1) slot
        m = L.random_element(rng)
        w = H.half_element(m.coords)
        got = U_op(v, w)
        expect = (ell * (m.conjugate() * ell))
        assert got.half_part == expect.coords
        assert not got.e0_part and not got.e1_part


def test_herm_is_reduced_spin(herm_gauss, herm_quat):
    for H in (herm_gauss, herm_quat):
        RS = H.as_reduced_spin()
        for i in range(H.dim):
            for j in range(H.dim):
                assert H.jprod(H.basis(i), H.basis(j)).coords == \
                    RS.jprod(RS.basis(i), RS.basis(j)).coords


def test_peirce_decompose(J3, herm_quat):
    j0, jh, j1 = peirce_decompose(J3, J3.e1())
    assert (len(j0), len(jh), len(j1)) == (1, 3, 1)
    assert j0[0].coords == J3.e0().coords
    j0, jh, j1 = peirce_decompose(herm_quat, herm_quat.e1())
    assert (len(j0), len(jh), len(j1)) == (1, 4, 1)
    u_containments(J3)
    u_containments(herm_quat)
    with pytest.raises(NotIdempotent):
        peirce_decompose(J3, J3.e0().scale(QQ.scalar(2)))


def test_peirce_nonstandard_idempotent(J3):
    # e = (unit + u)/2 for u in the half space with u^2 = 1 is an idempotent
    u = J3.base_point()
    e = (J3.unit() + u).scale(Fraction(1, 2))
    assert e * e == e
    j0, jh, j1 = peirce_decompose(J3, e)
    assert len(j0) + len(jh) + len(j1) == J3.dim


def test_u_involution_when_u_squares_to_one(J3):
    u = J3.base_point()
    assert u * u == J3.unit()
    rng = random.Random(4)
    for _ in range(200):
        x = J3.random_element(rng)
        y = J3.random_element(rng)
        assert U_op(u, U_op(u, x)) == x
        assert U_op(u, x * y) == U_op(u, x) * U_op(u, y)


def test_u_lin_matches_polarization(J3):
    rng = random.Random(5)
    for _ in range(100):
        x, z, y = (J3.random_element(rng) for _ in range(3))
        assert U_lin(x, z, y) == \
            U_op(x + z, y) - U_op(x, y) - U_op(z, y)


def test_halfspace_invertibility(J3, herm_gauss):
    assert halfspace_invertibility_sample(J3, seed=1, trials=200)["status"] == "pass"
    assert halfspace_invertibility_sample(herm_gauss, seed=1, trials=200)["status"] == "pass"
    split = spin(1, -1, base=[QQ.one(), QQ.zero()])
    rep = halfspace_invertibility_sample(split, seed=1, trials=300)
    assert rep["status"] == "fail" and rep["witnesses"]


def test_jordan_identity_random_herm(herm_quat):
    jordan_identity_random(herm_quat, seed=6, trials=300)


def test_corrupted_structure_constant_caught():
    # negative control: scaling one diagonal entry of the form breaks the
    # U-operator closed forms but not bilinearity; the Jordan identity check
    # still catches a corrupted product table
    J = spin(1, 1, 1)
    orig = J.jprod

    def bad_jprod(x, y):
        out = orig(x, y)
        out.coords[0] = out.coords[0] + x.coords[1] * y.coords[1]  # asymmetric-ish tweak
        return out

    J.jprod = bad_jprod
    with pytest.raises(Exception):
        jordan_identity_random(J, seed=0, trials=100)
    J.jprod = orig
