"""Jordan algebras with a distinguished pair of supplementary idempotents.

Two families: the reduced spin factor of a pointed quadratic space, and the
hermitian 2x2 matrices H(M2(L), conj-transpose) for L a quadratic field
extension or quaternion algebra with its standard involution (a quadratic
pair, so the diagonal Peirce blocks are one-dimensional over the ground
field).

Coordinates are uniform for both kinds: (t0, middle block, t1) against the
basis (e0, half-space basis, e1).
"""

from __future__ import annotations

import random

from . import linalg
from .errors import CtxMismatch, DecompositionFailed, IdentityFailed, NotIdempotent
from .fields import sample_element
from .quadforms import PointedQuadSpace, QuadraticForm


class JordanElem:
    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.coords = list(coords)

    def _check(self, other):
        if self.ctx != other.ctx:
            raise CtxMismatch("elements live in different Jordan algebras")

    def __add__(self, other):
        self._check(other)
        return JordanElem(self.ctx, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return JordanElem(self.ctx, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return JordanElem(self.ctx, [-a for a in self.coords])

    def scale(self, c):
        return JordanElem(self.ctx, [c * a for a in self.coords])

    def __mul__(self, other):
        return self.ctx.jprod(self, other)

    def is_zero(self):
        return all(not c for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, JordanElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coords == other.coords

    __hash__ = None

    @property
    def e0_part(self):
        return self.coords[0]

    @property
    def e1_part(self):
        return self.coords[-1]

    @property
    def half_part(self):
        return self.coords[1:-1]

    def __repr__(self):
        return f"JordanElem({self.coords!r})"


class JordanCtx:
    """Shared surface of both Jordan algebra kinds."""

    kind = None

    @property
    def dim(self):
        return self.half_dim + 2

    def zero(self):
        return JordanElem(self, [self.field.zero()] * self.dim)

    def unit(self):
        c = [self.field.zero()] * self.dim
        c[0] = self.field.one()
        c[-1] = self.field.one()
        return JordanElem(self, c)

    def e0(self):
        c = [self.field.zero()] * self.dim
        c[0] = self.field.one()
        return JordanElem(self, c)

    def e1(self):
        c = [self.field.zero()] * self.dim
        c[-1] = self.field.one()
        return JordanElem(self, c)

    def basis(self, i):
        c = [self.field.zero()] * self.dim
        c[i] = self.field.one()
        return JordanElem(self, c)

    def element(self, coords):
        coords = list(coords)
        if len(coords) != self.dim:
            raise ValueError(f"need {self.dim} coordinates")
        return JordanElem(self, coords)

    def half_element(self, mid):
        mid = list(mid)
        if len(mid) != self.half_dim:
            raise ValueError(f"half space has dimension {self.half_dim}")
        return JordanElem(self, [self.field.zero()] + mid + [self.field.zero()])

    def diag_element(self, t0, t1):
        z = self.field.zero()
        return JordanElem(self, [t0] + [z] * self.half_dim + [t1])

    def random_element(self, rng, coeff_bound=10, degree_bound=0):
        return JordanElem(self, [sample_element(self.field, rng, coeff_bound, degree_bound)
                                 for _ in range(self.dim)])

    # -- operators -------------------------------------------------------------

    def U(self, x, y):
        """U_x y = 2 x(xy) - x^2 y."""
        return (x * (x * y)).scale(self.field.scalar(2)) - (x * x) * y

    def U_lin(self, x, z, y):
        return self.U(x + z, y) - self.U(x, y) - self.U(z, y)

    def mult_matrix(self, e):
        cols = [(e * self.basis(j)).coords for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def peirce_spaces(self):
        """Standard Peirce bases w.r.t. e1: (J0, Jhalf, J1)."""
        return ([self.e0()], [self.basis(i) for i in range(1, self.dim - 1)], [self.e1()])


class ReducedSpin(JordanCtx):
    """k e0 + V + k e1 over a pointed quadratic space (V, q, base)."""

    kind = "reduced_spin"

    def __init__(self, space):
        if not isinstance(space, PointedQuadSpace):
            raise TypeError("ReducedSpin needs a pointed quadratic space")
        self.space = space
        self.field = space.ctx
        self.half_dim = space.dim
        self._half = self.field.one() / self.field.scalar(2)

    def __eq__(self, other):
        return (isinstance(other, ReducedSpin) and self.space.form == other.space.form
                and self.space.base == other.space.base)

    def __repr__(self):
        return f"ReducedSpin({self.space.form!r})"

    def base_point(self):
        return self.half_element(self.space.base)

    def jprod(self, x, y):
        x._check(y)
        if x.ctx is not self and x.ctx != self:
            raise CtxMismatch("foreign element")
        half = self._half
        f = self.space.form.polarize(x.half_part, y.half_part)
        t0 = x.coords[0] * y.coords[0] + half * f
        t1 = x.coords[-1] * y.coords[-1] + half * f
        cx = half * (x.coords[0] + x.coords[-1])
        cy = half * (y.coords[0] + y.coords[-1])
        mid = [cx * b + cy * a for a, b in zip(x.half_part, y.half_part)]
        return JordanElem(self, [t0] + mid + [t1])

    def half_invertible(self, mid):
        """In the half space, invertibility is q(v) != 0."""
        return bool(self.space.form.eval(mid))

    def lift(self, ext):
        form = QuadraticForm(ext, [ext.embed(d, self.field) for d in self.space.form.diag])
        base = [ext.embed(c, self.field) for c in self.space.base]
        return ReducedSpin(PointedQuadSpace(form, base))


class HermMat2(JordanCtx):
    """Fixed points of conjugate-transpose on 2x2 matrices over L.

    L is given as a dim-2 or dim-4 composition algebra with its standard
    involution; its fixed field is the ground field, so the diagonal
    coefficients are scalars.
    """

    kind = "herm_mat2"

    def __init__(self, L):
        if L.dim not in (2, 4):
            raise ValueError("L must be a quadratic extension or a quaternion algebra")
        self.L = L
        self.field = L.ctx
        self.half_dim = L.dim
        self._half = self.field.one() / self.field.scalar(2)

    def __eq__(self, other):
        return isinstance(other, HermMat2) and self.L == other.L

    def __repr__(self):
        return f"HermMat2({self.L!r})"

    def base_point(self):
        return self.half_element(self.L.one().coords)

    def _scalar_of(self, ell):
        if any(c for c in ell.coords[1:]):
            raise DecompositionFailed("product left the one-dimensional diagonal block")
        return ell.coords[0]

    def jprod(self, x, y):
        x._check(y)
        half = self._half
        L = self.L
        ell = L.element(x.half_part)
        m = L.element(y.half_part)
        ells, ms = ell.conjugate(), m.conjugate()
        t0 = x.coords[0] * y.coords[0] + half * self._scalar_of(ells * m + ms * ell)
        t1 = x.coords[-1] * y.coords[-1] + half * self._scalar_of(ell * ms + m * ells)
        mid = (m.scale(half * x.coords[0]) + ell.scale(half * y.coords[0])
               + m.scale(half * x.coords[-1]) + ell.scale(half * y.coords[-1]))
        return JordanElem(self, [t0] + mid.coords + [t1])

    def half_invertible(self, mid):
        return bool(self.L.element(mid).norm())

    def quad_pair_space(self):
        """The pointed quadratic space (L, norm, 1) of the quadratic pair."""
        return PointedQuadSpace(self.L.norm_form, self.L.one().coords)

    def as_reduced_spin(self):
        return ReducedSpin(self.quad_pair_space())

    def lift(self, ext):
        return HermMat2(self.L.lift(ext))


def jprod(x, y):
    return x * y


def U_op(x, y):
    return x.ctx.U(x, y)


def U_lin(x, z, y):
    return x.ctx.U_lin(x, z, y)


def peirce_decompose(ctx, e):
    """Eigenspace split for multiplication by an idempotent.

    Returns bases (J0, Jhalf, J1) and verifies the multiplication containments
    on all basis products.
    """
    if not (e * e == e):
        raise NotIdempotent("peirce decomposition needs an idempotent")
    field = ctx.field
    m = ctx.mult_matrix(e)
    n = ctx.dim
    spaces = []
    for lam in (field.zero(), field.one() / field.scalar(2), field.one()):
        shifted = [[m[i][j] - (lam if i == j else field.zero()) for j in range(n)]
                   for i in range(n)]
        spaces.append([ctx.element(v) for v in linalg.kernel(field, shifted)])
    j0, jh, j1 = spaces
    if len(j0) + len(jh) + len(j1) != n:
        raise DecompositionFailed("eigenspaces do not fill the algebra")
    by_space = {0: j0, 1: jh, 2: j1}

    def space_of(z):
        # exact membership via span checks
        for idx, basis_vecs in by_space.items():
            if not basis_vecs:
                continue
            span = linalg.Span(field, n)
            for b in basis_vecs:
                span.add(b.coords)
            if span.contains(z.coords):
                return idx
        return None

    # J_i J_j = 0 (i != j in {0, 1}), J_i J_half in J_half, J_half^2 in J0 + J1
    for x in j0:
        for y in j1:
            if not (x * y).is_zero():
                raise DecompositionFailed("J0 J1 != 0")
    for diag in (j0, j1):
        for x in diag:
            for y in jh:
                z = x * y
                if not z.is_zero() and space_of(z) != 1:
                    raise DecompositionFailed("J_i J_half escaped J_half")
    span01 = linalg.Span(field, n)
    for b in j0 + j1:
        span01.add(b.coords)
    for x in jh:
        for y in jh:
            z = x * y
            if not z.is_zero() and not span01.contains(z.coords):
                raise DecompositionFailed("J_half^2 escaped J0 + J1")
    return j0, jh, j1


def u_containments(ctx, spaces=None):
    """Check U_{J_m} J_l <= J_{2m-l} on all basis triples (linearized U)."""
    if spaces is None:
        spaces = ctx.peirce_spaces()
    weights = {0: 0, 1: 1, 2: 2}  # doubled eigenvalues: J0 -> 0, Jhalf -> 1, J1 -> 2
    field = ctx.field
    spans = []
    for basis_vecs in spaces:
        span = linalg.Span(field, ctx.dim)
        for b in basis_vecs:
            span.add(b.coords)
        spans.append(span)
    for mi, m_basis in enumerate(spaces):
        for li, l_basis in enumerate(spaces):
            target = 2 * weights[mi] - weights[li]  # doubled index of J_{2m-l}
            for x in m_basis:
                for z in m_basis:
                    for y in l_basis:
                        val = ctx.U_lin(x, z, y) if x is not z else ctx.U(x, y).scale(field.scalar(2))
                        if val.is_zero():
                            continue
                        if target not in (0, 1, 2) or not spans[target].contains(val.coords):
                            raise IdentityFailed("u_peirce_containment",
                                                 witness=(mi, li, val.coords))
    return True


def jordan_identity_symbolic(ctx):
    """(x^2 y) x = x^2 (y x) over indeterminate coordinates."""
    from .composition import fresh_names

    names = fresh_names(ctx.field, "_jx", ctx.dim) + fresh_names(ctx.field, "_jy", ctx.dim)
    ext = ctx.field.extend(names)
    lifted = ctx.lift(ext)
    gens = ext.gens()[-len(names):]
    x = lifted.element(gens[: ctx.dim])
    y = lifted.element(gens[ctx.dim:])
    xx = x * x
    if not ((xx * y) * x - xx * (y * x)).is_zero():
        raise IdentityFailed("jordan_identity")
    if not ((x * y) - (y * x)).is_zero():
        raise IdentityFailed("commutativity")
    return True


def jordan_identity_random(ctx, seed=0, trials=200, coeff_bound=10, degree_bound=0):
    rng = random.Random(seed)
    for _ in range(trials):
        x = ctx.random_element(rng, coeff_bound, degree_bound)
        y = ctx.random_element(rng, coeff_bound, degree_bound)
        xx = x * x
        if not ((xx * y) * x - xx * (y * x)).is_zero():
            raise IdentityFailed("jordan_identity", witness=(x.coords, y.coords))
    return True


def halfspace_invertibility_sample(ctx, seed=0, trials=200, coeff_bound=10, degree_bound=0):
    """Sample the hypothesis that nonzero half-space elements are invertible."""
    rng = random.Random(seed)
    failures = []
    tried = 0
    for _ in range(trials):
        mid = [sample_element(ctx.field, rng, coeff_bound, degree_bound)
               for _ in range(ctx.half_dim)]
        if all(not c for c in mid):
            continue
        tried += 1
        if not ctx.half_invertible(mid):
            failures.append(mid)
    return {"name": "halfspace_invertibility", "mode": "random", "seed": seed,
            "trials": tried, "status": "pass" if not failures else "fail",
            "witnesses": failures[:3]}
