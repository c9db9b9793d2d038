"""The algebra C1 (x) C2 with involution conj (x) conj.

Elements are coordinate matrices indexed by (basis of C1) x (basis of C2).
Skew elements (under the tensor involution) are exactly the elements supported
on row 0 and column 0 with zero unit coordinate; they are stored as a pair of
one-sided skew components so the Albert form, sharp and the grading assertions
are componentwise.
"""

from __future__ import annotations

from .composition import AlgElem
from .errors import AlgebraMismatch, IsotropicSkew, ResultNotSkew
from .fields import sample_element


class TensorAlgebra:
    def __init__(self, c1, c2):
        if c1.ctx != c2.ctx:
            raise AlgebraMismatch("factors must share the scalar field")
        self.ctx = c1.ctx
        self.c1 = c1
        self.c2 = c2
        self.dim = c1.dim * c2.dim
        self.skew_dim = c1.dim + c2.dim - 2

    def __eq__(self, other):
        return (isinstance(other, TensorAlgebra)
                and self.c1 == other.c1 and self.c2 == other.c2)

    def __repr__(self):
        return f"TensorAlgebra({self.c1!r}, {self.c2!r})"

    def zero(self):
        z = self.ctx.zero()
        return TensorElem(self, [[z] * self.c2.dim for _ in range(self.c1.dim)])

    def one(self):
        x = self.zero()
        x.coords[0][0] = self.ctx.one()
        return x

    def basis(self, p, q):
        x = self.zero()
        x.coords[p][q] = self.ctx.one()
        return x

    def element(self, coords):
        return TensorElem(self, [list(row) for row in coords])

    def pure(self, x1, x2):
        """The decomposable element x1 (x) x2."""
        return TensorElem(self, [[a * b for b in x2.coords] for a in x1.coords])

    def random_element(self, rng, coeff_bound=10, degree_bound=0):
        return TensorElem(self, [[sample_element(self.ctx, rng, coeff_bound, degree_bound)
                                  for _ in range(self.c2.dim)] for _ in range(self.c1.dim)])

    def skew(self, s1, s2):
        return SkewElem(self, s1, s2)

    def skew_basis(self):
        """The dim C1 + dim C2 - 2 canonical skew elements."""
        out = []
        for i in range(1, self.c1.dim):
            out.append(SkewElem(self, self.c1.basis(i), self.c2.zero()))
        for i in range(1, self.c2.dim):
            out.append(SkewElem(self, self.c1.zero(), self.c2.basis(i)))
        return out

    def random_skew(self, rng, coeff_bound=10, degree_bound=0):
        s1 = [self.ctx.zero()] + [sample_element(self.ctx, rng, coeff_bound, degree_bound)
                                  for _ in range(self.c1.dim - 1)]
        s2 = [self.ctx.zero()] + [sample_element(self.ctx, rng, coeff_bound, degree_bound)
                                  for _ in range(self.c2.dim - 1)]
        return SkewElem(self, self.c1.element(s1), self.c2.element(s2))

    def lift(self, ext_ctx):
        return TensorAlgebra(self.c1.lift(ext_ctx), self.c2.lift(ext_ctx))

    def embed_elem(self, x, src_alg):
        src = src_alg.ctx
        return TensorElem(self, [[self.ctx.embed(c, src) for c in row] for row in x.coords])

    def flat(self, p, q):
        return p * self.c2.dim + q

    def unflat(self, i):
        return divmod(i, self.c2.dim)


class TensorElem:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("elements live in different tensor algebras")

    def __add__(self, other):
        self._check(other)
        return TensorElem(self.algebra, [[a + b for a, b in zip(ra, rb)]
                                         for ra, rb in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return TensorElem(self.algebra, [[a - b for a, b in zip(ra, rb)]
                                         for ra, rb in zip(self.coords, other.coords)])

    def __neg__(self):
        return TensorElem(self.algebra, [[-a for a in row] for row in self.coords])

    def scale(self, c):
        return TensorElem(self.algebra, [[c * a for a in row] for row in self.coords])

    def __mul__(self, other):
        self._check(other)
        alg = self.algebra
        d1, d2 = alg.c1.dim, alg.c2.dim
        t1, t2 = alg.c1.table, alg.c2.table
        zero = alg.ctx.zero()
        out = [[zero] * d2 for _ in range(d1)]
        ycols = other.coords
        for p in range(d1):
            rowx = self.coords[p]
            t1p = t1[p]
            for q in range(d2):
                cx = rowx[q]
                if not cx:
                    continue
                t2q = t2[q]
                for p2 in range(d1):
                    rowy = ycols[p2]
                    c1, r1 = t1p[p2]
                    cc = cx * c1
                    outr = out[r1]
                    for q2 in range(d2):
                        cy = rowy[q2]
                        if not cy:
                            continue
                        c2, r2 = t2q[q2]
                        outr[r2] = outr[r2] + cc * cy * c2
        return TensorElem(alg, out)

    def involution(self):
        out = []
        for p, row in enumerate(self.coords):
            if p == 0:
                out.append([row[0]] + [-c for c in row[1:]])
            else:
                out.append([-row[0]] + list(row[1:]))
        return TensorElem(self.algebra, out)

    def is_zero(self):
        return all(not c for row in self.coords for c in row)

    def flat_coords(self):
        return [c for row in self.coords for c in row]

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    __hash__ = None

    def __repr__(self):
        parts = []
        for p, row in enumerate(self.coords):
            for q, c in enumerate(row):
                if c:
                    parts.append(f"{c!r}*({self.algebra.c1.labels[p]}(x){self.algebra.c2.labels[q]})")
        return " + ".join(parts) if parts else "0"


class SkewElem:
    """s1 (x) 1 + 1 (x) s2 with s1, s2 skew in their factors."""

    __slots__ = ("algebra", "s1", "s2")

    def __init__(self, algebra, s1, s2):
        if s1.coords[0] or s2.coords[0]:
            raise ResultNotSkew("components must have zero unit coordinate")
        self.algebra = algebra
        self.s1 = s1
        self.s2 = s2

    def to_tensor(self):
        x = self.algebra.zero()
        for p in range(1, self.algebra.c1.dim):
            x.coords[p][0] = self.s1.coords[p]
        for q in range(1, self.algebra.c2.dim):
            x.coords[0][q] = self.s2.coords[q]
        return x

    def __add__(self, other):
        return SkewElem(self.algebra, self.s1 + other.s1, self.s2 + other.s2)

    def __sub__(self, other):
        return SkewElem(self.algebra, self.s1 - other.s1, self.s2 - other.s2)

    def __neg__(self):
        return SkewElem(self.algebra, -self.s1, -self.s2)

    def scale(self, c):
        return SkewElem(self.algebra, self.s1.scale(c), self.s2.scale(c))

    def is_zero(self):
        return self.s1.is_zero() and self.s2.is_zero()

    def __eq__(self, other):
        if not isinstance(other, SkewElem):
            return NotImplemented
        return self.s1 == other.s1 and self.s2 == other.s2

    __hash__ = None

    def albert(self):
        """q_A: s1 (x) 1 + 1 (x) s2 -> q1(s1) - q2(s2)."""
        return self.s1.norm() - self.s2.norm()

    def albert_bil(self, other):
        return self.s1.bil(other.s1) - self.s2.bil(other.s2)

    def sharp(self):
        return SkewElem(self.algebra, self.s1, -self.s2)

    def inverse(self):
        qa = self.albert()
        if not qa:
            raise IsotropicSkew("skew element is isotropic for the Albert form")
        return self.sharp().scale(-(self.algebra.ctx.one() / qa))

    def coords_list(self):
        """Coordinates in the canonical skew basis order."""
        return list(self.s1.coords[1:]) + list(self.s2.coords[1:])

    def __repr__(self):
        return f"SkewElem({self.s1!r}, {self.s2!r})"


def t_multiply(x, y):
    return x * y


def t_involution(x):
    return x.involution()


def albert(s):
    return s.albert()


def sharp(s):
    return s.sharp()


def s_inverse(s):
    return s.inverse()


def as_skew(x, strict=True):
    """Split a TensorElem into skew components; ResultNotSkew on residue."""
    alg = x.algebra
    if strict:
        if x.coords[0][0]:
            raise ResultNotSkew("unit coordinate is nonzero")
        for p in range(1, alg.c1.dim):
            for q in range(1, alg.c2.dim):
                if x.coords[p][q]:
                    raise ResultNotSkew(f"residue at ({p},{q})")
    s1 = alg.c1.element([alg.ctx.zero()] + [x.coords[p][0] for p in range(1, alg.c1.dim)])
    s2 = alg.c2.element([alg.ctx.zero()] + [x.coords[0][q] for q in range(1, alg.c2.dim)])
    return SkewElem(alg, s1, s2)


def skew_pair(x, y, strict=True):
    """(x, y) -> x conj(y) - y conj(x), decomposed into the skew grading."""
    d = x * y.involution() - y * x.involution()
    return as_skew(d, strict=strict)


def lmul_matrix(alg, s):
    """Dense matrix of x -> s x in the flat tensor basis (s skew or tensor)."""
    if isinstance(s, SkewElem):
        s = s.to_tensor()
    n = alg.dim
    zero = alg.ctx.zero()
    mat = [[zero] * n for _ in range(n)]
    d1, d2 = alg.c1.dim, alg.c2.dim
    t1, t2 = alg.c1.table, alg.c2.table
    for p in range(d1):
        rows = s.coords[p]
        t1p = t1[p]
        for q in range(d2):
            cs = rows[q]
            if not cs:
                continue
            t2q = t2[q]
            for p2 in range(d1):
                c1, r1 = t1p[p2]
                cc = cs * c1
                for q2 in range(d2):
                    c2, r2 = t2q[q2]
                    mat[r1 * d2 + r2][p2 * d2 + q2] = mat[r1 * d2 + r2][p2 * d2 + q2] + cc * c2
    return mat


def product_coord(x, y, r1, r2):
    """Single coordinate (r1, r2) of x * y, via the partner tables."""
    alg = x.algebra
    part1 = alg.c1.partner_table()
    part2 = alg.c2.partner_table()
    total = alg.ctx.zero()
    for p, rowx in enumerate(x.coords):
        e1 = part1[p][r1]
        if e1 is None:
            continue
        p2, c1 = e1
        rowy = y.coords[p2]
        for q, cx in enumerate(rowx):
            if not cx:
                continue
            q2, c2 = part2[q][r2]
            cy = rowy[q2]
            if not cy:
                continue
            total = total + cx * cy * c1 * c2
    return total


def skew_pair_fast(x, y):
    """skew_pair computed on the skew coordinates only, via partner tables.

    Skips the residue assertion; the grading is identically zero outside the
    skew slots once conjugation is an anti-automorphism, and the equivalence
    with the full skew_pair is covered by tests.  Used by hot loops.
    """
    alg = x.algebra
    yc = y.involution()
    xc = x.involution()
    s1 = [alg.ctx.zero()] * alg.c1.dim
    s2 = [alg.ctx.zero()] * alg.c2.dim
    for r in range(1, alg.c1.dim):
        s1[r] = product_coord(x, yc, r, 0) - product_coord(y, xc, r, 0)
    for r in range(1, alg.c2.dim):
        s2[r] = product_coord(x, yc, 0, r) - product_coord(y, xc, 0, r)
    return SkewElem(alg, alg.c1.element(s1), alg.c2.element(s2))


def skew_pair_is_nonzero(x, y):
    """Whether x conj(y) - y conj(x) != 0, scanning one skew slot at a time."""
    alg = x.algebra
    yc = y.involution()
    xc = x.involution()
    for r in range(1, alg.c1.dim):
        if product_coord(x, yc, r, 0) != product_coord(y, xc, r, 0):
            return True
    for r in range(1, alg.c2.dim):
        if product_coord(x, yc, 0, r) != product_coord(y, xc, 0, r):
            return True
    return False


def peirce_project(alg, a, x):
    """Split x into (x0, x1) for the idempotent pair built from i1, i2.

    Uses the closed form x0 = (x + (1/a) (i1 . ) (x) (i2 . ) x) / 2, which is
    independent of the base point choice; requires i1^2 = i2^2 = a.
    """
    d1, d2 = alg.c1.dim, alg.c2.dim
    t1, t2 = alg.c1.table, alg.c2.table
    zero = alg.ctx.zero()
    twisted = [[zero] * d2 for _ in range(d1)]
    for p in range(d1):
        row = x.coords[p]
        c1, r1 = t1[1][p]
        for q in range(d2):
            c = row[q]
            if not c:
                continue
            c2, r2 = t2[1][q]
            twisted[r1][r2] = twisted[r1][r2] + c * c1 * c2
    half = alg.ctx.one() / alg.ctx.scalar(2)
    inv_a = alg.ctx.one() / a
    tw = TensorElem(alg, twisted)
    x0 = (x + tw.scale(inv_a)).scale(half)
    x1 = x - x0
    return x0, x1
