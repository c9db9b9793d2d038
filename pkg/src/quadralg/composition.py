"""Composition algebras of dimension 1, 2, 4, 8 by iterated doubling.

An algebra is determined by up to three nonzero structure parameters
(a, b, c).  The fixed basis is 1, i, j, ij, k, ik, jk, (ij)k truncated to the
dimension; products of basis vectors are a scalar multiple of a single basis
vector, so multiplication is table driven.  The doubling step multiplies as

    (x1 + x2 k)(y1 + y2 k) = (x1 y1 + c conj(y2) x2) + (y2 x1 + x2 conj(y1)) k

and the norm doubles as q(x1) - c q(x2), giving the Pfister form <<-a,-b,-c>>.
"""

from __future__ import annotations

import random

from .errors import AlgebraMismatch, IdentityFailed, NormZero, ZeroSlot
from .fields import sample_element
from .quadforms import QuadraticForm, anisotropy, pfister

_BASIS_LABELS = ["1", "i", "j", "ij", "k", "ik", "jk", "(ij)k"]


def fresh_names(ctx, base, n):
    """n variable names built from ``base`` avoiding clashes with ctx."""
    used = set(ctx.variables)
    out = []
    i = 0
    while len(out) < n:
        name = f"{base}{i}"
        if name not in used:
            out.append(name)
        i += 1
    return out


class CompositionAlgebra:
    def __init__(self, ctx, params):
        if len(params) > 3:
            raise ValueError("composition algebras have at most three parameters")
        for p in params:
            if not p:
                raise ZeroSlot("structure parameters must be nonzero")
        self.ctx = ctx
        self.params = list(params)
        self.dim = 1 << len(params)
        self.labels = _BASIS_LABELS[: self.dim]
        self.table = self._build_table()
        self.norm_form = pfister(ctx, [-p for p in params])
        self._partner = None

    def _build_table(self):
        one = self.ctx.one()
        table = [[(one, 0)]]
        for p in self.params:
            half = len(table)
            size = 2 * half
            new = [[None] * size for _ in range(size)]
            for i in range(half):
                for j in range(half):
                    c, k = table[i][j]
                    cj = -1 if j else 1  # conjugation sign of basis j
                    new[i][j] = (c, k)
                    c2, k2 = table[j][i]
                    new[i][j + half] = (c2, k2 + half)
                    new[i + half][j] = (c if cj == 1 else -c, k + half)
                    new[i + half][j + half] = (p * c2 if cj == 1 else -(p * c2), k2)
            table = new
        return table

    def partner_table(self):
        """partner[p][r] = (p2, coeff) with basis_p * basis_p2 = coeff * basis_r.

        Basis products hit each target in exactly one way, which makes single
        output coordinates of a product computable without the full expansion.
        """
        if self._partner is None:
            partner = [[None] * self.dim for _ in range(self.dim)]
            for p in range(self.dim):
                for p2 in range(self.dim):
                    c, r = self.table[p][p2]
                    partner[p][r] = (p2, c)
            self._partner = partner
        return self._partner

    def __eq__(self, other):
        return (isinstance(other, CompositionAlgebra)
                and self.ctx == other.ctx and self.params == other.params)

    def __repr__(self):
        inner = ", ".join(repr(p) for p in self.params)
        return f"CompositionAlgebra(dim={self.dim}, params=[{inner}])"

    # -- element constructors ------------------------------------------------

    def zero(self):
        return AlgElem(self, [self.ctx.zero()] * self.dim)

    def one(self):
        c = [self.ctx.zero()] * self.dim
        c[0] = self.ctx.one()
        return AlgElem(self, c)

    def basis(self, i):
        c = [self.ctx.zero()] * self.dim
        c[i] = self.ctx.one()
        return AlgElem(self, c)

    def element(self, coords):
        coords = list(coords)
        if len(coords) != self.dim:
            raise ValueError(f"need {self.dim} coordinates")
        return AlgElem(self, coords)

    def scalar(self, c):
        out = [self.ctx.zero()] * self.dim
        out[0] = self.ctx.scalar(c) if not self.ctx.is_element(c) else c
        return AlgElem(self, out)

    def skew_basis(self):
        """Basis of {x : conj(x) = -x}; in characteristic 0 these are the
        non-unit basis vectors."""
        return [self.basis(i) for i in range(1, self.dim)]

    def is_division(self, search_bound=25):
        return anisotropy(self.norm_form, search_bound=search_bound)

    def random_element(self, rng, coeff_bound=10, degree_bound=0):
        return AlgElem(self, [sample_element(self.ctx, rng, coeff_bound, degree_bound)
                              for _ in range(self.dim)])

    def lift(self, ext_ctx):
        """The same algebra over an extended scalar field.

        The instance's own tables are embedded rather than rebuilt, so checks
        on a lifted algebra exercise exactly the structure constants stored
        here.
        """
        lifted = CompositionAlgebra(ext_ctx, [ext_ctx.embed(p, self.ctx) for p in self.params])
        lifted.table = [[(ext_ctx.embed(c, self.ctx), r) for c, r in row] for row in self.table]
        lifted.norm_form = QuadraticForm(
            ext_ctx, [ext_ctx.embed(d, self.ctx) for d in self.norm_form.diag])
        return lifted


class AlgElem:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("elements live in different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgElem(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return AlgElem(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlgElem(self.algebra, [-a for a in self.coords])

    def scale(self, c):
        return AlgElem(self.algebra, [c * a for a in self.coords])

    def __mul__(self, other):
        self._check(other)
        table = self.algebra.table
        out = [self.algebra.ctx.zero()] * self.algebra.dim
        for p, cp in enumerate(self.coords):
            if not cp:
                continue
            row = table[p]
            for q, cq in enumerate(other.coords):
                if not cq:
                    continue
                c, r = row[q]
                out[r] = out[r] + cp * cq * c
        return AlgElem(self.algebra, out)

    def conjugate(self):
        out = [-a for a in self.coords]
        out[0] = self.coords[0]
        return AlgElem(self.algebra, out)

    def norm(self):
        return self.algebra.norm_form.eval(self.coords)

    def bil(self, other):
        self._check(other)
        return self.algebra.norm_form.polarize(self.coords, other.coords)

    def trace(self):
        return self.bil(self.algebra.one())

    def inverse(self):
        n = self.norm()
        if not n:
            raise NormZero("element has norm zero")
        inv_n = self.algebra.ctx.one() / n
        return self.conjugate().scale(inv_n)

    def is_zero(self):
        return all(not c for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    __hash__ = None

    def __repr__(self):
        parts = [f"{c!r}*{l}" for c, l in zip(self.coords, self.algebra.labels) if c]
        return " + ".join(parts) if parts else "0"


def multiply(x, y):
    return x * y


def conjugate(x):
    return x.conjugate()


def norm(x):
    return x.norm()


def bil(x, y):
    return x.bil(y)


def inverse(x):
    return x.inverse()


def associator(x, y, z):
    return (x * y) * z - x * (y * z)


def _generic_elements(alg, count):
    """Lift the algebra and return ``count`` elements with fresh indeterminate
    coordinates; used by the symbolic identity checks."""
    names = []
    for t in range(count):
        names += fresh_names(alg.ctx, f"_{'xyzw'[t]}", alg.dim)
    ext = alg.ctx.extend(names)
    lifted = alg.lift(ext)
    gens = ext.gens()[-len(names):]
    elems = [AlgElem(lifted, gens[t * alg.dim:(t + 1) * alg.dim]) for t in range(count)]
    return lifted, elems


def _random_words(rng, x, y, max_len=3):
    word = rng.choice([x, y])
    for _ in range(rng.randint(0, max_len - 1)):
        nxt = rng.choice([x, y])
        word = word * nxt if rng.random() < 0.5 else nxt * word
    return word


def identity_suite(alg, mode="symbolic", seed=0, trials=200):
    """Check the composition-algebra identity families; raises IdentityFailed.

    Families: the rank-2 minimal polynomial, the three bilinear shifts of the
    norm's polarization, alternativity plus random two-generator associativity,
    the two one-sided inverse identities, and the three Moufang identities.
    """
    checks = [
        ("minimal_polynomial", 1,
         lambda x: x * x - x.scale(x.bil(x.algebra.one())) + x.algebra.one().scale(x.norm())),
        ("bilinear_shift_left", 3,
         lambda x, y, z: _scalar_delta(x, (x * y).bil(z) - y.bil(x.conjugate() * z))),
        ("bilinear_shift_right", 3,
         lambda x, y, z: _scalar_delta(x, (x * y).bil(z) - x.bil(z * y.conjugate()))),
        ("bilinear_shift_both", 3,
         lambda x, y, z: _scalar_delta(x, (x * y).bil(z) - (y * z.conjugate()).bil(x.conjugate()))),
        ("alternative_left", 2, lambda x, y: associator(x, x, y)),
        ("alternative_right", 2, lambda x, y: associator(y, x, x)),
        ("kirmse_left", 2, lambda x, y: x * (x.conjugate() * y) - y.scale(x.norm())),
        ("kirmse_right", 2, lambda x, y: (x * y.conjugate()) * y - x.scale(y.norm())),
        ("moufang_middle", 3, lambda x, y, z: (z * x) * (y * z) - z * ((x * y) * z)),
        ("moufang_left", 3, lambda x, y, z: z * (x * (z * y)) - (z * (x * z)) * y),
        ("moufang_right", 3, lambda x, y, z: x * (z * (y * z)) - ((x * z) * y) * z),
    ]
    report = []
    if mode == "symbolic":
        cache = {}
        for name, arity, check in checks:
            if arity not in cache:
                cache[arity] = _generic_elements(alg, arity)
            _, elems = cache[arity]
            delta = check(*elems[:arity])
            if not delta.is_zero():
                raise IdentityFailed(name, witness="symbolic expansion is nonzero")
            report.append({"name": name, "mode": "symbolic", "status": "pass"})
        report.append({"name": "norm_multiplicativity", "mode": "symbolic",
                       "status": _norm_multiplicativity_symbolic(alg)})
    elif mode == "random":
        rng = random.Random(seed)
        for name, arity, check in checks:
            for t in range(trials):
                elems = [alg.random_element(rng) for _ in range(arity)]
                delta = check(*elems)
                if not delta.is_zero():
                    raise IdentityFailed(name, witness=[e.coords for e in elems])
            report.append({"name": name, "mode": "random", "trials": trials,
                           "seed": seed, "status": "pass"})
        for t in range(trials):
            x = alg.random_element(rng)
            y = alg.random_element(rng)
            if (x * y).norm() != x.norm() * y.norm():
                raise IdentityFailed("norm_multiplicativity", witness=[x.coords, y.coords])
            words = [_random_words(rng, x, y) for _ in range(3)]
            if not associator(*words).is_zero():
                raise IdentityFailed("two_generator_associativity",
                                     witness=[w.coords for w in words])
        report.append({"name": "norm_multiplicativity", "mode": "random",
                       "trials": trials, "seed": seed, "status": "pass"})
        report.append({"name": "two_generator_associativity", "mode": "random",
                       "trials": trials, "seed": seed, "status": "pass"})
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report


def _scalar_delta(x, value):
    """Wrap a scalar difference as an element so every check returns one."""
    out = [x.algebra.ctx.zero()] * x.algebra.dim
    out[0] = value
    return AlgElem(x.algebra, out)


def _norm_multiplicativity_symbolic(alg):
    _, (x, y) = _generic_elements(alg, 2)
    if (x * y).norm() != x.norm() * y.norm():
        raise IdentityFailed("norm_multiplicativity", witness="symbolic expansion is nonzero")
    return "pass"


def conjugation_antiautomorphism_symbolic(alg):
    """conj(xy) = conj(y) conj(x), expanded over indeterminate coordinates."""
    _, (x, y) = _generic_elements(alg, 2)
    if (x * y).conjugate() != y.conjugate() * x.conjugate():
        raise IdentityFailed("conjugation_antiautomorphism")
    return True
