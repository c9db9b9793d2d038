"""Root-group sequences for Moufang quadrangles in characteristic not 2.

The data is a Jordan algebra J (reduced spin or hermitian 2x2 over a
quadratic pair) with base point u in the half space, plus a special J-module
X (possibly zero).  U1 and U3 are copies of the group W = X0 x J0 with

    [a1, t1] + [a2, t2] = [a1 + a2, t1 + t2 + (a2, a1)/2]

and U2, U4 are copies of (J_half, +).  The three nontrivial commutator
relations and the collection algorithm below give the normal-form group U+.

Convention: [g, h] = g^-1 h^-1 g h, so each printed relation
[x_i(p), x_j(q)^-1] = C yields the transposition x_j(q) x_i(p) =
x_i(p) C x_j(q); corrections land strictly between the transposed letters.
"""

from __future__ import annotations

import random

from . import linalg
from .errors import CtxMismatch, MismatchAgainstExample, ConstructionError
from .fields import sample_element
from .jmodule import SpecialJModule, zero_module
from .jordan import HermMat2, ReducedSpin
from .quadforms import PointedQuadSpace
from .quadrangular import (
    Component,
    PseudoQuadraticModule,
    PseudoQuadraticSpace,
    QuadrangularAlgebra,
    _x0_coords_to_module,
)


class RootSystemCtx:
    """Carriers and commutator data for the four root groups."""

    def __init__(self, M, u_mid=None, x0_basis=None, x0_reader=None):
        J = M.J
        if isinstance(J, ReducedSpin):
            space = J.space
        elif isinstance(J, HermMat2):
            space = J.quad_pair_space()
        else:
            raise ConstructionError("J must be of reduced spin or hermitian type")
        self.M = M
        self.J = J
        self.field = M.field
        self.space = space
        if u_mid is None:
            u_mid = list(space.base)
        self.u_mid = u_mid
        self.u = J.half_element(u_mid)
        if not (self.u * self.u == J.unit()):
            raise ConstructionError("base point must square to the unit")
        self.vdim = J.half_dim
        if x0_basis is None:
            if M.xdim == 0:
                x0_basis = []
            else:
                from .jmodule import module_peirce

                x0_basis = module_peirce(M, check_containments=False).x0_basis
        self.component = Component(self.field, x0_basis, reader=x0_reader) \
            if x0_basis else None
        self.x0_dim = len(x0_basis) if x0_basis else 0

    # -- constructors for the four specialization families ----------------------

    @classmethod
    def from_quadratic_form(cls, space):
        return cls(zero_module(ReducedSpin(space)))

    @classmethod
    def from_involutory(cls, L):
        return cls(zero_module(HermMat2(L)))

    @classmethod
    def from_pseudoquadratic(cls, P):
        M = PseudoQuadraticModule(P)
        basis = []
        field = P.field
        for i in range(P.n):
            for t in range(P.L.dim):
                v = [field.zero()] * M.xdim
                v[M.idx(0, i, t)] = field.one()
                basis.append(v)

        def reader(w):
            return [w[M.idx(0, i, t)] for i in range(P.n) for t in range(P.L.dim)]

        return cls(M, x0_basis=basis, x0_reader=reader)

    @classmethod
    def from_etype(cls, qa):
        be = qa.backend
        basis, reader, _pairs = _etype_component(be)
        return cls(be.module, u_mid=qa.space.base, x0_basis=basis, x0_reader=reader)

    # -- W group -----------------------------------------------------------------

    def w_zero(self):
        return WElem(self, [self.field.zero()] * self.x0_dim, self.field.zero())

    def w_elem(self, a, t):
        return WElem(self, list(a), t)

    def v_zero(self):
        return [self.field.zero()] * self.vdim

    def random_w(self, rng, coeff_bound=6, degree_bound=0):
        a = [sample_element(self.field, rng, coeff_bound, degree_bound)
             for _ in range(self.x0_dim)]
        t = sample_element(self.field, rng, coeff_bound, degree_bound)
        return WElem(self, a, t)

    def random_v(self, rng, coeff_bound=6, degree_bound=0):
        return [sample_element(self.field, rng, coeff_bound, degree_bound)
                for _ in range(self.vdim)]

    def _embed_x0(self, a):
        return self.component.from_coords(a) if self.component else []

    def _pair_j0(self, a1, a2):
        """(a1, a2) for a1, a2 in X0; lands in J0 = k e0."""
        if not self.component:
            return self.field.zero()
        val = self.M.skew_form(self._embed_x0(a1), self._embed_x0(a2))
        if any(c for c in val.coords[1:]):
            raise MismatchAgainstExample("skew pairing of X0 elements left J0")
        return val.coords[0]

    # -- printed commutator relations ---------------------------------------------

    def comm13(self, w1, w2):
        """[x1(a1,t1), x3(a2,t2)^-1] = x2((u.a1, a2)); value in J_half."""
        if not self.component:
            return self.v_zero()
        ua1 = self.M.act(self.u, self._embed_x0(w1.a))
        val = self.M.skew_form(ua1, self._embed_x0(w2.a))
        if val.e0_part or val.e1_part:
            raise MismatchAgainstExample("[U1, U3] commutator left J_half")
        return val.half_part

    def comm24(self, v1, v2):
        """[x2(v1), x4(v2)^-1] = x3(0, 2 (v1 v2) e0)."""
        j = self.J.half_element(v1) * self.J.half_element(v2)
        prod = j * self.J.e0()
        if any(c for c in prod.coords[1:]):
            raise MismatchAgainstExample("(v1 v2) e0 left J0")
        two = self.field.scalar(2)
        return WElem(self, [self.field.zero()] * self.x0_dim, two * prod.coords[0])

    def comm14(self, w, v):
        """[x1(a,t), x4(v)^-1] = x2((u.a, v.(u.a))/2 + 2 (U_u t e0) v)
                                 x3(v.(u.a), U_v U_u t e0)."""
        J, M = self.J, self.M
        half = self.field.one() / self.field.scalar(2)
        te0 = J.e0().scale(w.t)
        uu_t = J.U(self.u, te0)
        v_elem = J.half_element(v)
        term2 = (uu_t * v_elem).scale(self.field.scalar(2))
        if term2.e0_part or term2.e1_part:
            raise MismatchAgainstExample("2 (U_u t) v left J_half")
        u3_t = J.U(v_elem, uu_t)
        if any(c for c in u3_t.coords[1:]):
            raise MismatchAgainstExample("U_v U_u t left J0")
        if self.component:
            ua = M.act(self.u, self._embed_x0(w.a))
            vua = M.act(v_elem, ua)
            pair = M.skew_form(ua, vua)
            if pair.e0_part or pair.e1_part:
                raise MismatchAgainstExample("(u.a, v.(u.a)) left J_half")
            u2 = [half * c + d for c, d in zip(pair.half_part, term2.half_part)]
            a3 = self.component.to_coords(vua)
        else:
            u2 = list(term2.half_part)
            a3 = []
        return u2, WElem(self, a3, u3_t.coords[0])


class WElem:
    """[a, t] with a in X0 and t the coefficient of e0 in J0."""

    __slots__ = ("ctx", "a", "t")

    def __init__(self, ctx, a, t):
        self.ctx = ctx
        self.a = a
        self.t = t

    def __add__(self, other):
        if self.ctx is not other.ctx:
            raise CtxMismatch("W elements from different root systems")
        half = self.ctx.field.one() / self.ctx.field.scalar(2)
        corr = half * self.ctx._pair_j0(other.a, self.a)
        return WElem(self.ctx, linalg.vec_add(self.a, other.a), self.t + other.t + corr)

    def __neg__(self):
        return WElem(self.ctx, [-c for c in self.a], -self.t)

    def __eq__(self, other):
        return isinstance(other, WElem) and self.a == other.a and self.t == other.t

    __hash__ = None

    def is_zero(self):
        return not self.t and all(not c for c in self.a)

    def __repr__(self):
        return f"[{self.a!r}, {self.t!r}]"


def w_add(w1, w2):
    return w1 + w2


def w_neg(w):
    return -w


class RootWord:
    """Normal form x1(w1) x2(v2) x3(w3) x4(v4)."""

    __slots__ = ("ctx", "w1", "v2", "w3", "v4")

    def __init__(self, ctx, w1=None, v2=None, w3=None, v4=None):
        self.ctx = ctx
        self.w1 = w1 if w1 is not None else ctx.w_zero()
        self.v2 = list(v2) if v2 is not None else ctx.v_zero()
        self.w3 = w3 if w3 is not None else ctx.w_zero()
        self.v4 = list(v4) if v4 is not None else ctx.v_zero()

    def __eq__(self, other):
        return (isinstance(other, RootWord) and self.w1 == other.w1
                and self.v2 == other.v2 and self.w3 == other.w3 and self.v4 == other.v4)

    __hash__ = None

    def is_identity(self):
        return (self.w1.is_zero() and self.w3.is_zero()
                and all(not c for c in self.v2) and all(not c for c in self.v4))

    def letters(self):
        return [(1, self.w1), (2, self.v2), (3, self.w3), (4, self.v4)]

    def __repr__(self):
        return f"x1({self.w1!r}) x2({self.v2!r}) x3({self.w3!r}) x4({self.v4!r})"


def _push(ctx, nf, level, payload):
    """Multiply the normal form nf on the right by one generator letter."""
    w1, v2, w3, v4 = nf
    if level == 4:
        return (w1, v2, w3, linalg.vec_add(v4, payload))
    if level == 3:
        return (w1, v2, w3 + payload, v4)
    if level == 2:
        d = ctx.comm24(payload, v4)
        return (w1, linalg.vec_add(v2, payload), w3 + d, v4)
    # level 1: pass x4, then x3, then x2
    c14, d14 = ctx.comm14(payload, v4)
    c13 = ctx.comm13(payload, w3)
    v2n = linalg.vec_add(linalg.vec_add(v2, c13), c14)
    return (w1 + payload, v2n, w3 + d14, v4)


def word_mul(g, h):
    """Normal form of g h via leftward collection through the relations."""
    if g.ctx is not h.ctx:
        raise CtxMismatch("words from different root systems")
    nf = (g.w1, g.v2, g.w3, g.v4)
    for level, payload in h.letters():
        nf = _push(g.ctx, nf, level, payload)
    return RootWord(g.ctx, *nf)


def word_inverse(g):
    """Inverse by pushing the reversed, negated letters."""
    ctx = g.ctx
    nf = (ctx.w_zero(), ctx.v_zero(), ctx.w_zero(), ctx.v_zero())
    for level, payload in reversed(g.letters()):
        neg = -payload if isinstance(payload, WElem) else [-c for c in payload]
        nf = _push(ctx, nf, level, neg)
    return RootWord(ctx, *nf)


def word_random(ctx, rng, coeff_bound=5, degree_bound=0):
    return RootWord(ctx,
                    ctx.random_w(rng, coeff_bound, degree_bound),
                    ctx.random_v(rng, coeff_bound, degree_bound),
                    ctx.random_w(rng, coeff_bound, degree_bound),
                    ctx.random_v(rng, coeff_bound, degree_bound))


def w_group_report(ctx, seed=0, trials=500, coeff_bound=6, degree_bound=0):
    """W is a group and its commutators land in the central {0} x J0 slice."""
    rng = random.Random(seed)
    z = ctx.w_zero()
    for _ in range(trials):
        w1 = ctx.random_w(rng, coeff_bound, degree_bound)
        w2 = ctx.random_w(rng, coeff_bound, degree_bound)
        w3 = ctx.random_w(rng, coeff_bound, degree_bound)
        if (w1 + w2) + w3 != w1 + (w2 + w3):
            raise MismatchAgainstExample(f"W associativity failed: {w1!r}, {w2!r}, {w3!r}")
        if w1 + (-w1) != z or (-w1) + w1 != z or w1 + z != w1:
            raise MismatchAgainstExample(f"W inverse/identity failed at {w1!r}")
        comm = (-w1) + ((-w2) + (w1 + w2))
        if any(c for c in comm.a):
            raise MismatchAgainstExample("W commutator left {0} x J0")
    return {"name": "w_group", "mode": "random", "trials": trials, "seed": seed,
            "status": "pass"}


def word_assoc_report(ctx, seed=0, trials=500, coeff_bound=5, degree_bound=0):
    """Associativity of the collected product on random normal-form triples.

    This exercises every commutator relation and is the strongest internal
    consistency check on the stored transposition data."""
    rng = random.Random(seed)
    for _ in range(trials):
        g = word_random(ctx, rng, coeff_bound, degree_bound)
        h = word_random(ctx, rng, coeff_bound, degree_bound)
        k = word_random(ctx, rng, coeff_bound, degree_bound)
        if word_mul(word_mul(g, h), k) != word_mul(g, word_mul(h, k)):
            raise MismatchAgainstExample("U+ associativity failed")
        gi = word_inverse(g)
        if not word_mul(g, gi).is_identity() or not word_mul(gi, g).is_identity():
            raise MismatchAgainstExample("U+ inverse failed")
    return {"name": "word_mul_associativity", "mode": "random", "trials": trials,
            "seed": seed, "status": "pass"}


# -- the four printed specializations -------------------------------------------


def _etype_component(backend):
    from .quadrangular import _etype_x0_basis

    basis, reader, pairs = _etype_x0_basis(backend.T, backend.data.c1_params[0])
    return basis, reader, pairs


def specialize(ctx, target, ref=None, seed=0, samples=25, coeff_bound=5,
               degree_bound=0):
    """Compare the generic commutators against the printed closed forms.

    ``target`` is one of quadratic_form | involutory | pseudo_quadratic |
    etype; ``ref`` carries the reference data (the pseudo-quadratic space or
    the quadrangular algebra) where needed.  Returns an empty-diff report or
    raises MismatchAgainstExample.
    """
    rng = random.Random(seed)
    checks = {
        "quadratic_form": _check_quadratic_form,
        "involutory": _check_involutory,
        "pseudo_quadratic": _check_pseudo_quadratic,
        "etype": _check_etype,
    }
    if target not in checks:
        raise ValueError(f"unknown specialization target {target!r}")
    diffs = checks[target](ctx, ref, rng, samples, coeff_bound, degree_bound)
    if diffs:
        raise MismatchAgainstExample(diffs[0])
    return {"name": f"specialize_{target}", "mode": "grid+random", "samples": samples,
            "seed": seed, "status": "pass", "diff": []}


def _vs_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
    field = ctx.field
    vs = [[field.one() if i == j else field.zero() for i in range(ctx.vdim)]
          for j in range(ctx.vdim)]
    for _ in range(samples):
        vs.append(ctx.random_v(rng, coeff_bound, degree_bound))
    return vs


def _ts_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
    field = ctx.field
    ts = [field.one(), field.scalar(-1)]
    for _ in range(samples):
        ts.append(sample_element(field, rng, coeff_bound, degree_bound))
    return ts


def _check_quadratic_form(ctx, ref, rng, samples, coeff_bound, degree_bound):
    """x2(t v) x3(q(v) t) for [x1(t), x4(v)^-1]; x3(f(v1, v2)) for [x2, x4]."""
    diffs = []
    form = ctx.space.form
    for v1 in _vs_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
        for v2 in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            got = ctx.comm24(v1, v2)
            if got.t != form.polarize(v1, v2) or any(c for c in got.a):
                diffs.append(("comm24", v1, v2))
    for t in _ts_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
        w = ctx.w_elem([], t)
        for v in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            u2, w3 = ctx.comm14(w, v)
            if u2 != [t * c for c in v]:
                diffs.append(("comm14-u2", t, v))
            if w3.t != form.eval(v) * t or any(c for c in w3.a):
                diffs.append(("comm14-u3", t, v))
        got = ctx.comm13(w, ctx.w_elem([], t))
        if any(c for c in got):
            diffs.append(("comm13", t))
    return diffs


def _check_involutory(ctx, ref, rng, samples, coeff_bound, degree_bound):
    """x2(alpha ell) x3(conj(ell) alpha ell) for [x1(alpha), x4(ell)^-1];
    x3(conj(l1) l2 + conj(l2) l1) for [x2(l1), x4(l2)^-1]."""
    L = ctx.J.L
    diffs = []
    for v1 in _vs_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
        l1 = L.element(v1)
        for v2 in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            l2 = L.element(v2)
            got = ctx.comm24(v1, v2)
            expect = l1.conjugate() * l2 + l2.conjugate() * l1
            if any(c for c in expect.coords[1:]):
                diffs.append(("comm24-notscalar", v1, v2))
            elif got.t != expect.coords[0] or any(c for c in got.a):
                diffs.append(("comm24", v1, v2))
    for al in _ts_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
        w = ctx.w_elem([], al)
        for v in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            ell = L.element(v)
            u2, w3 = ctx.comm14(w, v)
            if L.element(u2) != ell.scale(al):
                diffs.append(("comm14-u2", al, v))
            expect3 = (ell.conjugate() * ell).scale(al)
            if any(c for c in expect3.coords[1:]) or w3.t != expect3.coords[0] \
                    or any(c for c in w3.a):
                diffs.append(("comm14-u3", al, v))
        if any(c for c in ctx.comm13(w, ctx.w_elem([], al))):
            diffs.append(("comm13", al))
    return diffs


def _check_pseudo_quadratic(ctx, ref, rng, samples, coeff_bound, degree_bound):
    """Against x2(h(a1, a2)); x3(conj(l1) l2 + conj(l2) l1);
    x2(theta(a, l) + alpha l) x3(a l, conj(l) alpha l).

    The reference formulas are the printed translations through the bijection
    [a, t] -> [a, t - pi(a)] onto X x L_sigma."""
    P = ref
    L = P.L
    M = ctx.M
    field = ctx.field
    diffs = []
    half = field.one() / field.scalar(2)

    def x_of(coords):
        # X0 coordinates -> list of L-vector entries
        x = [L.zero() for _ in range(P.n)]
        for i in range(P.n):
            x[i] = L.element(coords[i * L.dim:(i + 1) * L.dim])
        return x

    def ws(n):
        out = []
        for i in range(ctx.x0_dim):
            a = [field.zero()] * ctx.x0_dim
            a[i] = field.one()
            out.append(ctx.w_elem(a, field.zero()))
        for _ in range(n):
            out.append(ctx.random_w(rng, coeff_bound, degree_bound))
        return out

    for w1 in ws(samples):
        for w2 in ws(0):
            got = ctx.comm13(w1, w2)
            expect = P.h(x_of(w1.a), x_of(w2.a))
            if L.element(got) != expect:
                diffs.append(("comm13", w1.a, w2.a))
    for v1 in _vs_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
        l1 = L.element(v1)
        for v2 in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            l2 = L.element(v2)
            got = ctx.comm24(v1, v2)
            expect = l1.conjugate() * l2 + l2.conjugate() * l1
            if got.t != expect.coords[0] or any(c for c in got.a):
                diffs.append(("comm24", v1, v2))
    for w in ws(samples):
        a = x_of(w.a)
        for v in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            ell = L.element(v)
            u2, w3 = ctx.comm14(w, v)
            theta = P.h(a, a).scale(half) * ell  # pi(a) ell
            expect2 = theta + ell.scale(w.t)
            if L.element(u2) != expect2:
                diffs.append(("comm14-u2", w.a, v))
            a_ell = [xi * ell for xi in a]
            got_a = x_of(w3.a)
            if any((g - e).coords != [field.zero()] * L.dim for g, e in zip(got_a, a_ell)):
                diffs.append(("comm14-u3a", w.a, v))
            expect3 = (ell.conjugate() * ell).scale(w.t)
            if w3.t != expect3.coords[0]:
                diffs.append(("comm14-u3t", w.a, v))
    return diffs


def _check_etype(ctx, ref, rng, samples, coeff_bound, degree_bound):
    """Against x2(h(a1, a2)); x3(0, f(v1, v2)); x2(theta(a, v) + t v)
    x3(a . v, q(v) t), through the quadrangular algebra's tables."""
    qa = ref
    field = ctx.field
    diffs = []

    def ws(n):
        out = []
        for i in range(ctx.x0_dim):
            a = [field.zero()] * ctx.x0_dim
            a[i] = field.one()
            out.append(ctx.w_elem(a, field.zero()))
        for _ in range(n):
            out.append(ctx.random_w(rng, coeff_bound, degree_bound))
        return out

    for w1 in ws(samples):
        for w2 in ws(0):
            if ctx.comm13(w1, w2) != qa.h(w1.a, w2.a):
                diffs.append(("comm13", w1.a, w2.a))
    form = qa.space.form
    for v1 in _vs_for_grid(ctx, rng, samples, coeff_bound, degree_bound):
        for v2 in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            got = ctx.comm24(v1, v2)
            if got.t != form.polarize(v1, v2) or any(c for c in got.a):
                diffs.append(("comm24", v1, v2))
    for w in ws(samples):
        for v in _vs_for_grid(ctx, rng, 0, coeff_bound, degree_bound):
            u2, w3 = ctx.comm14(w, v)
            expect2 = [a + w.t * b for a, b in zip(qa.theta(w.a, v), v)]
            if u2 != expect2:
                diffs.append(("comm14-u2", w.a, w.t, v))
            if w3.a != qa.dot(w.a, v) or w3.t != form.eval(v) * w.t:
                diffs.append(("comm14-u3", w.a, w.t, v))
    return diffs


def commutator_tables(ctx, seed=0, samples=5, coeff_bound=5, degree_bound=0,
                      symbolic=True):
    """The three commutator maps evaluated on basis grids, JSON-ready.

    In symbolic mode the basis grid *is* the content (the maps are linear or
    quadratic in each slot and the grid determines them); sampled random
    arguments are appended for cross-checking."""
    from .fields import scalar_str

    field = ctx.field
    rng = random.Random(seed)
    out = {"x0_dim": ctx.x0_dim, "vdim": ctx.vdim, "relations": {}}

    def render_vec(v):
        return [scalar_str(field, c) for c in v]

    rel13 = []
    for i in range(ctx.x0_dim):
        for j in range(ctx.x0_dim):
            a1 = [field.one() if k == i else field.zero() for k in range(ctx.x0_dim)]
            a2 = [field.one() if k == j else field.zero() for k in range(ctx.x0_dim)]
            rel13.append({"a1": i, "a2": j,
                          "u2": render_vec(ctx.comm13(ctx.w_elem(a1, field.zero()),
                                                      ctx.w_elem(a2, field.zero())))})
    out["relations"]["comm13"] = rel13
    rel24 = []
    for i in range(ctx.vdim):
        for j in range(ctx.vdim):
            v1 = [field.one() if k == i else field.zero() for k in range(ctx.vdim)]
            v2 = [field.one() if k == j else field.zero() for k in range(ctx.vdim)]
            w = ctx.comm24(v1, v2)
            rel24.append({"v1": i, "v2": j, "u3_t": scalar_str(field, w.t)})
    out["relations"]["comm24"] = rel24
    rel14 = []
    for i in range(ctx.x0_dim):
        for j in range(ctx.vdim):
            a = [field.one() if k == i else field.zero() for k in range(ctx.x0_dim)]
            v = [field.one() if k == j else field.zero() for k in range(ctx.vdim)]
            u2, w3 = ctx.comm14(ctx.w_elem(a, field.zero()), v)
            rel14.append({"a": i, "v": j, "u2": render_vec(u2),
                          "u3_a": render_vec(w3.a), "u3_t": scalar_str(field, w3.t)})
    out["relations"]["comm14"] = rel14
    rel14_t = []
    for j in range(ctx.vdim):
        v = [field.one() if k == j else field.zero() for k in range(ctx.vdim)]
        u2, w3 = ctx.comm14(ctx.w_elem([field.zero()] * ctx.x0_dim, field.one()), v)
        rel14_t.append({"t": 1, "v": j, "u2": render_vec(u2),
                        "u3_a": render_vec(w3.a), "u3_t": scalar_str(field, w3.t)})
    out["relations"]["comm14_t"] = rel14_t
    if not symbolic:
        sampled = []
        for _ in range(samples):
            w = ctx.random_w(rng, coeff_bound, degree_bound)
            v = ctx.random_v(rng, coeff_bound, degree_bound)
            u2, w3 = ctx.comm14(w, v)
            sampled.append({"w": [render_vec(w.a), scalar_str(field, w.t)],
                            "v": render_vec(v), "u2": render_vec(u2),
                            "u3": [render_vec(w3.a), scalar_str(field, w3.t)]})
        out["relations"]["comm14_sampled"] = sampled
    return out
