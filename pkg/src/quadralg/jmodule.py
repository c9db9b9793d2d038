"""Special modules for Jordan algebras with a skew pairing into the algebra.

A module is stored as one action matrix per Jordan basis element plus a skew
form; the verifier operations (action axiom, skew compatibility, module
Peirce split, connecting morphism, orbit span) are exact linear algebra over
the scalar field.  Symbolic checks run the same computation over an extended
function field with indeterminate coordinates.
"""

from __future__ import annotations

import random

from . import linalg
from .composition import fresh_names
from .errors import AxiomFailed, DecompositionFailed, NotConnecting
from .fields import sample_element
from .jordan import JordanElem


class SpecialJModule:
    """Explicit special J-module: action matrices per Jordan basis element.

    ``actions[b]`` is the matrix of x -> (basis b) . x.  ``skew`` maps a pair
    of module basis indices to J-coordinates; it may be None for the zero
    pairing (quadratic-form and involutory root-group data use that).
    """

    def __init__(self, J, xdim, actions, skew=None):
        self.J = J
        self.field = J.field
        self.xdim = xdim
        self.actions = actions
        self.skew = skew
        if len(actions) != J.dim:
            raise ValueError("one action matrix per Jordan basis element")
        # sparse row views: per matrix, per row, the (column, coeff) pairs
        self._rows = [[[(j, c) for j, c in enumerate(row) if c] for row in mat]
                      for mat in actions]

    # -- module operations ---------------------------------------------------

    def act_basis(self, b, xv):
        zero = self.field.zero()
        out = []
        for row in self._rows[b]:
            acc = zero
            for j, c in row:
                xj = xv[j]
                if xj:
                    acc = acc + c * xj
            out.append(acc)
        return out

    def act(self, j, xv):
        out = None
        for b, c in enumerate(j.coords):
            if not c:
                continue
            term = [c * t for t in self.act_basis(b, xv)]
            out = term if out is None else linalg.vec_add(out, term)
        return out if out is not None else [self.field.zero()] * self.xdim

    def action_matrix(self, j):
        """Dense matrix of x -> j . x (fast path for basis elements)."""
        one = self.field.one()
        nz = [(b, c) for b, c in enumerate(j.coords) if c]
        if len(nz) == 1 and nz[0][1] == one:
            return self.actions[nz[0][0]]
        out = [[self.field.zero()] * self.xdim for _ in range(self.xdim)]
        for b, c in nz:
            for i in range(self.xdim):
                acc = out[i]
                for (jcol, v) in self._rows[b][i]:
                    acc[jcol] = acc[jcol] + c * v
        return out

    def skew_form(self, xv, yv):
        if self.skew is None:
            return self.J.zero()
        acc = [self.field.zero()] * self.J.dim
        for i, xi in enumerate(xv):
            if not xi:
                continue
            row = self.skew[i]
            for j, yj in enumerate(yv):
                if not yj:
                    continue
                entry = row[j]
                if entry is None:
                    continue
                c = xi * yj
                acc = [a + c * e for a, e in zip(acc, entry)]
        return JordanElem(self.J, acc)

    def random_x(self, rng, coeff_bound=10, degree_bound=0):
        return [sample_element(self.field, rng, coeff_bound, degree_bound)
                for _ in range(self.xdim)]

    def zero_x(self):
        return [self.field.zero()] * self.xdim

    def lift(self, ext):
        src = self.field
        actions = [[[ext.embed(c, src) for c in row] for row in mat] for mat in self.actions]
        skew = None
        if self.skew is not None:
            skew = [[[ext.embed(c, src) for c in entry] if entry is not None else None
                     for entry in row] for row in self.skew]
        return SpecialJModule(self.J.lift(ext), self.xdim, actions, skew)


def _unit_vec(field, n, i):
    v = [field.zero()] * n
    v[i] = field.one()
    return v


def zero_module(J):
    """The zero special J-module (first class, used by the root-group data)."""
    return SpecialJModule(J, 0, [[] for _ in range(J.dim)], None)


def _generic_setup(M, nx, nj):
    """Lift M and mint nx indeterminate module vectors and nj Jordan elements."""
    field = M.field
    names = []
    for t in range(nx):
        names += fresh_names(field, f"_m{t}", M.xdim)
    for t in range(nj):
        names += fresh_names(field, f"_j{t}", M.J.dim)
    ext = field.extend(names)
    lifted = M.lift(ext)
    gens = ext.gens()[-len(names):] if names else []
    xs = [gens[t * M.xdim:(t + 1) * M.xdim] for t in range(nx)]
    off = nx * M.xdim
    js = [JordanElem(lifted.J, gens[off + t * M.J.dim: off + (t + 1) * M.J.dim])
          for t in range(nj)]
    return lifted, xs, js


def check_module(M, mode="random", seed=0, trials=200, coeff_bound=10, degree_bound=0,
                 symbolic_limit=8):
    """Verify the special-module axioms.

    (i)-(iv) hold structurally (the action is stored as matrices); that the
    unit acts as the identity is checked exactly.  The quadratic axiom
    U_j j' . x = j.(j'.(j.x)) and its bilinearized form
    (j j') . x = (j.(j'.x) + j'.(j.x)) / 2 are both checked, symbolically when
    the module is small enough, on seeded samples otherwise.
    """
    report = []
    unit = M.J.unit()
    for i in range(M.xdim):
        v = _unit_vec(M.field, M.xdim, i)
        if M.act(unit, v) != v:
            raise AxiomFailed("module_unit_action", witness=i)
    report.append({"name": "module_unit_action", "mode": "exact", "status": "pass"})

    def defect_v(mod, j, jp, xv):
        lhs = mod.act(mod.J.U(j, jp), xv)
        rhs = mod.act(j, mod.act(jp, mod.act(j, xv)))
        return linalg.vec_sub(lhs, rhs)

    def defect_vprime(mod, j, jp, xv):
        lhs = mod.act(j * jp, xv)
        half = mod.field.one() / mod.field.scalar(2)
        rhs = linalg.vec_scale(half, linalg.vec_add(
            mod.act(j, mod.act(jp, xv)), mod.act(jp, mod.act(j, xv))))
        return linalg.vec_sub(lhs, rhs)

    use_symbolic = mode == "symbolic" or (mode == "auto" and M.xdim <= symbolic_limit)
    if use_symbolic:
        lifted, xs, js = _generic_setup(M, 1, 2)
        for name, fn in (("module_axiom_v", defect_v), ("module_axiom_v_prime", defect_vprime)):
            d = fn(lifted, js[0], js[1], xs[0])
            if not linalg.vec_is_zero(d):
                raise AxiomFailed(name, witness="symbolic expansion is nonzero")
            report.append({"name": name, "mode": "symbolic", "status": "pass"})
    else:
        rng = random.Random(seed)
        for name, fn in (("module_axiom_v", defect_v), ("module_axiom_v_prime", defect_vprime)):
            for _ in range(trials):
                j = M.J.random_element(rng, coeff_bound, degree_bound)
                jp = M.J.random_element(rng, coeff_bound, degree_bound)
                xv = M.random_x(rng, coeff_bound, degree_bound)
                d = fn(M, j, jp, xv)
                if not linalg.vec_is_zero(d):
                    raise AxiomFailed(name, witness=(j.coords, jp.coords, xv))
            report.append({"name": name, "mode": "random", "seed": seed,
                           "trials": trials, "status": "pass"})
    return report


def check_skew_compat(M, mode="random", seed=0, trials=200, coeff_bound=10, degree_bound=0,
                      symbolic_limit=8):
    """Both sides of the skew-compatibility equivalence, tested independently:

      left : U_j (x,y) = (j.x, j.y)
      right: j (x,y) = ((j.x, y) + (x, j.y)) / 2
    """
    report = []

    def defect_left(mod, j, xv, yv):
        lhs = mod.J.U(j, mod.skew_form(xv, yv))
        rhs = mod.skew_form(mod.act(j, xv), mod.act(j, yv))
        return lhs - rhs

    def defect_right(mod, j, xv, yv):
        lhs = j * mod.skew_form(xv, yv)
        half = mod.field.one() / mod.field.scalar(2)
        rhs = (mod.skew_form(mod.act(j, xv), yv)
               + mod.skew_form(xv, mod.act(j, yv))).scale(half)
        return lhs - rhs

    degenerate = M.skew is None or all(
        entry is None or all(not c for c in entry)
        for row in M.skew for entry in row)
    use_symbolic = mode == "symbolic" or (mode == "auto" and M.xdim <= symbolic_limit)
    if use_symbolic:
        lifted, xs, js = _generic_setup(M, 2, 1)
        for name, fn in (("skew_compat_left", defect_left), ("skew_compat_right", defect_right)):
            d = fn(lifted, js[0], xs[0], xs[1])
            if not d.is_zero():
                raise AxiomFailed(name, witness="symbolic expansion is nonzero")
            report.append({"name": name, "mode": "symbolic", "status": "pass",
                           "degenerate_zero_form": degenerate})
    else:
        rng = random.Random(seed)
        for name, fn in (("skew_compat_left", defect_left), ("skew_compat_right", defect_right)):
            for _ in range(trials):
                j = M.J.random_element(rng, coeff_bound, degree_bound)
                xv = M.random_x(rng, coeff_bound, degree_bound)
                yv = M.random_x(rng, coeff_bound, degree_bound)
                d = fn(M, j, xv, yv)
                if not d.is_zero():
                    raise AxiomFailed(name, witness=(j.coords, xv, yv))
            report.append({"name": name, "mode": "random", "seed": seed, "trials": trials,
                           "status": "pass", "degenerate_zero_form": degenerate})
    return report


class ModulePeirce:
    def __init__(self, x0_basis, x1_basis):
        self.x0_basis = x0_basis
        self.x1_basis = x1_basis

    @property
    def dims(self):
        return len(self.x0_basis), len(self.x1_basis)


def module_peirce(M, check_containments=True):
    """Split X = X0 + X1 by the e0-action eigenvalues 1 and 0.

    Also asserts the Peirce multiplication containments on basis elements and,
    when a skew form is present, its block containments.
    """
    field = M.field
    n = M.xdim
    a0 = M.actions[0]
    ident = linalg.identity(field, n)
    x0 = linalg.kernel(field, linalg.mat_sub(a0, ident))
    x1 = linalg.kernel(field, a0)
    if len(x0) + len(x1) != n:
        raise DecompositionFailed("module eigenspaces do not fill X")
    # e1 must act complementarily: e0.x + e1.x = x
    e1 = M.J.e1()
    for i in range(n):
        v = _unit_vec(field, n, i)
        if linalg.vec_add(M.act_basis(0, v), M.act(e1, v)) != v:
            raise DecompositionFailed("e0 + e1 does not act as the identity")
    mp = ModulePeirce(x0, x1)
    if check_containments:
        _check_peirce_containments(M, mp)
    return mp


def _check_peirce_containments(M, mp):
    field = M.field
    spans = []
    for basis_vecs in (mp.x0_basis, mp.x1_basis):
        s = linalg.Span(field, M.xdim)
        for b in basis_vecs:
            s.add(b)
        spans.append(s)
    j0, jh, j1 = M.J.peirce_spaces()
    blocks = [(0, j0), (1, jh), (2, j1)]
    for xi, xbasis in ((0, mp.x0_basis), (1, mp.x1_basis)):
        for wb, jbasis in blocks:
            for j in jbasis:
                for xv in xbasis:
                    out = M.act(j, xv)
                    if linalg.vec_is_zero(out):
                        continue
                    if wb == 1:  # J_half swaps the components
                        target = 1 - xi
                    else:
                        diag = wb // 2  # 0 for J0, 1 for J1
                        if diag != xi:
                            raise AxiomFailed("module_peirce_kill", witness=(wb, xi))
                        target = xi
                    if not spans[target].contains(out):
                        raise AxiomFailed("module_peirce_containment", witness=(wb, xi))
    if M.skew is not None:
        for xi, xb in ((0, mp.x0_basis), (1, mp.x1_basis)):
            for yi, yb in ((0, mp.x0_basis), (1, mp.x1_basis)):
                for xv in xb:
                    for yv in yb:
                        val = M.skew_form(xv, yv)
                        _assert_skew_block(val, xi, yi)
    return True


def _assert_skew_block(val, xi, yi):
    e0c, e1c, mid = val.e0_part, val.e1_part, val.half_part
    if xi == yi:
        # (X_i, X_i) lands in J_i
        if any(c for c in mid):
            raise AxiomFailed("skew_block_half_residue", witness=(xi, yi))
        if xi == 0 and e1c:
            raise AxiomFailed("skew_block_diag", witness=(xi, yi))
        if xi == 1 and e0c:
            raise AxiomFailed("skew_block_diag", witness=(xi, yi))
    else:
        if e0c or e1c:
            raise AxiomFailed("skew_block_mixed", witness=(xi, yi))


def connecting(M, u, xv):
    """x -> u . x for u in the half space with u^2 = 1."""
    if not (u * u == M.J.unit()):
        raise NotConnecting("u^2 must be the unit")
    return M.act(u, xv)


def orbit_span(M, u, xv, x0_dim=None, max_rounds=None):
    """Dimension of the smallest subspace containing xv that is closed under
    x -> v.(u.x) for v running over the half-space basis.

    Growth stops early once the span reaches ``x0_dim`` (the orbit lives in
    X0, so that is the ceiling).  Over a function field the growth phase uses
    specialization-certified acceptance, which is exact whenever the ceiling
    is reached; otherwise the closure is recomputed with exact arithmetic.
    """
    field = M.field
    if linalg.vec_is_zero(xv):
        return 0
    half_mats = [M.actions[b] for b in range(1, M.J.dim - 1)]
    u_mat = M.action_matrix(u)

    def grow(span, certified):
        accept = span.add if certified else span.add_probable
        accept(xv)
        frontier = [xv]
        rounds = 0
        while frontier:
            rounds += 1
            if max_rounds is not None and rounds > max_rounds:
                break
            new_frontier = []
            for y in frontier:
                uy = linalg.mat_vec(u_mat, y)
                for mat in half_mats:
                    cand = linalg.mat_vec(mat, uy)
                    if accept(cand):
                        new_frontier.append(cand)
                        if x0_dim is not None and span.dim >= x0_dim:
                            return span.dim
            frontier = new_frontier
        return span.dim

    dim = grow(linalg.HybridSpan(field, M.xdim), certified=False)
    if x0_dim is not None and dim >= x0_dim:
        return dim
    if field.is_rationals:
        return dim
    # below the ceiling: a specialized rejection might have hidden growth, so
    # certify by redoing the closure with exact rejections
    return grow(linalg.HybridSpan(field, M.xdim), certified=True)
