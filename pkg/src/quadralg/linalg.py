"""Exact dense linear algebra over a FieldCtx (row vectors as lists)."""

from __future__ import annotations

from .errors import DimensionMismatch


def zeros(ctx, n):
    z = ctx.zero()
    return [z] * n


def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def vec_scale(c, a):
    return [c * x for x in a]


def vec_is_zero(a):
    return all(not x for x in a)


def mat_vec(m, v):
    return [sum((c * x for c, x in zip(row, v) if c and x), start=row[0] * 0) for row in m]


def mat_mul(a, b):
    n, k = len(a), len(b)
    cols = len(b[0])
    zero = a[0][0] * 0
    out = [[zero] * cols for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for j in range(k):
            c = row[j]
            if c:
                brow = b[j]
                for t in range(cols):
                    x = brow[t]
                    if x:
                        acc[t] = acc[t] + c * x
    return out


def mat_add(a, b):
    return [vec_add(x, y) for x, y in zip(a, b)]


def mat_sub(a, b):
    return [vec_sub(x, y) for x, y in zip(a, b)]


def mat_scale(c, a):
    return [vec_scale(c, row) for row in a]


def identity(ctx, n):
    z, o = ctx.zero(), ctx.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


class Span:
    """Incrementally built row space with exact Gaussian elimination.

    Rows are kept in echelon form (pivot columns strictly increasing is not
    enforced; each stored row has a pivot column unused by the others).
    """

    def __init__(self, ctx, ncols):
        self.ctx = ctx
        self.ncols = ncols
        self.rows = []
        self.pivots = []  # pivot column per stored row

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def residual(self, v):
        """v reduced against the span; zero iff v is in the span."""
        return self._reduce(v)

    def contains(self, v):
        return vec_is_zero(self._reduce(v))

    def add(self, v):
        """Insert v; returns True when it enlarged the span."""
        if len(v) != self.ncols:
            raise DimensionMismatch("vector length does not match the span")
        r = self._reduce(v)
        for p, c in enumerate(r):
            if c:
                inv_c = 1 / c if self.ctx.is_rationals else self.ctx.one() / c
                r = [x * inv_c for x in r]
                self.rows.append(r)
                self.pivots.append(p)
                return True
        return False

    def basis(self):
        return [list(r) for r in self.rows]


class HybridSpan:
    """Span over a function field with a specialization fast path.

    The rank at a rational specialization never exceeds the generic rank, so a
    vector whose specialization is independent is certainly independent; only
    specialized-dependent vectors fall back to exact reduction.  Over Q this
    degenerates to the exact span.
    """

    def __init__(self, ctx, ncols, rng=None):
        self.ctx = ctx
        self.ncols = ncols
        self.exact_rows = []
        self._exact = None  # lazily built exact Span
        import random as _random
        self._rng = rng or _random.Random(0x5EED)
        self._rat = not ctx.variables
        if self._rat:
            self._exact = Span(ctx, ncols)
        else:
            self._point = None
            self._spec = None

    @property
    def dim(self):
        if self._rat:
            return self._exact.dim
        return len(self.exact_rows)

    def _specialize(self, v):
        from .errors import PoleAtPoint
        from .fields import FieldCtx

        for _ in range(50):
            if self._point is None:
                self._point = [self._rng.randint(1, 10 ** 6) for _ in range(self.ctx.nvars)]
                self._spec = Span(FieldCtx.rationals(), self.ncols)
                ok = True
                for row in self.exact_rows:
                    try:
                        self._spec.add([x.evaluate(self._point) for x in row])
                    except PoleAtPoint:
                        ok = False
                        break
                if not ok:
                    self._point = None
                    continue
            try:
                return [x.evaluate(self._point) for x in v]
            except PoleAtPoint:
                self._point = None
        raise RuntimeError("could not find a pole-free specialization point")

    def add(self, v):
        if self._rat:
            added = self._exact.add(v)
            if added:
                self.exact_rows.append(list(v))
            return added
        if self.add_probable(v):
            return True
        # specialization lost rank: decide exactly
        if self._exact is None or len(self._exact.rows) != len(self.exact_rows):
            self._exact = Span(self.ctx, self.ncols)
            for row in self.exact_rows:
                self._exact.add(row)
        if self._exact.add(v):
            # unlucky point; rebuild the specialized span at a fresh point
            self.exact_rows.append(list(v))
            self._point = None
            return True
        return False

    def add_probable(self, v):
        """Accept only on certified independence (specialized rank grew).

        A False is not a certificate of dependence; callers needing exactness
        must fall back to ``add`` or an exact recomputation.
        """
        if self._rat:
            return self.add(v)
        sv = self._specialize(v)
        if self._spec.add(sv):
            self.exact_rows.append(list(v))
            return True
        return False


def rank(ctx, rows):
    s = Span(ctx, len(rows[0])) if rows else None
    if s is None:
        return 0
    for r in rows:
        s.add(r)
    return s.dim


def solve(ctx, a, b):
    """One solution x of a x = b (a given as list of rows), or None."""
    n = len(a)
    m = len(a[0]) if n else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if aug[i][c]:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv_c = ctx.one() / aug[r][c]
        aug[r] = [x * inv_c for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][m]:
            return None
    x = zeros(ctx, m)
    for row_i, c in enumerate(pivots):
        x[c] = aug[row_i][m]
    return x


def kernel(ctx, a):
    """Basis of the right kernel {x : a x = 0}."""
    n = len(a)
    m = len(a[0]) if n else 0
    rows = [list(r) for r in a]
    piv_of_col = {}
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv_c = ctx.one() / rows[r][c]
        rows[r] = [x * inv_c for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_of_col[c] = r
        r += 1
        if r == n:
            break
    free_cols = [c for c in range(m) if c not in piv_of_col]
    basis = []
    for fc in free_cols:
        v = zeros(ctx, m)
        v[fc] = ctx.one()
        for c, row_i in piv_of_col.items():
            v[c] = -rows[row_i][fc]
        basis.append(v)
    return basis


def inverse(ctx, a):
    """Matrix inverse via Gauss-Jordan; None when singular."""
    n = len(a)
    aug = [list(row) + list(idrow) for row, idrow in zip(a, identity(ctx, n))]
    for c in range(n):
        pr = None
        for i in range(c, n):
            if aug[i][c]:
                pr = i
                break
        if pr is None:
            return None
        aug[c], aug[pr] = aug[pr], aug[c]
        inv_c = ctx.one() / aug[c][c]
        aug[c] = [x * inv_c for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
