"""Exact scalar arithmetic over Q and over rational function fields Q(t1,...,tn).

Rationals are plain ``fractions.Fraction`` (already canonical: reduced,
positive denominator).  Function-field elements are ``RatFunc`` values, a
quotient of two ``MultiPoly`` in canonical form, so that structural equality
coincides with semantic equality.  Every value is immutable and safe to share.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import DivisionByZero, ParseError, PoleAtPoint, ZeroInput

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class MultiPoly:
    """Multivariate polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples (length ``nvars``) to nonzero coefficients.
    The term order used for leading terms and printing is graded lexicographic.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None, _trusted=False):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            clean = {}
            for exps, c in terms.items():
                c = _as_fraction(c)
                if len(exps) != nvars:
                    raise ValueError("exponent tuple length mismatch")
                if c:
                    clean[tuple(exps)] = c
            self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def const(cls, nvars, c):
        c = _as_fraction(c)
        if not c:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: c}, _trusted=True)

    @classmethod
    def gen(cls, nvars, i):
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): _ONE}, _trusted=True)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_const(self):
        if not self.terms:
            return True
        if len(self.terms) > 1:
            return False
        return not any(next(iter(self.terms)))

    def const_value(self):
        if not self.terms:
            return _ZERO
        (exps, c), = self.terms.items()
        if any(exps):
            raise ValueError("not a constant polynomial")
        return c

    def is_monomial(self):
        return len(self.terms) == 1

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps)
            if s is None:
                out[exps] = c
            else:
                s = s + c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
        return MultiPoly(self.nvars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps)
            if s is None:
                out[exps] = -c
            else:
                s = s - c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
        return MultiPoly(self.nvars, out, _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()}, _trusted=True)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.nvars)
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ea, ca), = a.items()
            if not any(ea):
                return MultiPoly(self.nvars, {e: v * ca for e, v in b.items()}, _trusted=True)
            out = {}
            for eb, cb in b.items():
                out[tuple(map(sum, zip(ea, eb)))] = ca * cb
            return MultiPoly(self.nvars, out, _trusted=True)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(map(sum, zip(ea, eb)))
                s = out.get(key)
                if s is None:
                    out[key] = ca * cb
                else:
                    s = s + ca * cb
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return MultiPoly(self.nvars, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    # -- term order helpers --------------------------------------------------

    @staticmethod
    def _grlex_key(exps):
        return (sum(exps), exps)

    def leading(self):
        """Leading (exponent, coefficient) pair under graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=MultiPoly._grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: MultiPoly._grlex_key(t[0]), reverse=True)

    # -- content / primitive part -------------------------------------------

    def rat_content(self):
        """Positive rational c with self/c integer-coefficient and primitive."""
        if not self.terms:
            return _ONE
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    def primitive(self):
        """(content, primitive part); primitive part has positive leading coeff."""
        if not self.terms:
            return _ONE, self
        c = self.rat_content()
        _, lead = self.leading()
        if lead < 0:
            c = -c
        return c, self * (1 / c)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError("evaluation point has wrong length")
        point = [_as_fraction(p) for p in point]
        total = _ZERO
        for exps, c in self.terms.items():
            v = c
            for p, e in zip(point, exps):
                if e:
                    v = v * p ** e
            total += v
        return total

    def extend(self, nvars):
        """View in a larger variable list; existing variables keep their index."""
        if nvars == self.nvars:
            return self
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable list")
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(nvars, {e + pad: c for e, c in self.terms.items()}, _trusted=True)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.terms!r})"


# -- polynomial gcd machinery (primitive pseudo-remainder sequence) ----------


def _split_by_main(f, var):
    """Coefficients of f seen as univariate in ``var``: degree -> MultiPoly."""
    coeffs = {}
    for exps, c in f.terms.items():
        d = exps[var]
        reduced = exps[:var] + (0,) + exps[var + 1:]
        coeff = coeffs.setdefault(d, {})
        coeff[reduced] = coeff.get(reduced, _ZERO) + c
    out = {}
    for d, terms in coeffs.items():
        terms = {e: c for e, c in terms.items() if c}
        if terms:
            out[d] = MultiPoly(f.nvars, terms, _trusted=True)
    return out


def _join_main(coeffs, var):
    nvars = None
    terms = {}
    for d, poly in coeffs.items():
        nvars = poly.nvars
        for exps, c in poly.terms.items():
            key = exps[:var] + (d,) + exps[var + 1:]
            terms[key] = c
    return MultiPoly(nvars, terms, _trusted=True)


def _shift_main(f, var, k):
    return MultiPoly(
        f.nvars,
        {e[:var] + (e[var] + k,) + e[var + 1:]: c for e, c in f.terms.items()},
        _trusted=True,
    )


def poly_divmod_exact(f, g):
    """Exact quotient f/g; raises ValueError when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero():
        return f
    if g.is_const():
        return f * (1 / g.const_value())
    q = MultiPoly.zero(f.nvars)
    rem = f
    ge, gc = g.leading()
    while not rem.is_zero():
        re, rc = rem.leading()
        diff = tuple(a - b for a, b in zip(re, ge))
        if any(d < 0 for d in diff):
            raise ValueError("inexact polynomial division")
        t = MultiPoly(f.nvars, {diff: rc / gc}, _trusted=True)
        q = q + t
        rem = rem - t * g
    return q


def _content_in(f, var):
    coeffs = list(_split_by_main(f, var).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_const():
            break
    _, g = g.primitive()
    return g


def _pseudo_rem(f, g, var):
    """Pseudo-remainder of f by g w.r.t. ``var``."""
    fd = _split_by_main(f, var)
    gd = _split_by_main(g, var)
    df, dg = max(fd), max(gd)
    lg = gd[dg]
    rem = f
    while True:
        rd = _split_by_main(rem, var)
        if not rd:
            return rem
        dr = max(rd)
        if dr < dg:
            return rem
        lr = rd[dr]
        rem = rem * lg - _shift_main(g, var, dr - dg) * lr
    # not reached


def _monomial_gcd(f, g):
    exps = None
    for p in (f, g):
        mins = [min(e[i] for e in p.terms) for i in range(p.nvars)]
        exps = mins if exps is None else [min(a, b) for a, b in zip(exps, mins)]
    return MultiPoly(f.nvars, {tuple(exps): _ONE}, _trusted=True)


def poly_gcd(f, g):
    """Primitive gcd with positive leading coefficient (1 for coprime inputs).

    Uses the primitive pseudo-remainder sequence, recursing on the number of
    active variables; contents are split off and combined recursively.
    """
    if f.is_zero():
        return g.primitive()[1] if not g.is_zero() else f
    if g.is_zero():
        return f.primitive()[1]
    if f.is_const() or g.is_const():
        return MultiPoly.const(f.nvars, 1)
    if f.is_monomial() or g.is_monomial():
        return _monomial_gcd(f, g)
    var = None
    for i in reversed(range(f.nvars)):
        if f.degree_in(i) > 0 and g.degree_in(i) > 0:
            var = i
            break
    if var is None:
        # no shared variable: gcd of contents only, which is 1 after primitivization
        return MultiPoly.const(f.nvars, 1)
    cf = _content_in(f, var)
    cg = _content_in(g, var)
    a = poly_divmod_exact(f, cf)
    b = poly_divmod_exact(g, cg)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b, var)
        a = b
        if r.is_zero():
            b = r
        else:
            b = poly_divmod_exact(r, _content_in(r, var))
    _, a = a.primitive()
    result = poly_gcd(cf, cg) * a
    _, result = result.primitive()
    return result


def poly_sqrt(f):
    """Exact square root of a polynomial, or None when f is not a square."""
    if f.is_zero():
        return f
    if f.is_const():
        r = _fraction_sqrt(f.const_value())
        return None if r is None else MultiPoly.const(f.nvars, r)
    content, pp = f.primitive()
    if content < 0:
        return None
    c_root = _fraction_sqrt(content)
    if c_root is None:
        return None
    le, lc = pp.leading()
    if any(e % 2 for e in le):
        return None
    lc_root = _fraction_sqrt(lc)
    if lc_root is None:
        return None
    g = MultiPoly(f.nvars, {tuple(e // 2 for e in le): lc_root}, _trusted=True)
    rem = pp - g * g
    max_steps = 2 * len(pp.terms) + 4
    for _ in range(max_steps):
        if rem.is_zero():
            return g * c_root
        re, rc = rem.leading()
        diff = tuple(a - b for a, b in zip(re, tuple(e // 2 for e in le)))
        if any(d < 0 for d in diff):
            return None
        t = MultiPoly(f.nvars, {diff: rc / (2 * lc_root)}, _trusted=True)
        # each recovered term must be strictly smaller than the previous ones
        if MultiPoly._grlex_key(diff) >= MultiPoly._grlex_key(min(g.terms, key=MultiPoly._grlex_key)):
            return None
        g = g + t
        rem = rem - (2 * t * (g - t) + t * t)
    return None


def _fraction_sqrt(c):
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


class RatFunc:
    """Quotient num/den of MultiPoly in canonical form.

    Canonical means: gcd(num, den) = 1, den is integer-primitive with positive
    leading coefficient (so den = 1 for polynomials).  Equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = MultiPoly.const(num.nvars, 1)
        if _canonical:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = MultiPoly.const(num.nvars, 1)
            return
        if len(den.terms) == 1:
            # monomial denominator: canonical form is num' / x^e with the
            # coefficient folded into num and common exponents stripped
            (de, dc), = den.terms.items()
            if dc != 1:
                num = num * (1 / dc)
            if any(de):
                mins = None
                for e in num.terms:
                    mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
                strip = tuple(min(m, d) for m, d in zip(mins, de))
                if any(strip):
                    num = MultiPoly(num.nvars,
                                    {tuple(a - b for a, b in zip(e, strip)): c
                                     for e, c in num.terms.items()}, _trusted=True)
                    de = tuple(a - b for a, b in zip(de, strip))
                self.num = num
                self.den = MultiPoly(num.nvars, {de: _ONE}, _trusted=True) \
                    if any(de) else MultiPoly.const(num.nvars, 1)
                return
            self.num = num
            self.den = MultiPoly.const(num.nvars, 1)
            return
        g = poly_gcd(num, den)
        if not g.is_const():
            num = poly_divmod_exact(num, g)
            den = poly_divmod_exact(den, g)
        c, den = den.primitive()
        self.num = num * (1 / c)
        self.den = den

    # -- helpers -------------------------------------------------------------

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        return self.num.const_value() / self.den.const_value()

    def _den_is_one(self):
        d = self.den
        return len(d.terms) == 1 and d.terms.get((0,) * d.nvars) == 1

    # -- field operations ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(MultiPoly.const(self.nvars, other), _canonical=True)
        return None

    @staticmethod
    def _make(num, den):
        """Canonical result for a combination already known to be reduced,
        collapsing zero numerators to the canonical zero."""
        if not num.terms:
            return RatFunc(num, _canonical=True)
        return RatFunc(num, den, _canonical=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._den_is_one():
            if other._den_is_one():
                return RatFunc(self.num + other.num, _canonical=True)
            # gcd(n1 d2 + n2, d2) = gcd(n2, d2) = 1, so the form stays canonical
            return RatFunc._make(self.num * other.den + other.num, other.den)
        if other._den_is_one():
            return RatFunc._make(self.num + other.num * self.den, self.den)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._den_is_one():
            if other._den_is_one():
                return RatFunc(self.num - other.num, _canonical=True)
            return RatFunc._make(self.num * other.den - other.num, other.den)
        if other._den_is_one():
            return RatFunc._make(self.num - other.num * self.den, self.den)
        if self.den == other.den:
            return RatFunc(self.num - other.num, self.den)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc(MultiPoly.zero(self.nvars), _canonical=True)
            return RatFunc(self.num * other, self.den, _canonical=True)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self._den_is_one():
            if other._den_is_one():
                return RatFunc(self.num * other.num, _canonical=True)
            if self.num.is_const():  # units never break canonicality
                return RatFunc._make(self.num * other.num, other.den)
        elif other._den_is_one() and other.num.is_const():
            return RatFunc._make(self.num * other.num, self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        if self.is_zero():
            raise DivisionByZero("division by zero")
        other = self._coerce(other)
        return RatFunc(other.num * self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        # canonical form is preserved under nonnegative powers (Gauss lemma)
        return RatFunc(self.num ** n, self.den ** n, _canonical=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._den_is_one() and self.num == other
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if not d:
            raise PoleAtPoint(f"denominator vanishes at {point}")
        return self.num.evaluate(point) / d

    def extend(self, nvars):
        return RatFunc(self.num.extend(nvars), self.den.extend(nvars), _canonical=True)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


class FieldCtx:
    """Either Q or a rational function field Q(t1,...,tn)."""

    __slots__ = ("variables",)

    def __init__(self, variables=()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        self.variables = variables

    @classmethod
    def rationals(cls):
        return cls(())

    @classmethod
    def function_field(cls, variables):
        if not variables:
            raise ValueError("function field needs at least one variable")
        return cls(variables)

    @property
    def is_rationals(self):
        return not self.variables

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        if self.is_rationals:
            return "FieldCtx(Q)"
        return f"FieldCtx(Q({', '.join(self.variables)}))"

    # -- element constructors ------------------------------------------------

    def zero(self):
        if self.is_rationals:
            return _ZERO
        return RatFunc(MultiPoly.zero(self.nvars), _canonical=True)

    def one(self):
        if self.is_rationals:
            return _ONE
        return RatFunc(MultiPoly.const(self.nvars, 1), _canonical=True)

    def scalar(self, c):
        """Lift an int or Fraction into this field."""
        c = _as_fraction(c)
        if self.is_rationals:
            return c
        return RatFunc(MultiPoly.const(self.nvars, c), _canonical=True)

    def gen(self, name):
        i = self.variables.index(name)
        return RatFunc(MultiPoly.gen(self.nvars, i), _canonical=True)

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def is_element(self, x):
        if self.is_rationals:
            return isinstance(x, Fraction)
        return isinstance(x, RatFunc) and x.nvars == self.nvars

    # -- ctx extension (used by symbolic verification) -------------------------

    def extend(self, extra):
        """New ctx whose variables are self's followed by ``extra``."""
        return FieldCtx(self.variables + tuple(extra))

    def embed(self, x, src):
        """Map an element of ``src`` into this ctx; src variables must be a prefix."""
        if src == self:
            return x
        if src.variables != self.variables[: src.nvars]:
            raise ValueError("source variables are not a prefix of the target's")
        if src.is_rationals:
            return self.scalar(x)
        return x.extend(self.nvars)


def add(x, y):
    return x + y


def sub(x, y):
    return x - y


def mul(x, y):
    return x * y


def neg(x):
    return -x


def div(x, y):
    if not y:
        raise DivisionByZero("division by zero")
    return x / y


def inv(x):
    if not x:
        raise DivisionByZero("inverse of zero")
    return 1 / x


def is_square(x):
    """Exact square-root test; returns a root or None.

    Over Q this is integer square-root extraction on numerator/denominator;
    over a function field both parts of the canonical form must be squares.
    """
    if isinstance(x, Fraction):
        if not x:
            raise ZeroInput("is_square is undefined at 0")
        return _fraction_sqrt(x)
    if isinstance(x, RatFunc):
        if x.is_zero():
            raise ZeroInput("is_square is undefined at 0")
        rn = poly_sqrt(x.num)
        if rn is None:
            return None
        rd = poly_sqrt(x.den)
        if rd is None:
            return None
        return RatFunc(rn, rd)
    raise TypeError(f"not a field element: {x!r}")


def random_element(ctx, seed, coeff_bound, degree_bound=0):
    """Deterministic sample: an integer over Q, a polynomial over Q(t...).

    Samples are denominator-free so downstream identity evaluation never hits
    spurious poles.
    """
    rng = random.Random(seed)
    return sample_element(ctx, rng, coeff_bound, degree_bound)


def sample_element(ctx, rng, coeff_bound, degree_bound=0):
    """Like random_element but drawing from a caller-owned RNG."""
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    if ctx.is_rationals:
        return Fraction(rng.randint(-coeff_bound, coeff_bound))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        total = rng.randint(0, degree_bound) if degree_bound > 0 else 0
        exps = [0] * ctx.nvars
        for _ in range(total):
            exps[rng.randrange(ctx.nvars)] += 1
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + c
    poly = MultiPoly(ctx.nvars, {e: Fraction(c) for e, c in terms.items() if c})
    return RatFunc(poly, _canonical=True)


def evaluate(x, point):
    """Substitute rationals for the function-field variables."""
    if isinstance(x, Fraction):
        return x
    return x.evaluate(point)


# -- canonical text form -------------------------------------------------------


def scalar_str(ctx, x):
    """Canonical text rendering, e.g. '-3/2' or '(t^2+1)/(t)'."""
    if ctx.is_rationals:
        return str(x)
    num = _poly_str(ctx, x.num)
    if x._den_is_one():
        return num
    return f"({num})/({_poly_str(ctx, x.den)})"


def _poly_str(ctx, p):
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.sorted_terms():
        factors = []
        for name, e in zip(ctx.variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(abs(c))
        else:
            mono = "*".join(factors)
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- scalar expression parser ----------------------------------------------------


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.toks = []
        self._tokenize()
        self.i = 0

    def _tokenize(self):
        t, i = self.text, 0
        while i < len(t):
            ch = t[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(t) and t[j].isdigit():
                    j += 1
                self.toks.append(("int", t[i:j]))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(t) and (t[j].isalnum() or t[j] == "_"):
                    j += 1
                self.toks.append(("name", t[i:j]))
                i = j
            elif ch in "+-*/^()":
                self.toks.append((ch, ch))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r} at position {i}")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok


def parse_scalar(ctx, text):
    """Parse '+ - * / ^ ( )' expressions over ints and ctx variables."""
    if isinstance(text, int):
        return ctx.scalar(text)
    toks = _Tokens(str(text))

    def parse_expr():
        node = parse_term()
        while toks.peek()[0] in ("+", "-"):
            op = toks.next()[0]
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term():
        node = parse_factor()
        while toks.peek()[0] in ("*", "/"):
            op = toks.next()[0]
            rhs = parse_factor()
            if op == "*":
                node = node * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero in scalar expression")
                node = node / rhs
        return node

    def parse_factor():
        kind, val = toks.peek()
        if kind == "-":
            toks.next()
            return -parse_factor()
        if kind == "+":
            toks.next()
            return parse_factor()
        return parse_power()

    def parse_power():
        base = parse_atom()
        if toks.peek()[0] == "^":
            toks.next()
            kind, val = toks.next()
            neg_exp = False
            if kind == "-":
                neg_exp = True
                kind, val = toks.next()
            if kind != "int":
                raise ParseError("exponent must be an integer")
            e = int(val)
            if neg_exp:
                if not base:
                    raise ParseError("zero to a negative power")
                return ctx.one() / base ** e if not ctx.is_rationals else 1 / base ** e
            return base ** e
        return base

    def parse_atom():
        kind, val = toks.next()
        if kind == "int":
            return ctx.scalar(int(val))
        if kind == "name":
            if val not in ctx.variables:
                raise ParseError(f"unknown variable {val!r}")
            return ctx.gen(val)
        if kind == "(":
            node = parse_expr()
            if toks.next()[0] != ")":
                raise ParseError("missing closing parenthesis")
            return node
        raise ParseError(f"unexpected token {val!r}")

    result = parse_expr()
    if toks.peek()[0] is not None:
        raise ParseError(f"trailing input near {toks.peek()[1]!r}")
    return result
