"""Exact sparse multivariate polynomials and rational functions over Q.

A polynomial is a map from exponent tuples to Fraction coefficients, tied to
a fixed ordered tuple of variable names.  No floating point is used anywhere;
identity tests are exact.  Rational functions are stored as a reduced
num/den pair with a monic denominator (leading coefficient 1 under
graded-lex order), which makes the representation canonical.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

try:  # gmpy2 rationals are several times faster; semantics are identical
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction

Exponent = tuple  # tuple[int, ...], one entry per variable

_SCALARS = (int, Fraction, type(QQ(1)))


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    """Sparse multivariate polynomial over Q with a fixed variable tuple."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple, terms: Mapping[Exponent, Fraction]):
        self.vars = tuple(vars)
        clean = {}
        nv = len(self.vars)
        for exp, c in terms.items():
            c = QQ(c)
            if c == 0:
                continue
            exp = tuple(exp)
            if len(exp) != nv or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for vars {self.vars}")
            clean[exp] = clean.get(exp, QQ(0)) + c
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        return cls(vars, {(0,) * len(vars): QQ(c)})

    @classmethod
    def variable(cls, vars, name, power=1):
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = power
        return cls(vars, {tuple(exp): QQ(1)})

    @classmethod
    def monomial(cls, vars, exp, c=1):
        return cls(vars, {tuple(exp): QQ(c)})

    # -- predicates ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def const_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def var_degree(self, name):
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- arithmetic ----------------------------------------------------
    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = MultiPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, QQ(0)) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            c = QQ(other)
            if c == 0:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        self._check(other)
        if not self.terms or not other.terms:
            return MultiPoly.zero(self.vars)
        out = {}
        zero = QQ(0)
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, zero) + ca * cb
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({render_poly(self)!r})"

    # -- substitution ---------------------------------------------------
    def subs_poly(self, bindings: Mapping[str, "MultiPoly"], new_vars) -> "MultiPoly":
        """Substitute each variable by a polynomial in ``new_vars``."""
        new_vars = tuple(new_vars)
        vals = []
        for v in self.vars:
            b = bindings.get(v)
            if b is None:
                if v not in new_vars:
                    raise ValueError(f"no binding for variable {v}")
                b = MultiPoly.variable(new_vars, v)
            if b.vars != new_vars:
                raise ValueError("binding has wrong variable tuple")
            vals.append(b)
        out = MultiPoly.zero(new_vars)
        powcache = [{0: MultiPoly.const(new_vars, 1)} for _ in vals]
        for exp, c in self.terms.items():
            term = MultiPoly.const(new_vars, c)
            for i, e in enumerate(exp):
                if e not in powcache[i]:
                    powcache[i][e] = vals[i] ** e
                term = term * powcache[i][e]
            out = out + term
        return out

    def eval(self, point: Mapping[str, Fraction]):
        total = QQ(0)
        for exp, c in self.terms.items():
            v = c
            for name, e in zip(self.vars, exp):
                if e:
                    v *= QQ(point[name]) ** e
            total += v
        return total

    def rename_vars(self, mapping: Mapping[str, str], new_vars) -> "MultiPoly":
        """Relabel variables (a bijection onto a subset of ``new_vars``)."""
        new_vars = tuple(new_vars)
        idx = [new_vars.index(mapping.get(v, v)) for v in self.vars]
        out = {}
        for exp, c in self.terms.items():
            ne = [0] * len(new_vars)
            for i, e in zip(idx, exp):
                ne[i] += e
            key = tuple(ne)
            out[key] = out.get(key, QQ(0)) + c
        return MultiPoly(new_vars, out)


# ---------------------------------------------------------------------------
# exact division and GCD
# ---------------------------------------------------------------------------

def exact_div(a: MultiPoly, b: MultiPoly) -> Optional[MultiPoly]:
    """Return q with a == q*b, or None if b does not divide a exactly."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return MultiPoly.zero(a.vars)
    a._check(b)
    lb, cb = b.leading()
    if len(b.terms) == 1:
        quot = {}
        for e, c in a.terms.items():
            qe = tuple(x - y for x, y in zip(e, lb))
            if any(x < 0 for x in qe):
                return None
            quot[qe] = c / cb
        return MultiPoly(a.vars, quot)
    rem = dict(a.terms)
    quot = {}
    zero = QQ(0)
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        qe = tuple(x - y for x, y in zip(e, lb))
        if any(x < 0 for x in qe):
            return None
        qc = c / cb
        quot[qe] = quot.get(qe, zero) + qc
        for eb, coefb in b.terms.items():
            ee = tuple(x + y for x, y in zip(qe, eb))
            nc = rem.get(ee, zero) - qc * coefb
            if nc == 0:
                rem.pop(ee, None)
            else:
                rem[ee] = nc
    return MultiPoly(a.vars, quot)


def _int_content_and_scale(p: MultiPoly):
    """Scale p to integer coefficients; return (scaled terms dict, used only internally)."""
    denlcm = 1
    for c in p.terms.values():
        denlcm = denlcm * c.denominator // math.gcd(denlcm, c.denominator)
    terms = {e: int(c * denlcm) for e, c in p.terms.items()}
    g = 0
    for c in terms.values():
        g = math.gcd(g, abs(c))
    if g > 1:
        terms = {e: c // g for e, c in terms.items()}
    return terms


def _split_main(terms: dict, nvars: int):
    """View integer terms in nvars variables as univariate in var 0 over the rest."""
    coeffs = {}
    for exp, c in terms.items():
        d = exp[0]
        rest = exp[1:]
        coeffs.setdefault(d, {})[rest] = c
    return coeffs


def _join_main(coeffs: dict):
    terms = {}
    for d, sub in coeffs.items():
        for rest, c in sub.items():
            terms[(d,) + rest] = c
    return terms


def _iz(terms):  # is zero
    return not terms


def _imul(a: dict, b: dict, nv: int) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            nc = out.get(e, 0) + ca * cb
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
    return out


def _isub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        nc = out.get(e, 0) - c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def _iexact_div(a: dict, b: dict, nv: int) -> Optional[dict]:
    """Exact division of integer term dicts; None unless it divides over Z."""
    if _iz(a):
        return {}
    lb = max(b, key=_grlex_key)
    cb = b[lb]
    if len(b) == 1:
        quot = {}
        for e, c in a.items():
            if c % cb:
                return None
            qe = tuple(x - y for x, y in zip(e, lb))
            if any(x < 0 for x in qe):
                return None
            quot[qe] = c // cb
        return quot
    rem = dict(a)
    quot = {}
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        if c % cb:
            return None
        qe = tuple(x - y for x, y in zip(e, lb))
        if any(x < 0 for x in qe):
            return None
        qc = c // cb
        quot[qe] = qc
        del rem[e]
        for eb, coefb in b.items():
            if eb == lb:
                continue
            ee = tuple(x + y for x, y in zip(qe, eb))
            nc = rem.get(ee, 0) - qc * coefb
            if nc:
                rem[ee] = nc
            else:
                rem.pop(ee, None)
    return quot


def _igcd_terms(a: dict, b: dict, nv: int) -> dict:
    """GCD of integer-coefficient term dicts over nv variables (primitive PRS)."""
    if _iz(a):
        return _iprimitive(b, nv)
    if _iz(b):
        return _iprimitive(a, nv)
    # monomial fast path
    if len(a) == 1 or len(b) == 1:
        ga = tuple(min(e[i] for e in a) for i in range(nv))
        gb = tuple(min(e[i] for e in b) for i in range(nv))
        e = tuple(min(x, y) for x, y in zip(ga, gb))
        c = math.gcd(math.gcd(*[abs(v) for v in a.values()], 0),
                     math.gcd(*[abs(v) for v in b.values()], 0))
        return {e: c if c else 1}
    if nv == 0:
        return {(): math.gcd(a.get((), 0), b.get((), 0))}
    if nv == 1:
        return _igcd_uni(a, b)
    ca, pa = _icontent(a, nv)
    cb, pb = _icontent(b, nv)
    cg = _igcd_terms(ca, cb, nv - 1)
    f, g = pa, pb
    if _ideg(f) < _ideg(g):
        f, g = g, f
    if _ideg(g) == 0:
        g = {(0,) * nv: 1}
    else:
        while True:
            r = _iprem(f, g, nv)
            if _iz(r):
                break
            _, r = _icontent(r, nv)
            if _ideg(r) == 0:
                g = {(0,) * nv: 1}
                break
            f, g = g, r
        _, g = _icontent(g, nv)
    lifted = _imul({(0,) + e: c for e, c in cg.items()}, g, nv)
    return _inormalize_sign(lifted)


def _ideg(f: dict) -> int:
    return max(e[0] for e in f)


def _icontent(f: dict, nv: int):
    """Content (gcd of main-variable coefficients, nv-1 vars) and primitive part."""
    coeffs = _split_main(f, nv)
    cont = {}
    for sub in coeffs.values():
        cont = _igcd_terms(cont, sub, nv - 1)
        if len(cont) == 1 and not any(next(iter(cont))) and abs(next(iter(cont.values()))) == 1:
            break
    prim = {}
    for d, sub in coeffs.items():
        q = _iexact_div(sub, cont, nv - 1)
        for rest, c in q.items():
            prim[(d,) + rest] = c
    return cont, prim


def _iprem(f: dict, g: dict, nv: int) -> dict:
    """Pseudo-remainder of f by g with respect to the main variable."""
    df, dg = _ideg(f), _ideg(g)
    gc = _split_main(g, nv)
    lg = {(0,) + e: c for e, c in gc[dg].items()}
    r = dict(f)
    while not _iz(r) and _ideg(r) >= dg:
        dr = _ideg(r)
        rc = _split_main(r, nv)
        lr = {(0,) + e: c for e, c in rc[dr].items()}
        shift = dr - dg
        gshift = {(e[0] + shift,) + e[1:]: c for e, c in g.items()}
        r = _isub(_imul(r, lg, nv), _imul(gshift, lr, nv))
    return r


def _igcd_uni(a: dict, b: dict) -> dict:
    """Primitive PRS gcd for univariate integer term dicts."""
    def content(f):
        g = 0
        for c in f.values():
            g = math.gcd(g, abs(c))
        return g

    def prim(f):
        g = content(f)
        return {e: c // g for e, c in f.items()} if g > 1 else dict(f)

    ca, cb = content(a), content(b)
    cg = math.gcd(ca, cb)
    f, g = prim(a), prim(b)
    if _ideg(f) < _ideg(g):
        f, g = g, f
    while _ideg(g) > 0:
        dg = _ideg(g)
        lg = g[(dg,)]
        r = dict(f)
        while not _iz(r) and _ideg(r) >= dg:
            dr = _ideg(r)
            lr = r[(dr,)]
            shift = dr - dg
            r = {e: c * lg for e, c in r.items()}
            for (e,), c in g.items():
                ee = (e + shift,)
                nc = r.get(ee, 0) - c * lr
                if nc:
                    r[ee] = nc
                else:
                    r.pop(ee, None)
        if _iz(r):
            break
        f, g = g, prim(r)
    if _ideg(g) == 0:
        g = {(0,): 1}
    g = prim(g)
    if cg > 1:
        g = {e: c * cg for e, c in g.items()}
    return _inormalize_sign(g)


def _iprimitive(f: dict, nv: int) -> dict:
    if _iz(f):
        return {}
    g = 0
    for c in f.values():
        g = math.gcd(g, abs(c))
    if g > 1:
        f = {e: c // g for e, c in f.items()}
    return _inormalize_sign(dict(f))


def _inormalize_sign(f: dict) -> dict:
    if _iz(f):
        return f
    lc = f[max(f, key=_grlex_key)]
    if lc < 0:
        f = {e: -c for e, c in f.items()}
    return f


def _ieval_last(f: dict, xi: int) -> dict:
    """Evaluate the last variable at the integer xi."""
    out = {}
    for exp, c in f.items():
        key = exp[:-1]
        out[key] = out.get(key, 0) + c * xi ** exp[-1]
    return {e: c for e, c in out.items() if c}


def _smod(c: int, xi: int) -> int:
    """Symmetric remainder in (-xi/2, xi/2]."""
    r = c % xi
    if r + r > xi:
        r -= xi
    return r


def _interp_last(h_val: dict, xi: int):
    """Rebuild a polynomial in one more (last) variable from its value at xi."""
    h = {}
    i = 0
    while h_val:
        if i > 5000:
            return None
        digit = {e: _smod(c, xi) for e, c in h_val.items()}
        for e, c in digit.items():
            if c:
                h[e + (i,)] = c
        h_val = {e: (c - digit[e]) // xi for e, c in h_val.items()}
        h_val = {e: c for e, c in h_val.items() if c}
        i += 1
    return h


def _heugcd(f: dict, g: dict, nv: int):
    """Heuristic gcd by integer evaluation; exact because certified by division.

    Integer content is preserved through the recursion (the evaluated value of
    a gcd that is constant in the remaining variables lives in the content).
    Returns None if the heuristic fails; the caller falls back to the PRS
    route in that case.
    """
    if nv == 0:
        return {(): math.gcd(f.get((), 0), g.get((), 0))}
    norm = min(max(abs(c) for c in f.values()), max(abs(c) for c in g.values()))
    xi = 2 * norm + 29
    for _ in range(6):
        if xi.bit_length() > 10000:
            return None
        fe = _ieval_last(f, xi)
        ge = _ieval_last(g, xi)
        if fe and ge:
            h_val = _heugcd(fe, ge, nv - 1)
            if h_val is not None:
                h = _interp_last(h_val, xi)
                if h:
                    candidates = [h]
                    hp = _iprimitive(h, nv)
                    if hp != h:
                        candidates.append(hp)
                    for cand in candidates:
                        if _iexact_div(f, cand, nv) is not None \
                                and _iexact_div(g, cand, nv) is not None:
                            return cand
        xi = xi * 73794 // 27011 + 13
    return None


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """GCD, normalized to integer coefficients with content 1 and positive lead."""
    a._check(b)
    vars = a.vars
    if a.is_zero() and b.is_zero():
        return MultiPoly.zero(vars)
    ia = _int_content_and_scale(a) if not a.is_zero() else {}
    ib = _int_content_and_scale(b) if not b.is_zero() else {}
    nv = len(vars)
    if not ia or not ib or len(ia) == 1 or len(ib) == 1:
        g = _igcd_terms(ia, ib, nv)
    else:
        g = _heugcd(ia, ib, nv)
        if g is None:
            g = _igcd_terms(ia, ib, nv)
    g = _iprimitive(g, nv)
    return MultiPoly(vars, {e: QQ(c) for e, c in g.items()})


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFun:
    """Reduced fraction of MultiPoly with monic denominator (canonical form)."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: Optional[MultiPoly] = None):
        if den is None:
            den = MultiPoly.const(num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num._check(den)
        if num.is_zero():
            self.num = num
            self.den = MultiPoly.const(num.vars, 1)
            return
        g = poly_gcd(num, den)
        if not g.is_const():
            num = exact_div(num, g)
            den = exact_div(den, g)
        _, lc = den.leading()
        if lc != 1:
            inv = QQ(1) / lc
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: MultiPoly, den: MultiPoly) -> "RatFun":
        """Build from a num/den pair already known to be coprime."""
        self = object.__new__(cls)
        if num.is_zero():
            self.num = num
            self.den = MultiPoly.const(num.vars, 1)
            return self
        _, lc = den.leading()
        if lc != 1:
            inv = QQ(1) / lc
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den
        return self

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, vars, c):
        return cls._reduced(MultiPoly.const(vars, c), MultiPoly.const(vars, 1))

    @classmethod
    def from_poly(cls, p: MultiPoly):
        return cls._reduced(p, MultiPoly.const(p.vars, 1))

    @classmethod
    def variable(cls, vars, name, power=1):
        if power >= 0:
            return cls.from_poly(MultiPoly.variable(vars, name, power))
        return cls._reduced(MultiPoly.const(vars, 1), MultiPoly.variable(vars, name, -power))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_const()

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self!r}")
        c = self.den.const_value()
        return self.num * (Fraction(1) / c) if c != 1 else self.num

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, _SCALARS):
            return RatFun.const(self.vars, other)
        if isinstance(other, MultiPoly):
            return RatFun.from_poly(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_const():
            num = self.num * other.den + other.num * self.den
            den = self.den * other.den
            if num.is_zero():
                return RatFun.const(self.vars, 0)
            # num is coprime to den: any factor of one den is coprime to its num
            # and to the other den, hence cannot divide the sum.
            return RatFun._reduced(num, den)
        bo = exact_div(other.den, g)
        num = self.num * bo + other.num * exact_div(self.den, g)
        return RatFun(num, self.den * bo)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._reduced(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFun.const(self.vars, 0)
        den1 = self.den.is_const()
        den2 = other.den.is_const()
        if den1 and den2:
            return RatFun._reduced(self.num * other.num, self.den * other.den)
        g1 = poly_gcd(self.num, other.den) if not den2 else None
        g2 = poly_gcd(other.num, self.den) if not den1 else None
        a, d = self.num, other.den
        if g1 is not None and not g1.is_const():
            a = exact_div(a, g1)
            d = exact_div(d, g1)
        c, b = other.num, self.den
        if g2 is not None and not g2.is_const():
            c = exact_div(c, g2)
            b = exact_div(b, g2)
        return RatFun._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFun._reduced(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n == 0:
            return RatFun.const(self.vars, 1)
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun._reduced(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, MultiPoly):
            other = self._coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_polynomial():
            return f"RatFun({render_poly(self.num)!r})"
        return f"RatFun({render_poly(self.num)!r} / {render_poly(self.den)!r})"

    # -- substitution ---------------------------------------------------
    def subs(self, bindings: Mapping[str, "RatFun"], new_vars) -> "RatFun":
        """Substitute variables by rational functions over ``new_vars``.

        Every variable of self must be covered by ``bindings`` or carried over
        by name into ``new_vars``.
        """
        new_vars = tuple(new_vars)
        full = {}
        for v in self.vars:
            b = bindings.get(v)
            if b is None:
                b = RatFun.variable(new_vars, v)
            if isinstance(b, MultiPoly):
                b = RatFun.from_poly(b)
            if b.vars != new_vars:
                raise ValueError("binding has wrong variable tuple")
            full[v] = b
        if all(len(b.num.terms) == 1 and len(b.den.terms) == 1 for b in full.values()):
            return self._subs_monomial(full, new_vars)
        n = _eval_poly_ratfun(self.num, full, new_vars)
        d = _eval_poly_ratfun(self.den, full, new_vars)
        if d.is_zero():
            raise ZeroDivisionError("substitution produced a zero denominator")
        return n / d

    def _subs_monomial(self, full, new_vars) -> "RatFun":
        """Fast path: every binding is c * (monomial) / (monomial)."""
        nv = len(new_vars)
        shifts = {}
        for v, b in full.items():
            (en, cn), = b.num.terms.items()
            (ed, cd), = b.den.terms.items()
            shifts[v] = (tuple(x - y for x, y in zip(en, ed)), cn / cd)

        def transform(p: MultiPoly):
            laurent = {}
            for exp, c in p.terms.items():
                ne = (0,) * nv
                for v, e in zip(p.vars, exp):
                    if e:
                        d, s = shifts[v]
                        ne = tuple(x + e * y for x, y in zip(ne, d))
                        c = c * s ** e
                laurent[ne] = laurent.get(ne, QQ(0)) + c
            return laurent

        ln = transform(self.num)
        ld = transform(self.den)
        ld = {e: c for e, c in ld.items() if c}
        if not ld:
            raise ZeroDivisionError("substitution produced a zero denominator")
        lift = tuple(min(0, min(e[i] for e in list(ln) + list(ld)))
                     for i in range(nv))
        num = MultiPoly(new_vars, {tuple(x - y for x, y in zip(e, lift)): c
                                   for e, c in ln.items()})
        den = MultiPoly(new_vars, {tuple(x - y for x, y in zip(e, lift)): c
                                   for e, c in ld.items()})
        return RatFun(num, den)


def _eval_poly_ratfun(p: MultiPoly, bindings, new_vars) -> RatFun:
    out = RatFun.const(new_vars, 0)
    cache = {v: {0: RatFun.const(new_vars, 1)} for v in p.vars}
    for exp, c in p.terms.items():
        term = RatFun.const(new_vars, c)
        for v, e in zip(p.vars, exp):
            if e not in cache[v]:
                cache[v][e] = bindings[v] ** e
            term = term * cache[v][e]
        out = out + term
    return out


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_poly(p: MultiPoly) -> str:
    """Canonical text form: graded-lex descending terms, explicit coefficients."""
    if p.is_zero():
        return "0"
    parts = []
    for exp in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[exp]
        factors = []
        for v, e in zip(p.vars, exp):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        body = "*".join(factors)
        coeff = abs(c)
        if not body:
            piece = str(coeff)
        elif coeff == 1:
            piece = body
        else:
            piece = f"{coeff}*{body}"
        parts.append(("- " if c < 0 else "+ ") + piece)
    first = parts[0]
    out = ("-" + first[2:]) if first.startswith("- ") else first[2:]
    for piece in parts[1:]:
        out += " " + piece
    return out


def poly_to_json(p: MultiPoly) -> dict:
    terms = []
    for exp in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[exp]
        terms.append({"exp": list(exp), "coeff": str(c)})
    return {"vars": list(p.vars), "terms": terms}
