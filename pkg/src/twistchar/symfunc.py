"""Symmetric-function engine.

Homogeneous symmetric functions are stored as a basis tag plus a map from
partitions to rational-function coefficients.  The power-sum basis is the
computational hub: multiplication is concatenation there, the Hall product
is diagonal there, and plethystic rescalings act coefficientwise there.
Transition matrices between the classical bases (m, h, p, s) are exact
rationals, computed once per degree and cached.

Hall-Littlewood functions, Kostka-Foulkes polynomials, Green polynomials and
the modified Hall-Littlewood family are built on top via Gram-Schmidt against
the deformed power-sum inner product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    border_strips,
    check_partition,
    n_stat,
    partitions_of,
    z_stat,
)
from .polys import MultiPoly, RatFun

CLASSICAL = ("m", "h", "p", "s")


@lru_cache(maxsize=None)
def sn_character(lam: tuple, tau: tuple) -> int:
    """Irreducible symmetric-group character of shape lam at class tau."""
    if sum(lam) != sum(tau):
        raise ValueError(f"size mismatch: {lam} vs {tau}")
    if not lam:
        return 1
    r = tau[0]
    rest = tau[1:]
    total = 0
    for smaller, height in border_strips(lam, r):
        total += (-1) ** height * sn_character(smaller, rest)
    return total


# ---------------------------------------------------------------------------
# transition matrices (exact rational, cached per degree)
# ---------------------------------------------------------------------------

def _p_times_m(r: int, mu: tuple) -> dict:
    """Expansion of p_r * m_mu in the monomial basis (integer coefficients)."""
    out = {}
    seen_values = set(mu) | {0}
    for v in seen_values:
        if v == 0:
            parts = sorted(mu + (r,), reverse=True)
        else:
            idx = mu.index(v)
            parts = sorted(mu[:idx] + (v + r,) + mu[idx + 1:], reverse=True)
        nu = tuple(parts)
        out[nu] = out.get(nu, 0) + parts.count(v + r)
    return out


@lru_cache(maxsize=None)
def _p2m_row(lam: tuple) -> tuple:
    """m-expansion of p_lam as a tuple of (partition, Fraction)."""
    exp = {(): Fraction(1)}
    for r in lam:
        nxt = {}
        for mu, c in exp.items():
            for nu, k in _p_times_m(r, mu).items():
                nxt[nu] = nxt.get(nu, Fraction(0)) + c * k
        exp = nxt
    return tuple(sorted(exp.items()))


def _invert_matrix(index, rows):
    """Invert the square matrix rows[i][j] over Fraction; index is the key list."""
    n = len(index)
    pos = {k: i for i, k in enumerate(index)}
    a = [[Fraction(rows.get(ri, {}).get(ci, 0)) for ci in index] for ri in index]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        inv[col] = [x / d for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    out = {}
    for ri in index:
        row = {}
        for ci in index:
            v = inv[pos[ri]][pos[ci]]
            if v != 0:
                row[ci] = v
        out[ri] = row
    return out


@lru_cache(maxsize=None)
def transition(src: str, dst: str, degree: int) -> dict:
    """Matrix T with src_lam = sum_mu T[lam][mu] * dst_mu, entries Fraction."""
    if src not in CLASSICAL or dst not in CLASSICAL:
        raise ValueError(f"unknown basis: {src} -> {dst}")
    parts = partitions_of(degree)
    if src == dst:
        return {lam: {lam: Fraction(1)} for lam in parts}
    if src == "p" and dst == "s":
        return {lam: {tau: Fraction(sn_character(tau, lam))
                      for tau in parts if sn_character(tau, lam)}
                for lam in parts}
    if src == "s" and dst == "p":
        return {lam: {tau: Fraction(sn_character(lam, tau), z_stat(tau))
                      for tau in parts if sn_character(lam, tau)}
                for lam in parts}
    if src == "p" and dst == "m":
        return {lam: dict(_p2m_row(lam)) for lam in parts}
    if src == "m" and dst == "p":
        return _invert_matrix(parts, transition("p", "m", degree))
    if src == "h" and dst == "p":
        out = {}
        for lam in parts:
            exp = {(): Fraction(1)}
            for r in lam:
                nxt = {}
                for rho, c in exp.items():
                    for sub in partitions_of(r):
                        key = tuple(sorted(rho + sub, reverse=True))
                        nxt[key] = nxt.get(key, Fraction(0)) + c / z_stat(sub)
                exp = nxt
            out[lam] = exp
        return out
    if src == "p" and dst == "h":
        return _invert_matrix(parts, transition("h", "p", degree))
    # generic route through p
    a = transition(src, "p", degree)
    b = transition("p", dst, degree)
    out = {}
    for lam, row in a.items():
        acc = {}
        for mid, c in row.items():
            for mu, d in b[mid].items():
                v = acc.get(mu, Fraction(0)) + c * d
                if v:
                    acc[mu] = v
                else:
                    acc.pop(mu, None)
        out[lam] = acc
    return out


# ---------------------------------------------------------------------------
# SymFunc
# ---------------------------------------------------------------------------

@dataclass
class SymFunc:
    """Homogeneous symmetric function: basis tag + partition -> RatFun map."""

    basis: str
    degree: int
    vars: tuple
    coeffs: dict

    def __post_init__(self):
        self.coeffs = {check_partition(k): v for k, v in self.coeffs.items()
                       if not v.is_zero()}
        for k in self.coeffs:
            if sum(k) != self.degree:
                raise ValueError(f"non-homogeneous term {k} in degree {self.degree}")

    # -- constructors -------------------------------------------------
    @classmethod
    def generator(cls, basis: str, lam, vars) -> "SymFunc":
        lam = check_partition(lam)
        return cls(basis, sum(lam), tuple(vars), {lam: RatFun.const(vars, 1)})

    @classmethod
    def zero(cls, basis: str, degree: int, vars) -> "SymFunc":
        return cls(basis, degree, tuple(vars), {})

    @classmethod
    def one(cls, vars) -> "SymFunc":
        return cls("p", 0, tuple(vars), {(): RatFun.const(vars, 1)})

    # -- ring structure -------------------------------------------------
    def to(self, dst: str) -> "SymFunc":
        if dst == self.basis:
            return self
        mat = transition(self.basis, dst, self.degree)
        out = {}
        for lam, c in self.coeffs.items():
            for mu, f in mat[lam].items():
                prev = out.get(mu)
                scaled = c * f
                out[mu] = scaled if prev is None else prev + scaled
        return SymFunc(dst, self.degree, self.vars, out)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("cannot add different degrees")
        other = other.to(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(self.basis, self.degree, self.vars, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        if not isinstance(c, RatFun):
            c = RatFun.const(self.vars, c)
        return SymFunc(self.basis, self.degree, self.vars,
                       {lam: v * c for lam, v in self.coeffs.items()})

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        a = self.to("p")
        b = other.to("p")
        out = {}
        for la, ca in a.coeffs.items():
            for lb, cb in b.coeffs.items():
                key = tuple(sorted(la + lb, reverse=True))
                prod = ca * cb
                out[key] = out[key] + prod if key in out else prod
        return SymFunc("p", self.degree + other.degree, self.vars, out)

    def coeff(self, lam) -> RatFun:
        return self.coeffs.get(tuple(lam), RatFun.const(self.vars, 0))

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.basis, self.degree, self.vars,
                       {lam: fn(c) for lam, c in self.coeffs.items()})

    def subs_coeffs(self, bindings, new_vars) -> "SymFunc":
        return SymFunc(self.basis, self.degree, tuple(new_vars),
                       {lam: c.subs(bindings, new_vars) for lam, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a = self.to("p")
        b = other.to("p")
        keys = set(a.coeffs) | set(b.coeffs)
        zero = RatFun.const(self.vars, 0)
        return self.degree == other.degree and all(
            a.coeffs.get(k, zero) == b.coeffs.get(k, zero) for k in keys)

    def __repr__(self):
        body = " + ".join(f"({c!r})*{self.basis}{list(lam)}"
                          for lam, c in sorted(self.coeffs.items()))
        return f"SymFunc[{body or '0'}]"


def sym_product(factors, vars) -> SymFunc:
    out = SymFunc.one(vars)
    for f in factors:
        out = out * f
    return out


def plethys_sub(f: SymFunc, multiplier) -> SymFunc:
    """Scale the coefficient of p_lam by prod multiplier(r) over the parts.

    This realizes substitutions like Z -> Z/(1-q) (multiplier 1/(1-q^r)) and
    Z -> (q-1)(1-t)Z (multiplier (q^r-1)(1-t^r)).
    """
    p = f.to("p")
    out = {}
    for lam, c in p.coeffs.items():
        for r in lam:
            c = c * multiplier(r)
        out[lam] = c
    return SymFunc("p", f.degree, f.vars, out)


def hall_inner(f: SymFunc, g: SymFunc) -> RatFun:
    """Hall inner product; p basis is orthogonal with <p_lam, p_lam> = z_lam."""
    if f.degree != g.degree:
        return RatFun.const(f.vars, 0)
    a = f.to("p")
    b = g.to("p")
    out = RatFun.const(f.vars, 0)
    for lam, c in a.coeffs.items():
        d = b.coeffs.get(lam)
        if d is not None:
            out = out + c * d * z_stat(lam)
    return out


def weighted_p_inner(f: SymFunc, g: SymFunc, weight) -> RatFun:
    """Deformed power-sum form: sum z_lam f_lam g_lam prod weight(r)."""
    if f.degree != g.degree:
        return RatFun.const(f.vars, 0)
    a = f.to("p")
    b = g.to("p")
    out = RatFun.const(f.vars, 0)
    for lam, c in a.coeffs.items():
        d = b.coeffs.get(lam)
        if d is None:
            continue
        term = c * d * z_stat(lam)
        for r in lam:
            term = term * weight(r)
        out = out + term
    return out


def qt_inner(f: SymFunc, g: SymFunc) -> RatFun:
    """<F, G[(q-1)(1-t)Z]> on functions with coefficients in (q, t)."""
    vars = f.vars
    q = RatFun.variable(vars, "q")
    t = RatFun.variable(vars, "t")
    one = RatFun.const(vars, 1)
    return weighted_p_inner(f, g, lambda r: (q ** r - one) * (one - t ** r))


# ---------------------------------------------------------------------------
# Hall-Littlewood / Kostka-Foulkes / Green
# ---------------------------------------------------------------------------

def gram_schmidt_monomial(degree: int, vars, weight) -> dict:
    """Orthogonalize the monomial basis bottom-up in dominance order.

    Returns {lam: SymFunc in m basis} with each element of the form
    m_lam + (dominance-lower terms), orthogonal for the weighted p-form.
    """
    order = list(reversed(partitions_of(degree)))  # ascending linear extension
    done = []
    norms = []
    out = {}
    for lam in order:
        f = SymFunc.generator("m", lam, vars)
        for g, ng in zip(done, norms):
            c = weighted_p_inner(f, g, weight)
            if not c.is_zero():
                f = f + g.scale(c / ng * Fraction(-1))
        out[lam] = f.to("m")
        done.append(out[lam])
        norms.append(weighted_p_inner(f, f, weight))
    return out


_HLQ = ("q",)


def _hl_weight(vars=_HLQ):
    q = RatFun.variable(vars, "q")
    one = RatFun.const(vars, 1)
    return lambda r: (one - q ** r).inverse()


@lru_cache(maxsize=None)
def _hl_basis(degree: int) -> tuple:
    basis = gram_schmidt_monomial(degree, _HLQ, _hl_weight())
    return tuple(basis.items())


def hall_littlewood_P(lam) -> SymFunc:
    """Hall-Littlewood P_lam over Q(q), in the monomial basis."""
    lam = check_partition(lam)
    return dict(_hl_basis(sum(lam)))[lam]


def b_factor(lam) -> RatFun:
    """b_lam(q) = <P_lam, P_lam>^{-1} for the Hall-Littlewood form."""
    P = hall_littlewood_P(lam)
    return weighted_p_inner(P, P, _hl_weight()).inverse()


@lru_cache(maxsize=None)
def _kostka_matrix(degree: int) -> dict:
    """K[lam][tau] with s_lam = sum_tau K[lam][tau](q) P_tau, as MultiPoly."""
    hl = dict(_hl_basis(degree))
    order = list(partitions_of(degree))  # descending: dominance-larger first
    out = {}
    for lam in order:
        rest = SymFunc.generator("s", lam, _HLQ).to("m")
        row = {}
        for tau in order:  # eliminate from the top of dominance downwards
            c = rest.coeff(tau)
            if not c.is_zero():
                row[tau] = c
                rest = rest + hl[tau].scale(c * Fraction(-1))
        if rest.coeffs:
            raise AssertionError("P-basis expansion failed to terminate")
        out[lam] = row
    return out


def kostka_foulkes(lam, tau) -> MultiPoly:
    """Kostka-Foulkes polynomial K_{lam,tau}(q), exact polynomial in q."""
    lam = check_partition(lam)
    tau = check_partition(tau)
    if sum(lam) != sum(tau):
        raise ValueError("size mismatch")
    row = _kostka_matrix(sum(lam))[lam]
    c = row.get(tau)
    if c is None:
        return MultiPoly.zero(_HLQ)
    if not c.is_polynomial():
        raise AssertionError(f"Kostka-Foulkes not polynomial at {lam},{tau}")
    return c.as_poly()


def kostka_foulkes_modified(lam, tau) -> MultiPoly:
    """q^{n(tau)} K_{lam,tau}(1/q), again a polynomial."""
    K = kostka_foulkes(lam, tau)
    n = n_stat(tuple(tau))
    q = _HLQ
    out = {}
    for (e,), c in K.terms.items():
        ne = n - e
        if ne < 0:
            raise AssertionError("modified Kostka-Foulkes has negative power")
        out[(ne,)] = out.get((ne,), Fraction(0)) + c
    return MultiPoly(q, out)


def modified_hl(lam) -> SymFunc:
    """Modified Hall-Littlewood function in the Schur basis over Q(q)."""
    lam = check_partition(lam)
    n = sum(lam)
    out = {}
    for tau in partitions_of(n):
        K = kostka_foulkes_modified(tau, lam)
        if not K.is_zero():
            out[tau] = RatFun.from_poly(K)
    return SymFunc("s", n, _HLQ, out)


def green_polynomial(tau, lam) -> MultiPoly:
    """Green polynomial: character-weighted sum of modified Kostka-Foulkes."""
    tau = check_partition(tau)
    lam = check_partition(lam)
    if sum(tau) != sum(lam):
        raise ValueError("size mismatch")
    out = MultiPoly.zero(_HLQ)
    for nu in partitions_of(sum(tau)):
        chi = sn_character(nu, lam)
        if chi:
            out = out + kostka_foulkes_modified(nu, tau) * chi
    return out


def gl_order_from_b(n: int) -> RatFun:
    """|GL_n(q)| recovered from the b-factor of the full column, symbolically."""
    col = (1,) * n
    q = RatFun.variable(_HLQ, "q")
    qi = q.inverse()
    b_at_inv = b_factor(col).subs({"q": qi}, _HLQ)
    return (q ** (2 * n_stat(col) + n)) * b_at_inv
