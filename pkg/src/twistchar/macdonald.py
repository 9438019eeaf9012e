"""Modified Macdonald polynomials and their hook-product self-pairing factors.

The modified family H_lam(Z; q, t) is produced per degree: Gram-Schmidt
against the (q,t)-deformed power-sum form gives the two-parameter orthogonal
family, the hook-indexed scalar turns it into the integral form, and an
inversion-plethysm normalization yields H_lam.  The construction is pinned
by two contracts checked in the tests: the self-pairing equals the
arm/leg hook product, and the coefficient of s_(n) is 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import arm_leg_pairs, check_partition, n_stat, partitions_of
from .polys import MultiPoly, RatFun
from .symfunc import SymFunc, gram_schmidt_monomial, plethys_sub

QT = ("q", "t")


def _qt_weight():
    q = RatFun.variable(QT, "q")
    t = RatFun.variable(QT, "t")
    one = RatFun.const(QT, 1)
    return lambda r: (one - q ** r) / (one - t ** r)


@lru_cache(maxsize=None)
def _macdonald_degree(n: int) -> tuple:
    """All modified Macdonald polynomials of degree n, in the Schur basis."""
    two_param = gram_schmidt_monomial(n, QT, _qt_weight())
    q = RatFun.variable(QT, "q")
    t = RatFun.variable(QT, "t")
    one = RatFun.const(QT, 1)
    tinv = t.inverse()
    out = []
    for lam in partitions_of(n):
        P = two_param[lam]
        scal = one
        for a, l in arm_leg_pairs(lam):
            scal = scal * (one - (q ** a) * (t ** (l + 1)))
        J = P.scale(scal)
        J = J.subs_coeffs({"t": tinv}, QT)
        H = plethys_sub(J, lambda r: (one - tinv ** r).inverse())
        H = H.scale(t ** n_stat(lam)).to("s")
        for mu, c in H.coeffs.items():
            if not c.is_polynomial():
                raise AssertionError(f"Macdonald coefficient not polynomial at {lam}")
        if n > 0 and H.coeff((n,)) != one:
            raise AssertionError(f"Macdonald normalization failed at {lam}")
        out.append((lam, H))
    return tuple(out)


def modified_macdonald(lam) -> SymFunc:
    """Modified Macdonald polynomial over Q(q,t), Schur basis."""
    lam = check_partition(lam)
    return dict(_macdonald_degree(sum(lam)))[lam]


def n_factor(lam, z: RatFun, w: RatFun, u: RatFun = None,
             even_hooks_only: bool = False) -> RatFun:
    """Product over cells of (z^{a+1} - u w^l)(z^a - u^{-1} w^{l+1}).

    With u omitted the plain two-parameter product is returned.  Restricting
    to cells of even hook length gives the wreath variant.
    """
    lam = check_partition(lam)
    vars = z.vars
    out = RatFun.const(vars, 1)
    uinv = u.inverse() if u is not None else None
    for a, l in arm_leg_pairs(lam):
        if even_hooks_only and (a + l + 1) % 2 != 0:
            continue
        first = z ** (a + 1) - (w ** l if u is None else u * w ** l)
        second = z ** a - (w ** (l + 1) if u is None else uinv * w ** (l + 1))
        out = out * first * second
    return out


def n_tilde_factor(lam, z: RatFun, w: RatFun, u: RatFun = None) -> RatFun:
    """The even-hook-only product; equals 1 exactly on 2-cores."""
    return n_factor(lam, z, w, u, even_hooks_only=True)


def self_pairing_product(lam, vars=QT) -> RatFun:
    """prod (q^{a+1} - t^l)(q^a - t^{l+1}), the expected Macdonald self-pairing."""
    q = RatFun.variable(vars, "q")
    t = RatFun.variable(vars, "t")
    return n_factor(lam, q, t)
