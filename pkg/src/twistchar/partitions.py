"""Partition combinatorics: hooks, 2-cores, hook polynomials, and types.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ().  A *type* bundles two partitions with an unordered multiset
of nonempty partitions; types index the character families that drive the
finite-field point-count formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polys import MultiPoly


def check_partition(parts) -> tuple:
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, descending lex: (n) first, (1,...,1) last."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_upto(n: int):
    for d in range(n + 1):
        yield from partitions_of(d)


def dual(lam: tuple) -> tuple:
    """Conjugate partition (transpose of the Young diagram)."""
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def cells(lam: tuple):
    """All (row, col) cells, 1-based."""
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            yield (i, j)


def arm_leg_hook(lam: tuple, cell) -> tuple:
    """(arm, leg, hook) of a cell; hook = arm + leg + 1."""
    i, j = cell
    if not (1 <= i <= len(lam)) or not (1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside the diagram of {lam}")
    arm = lam[i - 1] - j
    leg = sum(1 for r in range(i, len(lam)) if lam[r] >= j)
    return arm, leg, arm + leg + 1


def hooks(lam: tuple):
    """Multiset of hook lengths."""
    conj = dual(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in cells(lam)]


def arm_leg_pairs(lam: tuple):
    """Multiset of (arm, leg) pairs over all cells."""
    conj = dual(lam)
    return [(lam[i - 1] - j, conj[j - 1] - i) for i, j in cells(lam)]


def n_stat(lam: tuple) -> int:
    """sum (i-1)*lam_i, the standard partition statistic."""
    return sum(i * p for i, p in enumerate(lam))


def z_stat(lam: tuple) -> int:
    """Centralizer order in the symmetric group: prod i^{m_i} m_i!."""
    out = 1
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        out *= p ** m * math.factorial(m)
    return out


def hook_polynomial(lam: tuple, vars=("q",)) -> MultiPoly:
    """prod over cells of (1 - q^{hook})."""
    q = MultiPoly.variable(vars, "q")
    one = MultiPoly.const(vars, 1)
    out = one
    for h in hooks(lam):
        out = out * (one - q ** h)
    return out


# ---------------------------------------------------------------------------
# beta numbers, rim hooks, 2-cores
# ---------------------------------------------------------------------------

def beta_set(lam: tuple, length=None) -> tuple:
    """First-column hook lengths padded to the given length."""
    if length is None:
        length = len(lam)
    if length < len(lam):
        raise ValueError("length too small")
    padded = list(lam) + [0] * (length - len(lam))
    return tuple(padded[i] + (length - 1 - i) for i in range(length))


def partition_from_beta(beta) -> tuple:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    parts = [b - (L - 1 - i) for i, b in enumerate(beta)]
    return tuple(p for p in parts if p > 0)


def remove_rim_hook(lam: tuple, size: int):
    """Yield every partition obtained by removing one rim hook of the size."""
    L = len(lam) + size
    beta = set(beta_set(lam, L))
    for b in sorted(beta, reverse=True):
        if b - size >= 0 and (b - size) not in beta:
            nb = set(beta)
            nb.discard(b)
            nb.add(b - size)
            yield partition_from_beta(nb)


def two_core_by_dominoes(lam: tuple) -> tuple:
    """Repeatedly strip rim 2-hooks straight off the Young diagram."""
    lam = tuple(lam)
    while True:
        nxt = _remove_one_domino(lam)
        if nxt is None:
            return lam
        lam = nxt


def _remove_one_domino(lam: tuple):
    parts = list(lam)
    rows = len(parts)
    # horizontal dominoes at a row end
    for i in range(rows):
        below = parts[i + 1] if i + 1 < rows else 0
        if parts[i] - 2 >= below:
            out = parts[:i] + [parts[i] - 2] + parts[i + 1:]
            return tuple(p for p in out if p > 0)
    # vertical dominoes at two row ends of equal length
    for i in range(rows - 1):
        above = parts[i - 1] if i > 0 else None
        if parts[i] == parts[i + 1] and (i + 2 >= rows or parts[i + 2] < parts[i]):
            if above is None or above >= parts[i]:
                out = parts[:i] + [parts[i] - 1, parts[i + 1] - 1] + parts[i + 2:]
                return tuple(p for p in out if p > 0)
    return None


def two_core_by_abacus(lam: tuple) -> tuple:
    """2-core by pushing abacus beads down their two runners."""
    L = len(lam) if len(lam) % 2 == 0 else len(lam) + 1
    beta = beta_set(lam, L)
    runners = {0: [], 1: []}
    for b in beta:
        runners[b % 2].append(b)
    new = []
    for r in (0, 1):
        k = len(runners[r])
        new.extend(r + 2 * i for i in range(k))
    return partition_from_beta(new)


def two_core(lam: tuple) -> tuple:
    return two_core_by_dominoes(lam)


def is_two_core(lam: tuple) -> bool:
    return all(h % 2 != 0 for h in hooks(lam))


def border_strips(lam: tuple, size: int):
    """Yield (smaller partition, height) for each removable border strip."""
    L = len(lam) + size
    beta = set(beta_set(lam, L))
    for b in sorted(beta, reverse=True):
        lo = b - size
        if lo >= 0 and lo not in beta:
            height = sum(1 for x in beta if lo < x < b)
            nb = set(beta)
            nb.discard(b)
            nb.add(lo)
            yield partition_from_beta(nb), height


# ---------------------------------------------------------------------------
# types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TypeData:
    """A pair of partitions plus an unordered multiset of nonempty partitions.

    ``star`` is stored sorted so equal multisets compare equal.
    """

    plus: tuple
    minus: tuple
    star: tuple  # tuple of nonempty partitions, canonically sorted

    def __post_init__(self):
        object.__setattr__(self, "plus", check_partition(self.plus))
        object.__setattr__(self, "minus", check_partition(self.minus))
        star = tuple(check_partition(p) for p in self.star)
        if any(not p for p in star):
            raise ValueError("star components must be nonempty")
        object.__setattr__(self, "star", tuple(sorted(star, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.plus) + sum(self.minus) + sum(map(sum, self.star))

    @property
    def doubled_size(self) -> int:
        return sum(self.plus) + sum(self.minus) + 2 * sum(map(sum, self.star))

    def components(self) -> tuple:
        """plus, minus and each star member once, empty parts skipped."""
        out = []
        if self.plus:
            out.append(self.plus)
        if self.minus:
            out.append(self.minus)
        out.extend(self.star)
        return tuple(out)

    def doubled_components(self) -> tuple:
        """Components with every star member repeated twice."""
        out = []
        if self.plus:
            out.append(self.plus)
        if self.minus:
            out.append(self.minus)
        for p in self.star:
            out.extend((p, p))
        return tuple(out)

    def merged(self) -> tuple:
        """Single partition collecting the parts of all components."""
        parts = []
        for comp in self.components():
            parts.extend(comp)
        return tuple(sorted(parts, reverse=True))

    def __str__(self):
        fm = lambda p: ",".join(map(str, p)) if p else "-"
        return f"p:{fm(self.plus)}|m:{fm(self.minus)}|s:" + (
            ",".join("(" + ",".join(map(str, p)) + ")" for p in self.star) or "-")


def star_multiplicity_factor(star) -> int:
    """prod m! over multiplicities of the star multiset."""
    mult = {}
    for p in star:
        mult[p] = mult.get(p, 0) + 1
    out = 1
    for m in mult.values():
        out *= math.factorial(m)
    return out


def star_sign_factor(star) -> int:
    """(-1)^l * l! for l the multiset length."""
    l = len(star)
    return (-1) ** l * math.factorial(l)


def type_stats(omega: TypeData):
    """(N, K, doubled components, merged partition, z) for a type."""
    N = star_multiplicity_factor(omega.star)
    K = star_sign_factor(omega.star)
    doubled = omega.doubled_components()
    merged_parts = []
    for comp in omega.components():
        merged_parts.extend(comp)
    merged = tuple(sorted(merged_parts, reverse=True))
    z = 1
    for comp in omega.components():
        z *= z_stat(comp)
    return N, K, doubled, merged, z


def type_n_stat(omega: TypeData) -> int:
    return sum(n_stat(c) for c in omega.components())


@lru_cache(maxsize=None)
def _star_multisets(total: int) -> tuple:
    """All multisets of nonempty partitions with sizes summing to total."""
    pool = [p for d in range(1, total + 1) for p in partitions_of(d)]
    out = []

    def rec(idx, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(idx, len(pool)):
            s = sum(pool[i])
            if s <= remaining:
                acc.append(pool[i])
                rec(i, remaining - s, acc)
                acc.pop()

    rec(0, total, [])
    return tuple(out)


def types_with_doubled_size(n: int):
    """All types whose doubled size |plus|+|minus|+2*|star| equals n."""
    out = []
    for b in range(n // 2 + 1):
        rest = n - 2 * b
        for aplus in range(rest + 1):
            aminus = rest - aplus
            for pp in partitions_of(aplus):
                for pm in partitions_of(aminus):
                    for star in _star_multisets(b):
                        out.append(TypeData(pp, pm, star))
    return out


@dataclass(frozen=True)
class OrderedType:
    """A type with an ordered star sequence (components are position-matched)."""

    plus: tuple
    minus: tuple
    star: tuple

    @property
    def size(self) -> int:
        return sum(self.plus) + sum(self.minus) + sum(map(sum, self.star))

    def components(self) -> tuple:
        return (self.plus, self.minus) + tuple(self.star)

    def profile(self) -> tuple:
        """Component sizes; two ordered types pair only if profiles match."""
        return (sum(self.plus), sum(self.minus), tuple(map(sum, self.star)))

    def merged(self) -> tuple:
        parts = []
        for comp in self.components():
            parts.extend(comp)
        return tuple(sorted(parts, reverse=True))

    def z(self) -> int:
        out = 1
        for comp in self.components():
            out *= z_stat(comp)
        return out


def ordered_types_with_profile(profile) -> tuple:
    """All ordered types with the given (|plus|, |minus|, (|star_i|)) profile."""
    aplus, aminus, star_sizes = profile
    out = []

    def rec(idx, acc):
        if idx == len(star_sizes):
            for pp in partitions_of(aplus):
                for pm in partitions_of(aminus):
                    out.append(OrderedType(pp, pm, tuple(acc)))
            return
        for p in partitions_of(star_sizes[idx]):
            acc.append(p)
            rec(idx + 1, acc)
            acc.pop()

    rec(0, [])
    return tuple(out)


def column_type(multiplicities) -> TypeData:
    """The type of a semisimple class with the given eigenvalue multiplicities."""
    star = tuple((1,) * m for m in sorted(multiplicities, reverse=True))
    return TypeData((), (), star)
