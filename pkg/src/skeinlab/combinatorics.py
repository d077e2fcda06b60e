"""Partitions and symmetric-group data used by the annulus expansions.

Characters come from the Murnaghan-Nakayama rule (on beta-sets), LR
coefficients from counting LR tableaux.  Everything is memoized on
partition tuples.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import BoundExceeded, SizeMismatch

__all__ = [
    "Partition",
    "partitions_of",
    "hook_content_data",
    "character",
    "lr_coefficient",
    "lr_coefficient_by_characters",
    "sub_partitions",
    "PARTITION_BOUND",
]

PARTITION_BOUND = 20


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> lam = Partition([2, 2])
    >>> lam.kappa, lam.z, lam.hooks()
    (0, 8, [3, 2, 2, 1])
    """

    def __new__(cls, parts=()):
        if isinstance(parts, str):
            return cls.parse(parts)
        parts = list(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts.pop()
        parts = tuple(parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        text = text.strip()
        if not text:
            return super().__new__(cls, ())
        return cls(int(x) for x in text.split(","))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self):
        return f"Partition({list(self)})"

    def to_json(self):
        return list(self)

    def conjugate(self):
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def boxes(self):
        """Boxes ``(i, j)`` with 1-based row ``i`` and column ``j``."""
        return [(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def contents(self):
        return [j - i for i, j in self.boxes()]

    def hooks(self):
        conj = self.conjugate()
        return [self[i - 1] + conj[j - 1] - i - j + 1 for i, j in self.boxes()]

    def multiplicities(self):
        return Counter(self)

    @property
    def kappa(self):
        return sum(p * (p - 2 * j + 1) for j, p in enumerate(self, start=1))

    @property
    def z(self):
        out = 1
        for part, m in Counter(self).items():
            out *= part**m * factorial(m)
        return out

    def aut_order(self):
        out = 1
        for m in Counter(self).values():
            out *= factorial(m)
        return out

    def contains(self, other):
        """Young-diagram inclusion ``other <= self``."""
        other = Partition(other)
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def union(self, other):
        """Multiset union of parts (the cycle type of a product of disjoint permutations)."""
        return Partition(sorted(tuple(self) + tuple(other), reverse=True))


EMPTY = Partition()


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n, bound=PARTITION_BOUND):
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [str(p) for p in partitions_of(3)]
    ['[3]', '[2,1]', '[1,1,1]']
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise BoundExceeded(f"partitions of {n} exceed the configured bound {bound}")
    return [Partition(p) for p in _partitions(n, n)]


def sub_partitions(lam):
    """Every partition whose Young diagram fits inside ``lam`` (including empty)."""
    lam = Partition(lam)
    out = [EMPTY]

    def rec(prefix, i, cap):
        if i == len(lam):
            return
        for part in range(1, min(cap, lam[i]) + 1):
            p = prefix + (part,)
            out.append(Partition(p))
            rec(p, i + 1, part)

    rec((), 0, lam[0] if lam else 0)
    return out


def hook_content_data(lam):
    lam = Partition(lam)
    return {
        "hooks": lam.hooks(),
        "contents": lam.contents(),
        "kappa": lam.kappa,
        "z": lam.z,
    }


# -- characters -------------------------------------------------------------


@lru_cache(maxsize=None)
def _mn(beta, mu):
    # beta: sorted tuple of distinct non-negative beads; mu: tuple of cycle lengths
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in beads:
            continue
        height = sum(1 for x in beta if t < x < b)
        moved = tuple(sorted((beads - {b}) | {t}))
        sign = -1 if height & 1 else 1
        total += sign * _mn(moved, rest)
    return total


def character(lam, mu):
    """Irreducible character value ``chi_lam`` on the class of cycle type ``mu``.

    >>> character([2, 1], [1, 1, 1]), character([1, 1], [2])
    (2, -1)
    """
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    n = len(lam)
    beta = tuple(sorted(lam[i] + (n - 1 - i) for i in range(n)))
    return _mn(beta, tuple(mu))


# -- Littlewood-Richardson ----------------------------------------------------


@lru_cache(maxsize=None)
def _lr(lam, mu, nu):
    rows = [(i, lam[i] if i < len(lam) else 0, nu[i]) for i in range(len(nu))]
    cells = [(i, j) for i, lo, hi in rows for j in range(hi - 1, lo - 1, -1)]
    if not cells:
        return 1
    filling = {}
    counts = [0] * (len(mu) + 1)

    def place(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        upper = len(mu)
        right = filling.get((i, j + 1))
        if right is not None:
            upper = min(upper, right)
        above = filling.get((i - 1, j))
        lower = above + 1 if above is not None else 1
        found = 0
        for v in range(lower, upper + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            found += place(idx + 1)
            del filling[(i, j)]
            counts[v] -= 1
        return found

    return place(0)


def lr_coefficient(lam, mu, nu):
    """Littlewood-Richardson coefficient ``c^nu_{lam, mu}`` via LR tableaux.

    Counts semistandard fillings of ``nu / lam`` with content ``mu`` whose
    reverse reading word is a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    return _lr(lam, mu, nu)


def lr_coefficient_by_characters(lam, mu, nu):
    """The same coefficient from the Frobenius character sum (slow; an oracle)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size:
        return 0
    total = Fraction(0)
    for rho in partitions_of(lam.size):
        x = Fraction(character(lam, rho), rho.z)
        if not x:
            continue
        for tau in partitions_of(mu.size):
            y = Fraction(character(mu, tau), tau.z)
            if y:
                total += x * y * character(nu, rho.union(tau))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral LR coefficient {total}")
    return int(total)
