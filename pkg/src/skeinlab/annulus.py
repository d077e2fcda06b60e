"""The skein of the annulus as a formal algebra.

Elements are finite linear combinations of basis monomials, either in the
complete-symmetric generators (``HH``: monomials in ``h_m`` and ``h*_k``) or
in power sums (``PP``: ``P_tau P*_delta`` for a pair of partitions).  The
two-partition basis element ``Q_{lam,mu}`` is built as a determinant in
``HH`` and pushed to ``PP`` through LR coefficients and characters; finally
each power sum is written in closed-braid pattern atoms ``A(i, j)``.

Rational character coefficients are kept exact by storing an integer
``scale``: the element is ``(1/scale) * sum(coeff * monomial)``.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, lcm

from .combinatorics import Partition, character, lr_coefficient, partitions_of, sub_partitions
from .ring import LaurentPoly, SkeinScalar, Z, bracket

__all__ = [
    "HSymbol",
    "AnnulusElement",
    "PatternAtom",
    "q_matrix",
    "q_element",
    "q_expand_qq",
    "expand_qq_to_hh",
    "schur_to_powersum",
    "qlm_to_pp",
    "pp_to_atoms",
    "alpha_m",
]

HH = "HH"
PP = "PP"


@dataclass(frozen=True)
class HSymbol:
    """``h_m`` (``star=False``) or ``h*_m`` (``star=True``) with ``m >= 1``."""

    index: int
    star: bool = False

    def __str__(self):
        return f"h*_{self.index}" if self.star else f"h_{self.index}"


def _h(m, star):
    if m < 0:
        return 0
    if m == 0:
        return 1
    return HSymbol(m, star)


class AnnulusElement:
    """Linear combination of annulus basis monomials.

    ``HH`` monomials are pairs ``(h_indices, hstar_indices)`` of descending
    tuples; ``PP`` monomials are pairs ``(tau, delta)`` of partitions.
    """

    __slots__ = ("basis", "terms", "scale")

    def __init__(self, basis, terms=None, scale=1):
        if basis not in (HH, PP):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for mono, c in (terms or {}).items():
            c = SkeinScalar.coerce(c)
            if not c.is_zero():
                clean[mono] = c
        self.terms = clean
        self.scale = scale

    @classmethod
    def one(cls, basis):
        key = ((), ()) if basis == HH else (Partition(), Partition())
        return cls(basis, {key: 1})

    def _mono_mul(self, m1, m2):
        if self.basis == HH:
            return (
                tuple(sorted(m1[0] + m2[0], reverse=True)),
                tuple(sorted(m1[1] + m2[1], reverse=True)),
            )
        return (m1[0].union(m2[0]), m1[1].union(m2[1]))

    def __add__(self, other):
        self._check(other)
        scale = lcm(self.scale, other.scale)
        f1, f2 = scale // self.scale, scale // other.scale
        out = {m: c * f1 for m, c in self.terms.items()}
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c * f2
        return AnnulusElement(self.basis, out, scale).reduced()

    def __neg__(self):
        return AnnulusElement(self.basis, {m: -c for m, c in self.terms.items()}, self.scale)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, SkeinScalar, LaurentPoly)):
            return AnnulusElement(self.basis, {m: c * other for m, c in self.terms.items()}, self.scale)
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = self._mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return AnnulusElement(self.basis, out, self.scale * other.scale).reduced()

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, AnnulusElement) or other.basis != self.basis:
            raise TypeError("annulus elements must share a basis")

    def reduced(self):
        """Divide out any integer factor shared by ``scale`` and all coefficients."""
        g = self.scale
        for c in self.terms.values():
            if g == 1:
                break
            g = gcd(g, c.numerator.content())
        if g <= 1:
            return self
        return AnnulusElement(
            self.basis, {m: c.exact_div_int(g) for m, c in self.terms.items()}, self.scale // g
        )

    def coefficient(self, mono):
        """Exact coefficient of ``mono``; requires the scale to divide it."""
        c = self.terms.get(mono, SkeinScalar(0))
        return c.exact_div_int(self.scale) if self.scale != 1 else c

    def __eq__(self, other):
        if not isinstance(other, AnnulusElement) or other.basis != self.basis:
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(
            self.terms[m] * other.scale == other.terms[m] * self.scale for m in self.terms
        )

    __hash__ = None

    def bidegrees(self):
        """Set of (forward degree, reverse degree) over the stored monomials."""
        if self.basis == HH:
            return {(sum(m[0]), sum(m[1])) for m in self.terms}
        return {(m[0].size, m[1].size) for m in self.terms}

    def _mono_str(self, mono):
        if self.basis == HH:
            parts = [f"h_{i}" for i in mono[0]] + [f"h*_{k}" for k in mono[1]]
        else:
            parts = [f"P_{i}" for i in mono[0]] + [f"P*_{k}" for k in mono[1]]
        return "*".join(parts) or "1"

    def __str__(self):
        if not self.terms:
            return "0"
        body = " + ".join(
            f"({c})*{self._mono_str(m)}" for m, c in sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))
        )
        return body if self.scale == 1 else f"1/{self.scale} * ({body})"

    __repr__ = __str__

    def to_json(self):
        rows = []
        for m, c in sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0])):
            rows.append({"monomial": [list(m[0]), list(m[1])], "coefficient": c.to_json()})
        return {"basis": self.basis, "scale": self.scale, "terms": rows}


def _mono_key(m):
    return (-(sum(m[0]) + sum(m[1])), [-x for x in m[0]], [-x for x in m[1]])


# -- Q_{lam, mu} as a determinant --------------------------------------------


def q_matrix(lam, mu):
    """The ``(l+r) x (l+r)`` matrix whose determinant is ``Q_{lam,mu}``.

    Entries are ``HSymbol`` instances, or the integers 0 and 1 for
    ``h_m`` with ``m < 0`` and ``m == 0``.

    >>> [[str(x) for x in row] for row in q_matrix([1], [1])]
    [['h*_1', '1'], ['1', 'h_1']]
    """
    lam, mu = Partition(lam), Partition(mu)
    l, r = len(lam), len(mu)
    n = l + r
    rows = []
    for i in range(1, r + 1):
        base = mu[r - i] + (i - 1)
        rows.append([_h(base - (j - 1), True) for j in range(1, n + 1)])
    for k in range(1, l + 1):
        rows.append([_h(lam[k - 1] - r - k + j, False) for j in range(1, n + 1)])
    return rows


def _entry_elem(x):
    if x == 0:
        return None
    if x == 1:
        return ((), ())
    return ((x.index,), ()) if not x.star else ((), (x.index,))


def _det(matrix):
    # Laplace expansion along the first row; entries are HH monomial keys or None
    n = len(matrix)
    if n == 0:
        return {((), ()): 1}
    out = Counter()
    first = matrix[0]
    for col, entry in enumerate(first):
        if entry is None:
            continue
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        sub = _det(minor)
        sign = -1 if col & 1 else 1
        for mono, c in sub.items():
            m = (
                tuple(sorted(entry[0] + mono[0], reverse=True)),
                tuple(sorted(entry[1] + mono[1], reverse=True)),
            )
            out[m] += sign * c
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _q_element_terms(lam, mu):
    matrix = [[_entry_elem(x) for x in row] for row in q_matrix(lam, mu)]
    return _det(matrix)


def q_element(lam, mu=()):
    """``Q_{lam,mu} = det M_{lam,mu}`` expanded in h / h* monomials.

    >>> str(q_element([1], [1]))
    '(1)*h_1*h*_1 + (-1)*1'
    """
    lam, mu = Partition(lam), Partition(mu)
    return AnnulusElement(HH, dict(_q_element_terms(lam, mu)))


@lru_cache(maxsize=None)
def _qq_terms(lam, mu):
    out = Counter()
    for sigma in sub_partitions(lam):
        if not mu.contains(sigma.conjugate()):
            continue
        sign = -1 if sigma.size & 1 else 1
        sig_t = sigma.conjugate()
        for rho in partitions_of(lam.size - sigma.size):
            c1 = lr_coefficient(sigma, rho, lam)
            if not c1:
                continue
            for nu in partitions_of(mu.size - sigma.size):
                c2 = lr_coefficient(sig_t, nu, mu)
                if c2:
                    out[(rho, nu)] += sign * c1 * c2
    return tuple(sorted(((c, rho, nu) for (rho, nu), c in out.items() if c), key=lambda t: (-t[1].size, t[1], t[2])))


def q_expand_qq(lam, mu=()):
    """Signed expansion ``Q_{lam,mu} = sum c * Q_rho Q*_nu``.

    Returns ``[(coefficient, rho, nu), ...]`` with multiplicities merged.

    >>> [(c, str(r), str(n)) for c, r, n in q_expand_qq([1], [1])]
    [(1, '[1]', '[1]'), (-1, '[]', '[]')]
    """
    return list(_qq_terms(Partition(lam), Partition(mu)))


def expand_qq_to_hh(terms):
    """Re-expand ``sum c Q_rho Q*_nu`` through Jacobi-Trudi determinants."""
    total = AnnulusElement(HH)
    for c, rho, nu in terms:
        total = total + q_element(rho, ()) * q_element((), nu) * c
    return total


# -- power sums ---------------------------------------------------------------


def schur_to_powersum(lam, reversed=False):
    """``Q_lam = sum_mu chi_lam(mu)/z_mu P_mu`` (or the starred version).

    >>> str(schur_to_powersum([2]))
    '1/2 * ((1)*P_2 + (1)*P_1*P_1)'
    """
    lam = Partition(lam)
    mus = partitions_of(lam.size)
    scale = lcm(*[m.z for m in mus])
    empty = Partition()
    terms = {}
    for m in mus:
        chi = character(lam, m)
        if chi:
            key = (empty, m) if reversed else (m, empty)
            terms[key] = chi * (scale // m.z)
    return AnnulusElement(PP, terms, scale).reduced()


@lru_cache(maxsize=None)
def _qlm_to_pp(lam, mu):
    total = AnnulusElement(PP)
    for c, rho, nu in _qq_terms(lam, mu):
        total = total + schur_to_powersum(rho) * schur_to_powersum(nu, reversed=True) * c
    return total


def qlm_to_pp(lam, mu=()):
    """``Q_{lam,mu}`` in the ``P_tau P*_delta`` basis."""
    return _qlm_to_pp(Partition(lam), Partition(mu))


# -- pattern atoms ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PatternAtom:
    """Closure of ``s_{i+j} ... s_{j+1} s_j^-1 ... s_1^-1`` (one curve of winding i+j+1).

    ``reversed`` marks the orientation-reversed copy used for ``P*`` parts.
    """

    i: int
    j: int
    reversed: bool = False

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("pattern atom indices must be non-negative")

    @property
    def winding(self):
        return self.i + self.j + 1

    def __str__(self):
        return f"A{'*' if self.reversed else ''}({self.i},{self.j})"


def pp_to_atoms(tau, delta=()):
    """Write ``P_tau P*_delta`` in pattern atoms.

    Each part ``m`` contributes ``(q - q^-1)/{m} * sum_j A(m-1-j, j)``.
    Returns ``(coefficient, [(atoms, multiplicity), ...])`` where ``atoms`` is
    a sorted tuple (forward atoms first, then reversed ones) and products are
    taken in the commutative annulus algebra.
    """
    tau, delta = Partition(tau), Partition(delta)
    num = LaurentPoly.constant(1)
    dens = []
    choices = []
    for part, rev in [(p, False) for p in tau] + [(p, True) for p in delta]:
        num = num * Z
        dens.append(part)
        choices.append([PatternAtom(part - 1 - j, j, rev) for j in range(part)])
    coeff = SkeinScalar(num, dens)
    counts = Counter()
    for combo in product(*choices):
        counts[tuple(sorted(combo, key=lambda t: (t.reversed, t)))] += 1
    return coeff, sorted(counts.items())


def alpha_m(m):
    """``q^{m(m-1)/2} prod_{i=1}^m {i}/{1}``, reduced to a Laurent polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    if m > 20:
        raise ValueError("m must be at most 20")
    num = LaurentPoly.monomial(1, m * (m - 1) // 2, 0)
    for i in range(1, m + 1):
        num = num * bracket(i)
    return SkeinScalar(num, [1] * m)
