"""Exact coefficient arithmetic for the HOMFLY skein.

Two value types live here:

``LaurentPoly``
    an element of Z[q^{+-1}, a^{+-1}] stored as a sparse map
    ``(q_exp, a_exp) -> int``.

``SkeinScalar``
    a fraction ``numerator / prod {k}`` whose denominator is a multiset of
    brackets ``{k} = q^k - q^-k``.  These are exactly the elements of the
    coefficient ring of the framed HOMFLY skein.

Both are immutable.  Coefficients are Python ints, so nothing overflows.
"""

from collections import Counter
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import DivisionNotExact, NotDivisible

__all__ = [
    "LaurentPoly",
    "SkeinScalar",
    "Ring",
    "bracket",
    "exact_div_bracket",
    "exact_div",
    "substitute",
    "membership",
    "Q",
    "A",
    "Z",
    "S",
    "ONE",
    "ZERO",
]


class LaurentPoly:
    """Sparse bivariate Laurent polynomial in ``q`` and ``a``.

    >>> p = LaurentPoly({(2, -2): 1, (-2, -2): 1, (0, -4): -1})
    >>> str(p)
    'q^2*a^-2 - a^-4 + q^-2*a^-2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        else:
            self._terms = {(int(k[0]), int(k[1])): int(c) for k, c in dict(terms).items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # terms already clean: int keys, no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff=1, q=0, a=0):
        return cls._wrap({(q, a): coeff} if coeff else {})

    @classmethod
    def constant(cls, c):
        return cls.monomial(c)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def q_range(self):
        qs = [k[0] for k in self._terms]
        return (min(qs), max(qs)) if qs else (0, 0)

    def a_range(self):
        as_ = [k[1] for k in self._terms]
        return (min(as_), max(as_)) if as_ else (0, 0)

    def content(self):
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def coefficient(self, q=0, a=0):
        return self._terms.get((q, a), 0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly._wrap({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        get = out.get
        for (q1, a1), c1 in self._terms.items():
            for (q2, a2), c2 in other._terms.items():
                k = (q1 + q2, a1 + a2)
                out[k] = get(k, 0) + c1 * c2
        return LaurentPoly._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((qe, ae), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient has no inverse")
            m = -n
            return LaurentPoly.monomial(c**m, -qe * m, -ae * m)
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, q=0, a=0):
        """Multiply by the monomial ``q^q * a^a``."""
        return LaurentPoly._wrap({(k[0] + q, k[1] + a): c for k, c in self._terms.items()})

    def exact_div_int(self, n):
        if any(c % n for c in self._terms.values()):
            raise NotDivisible(f"integer content not divisible by {n}")
        return LaurentPoly._wrap({k: c // n for k, c in self._terms.items()})

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, SkeinScalar):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- maps -------------------------------------------------------------

    def substitute(self, q_map="id", a_map="id"):
        """Image under ``q -> {q, -q, 1/q}`` and ``a -> {a, -a, 1/a}``.

        ``q_map``/``a_map`` are one of ``"id"``, ``"neg"``, ``"inv"``.
        """
        out = {}
        for (qe, ae), c in self._terms.items():
            if q_map == "neg":
                c = -c if qe & 1 else c
            elif q_map == "inv":
                qe = -qe
            if a_map == "neg":
                c = -c if ae & 1 else c
            elif a_map == "inv":
                ae = -ae
            out[(qe, ae)] = c
        return LaurentPoly._wrap(out)

    def specialize_a(self, q_power):
        """Substitute ``a = q^q_power``; returns a polynomial in q alone."""
        out = {}
        for (qe, ae), c in self._terms.items():
            k = (qe + q_power * ae, 0)
            out[k] = out.get(k, 0) + c
        return LaurentPoly._wrap({k: c for k, c in out.items() if c})

    def a_slices(self):
        """Group by a-exponent: ``{a_exp: {q_exp: coeff}}``."""
        out = {}
        for (qe, ae), c in self._terms.items():
            out.setdefault(ae, {})[qe] = c
        return out

    # -- rendering --------------------------------------------------------

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (qe, ae), c in self.sorted_terms():
            mono = []
            if qe:
                mono.append("q" if qe == 1 else f"q^{qe}")
            if ae:
                mono.append("a" if ae == 1 else f"a^{ae}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append(("- " if c < 0 else "+ ") + text)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self):
        return [[qe, ae, str(c)] for (qe, ae), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data):
        return cls({(int(qe), int(ae)): int(c) for qe, ae, c in data})


Q = LaurentPoly.monomial(1, 1, 0)
A = LaurentPoly.monomial(1, 0, 1)
Z = LaurentPoly({(1, 0): 1, (-1, 0): -1})


def bracket(k):
    """``{k} = q^k - q^-k`` as a LaurentPoly."""
    if k <= 0:
        raise ValueError("bracket index must be positive")
    return LaurentPoly._wrap({(k, 0): 1, (-k, 0): -1})


def _div_slice_by_bracket(f, k):
    # f: {q_exp: coeff}; solve f = g * (q^k - q^-k) from the top exponent down
    lo = min(f)
    hi = max(f)
    if hi - lo < 2 * k:
        raise NotDivisible
    g = {}
    for e in range(hi, lo + 2 * k - 1, -1):
        v = f.get(e, 0) + g.get(e + k, 0)
        if v:
            g[e - k] = v
    for e in range(lo + 2 * k - 1, lo - 1, -1):
        if f.get(e, 0) + g.get(e + k, 0):
            raise NotDivisible
    return g


def exact_div_bracket(p, k):
    """Return ``p / {k}`` or raise :class:`NotDivisible`.

    >>> str(exact_div_bracket(bracket(2), 1))
    'q + q^-1'
    """
    p = LaurentPoly.coerce(p)
    if p.is_zero():
        return p
    out = {}
    try:
        for ae, f in p.a_slices().items():
            for qe, c in _div_slice_by_bracket(f, k).items():
                out[(qe, ae)] = c
    except NotDivisible:
        raise NotDivisible(f"{{{k}}} does not divide {p}") from None
    return LaurentPoly._wrap(out)


def _lead(terms):
    return max(terms)


def exact_div(p, d):
    """Exact quotient ``p / d`` in Z[q^+-1, a^+-1], or raise NotDivisible.

    Plain multivariate division with lexicographic (q, a) leading terms.
    """
    p = LaurentPoly.coerce(p)
    d = LaurentPoly.coerce(d)
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    dterms = d._terms
    if len(dterms) == 1:
        ((dq, da), dc), = dterms.items()
        if any(c % dc for c in p._terms.values()):
            raise NotDivisible(f"{d} does not divide {p}")
        return LaurentPoly._wrap({(k[0] - dq, k[1] - da): c // dc for k, c in p._terms.items()})
    dlead = max(dterms)
    dlc = dterms[dlead]
    pq, pa = p.q_range(), p.a_range()
    dq_, da_ = d.q_range(), d.a_range()
    # every quotient monomial must lie in this box
    qlo, qhi = pq[0] - dq_[0], pq[1] - dq_[1]
    alo, ahi = pa[0] - da_[0], pa[1] - da_[1]
    rem = dict(p._terms)
    quot = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        mono = (lead[0] - dlead[0], lead[1] - dlead[1])
        if not (qlo <= mono[0] <= qhi and alo <= mono[1] <= ahi) or c % dlc:
            raise NotDivisible(f"{d} does not divide {p}")
        f = c // dlc
        quot[mono] = f
        for (dq, da), dcoef in dterms.items():
            k = (dq + mono[0], da + mono[1])
            v = rem.get(k, 0) - f * dcoef
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._wrap(quot)


# -- univariate helpers (polynomials in q, for q-only content) --------------


def _upoly_from_slice(f):
    lo = min(f)
    hi = max(f)
    return [Fraction(f.get(e, 0)) for e in range(lo, hi + 1)]


def _upoly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    while c and c[0] == 0:
        c.pop(0)
    return c


def _upoly_rem(f, g):
    f = list(f)
    while len(f) >= len(g) and f:
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] -= factor * gc
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return f


def _upoly_gcd(f, g):
    f = _upoly_trim(list(f))
    g = _upoly_trim(list(g))
    while g:
        f, g = g, _upoly_trim(_upoly_rem(f, g))
    return f


def _primitive_int(c):
    # scale a rational coefficient list to a primitive integer one with positive lead
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _q_content(p):
    """Return ``(int_content, primitive q-only factor as LaurentPoly)`` of p.

    The q-only factor is the gcd in Z[q] of the a-slices, normalized to be a
    polynomial with nonzero constant term and positive leading coefficient.
    """
    slices = list(p.a_slices().values())
    g = None
    for f in slices:
        u = _upoly_from_slice(f)
        g = u if g is None else _upoly_gcd(g, u)
        if len(g) == 1:
            break
    prim = _primitive_int(g)
    return p.content(), LaurentPoly({(i, 0): c for i, c in enumerate(prim)})


class Ring(Enum):
    LAURENT = "LAURENT"
    EVEN = "EVEN"
    ZSQ = "ZSQ"


class SkeinScalar:
    """``numerator / prod_k {k}`` with bracket denominators.

    Canonical form: no denominator bracket divides the numerator, checked
    greedily from the largest bracket index down.  Equality is by value.
    """

    __slots__ = ("numerator", "denominators")

    def __init__(self, numerator=0, denominators=(), normalize=True):
        if isinstance(numerator, SkeinScalar):
            numerator, denominators = numerator.numerator, numerator.denominators + tuple(denominators)
        numerator = LaurentPoly.coerce(numerator)
        dens = tuple(sorted(int(k) for k in denominators))
        if any(k <= 0 for k in dens):
            raise ValueError("bracket denominators must be positive")
        if numerator.is_zero():
            dens = ()
        elif normalize and dens:
            numerator, dens = _reduce(numerator, dens)
        self.numerator = numerator
        self.denominators = dens

    @classmethod
    def coerce(cls, x):
        if isinstance(x, SkeinScalar):
            return x
        return cls(LaurentPoly.coerce(x))

    # -- properties -------------------------------------------------------

    def is_zero(self):
        return self.numerator.is_zero()

    def is_laurent(self):
        return not self.denominators

    def denominator_poly(self):
        out = LaurentPoly.constant(1)
        for k in self.denominators:
            out = out * bracket(k)
        return out

    def as_laurent(self):
        if self.denominators:
            raise DivisionNotExact(f"{self} has bracket denominators")
        return self.numerator

    # -- arithmetic -------------------------------------------------------

    def _aligned(self, other):
        c1 = Counter(self.denominators)
        c2 = Counter(other.denominators)
        n1 = self.numerator
        n2 = other.numerator
        for k in set(c1) | set(c2):
            m = max(c1[k], c2[k])
            for _ in range(m - c1[k]):
                n1 = n1 * bracket(k)
            for _ in range(m - c2[k]):
                n2 = n2 * bracket(k)
        dens = []
        for k in set(c1) | set(c2):
            dens.extend([k] * max(c1[k], c2[k]))
        return n1, n2, dens

    def __add__(self, other):
        try:
            other = SkeinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.denominators == other.denominators:
            return SkeinScalar(self.numerator + other.numerator, self.denominators)
        n1, n2, dens = self._aligned(other)
        return SkeinScalar(n1 + n2, dens)

    __radd__ = __add__

    def __neg__(self):
        return SkeinScalar(-self.numerator, self.denominators, normalize=False)

    def __sub__(self, other):
        try:
            other = SkeinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = SkeinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return SkeinScalar(self.numerator * other.numerator, self.denominators + other.denominators)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("use divide() for negative powers")
        out = SkeinScalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        return divide(self, other)

    def __rtruediv__(self, other):
        return divide(SkeinScalar.coerce(other), self)

    def exact_div_int(self, n):
        """Divide by a nonzero integer; the result must keep integer coefficients."""
        try:
            return SkeinScalar(self.numerator.exact_div_int(n), self.denominators, normalize=False)
        except NotDivisible:
            raise DivisionNotExact(f"{self} is not divisible by {n}") from None

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = SkeinScalar.coerce(other)
        if not isinstance(other, SkeinScalar):
            return NotImplemented
        if self.denominators == other.denominators:
            return self.numerator == other.numerator
        lhs = self.numerator * other.denominator_poly()
        rhs = other.numerator * self.denominator_poly()
        return lhs == rhs

    __hash__ = None

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if not self.denominators:
            return str(self.numerator)
        counts = Counter(self.denominators)
        den = "*".join(
            f"{{{k}}}" if m == 1 else f"{{{k}}}^{m}" for k, m in sorted(counts.items())
        )
        return f"({self.numerator}) / ({den})"

    def __repr__(self):
        return f"SkeinScalar({str(self)!r})"

    def to_json(self):
        return {"numerator": self.numerator.to_json(), "denominators": list(self.denominators)}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentPoly.from_json(data["numerator"]), data.get("denominators", ()))


def _reduce(num, dens):
    remaining = Counter(dens)
    for k in sorted(remaining, reverse=True):
        while remaining[k]:
            try:
                num = exact_div_bracket(num, k)
            except NotDivisible:
                break
            remaining[k] -= 1
    out = []
    for k in sorted(remaining):
        out.extend([k] * remaining[k])
    return num, tuple(out)


def divide(x, y):
    """Exact quotient ``x / y`` in the skein coefficient ring.

    Raises :class:`DivisionNotExact` when the quotient needs a denominator
    that is not a product of brackets.
    """
    x = SkeinScalar.coerce(x)
    y = SkeinScalar.coerce(y)
    if y.is_zero():
        raise ZeroDivisionError("division by zero skein scalar")
    if x.is_zero():
        return x
    top = x.numerator * y.denominator_poly()
    div = y.numerator
    dens = list(x.denominators)
    _, cq = _q_content(div)
    if cq.is_monomial():
        body = div
    else:
        body = exact_div(div, cq)
    try:
        top = exact_div(top, body)
    except NotDivisible:
        raise DivisionNotExact(f"({x}) / ({y}) is not in the coefficient ring") from None
    c = cq
    if not c.is_monomial():
        try:
            top = exact_div(top, c)
            c = LaurentPoly.monomial()
        except NotDivisible:
            pass
    # remaining divisor cq(q): absorb cyclotomic factors into brackets
    span = c.q_range()[1] - c.q_range()[0]
    k = 1
    bound = 2 * span * span + 2
    while span > 0 and k <= bound:
        g = _gcd_q(c, bracket(k))
        if g.q_range()[1] - g.q_range()[0] > 0:
            c = exact_div(c, g)
            top = top * exact_div(bracket(k), g)
            dens.append(k)
            span = c.q_range()[1] - c.q_range()[0]
        else:
            k += 1
    if span > 0:
        raise DivisionNotExact(f"({x}) / ({y}) needs a non-bracket denominator")
    # c is now a constant times a power of q
    ((ce, _), cc), = c.items()
    if any(v % cc for v in top._terms.values()):
        raise DivisionNotExact(f"({x}) / ({y}) needs a non-integer coefficient")
    top = LaurentPoly._wrap({(k_[0] - ce, k_[1]): v // cc for k_, v in top._terms.items()})
    return SkeinScalar(top, dens)


def _gcd_q(f, g):
    # gcd of two q-only Laurent polynomials, as primitive integer polynomial
    u = _upoly_gcd(_upoly_from_slice(f.a_slices()[0]), _upoly_from_slice(g.a_slices()[0]))
    prim = _primitive_int(u)
    return LaurentPoly({(i, 0): c for i, c in enumerate(prim)})


def substitute(x, q_map="id", a_map="id"):
    """Apply ``q -> {q, -q, 1/q}`` and ``a -> {a, -a, 1/a}`` to a scalar."""
    x = SkeinScalar.coerce(x)
    num = x.numerator.substitute(q_map, a_map)
    sign = 1
    for k in x.denominators:
        if q_map == "inv" or (q_map == "neg" and k & 1):
            sign = -sign
    if sign < 0:
        num = -num
    return SkeinScalar(num, x.denominators)


def membership(x, ring):
    """Test whether ``x`` lies in the Laurent ring, the even subring, or Z[z^2, a^+-1]."""
    x = SkeinScalar.coerce(x)
    ring = Ring(ring)
    if x.denominators:
        return False
    p = x.numerator
    if ring is Ring.LAURENT:
        return True
    if ring is Ring.EVEN:
        return all(not (qe & 1 or ae & 1) for qe, ae in p._terms)
    return p.substitute("neg") == p and p.substitute("inv") == p


ONE = SkeinScalar(1)
ZERO = SkeinScalar(0)
S = SkeinScalar(LaurentPoly({(0, 1): 1, (0, -1): -1}), (1,))
