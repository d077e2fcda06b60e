"""Full colored HOMFLYPT invariants of braid closures and their normalizations.

``full_W`` decorates every closure component with ``Q_{lam,mu}``, expands the
decoration into closed-braid pattern atoms, evaluates each satellite and
recombines.  The reduced, normalized and naive variants divide by unknot
values inside the bracket-denominator ring, and the ``verify_*`` helpers
check the integrality and symmetry statements on computed values.
"""

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd

from .annulus import pp_to_atoms, q_expand_qq, qlm_to_pp
from .combinatorics import EMPTY, Partition, character, partitions_of, sub_partitions
from .diagram import BraidWord, braid_closure, cable_satellite
from .errors import ComponentMismatch, DivisionNotExact, ResourceLimit
from .homfly import Evaluator, jones_oracle
from .ring import LaurentPoly, Ring, SkeinScalar, bracket, divide, exact_div, membership, substitute

__all__ = [
    "ColoredLink",
    "InvariantReport",
    "parse_colors",
    "full_W",
    "satellite_H",
    "unknot_value",
    "unknot_by_characters",
    "unknot_by_hooks",
    "unknot_by_evaluator",
    "reduced_P_knot",
    "reduced_Q_link",
    "prefactor",
    "normalized_P_link",
    "naive_P_link",
    "rectangle_prefactor",
    "eigenvalue_ratio",
    "jones_specialization",
    "jones_pair",
    "verify_symmetries",
    "verify_integrality",
    "power_sum_values",
    "default_evaluator",
    "set_default_evaluator",
    "DEFAULT_COLOR_BUDGET",
    "DEFAULT_MAX_CROSSINGS",
]

DEFAULT_COLOR_BUDGET = 3
DEFAULT_MAX_CROSSINGS = 40

_evaluator = None


def default_evaluator():
    global _evaluator
    if _evaluator is None:
        _evaluator = Evaluator(max_crossings=DEFAULT_MAX_CROSSINGS)
    return _evaluator


def set_default_evaluator(ev):
    """Replace the shared evaluator (its cache is reused across invariant calls)."""
    global _evaluator
    _evaluator = ev


def _color(c):
    if isinstance(c, dict):
        return (Partition(c.get("lambda", ())), Partition(c.get("mu", ())))
    lam, mu = c
    return (Partition(lam), Partition(mu))


def parse_colors(text):
    """Colors from JSON (``[{"lambda":[2],"mu":[1]}, ...]``) or ``"[2]/[1];[1]/[]"``."""
    text = text.strip()
    if text.startswith("[{") or text.startswith("{"):
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["colors"]
        return [_color(c) for c in data]
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        lam, _, mu = chunk.partition("/")
        out.append((Partition.parse(lam), Partition.parse(mu or "[]")))
    return out


@dataclass(frozen=True)
class ColoredLink:
    """A braid closure with one ``(lam, mu)`` color per closure component."""

    companion: BraidWord
    colors: tuple

    def __post_init__(self):
        colors = tuple(_color(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        n = self.companion.component_count()
        if len(colors) != n:
            raise ComponentMismatch(f"closure has {n} components but {len(colors)} colors were given")

    @property
    def component_count(self):
        return len(self.colors)

    @property
    def total_size(self):
        return sum(lam.size + mu.size for lam, mu in self.colors)

    def conjugated(self):
        return ColoredLink(self.companion, tuple((l.conjugate(), m.conjugate()) for l, m in self.colors))

    def recolored(self, colors):
        return ColoredLink(self.companion, tuple(colors))

    def to_json(self):
        return {
            "braid": self.companion.to_json(),
            "colors": [{"lambda": list(l), "mu": list(m)} for l, m in self.colors],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(BraidWord.from_json(data["braid"]), tuple(_color(c) for c in data["colors"]))

    def __str__(self):
        cols = ";".join(f"{l}/{m}" for l, m in self.colors)
        return f"{self.companion} colors {cols}"


@dataclass
class InvariantReport:
    """A computed value with ring-membership flags and provenance.

    ``value`` is None when the requested quotient is not in the coefficient
    ring; ``finding`` then says why.
    """

    name: str
    value: object
    provenance: dict = field(default_factory=dict)
    finding: str = ""

    @property
    def flags(self):
        if self.value is None:
            return {r.value: False for r in Ring}
        return {r.value: membership(self.value, r) for r in Ring}

    @property
    def laurent(self):
        return self.flags["LAURENT"]

    @property
    def even(self):
        return self.flags["EVEN"]

    def to_json(self):
        return {
            "name": self.name,
            "value": None if self.value is None else self.value.to_json(),
            "text": None if self.value is None else str(self.value),
            "flags": self.flags,
            "finding": self.finding,
            "provenance": self.provenance,
        }


# -- satellites ------------------------------------------------------------------


def _check_budget(cl, budget):
    for lam, mu in cl.colors:
        if lam.size + mu.size > budget:
            raise ResourceLimit(
                f"color {lam}/{mu} exceeds the per-component budget {budget}",
                {"budget": budget},
            )


def _component_terms(lam, mu):
    """Atom patterns of ``Q_{lam,mu}``: ({atoms: SkeinScalar coeff}, integer scale)."""
    elem = qlm_to_pp(lam, mu)
    terms = defaultdict(lambda: SkeinScalar(0))
    for (tau, delta), c in elem.terms.items():
        coeff, patterns = pp_to_atoms(tau, delta)
        for atoms, mult in patterns:
            terms[atoms] = terms[atoms] + c * coeff * mult
    return {k: v for k, v in terms.items() if not v.is_zero()}, elem.scale


def _pp_component_terms(tau, delta):
    coeff, patterns = pp_to_atoms(tau, delta)
    return {atoms: coeff * mult for atoms, mult in patterns}, 1


def _combine(companion, per_component, evaluator):
    total = SkeinScalar(0)
    scale = 1
    tables = []
    for terms, sc in per_component:
        tables.append(list(terms.items()))
        scale *= sc
    count = 0
    for choice in product(*tables):
        coeff = SkeinScalar(1)
        for _, c in choice:
            coeff = coeff * c
        d = cable_satellite(companion, [list(atoms) for atoms, _ in choice])
        total = total + coeff * evaluator.evaluate(d)
        count += 1
    return total.exact_div_int(scale), count


def satellite_H(cl, evaluator=None, budget=DEFAULT_COLOR_BUDGET, stats=None):
    """Blackboard-framed ``H(L * (x) Q_{lam,mu})`` without the framing correction."""
    evaluator = evaluator or default_evaluator()
    _check_budget(cl, budget)
    per = [_component_terms(lam, mu) for lam, mu in cl.colors]
    value, count = _combine(cl.companion, per, evaluator)
    if stats is not None:
        stats["satellites"] = stats.get("satellites", 0) + count
    return value


def _framing(cl):
    w = braid_closure(cl.companion).self_writhe
    qe = -sum((lam.kappa + mu.kappa) * wa for (lam, mu), wa in zip(cl.colors, w))
    ae = -sum((lam.size + mu.size) * wa for (lam, mu), wa in zip(cl.colors, w))
    return SkeinScalar(LaurentPoly.monomial(1, qe, ae))


def full_W(cl, evaluator=None, budget=DEFAULT_COLOR_BUDGET, stats=None):
    """Framing-corrected full colored invariant ``W``.

    >>> from skeinlab.diagram import BraidWord
    >>> str(full_W(ColoredLink(BraidWord(1), [([1], [1])])))
    '(-q^2 + a^2 + a^-2 - q^-2) / ({1}^2)'
    """
    return _framing(cl) * satellite_H(cl, evaluator, budget, stats)


# -- unknot values ---------------------------------------------------------------


def _power_sum_unknot(m):
    # H(U * P_m) = (a^m - a^-m) / {m}
    return SkeinScalar(LaurentPoly({(0, m): 1, (0, -m): -1}), (m,))


@lru_cache(maxsize=None)
def _schur_unknot_characters(rho):
    total = SkeinScalar(0)
    scale = 1
    for mu in partitions_of(rho.size):
        scale = scale * mu.z // gcd(scale, mu.z)
    for mu in partitions_of(rho.size):
        chi = character(rho, mu)
        if not chi:
            continue
        term = SkeinScalar(chi * (scale // mu.z))
        for part in mu:
            term = term * _power_sum_unknot(part)
        total = total + term
    return total.exact_div_int(scale)


@lru_cache(maxsize=None)
def _schur_unknot_hooks(rho):
    num = LaurentPoly.constant(1)
    for c in rho.contents():
        num = num * LaurentPoly({(c, 1): 1, (-c, -1): -1})
    return SkeinScalar(num, rho.hooks())


def _via_qq(lam, mu, single):
    total = SkeinScalar(0)
    for c, rho, nu in q_expand_qq(lam, mu):
        total = total + single(rho) * single(nu) * c
    return total


def unknot_by_characters(lam, mu=()):
    """Power-sum character route, extended through the ``Q_rho Q*_nu`` expansion."""
    return _via_qq(Partition(lam), Partition(mu), _schur_unknot_characters)


def unknot_by_hooks(lam, mu=()):
    """Hook-content product ``prod (a q^cn - 1/(a q^cn)) / {hl}`` per factor."""
    return _via_qq(Partition(lam), Partition(mu), _schur_unknot_hooks)


def unknot_by_evaluator(lam, mu=(), evaluator=None):
    """Satellite evaluator on the crossingless one-strand companion."""
    cl = ColoredLink(BraidWord(1), ((Partition(lam), Partition(mu)),))
    return full_W(cl, evaluator, budget=Partition(lam).size + Partition(mu).size)


_unknot_cache = {}


def unknot_value(lam, mu=(), check=True):
    """``W_{[lam,mu]}(U)``; with ``check`` all three routes must agree.

    >>> str(unknot_value([1]))
    '(a - a^-1) / ({1})'
    """
    key = (Partition(lam), Partition(mu), check)
    if key in _unknot_cache:
        return _unknot_cache[key]
    lam, mu = key[0], key[1]
    value = unknot_by_hooks(lam, mu)
    if check:
        routes = {
            "characters": unknot_by_characters(lam, mu),
            "evaluator": unknot_by_evaluator(lam, mu),
        }
        for name, other in routes.items():
            if other != value:
                raise AssertionError(f"unknot routes disagree for {lam}/{mu}: hooks {value}, {name} {other}")
    _unknot_cache[key] = value
    return value


# -- reduced and normalized invariants ------------------------------------------


def _alpha_index(cl, alpha):
    if not 1 <= alpha <= cl.component_count:
        raise ComponentMismatch(f"alpha={alpha} out of range 1..{cl.component_count}")
    return alpha - 1


def reduced_P_knot(cl, evaluator=None, budget=DEFAULT_COLOR_BUDGET):
    """``W(K) / W(U)`` for a knot; raises :class:`DivisionNotExact` if not Laurent."""
    if cl.component_count != 1:
        raise ComponentMismatch("reduced_P_knot needs a one-component closure")
    stats = {}
    lam, mu = cl.colors[0]
    w = full_W(cl, evaluator, budget, stats)
    value = divide(w, unknot_value(lam, mu))
    if not value.is_laurent():
        raise DivisionNotExact(f"W = {w} over W(U) = {unknot_value(lam, mu)} leaves {value}")
    return InvariantReport("P", value, _provenance(stats, evaluator))


def _provenance(stats, evaluator):
    ev = evaluator or default_evaluator()
    out = dict(stats)
    out["evaluator"] = ev._stats()
    return out


def reduced_Q_link(cl, alpha=1, evaluator=None, budget=DEFAULT_COLOR_BUDGET):
    """``W(L) / W_{[lam^alpha, mu^alpha]}(U)`` as an exact scalar."""
    i = _alpha_index(cl, alpha)
    stats = {}
    w = full_W(cl, evaluator, budget, stats)
    value = divide(w, unknot_value(*cl.colors[i]))
    return InvariantReport("Q", value, _provenance(stats, evaluator))


def _pair_set(lam, mu):
    out = []
    for rho in sub_partitions(lam):
        for nu in sub_partitions(mu):
            if lam.size - rho.size == mu.size - nu.size:
                out.append((rho, nu))
    return out


def _box_factor(p):
    out = SkeinScalar(1)
    for c, h in zip(p.contents(), p.hooks()):
        out = out * LaurentPoly.monomial(1, c, 1) * bracket(h)
    return out


def prefactor(colors, alpha=1):
    """Denominator-clearing factor over the components other than ``alpha``.

    Pairs ``(rho, nu)`` run over ``rho <= lam``, ``nu <= mu`` (diagram
    containment) with ``|lam| - |rho| = |mu| - |nu|``.
    """
    colors = [_color(c) for c in colors]
    out = SkeinScalar(1)
    for b, (lam, mu) in enumerate(colors):
        if b == alpha - 1:
            continue
        for rho, nu in _pair_set(lam, mu):
            out = out * _box_factor(rho) * _box_factor(nu)
    return out


def normalized_P_link(cl, alpha=1, evaluator=None, budget=DEFAULT_COLOR_BUDGET):
    q = reduced_Q_link(cl, alpha, evaluator, budget)
    return InvariantReport("Pnorm", prefactor(cl.colors, alpha) * q.value, q.provenance)


def naive_P_link(cl, evaluator=None, budget=DEFAULT_COLOR_BUDGET):
    """``W(L)`` over the product of all unknot values; often outside the ring."""
    stats = {}
    w = full_W(cl, evaluator, budget, stats)
    den = SkeinScalar(1)
    for lam, mu in cl.colors:
        den = den * unknot_value(lam, mu)
    prov = _provenance(stats, evaluator)
    try:
        value = divide(w, den)
    except DivisionNotExact:
        return InvariantReport(
            "Pnaive", None, prov, f"W = {w} is not divisible by {den} in the coefficient ring"
        )
    finding = "" if value.is_laurent() else "quotient keeps bracket denominators"
    return InvariantReport("Pnaive", value, prov, finding)


def rectangle_prefactor(r, rho):
    """Closed form of the box product for the rectangle ``(r^rho)``."""
    if not (1 <= r <= 6 and 1 <= rho <= 6):
        raise ValueError("r and rho must lie in 1..6")
    qe = rho * r * (r - rho) // 2
    out = SkeinScalar(LaurentPoly.monomial(1, qe, r * rho))
    for i in range(rho):
        for k in range(i + 1, r + i + 1):
            out = out * bracket(k)
    return out


def eigenvalue_ratio(cl, alpha=1, evaluator=None, budget=DEFAULT_COLOR_BUDGET):
    """Ratio of the decorated link to the decorated unknot; reported, not asserted."""
    i = _alpha_index(cl, alpha)
    for b, (lam, mu) in enumerate(cl.colors):
        if b != i and (lam, mu) != (Partition([1]), EMPTY):
            raise ValueError("components other than alpha must carry the fundamental color")
    rep = reduced_Q_link(cl, alpha, evaluator, budget)
    rep.name = "eigenvalue_ratio"
    if not rep.value.is_laurent():
        rep.finding = f"ratio {rep.value} is not a Laurent polynomial"
    return rep


def jones_specialization(companion, evaluator=None):
    """Fundamental reduced invariant at ``a = q^2`` with the linking correction.

    Equals :func:`jones_oracle` of the closure for knots and links.
    """
    d = braid_closure(companion)
    cl = ColoredLink(companion, tuple((Partition([1]), EMPTY) for _ in range(d.component_count)))
    w = full_W(cl, evaluator)
    p = divide(w, unknot_value([1]))
    num = (p.numerator * LaurentPoly.monomial(1, 0, -2 * d.linking_number())).specialize_a(2)
    # link values keep bracket denominators that only clear after a = q^2
    return exact_div(num, p.denominator_poly())


def jones_pair(companion, evaluator=None):
    """(specialized HOMFLYPT side, bracket oracle side) for a braid closure."""
    return jones_specialization(companion, evaluator), jones_oracle(braid_closure(companion))


# -- verification ------------------------------------------------------------------


def _sign(cl):
    return -1 if cl.total_size & 1 else 1


def verify_symmetries(cl, evaluator=None, budget=DEFAULT_COLOR_BUDGET, values=None):
    """The three substitution identities on ``W``; returns ``{check: bool}``.

    ``values`` may carry precomputed ``W`` keyed by ColoredLink.
    """
    values = {} if values is None else values

    def W(c):
        if c not in values:
            values[c] = full_W(c, evaluator, budget)
        return values[c]

    w = W(cl)
    sign = _sign(cl)
    return {
        "q_inverse_conjugate": substitute(w, "inv", "id") == W(cl.conjugated()) * sign,
        "q_negate": substitute(w, "neg", "id") == w * sign,
        "a_negate": substitute(w, "id", "neg") == w * sign,
    }


def power_sum_values(companion, tau, delta=(), evaluator=None):
    """``{tau}{delta} H(K * P_tau P*_delta)`` for a knot companion."""
    evaluator = evaluator or default_evaluator()
    tau, delta = Partition(tau), Partition(delta)
    if companion.component_count() != 1:
        raise ComponentMismatch("power-sum values are defined for knots only")
    h, _ = _combine(companion, [_pp_component_terms(tau, delta)], evaluator)
    factor = SkeinScalar(1)
    for p in tuple(tau) + tuple(delta):
        factor = factor * bracket(p)
    return factor * h


def verify_integrality(cl, evaluator=None, budget=DEFAULT_COLOR_BUDGET, power_sum_sizes=2):
    """Integrality checks on one colored link; returns ``{check: bool | str}``."""
    out = {}
    if cl.component_count == 1:
        try:
            rep = reduced_P_knot(cl, evaluator, budget)
            out["reduced_P_even"] = rep.even
        except DivisionNotExact:
            out["reduced_P_even"] = False
        for n in range(1, power_sum_sizes + 1):
            for k in range(n + 1):
                for tau in partitions_of(k):
                    for delta in partitions_of(n - k):
                        val = power_sum_values(cl.companion, tau, delta, evaluator)
                        out[f"power_sum_zsq_{tau}_{delta}"] = membership(val, Ring.ZSQ)
        return out
    w = full_W(cl, evaluator, budget)
    for alpha in range(1, cl.component_count + 1):
        rep = normalized_P_link(cl, alpha, evaluator, budget)
        out[f"normalized_even_{alpha}"] = rep.even
        try:
            divide(w, unknot_value(*cl.colors[alpha - 1]))
            out[f"divisible_{alpha}"] = True
        except DivisionNotExact:
            out[f"divisible_{alpha}"] = False
    return out
