"""Built-in verification suites over a small corpus of braid closures.

Each suite yields :class:`Check` records with status ``pass``, ``fail``,
``finding`` (an empirical observation that is reported but not required) or
``skipped`` (a budget was exceeded).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .combinatorics import (
    Partition,
    character,
    lr_coefficient,
    lr_coefficient_by_characters,
    partitions_of,
)
from .diagram import BraidWord
from .errors import DivisionNotExact, ResourceLimit
from .invariants import (
    ColoredLink,
    eigenvalue_ratio,
    jones_pair,
    power_sum_values,
    naive_P_link,
    normalized_P_link,
    prefactor,
    rectangle_prefactor,
    reduced_P_knot,
    unknot_by_characters,
    unknot_by_evaluator,
    unknot_by_hooks,
    verify_symmetries,
)
from .ring import Ring, membership

__all__ = ["Check", "CORPUS", "SUITES", "run_suite", "colors_up_to", "brute_force_character"]

CORPUS = {
    "trefoil": BraidWord(2, (1, 1, 1)),
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
    "hopf": BraidWord(2, (1, 1)),
    "unlink2": BraidWord(2, ()),
}


@dataclass
class Check:
    suite: str
    name: str
    status: str
    detail: str = ""

    def to_json(self):
        return {"suite": self.suite, "name": self.name, "status": self.status, "detail": self.detail}

    def __str__(self):
        tail = f"  {self.detail}" if self.detail else ""
        return f"[{self.status.upper():7}] {self.suite}: {self.name}{tail}"


def colors_up_to(n, nonempty=False):
    """All ``(lam, mu)`` with ``|lam| + |mu| <= n``."""
    out = []
    for total in range(0 if not nonempty else 1, n + 1):
        for k in range(total, -1, -1):
            for lam in partitions_of(k):
                for mu in partitions_of(total - k):
                    out.append((lam, mu))
    return out


def _status(ok):
    return "pass" if ok else "fail"


def _guard(suite, name, fn):
    try:
        return fn()
    except ResourceLimit as exc:
        return Check(suite, name, "skipped", str(exc))


# -- brute-force oracles ---------------------------------------------------------


def _cycle_type(perm):
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if not seen[i]:
            k = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            parts.append(k)
    return Partition(sorted(parts, reverse=True))


def _permutation_character(comp, mu):
    # number of fixed points of a permutation of cycle type mu on ordered set
    # partitions with block sizes comp: coefficient of m_comp in p_mu
    counts = {}
    sizes = list(mu)

    def rec(i, filled):
        if i == len(sizes):
            key = tuple(filled)
            counts[key] = counts.get(key, 0) + 1
            return
        for b in range(len(comp)):
            if filled[b] + sizes[i] <= comp[b]:
                filled[b] += sizes[i]
                rec(i + 1, filled)
                filled[b] -= sizes[i]

    rec(0, [0] * len(comp))
    return counts.get(tuple(comp), 0)


def brute_force_character(lam, mu):
    """Character from the Jacobi-Trudi determinant over permutation characters."""
    lam, mu = Partition(lam), Partition(mu)
    n = len(lam)
    total = 0
    for perm in permutations(range(n)):
        comp = [lam[i] - i + perm[i] for i in range(n)]
        if any(c < 0 for c in comp):
            continue
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        comp = [c for c in comp if c > 0]
        if sum(comp) != mu.size:
            continue
        total += (-1) ** inv * _permutation_character(comp, mu)
    return total


# -- suites ------------------------------------------------------------------------


def suite_combinatorics(budget=2):
    s = "combinatorics"
    bad = [
        (l, m)
        for n in range(1, 6)
        for l in partitions_of(n)
        for m in partitions_of(n)
        if character(l, m) != brute_force_character(l, m)
    ]
    yield Check(s, "Murnaghan-Nakayama = brute force, n <= 5", _status(not bad), str(bad[:3]) if bad else "")

    ok = True
    for n in range(1, 7):
        ps = partitions_of(n)
        for l1 in ps:
            for l2 in ps:
                v = sum(Fraction(character(l1, m) * character(l2, m), m.z) for m in ps)
                ok &= v == (1 if l1 == l2 else 0)
    yield Check(s, "character orthogonality, n <= 6", _status(ok))

    ok = True
    for a in range(0, 5):
        for b in range(0, 5 - a):
            for l in partitions_of(a):
                for m in partitions_of(b):
                    for nu in partitions_of(a + b):
                        ok &= lr_coefficient(l, m, nu) == lr_coefficient_by_characters(l, m, nu)
    yield Check(s, "LR tableaux = character sum, sizes <= 4", _status(ok))

    ok = True
    for n in range(1, 7):
        for l in partitions_of(n):
            for m in partitions_of(n):
                ok &= character(l.conjugate(), m) == (-1) ** (n - len(m)) * character(l, m)
    yield Check(s, "character conjugation, n <= 6", _status(ok))

    ok = True
    for a in range(0, 4):
        for b in range(0, 4 - a):
            for l in partitions_of(a):
                for m in partitions_of(b):
                    for nu in partitions_of(a + b):
                        ok &= lr_coefficient(l, m, nu) == lr_coefficient(l.conjugate(), m.conjugate(), nu.conjugate())
    yield Check(s, "LR conjugation, sizes <= 3", _status(ok))

    ok = all(
        (lam.size - sum(lam.hooks()) - sum(lam.contents())) % 2 == 0
        for n in range(0, 9)
        for lam in partitions_of(n)
    )
    yield Check(s, "sign identity over hooks and contents, |lam| <= 8", _status(ok))

    ok = all(
        rectangle_prefactor(r, rho) == prefactor([([r] * rho, []), ([1], [])], alpha=2)
        for r in range(1, 4)
        for rho in range(1, 4)
    )
    yield Check(s, "rectangle closed form = box product, r, rho <= 3", _status(ok))


def suite_unknot(budget=4):
    s = "unknot"
    colors = [(lam, Partition()) for n in range(1, budget + 1) for lam in partitions_of(n)]
    colors += [(Partition([1]), Partition([1])), (Partition([2]), Partition([1]))]
    for lam, mu in colors:

        def run(lam=lam, mu=mu):
            a = unknot_by_characters(lam, mu)
            b = unknot_by_hooks(lam, mu)
            c = unknot_by_evaluator(lam, mu)
            return Check(s, f"three routes agree on {lam}/{mu}", _status(a == b == c), str(b))

        yield _guard(s, f"three routes agree on {lam}/{mu}", run)


def _knot_colors(budget):
    return colors_up_to(budget, nonempty=True)


def suite_symmetries(budget=2):
    s = "symmetries"
    values = {}
    for name, braid in CORPUS.items():
        n = braid.component_count()
        cols = _knot_colors(budget) if n == 1 else colors_up_to(min(budget, 2))
        for assignment in product(cols, repeat=n):
            cl = ColoredLink(braid, assignment)

            def run(cl=cl, name=name):
                res = verify_symmetries(cl, values=values)
                failed = [k for k, v in res.items() if not v]
                label = f"{name} {';'.join(f'{l}/{m}' for l, m in cl.colors)}"
                return Check(s, label, _status(not failed), ",".join(failed))

            yield _guard(s, name, run)


def suite_integrality(budget=2):
    s = "integrality"
    for name in ("trefoil", "figure-eight"):
        for lam, mu in _knot_colors(budget):
            cl = ColoredLink(CORPUS[name], [(lam, mu)])

            def run(cl=cl, label=f"{name} {lam}/{mu} reduced P is even"):
                try:
                    rep = reduced_P_knot(cl)
                except DivisionNotExact as exc:
                    return Check(s, label, "fail", f"not divisible: {exc}")
                return Check(s, label, _status(rep.even))

            yield _guard(s, name, run)

    for tau, delta in [([1], []), ([2], []), ([1, 1], []), ([1], [1])]:

        def run(tau=tau, delta=delta):
            val = power_sum_values(CORPUS["trefoil"], tau, delta)
            return Check(s, f"trefoil power sums {tau}/{delta} in Z[z^2, a]", _status(membership(val, Ring.ZSQ)))

        yield _guard(s, "power sums", run)

    for name in ("hopf", "unlink2"):
        for assignment in product(colors_up_to(min(budget, 2)), repeat=2):
            cl = ColoredLink(CORPUS[name], assignment)
            for alpha in (1, 2):

                def run(cl=cl, alpha=alpha, name=name):
                    rep = normalized_P_link(cl, alpha)
                    label = f"{name} {';'.join(f'{l}/{m}' for l, m in cl.colors)} alpha={alpha} normalized is even"
                    return Check(s, label, _status(rep.even))

                yield _guard(s, name, run)

    fund = ColoredLink(CORPUS["hopf"], [([1], []), ([1], [])])
    naive = naive_P_link(fund)
    yield Check(
        s,
        "naive link normalization leaves the ring on the Hopf link",
        _status(naive.value is None or not naive.laurent),
        naive.finding,
    )
    ratio = eigenvalue_ratio(fund, 1)
    yield Check(s, "Hopf eigenvalue ratio", "finding", f"{ratio.value}; LAURENT={ratio.laurent}")


def suite_jones(budget=2):
    s = "jones"
    for name, braid in CORPUS.items():
        if name == "unlink2":
            continue
        special, oracle = jones_pair(braid)
        yield Check(s, f"{name} specialization = bracket oracle", _status(special == oracle), str(oracle))


SUITES = {
    "combinatorics": suite_combinatorics,
    "unknot": suite_unknot,
    "symmetries": suite_symmetries,
    "integrality": suite_integrality,
    "jones": suite_jones,
}


def run_suite(name, budget=None):
    """Run one suite (or ``"all"``), yielding checks in a fixed order."""
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}")
        fn = SUITES[n]
        if budget is None:
            yield from fn()
        else:
            yield from fn(budget)
