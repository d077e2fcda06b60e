"""Framed HOMFLYPT evaluation by skein resolution, and a Jones oracle.

Conventions: ``H(L+) - H(L-) = z H(L0)`` with ``z = q - 1/q``, a kink of
sign ``e`` contributes ``a**e``, a crossingless circle contributes
``s = (a - 1/a)/z`` and the empty diagram evaluates to 1.

The evaluator works on signed Gauss codes.  A diagram is first simplified
(Reidemeister I and II removals), split into crossing-connected pieces, and
each piece is looked up by its canonical code.  A piece that is not yet
cached is resolved against its descending diagram: walking the components in
a fixed order from fixed basepoints, every crossing first met from below is
switched in turn, which produces one smoothed child per switch and a
descending diagram whose value is ``s**c * a**(sum of self-writhes)``.
"""

import threading
from collections import OrderedDict, deque
from itertools import permutations

from .errors import ResourceLimit
from .ring import LaurentPoly, SkeinScalar, bracket

__all__ = [
    "Evaluator",
    "evaluate",
    "jones_oracle",
    "canonical_code",
    "DEFAULT_CACHE_SIZE",
    "STRATEGIES",
]

DEFAULT_CACHE_SIZE = 1 << 20
STRATEGIES = ("first", "greedy")

# Internal values are polynomials in q, a and a formal circle variable s,
# stored as {(q_exp, a_exp, s_exp): coeff}.
_ONE = {(0, 0, 0): 1}
_Z = {(1, 0, 0): 1, (-1, 0, 0): -1}


def _pmul(f, g):
    out = {}
    for (q1, a1, s1), c1 in f.items():
        for (q2, a2, s2), c2 in g.items():
            k = (q1 + q2, a1 + a2, s1 + s2)
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _padd(f, g, scale=1):
    out = dict(f)
    for k, c in g.items():
        v = out.get(k, 0) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _pshift(f, a=0, s=0):
    return {(qe, ae + a, se + s): c for (qe, ae, se), c in f.items()}


def _to_scalar(f):
    if not f:
        return SkeinScalar(0)
    top = max(se for _, _, se in f)
    num = LaurentPoly()
    a_diff = LaurentPoly({(0, 1): 1, (0, -1): -1})
    z = bracket(1)
    for (qe, ae, se), c in f.items():
        num = num + LaurentPoly.monomial(c, qe, ae) * a_diff**se * z ** (top - se)
    return SkeinScalar(num, [1] * top)


# -- Gauss-code manipulation -----------------------------------------------------
#
# Internally a diagram is (signs, comps): signs maps crossing -> +-1 and comps
# is a tuple of tuples of (crossing, over) visits.


def _locate(comps):
    loc = {}
    for c, comp in enumerate(comps):
        for i, (x, over) in enumerate(comp):
            loc[(x, over)] = (c, i)
    return loc


def _drop(signs, comps, dead):
    comps = tuple(tuple(v for v in comp if v[0] not in dead) for comp in comps)
    signs = {x: s for x, s in signs.items() if x not in dead}
    return signs, comps


def _simplify(signs, comps):
    """Remove kinks and bigons; returns (signs, comps, a_exponent)."""
    a_exp = 0
    changed = True
    while changed:
        changed = False
        for comp in comps:
            n = len(comp)
            for k in range(n):
                x = comp[k][0]
                if comp[(k + 1) % n][0] == x:
                    a_exp += signs[x]
                    signs, comps = _drop(signs, comps, {x})
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        loc = _locate(comps)
        for comp in comps:
            n = len(comp)
            for k in range(n):
                (c, oc), (d, od) = comp[k], comp[(k + 1) % n]
                if not (oc and od) or c == d or signs[c] == signs[d]:
                    continue
                cu, iu = loc[(c, False)]
                du, ju = loc[(d, False)]
                m = len(comps[cu])
                if cu == du and (ju - iu) % m in (1, m - 1):
                    signs, comps = _drop(signs, comps, {c, d})
                    changed = True
                    break
            if changed:
                break
    return signs, comps, a_exp


def _split(signs, comps):
    """Crossing-connected pieces as (signs, comps) pairs, plus the free-loop count."""
    loops = sum(1 for comp in comps if not comp)
    live = [c for c, comp in enumerate(comps) if comp]
    parent = {c: c for c in live}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    owner = {}
    for c in live:
        for x, _ in comps[c]:
            if x in owner:
                r1, r2 = find(owner[x]), find(c)
                if r1 != r2:
                    parent[r1] = r2
            else:
                owner[x] = c
    groups = {}
    for c in live:
        groups.setdefault(find(c), []).append(comps[c])
    pieces = []
    for group in groups.values():
        xs = {x for comp in group for x, _ in comp}
        pieces.append(({x: signs[x] for x in xs}, tuple(group)))
    return pieces, loops


def _canonical(signs, comps):
    """Minimal BFS relabeling of a crossing-connected diagram.

    Visits are encoded as ``4*label + 2*over + (sign > 0)``; the code is a
    tuple of components, each a tuple of encoded visits.
    """
    loc = _locate(comps)
    cls = {}
    for c, comp in enumerate(comps):
        for i, (x, over) in enumerate(comp):
            cls[(c, i)] = 2 * over + (signs[x] > 0)
    low = min(cls.values())
    best = None
    for start, k in cls.items():
        if k != low:
            continue
        labels = {}
        seen = {start[0]}
        queue = deque([start])
        code = []
        while queue:
            c, i = queue.popleft()
            comp = comps[c]
            n = len(comp)
            row = []
            for t in range(n):
                x, over = comp[(i + t) % n]
                if x not in labels:
                    labels[x] = len(labels)
                    oc, oi = loc[(x, not over)]
                    if oc not in seen:
                        seen.add(oc)
                        queue.append((oc, oi))
                row.append(4 * labels[x] + 2 * over + (signs[x] > 0))
            code.append(tuple(row))
            if best is not None and tuple(code) > best[: len(code)]:
                break
        else:
            code = tuple(code)
            if best is None or code < best:
                best = code
    return best


def _decode(code):
    signs = {}
    comps = []
    for row in code:
        comp = []
        for v in row:
            x = v >> 2
            signs[x] = 1 if v & 1 else -1
            comp.append((x, bool(v & 2)))
        comps.append(tuple(comp))
    return signs, tuple(comps)


def canonical_code(d):
    """Canonical code of a :class:`Diagram`: sorted piece codes and free-loop count."""
    signs = dict(enumerate(d.signs))
    pieces, loops = _split(signs, d.components)
    return tuple(sorted(_canonical(s, c) for s, c in pieces)), loops


def _smooth(signs, comps, x):
    loc = _locate(comps)
    (ca, io), (cb, iu) = loc[(x, True)], loc[(x, False)]
    signs = {y: s for y, s in signs.items() if y != x}
    if ca != cb:
        a, b = comps[ca], comps[cb]
        joined = a[io + 1 :] + a[:io] + b[iu + 1 :] + b[:iu]
        rest = tuple(comp for c, comp in enumerate(comps) if c not in (ca, cb))
        return signs, rest + (joined,)
    comp = comps[ca]
    i, j = sorted((io, iu))
    inner = comp[i + 1 : j]
    outer = comp[j + 1 :] + comp[:i]
    rest = tuple(cc for c, cc in enumerate(comps) if c != ca)
    return signs, rest + (inner, outer)


def _switch(signs, comps, x):
    signs = dict(signs)
    signs[x] = -signs[x]
    comps = tuple(tuple((y, (not o) if y == x else o) for y, o in comp) for comp in comps)
    return signs, comps


# -- traversal plans -------------------------------------------------------------


def _bad_self(comp, base):
    # self-crossings first met from below when walking from ``base``
    n = len(comp)
    twice = {x for x, o in comp if o} & {x for x, o in comp if not o}
    seen = set()
    bad = 0
    for t in range(n):
        x, over = comp[(base + t) % n]
        if x in twice and x not in seen:
            seen.add(x)
            bad += not over
    return bad


def _plan(signs, comps, strategy):
    """Component order and basepoints for the descending walk."""
    if strategy == "first":
        return list(range(len(comps))), [0] * len(comps)
    bases = []
    for comp in comps:
        bases.append(min(range(len(comp)), key=lambda b: (_bad_self(comp, b), b)))
    owner = {}
    for c, comp in enumerate(comps):
        for x, over in comp:
            owner[(x, over)] = c
    above = {}
    for x in signs:
        co, cu = owner[(x, True)], owner[(x, False)]
        if co != cu:
            above[(co, cu)] = above.get((co, cu), 0) + 1

    def cost(order):
        rank = {c: r for r, c in enumerate(order)}
        return sum(v for (co, cu), v in above.items() if rank[co] > rank[cu])

    if len(comps) <= 5:
        order = min(permutations(range(len(comps))), key=lambda o: (cost(o), o))
    else:
        order = []
        left = set(range(len(comps)))
        while left:
            nxt = max(
                sorted(left),
                key=lambda c: sum(above.get((c, d), 0) - above.get((d, c), 0) for d in left),
            )
            order.append(nxt)
            left.discard(nxt)
    return list(order), bases


def _bad_crossings(signs, comps, order, bases):
    seen = set()
    bad = []
    for c in order:
        comp = comps[c]
        n = len(comp)
        for t in range(n):
            x, over = comp[(bases[c] + t) % n]
            if x not in seen:
                seen.add(x)
                if not over:
                    bad.append(x)
    return bad


def _self_writhe_total(signs, comps):
    owner = {}
    total = 0
    for c, comp in enumerate(comps):
        for x, _ in comp:
            if x in owner and owner[x] == c:
                total += signs[x]
            owner[x] = c
    return total


# -- evaluator -------------------------------------------------------------------


class _LRU:
    def __init__(self, capacity):
        self.capacity = capacity
        self.data = OrderedDict()
        self.lock = threading.Lock()

    def get(self, key):
        with self.lock:
            value = self.data.get(key)
            if value is not None:
                self.data.move_to_end(key)
            return value

    def put(self, key, value):
        if self.capacity <= 0:
            return
        with self.lock:
            self.data.setdefault(key, value)
            self.data.move_to_end(key)
            while len(self.data) > self.capacity:
                self.data.popitem(last=False)

    def __len__(self):
        return len(self.data)


class Evaluator:
    """Memoized framed HOMFLYPT evaluator.

    ``strategy`` picks the descending walk: ``"first"`` keeps the canonical
    component order and basepoints, ``"greedy"`` chooses them to minimize the
    number of switched crossings.  ``max_crossings`` bounds the input size and
    ``max_nodes`` the number of uncached pieces resolved; either limit raises
    :class:`ResourceLimit`.
    """

    def __init__(self, strategy="first", cache_size=DEFAULT_CACHE_SIZE, max_crossings=None, max_nodes=None):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
        self.strategy = strategy
        self.cache = _LRU(int(cache_size))
        self.max_crossings = max_crossings
        self.max_nodes = max_nodes
        self.stats = {"nodes": 0, "cache_hits": 0, "smoothings": 0}

    def _check_nodes(self):
        if self.max_nodes is not None and self.stats["nodes"] > self.max_nodes:
            raise ResourceLimit(f"node budget {self.max_nodes} exceeded", self._stats())

    def _stats(self):
        out = dict(self.stats)
        out["cache_entries"] = len(self.cache)
        return out

    def evaluate(self, d):
        """``H(d)`` as a :class:`SkeinScalar`."""
        if self.max_crossings is not None and d.crossing_count > self.max_crossings:
            raise ResourceLimit(
                f"diagram has {d.crossing_count} crossings, budget is {self.max_crossings}",
                self._stats(),
            )
        return _to_scalar(self._value(dict(enumerate(d.signs)), d.components))

    def evaluate_raw(self, d):
        """Value as a polynomial in q, a and the formal circle variable s."""
        return dict(self._value(dict(enumerate(d.signs)), d.components))

    def _value(self, signs, comps):
        signs, comps, a_exp = _simplify(signs, comps)
        pieces, loops = _split(signs, comps)
        out = {(0, a_exp, loops): 1}
        for psigns, pcomps in pieces:
            code = _canonical(psigns, pcomps)
            val = self.cache.get(code)
            if val is None:
                val = self._resolve(code)
                self.cache.put(code, val)
            else:
                self.stats["cache_hits"] += 1
            out = _pmul(out, val)
        return out

    def _resolve(self, code):
        self.stats["nodes"] += 1
        self._check_nodes()
        signs, comps = _decode(code)
        order, bases = _plan(signs, comps, self.strategy)
        bad = _bad_crossings(signs, comps, order, bases)
        total = {}
        cur_signs, cur_comps = signs, comps
        for x in bad:
            eps = cur_signs[x]
            self.stats["smoothings"] += 1
            child = self._value(*_smooth(cur_signs, cur_comps, x))
            total = _padd(total, _pmul(_Z, child), eps)
            cur_signs, cur_comps = _switch(cur_signs, cur_comps, x)
        base = {(0, _self_writhe_total(cur_signs, cur_comps), len(cur_comps)): 1}
        return _padd(total, base)


def evaluate(d, **kwargs):
    """Evaluate ``d`` with a fresh :class:`Evaluator`."""
    return Evaluator(**kwargs).evaluate(d)


# -- Jones oracle ----------------------------------------------------------------


def jones_oracle(d, max_crossings=20):
    """Jones polynomial of ``d`` from the Kauffman bracket, as a q-only Laurent polynomial.

    Normalized by ``J(unknot) = 1`` and the skein relation
    ``q^2 J(L+) - q^-2 J(L-) = (q - 1/q) J(L0)``; this is
    ``(-1)**(c-1) V(t)`` at ``t = q**-2``.
    """
    n = d.crossing_count
    if n > max_crossings:
        raise ResourceLimit(
            f"bracket state sum over {n} crossings exceeds budget {max_crossings}",
            {"crossings": n},
        )
    if d.component_count == 0:
        return LaurentPoly.constant(1)
    pd, free = d.pd_code()
    edges = sorted({e for t in pd for e in t})
    index = {e: i for i, e in enumerate(edges)}
    bracket_poly = {}
    for state in range(1 << n):
        parent = list(range(len(edges)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def join(u, v):
            ru, rv = find(index[u]), find(index[v])
            if ru != rv:
                parent[ru] = rv

        a_count = 0
        for k, (p, q_, r, t) in enumerate(pd):
            if state >> k & 1:
                join(p, t)
                join(q_, r)
            else:
                a_count += 1
                join(p, q_)
                join(r, t)
        loops = len({find(i) for i in range(len(edges))}) + free
        e0 = a_count - (n - a_count)
        # d = -A^2 - A^-2, raised to loops - 1
        term = {e0: 1}
        for _ in range(loops - 1):
            nxt = {}
            for e, c in term.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - c
                nxt[e - 2] = nxt.get(e - 2, 0) - c
            term = nxt
        for e, c in term.items():
            bracket_poly[e] = bracket_poly.get(e, 0) + c
    w = d.writhe
    sign = -1 if (w + d.component_count - 1) & 1 else 1
    out = {}
    for e, c in bracket_poly.items():
        if not c:
            continue
        e2 = e - 3 * w
        if e2 & 1:
            raise AssertionError("odd A-exponent in normalized bracket")
        out[(e2 // 2, 0)] = out.get((e2 // 2, 0), 0) + sign * c
    return LaurentPoly(out)
