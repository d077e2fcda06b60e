"""Oriented link diagrams built from braid closures and satellite cabling.

A :class:`Diagram` is stored as a signed Gauss code: one cyclic sequence of
crossing visits per component, each visit recording whether the component
passes over or under there, plus one sign per crossing.  Everything the
skein evaluator and the bracket oracle need is recoverable from this data;
PD-style codes are derived from it on demand.
"""

import json
import re
from dataclasses import dataclass, field

from .annulus import PatternAtom
from .errors import ComponentMismatch

__all__ = [
    "BraidWord",
    "Diagram",
    "braid_closure",
    "pattern_braid",
    "cable_satellite",
]


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands; letter ``+g``/``-g`` is ``s_g^{+1}``/``s_g^{-1}``."""

    strands: int
    word: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"letter {g} invalid on {self.strands} strands")

    @property
    def writhe(self):
        return sum(1 if g > 0 else -1 for g in self.word)

    def permutation(self):
        """``perm[p]`` is the top position of the strand starting at bottom position ``p``."""
        pos = list(range(self.strands))  # pos[i] = strand currently at position i
        for g in self.word:
            k = abs(g)
            pos[k - 1], pos[k] = pos[k], pos[k - 1]
        perm = [0] * self.strands
        for top, strand in enumerate(pos):
            perm[strand] = top
        return perm

    def cycles(self):
        """Closure components as lists of strand positions, ordered by least index."""
        perm = self.permutation()
        seen = set()
        out = []
        for start in range(self.strands):
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = perm[p]
            out.append(cyc)
        return out

    def component_count(self):
        return len(self.cycles())

    def stabilized(self, sign=1):
        """Markov stabilization: append ``s_n^{+-1}`` on one extra strand."""
        n = self.strands
        return BraidWord(n + 1, self.word + (sign * n,))

    def mirror(self):
        return BraidWord(self.strands, tuple(-g for g in self.word))

    def __str__(self):
        return f"{self.strands}:[{','.join(str(g) for g in self.word)}]"

    def to_json(self):
        return {"strands": self.strands, "word": list(self.word)}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["strands"]), tuple(data.get("word", ())))

    @classmethod
    def parse(cls, text):
        """Parse ``"n:[g1,g2,...]"`` or braid JSON."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(text)
        m = re.fullmatch(r"(\d+)\s*:\s*\[([-+\d,\s]*)\]", text)
        if not m:
            raise ValueError(f"cannot parse braid {text!r}; expected 'n:[g,...]'")
        body = m.group(2).strip()
        word = tuple(int(x) for x in body.split(",") if x.strip()) if body else ()
        return cls(int(m.group(1)), word)


@dataclass(frozen=True)
class Diagram:
    """Signed Gauss code of an oriented, blackboard-framed link diagram.

    ``components[c]`` is the cyclic sequence of ``(crossing, over)`` visits
    along component ``c`` in its orientation; ``signs[x]`` is the sign of
    crossing ``x``.  A component with no visits is a crossingless circle.
    """

    signs: tuple
    components: tuple
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        comps = tuple(tuple((int(x), bool(o)) for x, o in comp) for comp in self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        seen = {}
        for comp in comps:
            for x, over in comp:
                seen.setdefault(x, []).append(over)
        if set(seen) != set(range(len(self.signs))):
            raise ValueError("every crossing must be visited")
        for x, overs in seen.items():
            if sorted(overs) != [False, True]:
                raise ValueError(f"crossing {x} must be visited once over and once under")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("crossing signs must be +1 or -1")

    @property
    def crossing_count(self):
        return len(self.signs)

    @property
    def component_count(self):
        return len(self.components)

    def crossing_components(self):
        """``{crossing: (over_component, under_component)}``."""
        out = {}
        for c, comp in enumerate(self.components):
            for x, over in comp:
                pair = out.setdefault(x, [None, None])
                pair[0 if over else 1] = c
        return {x: tuple(v) for x, v in out.items()}

    @property
    def self_writhe(self):
        w = [0] * len(self.components)
        for x, (co, cu) in self.crossing_components().items():
            if co == cu:
                w[co] += self.signs[x]
        return tuple(w)

    @property
    def writhe(self):
        return sum(self.signs)

    def linking_number(self):
        """Total linking number: half the signed count of inter-component crossings."""
        total = 0
        for x, (co, cu) in self.crossing_components().items():
            if co != cu:
                total += self.signs[x]
        return total // 2

    def mirror(self):
        """Switch every crossing."""
        return Diagram(
            tuple(-s for s in self.signs),
            tuple(tuple((x, not o) for x, o in comp) for comp in self.components),
            self.labels,
        )

    def reversed(self):
        """Reverse the orientation of every component (signs are unchanged)."""
        return Diagram(
            self.signs,
            tuple(tuple(reversed(comp)) for comp in self.components),
            self.labels,
        )

    # -- edges and PD code ---------------------------------------------------

    def edges(self):
        """Oriented edges ``(edge_id, component, tail_visit, head_visit)``.

        Edge ``e`` of a component leaves visit ``i`` and arrives at visit
        ``i+1``; a crossingless component is one edge with no ends.
        """
        out = []
        eid = 0
        for c, comp in enumerate(self.components):
            n = len(comp)
            if n == 0:
                out.append((eid, c, None, None))
                eid += 1
                continue
            for i in range(n):
                out.append((eid, c, i, (i + 1) % n))
                eid += 1
        return out

    def pd_code(self):
        """PD tuples ``[a, b, c, d]`` read counterclockwise from the incoming under edge.

        Edges are numbered along components in order.  Crossingless circles
        are reported separately as the second return value (their count).
        """
        first = []
        eid = 0
        for comp in self.components:
            first.append(eid)
            eid += max(len(comp), 1)
        ends = {}
        for c, comp in enumerate(self.components):
            n = len(comp)
            for i, (x, over) in enumerate(comp):
                incoming = first[c] + (i - 1) % n
                outgoing = first[c] + i
                ends.setdefault(x, {})["over" if over else "under"] = (incoming, outgoing)
        pd = []
        for x in range(len(self.signs)):
            ui, uo = ends[x]["under"]
            oi, oo = ends[x]["over"]
            if self.signs[x] > 0:
                pd.append((ui, oo, uo, oi))
            else:
                pd.append((ui, oi, uo, oo))
        loops = sum(1 for comp in self.components if not comp)
        return pd, loops

    def canonical_code(self):
        """Relabeling-invariant code of this diagram (see :func:`canonical_code`)."""
        from .homfly import canonical_code

        return canonical_code(self)

    def to_json(self):
        pd, loops = self.pd_code()
        return {
            "signs": list(self.signs),
            "components": [[[x, int(o)] for x, o in comp] for comp in self.components],
            "pd": [list(t) for t in pd],
            "free_loops": loops,
            "self_writhe": list(self.self_writhe),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            tuple(data["signs"]),
            tuple(tuple((x, bool(o)) for x, o in comp) for comp in data["components"]),
        )


# -- braids to diagrams ---------------------------------------------------------


def _trace(n_strands, letters, orientation):
    """Gauss code of the closure of a geometric braid with per-strand orientation.

    ``letters`` are signed generators on ``n_strands`` positions; in letter
    ``+k`` the strand at position ``k-1`` (0-based) passes over the strand at
    ``k`` moving right.  ``orientation[p]`` is +1/-1 for the strand that
    starts at bottom position ``p``; it must be constant along closed curves.
    """
    # strand identity at each position, and per-crossing (left strand, right strand)
    pos = list(range(n_strands))
    crossings = []
    visits = {p: [] for p in range(n_strands)}
    for idx, g in enumerate(letters):
        k = abs(g)
        left, right = pos[k - 1], pos[k]
        over_left = g > 0
        crossings.append((left, right, 1 if g > 0 else -1))
        visits[left].append((idx, over_left))
        visits[right].append((idx, not over_left))
        pos[k - 1], pos[k] = right, left
    perm = [0] * n_strands
    for top, strand in enumerate(pos):
        perm[strand] = top

    curves = []
    curve_of = [None] * n_strands
    for start in range(n_strands):
        if curve_of[start] is not None:
            continue
        seq = []
        members = []
        p = start
        while curve_of[p] is None:
            curve_of[p] = len(curves)
            members.append(p)
            seq.extend(visits[p])
            p = perm[p]
        o = orientation[start]
        if any(orientation[m] != o for m in members):
            raise ValueError("strand orientation must be constant along each closed curve")
        if o < 0:
            seq.reverse()
        curves.append((members, o, seq))

    signs = []
    for left, right, eps in crossings:
        signs.append(eps * orientation[left] * orientation[right])
    return curves, signs


def braid_closure(b):
    """Standard closure; components follow the strand cycles by least index.

    >>> d = braid_closure(BraidWord(2, (1, 1, 1)))
    >>> d.component_count, d.self_writhe
    (1, (3,))
    """
    curves, signs = _trace(b.strands, b.word, [1] * b.strands)
    order = sorted(range(len(curves)), key=lambda i: min(curves[i][0]))
    comps = tuple(tuple(curves[i][2]) for i in order)
    return _relabel(Diagram(tuple(signs), comps, tuple(range(len(comps)))))


def _relabel(d):
    """Renumber crossings by first appearance along the components."""
    mapping = {}
    for comp in d.components:
        for x, _ in comp:
            if x not in mapping:
                mapping[x] = len(mapping)
    signs = [0] * len(mapping)
    for old, new in mapping.items():
        signs[new] = d.signs[old]
    comps = tuple(tuple((mapping[x], o) for x, o in comp) for comp in d.components)
    return Diagram(tuple(signs), comps, d.labels)


def pattern_braid(atom):
    """Braid word of a pattern atom and its orientation tag.

    Returns ``(BraidWord, reversed)``: ``A(i, j)`` is the closure of
    ``s_{i+j} ... s_{j+1} s_j^-1 ... s_1^-1`` on ``i+j+1`` strands.
    """
    n = atom.i + atom.j + 1
    word = [g for g in range(atom.i + atom.j, atom.j, -1)] + [-g for g in range(atom.j, 0, -1)]
    return BraidWord(n, tuple(word)), atom.reversed


def _bundle_block(g, offset, a, b):
    # bundle of width a at left crossing the bundle of width b to its right
    sign = 1 if g > 0 else -1
    out = []
    for j in range(b):
        for i in range(a - 1, -1, -1):
            out.append(sign * (offset + i + j + 1))
    return out


def cable_satellite(companion, per_component, keep_order=False):
    """Satellite of a braid closure decorated by closed-braid patterns.

    ``per_component[alpha]`` is a sequence of :class:`PatternAtom` for the
    ``alpha``-th closure component (components ordered as in
    :func:`braid_closure`).  Each companion strand is replaced by a bundle of
    parallel strands (forward atoms first, then reversed ones), each letter
    by the block crossing of two bundles, and the pattern braids are inserted
    into the bundle of the component's first strand just before closure.
    Blackboard framing is kept.  ``keep_order`` lays the atoms out exactly
    as given instead of forward-first (the invariant does not depend on it).
    """
    cycles = companion.cycles()
    if len(per_component) != len(cycles):
        raise ComponentMismatch(
            f"companion has {len(cycles)} components but {len(per_component)} patterns were given"
        )
    comp_of = {}
    for alpha, cyc in enumerate(cycles):
        for p in cyc:
            comp_of[p] = alpha

    layouts = []
    for atoms in per_component:
        atoms = list(atoms) if keep_order else sorted(atoms, key=lambda t: t.reversed)
        slots = []  # per sub-strand: (atom index, orientation)
        for idx, atom in enumerate(atoms):
            slots.extend([(idx, -1 if atom.reversed else 1)] * atom.winding)
        layouts.append((atoms, slots))
    width = [len(layouts[comp_of[p]][1]) for p in range(companion.strands)]

    # track which companion strand occupies each position
    pos = list(range(companion.strands))
    letters = []
    for g in companion.word:
        k = abs(g)
        left, right = pos[k - 1], pos[k]
        offset = sum(width[pos[i]] for i in range(k - 1))
        letters.extend(_bundle_block(g, offset, width[left], width[right]))
        pos[k - 1], pos[k] = right, left

    # insert each pattern at the top of its component's first strand bundle
    for alpha, cyc in enumerate(cycles):
        atoms, slots = layouts[alpha]
        if not atoms:
            continue
        top_pos = min(cyc)
        offset = sum(width[pos[i]] for i in range(top_pos))
        start = 0
        for atom in atoms:
            braid, _ = pattern_braid(atom)
            for g in braid.word:
                letters.append((1 if g > 0 else -1) * (offset + start + abs(g)))
            start += atom.winding

    orientation = []
    owner = []
    for p in range(companion.strands):
        alpha = comp_of[p]
        for sub, (idx, o) in enumerate(layouts[alpha][1]):
            orientation.append(o)
            owner.append((alpha, idx))
    total = len(orientation)
    curves, signs = _trace(total, letters, orientation)

    keyed = []
    for members, _, seq in curves:
        labels = {owner[m] for m in members}
        if len(labels) != 1:
            raise AssertionError("a satellite curve left its pattern atom")
        keyed.append((labels.pop(), seq))
    keyed.sort(key=lambda kv: kv[0])
    comps = tuple(seq for _, seq in keyed)
    labels = tuple(k for k, _ in keyed)
    return _relabel(Diagram(tuple(signs), comps, labels))
