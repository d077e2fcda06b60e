import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinlab.annulus import PatternAtom
from skeinlab.diagram import BraidWord, Diagram, braid_closure, cable_satellite, pattern_braid
from skeinlab.errors import ComponentMismatch
from skeinlab.homfly import canonical_code


@st.composite
def braids(draw, max_strands=4, max_len=10):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord(1)
    word = draw(st.lists(st.integers(1, n - 1).flatmap(lambda g: st.sampled_from([g, -g])), max_size=max_len))
    return BraidWord(n, tuple(word))


def test_braid_validation_and_parse():
    b = BraidWord.parse("3:[1,-2,1,-2]")
    assert b.strands == 3 and b.word == (1, -2, 1, -2) and b.writhe == 0
    assert BraidWord.parse("1:[]") == BraidWord(1)
    assert BraidWord.parse('{"strands": 2, "word": [1,1,1]}') == BraidWord(2, (1, 1, 1))
    assert str(b) == "3:[1,-2,1,-2]"
    assert BraidWord.from_json(json.loads(json.dumps(b.to_json()))) == b
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(2, (0,))
    with pytest.raises(ValueError):
        BraidWord.parse("2:1,1")


def test_closure_examples():
    d = braid_closure(BraidWord(2, (1,)))
    assert (d.crossing_count, d.component_count, d.self_writhe) == (1, 1, (1,))
    d = braid_closure(BraidWord(2, (1, 1)))
    assert (d.crossing_count, d.component_count, d.self_writhe) == (2, 2, (0, 0))
    assert d.linking_number() == 1
    d = braid_closure(BraidWord(2, (1, 1, 1)))
    assert (d.crossing_count, d.component_count, d.self_writhe) == (3, 1, (3,))
    empty = Diagram((), ())
    assert empty.component_count == 0 and empty.pd_code() == ([], 0)


def test_component_order_by_least_strand():
    # strands 0 and 2 swap through the middle one; strand 1 is alone
    b = BraidWord(3, (1, 2, 1))
    assert b.cycles() == [[0, 2], [1]]
    d = braid_closure(b)
    assert [len(c) for c in d.components] == [4, 2]


def test_pd_code_signs():
    pd, loops = braid_closure(BraidWord(2, (1,))).pd_code()
    (ui, oo, uo, oi), = pd
    # positive crossing: over strand leaves at the second slot
    assert loops == 0 and len({ui, oo, uo, oi}) == 2


def test_pattern_braid_examples():
    assert pattern_braid(PatternAtom(0, 0)) == (BraidWord(1, ()), False)
    assert pattern_braid(PatternAtom(1, 0)) == (BraidWord(2, (1,)), False)
    assert pattern_braid(PatternAtom(0, 1)) == (BraidWord(2, (-1,)), False)
    assert pattern_braid(PatternAtom(2, 1, True)) == (BraidWord(4, (3, 2, -1)), True)


def _closure_of_word(n, word):
    return braid_closure(BraidWord(n, tuple(word)))


def test_two_cable_block_word():
    d = cable_satellite(BraidWord(2, (1,)), [[PatternAtom(0, 0), PatternAtom(0, 0)]])
    expect = _closure_of_word(4, [2, 1, 3, 2])
    assert d.crossing_count == 4
    assert canonical_code(d) == canonical_code(expect)


def test_satellite_counts():
    d = cable_satellite(BraidWord(1), [[PatternAtom(1, 0)]])
    assert (d.crossing_count, d.component_count) == (1, 1)
    d = cable_satellite(BraidWord(2, (1, 1, 1)), [[PatternAtom(1, 0)]])
    assert d.crossing_count == 3 * 4 + 1
    d = cable_satellite(BraidWord(2, (1, 1)), [[PatternAtom(0, 0), PatternAtom(0, 0, True)], []])
    assert d.component_count == 2 and d.crossing_count == 0


def test_mixed_orientation_signs():
    # a forward and a reversed parallel copy of a positive kink cross negatively
    d = cable_satellite(BraidWord(2, (1,)), [[PatternAtom(0, 0), PatternAtom(0, 0, True)]])
    assert sorted(d.signs) == [-1, -1, 1, 1]
    assert d.self_writhe == (1, 1)


def test_component_mismatch():
    with pytest.raises(ComponentMismatch):
        cable_satellite(BraidWord(2, (1, 1)), [[PatternAtom(0, 0)]])


@given(braids())
def test_width_one_cable_is_closure(b):
    per = [[PatternAtom(0, 0)] for _ in b.cycles()]
    assert canonical_code(cable_satellite(b, per)) == canonical_code(braid_closure(b))


@given(braids(max_strands=3, max_len=5), st.data())
def test_satellite_component_count(b, data):
    per = []
    for _ in b.cycles():
        atoms = data.draw(
            st.lists(st.builds(PatternAtom, st.integers(0, 1), st.integers(0, 1), st.booleans()), max_size=2)
        )
        per.append(atoms)
    d = cable_satellite(b, per)
    assert d.component_count == sum(len(p) for p in per)
    widths = [sum(a.winding for a in p) for p in per]
    closure = braid_closure(b)
    expected = 0
    for x, (co, cu) in closure.crossing_components().items():
        expected += widths[co] * widths[cu]
    expected += sum(len(pattern_braid(a)[0].word) for p in per for a in p)
    assert d.crossing_count == expected


@given(braids())
def test_diagram_invariants(b):
    d = braid_closure(b)
    assert d.crossing_count == len(b.word)
    assert d.component_count == b.component_count()
    assert sum(d.self_writhe) + 2 * d.linking_number() == b.writhe
    assert d.reversed().reversed() == d
    assert d.mirror().writhe == -d.writhe
    assert Diagram.from_json(d.to_json()) == d
    pd, _ = d.pd_code()
    ends = sorted(e for t in pd for e in t)
    # every edge has one head and one tail
    assert all(ends.count(e) == 2 for e in set(ends))
