import pytest

from skeinlab.annulus import (
    HH,
    AnnulusElement,
    HSymbol,
    PatternAtom,
    alpha_m,
    expand_qq_to_hh,
    pp_to_atoms,
    q_element,
    q_expand_qq,
    q_matrix,
    qlm_to_pp,
    schur_to_powersum,
)
from skeinlab.combinatorics import Partition, partitions_of
from skeinlab.ring import LaurentPoly, SkeinScalar, Z, bracket

from conftest import q, same, z


def _hh(terms):
    return AnnulusElement(HH, terms)


def test_q_matrix_layout():
    m = q_matrix(Partition([1]), Partition([1]))
    assert m == [[HSymbol(1, True), 1], [1, HSymbol(1)]]


def test_q_element_examples():
    assert q_element([1], [1]) == _hh({((1,), (1,)): 1, ((), ()): -1})
    assert q_element([2, 1]) == _hh({((2, 1), ()): 1, ((3,), ()): -1})
    assert q_element([2], [1]) == _hh({((2,), (1,)): 1, ((1,), ()): -1})
    assert q_element([], []) == AnnulusElement.one(HH)


def test_qq_expansion_example():
    terms = q_expand_qq([2], [1])
    assert [(c, tuple(r), tuple(n)) for c, r, n in terms] == [(1, (2,), (1,)), (-1, (1,), ())]


@pytest.mark.parametrize("a", range(0, 4))
@pytest.mark.parametrize("b", range(0, 4))
def test_determinant_equals_lr_expansion(a, b):
    for lam in partitions_of(a):
        for mu in partitions_of(b):
            assert q_element(lam, mu) == expand_qq_to_hh(q_expand_qq(lam, mu))


def test_schur_to_powersum():
    p1, p2 = Partition([1]), Partition([2])
    e = Partition()
    two = schur_to_powersum([2])
    assert two.scale == 2 and two.terms == {(p2, e): SkeinScalar(1), (Partition([1, 1]), e): SkeinScalar(1)}
    one_one = schur_to_powersum([1, 1])
    assert one_one.terms[(p2, e)] == SkeinScalar(-1)
    assert schur_to_powersum([1], reversed=True).terms == {(e, p1): SkeinScalar(1)}


def test_qlm_to_pp_fundamental_pair():
    p1, e = Partition([1]), Partition()
    elem = qlm_to_pp([1], [1])
    assert elem.scale == 1
    assert elem.terms == {(p1, p1): SkeinScalar(1), (e, e): SkeinScalar(-1)}


def test_pp_to_atoms():
    coeff, pats = pp_to_atoms([2])
    assert same(coeff, z / (q**2 - q**-2))
    assert pats == [((PatternAtom(0, 1),), 1), ((PatternAtom(1, 0),), 1)]
    coeff, pats = pp_to_atoms([1], [1])
    assert coeff == SkeinScalar(1)
    assert pats == [((PatternAtom(0, 0), PatternAtom(0, 0, True)), 1)]
    coeff, pats = pp_to_atoms([], [])
    assert coeff == SkeinScalar(1) and pats == [((), 1)]


def test_alpha_m():
    assert alpha_m(1) == SkeinScalar(1)
    assert alpha_m(2) == SkeinScalar(LaurentPoly({(2, 0): 1, (0, 0): 1}))
    assert alpha_m(3) == SkeinScalar(LaurentPoly({(6, 0): 1, (4, 0): 2, (2, 0): 2, (0, 0): 1}))
    with pytest.raises(ValueError):
        alpha_m(21)


def test_atom_winding_and_str():
    atom = PatternAtom(2, 1, True)
    assert atom.winding == 4 and str(atom) == "A*(2,1)"
    with pytest.raises(ValueError):
        PatternAtom(-1, 0)


def test_element_arithmetic():
    x = q_element([1], [1])
    assert x - x == AnnulusElement(HH)
    assert (x * 2).coefficient(((), ())) == SkeinScalar(-2)
