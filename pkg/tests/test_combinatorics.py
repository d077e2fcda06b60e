from fractions import Fraction

import pytest
from sympy.functions.combinatorial.numbers import partition as npartitions
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinlab.combinatorics import (
    Partition,
    character,
    hook_content_data,
    lr_coefficient,
    lr_coefficient_by_characters,
    partitions_of,
    sub_partitions,
)
from skeinlab.errors import BoundExceeded, SizeMismatch
from skeinlab.verify import brute_force_character


def partitions(max_n):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_partition_basics():
    lam = Partition([3, 1])
    assert lam.size == 4 and lam.length == 2
    assert lam.conjugate() == Partition([2, 1, 1])
    assert lam.contents() == [0, 1, 2, -1]
    assert lam.hooks() == [4, 2, 1, 1]
    assert Partition([2, 2]).kappa == 0
    assert Partition([2]).kappa == 2
    assert Partition([1, 1]).kappa == -2
    assert Partition([2, 1, 1]).z == 4
    assert str(lam) == "[3,1]" and Partition("[3,1]") == lam
    assert Partition("[]") == Partition() and Partition([2, 0]) == Partition([2])
    with pytest.raises(ValueError):
        Partition([1, 2])
    assert hook_content_data([2])["hooks"] == [2, 1]


def test_partition_order_and_bound():
    assert [str(p) for p in partitions_of(4)] == ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]
    with pytest.raises(BoundExceeded):
        partitions_of(21)


@pytest.mark.parametrize("n", range(0, 16))
def test_partition_counts_match_sympy(n):
    parts = partitions_of(n)
    assert len(parts) == npartitions(n)
    assert len(set(parts)) == len(parts)


def test_sub_partitions():
    assert sorted(sub_partitions([2, 1])) == sorted(
        [Partition(), Partition([1]), Partition([2]), Partition([1, 1]), Partition([2, 1])]
    )


def test_character_examples():
    assert character([2, 1], [1, 1, 1]) == 2
    assert character([2, 1], [3]) == -1
    assert character([1, 1], [2]) == -1
    assert character([3, 1], [2, 2]) == -1
    with pytest.raises(SizeMismatch):
        character([2], [1])


@pytest.mark.parametrize("n", range(1, 6))
def test_mn_equals_brute_force(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert character(lam, mu) == brute_force_character(lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_orthogonality(n):
    ps = partitions_of(n)
    for l1 in ps:
        for l2 in ps:
            total = sum(Fraction(character(l1, m) * character(l2, m), m.z) for m in ps)
            assert total == (l1 == l2)
    # column orthogonality as well
    for m1 in ps:
        for m2 in ps:
            total = sum(character(l, m1) * character(l, m2) for l in ps)
            assert total == (m1.z if m1 == m2 else 0)


@given(partitions(7))
def test_character_conjugation(lam):
    for mu in partitions_of(lam.size):
        assert character(lam.conjugate(), mu) == (-1) ** (lam.size - len(mu)) * character(lam, mu)


def test_lr_examples():
    assert lr_coefficient([2, 1], [2, 1], [3, 2, 1]) == 2
    assert lr_coefficient([1], [1], [2]) == 1
    assert lr_coefficient([1], [1], [3]) == 0
    assert lr_coefficient([], [2], [2]) == 1


@pytest.mark.parametrize("total", range(0, 5))
def test_lr_equals_character_sum(total):
    for k in range(total + 1):
        for lam in partitions_of(k):
            for mu in partitions_of(total - k):
                for nu in partitions_of(total):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient_by_characters(lam, mu, nu)


@given(partitions(3), partitions(3))
@settings(max_examples=50)
def test_lr_symmetry_and_conjugation(lam, mu):
    for nu in partitions_of(lam.size + mu.size):
        c = lr_coefficient(lam, mu, nu)
        assert c == lr_coefficient(mu, lam, nu)
        assert c == lr_coefficient(lam.conjugate(), mu.conjugate(), nu.conjugate())


@given(partitions(8))
def test_sign_identity(lam):
    assert (-1) ** lam.size == (-1) ** (sum(lam.hooks()) + sum(lam.contents()))


@given(partitions(9))
def test_kappa_conjugation_and_hooks(lam):
    assert lam.conjugate().kappa == -lam.kappa
    assert lam.kappa == 2 * sum(lam.contents())
    # hook length formula: dimension = n!/prod(hooks) = chi(1^n)
    import math

    dim = math.factorial(lam.size) // math.prod(lam.hooks())
    assert character(lam, [1] * lam.size) == dim
