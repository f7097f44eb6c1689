import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qls_nakayama.abelian_group import FiniteAbelianGroup, ParentMismatch
from qls_nakayama.cyclotomic import root_of_unity

ORDERS = [[1], [2], [4], [2, 3], [4, 2], [3, 3], [2, 2, 2]]


@st.composite
def group_with_data(draw):
    G = FiniteAbelianGroup(draw(st.sampled_from(ORDERS)))
    elem = st.tuples(*[st.integers(0, d - 1) for d in G.cyclic_orders])
    return G, draw(elem), draw(elem), draw(elem), draw(elem)


def test_basic_invariants():
    G = FiniteAbelianGroup([4, 2])
    assert G.order == 8
    assert G.exponent == 4
    assert len(G.elements()) == 8
    assert G(1, 0).order == 4
    assert G(2, 1).order == 2
    assert G.identity.is_identity()


def test_exponent_tuples_are_lexicographic():
    G = FiniteAbelianGroup([2, 3])
    tuples = list(G.exponent_tuples())
    assert tuples == sorted(tuples)
    assert len(tuples) == 6


@given(group_with_data())
def test_group_axioms(data):
    G, a, b, c, _ = data
    A, B, C = G(*a), G(*b), G(*c)
    assert (A * B) * C == A * (B * C)
    assert A * B == B * A
    assert A * A.inverse() == G.identity
    assert A ** A.order == G.identity


@given(group_with_data())
def test_characters_are_homomorphisms(data):
    G, a, b, w1, w2 = data
    chi, psi = G.character(*w1), G.character(*w2)
    A, B = G(*a), G(*b)
    assert chi(A * B) == chi(A) * chi(B)
    assert (chi * psi)(A) == chi(A) * psi(A)
    assert (chi * chi.inverse()).is_trivial()
    assert chi.image_order == len({chi.exponent_at(g) for g in G.exponent_tuples()})
    assert len(chi.kernel()) * chi.image_order == G.order


def test_character_values_on_z4():
    G = FiniteAbelianGroup([4])
    i = G.character(1)
    assert i(G(1)) == root_of_unity(4, 1)
    assert i(G(2)) == -1


def test_character_on_product_uses_lcm_conductor():
    G = FiniteAbelianGroup([2, 3])
    chi = G.character(1, 1)
    assert chi(G(1, 0)) == -1
    assert chi(G(0, 1)) == root_of_unity(6, 2)
    assert chi.image_order == math.lcm(2, 3)


def test_dual_group_size():
    G = FiniteAbelianGroup([4, 2])
    assert len(G.characters()) == G.order


def test_parent_mismatch():
    G, K = FiniteAbelianGroup([4]), FiniteAbelianGroup([2])
    with pytest.raises(ParentMismatch):
        G(1) * K(1)
    with pytest.raises(ParentMismatch):
        G.character(1)(K(1))
