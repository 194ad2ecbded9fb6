import pytest
from hypothesis import given
from hypothesis import strategies as st

from poissoncolor import GroupSpec, group_add, group_neg, is_free_of_2_torsion
from poissoncolor.errors import SpecMismatch


def test_examples():
    G = GroupSpec(1, (3,))
    assert group_add(G(2, 2), G(1, 2)) == G(3, 1)
    a = G(5, 1)
    assert group_add(a, G.zero()) == a
    Z = GroupSpec(1)
    assert group_add(Z(1), Z(-1)) == Z.zero()
    assert group_neg(GroupSpec(0, (3,))(1)) == GroupSpec(0, (3,))(2)
    assert group_neg(GroupSpec(2)(2, -5)) == GroupSpec(2)(-2, 5)


def test_two_torsion_examples():
    assert is_free_of_2_torsion(GroupSpec(1))
    assert not is_free_of_2_torsion(GroupSpec(1, (2,)))
    assert is_free_of_2_torsion(GroupSpec(0, (3, 9)))
    assert not is_free_of_2_torsion(GroupSpec(0, (3, 4)))


def test_canonical_coordinates():
    G = GroupSpec(1, (4,))
    assert G(0, 7).coords == (0, 3) and G(0, -1) == G(0, 3)
    with pytest.raises(SpecMismatch):
        G(1)
    with pytest.raises(SpecMismatch):
        G(1, 0) + GroupSpec(2)(1, 0)
    with pytest.raises(ValueError):
        GroupSpec(0, (1,))


def test_order():
    G = GroupSpec(1, (6,))
    assert G(0, 2).order() == 3
    assert G(1, 0).order() is None
    assert G.zero().order() == 1


groups = st.sampled_from([GroupSpec(1), GroupSpec(2), GroupSpec(1, (3,)), GroupSpec(0, (2, 3)), GroupSpec(1, (4, 5))])


@st.composite
def group_and_elements(draw, k=3):
    G = draw(groups)
    elems = [G(*draw(st.lists(st.integers(-20, 20), min_size=G.rank, max_size=G.rank))) for _ in range(k)]
    return G, elems


@given(group_and_elements())
def test_abelian_group_laws(ge):
    G, (a, b, c) = ge
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + group_neg(a) == G.zero()
    assert group_neg(group_neg(a)) == a
    assert 3 * a == a + a + a


@given(st.lists(st.integers(2, 9), max_size=3), st.integers(0, 2))
def test_two_torsion_matches_brute_force(torsion, r):
    G = GroupSpec(r, tuple(torsion))
    brute = not any(x != G.zero() and x + x == G.zero() for x in G.torsion_elements())
    assert is_free_of_2_torsion(G) == brute
