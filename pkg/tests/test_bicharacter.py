from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poissoncolor import GF, QQ, GroupSpec, validate_bicharacter
from poissoncolor.bicharacter import parity_bicharacter, trivial_bicharacter, violations
from poissoncolor.errors import BicharacterError, SpecMismatch


def kinds(values, G, F):
    return {v.kind for v in violations(values, G, F)}


def test_superalgebra_sign():
    G = GroupSpec(0, (2,))
    eps = validate_bicharacter([[-1]], G, QQ)
    assert eps.raw(G(1), G(1)) == -1
    assert eps.raw(G(1), G(0)) == 1


def test_diagonal_must_be_sign():
    assert kinds([[2]], GroupSpec(1), QQ) == {"DiagonalNotSignLike"}
    with pytest.raises(BicharacterError) as info:
        validate_bicharacter([[2]], GroupSpec(1), QQ)
    assert info.value.violations[0].i == 0


def test_cube_root_of_unity_rejected_on_diagonal():
    G = GroupSpec(0, (3,))
    F = GF(7)
    assert F.pow(2, 3) == 1
    assert kinds([[2]], G, F) == {"DiagonalNotSignLike"}
    validate_bicharacter([[1]], G, F)


def test_other_violations():
    G = GroupSpec(2)
    assert kinds([[1, 2], [2, 1]], G, QQ) == {"SkewSymmetryViolation"}
    assert kinds([[1, 0], [1, 1]], G, QQ) == {"ZeroEntry"}
    T = GroupSpec(1, (3,))
    assert "TorsionIncompatible" in kinds([[1, -1], [-1, 1]], T, QQ)
    assert kinds([[1, 2], [4, 1]], T, GF(7)) == set()


def test_evaluation_examples():
    Z = GroupSpec(1)
    eps = validate_bicharacter([[-1]], Z, QQ)
    assert eps.raw(Z(2), Z(3)) == 1
    assert eps.raw(Z(1), Z(3)) == -1
    assert eps.raw(Z(5), Z(0)) == 1
    with pytest.raises(SpecMismatch):
        eps.raw(GroupSpec(2)(1, 0), Z(1))


def test_parity_and_trivial():
    G = GroupSpec(2)
    eps = parity_bicharacter(G, QQ, [1, 1])
    assert eps.raw(G(1, 0), G(0, 1)) == -1
    assert trivial_bicharacter(G, QQ).raw(G(3, 1), G(2, 7)) == 1


@st.composite
def bicharacters(draw):
    G = draw(st.sampled_from([GroupSpec(1), GroupSpec(2), GroupSpec(1, (3,)), GroupSpec(3)]))
    n = G.rank
    rows = [[Fraction(1)] * n for _ in range(n)]
    for i in range(G.free_rank):
        rows[i][i] = Fraction(draw(st.sampled_from([1, -1])))
        for j in range(i + 1, G.free_rank):
            v = Fraction(draw(st.sampled_from([1, -1, 2, 3, -1 / 2])))
            rows[i][j], rows[j][i] = v, 1 / v
    return G, validate_bicharacter(rows, G, QQ)


def elems(G, draw, k):
    return [G(*draw(st.lists(st.integers(-4, 4), min_size=G.rank, max_size=G.rank))) for _ in range(k)]


@given(st.data())
def test_bicharacter_laws(data):
    G, eps = data.draw(bicharacters())
    g, h, k = elems(G, data.draw, 3)
    assert eps.raw(g, h) * eps.raw(h, g) == 1
    assert eps.raw(g, h + k) == eps.raw(g, h) * eps.raw(g, k)
    assert eps.raw(g + h, k) == eps.raw(g, k) * eps.raw(h, k)
    assert eps.raw(g, g) in (1, -1)


@given(st.sampled_from([1, 2, 4]), st.sampled_from([1, 6]))
def test_finite_group_brute_force_table(w, d):
    # Z_3 x Z_6 over GF(7): the cross value must be a cube root of unity
    G = GroupSpec(0, (3, 6))
    F = GF(7)
    rows = [[1, w], [F.inv(w), d]]
    eps = validate_bicharacter(rows, G, F)
    elements = list(G.torsion_elements())
    table = {}
    for g in elements:
        for h in elements:
            v = 1
            for i, gi in enumerate(g.coords):
                for j, hj in enumerate(h.coords):
                    for _ in range(gi * hj):
                        v = v * rows[i][j] % 7
            table[(g, h)] = v
    assert all(eps.raw(g, h) == table[(g, h)] for g in elements for h in elements)
    assert all(table[(g, h)] * table[(h, g)] % 7 == 1 for g in elements for h in elements)
