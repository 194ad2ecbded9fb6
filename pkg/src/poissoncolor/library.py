"""Built-in algebras and constructions producing new algebras from old ones."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .algebra import BRACKET, PRODUCT, ColorAlgebra
from .bicharacter import Bicharacter, trivial_bicharacter, validate_bicharacter
from .errors import StructureError, UnknownExample
from .group import GroupElement, GroupSpec
from .linalg import invert
from .scalars import QQ, FieldSpec


def _sign_matrix(field: FieldSpec, n: int) -> list[list]:
    """-1 on the diagonal and 1 elsewhere."""
    F = field
    return [[F.neg(F.one) if i == j else F.one for j in range(n)] for i in range(n)]


def odd_line(field: FieldSpec = QQ) -> ColorAlgebra:
    """K[ξ] with ξ odd of degree 1, bracket {ξ, ξ} = 1 of degree -2."""
    G = GroupSpec(1)
    eps = validate_bicharacter([[-1]], G, field)
    basis = [("1", G(0)), ("xi", G(1))]
    product = {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)]}
    bracket = {(1, 1): [(0, 1)]}
    return ColorAlgebra(G, field, eps, G(-2), basis, bracket, product)


def orthogonal_sum(field: FieldSpec = QQ) -> ColorAlgebra:
    """Two odd lines on the axes of Z^2; the second carries no bracket since its square has the wrong degree."""
    G = GroupSpec(2)
    eps = validate_bicharacter(_sign_matrix(field, 2), G, field)
    basis = [("1a", G(0, 0)), ("xia", G(1, 0)), ("1b", G(0, 0)), ("xib", G(0, 1))]
    product = {
        (0, 0): [(0, 1)],
        (0, 1): [(1, 1)],
        (1, 0): [(1, 1)],
        (2, 2): [(2, 1)],
        (2, 3): [(3, 1)],
        (3, 2): [(3, 1)],
    }
    bracket = {(1, 1): [(0, 1)]}
    return ColorAlgebra(G, field, eps, G(-2, 0), basis, bracket, product)


def group_algebra(field: FieldSpec = QQ, torsion: Sequence[int] = (3,)) -> ColorAlgebra:
    """K[G] for a finite G with trivial bicharacter and zero bracket."""
    G = GroupSpec(0, tuple(torsion))
    eps = trivial_bicharacter(G, field)
    elems = list(G.torsion_elements())
    pos = {g: i for i, g in enumerate(elems)}
    basis = [("e" + "_".join(map(str, g.coords)), g) for g in elems]
    product = {(i, j): [(pos[g + h], 1)] for i, g in enumerate(elems) for j, h in enumerate(elems)}
    return ColorAlgebra(G, field, eps, G.zero(), basis, (), product)


def berezin(
    group: GroupSpec,
    epsilon: Bicharacter,
    a: GroupElement,
    b: GroupElement,
    c=1,
    names: Sequence[str] = ("1", "xi", "eta", "xieta"),
) -> ColorAlgebra:
    """Exterior algebra on ξ (degree a), η (degree b) with {ξ, η} = c.

    Both generators must be odd and anticommute: ε(a, a) = ε(b, b) = ε(a, b) = -1.
    The bracket has degree g0 = -(a + b).
    """
    F = epsilon.field
    c = F.parse(c) if isinstance(c, str) else F.convert(c)
    if not c:
        raise StructureError("the bracket constant must be nonzero")
    minus = F.neg(F.one)
    if epsilon.raw(a, b) != minus:
        raise StructureError("the generators must anticommute: eps(a, b) = -1")
    if epsilon.raw(a, a) != minus or epsilon.raw(b, b) != minus:
        raise StructureError("the generators must be odd: eps(a, a) = eps(b, b) = -1")
    one, xi, eta, xe = range(4)
    basis = list(zip(names, (group.zero(), a, b, a + b)))
    product = {
        (one, one): [(one, 1)],
        (one, xi): [(xi, 1)],
        (xi, one): [(xi, 1)],
        (one, eta): [(eta, 1)],
        (eta, one): [(eta, 1)],
        (one, xe): [(xe, 1)],
        (xe, one): [(xe, 1)],
        (xi, eta): [(xe, 1)],
        (eta, xi): [(xe, -1)],
    }
    nc = F.neg(c)
    bracket = {
        (xi, eta): [(one, c)],
        (eta, xi): [(one, c)],
        (xi, xe): [(xi, nc)],
        (xe, xi): [(xi, c)],
        (eta, xe): [(eta, c)],
        (xe, eta): [(eta, nc)],
    }
    return ColorAlgebra(group, F, epsilon, -(a + b), basis, bracket, product)


def direct_sum(A: ColorAlgebra, B: ColorAlgebra, suffixes=("_1", "_2")) -> ColorAlgebra:
    """A ⊕ B with zero cross products; both summands must share G, ε, g0 and the field."""
    if (A.group, A.field, A.epsilon, A.g0) != (B.group, B.field, B.epsilon, B.g0):
        raise StructureError("summands must share the grading group, bicharacter, degree and field")
    basis = [(n + suffixes[0], d) for n, d in A.basis] + [(n + suffixes[1], d) for n, d in B.basis]
    off = A.n
    tables = {}
    for which in (BRACKET, PRODUCT):
        tab = dict(A.tables[which])
        for (i, j), terms in B.tables[which].items():
            tab[(i + off, j + off)] = [(k + off, c) for k, c in terms]
        tables[which] = tab
    return ColorAlgebra(A.group, A.field, A.epsilon, A.g0, basis, tables[BRACKET], tables[PRODUCT])


def tensor_group_algebra(A: ColorAlgebra, torsion: Sequence[int]) -> ColorAlgebra:
    """A ⊗ K[H] for a finite H = Z_m1 x ...: graded by G x H, ε ignores the H part.

    {x ⊗ e_h, y ⊗ e_k} = {x, y} ⊗ e_{h+k} and likewise for the product.
    """
    G = A.group
    H = GroupSpec(0, tuple(torsion))
    GH = GroupSpec(G.free_rank, G.torsion + H.torsion)
    F = A.field
    r = G.rank
    values = [
        [A.epsilon.values[i][j] if i < r and j < r else F.one for j in range(GH.rank)] for i in range(GH.rank)
    ]
    eps = validate_bicharacter(values, GH, F)
    elems = list(H.torsion_elements())
    pos = {h: t for t, h in enumerate(elems)}
    m = len(elems)

    def lift(g, h):
        return GH(*(g.coords + h.coords))

    basis = [(f"{name}@{'_'.join(map(str, h.coords))}", lift(d, h)) for name, d in A.basis for h in elems]
    tables = {}
    for which in (BRACKET, PRODUCT):
        tab = {}
        for (i, j), terms in A.tables[which].items():
            for s, h in enumerate(elems):
                for t, k in enumerate(elems):
                    u = pos[h + k]
                    tab[(i * m + s, j * m + t)] = [(q * m + u, c) for q, c in terms]
        tables[which] = tab
    return ColorAlgebra(GH, F, eps, lift(A.g0, H.zero()), basis, tables[BRACKET], tables[PRODUCT])


def _integer_inverse(M: Sequence[Sequence[int]]) -> list[list[int]]:
    inv = invert([[Fraction(x) for x in row] for row in M], QQ)
    if any(x.denominator != 1 for row in inv for x in row):
        raise StructureError("regrading matrix must be unimodular")
    return [[int(x) for x in row] for row in inv]


def regrade(A: ColorAlgebra, M: Sequence[Sequence[int]]) -> ColorAlgebra:
    """Push the grading forward along the automorphism g -> M g of a free group Z^r.

    The bicharacter is transported so the structure constants are unchanged.
    """
    G = A.group
    if G.torsion:
        raise StructureError("regrading is only implemented for free grading groups")
    r = G.free_rank
    Minv = _integer_inverse(M)

    def push(g: GroupElement) -> GroupElement:
        return G(*(sum(M[i][j] * g.coords[j] for j in range(r)) for i in range(r)))

    back = [G(*(Minv[i][j] for i in range(r))) for j in range(r)]
    values = [[A.eps(back[i], back[j]) for j in range(r)] for i in range(r)]
    eps = validate_bicharacter(values, G, A.field)
    basis = [(n, push(d)) for n, d in A.basis]
    return ColorAlgebra(G, A.field, eps, push(A.g0), basis, A.bracket_sc, A.product_sc)


def change_basis(A: ColorAlgebra, blocks: dict[GroupElement, Sequence[Sequence]]) -> ColorAlgebra:
    """Same algebra on a new homogeneous basis.

    ``blocks[g]`` is an invertible matrix whose rows express the new basis of
    P_g in the old one (components missing from ``blocks`` keep their basis).
    New vectors are ordered by degree.
    """
    F = A.field
    n = A.n
    T = []
    basis = []
    for g, idx in A.components.items():
        block = blocks.get(g)
        if block is None:
            block = [[F.one if a == b else F.zero for b in range(len(idx))] for a in range(len(idx))]
        block = [[F.convert(x) for x in row] for row in block]
        if len(block) != len(idx) or any(len(row) != len(idx) for row in block):
            raise StructureError(f"block for degree {g} has the wrong shape")
        for a, row in enumerate(block):
            v = [F.zero] * n
            for pos, x in zip(idx, row):
                v[pos] = x
            T.append(v)
            basis.append((f"v{len(basis)}", g))
    Tinv = invert(T, F)

    def new_coords(w):
        out = [F.zero] * n
        for k, a in enumerate(w):
            if a:
                for m in range(n):
                    if Tinv[k][m]:
                        out[m] = F.add(out[m], F.mul(a, Tinv[k][m]))
        return out

    tables = {}
    for which in (BRACKET, PRODUCT):
        tab = {}
        for a in range(n):
            for b in range(n):
                w = new_coords(A.mul_raw(which, T[a], T[b]))
                terms = [(k, x) for k, x in enumerate(w) if x]
                if terms:
                    tab[(a, b)] = terms
        tables[which] = tab
    return ColorAlgebra(A.group, F, A.epsilon, A.g0, basis, tables[BRACKET], tables[PRODUCT])


def random_change_basis(A: ColorAlgebra, rng: random.Random, span: int = 3) -> ColorAlgebra:
    """change_basis with random invertible blocks (entries in [-span, span])."""
    F = A.field
    blocks = {}
    for g, idx in A.components.items():
        d = len(idx)
        while True:
            block = [[F.convert(rng.randint(-span, span)) for _ in range(d)] for _ in range(d)]
            try:
                invert(block, F)
            except ValueError:
                continue
            break
        blocks[g] = block
    return change_basis(A, blocks)


# -- named corpus ------------------------------------------------------------


def _color_regrade(field: FieldSpec) -> ColorAlgebra:
    G = GroupSpec(0, (2,))
    eps = validate_bicharacter([[-1]], G, field)
    return berezin(G, eps, G(1), G(1))


def _berezin_line(field: FieldSpec, c=1) -> ColorAlgebra:
    G = GroupSpec(1)
    eps = validate_bicharacter([[-1]], G, field)
    return berezin(G, eps, G(1), G(-1), c)


def _berezin_pair(field: FieldSpec) -> ColorAlgebra:
    G = GroupSpec(2)
    eps = validate_bicharacter(_sign_matrix(field, 2), G, field)
    first = berezin(G, eps, G(1, 0), G(-1, 0))
    second = berezin(G, eps, G(0, 1), G(0, -1))
    return direct_sum(first, second, ("a", "b"))


BUILTINS = {
    "odd-line": lambda field, **kw: odd_line(field),
    "orthogonal-sum": lambda field, **kw: orthogonal_sum(field),
    "zero-bracket-group-algebra": lambda field, **kw: group_algebra(field, **kw),
    "color-regrade": lambda field, **kw: _color_regrade(field),
    "berezin": lambda field, **kw: _berezin_line(field, **kw),
    "berezin-pair": lambda field, **kw: _berezin_pair(field),
}


def builtin_names() -> tuple[str, ...]:
    return tuple(BUILTINS)


def builtin_example(name: str, field: FieldSpec = QQ, **params) -> ColorAlgebra:
    try:
        build = BUILTINS[name]
    except KeyError:
        raise UnknownExample(f"unknown example {name!r}; choose from {', '.join(BUILTINS)}") from None
    return build(field, **params)
