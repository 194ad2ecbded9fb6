"""Graded algebras with a bracket of degree g0 and a product of degree 0.

The :class:`ColorAlgebra` holds a homogeneous basis and sparse structure
constants.  Subspaces are kept in canonical reduced echelon form, always in
global coordinates, together with an :class:`Ambient` tag recording whether
they live in one homogeneous component or in the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .bicharacter import Bicharacter
from .errors import AmbientMismatch, SpecMismatch, StructureError
from .group import GroupElement, GroupSpec
from .linalg import Echelon, intersect
from .scalars import FieldSpec, Scalar

BRACKET = "bracket"
PRODUCT = "product"


def _coefficient(field: FieldSpec, c):
    if isinstance(c, str):
        return field.parse(c)
    return field.convert(c)


def _normalize_table(table, n: int, field: FieldSpec, which: str) -> dict:
    """Canonical sparse table: (i, j) -> tuple of (k, raw) sorted by k, no zeros."""
    out: dict[tuple[int, int], tuple] = {}
    items = table.items() if isinstance(table, Mapping) else table
    for key, entries in items:
        i, j = key
        for idx in (i, j):
            if not (isinstance(idx, int) and 0 <= idx < n):
                raise StructureError(f"{which} entry {key}: basis index {idx!r} out of range")
        acc: dict[int, object] = {}
        if (i, j) in out:
            acc.update(out[(i, j)])
        for k, c in entries:
            if not (isinstance(k, int) and 0 <= k < n):
                raise StructureError(f"{which} entry {key}: target index {k!r} out of range")
            acc[k] = field.add(acc.get(k, field.zero), _coefficient(field, c))
        terms = tuple((k, acc[k]) for k in sorted(acc) if acc[k])
        if terms:
            out[(i, j)] = terms
        else:
            out.pop((i, j), None)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class Element:
    """Coefficient vector over the full basis plus its homogeneity data.

    The zero vector counts as homogeneous with ``degree`` None.
    """

    coeffs: tuple
    degree: GroupElement | None
    homogeneous: bool

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]


@dataclass(frozen=True)
class Ambient:
    """Either one homogeneous component (``degree`` set) or the whole space."""

    n: int
    indices: tuple[int, ...]
    degree: GroupElement | None = None

    @property
    def is_global(self) -> bool:
        return self.degree is None


@dataclass(frozen=True)
class Subspace:
    ambient: Ambient
    rows: tuple[tuple, ...]
    field: FieldSpec = dc_field(compare=False)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def degree(self) -> GroupElement | None:
        return self.ambient.degree

    def is_zero(self) -> bool:
        return not self.rows

    def echelon(self) -> Echelon:
        ech = Echelon(self.field, self.ambient.n)
        for r in self.rows:
            pivot = next(j for j, a in enumerate(r) if a)
            ech.rows[pivot] = list(r)
        return ech

    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(r) if a) for r in self.rows)

    def globalize(self) -> "Subspace":
        if self.ambient.is_global:
            return self
        amb = Ambient(self.ambient.n, tuple(range(self.ambient.n)))
        return Subspace(amb, self.rows, self.field)

    def contains_vector(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.ambient.n:
            raise AmbientMismatch("vector length differs from ambient dimension")
        return self.echelon().contains(v)


def _span(field: FieldSpec, ambient: Ambient, vectors) -> Subspace:
    allowed = set(ambient.indices)
    ech = Echelon(field, ambient.n)
    for v in vectors:
        v = tuple(v)
        if len(v) != ambient.n:
            raise AmbientMismatch("vector length differs from ambient dimension")
        if any(a and j not in allowed for j, a in enumerate(v)):
            where = "the whole space" if ambient.is_global else f"component {ambient.degree}"
            raise AmbientMismatch(f"vector not contained in {where}")
        ech.insert(v)
    return Subspace(ambient, ech.canonical(), field)


class ColorAlgebra:
    """Finite-dimensional G-graded space with bracket (degree g0) and product (degree 0).

    ``bracket`` and ``product`` map index pairs ``(i, j)`` to lists of
    ``(k, coefficient)``; absent pairs multiply to zero.  Coefficients may be
    ints, Fractions, Scalars or scalar literal strings.  With
    ``check_grading=False`` entries violating the grading are accepted so that
    the axiom checker can diagnose them.
    """

    def __init__(
        self,
        group: GroupSpec,
        field: FieldSpec,
        epsilon: Bicharacter,
        g0: GroupElement,
        basis: Sequence[tuple[str, GroupElement]],
        bracket=(),
        product=(),
        check_grading: bool = True,
    ):
        if field.characteristic == 2:
            raise StructureError("characteristic 2 is not supported")
        if epsilon.group != group or epsilon.field != field:
            raise StructureError("bicharacter defined over a different group or field")
        if g0.group != group:
            raise StructureError("g0 is not an element of the grading group")
        names = [name for name, _ in basis]
        if len(set(names)) != len(names):
            raise StructureError("basis names must be unique")
        for name, deg in basis:
            if not isinstance(deg, GroupElement) or deg.group != group:
                raise StructureError(f"degree of basis vector {name!r} is not in the grading group")
        self.group = group
        self.field = field
        self.epsilon = epsilon
        self.g0 = g0
        self.basis = tuple((str(name), deg) for name, deg in basis)
        self.n = len(self.basis)
        self.names = tuple(name for name, _ in self.basis)
        self.degrees = tuple(deg for _, deg in self.basis)
        self.bracket_sc = _normalize_table(bracket, self.n, field, BRACKET)
        self.product_sc = _normalize_table(product, self.n, field, PRODUCT)
        self.tables = {BRACKET: self.bracket_sc, PRODUCT: self.product_sc}
        comps: dict[GroupElement, list[int]] = {}
        for i, deg in enumerate(self.degrees):
            comps.setdefault(deg, []).append(i)
        self.components = {g: tuple(comps[g]) for g in sorted(comps)}
        self.support = tuple(self.components)
        if check_grading:
            bad = grading_violations(self)
            if bad:
                which, i, j, k = bad[0]
                raise StructureError(
                    f"{which} entry ({i}, {j}) -> {k} lands in degree {self.degrees[k]}, "
                    f"expected {self.target_degree(which, self.degrees[i], self.degrees[j])}"
                )

    # -- basic data ------------------------------------------------------
    def __repr__(self):
        return f"<ColorAlgebra dim={self.n} over {self.field}, graded by {self.group}, g0={self.g0}>"

    def __eq__(self, other):
        return isinstance(other, ColorAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (
            self.group,
            self.field,
            self.epsilon,
            self.g0,
            self.basis,
            tuple(self.bracket_sc.items()),
            tuple(self.product_sc.items()),
        )

    def eps(self, g: GroupElement, h: GroupElement):
        """Raw value of the bicharacter."""
        return self.epsilon.raw(g, h)

    def target_degree(self, which: str, g: GroupElement, h: GroupElement) -> GroupElement:
        return g + h + self.g0 if which == BRACKET else g + h

    def dim_of(self, g: GroupElement) -> int:
        return len(self.components.get(g, ()))

    def index(self, name: str) -> int:
        return self.names.index(name)

    # -- elements --------------------------------------------------------
    def element(self, coeffs) -> Element:
        """Build an Element from a dense sequence or a ``{index/name: coefficient}`` map."""
        F = self.field
        if isinstance(coeffs, Element):
            coeffs = coeffs.coeffs
        if isinstance(coeffs, Mapping):
            dense = [F.zero] * self.n
            for key, c in coeffs.items():
                i = self.index(key) if isinstance(key, str) else key
                dense[i] = F.add(dense[i], _coefficient(F, c))
        else:
            dense = [_coefficient(F, c) for c in coeffs]
            if len(dense) != self.n:
                raise SpecMismatch(f"expected {self.n} coefficients, got {len(dense)}")
        degs = {self.degrees[i] for i, a in enumerate(dense) if a}
        if not degs:
            return Element(tuple(dense), None, True)
        if len(degs) == 1:
            return Element(tuple(dense), degs.pop(), True)
        return Element(tuple(dense), None, False)

    def basis_element(self, i: int | str) -> Element:
        if isinstance(i, str):
            i = self.index(i)
        return self.element({i: 1})

    def zero(self) -> Element:
        return self.element([0] * self.n)

    def add(self, x: Element, y: Element) -> Element:
        F = self.field
        return self.element([F.add(a, b) for a, b in zip(x.coeffs, y.coeffs)])

    def scale(self, c, x: Element) -> Element:
        F = self.field
        c = _coefficient(F, c)
        return self.element([F.mul(c, a) for a in x.coeffs])

    def format_element(self, x: Element) -> str:
        F = self.field
        terms = []
        for i, a in enumerate(x.coeffs):
            if a:
                s = F.format(a)
                terms.append(self.names[i] if s == "1" else f"{s}*{self.names[i]}")
        return " + ".join(terms) if terms else "0"

    # -- products --------------------------------------------------------
    def mul_raw(self, which: str, u, v) -> list:
        """Bilinear extension of the structure constants on raw dense vectors."""
        F = self.field
        table = self.tables[which]
        out = [F.zero] * self.n
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        if not nz_v:
            return out
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in nz_v:
                terms = table.get((i, j))
                if terms:
                    ab = F.mul(a, b)
                    for k, c in terms:
                        out[k] = F.add(out[k], F.mul(ab, c))
        return out

    def basis_product(self, which: str, i: int, j: int) -> list:
        F = self.field
        out = [F.zero] * self.n
        for k, c in self.tables[which].get((i, j), ()):
            out[k] = c
        return out

    # -- ambients and whole-component subspaces ---------------------------
    def component(self, g: GroupElement) -> Ambient:
        return Ambient(self.n, self.components.get(g, ()), g)

    def whole(self) -> Ambient:
        return Ambient(self.n, tuple(range(self.n)))

    def full_component(self, g: GroupElement) -> Subspace:
        F = self.field
        vecs = []
        for i in self.components.get(g, ()):
            v = [F.zero] * self.n
            v[i] = F.one
            vecs.append(v)
        return _span(F, self.component(g), vecs)

    def whole_space(self) -> Subspace:
        F = self.field
        vecs = [[F.one if j == i else F.zero for j in range(self.n)] for i in range(self.n)]
        return _span(F, self.whole(), vecs)

    def zero_subspace(self, g: GroupElement | None = None) -> Subspace:
        amb = self.whole() if g is None else self.component(g)
        return Subspace(amb, (), self.field)

    def homogeneous_parts(self, U: Subspace) -> dict[GroupElement, Subspace]:
        """Intersections of a global subspace with every component of the support."""
        out = {}
        for g in self.support:
            inter = subspace_intersection(U.globalize(), self.full_component(g).globalize())
            out[g] = _span(self.field, self.component(g), inter.rows)
        return out


def grading_violations(A: ColorAlgebra) -> list[tuple[str, int, int, int]]:
    """All structure-constant entries landing outside the predicted component."""
    bad = []
    for which in (BRACKET, PRODUCT):
        for (i, j), terms in A.tables[which].items():
            want = A.target_degree(which, A.degrees[i], A.degrees[j])
            for k, _ in terms:
                if A.degrees[k] != want:
                    bad.append((which, i, j, k))
    return bad


# -- module-level operations ----------------------------------------------


def bilinear_eval(A: ColorAlgebra, x: Element, y: Element, which: str) -> Element:
    if len(x.coeffs) != A.n or len(y.coeffs) != A.n:
        raise SpecMismatch("elements do not belong to this algebra")
    if which not in A.tables:
        raise ValueError(f"unknown product {which!r}")
    return A.element(A.mul_raw(which, x.coeffs, y.coeffs))


def bracket(A: ColorAlgebra, x: Element, y: Element) -> Element:
    return bilinear_eval(A, x, y, BRACKET)


def product(A: ColorAlgebra, x: Element, y: Element) -> Element:
    return bilinear_eval(A, x, y, PRODUCT)


def subspace_span(vectors: Iterable, ambient: Ambient, field: FieldSpec) -> Subspace:
    return _span(field, ambient, vectors)


def _same_ambient(U: Subspace, W: Subspace):
    if U.ambient != W.ambient:
        raise AmbientMismatch("subspaces live in different ambients")


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _same_ambient(U, W)
    return _span(U.field, U.ambient, U.rows + W.rows)


def subspace_contains(U: Subspace, x) -> bool:
    """Membership of a vector/Element, or inclusion of a Subspace."""
    if isinstance(x, Subspace):
        if x.ambient.n != U.ambient.n:
            raise AmbientMismatch("subspaces of different spaces")
        if not U.ambient.is_global and x.ambient != U.ambient:
            raise AmbientMismatch("subspaces live in different ambients")
        ech = U.echelon()
        return all(ech.contains(r) for r in x.rows)
    return U.contains_vector(x.coeffs if isinstance(x, Element) else x)


def subspace_intersection(U: Subspace, W: Subspace) -> Subspace:
    _same_ambient(U, W)
    return _span(U.field, U.ambient, intersect(U.rows, W.rows, U.field, U.ambient.n))


def product_of_subspaces(A: ColorAlgebra, U: Subspace, W: Subspace, which: str) -> Subspace:
    """Span of ``{u, w}`` (or ``u w``) over basis vectors u of U, w of W."""
    if U.degree is None or W.degree is None:
        raise SpecMismatch("product_of_subspaces needs homogeneous-component subspaces")
    if U.ambient.n != A.n or W.ambient.n != A.n:
        raise SpecMismatch("subspaces do not belong to this algebra")
    target = A.target_degree(which, U.degree, W.degree)
    vecs = [A.mul_raw(which, u, w) for u in U.rows for w in W.rows]
    return _span(A.field, A.component(target), vecs)


def as_scalar(A: ColorAlgebra, raw) -> Scalar:
    return Scalar(raw, A.field)
