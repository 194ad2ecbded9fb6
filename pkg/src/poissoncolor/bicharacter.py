"""Skew-symmetric bicharacters on finitely generated abelian groups.

A bicharacter is stored by its values on pairs of generators and extended
multiplicatively: ``eps(g, h) = prod_ij B[i][j] ** (g_i * h_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BicharacterError, SpecMismatch
from .group import GroupElement, GroupSpec
from .scalars import FieldSpec, Scalar


@dataclass(frozen=True)
class Violation:
    kind: str  # SkewSymmetryViolation | DiagonalNotSignLike | TorsionIncompatible | ZeroEntry
    i: int
    j: int | None = None

    def __str__(self):
        where = f"({self.i}, {self.j})" if self.j is not None else f"({self.i})"
        return f"{self.kind}{where}"


class Bicharacter:
    """A validated skew-symmetric bicharacter; build with :func:`validate_bicharacter`."""

    def __init__(self, values, group: GroupSpec, field: FieldSpec):
        self.group = group
        self.field = field
        self.values = tuple(tuple(row) for row in values)
        self._cache: dict = {}

    def __eq__(self, other):
        return (
            isinstance(other, Bicharacter)
            and self.group == other.group
            and self.field == other.field
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.group, self.field, self.values))

    def __repr__(self):
        rows = [[self.field.format(v) for v in row] for row in self.values]
        return f"Bicharacter({rows}, {self.group}, {self.field})"

    def raw(self, g: GroupElement, h: GroupElement):
        """Raw field value of eps(g, h)."""
        key = (g.coords, h.coords)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if g.group != self.group or h.group != self.group:
            raise SpecMismatch("group element outside the bicharacter's group")
        F = self.field
        result = F.one
        for i, gi in enumerate(g.coords):
            if not gi:
                continue
            row = self.values[i]
            for j, hj in enumerate(h.coords):
                if hj:
                    result = F.mul(result, F.pow(row[j], gi * hj))
        self._cache[key] = result
        return result

    def __call__(self, g: GroupElement, h: GroupElement) -> Scalar:
        return Scalar(self.raw(g, h), self.field)

    def to_json(self) -> list[list[str]]:
        return [[self.field.format(v) for v in row] for row in self.values]


def violations(values, group: GroupSpec, field: FieldSpec) -> list[Violation]:
    F = field
    n = group.rank
    found = []
    rows = [[F.convert(v) for v in row] for row in values]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise BicharacterError([Violation("ShapeMismatch", n)])
    for i in range(n):
        for j in range(n):
            if not rows[i][j]:
                found.append(Violation("ZeroEntry", i, j))
    if found:
        return found
    minus_one = F.neg(F.one)
    for i in range(n):
        if rows[i][i] not in (F.one, minus_one):
            found.append(Violation("DiagonalNotSignLike", i))
        for j in range(i + 1, n):
            if F.mul(rows[i][j], rows[j][i]) != F.one:
                found.append(Violation("SkewSymmetryViolation", i, j))
    for t, m in enumerate(group.torsion):
        i = group.free_rank + t
        for j in range(n):
            if F.pow(rows[i][j], m) != F.one or F.pow(rows[j][i], m) != F.one:
                found.append(Violation("TorsionIncompatible", i, j))
    return found


def validate_bicharacter(values: Sequence[Sequence], group: GroupSpec, field: FieldSpec) -> Bicharacter:
    """Return a :class:`Bicharacter` or raise :class:`BicharacterError` listing violations."""
    found = violations(values, group, field)
    if found:
        raise BicharacterError(found)
    return Bicharacter([[field.convert(v) for v in row] for row in values], group, field)


def trivial_bicharacter(group: GroupSpec, field: FieldSpec) -> Bicharacter:
    n = group.rank
    return Bicharacter([[field.one] * n for _ in range(n)], group, field)


def parity_bicharacter(group: GroupSpec, field: FieldSpec, weights: Sequence[int]) -> Bicharacter:
    """Super sign ``(-1) ** (p(g) p(h))`` for the parity ``p(g) = sum w_i g_i mod 2``.

    Torsion generators of odd order must carry even weight.
    """
    F = field
    minus_one = F.neg(F.one)
    rows = [[minus_one if (wi * wj) % 2 else F.one for wj in weights] for wi in weights]
    return validate_bicharacter(rows, group, field)
