"""Finitely generated abelian groups Z^r x Z_m1 x ... x Z_mk."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import SpecMismatch


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(m < 2 for m in self.torsion):
            raise ValueError(f"torsion orders must be >= 2, got {self.torsion}")

    @property
    def rank(self) -> int:
        """Number of generators r + k."""
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int | None, ...]:
        return (None,) * self.free_rank + self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def __call__(self, *coords) -> "GroupElement":
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = coords[0]
        return GroupElement(self, tuple(coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def generator(self, i: int) -> "GroupElement":
        coords = [0] * self.rank
        coords[i] = 1
        return GroupElement(self, tuple(coords))

    def torsion_elements(self) -> Iterable["GroupElement"]:
        """Every element of the torsion subgroup."""
        ranges = [range(m) for m in self.torsion]
        for t in product(*ranges):
            yield GroupElement(self, (0,) * self.free_rank + t)

    def box(self, radius: int) -> list["GroupElement"]:
        """Elements with free coordinates in [-radius, radius] (all torsion values)."""
        ranges = [range(-radius, radius + 1)] * self.free_rank + [range(m) for m in self.torsion]
        return [GroupElement(self, c) for c in product(*ranges)]

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z{m}" for m in self.torsion]
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class GroupElement:
    group: GroupSpec
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.group.rank:
            raise SpecMismatch(f"{len(coords)} coordinates for a group of rank {self.group.rank}")
        object.__setattr__(
            self, "coords", tuple(c if m is None else c % m for c, m in zip(coords, self.group.moduli))
        )

    def _check(self, other: "GroupElement"):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group != self.group:
            raise SpecMismatch(f"elements of {self.group} and {other.group} combined")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __mul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return GroupElement(self.group, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coords)

    def __lt__(self, other):
        self._check(other)
        return self.coords < other.coords

    def __le__(self, other):
        self._check(other)
        return self.coords <= other.coords

    def __str__(self):
        if len(self.coords) == 1:
            return str(self.coords[0])
        return "(" + ", ".join(map(str, self.coords)) + ")"

    def order(self) -> int | None:
        """Additive order, or None when infinite."""
        from math import lcm, gcd

        result = 1
        for c, m in zip(self.coords, self.group.moduli):
            if m is None:
                if c:
                    return None
            elif c:
                result = lcm(result, m // gcd(m, c))
        return result


def group_add(a: GroupElement, b: GroupElement) -> GroupElement:
    return a + b


def group_neg(a: GroupElement) -> GroupElement:
    return -a


def is_free_of_2_torsion(G: GroupSpec) -> bool:
    """No element of order 2, i.e. every torsion order is odd."""
    return all(m % 2 for m in G.torsion)


def element(group: GroupSpec, coords: Sequence[int]) -> GroupElement:
    return GroupElement(group, tuple(coords))
