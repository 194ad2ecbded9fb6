"""Exact row reduction over a :class:`~poissoncolor.scalars.FieldSpec`.

Vectors are plain lists/tuples of raw field values.  Everything here is dense;
algebras of interest have dimension in the tens at most.
"""

from __future__ import annotations

from .scalars import FieldSpec


class Echelon:
    """Incrementally maintained reduced row echelon basis.

    ``rows`` maps pivot column -> row with a 1 in that column and zeros in every
    other pivot column, so membership tests are a single reduction pass.
    """

    def __init__(self, field: FieldSpec, n: int, vectors=()):
        self.field = field
        self.n = n
        self.rows: dict[int, list] = {}
        for v in vectors:
            self.insert(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> list:
        F = self.field
        w = list(v)
        for c, row in self.rows.items():
            a = w[c]
            if a:
                for j in range(self.n):
                    if row[j]:
                        w[j] = F.sub(w[j], F.mul(a, row[j]))
        return w

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def insert(self, v) -> bool:
        """Add ``v`` to the span; return True when the dimension grew."""
        F = self.field
        w = self.reduce(v)
        pivot = next((j for j, a in enumerate(w) if a), None)
        if pivot is None:
            return False
        scale = F.inv(w[pivot])
        w = [F.mul(scale, a) for a in w]
        for c, row in self.rows.items():
            a = row[pivot]
            if a:
                for j in range(self.n):
                    if w[j]:
                        row[j] = F.sub(row[j], F.mul(a, w[j]))
        self.rows[pivot] = w
        return True

    def canonical(self) -> tuple[tuple, ...]:
        """Rows sorted by pivot: the unique RREF of the span."""
        return tuple(tuple(self.rows[c]) for c in sorted(self.rows))

    def pivots(self) -> tuple[int, ...]:
        return tuple(sorted(self.rows))

    def coordinates(self, v):
        """Coefficients of ``v`` on :meth:`canonical` rows, or None if outside the span."""
        if not self.contains(v):
            return None
        return [v[c] for c in sorted(self.rows)]


def rref(vectors, field: FieldSpec, n: int) -> tuple[tuple, ...]:
    return Echelon(field, n, vectors).canonical()


def nullspace(equations, field: FieldSpec, n: int) -> list[list]:
    """Basis of ``{c : sum_i eq[i] c_i = 0 for every eq}`` in ``F^n``."""
    F = field
    ech = Echelon(field, n, equations)
    pivots = set(ech.rows)
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [F.zero] * n
        v[free] = F.one
        for c, row in ech.rows.items():
            if row[free]:
                v[c] = F.neg(row[free])
        basis.append(v)
    return basis


def intersect(basis_u, basis_w, field: FieldSpec, n: int) -> list[list]:
    """Basis of span(U) ∩ span(W) via the kernel of [U; -W]."""
    F = field
    u = [list(r) for r in basis_u]
    w = [list(r) for r in basis_w]
    k = len(u) + len(w)
    if not u or not w:
        return []
    # columns are the coefficients on u then on w; one equation per coordinate
    equations = []
    for j in range(n):
        equations.append([r[j] for r in u] + [F.neg(r[j]) for r in w])
    result = []
    for c in nullspace(equations, field, k):
        v = [F.zero] * n
        for a, r in zip(c[: len(u)], u):
            if a:
                v = [F.add(x, F.mul(a, y)) for x, y in zip(v, r)]
        result.append(v)
    return result


def invert(matrix, field: FieldSpec) -> list[list]:
    """Inverse of a square matrix; raises ValueError when singular."""
    F = field
    n = len(matrix)
    aug = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        s = F.inv(aug[col][col])
        aug[col] = [F.mul(s, a) for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
