"""Verification of the defining identities and of the structural predicates.

All identities are multilinear, so they are checked on basis tuples only; for
each law the lexicographically smallest failing tuple is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .algebra import BRACKET, PRODUCT, ColorAlgebra, Element, Subspace, _span, product_of_subspaces, subspace_sum
from .connections import restricted_support
from .errors import AlphaOutOfRange
from .group import GroupElement
from .linalg import nullspace

LAWS = (
    "grading_bracket",
    "grading_product",
    "commutativity",
    "anticommutativity",
    "associativity",
    "jacobi",
    "leibniz",
)


@dataclass(frozen=True)
class LawResult:
    passed: bool
    indices: tuple[int, ...] | None = None
    lhs: Element | None = None
    rhs: Element | None = None


@dataclass
class AxiomReport:
    laws: dict[str, LawResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.laws.values())

    def __bool__(self):
        return self.passed

    def __getitem__(self, law: str) -> LawResult:
        return self.laws[law]

    def failures(self) -> list[str]:
        return [name for name, r in self.laws.items() if not r.passed]

    def to_json(self, A: ColorAlgebra) -> dict:
        out = {}
        for name in LAWS:
            r = self.laws[name]
            entry = {"pass": r.passed}
            if not r.passed:
                entry["indices"] = list(r.indices)
                entry["lhs"] = [A.field.format(a) for a in r.lhs.coeffs]
                entry["rhs"] = [A.field.format(a) for a in r.rhs.coeffs]
            out[name] = entry
        return out


class _Tables:
    """Dense basis-product tables with helpers for nested evaluation."""

    def __init__(self, A: ColorAlgebra):
        self.A = A
        F = A.field
        self.F = F
        n = A.n
        self.t = {w: [[A.basis_product(w, i, j) for j in range(n)] for i in range(n)] for w in (BRACKET, PRODUCT)}

    def left(self, which, i, v):
        """e_i * v for a dense vector v."""
        F = self.F
        out = [F.zero] * self.A.n
        row = self.t[which][i]
        for k, a in enumerate(v):
            if a:
                for m, c in enumerate(row[k]):
                    if c:
                        out[m] = F.add(out[m], F.mul(a, c))
        return out

    def right(self, which, v, j):
        """v * e_j for a dense vector v."""
        F = self.F
        out = [F.zero] * self.A.n
        tab = self.t[which]
        for k, a in enumerate(v):
            if a:
                for m, c in enumerate(tab[k][j]):
                    if c:
                        out[m] = F.add(out[m], F.mul(a, c))
        return out

    def lin(self, *terms):
        """Sum of coefficient * vector pairs."""
        F = self.F
        out = [F.zero] * self.A.n
        for c, v in terms:
            for m, a in enumerate(v):
                if a:
                    out[m] = F.add(out[m], F.mul(c, a))
        return out


def _fail(A, indices, lhs, rhs) -> LawResult:
    return LawResult(False, tuple(indices), A.element(lhs), A.element(rhs))


def _check_grading(A: ColorAlgebra, which: str) -> LawResult:
    F = A.field
    for (i, j), terms in A.tables[which].items():
        want = A.target_degree(which, A.degrees[i], A.degrees[j])
        for k, _ in terms:
            if A.degrees[k] != want:
                full = A.basis_product(which, i, j)
                expected = [a if A.degrees[m] == want else F.zero for m, a in enumerate(full)]
                return _fail(A, (i, j, k), full, expected)
    return LawResult(True)


def check_axioms(A: ColorAlgebra) -> AxiomReport:
    F = A.field
    T = _Tables(A)
    br, pr = T.t[BRACKET], T.t[PRODUCT]
    n, g0, deg = A.n, A.g0, A.degrees
    one = F.one
    report = AxiomReport()
    report.laws["grading_bracket"] = _check_grading(A, BRACKET)
    report.laws["grading_product"] = _check_grading(A, PRODUCT)

    def first_pair(fn):
        for i in range(n):
            for j in range(n):
                lhs, rhs = fn(i, j)
                if lhs != rhs:
                    return _fail(A, (i, j), lhs, rhs)
        return LawResult(True)

    def first_triple(fn):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs, rhs = fn(i, j, k)
                    if lhs != rhs:
                        return _fail(A, (i, j, k), lhs, rhs)
        return LawResult(True)

    report.laws["commutativity"] = first_pair(
        lambda i, j: (pr[i][j], T.lin((A.eps(deg[i], deg[j]), pr[j][i])))
    )
    report.laws["anticommutativity"] = first_pair(
        lambda i, j: (br[i][j], T.lin((F.neg(A.eps(deg[i] + g0, deg[j] + g0)), br[j][i])))
    )
    report.laws["associativity"] = first_triple(
        lambda i, j, k: (T.right(PRODUCT, pr[i][j], k), T.left(PRODUCT, i, pr[j][k]))
    )
    report.laws["jacobi"] = first_triple(
        lambda i, j, k: (
            T.left(BRACKET, i, br[j][k]),
            T.lin(
                (one, T.right(BRACKET, br[i][j], k)),
                (A.eps(deg[i] + g0, deg[j] + g0), T.left(BRACKET, j, br[i][k])),
            ),
        )
    )
    report.laws["leibniz"] = first_triple(
        lambda i, j, k: (
            T.left(BRACKET, i, pr[j][k]),
            T.lin(
                (one, T.right(PRODUCT, br[i][j], k)),
                (A.eps(deg[i] + g0, deg[j]), T.left(PRODUCT, j, br[i][k])),
            ),
        )
    )
    return report


def compute_center(A: ColorAlgebra) -> Subspace:
    """Kernel of v -> ({v,b}, {b,v}, vb, bv) over all basis vectors b."""
    n = A.n
    equations = []
    for b in range(n):
        for which in (BRACKET, PRODUCT):
            left = [A.basis_product(which, i, b) for i in range(n)]
            right = [A.basis_product(which, b, i) for i in range(n)]
            for k in range(n):
                equations.append([left[i][k] for i in range(n)])
                equations.append([right[i][k] for i in range(n)])
    return _span(A.field, A.whole(), nullspace(equations, A.field, n))


def is_centerless(A: ColorAlgebra) -> bool:
    return compute_center(A).dim == 0


# -- tightness ----------------------------------------------------------------


@dataclass(frozen=True)
class TightnessResult:
    alpha: GroupElement
    tight: bool
    witness: Subspace
    component: Subspace

    def __bool__(self):
        return self.tight


def alpha_multiple(A: ColorAlgebra, alpha: GroupElement, allowed=range(-3, 4)) -> int:
    for m in sorted(allowed, key=abs):
        if alpha == m * A.g0:
            return m
    raise AlphaOutOfRange(f"{alpha} is not one of {{n*g0 : n in {list(allowed)}}}")


def tightness_witness(A: ColorAlgebra, alpha: GroupElement, sigma=None) -> Subspace:
    """Sum of {P_h, P_p} (p = -h-g0+alpha) and P_k P_q (q = -k+alpha) over Sigma minus ±2g0, ±3g0."""
    g0 = A.g0
    if sigma is None:
        sigma = restricted_support(A).sigma
    excluded = {2 * g0, -2 * g0, 3 * g0, -3 * g0}
    allowed = [g for g in sigma if g not in excluded]
    pool = set(allowed)
    W = A.zero_subspace(alpha)
    for h in allowed:
        p = -h - g0 + alpha
        if p in pool:
            W = subspace_sum(W, product_of_subspaces(A, A.full_component(h), A.full_component(p), BRACKET))
        q = -h + alpha
        if q in pool:
            W = subspace_sum(W, product_of_subspaces(A, A.full_component(h), A.full_component(q), PRODUCT))
    return W


def is_tight(A: ColorAlgebra, alpha: GroupElement) -> TightnessResult:
    alpha_multiple(A, alpha)
    W = tightness_witness(A, alpha)
    P = A.full_component(alpha)
    return TightnessResult(alpha, W.dim == P.dim, W, P)


# -- support predicates ---------------------------------------------------------


def is_maximal_length(A: ColorAlgebra) -> bool:
    if A.dim_of(A.group.zero()) == 0:
        return False
    return all(A.dim_of(g) == 1 for g in restricted_support(A).sigma)


def is_symmetric_support(A: ColorAlgebra) -> bool:
    sigma = set(restricted_support(A).sigma)
    return all(-g in sigma for g in sigma)


@dataclass(frozen=True)
class MultiplicativityResult:
    holds: bool
    failure: tuple[GroupElement, GroupElement, GroupElement] | None = None

    def __bool__(self):
        return self.holds


def _unique(seq):
    seen = []
    for x in seq:
        if x not in seen:
            seen.append(x)
    return seen


def sigma_multiplicativity_violations(A: ColorAlgebra) -> Iterator[tuple[GroupElement, GroupElement, GroupElement]]:
    """Every triple (g, h, k) breaking Sigma-multiplicativity, in deterministic order.

    Order: g over sorted Sigma; h over 0, g0, -g0, then sorted Sigma; k over 0, g0, -g0.
    """
    g0 = A.g0
    zero = A.group.zero()
    sigma = restricted_support(A).sigma
    sigma_set = set(sigma)
    hs = _unique([zero, g0, -g0] + list(sigma))
    ks = _unique([zero, g0, -g0])
    for g in sigma:
        Pg = A.full_component(g)
        for h in hs:
            Ph = A.full_component(h)
            for k in ks:
                if g + h + k not in sigma_set:
                    continue
                ok = True
                if k == zero and product_of_subspaces(A, Pg, Ph, PRODUCT).is_zero():
                    ok = False
                if ok and k == g0 and product_of_subspaces(A, Pg, Ph, BRACKET).is_zero():
                    ok = False
                if ok and k == -g0:
                    GH = product_of_subspaces(A, Pg, Ph, PRODUCT)
                    if product_of_subspaces(A, GH, A.full_component(-g0), PRODUCT).is_zero():
                        ok = False
                if not ok:
                    yield (g, h, k)


def is_sigma_multiplicative(A: ColorAlgebra) -> MultiplicativityResult:
    first = next(sigma_multiplicativity_violations(A), None)
    return MultiplicativityResult(first is None, first)
