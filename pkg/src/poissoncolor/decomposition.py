"""Ideals attached to connection classes, the decomposition P = U + sum I_[g], and simplicity."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import (
    BRACKET,
    PRODUCT,
    ColorAlgebra,
    Element,
    Subspace,
    _span,
    product_of_subspaces,
    subspace_contains,
    subspace_sum,
)
from .axioms import (
    check_axioms,
    is_centerless,
    is_maximal_length,
    is_sigma_multiplicative,
    is_symmetric_support,
    is_tight,
)
from .connections import SupportPartition, equivalence_classes, restricted_support
from .errors import (
    AlphaOutOfRange,
    CriterionHypothesesNotMet,
    HypothesesNotMet,
    OracleNeedsFiniteField,
    SameClass,
    ZeroGenerator,
)
from .group import GroupElement, is_free_of_2_torsion
from .linalg import Echelon


def _alphas(A: ColorAlgebra) -> list[GroupElement]:
    out = []
    for a in (A.group.zero(), A.g0, -A.g0):
        if a not in out:
            out.append(a)
    return out


@dataclass
class IdealDescriptor:
    class_rep: GroupElement
    members: tuple[GroupElement, ...]
    p_alpha: dict[GroupElement, Subspace]
    v_class: dict[GroupElement, Subspace]
    total: Subspace
    is_subalgebra: bool = False
    is_ideal: bool = False

    @property
    def dim(self) -> int:
        return self.total.dim

    def pieces(self) -> list[Subspace]:
        """Homogeneous pieces whose direct sum is the ideal (zero pieces dropped)."""
        return [U for U in list(self.p_alpha.values()) + list(self.v_class.values()) if U.dim]

    def to_json(self) -> dict:
        return {
            "class": [list(g.coords) for g in self.members],
            "p_alpha_dims": {str(a): U.dim for a, U in self.p_alpha.items()},
            "v_dim": sum(U.dim for U in self.v_class.values()),
            "dim": self.dim,
            "is_subalgebra": self.is_subalgebra,
            "is_ideal": self.is_ideal,
        }


def compute_p_alpha(A: ColorAlgebra, partition: SupportPartition, cls, alpha: GroupElement) -> Subspace:
    """Sum of {P_h, P_p} (h in cls, p = -h-g0+alpha in Sigma) and P_k P_q (k in cls, q = -k+alpha in Sigma ∪ {-g0})."""
    if alpha not in _alphas(A):
        raise AlphaOutOfRange(f"{alpha} is not one of 0, g0, -g0")
    g0 = A.g0
    sigma = partition.support.sigma_set
    W = A.zero_subspace(alpha)
    for h in cls:
        p = -h - g0 + alpha
        if p in sigma:
            W = subspace_sum(W, product_of_subspaces(A, A.full_component(h), A.full_component(p), BRACKET))
        q = -h + alpha
        if q in sigma or q == -g0:
            W = subspace_sum(W, product_of_subspaces(A, A.full_component(h), A.full_component(q), PRODUCT))
    return W


def _closed(A: ColorAlgebra, total: Subspace, left_pieces, right_pieces) -> bool:
    ech = total.echelon()
    for U in left_pieces:
        for W in right_pieces:
            for which in (BRACKET, PRODUCT):
                for u in U.rows:
                    for w in W.rows:
                        if not ech.contains(A.mul_raw(which, u, w)):
                            return False
    return True


def compute_ideal(A: ColorAlgebra, partition: SupportPartition, cls) -> IdealDescriptor:
    cls = tuple(cls)
    p_alpha = {a: compute_p_alpha(A, partition, cls, a) for a in _alphas(A)}
    v_class = {h: A.full_component(h) for h in cls}
    rows = [r for U in list(p_alpha.values()) + list(v_class.values()) for r in U.rows]
    total = _span(A.field, A.whole(), rows)
    D = IdealDescriptor(cls[0], cls, p_alpha, v_class, total)
    pieces = D.pieces()
    D.is_subalgebra = _closed(A, total, pieces, pieces)
    comps = [A.full_component(g) for g in A.support]
    D.is_ideal = D.is_subalgebra and _closed(A, total, pieces, comps) and _closed(A, total, comps, pieces)
    return D


def cross_products(A: ColorAlgebra, D1: IdealDescriptor, D2: IdealDescriptor):
    """Yield every nonzero {u, w} / u w with u, w basis vectors of pieces of D1, D2 (both orders)."""
    for X, Y in ((D1, D2), (D2, D1)):
        for U in X.pieces():
            for W in Y.pieces():
                for which in (BRACKET, PRODUCT):
                    S = product_of_subspaces(A, U, W, which)
                    if S.dim:
                        yield which, U.degree, W.degree, S


def verify_orthogonality(A: ColorAlgebra, D1: IdealDescriptor, D2: IdealDescriptor) -> bool:
    if set(D1.members) == set(D2.members):
        raise SameClass("orthogonality is only asserted for distinct classes")
    return next(cross_products(A, D1, D2), None) is None


def complement(A: ColorAlgebra, S: Subspace) -> Subspace:
    """Canonical complement of S inside its component: unit vectors on the non-pivot coordinates."""
    F = A.field
    pivots = set(S.pivots())
    vecs = []
    for i in S.ambient.indices:
        if i not in pivots:
            v = [F.zero] * A.n
            v[i] = F.one
            vecs.append(v)
    return _span(F, S.ambient, vecs)


@dataclass
class ComponentVerdict:
    descriptor: IdealDescriptor
    algebra: ColorAlgebra
    axioms_pass: bool
    criterion: bool | None
    criterion_failed: tuple[str, ...] = ()
    oracle: bool | None = None

    @property
    def simple(self) -> bool | None:
        if self.oracle is not None:
            return self.oracle
        return self.criterion

    def to_json(self) -> dict:
        return {
            "class": [list(g.coords) for g in self.descriptor.members],
            "dim": self.algebra.n,
            "axioms_pass": self.axioms_pass,
            "criterion": self.criterion,
            "criterion_failed": list(self.criterion_failed),
            "oracle": self.oracle,
        }


@dataclass
class DecompositionReport:
    partition: SupportPartition
    descriptors: list[IdealDescriptor]
    residual: dict[GroupElement, Subspace]
    sums_to_P: bool
    is_direct: bool
    pairwise_orthogonal: bool
    sum_dim: int
    components: list[ComponentVerdict] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "classes": [[list(g.coords) for g in D.members] for D in self.descriptors],
            "ideals": [D.to_json() for D in self.descriptors],
            "residual_dims": {str(a): U.dim for a, U in self.residual.items()},
            "sums_to_P": self.sums_to_P,
            "is_direct": self.is_direct,
            "pairwise_orthogonal": self.pairwise_orthogonal,
            "sum_dim": self.sum_dim,
        }
        if self.components:
            out["components"] = [c.to_json() for c in self.components]
        return out


def decompose(A: ColorAlgebra, partition: SupportPartition | None = None) -> DecompositionReport:
    if partition is None:
        partition = equivalence_classes(restricted_support(A))
    descriptors = [compute_ideal(A, partition, cls) for cls in partition.classes]
    residual = {}
    for a in _alphas(A):
        S = A.zero_subspace(a)
        for D in descriptors:
            S = subspace_sum(S, D.p_alpha[a])
        residual[a] = complement(A, S)
    sums_to_P = all(U.dim == 0 for U in residual.values())
    total = _span(A.field, A.whole(), [r for D in descriptors for r in D.total.rows])
    is_direct = sum(D.dim for D in descriptors) == total.dim
    orthogonal = all(
        verify_orthogonality(A, descriptors[i], descriptors[j])
        for i in range(len(descriptors))
        for j in range(i + 1, len(descriptors))
    )
    return DecompositionReport(partition, descriptors, residual, sums_to_P, is_direct, orthogonal, total.dim)


# -- ideal closure and simplicity ------------------------------------------------


def ideal_generated_by(A: ColorAlgebra, x: Element | list[Element], stop_at_full: bool = False) -> Subspace:
    """Least subspace containing x and closed under {.,b}, {b,.}, .b, b. for every basis vector b."""
    gens = x if isinstance(x, list) else [x]
    for g in gens:
        if g.is_zero:
            raise ZeroGenerator("the generator must be nonzero")
        if not g.homogeneous:
            raise ValueError("generators must be homogeneous")
    F, n = A.field, A.n
    ech = Echelon(F, n)
    work = []
    for g in gens:
        if ech.insert(g.coeffs):
            work.append(list(g.coeffs))
    units = [[F.one if j == i else F.zero for j in range(n)] for i in range(n)]
    while work:
        if stop_at_full and len(ech) == n:
            break
        v = work.pop(0)
        for b in units:
            for which in (BRACKET, PRODUCT):
                for w in (A.mul_raw(which, v, b), A.mul_raw(which, b, v)):
                    if any(w) and ech.insert(w):
                        work.append(w)
    return _span(F, A.whole(), ech.canonical())


def projective_points(A: ColorAlgebra, g: GroupElement):
    """Nonzero homogeneous elements of P_g up to scalars (first nonzero coordinate 1)."""
    F = A.field
    if not F.is_finite:
        raise OracleNeedsFiniteField("homogeneous elements can only be enumerated over a finite field")
    idx = A.components.get(g, ())
    d = len(idx)
    for lead in range(d):
        for tail in iproduct(F.elements(), repeat=d - lead - 1):
            coeffs = [F.zero] * A.n
            coeffs[idx[lead]] = F.one
            for pos, c in zip(idx[lead + 1 :], tail):
                coeffs[pos] = c
            yield A.element(coeffs)


def _has_nonzero(A: ColorAlgebra, which: str) -> bool:
    return bool(A.tables[which])


def find_proper_ideal(A: ColorAlgebra):
    """First homogeneous x (deterministic order) whose generated ideal is proper, else None."""
    for g in A.support:
        for x in projective_points(A, g):
            I = ideal_generated_by(A, x, stop_at_full=True)
            if I.dim < A.n:
                return x, I
    return None


def oracle_is_simple(A: ColorAlgebra) -> bool:
    if not A.field.is_finite:
        raise OracleNeedsFiniteField("the simplicity oracle enumerates elements of a finite field")
    if not _has_nonzero(A, BRACKET) or not _has_nonzero(A, PRODUCT):
        return False
    return find_proper_ideal(A) is None


SIMPLICITY_TIGHT = (0, 1, -1, 2, -2, -3)


def simplicity_hypotheses(A: ColorAlgebra, symmetric: bool = False) -> dict[str, bool]:
    """Truth values of the structural hypotheses under which connectivity characterises simplicity."""
    out = {
        "two_torsion_free": is_free_of_2_torsion(A.group),
        "centerless": is_centerless(A),
        "sigma_multiplicative": bool(is_sigma_multiplicative(A)),
        "maximal_length": is_maximal_length(A),
    }
    for m in SIMPLICITY_TIGHT:
        out[f"tight[{m}g0]"] = bool(is_tight(A, m * A.g0))
    if symmetric:
        out["symmetric_support"] = is_symmetric_support(A)
    return out


def criterion_is_simple(A: ColorAlgebra, assume_hypotheses: bool = False) -> bool:
    if not assume_hypotheses:
        failed = [k for k, v in simplicity_hypotheses(A).items() if not v]
        if failed:
            raise CriterionHypothesesNotMet(failed)
    partition = equivalence_classes(restricted_support(A))
    return len(partition.classes) == 1


def is_simple(A: ColorAlgebra, method: str = "oracle", assume_hypotheses: bool = False) -> bool:
    if method == "oracle":
        return oracle_is_simple(A)
    if method == "criterion":
        return criterion_is_simple(A, assume_hypotheses)
    raise ValueError(f"unknown method {method!r}")


def extract_component(A: ColorAlgebra, D: IdealDescriptor) -> ColorAlgebra:
    """Restrict A to the ideal D as a standalone algebra on a homogeneous basis of D."""
    F = A.field
    vectors, basis = [], []
    for U in D.pieces():
        for r in U.rows:
            nz = [i for i, a in enumerate(r) if a]
            if len(nz) == 1 and r[nz[0]] == F.one:
                name = A.names[nz[0]]
            else:
                name = "[" + A.format_element(A.element(r)) + "]"
            vectors.append(list(r))
            basis.append((name, U.degree))
    ech = Echelon(F, A.n, vectors)
    # coordinates are read off at each basis vector's own pivot column
    pivots = [next(j for j, a in enumerate(v) if a) for v in vectors]
    to_row = {c: idx for idx, c in enumerate(pivots)}

    def coords(w):
        if not ech.contains(w):
            raise ValueError("the subspace is not closed under the products")
        return [(to_row[c], w[c]) for c in sorted(to_row) if w[c]]

    tables = {}
    for which in (BRACKET, PRODUCT):
        tab = {}
        for a, u in enumerate(vectors):
            for b, w in enumerate(vectors):
                out = coords(A.mul_raw(which, u, w))
                if out:
                    tab[(a, b)] = out
        tables[which] = tab
    return ColorAlgebra(A.group, F, A.epsilon, A.g0, basis, tables[BRACKET], tables[PRODUCT])


def minimal_ideal_decomposition(A: ColorAlgebra, assume_hypotheses: bool = False) -> DecompositionReport:
    """Decompose into the ideals I_[g] and certify each one as simple."""
    if not assume_hypotheses:
        failed = [k for k, v in simplicity_hypotheses(A, symmetric=True).items() if not v]
        if failed:
            raise HypothesesNotMet(failed)
    report = decompose(A)
    for D in report.descriptors:
        C = extract_component(A, D)
        axioms_pass = check_axioms(C).passed
        try:
            crit, failed = criterion_is_simple(C), ()
        except CriterionHypothesesNotMet as exc:
            crit, failed = None, exc.failed
        oracle = oracle_is_simple(C) if A.field.is_finite else None
        report.components.append(ComponentVerdict(D, C, axioms_pass, crit, failed, oracle))
    return report
