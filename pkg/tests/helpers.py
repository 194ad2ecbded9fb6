"""Shared generators and independent brute-force oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as iproduct

from poissoncolor import (
    GF,
    QQ,
    ColorAlgebra,
    GroupSpec,
    berezin,
    builtin_example,
    builtin_names,
    direct_sum,
    random_change_basis,
    regrade,
    tensor_group_algebra,
    validate_bicharacter,
)
from poissoncolor.algebra import BRACKET, PRODUCT
from poissoncolor.connections import RestrictedSupport
from poissoncolor.errors import StructureError

F5 = GF(5)


def corpus(fields=(QQ, F5)):
    """Every built-in example over each field."""
    return [(f"{name}/{F}", builtin_example(name, F)) for F in fields for name in builtin_names()]


# -- random valid algebras ------------------------------------------------------


def random_bicharacter(rng: random.Random, G: GroupSpec, field):
    F = field
    n = G.rank
    rows = [[F.one] * n for _ in range(n)]
    options = [F.one, F.neg(F.one)]
    if not F.is_finite:
        options += [Fraction(2), Fraction(1, 2)]
    for i in range(G.free_rank):
        rows[i][i] = rng.choice([F.one, F.neg(F.one)])
        for j in range(i + 1, G.free_rank):
            v = rng.choice(options)
            rows[i][j] = v
            rows[j][i] = F.inv(v)
    return validate_bicharacter(rows, G, F)


def random_unimodular(rng: random.Random, r: int):
    M = [[int(i == j) for j in range(r)] for i in range(r)]
    for _ in range(rng.randint(1, 3)):
        i, j = rng.sample(range(r), 2)
        s = rng.choice([-1, 1])
        M[i] = [a + s * b for a, b in zip(M[i], M[j])]
    return M


def _anticommuting_pair(rng, G, eps, target=None, tries=200):
    F = eps.field
    box = [g for g in G.box(2) if g != G.zero()]
    for _ in range(tries):
        a = rng.choice(box)
        b = rng.choice(box) if target is None else target - a
        minus = F.neg(F.one)
        if eps.raw(a, b) == eps.raw(a, a) == eps.raw(b, b) == minus:
            return a, b
    return None


def random_algebra(rng: random.Random, field=QQ) -> ColorAlgebra:
    """A random axiom-satisfying algebra built from Berezin blocks, sums, tensors, regradings and base changes."""
    F = field
    while True:
        r = rng.choice([1, 2, 2])
        G = GroupSpec(r)
        eps = random_bicharacter(rng, G, F)
        pair = _anticommuting_pair(rng, G, eps)
        if pair is None:
            continue
        a, b = pair
        c = rng.choice([x for x in range(1, 5) if F.convert(x)])
        try:
            A = berezin(G, eps, a, b, c)
        except StructureError:
            continue
        if rng.random() < 0.5:
            second = _anticommuting_pair(rng, G, eps, target=a + b)
            if second is not None:
                A = direct_sum(A, berezin(G, eps, *second, rng.choice([1, 2])), ("a", "b"))
        if rng.random() < 0.2:
            # a bare unit 1' in degree 0: never produced by Sigma-indexed products, so P_0 is not tight
            U = ColorAlgebra(G, F, eps, A.g0, [("u", G.zero())], (), {(0, 0): [(0, 1)]})
            A = direct_sum(A, U, ("", ""))
        if r >= 2 and rng.random() < 0.4:
            A = regrade(A, random_unimodular(rng, r))
        if A.n <= 4 and rng.random() < 0.25:
            A = tensor_group_algebra(A, (3,))
        if rng.random() < 0.5:
            A = random_change_basis(A, rng)
        return A


def random_support(rng: random.Random, size: int | None = None, rank: int | None = None, radius: int = 3):
    """Random restricted support with |Sigma| <= 10 in Z^r or Z x Z_3."""
    kind = rng.choice(["Z", "Z2", "ZxZ3"]) if rank is None else ("Z" if rank == 1 else "Z2")
    G = {"Z": GroupSpec(1), "Z2": GroupSpec(2), "ZxZ3": GroupSpec(1, (3,))}[kind]
    pool = G.box(radius)
    g0 = rng.choice(pool)
    forbidden = {G.zero(), g0, -g0}
    pool = [g for g in pool if g not in forbidden]
    k = rng.randint(0, 10) if size is None else size
    return RestrictedSupport(rng.sample(pool, min(k, len(pool))), g0)


# -- brute-force oracles ----------------------------------------------------------


def warshall_partition(S: RestrictedSupport):
    """Connection classes via Warshall closure of the one-step relation on ±Sigma."""
    states = sorted(S.pm, key=lambda g: g.coords)
    idx = {s: i for i, s in enumerate(states)}
    steps = {gi + ki for gi in S.step_degrees for ki in S.shifts}
    m = len(states)
    R = [[i == j for j in range(m)] for i in range(m)]
    for s in states:
        for d in steps:
            t = s + d
            if t in idx:
                R[idx[s]][idx[t]] = True
    for k in range(m):
        for i in range(m):
            if R[i][k]:
                for j in range(m):
                    if R[k][j]:
                        R[i][j] = True
    related = lambda g, h: R[idx[g]][idx[h]] or R[idx[g]][idx[-h]]  # noqa: E731
    classes = []
    for g in S.sigma:
        for cls in classes:
            if related(cls[0], g):
                cls.append(g)
                break
        else:
            classes.append([g])
    return {frozenset(c) for c in classes}, related


def chains_up_to(S: RestrictedSupport, g, max_len: int):
    """Targets ±h reachable from g by literally enumerating chains of at most max_len steps."""
    hits = set()
    steps = list(iproduct(S.step_degrees, S.shifts))

    def walk(partial, length):
        if partial in S.pm:
            hits.add(partial)
        if length == max_len or partial not in S.pm:
            return
        for gi, ki in steps:
            walk(partial + gi + ki, length + 1)

    walk(g, 1)
    return hits


def naive_product_span(A, U, W, which):
    """Subspace product computed through the public element API rather than raw tables."""
    from poissoncolor import bilinear_eval, subspace_span

    vecs = []
    for u in U.rows:
        for w in W.rows:
            vecs.append(bilinear_eval(A, A.element(list(u)), A.element(list(w)), which).coeffs)
    return subspace_span(vecs, A.component(A.target_degree(which, U.degree, W.degree)), A.field)


# -- mutations --------------------------------------------------------------------


def with_table(A: ColorAlgebra, which: str, key, terms) -> ColorAlgebra:
    tables = {BRACKET: dict(A.bracket_sc), PRODUCT: dict(A.product_sc)}
    if terms:
        tables[which][key] = terms
    else:
        tables[which].pop(key, None)
    return ColorAlgebra(A.group, A.field, A.epsilon, A.g0, A.basis, tables[BRACKET], tables[PRODUCT], check_grading=False)


def mutations(A: ColorAlgebra):
    """Single-constant perturbations that must break an identity.

    * grading breakers: add a term landing in a wrong component;
    * one-sided changes: bump the coefficient of (i, j) with i != j, leaving (j, i) untouched.
    """
    F = A.field
    out = []
    for which in (BRACKET, PRODUCT):
        for i in range(A.n):
            for j in range(A.n):
                want = A.target_degree(which, A.degrees[i], A.degrees[j])
                wrong = [k for k in range(A.n) if A.degrees[k] != want]
                if wrong:
                    k = wrong[0]
                    terms = dict(A.tables[which].get((i, j), ()))
                    terms[k] = F.add(terms.get(k, F.zero), F.one)
                    out.append((f"{which}({i},{j})+e{k}", with_table(A, which, (i, j), sorted(terms.items()))))
        for (i, j), terms in A.tables[which].items():
            if i == j:
                continue
            k, c = terms[0]
            bumped = [(k, F.add(c, F.one))] + list(terms[1:])
            out.append((f"{which}({i},{j})[{k}]+1", with_table(A, which, (i, j), bumped)))
    return out
