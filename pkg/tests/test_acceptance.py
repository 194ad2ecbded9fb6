"""Acceptance criteria 1-10, each printed as one PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -s`` (the lines are also
shown without ``-s``).
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
from contextlib import contextmanager

import pytest

from helpers import (
    F5,
    chains_up_to,
    corpus,
    mutations,
    random_algebra,
    random_support,
    warshall_partition,
)
from poissoncolor import (
    QQ,
    GroupSpec,
    berezin,
    builtin_example,
    check_axioms,
    compute_center,
    decompose,
    direct_sum,
    equivalence_classes,
    find_connection,
    is_free_of_2_torsion,
    is_simple,
    is_tight,
    minimal_ideal_decomposition,
    parse_algebra_file,
    random_change_basis,
    regrade,
    restricted_support,
    serialize_algebra,
    simplicity_hypotheses,
    validate_bicharacter,
    verify_connection,
    verify_orthogonality,
)
from poissoncolor.report import ReportOptions, run_report, to_json_text


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, title: str):
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\nFAIL  criterion {number:2d}: {title}")
            raise
        with capsys.disabled():
            print(f"\nPASS  criterion {number:2d}: {title}")

    return run


def random_pool(count: int, seed: int):
    rng = random.Random(seed)
    return [random_algebra(rng, QQ if i % 2 else F5) for i in range(count)]


def hypothesis_instances():
    """Finite-field algebras meeting every simplicity hypothesis (including symmetric support)."""
    Z = GroupSpec(1)
    Z2 = GroupSpec(2)
    e1 = validate_bicharacter([[-1]], Z, F5)
    e2 = validate_bicharacter([[-1, 1], [1, -1]], Z2, F5)
    line1 = berezin(Z, e1, Z(1), Z(-1))
    line3 = berezin(Z, e1, Z(3), Z(-3))
    plane = berezin(Z2, e2, Z2(1, 2), Z2(-1, -2))
    pair = builtin_example("berezin-pair", F5)
    rng = random.Random(2024)
    return {
        "berezin": builtin_example("berezin", F5),
        "berezin c=2": builtin_example("berezin", F5, c=2),
        "berezin degree 3": line3,
        "berezin in Z^2": plane,
        "berezin-pair": pair,
        "berezin-pair regraded shear": regrade(pair, [[1, 1], [0, 1]]),
        "berezin-pair regraded [[2,1],[1,1]]": regrade(pair, [[2, 1], [1, 1]]),
        "berezin in Z^2 regraded": regrade(plane, [[1, 0], [3, 1]]),
        "berezin new basis": random_change_basis(line1, rng),
        "berezin-pair new basis": random_change_basis(pair, rng),
        "berezin(1) + berezin(3)": direct_sum(line1, line3, ("a", "b")),
    }


def test_criterion_01_axiom_soundness(criterion):
    with criterion(1, "built-ins satisfy the axioms; >= 20 single-constant mutations each fail"):
        count = 0
        for name, A in corpus():
            assert check_axioms(A).passed, name
            for label, M in mutations(A):
                assert not check_axioms(M).passed, (name, label)
                count += 1
        assert count >= 20


def test_criterion_02_equivalence_relation(criterion):
    with criterion(2, "connection relation is an equivalence on 100+ random supports"):
        rng = random.Random(2)
        for _ in range(120):
            S = random_support(rng)
            P = equivalence_classes(S)
            sigma = S.sigma
            rel = {(g, h): find_connection(S, g, h) is not None for g in sigma for h in sigma}
            for g in sigma:
                assert rel[(g, g)]
                for h in sigma:
                    assert rel[(g, h)] == rel[(h, g)]
                    assert rel[(g, h)] == P.connected(g, h)
                    for k in sigma:
                        if rel[(g, h)] and rel[(h, k)]:
                            assert rel[(g, k)]
            for (g, h), c in P.witnesses.items():
                assert verify_connection(S, c, g, h)
            for _ in range(3):
                order = list(sigma)
                rng.shuffle(order)
                assert equivalence_classes(S, order).classes == P.classes


def test_criterion_03_connection_oracle(criterion):
    with criterion(3, "BFS partition equals brute-force closure when |±Sigma| <= 12"):
        rng = random.Random(3)
        checked = 0
        while checked < 150:
            S = random_support(rng)
            if len(S.pm) > 12:
                continue
            classes, _ = warshall_partition(S)
            assert {frozenset(c) for c in equivalence_classes(S).classes} == classes
            checked += 1
        for _ in range(40):
            S = random_support(rng, size=rng.randint(1, 2), rank=1, radius=4)
            P = equivalence_classes(S)
            for g in S.sigma:
                hits = chains_up_to(S, g, len(S.pm) + 1)
                for h in S.sigma:
                    assert (h in hits or -h in hits) == P.connected(g, h)


def test_criterion_04_shifted_degrees_share_class(criterion):
    with criterion(4, "eps g + mu g0 in Sigma lies in the class of g"):
        hits = 0
        for A in random_pool(80, seed=4):
            S = restricted_support(A)
            P = equivalence_classes(S)
            for g in S.sigma:
                for e in (1, -1):
                    for mu in (0, 1, -1, 2, -2):
                        t = e * g + mu * A.g0
                        if t in S.sigma_set:
                            assert P.connected(g, t)
                            hits += 1
        assert hits > 80


def _tight_low(A):
    return all(is_tight(A, a) for a in (A.group.zero(), A.g0, -A.g0))


def test_criterion_05_ideals(criterion):
    with criterion(5, "every I_[g] is an ideal under tightness at 0, ±g0 without 2-torsion"):
        applicable = 0
        instances = [A for _, A in corpus()] + random_pool(100, seed=5)
        for A in instances:
            assert check_axioms(A).passed
            if not (is_free_of_2_torsion(A.group) and _tight_low(A)):
                continue
            applicable += 1
            for D in decompose(A).descriptors:
                assert D.is_ideal
        assert applicable >= 50


def test_criterion_06_orthogonality_and_sum(criterion):
    with criterion(6, "distinct I_[g] are orthogonal; their sum is P under tightness"):
        pairs = sums = 0
        for A in [A for _, A in corpus()] + random_pool(100, seed=6):
            d = decompose(A)
            for i, D1 in enumerate(d.descriptors):
                for D2 in d.descriptors[i + 1 :]:
                    assert verify_orthogonality(A, D1, D2)
                    pairs += 1
            if is_free_of_2_torsion(A.group) and _tight_low(A):
                assert d.sums_to_P
                sums += 1
        assert pairs >= 20 and sums >= 50


def test_criterion_07_directness(criterion):
    with criterion(7, "centerless and tight implies sum of dim I_[g] = dim P"):
        applicable = 0
        for A in [A for _, A in corpus()] + random_pool(100, seed=7):
            if compute_center(A).dim or not _tight_low(A):
                continue
            applicable += 1
            d = decompose(A)
            assert d.is_direct
            assert sum(D.dim for D in d.descriptors) == A.n
        assert applicable >= 50


def test_criterion_08_simplicity_cross_check(criterion):
    with criterion(8, "oracle and criterion agree on >= 10 hypothesis-satisfying instances"):
        verdicts = []
        for name, A in hypothesis_instances().items():
            assert check_axioms(A).passed, name
            assert all(simplicity_hypotheses(A, symmetric=True).values()), name
            oracle = is_simple(A, "oracle")
            assert oracle == is_simple(A, "criterion"), name
            verdicts.append(oracle)
        assert len(verdicts) >= 10 and True in verdicts and False in verdicts
        assert is_simple(builtin_example("odd-line", F5), "oracle") is True
        assert is_simple(builtin_example("orthogonal-sum", F5), "oracle") is False


def test_criterion_09_minimal_ideals(criterion):
    with criterion(9, "extracted components satisfy the axioms and are oracle-simple"):
        components = 0
        for name, A in hypothesis_instances().items():
            r = minimal_ideal_decomposition(A)
            assert r.is_direct and r.sums_to_P, name
            assert sum(c.algebra.n for c in r.components) == A.n
            for c in r.components:
                assert check_axioms(c.algebra).passed, name
                assert c.oracle is True and c.criterion is True, name
                components += 1
        assert components > len(hypothesis_instances())


def test_criterion_10_determinism_and_round_trip(criterion, tmp_path):
    with criterion(10, "reports are byte-identical across runs; files round-trip exactly"):
        items = corpus() + list(hypothesis_instances().items())
        items += [(f"random {i}", A) for i, A in enumerate(random_pool(30, seed=10))]
        for name, A in items:
            s = serialize_algebra(A)
            B = parse_algebra_file(s)
            assert B == A and serialize_algebra(B) == s, name
            first = to_json_text(run_report(A, ReportOptions()))
            assert to_json_text(run_report(B, ReportOptions())) == first, name
        path = tmp_path / "pair.json"
        path.write_text(serialize_algebra(builtin_example("berezin-pair", F5)))
        outputs = set()
        for seed in ("0", "7", "4242"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            res = subprocess.run(
                [sys.executable, "-m", "poissoncolor", "decompose", str(path)],
                capture_output=True, env=env, check=True,
            )
            outputs.add(res.stdout)
        assert len(outputs) == 1
