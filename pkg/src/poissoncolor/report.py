"""Full analysis pipeline producing one deterministic report structure.

The same nested dict backs the JSON output and the text rendering.  Stages
whose prerequisites fail are recorded as ``{"skipped": reason}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .axioms import (
    check_axioms,
    compute_center,
    is_maximal_length,
    is_sigma_multiplicative,
    is_symmetric_support,
    is_tight,
)
from .connections import equivalence_classes, restricted_support
from .decomposition import (
    criterion_is_simple,
    decompose,
    minimal_ideal_decomposition,
    oracle_is_simple,
    simplicity_hypotheses,
)
from .errors import HypothesesNotMet
from .group import is_free_of_2_torsion

SCHEMA = 1
STAGES = ("check", "decompose", "simple")


@dataclass(frozen=True)
class ReportOptions:
    stage: str = "decompose"
    method: str = "oracle"  # simplicity method for the "simple" stage
    assume_hypotheses: bool = False


def _coords(g):
    return list(g.coords)


def predicate_summary(A) -> dict:
    mult = is_sigma_multiplicative(A)
    center = compute_center(A)
    return {
        "two_torsion_free": is_free_of_2_torsion(A.group),
        "centerless": center.dim == 0,
        "center_dim": center.dim,
        "maximal_length": is_maximal_length(A),
        "sigma_multiplicative": mult.holds,
        "sigma_multiplicative_failure": None if mult.holds else [_coords(g) for g in mult.failure],
        "symmetric_support": is_symmetric_support(A),
        "tight": {f"{m}g0": is_tight(A, m * A.g0).tight for m in (0, 1, -1, 2, -2, 3, -3)},
    }


def _theorem_checks(A, preds, dec) -> dict:
    """Conclusions that must hold when their hypotheses are verified; None when inapplicable."""
    tight0 = all(preds["tight"][k] for k in ("0g0", "1g0", "-1g0"))
    base = preds["two_torsion_free"] and tight0
    return {
        "ideals": all(D.is_ideal for D in dec.descriptors) if base else None,
        "sum": dec.sums_to_P if base else None,
        "orthogonal": dec.pairwise_orthogonal,
        "direct": dec.is_direct if base and preds["centerless"] else None,
    }


def _simplicity(A, method: str, assume: bool) -> dict:
    out = {"method": method}
    if method == "oracle":
        if not A.field.is_finite:
            return {"method": method, "skipped": "the oracle needs a prime field"}
        out["simple"] = oracle_is_simple(A)
        out["verified"] = True
        return out
    hyps = simplicity_hypotheses(A)
    out["hypotheses"] = hyps
    failed = [k for k, v in hyps.items() if not v]
    if failed and not assume:
        out["skipped"] = "hypotheses not met: " + ", ".join(failed)
        return out
    out["simple"] = criterion_is_simple(A, assume_hypotheses=True)
    out["verified"] = not failed
    return out


def run_report(A, options: ReportOptions = ReportOptions()) -> dict:
    if options.stage not in STAGES:
        raise ValueError(f"unknown stage {options.stage!r}")
    axioms = check_axioms(A)
    report = {
        "schema": SCHEMA,
        "stage": options.stage,
        "algebra": {
            "dim": A.n,
            "field": A.field.to_json(),
            "group": A.group.to_json(),
            "g0": _coords(A.g0),
            "support": [[_coords(g), A.dim_of(g)] for g in A.support],
        },
        "axioms": {"pass": axioms.passed, "laws": axioms.to_json(A)},
    }
    report["ok"] = axioms.passed
    if options.stage == "check":
        return report
    if not axioms.passed:
        reason = "axiom failure: " + ", ".join(axioms.failures())
        if options.stage == "decompose":
            report["predicates"] = report["partition"] = report["decomposition"] = {"skipped": reason}
            report["minimal_ideals"] = {"skipped": reason}
        else:
            report["simplicity"] = {"method": options.method, "skipped": reason}
        return report

    if options.stage == "simple":
        sim = _simplicity(A, options.method, options.assume_hypotheses)
        report["simplicity"] = sim
        report["ok"] = sim.get("simple") is True
        return report

    preds = predicate_summary(A)
    report["predicates"] = preds
    partition = equivalence_classes(restricted_support(A))
    report["partition"] = {"sigma": [_coords(g) for g in partition.support.sigma], **partition.to_json()}
    dec = decompose(A, partition)
    report["decomposition"] = dec.to_json()
    checks = _theorem_checks(A, preds, dec)
    report["theorem_checks"] = checks
    report["ok"] = all(v is not False for v in checks.values())

    try:
        mid = minimal_ideal_decomposition(A, assume_hypotheses=options.assume_hypotheses)
    except HypothesesNotMet as exc:
        report["minimal_ideals"] = {"skipped": "hypotheses not met: " + ", ".join(exc.failed)}
    except ValueError as exc:  # forced past the hypotheses onto a non-ideal class
        report["minimal_ideals"] = {"skipped": str(exc)}
    else:
        report["minimal_ideals"] = {
            "verified": not options.assume_hypotheses,
            "components": [c.to_json() for c in mid.components],
        }
    return report


def to_json_text(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _render(value, indent: int, lines: list[str]):
    pad = "  " * indent
    for key, v in value.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            _render(v, indent + 1, lines)
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{key}:")
            for i, x in enumerate(v):
                lines.append(f"{pad}  [{i}]")
                _render(x, indent + 2, lines)
        else:
            lines.append(f"{pad}{key}: {json.dumps(v, ensure_ascii=False)}")


def render_text(report: dict) -> str:
    lines: list[str] = []
    _render(report, 0, lines)
    return "\n".join(lines) + "\n"


__all__ = ["SCHEMA", "ReportOptions", "predicate_summary", "run_report", "to_json_text", "render_text"]
