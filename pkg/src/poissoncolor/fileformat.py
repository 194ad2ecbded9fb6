"""JSON algebra definition files.

A file is one JSON object::

    {
      "group": {"free_rank": 1, "torsion": []},
      "field": {"kind": "rational"},            # or {"kind": "prime", "p": 5}
      "g0": [-2],
      "bicharacter": [["-1"]],
      "basis": [{"name": "1", "degree": [0]}, {"name": "xi", "degree": [1]}],
      "bracket": [{"left": 1, "right": 1, "out": [[0, "1"]]}],
      "product": [{"left": 0, "right": 0, "out": [[0, "1"]]}, ...]
    }

Errors carry JSON-pointer paths into the document.
"""

from __future__ import annotations

import json
import warnings

from .algebra import BRACKET, PRODUCT, ColorAlgebra, grading_violations
from .bicharacter import Bicharacter, violations
from .errors import ParseError, StructureError, ValidationError
from .group import GroupSpec, is_free_of_2_torsion
from .scalars import FieldSpec

TOP_KEYS = ("group", "field", "g0", "bicharacter", "basis", "bracket", "product")


class TwoTorsionWarning(UserWarning):
    """The grading group has elements of order 2; the decomposition theorems do not apply."""


def _expect(value, kind, path, what):
    ok = isinstance(value, kind) and not (kind is int and isinstance(value, bool))
    if not ok:
        raise ParseError(path, f"{what} expected, got {json.dumps(value)}")
    return value


def _int_list(value, path, length=None):
    _expect(value, list, path, "integer array")
    for i, x in enumerate(value):
        _expect(x, int, f"{path}/{i}", "integer")
    if length is not None and len(value) != length:
        raise ValidationError(path, f"expected {length} coordinates, got {len(value)}")
    return value


def _scalar(field: FieldSpec, value, path):
    _expect(value, str, path, "scalar literal string")
    try:
        return field.parse(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(path, str(exc)) from None


def _group(doc) -> GroupSpec:
    g = _expect(doc.get("group"), dict, "/group", "object")
    r = _expect(g.get("free_rank", 0), int, "/group/free_rank", "integer")
    torsion = _int_list(g.get("torsion", []), "/group/torsion")
    if r < 0:
        raise ValidationError("/group/free_rank", "free rank must be non-negative")
    for i, m in enumerate(torsion):
        if m < 2:
            raise ValidationError(f"/group/torsion/{i}", "torsion orders must be at least 2")
    return GroupSpec(r, tuple(torsion))


def _field(doc) -> FieldSpec:
    f = _expect(doc.get("field"), dict, "/field", "object")
    kind = f.get("kind")
    if kind == "rational":
        return FieldSpec("rational")
    if kind == "prime":
        p = _expect(f.get("p"), int, "/field/p", "integer")
        try:
            return FieldSpec("prime", p)
        except ValueError as exc:
            raise ValidationError("/field/p", str(exc)) from None
    raise ParseError("/field/kind", f"'rational' or 'prime' expected, got {json.dumps(kind)}")


def _table(doc, key, field, n):
    entries = _expect(doc.get(key, []), list, f"/{key}", "array")
    table = {}
    where = {}
    for idx, e in enumerate(entries):
        path = f"/{key}/{idx}"
        _expect(e, dict, path, "object")
        ij = []
        for side in ("left", "right"):
            v = _expect(e.get(side), int, f"{path}/{side}", "basis index")
            if not 0 <= v < n:
                raise ValidationError(f"{path}/{side}", f"basis index {v} out of range")
            ij.append(v)
        out = _expect(e.get("out"), list, f"{path}/out", "array")
        terms = []
        for t, term in enumerate(out):
            tp = f"{path}/out/{t}"
            _expect(term, list, tp, "[index, coefficient] pair")
            if len(term) != 2:
                raise ParseError(tp, "[index, coefficient] pair expected")
            k = _expect(term[0], int, f"{tp}/0", "basis index")
            if not 0 <= k < n:
                raise ValidationError(f"{tp}/0", f"basis index {k} out of range")
            terms.append((k, _scalar(field, term[1], f"{tp}/1")))
        key_ij = tuple(ij)
        table.setdefault(key_ij, []).extend(terms)
        where.setdefault(key_ij, path)
    return table, where


def parse_algebra_file(text: str, decomposition_analysis: bool = False, check_grading: bool = True) -> ColorAlgebra:
    """Parse and validate an algebra definition.

    With ``decomposition_analysis`` a :class:`TwoTorsionWarning` is issued when the
    grading group has 2-torsion.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _expect(doc, dict, "", "object")
    for key in doc:
        if key not in TOP_KEYS:
            raise ParseError(f"/{key}", "unknown key")
    for key in TOP_KEYS[:5]:
        if key not in doc:
            raise ParseError(f"/{key}", "missing required key")
    G = _group(doc)
    F = _field(doc)
    g0 = G(*_int_list(doc["g0"], "/g0", G.rank))

    rows = _expect(doc["bicharacter"], list, "/bicharacter", "matrix")
    if len(rows) != G.rank:
        raise ValidationError("/bicharacter", f"expected {G.rank} rows, got {len(rows)}")
    values = []
    for i, row in enumerate(rows):
        _expect(row, list, f"/bicharacter/{i}", "array")
        if len(row) != G.rank:
            raise ValidationError(f"/bicharacter/{i}", f"expected {G.rank} entries, got {len(row)}")
        values.append([_scalar(F, v, f"/bicharacter/{i}/{j}") for j, v in enumerate(row)])
    found = violations(values, G, F)
    if found:
        v = found[0]
        path = f"/bicharacter/{v.i}" + (f"/{v.j}" if v.j is not None else f"/{v.i}")
        raise ValidationError(path, "; ".join(map(str, found)))
    eps = Bicharacter(values, G, F)

    basis_doc = _expect(doc["basis"], list, "/basis", "array")
    basis = []
    seen = set()
    for i, b in enumerate(basis_doc):
        _expect(b, dict, f"/basis/{i}", "object")
        name = _expect(b.get("name"), str, f"/basis/{i}/name", "string")
        if name in seen:
            raise ValidationError(f"/basis/{i}/name", f"duplicate basis name {name!r}")
        seen.add(name)
        basis.append((name, G(*_int_list(b.get("degree"), f"/basis/{i}/degree", G.rank))))
    n = len(basis)

    bracket, b_where = _table(doc, "bracket", F, n)
    product, p_where = _table(doc, "product", F, n)
    try:
        A = ColorAlgebra(G, F, eps, g0, basis, bracket, product, check_grading=False)
    except StructureError as exc:
        raise ValidationError("", str(exc)) from None
    if check_grading:
        bad = grading_violations(A)
        if bad:
            which, i, j, k = bad[0]
            path = (b_where if which == BRACKET else p_where)[(i, j)]
            want = A.target_degree(which, A.degrees[i], A.degrees[j])
            raise ValidationError(path, f"output {k} has degree {A.degrees[k]}, expected {want}")
    if decomposition_analysis and not is_free_of_2_torsion(G):
        warnings.warn(
            "grading group has 2-torsion: decomposition theorems are inapplicable",
            TwoTorsionWarning,
            stacklevel=2,
        )
    return A


def algebra_to_json(A: ColorAlgebra) -> dict:
    F = A.field

    def table(which):
        return [
            {"left": i, "right": j, "out": [[k, F.format(c)] for k, c in terms]}
            for (i, j), terms in A.tables[which].items()
        ]

    return {
        "group": A.group.to_json(),
        "field": F.to_json(),
        "g0": list(A.g0.coords),
        "bicharacter": A.epsilon.to_json(),
        "basis": [{"name": name, "degree": list(d.coords)} for name, d in A.basis],
        "bracket": table(BRACKET),
        "product": table(PRODUCT),
    }


def serialize_algebra(A: ColorAlgebra) -> str:
    """Canonical text: fixed key order, entries sorted by (left, right), outputs by index."""
    return json.dumps(algebra_to_json(A), indent=2, ensure_ascii=False) + "\n"


def load_algebra(path, **kwargs) -> ColorAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra_file(fh.read(), **kwargs)


__all__ = [
    "TwoTorsionWarning",
    "parse_algebra_file",
    "algebra_to_json",
    "serialize_algebra",
    "load_algebra",
]
