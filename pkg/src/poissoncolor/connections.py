"""Restricted support, connections between its degrees, and the induced partition.

A connection from g to h is a chain ``(g_1, 0), (g_2, k_2), ..., (g_n, k_n)``
with ``g_1 = g``, steps ``g_i`` in ``±Sigma ∪ {0, ±g0}`` and shifts ``k_i`` in
``{0, ±g0}``, every proper partial sum in ``±Sigma`` and total sum ``±h``.
Only partial sums matter, so the search runs over states in ``±Sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import SourceNotInSigma, TargetNotInSigma
from .group import GroupElement

Step = tuple[GroupElement, GroupElement]


def _key(g: GroupElement):
    return g.coords


def _step_key(step: Step):
    return (step[0].coords, step[1].coords)


class RestrictedSupport:
    """Sigma together with the cached sets ±Sigma and the connection step set."""

    def __init__(self, sigma: Iterable[GroupElement], g0: GroupElement):
        self.g0 = g0
        zero = g0.group.zero()
        forbidden = {zero, g0, -g0}
        sigma = set(sigma)
        bad = sigma & forbidden
        if bad:
            raise ValueError(f"restricted support may not contain {sorted(bad, key=_key)}")
        self.sigma: tuple[GroupElement, ...] = tuple(sorted(sigma, key=_key))
        self.sigma_set = frozenset(sigma)
        self.pm = frozenset(sigma | {-g for g in sigma})
        self.shifts = tuple(sorted({zero, g0, -g0}, key=_key))
        self.step_degrees = tuple(sorted(self.pm | forbidden, key=_key))
        # one lexicographically smallest (g_i, k_i) per net displacement
        best: dict[GroupElement, Step] = {}
        for gi in self.step_degrees:
            for ki in self.shifts:
                d = gi + ki
                if d not in best or _step_key((gi, ki)) < _step_key(best[d]):
                    best[d] = (gi, ki)
        self.moves = tuple(sorted(best.items(), key=lambda item: _step_key(item[1])))

    @classmethod
    def from_support(cls, support: Iterable[GroupElement], g0: GroupElement) -> "RestrictedSupport":
        zero = g0.group.zero()
        return cls((g for g in support if g not in (zero, g0, -g0)), g0)

    def __contains__(self, g):
        return g in self.sigma_set

    def __len__(self):
        return len(self.sigma)

    def __repr__(self):
        return f"RestrictedSupport([{', '.join(map(str, self.sigma))}], g0={self.g0})"

    def neighbours(self, s: GroupElement):
        for d, step in self.moves:
            t = s + d
            if t in self.pm:
                yield t, step

    def reachable(self, g: GroupElement) -> set[GroupElement]:
        """States of ±Sigma reachable from g."""
        seen = {g}
        frontier = [g]
        while frontier:
            nxt = []
            for s in frontier:
                for t, _ in self.neighbours(s):
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return seen


def restricted_support(A) -> RestrictedSupport:
    """Sigma = {g : P_g != 0} minus {0, ±g0} for a ColorAlgebra."""
    return RestrictedSupport.from_support(A.support, A.g0)


@dataclass(frozen=True)
class Connection:
    steps: tuple[Step, ...]
    sign: int = 1

    def __len__(self):
        return len(self.steps)

    @property
    def source(self) -> GroupElement:
        return self.steps[0][0]

    def total(self) -> GroupElement:
        g = self.steps[0][0]
        for gi, ki in self.steps[1:]:
            g = g + gi + ki
        return g

    def to_json(self) -> dict:
        return {"steps": [[list(g.coords), list(k.coords)] for g, k in self.steps], "sign": self.sign}

    def __str__(self):
        body = ", ".join(f"{g}⊗{k}" for g, k in self.steps)
        return "{" + body + "}" + ("" if self.sign == 1 else " (sign -1)")


def find_connection(S: RestrictedSupport, g: GroupElement, h: GroupElement) -> Connection | None:
    """Shortest connection from g to h (lexicographically least among shortest), or None."""
    if g not in S:
        raise SourceNotInSigma(f"{g} is not in the restricted support")
    if h not in S:
        raise TargetNotInSigma(f"{h} is not in the restricted support")
    zero = g.group.zero()
    if g == h:
        return Connection(((g, zero),), 1)
    if g == -h:
        return Connection(((g, zero),), -1)
    layer: dict[GroupElement, tuple[Step, ...]] = {g: ()}
    visited = {g}
    while layer:
        nxt: dict[GroupElement, tuple[Step, ...]] = {}
        for s in sorted(layer, key=lambda s: tuple(map(_step_key, layer[s]))):
            path = layer[s]
            for t, step in S.neighbours(s):
                if t in visited:
                    continue
                cand = path + (step,)
                if t not in nxt or tuple(map(_step_key, cand)) < tuple(map(_step_key, nxt[t])):
                    nxt[t] = cand
        hits = [(nxt[t], 1 if t == h else -1) for t in (h, -h) if t in nxt]
        if hits:
            path, sign = min(hits, key=lambda hit: tuple(map(_step_key, hit[0])))
            return Connection(((g, zero),) + path, sign)
        visited.update(nxt)
        layer = nxt
    return None


def verify_connection(S: RestrictedSupport, c: Connection, g: GroupElement, h: GroupElement) -> bool:
    """Replay a chain against the definition, independent of how it was found."""
    if g not in S or h not in S or not c.steps or c.sign not in (1, -1):
        return False
    zero = S.g0.group.zero()
    g1, k1 = c.steps[0]
    if g1 != g or k1 != zero:
        return False
    allowed_steps = set(S.step_degrees)
    allowed_shifts = set(S.shifts)
    partial = g1
    n = len(c.steps)
    for idx, (gi, ki) in enumerate(c.steps[1:], start=2):
        if gi not in allowed_steps or ki not in allowed_shifts:
            return False
        partial = partial + gi + ki
        if idx < n and partial not in S.pm:
            return False
    return partial == (h if c.sign == 1 else -h)


def reverse_connection(c: Connection, target: GroupElement) -> Connection:
    """Connection from ``target`` back to the source: ``h⊗0, -εg_n⊗-εk_n, ..., -εg_2⊗-εk_2``."""
    e = c.sign
    zero = target.group.zero()
    steps = [(target, zero)] + [(-e * gi, -e * ki) for gi, ki in reversed(c.steps[1:])]
    return Connection(tuple(steps), e)


def compose_connections(first: Connection, second: Connection) -> Connection:
    """Concatenate g→h with h→l, scaling the second chain's steps by the first's sign."""
    e = first.sign
    if len(second.steps) == 1:
        return Connection(first.steps, e * second.sign)
    tail = tuple((e * gi, e * ki) for gi, ki in second.steps[1:])
    return Connection(first.steps + tail, e * second.sign)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # smallest element stays the representative
        if _key(rb) < _key(ra):
            ra, rb = rb, ra
        self.parent[rb] = ra


@dataclass
class SupportPartition:
    support: RestrictedSupport
    classes: tuple[tuple[GroupElement, ...], ...]
    witnesses: dict[tuple[GroupElement, GroupElement], Connection] = field(default_factory=dict)

    def class_of(self, g: GroupElement) -> tuple[GroupElement, ...]:
        for cls in self.classes:
            if g in cls:
                return cls
        raise KeyError(g)

    def connected(self, g: GroupElement, h: GroupElement) -> bool:
        return h in self.class_of(g)

    def to_json(self) -> dict:
        return {
            "classes": [[list(g.coords) for g in cls] for cls in self.classes],
            "witnesses": [
                {"from": list(g.coords), "to": list(h.coords), **c.to_json()}
                for (g, h), c in sorted(self.witnesses.items(), key=lambda kv: (kv[0][0].coords, kv[0][1].coords))
            ],
        }


def equivalence_classes(S: RestrictedSupport, order: Iterable[GroupElement] | None = None) -> SupportPartition:
    """Partition Sigma into connection classes, storing a verified witness for every ordered pair.

    ``order`` only changes the traversal sequence; the result does not depend on it.
    """
    seeds = list(S.sigma if order is None else order)
    uf = _UnionFind(S.sigma)
    done: set[GroupElement] = set()
    for g in seeds:
        if g in done:
            continue
        reach = S.reachable(g)
        for h in S.sigma:
            if h in reach or -h in reach:
                uf.union(g, h)
                done.add(h)
    groups: dict[GroupElement, list[GroupElement]] = {}
    for g in S.sigma:
        groups.setdefault(uf.find(g), []).append(g)
    classes = tuple(sorted((tuple(sorted(m, key=_key)) for m in groups.values()), key=lambda c: _key(c[0])))

    witnesses = {}
    for cls in classes:
        rep = cls[0]
        from_rep = {h: find_connection(S, rep, h) for h in cls}
        for g in cls:
            to_rep = reverse_connection(from_rep[g], g)
            for h in cls:
                if g == rep:
                    c = from_rep[h]
                elif h == rep:
                    c = to_rep
                else:
                    c = compose_connections(to_rep, from_rep[h])
                if not verify_connection(S, c, g, h):
                    raise RuntimeError(f"composed witness {c} from {g} to {h} failed verification")
                witnesses[(g, h)] = c
    return SupportPartition(S, classes, witnesses)
