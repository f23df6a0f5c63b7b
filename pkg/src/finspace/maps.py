"""Continuous (order-preserving) maps between finite spaces.

Homotopy between maps is certified by comparability fences: a sequence of
maps in which consecutive entries are pointwise comparable.  A map is
distinguished when every minimal open set pulls back to a contractible
subspace; these are the maps whose non-Hausdorff mapping cylinder collapses
back onto the domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .spaces import FiniteSpace
from .moves import is_contractible, is_weak_point

__all__ = [
    "ContinuousMap",
    "FenceResult",
    "DistinguishedReport",
    "MembershipEvidence",
    "pointwise_leq",
    "is_valid_fence",
    "fence_homotopic",
    "is_distinguished",
    "is_op_distinguished",
    "mapping_cylinder",
    "verify_membership_evidence",
]

EXHAUSTIVE_LIMIT = 10**6


@dataclass(frozen=True)
class ContinuousMap:
    """An order-preserving map, stored by image indices."""

    dom: FiniteSpace
    cod: FiniteSpace
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.dom.n:
            raise ValueError("one image per domain point is required")
        for j in self.images:
            if not 0 <= j < self.cod.n:
                raise ValueError(f"image index {j} outside the codomain")
        img = np.array(self.images, dtype=int)
        if self.dom.n and not np.all(
            ~self.dom.leq | self.cod.leq[np.ix_(img, img)]
        ):
            raise ValueError("map does not preserve the order")

    @classmethod
    def from_labels(
        cls, dom: FiniteSpace, cod: FiniteSpace, mapping: Mapping[str, str]
    ) -> "ContinuousMap":
        if set(mapping) != set(dom.labels):
            raise ValueError("mapping must cover exactly the domain points")
        return cls(dom, cod, tuple(cod.index(mapping[l]) for l in dom.labels))

    @classmethod
    def identity(cls, space: FiniteSpace) -> "ContinuousMap":
        return cls(space, space, tuple(range(space.n)))

    @classmethod
    def constant(cls, dom: FiniteSpace, cod: FiniteSpace, y: int | str) -> "ContinuousMap":
        j = cod.index(y)
        return cls(dom, cod, (j,) * dom.n)

    def __call__(self, x: int | str) -> str:
        return self.cod.labels[self.images[self.dom.index(x)]]

    def label_map(self) -> dict[str, str]:
        return {l: self.cod.labels[j] for l, j in zip(self.dom.labels, self.images)}

    def compose(self, other: "ContinuousMap") -> "ContinuousMap":
        """self after other."""
        if other.cod != self.dom:
            raise ValueError("codomain/domain mismatch")
        translate = [self.images[self.dom.index(other.cod.labels[j])] for j in range(other.cod.n)]
        return ContinuousMap(other.dom, self.cod, tuple(translate[j] for j in other.images))

    def opposite(self) -> "ContinuousMap":
        """The same assignment viewed between the opposite spaces."""
        return ContinuousMap(self.dom.opposite(), self.cod.opposite(), self.images)

    def preimage_of_open(self, y: int | str) -> FiniteSpace:
        """Subspace of the domain that maps into the minimal open set of y."""
        j = self.cod.index(y)
        keep = [i for i in range(self.dom.n) if self.cod.leq[self.images[i], j]]
        return self.dom.subspace(keep)


def pointwise_leq(f: ContinuousMap, g: ContinuousMap) -> bool:
    """True when f(x) <= g(x) for every point x."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("maps must share domain and codomain")
    return all(f.cod.leq[i, j] for i, j in zip(f.images, g.images))


# -- fences -----------------------------------------------------------------


@dataclass(frozen=True)
class FenceResult:
    fence: tuple[ContinuousMap, ...] | None
    conclusive: bool

    def __bool__(self) -> bool:
        return self.fence is not None


def is_valid_fence(fence: Iterable[ContinuousMap]) -> bool:
    """Consecutive entries comparable, all sharing domain and codomain."""
    fence = list(fence)
    if not fence:
        return False
    for f, g in zip(fence, fence[1:]):
        if f.dom != g.dom or f.cod != g.cod:
            return False
        if not (pointwise_leq(f, g) or pointwise_leq(g, f)):
            return False
    return True


def _all_continuous_maps(dom: FiniteSpace, cod: FiniteSpace) -> list[tuple[int, ...]]:
    """Every continuous map, enumerated deterministically."""
    order = dom.linear_extension()
    below = [np.flatnonzero(dom.lt()[:, i]).tolist() for i in range(dom.n)]
    out: list[tuple[int, ...]] = []
    assign = [-1] * dom.n

    def place(k: int) -> None:
        if k == dom.n:
            out.append(tuple(assign))
            return
        i = order[k]
        for j in range(cod.n):
            if all(cod.leq[assign[p], j] for p in below[i] if assign[p] >= 0):
                assign[i] = j
                place(k + 1)
                assign[i] = -1

    place(0)
    return out


def fence_homotopic(
    f: ContinuousMap, g: ContinuousMap, budget: int = 16
) -> FenceResult:
    """Search for a comparability fence from f to g with at most ``budget`` steps.

    Two fast positive paths first (equality, direct comparability).  When the
    whole mapping space is enumerable (|cod| ** |dom| small enough) a
    breadth-first search decides fence-connectedness, so absence is
    conclusive there; otherwise absence is reported inconclusive.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("maps must share domain and codomain")
    if f.images == g.images:
        return FenceResult((f,), True)
    if pointwise_leq(f, g) or pointwise_leq(g, f):
        return FenceResult((f, g), True)
    if budget < 2 or f.cod.n ** max(f.dom.n, 1) > EXHAUSTIVE_LIMIT:
        return FenceResult(None, False)

    maps = _all_continuous_maps(f.dom, f.cod)
    index = {m: i for i, m in enumerate(maps)}
    leq_c = f.cod.leq

    def comparable(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        up = down = True
        for i, j in zip(a, b):
            if not leq_c[i, j]:
                up = False
            if not leq_c[j, i]:
                down = False
            if not (up or down):
                return False
        return up or down

    start, goal = index[f.images], index[g.images]
    parent = {start: -1}
    frontier = [start]
    depth = 0
    cut = False
    while frontier and goal not in parent:
        depth += 1
        if depth > budget:
            cut = True
            break
        nxt = []
        for u in frontier:
            mu = maps[u]
            for v, mv in enumerate(maps):
                if v not in parent and comparable(mu, mv):
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    if goal not in parent:
        return FenceResult(None, not cut)
    chain = []
    v = goal
    while v != -1:
        chain.append(v)
        v = parent[v]
    fence = tuple(
        ContinuousMap(f.dom, f.cod, maps[v]) for v in reversed(chain)
    )
    return FenceResult(fence, True)


# -- distinguished maps --------------------------------------------------------


@dataclass(frozen=True)
class DistinguishedReport:
    """Per-point verdicts: is each open-set preimage contractible."""

    ok: bool
    per_point: tuple[tuple[str, bool], ...]

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failing(self) -> tuple[str, ...]:
        return tuple(l for l, good in self.per_point if not good)


def is_distinguished(f: ContinuousMap) -> DistinguishedReport:
    """Check contractibility of the preimage of every minimal open set."""
    verdicts = []
    for j in range(f.cod.n):
        pre = f.preimage_of_open(j)
        verdicts.append((f.cod.labels[j], pre.n > 0 and is_contractible(pre)))
    ok = all(v for _, v in verdicts)
    return DistinguishedReport(ok, tuple(verdicts))


def is_op_distinguished(f: ContinuousMap) -> DistinguishedReport:
    """The dual condition: distinguished between the opposite spaces."""
    return is_distinguished(f.opposite())


# -- non-Hausdorff mapping cylinder ----------------------------------------------


def cylinder_labels(f: ContinuousMap) -> tuple[tuple[str, ...], tuple[str, ...]]:
    left = tuple("L:" + l for l in f.dom.labels)
    right = tuple("R:" + l for l in f.cod.labels)
    return left, right


def mapping_cylinder(f: ContinuousMap) -> FiniteSpace:
    """The space on dom + cod where x <= y exactly when f(x) <= y.

    Domain points keep their order and sit below the codomain copy; both
    copies embed as subspaces (labels get L:/R: prefixes).
    """
    left, right = cylinder_labels(f)
    n, m = f.dom.n, f.cod.n
    rel = np.zeros((n + m, n + m), dtype=bool)
    rel[:n, :n] = f.dom.leq
    rel[n:, n:] = f.cod.leq
    img = np.array(f.images, dtype=int)
    rel[:n, n:] = f.cod.leq[img, :]
    return FiniteSpace(left + right, rel)


# -- membership evidence -----------------------------------------------------------


EVIDENCE_KINDS = (
    "homeomorphism",
    "homotopy-equivalence",
    "distinguished",
    "op-distinguished",
    "elementary-expansion-inclusion",
    "composite",
)


@dataclass(frozen=True)
class MembershipEvidence:
    """Generator-level evidence that a map belongs to the distinguished class.

    ``witnesses`` depends on the kind: an inverse map for homeomorphisms, a
    homotopy inverse with two fences for homotopy equivalences, the weak
    point label for an elementary expansion inclusion, a tuple of evidences
    for composites, nothing for the two directly checkable kinds.
    """

    kind: str
    subject: ContinuousMap
    witnesses: tuple = ()

    def __post_init__(self) -> None:
        if self.kind not in EVIDENCE_KINDS:
            raise ValueError(f"unknown evidence kind {self.kind!r}")


def verify_membership_evidence(ev: MembershipEvidence) -> tuple[bool, str]:
    """Replay the witnesses against the definitions."""
    f = ev.subject
    if ev.kind == "homeomorphism":
        if len(ev.witnesses) != 1:
            return False, "expected the inverse map as the single witness"
        g = ev.witnesses[0]
        if g.dom != f.cod or g.cod != f.dom:
            return False, "witness does not invert the right spaces"
        if g.compose(f).images != ContinuousMap.identity(f.dom).images:
            return False, "witness is not a left inverse"
        if f.compose(g).images != ContinuousMap.identity(f.cod).images:
            return False, "witness is not a right inverse"
        return True, ""
    if ev.kind == "distinguished":
        rep = is_distinguished(f)
        return rep.ok, "" if rep.ok else f"preimage fails at {rep.failing[0]!r}"
    if ev.kind == "op-distinguished":
        rep = is_op_distinguished(f)
        return rep.ok, "" if rep.ok else f"dual preimage fails at {rep.failing[0]!r}"
    if ev.kind == "elementary-expansion-inclusion":
        if len(ev.witnesses) != 1 or not isinstance(ev.witnesses[0], str):
            return False, "expected the weak point label as the single witness"
        x = ev.witnesses[0]
        try:
            side = is_weak_point(f.cod, x)
        except KeyError:
            return False, f"no point {x!r} in the codomain"
        if side is None:
            return False, f"{x!r} is not a weak point"
        if f.dom != f.cod.delete(x):
            return False, "domain is not the codomain minus the weak point"
        if any(f(l) != l for l in f.dom.labels):
            return False, "map is not the inclusion"
        return True, ""
    if ev.kind == "homotopy-equivalence":
        if len(ev.witnesses) != 3:
            return False, "expected (inverse, fence to id_dom, fence to id_cod)"
        g, fence_dom, fence_cod = ev.witnesses
        if g.dom != f.cod or g.cod != f.dom:
            return False, "homotopy inverse has the wrong spaces"
        gf, fg = g.compose(f), f.compose(g)
        for fence, ends in (
            (fence_dom, (gf, ContinuousMap.identity(f.dom))),
            (fence_cod, (fg, ContinuousMap.identity(f.cod))),
        ):
            fence = tuple(fence)
            if not is_valid_fence(fence):
                return False, "fence does not replay"
            if fence[0].images != ends[0].images or fence[-1].images != ends[1].images:
                return False, "fence endpoints do not match"
        return True, ""
    # composite
    parts = ev.witnesses
    if not parts:
        return False, "composite needs at least one factor"
    for part in parts:
        ok, why = verify_membership_evidence(part)
        if not ok:
            return False, f"factor fails: {why}"
    composed = parts[0].subject
    for part in parts[1:]:
        composed = part.subject.compose(composed)
    if composed.dom != f.dom or composed.cod != f.cod or composed.images != f.images:
        return False, "factors do not compose to the subject"
    return True, ""
