"""Finite incidence structures and their exact verifiers.

A structure is a point set 0..num_points-1 plus a list of blocks
(sorted point tuples), optionally carrying a partition of the points
into groups and a partition of the blocks into parallel classes.
Builders produce group divisible designs, affine planes, hyperplane
designs, plain partitions and the 7-point projective plane; verifiers
check the partial-geometry, group-divisible and 2-design axioms by
brute pair counting and report the first violated axiom with a witness.

All orderings are canonical and documented per builder, so identical
inputs give identical structures element by element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple

from .errors import (
    BadClassCountError,
    FormatError,
    NoParallelClassesError,
    NotGroupDivisibleError,
    NotPartialGeometryError,
    NotPrimePowerError,
    NotTwoDesignError,
    OutOfBudgetError,
)
from .ffield import make_field

DEFAULT_BLOCK_BUDGET = 10 ** 6

Block = tuple[int, ...]


class AntiFlag(NamedTuple):
    """A non-incident (point, block-index) pair."""

    point: int
    block: int


class PgParams(NamedTuple):
    """Partial geometry parameters: points per line, lines per point, connection number."""

    kappa: int
    rho: int
    tau: int


class GddParams(NamedTuple):
    """Group divisible parameters: group count, group size, cross-group pair count."""

    l: int
    q: int
    pair_index: int


@dataclass(frozen=True)
class DesignParams:
    """2-design parameters (v, b, k, r, lambda), plus resolvability data.

    s is the number of blocks per parallel class and m_int the common
    intersection size of non-parallel blocks; both are set only when the
    structure carries parallel classes and the intersections are constant.
    """

    v_pts: int
    b_blocks: int
    k_blocksize: int
    r_replication: int
    lambda_pair: int
    s: int | None = None
    m_int: int | None = None

    def __post_init__(self):
        v, b, k, r, lam = (self.v_pts, self.b_blocks, self.k_blocksize,
                           self.r_replication, self.lambda_pair)
        if r * (k - 1) != lam * (v - 1):
            raise ValueError(f"replication identity fails: {r}*({k}-1) != {lam}*({v}-1)")
        if b * k * (k - 1) != lam * v * (v - 1):
            raise ValueError(f"block-count identity fails for 2-({v},{b},{k},{r},{lam})")
        if self.s is not None and self.m_int is not None:
            if v != self.m_int * self.s ** 2 or k != self.m_int * self.s:
                raise ValueError(
                    f"affine identities fail: v={v}, k={k}, s={self.s}, m={self.m_int}")


@dataclass(frozen=True)
class IncidenceStructure:
    """Points 0..num_points-1 with blocks, optional groups and parallel classes."""

    num_points: int
    blocks: tuple[Block, ...]
    groups: tuple[Block, ...] | None = None
    parallel_classes: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if self.groups is not None:
            object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))
        if self.parallel_classes is not None:
            object.__setattr__(self, "parallel_classes",
                               tuple(tuple(c) for c in self.parallel_classes))
        self._validate()

    def _validate(self):
        n = self.num_points
        if n < 1:
            raise ValueError("structure needs at least one point")
        seen = set()
        for i, b in enumerate(self.blocks):
            if not b:
                raise ValueError(f"block {i} is empty")
            if any(p < 0 or p >= n for p in b):
                raise ValueError(f"block {i} has a point outside 0..{n - 1}")
            if any(b[j] >= b[j + 1] for j in range(len(b) - 1)):
                raise ValueError(f"block {i} is not strictly increasing")
            if b in seen:
                raise ValueError(f"duplicate block {b}")
            seen.add(b)
        if self.groups is not None:
            flat = [p for g in self.groups for p in g]
            if sorted(flat) != list(range(n)):
                raise ValueError("groups do not partition the point set")
            for g in self.groups:
                if any(g[j] >= g[j + 1] for j in range(len(g) - 1)):
                    raise ValueError("group classes must be strictly increasing")
        if self.parallel_classes is not None:
            flat = [i for c in self.parallel_classes for i in c]
            if sorted(flat) != list(range(len(self.blocks))):
                raise ValueError("parallel classes do not partition the block list")
            for c in self.parallel_classes:
                covered: list[int] = []
                for i in c:
                    covered.extend(self.blocks[i])
                if sorted(covered) != list(range(n)):
                    raise ValueError(f"parallel class {c} is not a partition of the points")

    def block_sets(self) -> list[frozenset[int]]:
        return [frozenset(b) for b in self.blocks]

    def point_to_blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_points)]
        for i, b in enumerate(self.blocks):
            for p in b:
                out[p].append(i)
        return out


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_gdd(l: int, q: int, block_budget: int = DEFAULT_BLOCK_BUDGET) -> IncidenceStructure:
    """Group divisible design on ql points: l consecutive groups of size q,
    blocks = all q^l transversals in lexicographic order."""
    if l < 2:
        raise ValueError(f"need at least 2 groups, got {l}")
    if q < 2:
        raise ValueError(f"need group size at least 2, got {q}")
    if q ** l > block_budget:
        raise OutOfBudgetError(f"{q}^{l} blocks exceed budget {block_budget}")
    groups = tuple(tuple(range(g * q, (g + 1) * q)) for g in range(l))
    blocks = tuple(tuple(g * q + pick[g] for g in range(l))
                   for pick in product(range(q), repeat=l))
    return IncidenceStructure(q * l, blocks, groups=groups)


def build_affine_plane(q: int) -> IncidenceStructure:
    """Affine plane of order q over GF(q): point (x, y) has index x*q + y.

    Lines come in q+1 parallel classes: one class per slope in field
    order 0..q-1 (lines y = m*x + b ordered by intercept b), then the
    vertical class x = c ordered by c.
    """
    if q > 64:
        raise NotPrimePowerError(f"affine plane order capped at 64, got {q}")
    f = make_field(q)
    blocks: list[Block] = []
    for m in f.elements():
        for b in f.elements():
            blocks.append(tuple(sorted(x * q + f.add(f.mul(m, x), b) for x in f.elements())))
    for c in f.elements():
        blocks.append(tuple(c * q + y for y in f.elements()))
    classes = tuple(tuple(range(i * q, (i + 1) * q)) for i in range(q + 1))
    return IncidenceStructure(q * q, tuple(blocks), parallel_classes=classes)


def build_hyperplane_design(q: int, n: int,
                            block_budget: int = 10 ** 5) -> IncidenceStructure:
    """Affine hyperplanes of F_q^n: one parallel class per direction.

    Points are coordinate vectors indexed in base q with the first
    coordinate most significant.  Each direction is a canonical normal
    vector a (first nonzero coordinate 1, directions in lexicographic
    order) and its class holds the blocks {x : a.x = c} for c = 0..q-1.
    """
    if n < 2:
        raise ValueError(f"need dimension at least 2, got {n}")
    if q ** n > block_budget:
        raise OutOfBudgetError(f"{q}^{n} points exceed budget {block_budget}")
    f = make_field(q)
    points = list(product(f.elements(), repeat=n))

    def dot(a, x):
        acc = 0
        for ai, xi in zip(a, x):
            acc = f.add(acc, f.mul(ai, xi))
        return acc

    blocks: list[Block] = []
    for a in product(f.elements(), repeat=n):
        nz = next((i for i, ai in enumerate(a) if ai), None)
        if nz is None or a[nz] != 1:
            continue
        values = [dot(a, x) for x in points]
        for c in f.elements():
            blocks.append(tuple(i for i, val in enumerate(values) if val == c))
    classes = tuple(tuple(range(i * q, (i + 1) * q)) for i in range(len(blocks) // q))
    return IncidenceStructure(q ** n, tuple(blocks), parallel_classes=classes)


def restrict_parallel_classes(s: IncidenceStructure, l: int) -> IncidenceStructure:
    """Keep only the blocks of the first l parallel classes."""
    if s.parallel_classes is None:
        raise NoParallelClassesError("structure has no parallel classes")
    if not 1 <= l <= len(s.parallel_classes):
        raise BadClassCountError(
            f"class count {l} out of range 1..{len(s.parallel_classes)}")
    blocks: list[Block] = []
    classes: list[tuple[int, ...]] = []
    for c in s.parallel_classes[:l]:
        start = len(blocks)
        blocks.extend(s.blocks[i] for i in c)
        classes.append(tuple(range(start, len(blocks))))
    return IncidenceStructure(s.num_points, tuple(blocks), groups=s.groups,
                              parallel_classes=tuple(classes))


def build_partition_structure(q: int, l: int) -> IncidenceStructure:
    """ql points partitioned into l consecutive q-sets; blocks = groups."""
    if q < 1:
        raise ValueError(f"need block size at least 1, got {q}")
    if l < 2:
        raise ValueError(f"need at least 2 blocks, got {l}")
    parts = tuple(tuple(range(g * q, (g + 1) * q)) for g in range(l))
    return IncidenceStructure(q * l, parts, groups=parts,
                              parallel_classes=(tuple(range(l)),))


def build_fano() -> IncidenceStructure:
    """The 7-point projective plane as the difference-set design {i, i+1, i+3} mod 7."""
    blocks = tuple(tuple(sorted(((i + d) % 7 for d in (0, 1, 3)))) for i in range(7))
    return IncidenceStructure(7, blocks)


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def _pair_counts(s: IncidenceStructure) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for b in s.blocks:
        for pair in combinations(b, 2):
            counts[pair] = counts.get(pair, 0) + 1
    return counts


def verify_pg(s: IncidenceStructure) -> PgParams:
    """Check the three partial-geometry axioms; return (kappa, rho, tau).

    Axiom 1: constant line size kappa >= 2 and constant point degree
    rho >= 2.  Axiom 2: two points on at most one common line.  Axiom 3:
    every anti-flag sees a constant number tau >= 1 of transversal lines.
    Raises NotPartialGeometryError naming the first violated axiom.
    """
    if not s.blocks:
        raise NotPartialGeometryError(1, None, "no lines")
    kappa = len(s.blocks[0])
    for i, b in enumerate(s.blocks):
        if len(b) != kappa:
            raise NotPartialGeometryError(1, i, f"line sizes differ: {len(b)} != {kappa}")
    if kappa < 2:
        raise NotPartialGeometryError(1, 0, f"line size {kappa} < 2")
    degrees = [0] * s.num_points
    for b in s.blocks:
        for p in b:
            degrees[p] += 1
    rho = degrees[0]
    for p, d in enumerate(degrees):
        if d != rho:
            raise NotPartialGeometryError(1, p, f"point degrees differ: {d} != {rho}")
    if rho < 2:
        raise NotPartialGeometryError(1, 0, f"point degree {rho} < 2")
    for pair, c in _pair_counts(s).items():
        if c > 1:
            raise NotPartialGeometryError(2, pair, f"points share {c} lines")
    sets = s.block_sets()
    p2b = s.point_to_blocks()
    tau = None
    for flag in anti_flags(s):
        line = sets[flag.block]
        crossing = sum(1 for i in p2b[flag.point] if line & sets[i])
        if tau is None:
            tau = crossing
        if crossing != tau:
            raise NotPartialGeometryError(
                3, tuple(flag), f"anti-flag sees {crossing} lines, expected {tau}")
    if tau is None:
        raise NotPartialGeometryError(3, None, "no anti-flag exists")
    if tau < 1:
        raise NotPartialGeometryError(3, None, "anti-flags see 0 transversal lines")
    return PgParams(kappa, rho, tau)


def verify_gdd(s: IncidenceStructure) -> GddParams:
    """Check the group-divisible pair conditions; return (l, q, pair_index).

    Same-group pairs must lie in no block; cross-group pairs in a
    constant positive number of blocks.
    """
    if s.groups is None:
        raise NotGroupDivisibleError(None, "structure has no group partition")
    q = len(s.groups[0])
    for i, g in enumerate(s.groups):
        if len(g) != q:
            raise NotGroupDivisibleError(i, f"group sizes differ: {len(g)} != {q}")
    group_of = [0] * s.num_points
    for gi, g in enumerate(s.groups):
        for p in g:
            group_of[p] = gi
    counts = _pair_counts(s)
    for (a, b), c in counts.items():
        if group_of[a] == group_of[b]:
            raise NotGroupDivisibleError((a, b), f"same-group pair occurs in {c} blocks")
    index = None
    witnessed = None
    for a in range(s.num_points):
        for b in range(a + 1, s.num_points):
            if group_of[a] == group_of[b]:
                continue
            c = counts.get((a, b), 0)
            if index is None:
                index, witnessed = c, (a, b)
            if c != index:
                raise NotGroupDivisibleError(
                    (a, b), f"cross-group pair occurs in {c} blocks, expected {index}")
    if index is None:
        raise NotGroupDivisibleError(None, "no cross-group pair exists")
    if index < 1:
        raise NotGroupDivisibleError(witnessed, "cross-group pairs occur in 0 blocks")
    return GddParams(len(s.groups), q, index)


def verify_2design(s: IncidenceStructure) -> DesignParams:
    """Check constant block size, replication and pair count.

    When parallel classes are present, also report blocks-per-class s
    and, if constant, the intersection size m_int of non-parallel blocks.
    """
    if s.num_points < 2:
        raise NotTwoDesignError(None, "need at least 2 points")
    if not s.blocks:
        raise NotTwoDesignError(None, "no blocks")
    k = len(s.blocks[0])
    for i, b in enumerate(s.blocks):
        if len(b) != k:
            raise NotTwoDesignError(i, f"block sizes differ: {len(b)} != {k}")
    if k < 2:
        raise NotTwoDesignError(0, f"block size {k} < 2")
    degrees = [0] * s.num_points
    for b in s.blocks:
        for p in b:
            degrees[p] += 1
    r = degrees[0]
    for p, d in enumerate(degrees):
        if d != r:
            raise NotTwoDesignError(p, f"replication differs: {d} != {r}")
    counts = _pair_counts(s)
    lam = None
    for a in range(s.num_points):
        for b in range(a + 1, s.num_points):
            c = counts.get((a, b), 0)
            if lam is None:
                lam = c
            if c != lam:
                raise NotTwoDesignError(
                    (a, b), f"pair occurs in {c} blocks, expected {lam}")
    if not lam:
        raise NotTwoDesignError(None, "pairs occur in 0 blocks")

    s_count = None
    m_int = None
    if s.parallel_classes is not None:
        s_count = len(s.parallel_classes[0])
        sets = s.block_sets()
        class_of = [0] * len(s.blocks)
        for ci, c in enumerate(s.parallel_classes):
            for i in c:
                class_of[i] = ci
        sizes = {len(sets[i] & sets[j])
                 for i in range(len(sets)) for j in range(i + 1, len(sets))
                 if class_of[i] != class_of[j]}
        if len(sizes) == 1:
            m_int = sizes.pop()
    return DesignParams(s.num_points, len(s.blocks), k, r, lam, s=s_count, m_int=m_int)


def anti_flags(s: IncidenceStructure) -> list[AntiFlag]:
    """All non-incident (point, block) pairs in lexicographic order.

    This order is the vertex numbering contract for the digraph builders.
    """
    sets = s.block_sets()
    return [AntiFlag(p, i)
            for p in range(s.num_points)
            for i in range(len(s.blocks))
            if p not in sets[i]]


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def to_json(s: IncidenceStructure) -> str:
    """Serialize to the interchange document; deterministic byte-for-byte."""
    doc: dict = {"points": s.num_points, "blocks": [list(b) for b in s.blocks]}
    if s.groups is not None:
        doc["groups"] = [list(g) for g in s.groups]
    if s.parallel_classes is not None:
        doc["parallel_classes"] = [list(c) for c in s.parallel_classes]
    return json.dumps(doc, separators=(",", ":")) + "\n"


def from_json(text: str) -> IncidenceStructure:
    """Parse the interchange document produced by to_json."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.lineno, f"bad JSON: {exc.msg}") from exc
    if not isinstance(doc, dict) or "points" not in doc or "blocks" not in doc:
        raise FormatError(1, "expected an object with 'points' and 'blocks'")
    try:
        return IncidenceStructure(
            doc["points"],
            tuple(tuple(b) for b in doc["blocks"]),
            groups=tuple(tuple(g) for g in doc["groups"]) if "groups" in doc else None,
            parallel_classes=(tuple(tuple(c) for c in doc["parallel_classes"])
                              if "parallel_classes" in doc else None),
        )
    except (TypeError, ValueError) as exc:
        raise FormatError(1, str(exc)) from exc
