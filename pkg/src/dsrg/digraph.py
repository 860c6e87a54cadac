"""Loopless digraphs as packed bit rows, with exact DSRG verification.

Row u is a Python int whose bit v is set iff there is an edge u -> v,
so entries of A^2 are popcounts of row & column intersections and the
whole verification runs in exact integer arithmetic.  The anti-flag
builders take an incidence structure, number its non-incident
(point, block) pairs in lexicographic order, and wire edges by the
four membership rules; the verifier recovers (v, k, t, lambda, mu)
from A^2 entry by entry rather than trusting any formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateError,
    DsrgError,
    FormatError,
    NoAntiFlagsError,
    NonConstantError,
    NotDsrgError,
    NotPartitionStructureError,
    NotRegularError,
    PreconditionFailedError,
    TNotMuError,
    TooLargeError,
)
from .incidence import AntiFlag, IncidenceStructure, anti_flags, verify_2design
from .params import DsrgParams

MAX_VERIFY_ORDER = 4096


@dataclass(frozen=True)
class Digraph:
    """Immutable loopless digraph; rows[u] bit v == edge u -> v."""

    n: int
    rows: tuple[int, ...]
    labels: tuple[AntiFlag, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{self.n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def out_degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def out_neighbors(self, u: int) -> list[int]:
        return _bits(self.rows[u])

    def columns(self) -> list[int]:
        """In-neighbor masks: bit u of columns()[v] == edge u -> v."""
        cols = [0] * self.n
        for u, row in enumerate(self.rows):
            for v in _bits(row):
                cols[v] |= 1 << u
        return cols

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u])]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def transpose(self) -> "Digraph":
        return Digraph(self.n, tuple(self.columns()), labels=self.labels)

    # -- text formats -------------------------------------------------------

    def to_dgr(self) -> str:
        """dgr/1: a line with n, then n lines of n characters from {0,1}."""
        lines = [str(self.n)]
        for row in self.rows:
            lines.append("".join("1" if (row >> v) & 1 else "0" for v in range(self.n)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dgr(cls, text: str) -> "Digraph":
        lines = text.splitlines()
        if not lines:
            raise FormatError(1, "empty file")
        try:
            n = int(lines[0].strip())
        except ValueError:
            raise FormatError(1, f"expected a vertex count, got {lines[0]!r}") from None
        if n < 1:
            raise FormatError(1, f"vertex count must be positive, got {n}")
        if len(lines) < n + 1:
            raise FormatError(len(lines), f"expected {n} adjacency rows, got {len(lines) - 1}")
        rows = []
        for u in range(n):
            line = lines[1 + u].strip()
            if len(line) != n or set(line) - {"0", "1"}:
                raise FormatError(2 + u, f"expected {n} characters from {{0,1}}")
            rows.append(sum(1 << v for v, ch in enumerate(line) if ch == "1"))
        return cls(n, tuple(rows))

    def to_edge_list(self) -> str:
        """One 'u v' line per edge, sorted by (u, v)."""
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    @classmethod
    def from_edge_list(cls, text: str) -> "Digraph":
        """Parse 'u v' lines; the vertex count is max index + 1."""
        edges = []
        top = -1
        for i, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise FormatError(i, f"expected 'u v', got {raw!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(i, f"expected integers, got {raw!r}") from None
            if u < 0 or v < 0:
                raise FormatError(i, "vertex indices must be nonnegative")
            edges.append((u, v))
            top = max(top, u, v)
        if top < 0:
            raise FormatError(1, "no edges")
        rows = [0] * (top + 1)
        for u, v in edges:
            rows[u] |= 1 << v
        return cls(top + 1, tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# anti-flag builders
# ---------------------------------------------------------------------------

def _antiflag_masks(s: IncidenceStructure):
    """Vertex list plus the two index masks the adjacency rules need.

    in_block_mask[x]: vertices whose block contains point x.
    with_point_mask[x]: vertices whose point is x.
    """
    flags = anti_flags(s)
    if not flags:
        raise NoAntiFlagsError("every point lies on every block")
    in_block_mask = [0] * s.num_points
    with_point_mask = [0] * s.num_points
    for j, (p, b) in enumerate(flags):
        for x in s.blocks[b]:
            in_block_mask[x] |= 1 << j
        with_point_mask[p] |= 1 << j
    return flags, in_block_mask, with_point_mask


def build_antiflag_forward(s: IncidenceStructure) -> Digraph:
    """Edge (p, B) -> (p', B') iff p is a point of B'."""
    flags, in_block_mask, _ = _antiflag_masks(s)
    rows = []
    for j, (p, _) in enumerate(flags):
        row = in_block_mask[p]
        # p in B' can never hold for the vertex itself: p is off its own block
        assert not (row >> j) & 1
        rows.append(row)
    return Digraph(len(flags), tuple(rows), labels=tuple(flags))


def build_antiflag_backward(s: IncidenceStructure) -> Digraph:
    """Edge (p, B) -> (p', B') iff p' is a point of B.

    Always equals the transpose of build_antiflag_forward(s).
    """
    flags, _, with_point_mask = _antiflag_masks(s)
    rows = []
    for j, (_, b) in enumerate(flags):
        row = 0
        for x in s.blocks[b]:
            row |= with_point_mask[x]
        assert not (row >> j) & 1
        rows.append(row)
    return Digraph(len(flags), tuple(rows), labels=tuple(flags))


def build_antiflag_backward_loopy(s: IncidenceStructure) -> Digraph:
    """Edge (p, B) -> (p', B') iff p' in B, or p = p' and B != B'.

    Requires a 2-design with b + lambda > 2r; the extra same-point edges
    keep the graph loopless because B = B' is excluded.
    """
    try:
        d = verify_2design(s)
    except DsrgError as exc:
        raise PreconditionFailedError(f"not a 2-design: {exc}") from exc
    if d.b_blocks + d.lambda_pair <= 2 * d.r_replication:
        raise PreconditionFailedError(
            f"need b + lambda > 2r, got {d.b_blocks} + {d.lambda_pair} "
            f"<= 2*{d.r_replication}")
    flags, _, with_point_mask = _antiflag_masks(s)
    rows = []
    for j, (p, b) in enumerate(flags):
        row = 0
        for x in s.blocks[b]:
            row |= with_point_mask[x]
        row |= with_point_mask[p] & ~(1 << j)
        rows.append(row)
    return Digraph(len(flags), tuple(rows), labels=tuple(flags))


def build_partition_spiked(s: IncidenceStructure) -> Digraph:
    """Edge (x, S) -> (x', S') iff x in S', or S = S' and x != x'.

    Only defined on partition structures, where the blocks are exactly
    the groups.
    """
    if s.groups is None or set(s.blocks) != set(s.groups):
        raise NotPartitionStructureError("blocks must equal the group partition")
    flags, in_block_mask, _ = _antiflag_masks(s)
    block_mask = [0] * len(s.blocks)
    for j, (_, b) in enumerate(flags):
        block_mask[b] |= 1 << j
    rows = []
    for j, (p, b) in enumerate(flags):
        rows.append(in_block_mask[p] | (block_mask[b] & ~(1 << j)))
    return Digraph(len(flags), tuple(rows), labels=tuple(flags))


# ---------------------------------------------------------------------------
# verification and the multiple construction
# ---------------------------------------------------------------------------

def verify_dsrg(d: Digraph) -> DsrgParams:
    """Recover (v, k, t, lambda, mu) from A^2, or raise with a witness.

    Checks, in order: constant in- and out-degree k; the graph is
    neither empty nor complete; A^2 is constant on the diagonal (t),
    on edges (lambda) and on off-diagonal non-edges (mu).
    """
    n = d.n
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if n > MAX_VERIFY_ORDER:
        raise TooLargeError(f"verification capped at {MAX_VERIFY_ORDER} vertices")
    rows = d.rows
    cols = d.columns()
    k = rows[0].bit_count()
    for u in range(n):
        if rows[u].bit_count() != k:
            raise NotRegularError(u, f"out-degree {rows[u].bit_count()} != {k}")
    for u in range(n):
        if cols[u].bit_count() != k:
            raise NotRegularError(u, f"in-degree {cols[u].bit_count()} != {k}")
    if k == 0:
        raise DegenerateError("graph is empty; mu is unconstrained")
    if k == n - 1:
        raise DegenerateError("graph is complete; mu is unconstrained")

    t = (rows[0] & cols[0]).bit_count()
    for u in range(1, n):
        tu = (rows[u] & cols[u]).bit_count()
        if tu != t:
            raise NonConstantError("t", u, f"diagonal entry {tu} != {t}")

    lam = mu = None
    for u in range(n):
        row = rows[u]
        for w in range(n):
            if u == w:
                continue
            paths = (row & cols[w]).bit_count()
            if (row >> w) & 1:
                if lam is None:
                    lam = paths
                elif paths != lam:
                    raise NonConstantError("lambda", (u, w), f"entry {paths} != {lam}")
            else:
                if mu is None:
                    mu = paths
                elif paths != mu:
                    raise NonConstantError("mu", (u, w), f"entry {paths} != {mu}")
    assert lam is not None and mu is not None
    return DsrgParams(n, k, t, lam, mu)


def duval_multiple(d: Digraph, m: int) -> Digraph:
    """Tensor the adjacency matrix with the all-ones m x m block.

    Sends a verified graph with t = mu to one with parameters scaled
    by m; the diagonal blocks stay zero because the base graph is
    loopless, so the result is again loopless.
    """
    if m < 1:
        raise ValueError(f"multiplier must be positive, got {m}")
    try:
        base = verify_dsrg(d)
    except DsrgError as exc:
        raise NotDsrgError(f"input graph is not a DSRG: {exc}") from exc
    if base.t != base.mu:
        raise TNotMuError(f"need t = mu, got t={base.t}, mu={base.mu}")
    if m == 1:
        return d
    block = (1 << m) - 1
    rows = []
    for u in range(d.n):
        row = 0
        for v in _bits(d.rows[u]):
            row |= block << (v * m)
        rows.extend([row] * m)
    out = Digraph(d.n * m, tuple(rows))
    got = verify_dsrg(out)
    assert got == base.scaled(m), f"blow-up verified to {got}, expected {base.scaled(m)}"
    return out
