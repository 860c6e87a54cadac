"""Construction families: closed-form parameters and graph builders.

Each family names one way of producing a DSRG from an incidence
structure, with the parameters the construction is proven to realize.
expected_params evaluates the closed form exactly (Python integers
never wrap, so there is no overflow to report); build_digraph performs
the construction when one is available and raises UnbuildableError for
parameter choices that only make sense as formula evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Union

from .digraph import (
    Digraph,
    build_antiflag_backward,
    build_antiflag_backward_loopy,
    build_antiflag_forward,
    build_partition_spiked,
    duval_multiple,
)
from .errors import UnbuildableError
from .incidence import (
    DEFAULT_BLOCK_BUDGET,
    build_affine_plane,
    build_fano,
    build_gdd,
    build_hyperplane_design,
    build_partition_structure,
    restrict_parallel_classes,
)
from .params import DsrgParams


@dataclass(frozen=True)
class Gdd:
    """Transversal blocks of l groups of size q; forward rule; m-fold multiple."""

    l: int
    q: int
    m: int = 1
    name: ClassVar[str] = "gdd"

    def __post_init__(self):
        if self.l < 2 or self.q < 2 or self.m < 1:
            raise ValueError(f"need l >= 2, q >= 2, m >= 1, got {self}")

    def describe(self) -> str:
        base = f"l={self.l};q={self.q}"
        return base if self.m == 1 else f"{base};m={self.m}"


@dataclass(frozen=True)
class PgAntiflag:
    """Anti-flags of a partial geometry pg(kappa, rho, tau); forward rule."""

    kappa: int
    rho: int
    tau: int
    name: ClassVar[str] = "pg-antiflag"

    def __post_init__(self):
        if self.kappa < 2 or self.rho < 2:
            raise ValueError(f"need kappa, rho >= 2, got {self}")
        if not 1 <= self.tau <= min(self.kappa, self.rho):
            raise ValueError(f"need 1 <= tau <= min(kappa, rho), got {self}")
        if ((self.kappa - 1) * (self.rho - 1)) % self.tau:
            raise ValueError(f"tau must divide (kappa-1)(rho-1), got {self}")

    def describe(self) -> str:
        return f"kappa={self.kappa};rho={self.rho};tau={self.tau}"


@dataclass(frozen=True)
class ApPencils:
    """Lines of l parallel classes of the affine plane of order q; forward rule."""

    q: int
    l: int
    name: ClassVar[str] = "ap-pencils"

    def __post_init__(self):
        if self.q < 2 or self.l < 2:
            raise ValueError(f"need q >= 2, l >= 2, got {self}")

    def describe(self) -> str:
        return f"q={self.q};l={self.l}"


@dataclass(frozen=True)
class Transversal:
    """All q parallel classes of one group splitting: the transversal design TD(q, q)."""

    q: int
    name: ClassVar[str] = "transversal"

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"need q >= 2, got {self}")

    def describe(self) -> str:
        return f"q={self.q}"


@dataclass(frozen=True)
class Partition:
    """l disjoint q-sets as blocks; forward rule."""

    q: int
    l: int
    name: ClassVar[str] = "partition"

    def __post_init__(self):
        if self.q < 1 or self.l < 3:
            raise ValueError(f"need q >= 1, l >= 3, got {self}")

    def describe(self) -> str:
        return f"q={self.q};l={self.l}"


@dataclass(frozen=True)
class PartitionSpiked:
    """Partition blocks with the extra same-block edges; t != mu."""

    q: int
    l: int
    name: ClassVar[str] = "partition-spiked"

    def __post_init__(self):
        if self.q < 1 or self.l < 3:
            raise ValueError(f"need q >= 1, l >= 3, got {self}")

    def describe(self) -> str:
        return f"q={self.q};l={self.l}"


@dataclass(frozen=True)
class AffineResolvable:
    """l parallel classes of an affine resolvable design with s blocks per
    class and non-parallel intersection m; forward rule."""

    m: int
    s: int
    l: int
    name: ClassVar[str] = "affine-resolvable"

    def __post_init__(self):
        if self.m < 1 or self.s < 2 or self.l < 2:
            raise ValueError(f"need m >= 1, s >= 2, l >= 2, got {self}")

    def describe(self) -> str:
        return f"m={self.m};s={self.s};l={self.l}"


def _check_design_tuple(spec) -> None:
    v, b, k, r, lam = spec.v_pts, spec.b_blocks, spec.k_blocksize, spec.r_replication, spec.lambda_pair
    if not v > k >= 2:
        raise ValueError(f"need v > k >= 2, got {spec}")
    if r * (k - 1) != lam * (v - 1) or b * k * (k - 1) != lam * v * (v - 1):
        raise ValueError(f"2-design identities fail for {spec}")
    if b + lam <= 2 * r:
        raise ValueError(f"need b + lambda > 2r, got {spec}")


@dataclass(frozen=True)
class TwoDesignBack:
    """Anti-flags of a 2-(v, b, k, r, lambda) design, backward rule."""

    v_pts: int
    b_blocks: int
    k_blocksize: int
    r_replication: int
    lambda_pair: int
    name: ClassVar[str] = "2design-back"

    def __post_init__(self):
        _check_design_tuple(self)

    def describe(self) -> str:
        return (f"v={self.v_pts};b={self.b_blocks};k={self.k_blocksize};"
                f"r={self.r_replication};lambda={self.lambda_pair}")


@dataclass(frozen=True)
class TwoDesignBackLoopy(TwoDesignBack):
    """Backward rule plus same-point edges between distinct blocks; t != mu."""

    name: ClassVar[str] = "2design-back-loopy"


FamilySpec = Union[Gdd, PgAntiflag, ApPencils, Transversal, Partition,
                   PartitionSpiked, AffineResolvable, TwoDesignBack,
                   TwoDesignBackLoopy]


def expected_params(spec: FamilySpec) -> DsrgParams:
    """Evaluate the family's closed-form parameter tuple exactly."""
    match spec:
        case Gdd(l=l, q=q, m=m):
            base = DsrgParams(l * q ** l * (q - 1),
                              l * q ** (l - 1) * (q - 1),
                              q ** (l - 2) * (l * q - l + 1),
                              q ** (l - 2) * (l - 1) * (q - 1),
                              q ** (l - 2) * (l * q - l + 1))
            return base.scaled(m) if m > 1 else base
        case PgAntiflag(kappa=kappa, rho=rho, tau=tau):
            ratio = (kappa - 1) * (rho - 1) // tau
            k = kappa * rho * ratio
            return DsrgParams(k * (1 + ratio), k,
                              kappa * rho - tau,
                              (kappa - 1) * (rho - 1),
                              kappa * rho - tau)
        case ApPencils(q=q, l=l):
            return DsrgParams(l * q * q * (q - 1), l * q * (q - 1),
                              l * q - l + 1, (l - 1) * (q - 1), l * q - l + 1)
        case Transversal(q=q):
            return DsrgParams(q ** 3 * (q - 1), q ** 2 * (q - 1),
                              q * q - q + 1, (q - 1) ** 2, q * q - q + 1)
        case Partition(q=q, l=l):
            return DsrgParams(q * l * (l - 1), q * (l - 1), q, 0, q)
        case PartitionSpiked(q=q, l=l):
            return DsrgParams(q * l * (l - 1), 2 * q * (l - 1) - 1,
                              q * l - 1, q * l - 2, 2 * q)
        case TwoDesignBackLoopy(v_pts=v, b_blocks=b, k_blocksize=k,
                                r_replication=r, lambda_pair=lam):
            return DsrgParams(v * (b - r),
                              k * (b - r) + (b - r - 1),
                              k * (r - lam) + (b - r - 1),
                              k * (r - lam) + (b - r - 2),
                              (k + 1) * (r - lam))
        case TwoDesignBack(v_pts=v, b_blocks=b, k_blocksize=k,
                           r_replication=r, lambda_pair=lam):
            return DsrgParams(v * (b - r), k * (b - r),
                              k * (r - lam), (k - 1) * (r - lam), k * (r - lam))
        case AffineResolvable(m=m, s=s, l=l):
            return DsrgParams(m * l * s * s * (s - 1), m * l * s * (s - 1),
                              m * (l * s - l + 1), m * (l - 1) * (s - 1),
                              m * (l * s - l + 1))
    raise TypeError(f"unknown family spec {spec!r}")


FANO_DESIGN_TUPLE = (7, 7, 3, 3, 1)


def _power_exponent(m: int, s: int) -> int | None:
    """e with m = s^e, or None."""
    e = 0
    while m > 1:
        if m % s:
            return None
        m //= s
        e += 1
    return e


def build_structure(spec: FamilySpec, block_budget: int = DEFAULT_BLOCK_BUDGET):
    """Base incidence structure of a buildable family (multiples excluded).

    pg-antiflag has no generic partial-geometry source and is formula
    only; ap-pencils needs a prime-power q with at most q+1 pencils;
    affine-resolvable needs m to be a power of s, its hyperplane-design
    source; the 2-design families are built from the 7-point plane only.
    """
    match spec:
        case Gdd(l=l, q=q):
            return build_gdd(l, q, block_budget=block_budget)
        case PgAntiflag():
            raise UnbuildableError("no generic partial-geometry construction; "
                                   "use ap-pencils or transversal")
        case ApPencils(q=q, l=l):
            if l > q + 1:
                raise UnbuildableError(f"the affine plane of order {q} has only "
                                       f"{q + 1} parallel classes, asked for {l}")
            return restrict_parallel_classes(build_affine_plane(q), l)
        case Transversal(q=q):
            return restrict_parallel_classes(build_affine_plane(q), q)
        case Partition(q=q, l=l) | PartitionSpiked(q=q, l=l):
            return build_partition_structure(q, l)
        case AffineResolvable(m=m, s=s, l=l):
            e = _power_exponent(m, s)
            if e is None:
                raise UnbuildableError(f"intersection {m} is not a power of {s}; "
                                       "no hyperplane-design source")
            design = build_hyperplane_design(s, e + 2)
            if l > len(design.parallel_classes):
                raise UnbuildableError(f"design has {len(design.parallel_classes)} "
                                       f"parallel classes, asked for {l}")
            return restrict_parallel_classes(design, l)
        case TwoDesignBack() | TwoDesignBackLoopy():
            tup = (spec.v_pts, spec.b_blocks, spec.k_blocksize,
                   spec.r_replication, spec.lambda_pair)
            if tup != FANO_DESIGN_TUPLE:
                raise UnbuildableError("only the 7-point plane is bundled "
                                       "as a 2-design source")
            return build_fano()
    raise TypeError(f"unknown family spec {spec!r}")


def build_digraph(spec: FamilySpec, block_budget: int = DEFAULT_BLOCK_BUDGET) -> Digraph:
    """Construct the family instance, or raise UnbuildableError."""
    structure = build_structure(spec, block_budget=block_budget)
    match spec:
        case Gdd(m=m):
            return duval_multiple(build_antiflag_forward(structure), m)
        case PartitionSpiked():
            return build_partition_spiked(structure)
        case TwoDesignBackLoopy():
            return build_antiflag_backward_loopy(structure)
        case TwoDesignBack():
            return build_antiflag_backward(structure)
        case _:
            return build_antiflag_forward(structure)
