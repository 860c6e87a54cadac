"""Command-line surface: build, verify, catalog, iso, spectrum.

The catalog enumerates every bundled construction family up to a
maximum order, builds and verifies each instance (tensor multiples
included wherever t = mu), and emits a deterministic table: identical
flags give byte-identical output.  Rows whose parameters come from a
closed form with no underlying structure carry a formula-only marker
instead of a fabricated graph.

DSRG_BUDGET in the environment overrides the default block budget of
the builders and the default node budget of the isomorphism search;
explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .digraph import Digraph, verify_dsrg, duval_multiple
from .errors import DsrgError, NotFeasibleError, NotPrimePowerError
from .families import (
    AffineResolvable,
    ApPencils,
    FamilySpec,
    FANO_DESIGN_TUPLE,
    Gdd,
    Partition,
    PartitionSpiked,
    PgAntiflag,
    Transversal,
    TwoDesignBack,
    TwoDesignBackLoopy,
    build_digraph,
    build_structure,
    expected_params,
)
from .ffield import _factor_prime_power
from .incidence import DEFAULT_BLOCK_BUDGET, to_json
from .iso import BUDGET_EXCEEDED, DEFAULT_NODE_BUDGET, ISOMORPHIC, are_isomorphic
from .params import DsrgParams, Spectrum, _raw_spectrum, spectrum

FAMILY_NAMES = ("gdd", "pg-antiflag", "ap-pencils", "transversal", "partition",
                "partition-spiked", "affine-resolvable", "2design-back",
                "2design-back-loopy")

CSV_HEADER = "v,k,t,lambda,mu,family,family_params,verified,theta1,theta2,m1,m2"


@dataclass(frozen=True)
class CatalogRow:
    params: DsrgParams
    family: str
    family_params: str
    verified: bool
    spectrum: Spectrum | None
    formula_only: bool = False

    def sort_key(self):
        return (self.params.v, self.family, self.family_params)

    def marker(self) -> str:
        return (self.family_params + ";formula-only") if self.formula_only else self.family_params


def _is_prime_power(q: int) -> bool:
    try:
        _factor_prime_power(q)
        return True
    except NotPrimePowerError:
        return False


def _catalog_instances(max_order: int) -> list[tuple[FamilySpec, bool]]:
    """Deterministic instance grid; the bool marks formula-only rows."""
    out: list[tuple[FamilySpec, bool]] = []
    q = 2
    while 2 * q * q * (q - 1) <= max_order:
        l = 2
        while l * q ** l * (q - 1) <= max_order:
            out.append((Gdd(l, q), False))
            l += 1
        q += 1
    q = 2
    while 2 * q * q * (q - 1) <= max_order:
        if _is_prime_power(q):
            l = 2
            while l <= q + 1 and l * q * q * (q - 1) <= max_order:
                out.append((ApPencils(q, l), False))
                l += 1
            if q == 2:
                # the affine plane of order 2 has only 3 pencils; the closed
                # form still evaluates for l up to 8, so those go formula-only
                for l in range(4, 9):
                    if l * q * q * (q - 1) <= max_order:
                        out.append((ApPencils(q, l), True))
        q += 1
    q = 2
    while q ** 3 * (q - 1) <= max_order:
        if _is_prime_power(q):
            out.append((Transversal(q), False))
        q += 1
    for q in (1, 2, 3):
        for l in (3, 4):
            if q * l * (l - 1) <= max_order:
                out.append((Partition(q, l), False))
                out.append((PartitionSpiked(q, l), False))
    for l in range(2, 8):
        if 2 * l * 4 <= max_order:
            out.append((AffineResolvable(2, 2, l), False))
    if 28 <= max_order:
        out.append((TwoDesignBack(*FANO_DESIGN_TUPLE), False))
        out.append((TwoDesignBackLoopy(*FANO_DESIGN_TUPLE), False))
    return out


def _safe_spectrum(p: DsrgParams) -> Spectrum | None:
    try:
        return spectrum(p)
    except NotFeasibleError:
        return None


def catalog_rows(max_order: int = 110, families: tuple[str, ...] | None = None,
                 multiples: int = 13,
                 block_budget: int = DEFAULT_BLOCK_BUDGET) -> list[CatalogRow]:
    """Build, verify and tabulate every family instance with v <= max_order."""
    rows: list[CatalogRow] = []
    for spec, formula_only in _catalog_instances(max_order):
        if families is not None and spec.name not in families:
            continue
        expected = expected_params(spec)
        if formula_only:
            rows.append(CatalogRow(expected, spec.name, spec.describe(), False,
                                   _safe_spectrum(expected), formula_only=True))
            continue
        d = build_digraph(spec, block_budget=block_budget)
        got = verify_dsrg(d)
        rows.append(CatalogRow(got, spec.name, spec.describe(),
                               got == expected, _safe_spectrum(got)))
        if got.t == got.mu:
            m = 2
            while m <= multiples and m * got.v <= max_order:
                got_m = verify_dsrg(duval_multiple(d, m))
                rows.append(CatalogRow(got_m, spec.name, f"{spec.describe()};m={m}",
                                       got_m == expected.scaled(m), _safe_spectrum(got_m)))
                m += 1
    rows.sort(key=CatalogRow.sort_key)
    return rows


def render_csv(rows: list[CatalogRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        p = r.params
        s = r.spectrum
        tail = f"{s.theta1},{s.theta2},{s.m1},{s.m2}" if s else ",,,"
        lines.append(f"{p.v},{p.k},{p.t},{p.lam},{p.mu},{r.family},"
                     f"{r.marker()},{'true' if r.verified else 'false'},{tail}")
    return "\n".join(lines) + "\n"


def render_table(rows: list[CatalogRow]) -> str:
    headers = ("v", "k", "t", "lambda", "mu", "family", "family_params",
               "verified", "theta1", "theta2", "m1", "m2")
    cells = []
    for r in rows:
        p = r.params
        s = r.spectrum
        cells.append((str(p.v), str(p.k), str(p.t), str(p.lam), str(p.mu),
                      r.family, r.marker(), "yes" if r.verified else "NO",
                      str(s.theta1) if s else "-", str(s.theta2) if s else "-",
                      str(s.m1) if s else "-", str(s.m2) if s else "-"))
    widths = [max(len(h), *(len(row[i]) for row in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    def fmt(row):
        return "  ".join(val.ljust(w) for val, w in zip(row, widths)).rstrip()
    return "\n".join([fmt(headers)] + [fmt(row) for row in cells]) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _require(args: argparse.Namespace, parser: argparse.ArgumentParser,
             names: tuple[str, ...]) -> list[int]:
    values = []
    for name in names:
        attr = "lambda_" if name == "lambda" else name
        val = getattr(args, attr)
        if val is None:
            parser.error(f"--family {args.family} needs --{name}")
        values.append(val)
    return values


def _spec_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> FamilySpec:
    fam = args.family
    try:
        if fam == "gdd":
            l, q = _require(args, parser, ("l", "q"))
            return Gdd(l, q, args.m if args.m is not None else 1)
        if fam == "pg-antiflag":
            kappa, rho, tau = _require(args, parser, ("kappa", "rho", "tau"))
            return PgAntiflag(kappa, rho, tau)
        if fam == "ap-pencils":
            q, l = _require(args, parser, ("q", "l"))
            return ApPencils(q, l)
        if fam == "transversal":
            (q,) = _require(args, parser, ("q",))
            return Transversal(q)
        if fam == "partition":
            q, l = _require(args, parser, ("q", "l"))
            return Partition(q, l)
        if fam == "partition-spiked":
            q, l = _require(args, parser, ("q", "l"))
            return PartitionSpiked(q, l)
        if fam == "affine-resolvable":
            m, s, l = _require(args, parser, ("m", "s", "l"))
            return AffineResolvable(m, s, l)
        if fam in ("2design-back", "2design-back-loopy"):
            v, b, k, r, lam = _require(args, parser, ("v", "b", "k", "r", "lambda"))
            cls = TwoDesignBack if fam == "2design-back" else TwoDesignBackLoopy
            return cls(v, b, k, r, lam)
    except ValueError as exc:
        parser.error(str(exc))
    parser.error(f"unknown family {fam!r}")
    raise AssertionError  # parser.error exits


def cmd_build(args, parser) -> int:
    spec = _spec_from_args(args, parser)
    expected = expected_params(spec)
    d = build_digraph(spec, block_budget=args.block_budget)
    got = verify_dsrg(d)
    if args.out:
        Path(args.out).write_text(d.to_dgr())
    if args.edges_out:
        Path(args.edges_out).write_text(d.to_edge_list())
    if args.structure_out:
        Path(args.structure_out).write_text(
            to_json(build_structure(spec, block_budget=args.block_budget)))
    if got == expected:
        print(f"{got} verified")
        return 0
    print(f"expected {expected} but verified {got}")
    return 1


def _load_digraph(path: str) -> Digraph:
    text = Path(path).read_text()
    for line in text.splitlines():
        if line.strip():
            if len(line.split()) == 1:
                return Digraph.from_dgr(text)
            return Digraph.from_edge_list(text)
    raise DsrgError(f"{path}: empty file")


def cmd_verify(args, parser) -> int:
    d = _load_digraph(args.path)
    print(verify_dsrg(d))
    return 0


def cmd_catalog(args, parser) -> int:
    if args.max_order > 4096:
        parser.error("--max-order is capped at 4096")
    families = tuple(args.families.split(",")) if args.families else None
    if families:
        unknown = set(families) - set(FAMILY_NAMES)
        if unknown:
            parser.error(f"unknown families: {', '.join(sorted(unknown))}")
    rows = catalog_rows(max_order=args.max_order, families=families,
                        multiples=args.multiples, block_budget=args.block_budget)
    sys.stdout.write(render_table(rows))
    if args.csv:
        Path(args.csv).write_text(render_csv(rows))
    return 0 if all(r.verified or r.formula_only for r in rows) else 1


def cmd_iso(args, parser) -> int:
    d1 = _load_digraph(args.path1)
    d2 = _load_digraph(args.path2)
    result = are_isomorphic(d1, d2, budget=args.budget)
    if result.status == ISOMORPHIC:
        print("ISOMORPHIC")
        for u, v in enumerate(result.mapping):
            print(f"{u} -> {v}")
        return 0
    if result.status == BUDGET_EXCEEDED:
        print("BUDGET EXCEEDED")
        return 2
    print("NOT ISOMORPHIC")
    return 1


def cmd_spectrum(args, parser) -> int:
    try:
        s = _raw_spectrum(args.v, args.k, args.t, args.lam, args.mu)
    except NotFeasibleError as exc:
        print(f"infeasible: {exc}")
        return 1
    print(f"theta {s.theta0} {s.theta1} {s.theta2} mult {s.m0} {s.m1} {s.m2}")
    return 0


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _env_budget(default: int) -> int:
    raw = os.environ.get("DSRG_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"DSRG_BUDGET must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsrg",
        description="Build, verify and compare directed strongly regular graphs "
                    "constructed on anti-flags of finite incidence structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build one family instance")
    p_build.add_argument("--family", required=True, choices=FAMILY_NAMES)
    for flag in ("l", "q", "m", "kappa", "rho", "tau", "s", "v", "b", "k", "r"):
        p_build.add_argument(f"--{flag}", type=int)
    p_build.add_argument("--lambda", dest="lambda_", type=int)
    p_build.add_argument("--out", help="write the digraph in dgr/1 format")
    p_build.add_argument("--edges-out", help="write the digraph as an edge list")
    p_build.add_argument("--structure-out", help="write the incidence structure as JSON")
    p_build.add_argument("--block-budget", type=int,
                         default=_env_budget(DEFAULT_BLOCK_BUDGET))

    p_verify = sub.add_parser("verify", help="verify a digraph file")
    p_verify.add_argument("path")

    p_cat = sub.add_parser("catalog", help="enumerate, build and verify all families")
    p_cat.add_argument("--max-order", type=int, default=110)
    p_cat.add_argument("--families", help="comma-separated family names")
    p_cat.add_argument("--multiples", type=int, default=13,
                       help="largest tensor multiple per instance")
    p_cat.add_argument("--csv", help="also write the rows as CSV")
    p_cat.add_argument("--block-budget", type=int,
                       default=_env_budget(DEFAULT_BLOCK_BUDGET))

    p_iso = sub.add_parser("iso", help="decide isomorphism of two digraph files")
    p_iso.add_argument("path1")
    p_iso.add_argument("path2")
    p_iso.add_argument("--budget", type=int, default=_env_budget(DEFAULT_NODE_BUDGET))

    p_spec = sub.add_parser("spectrum", help="integer spectrum of a parameter tuple")
    for name in ("v", "k", "t", "lam", "mu"):
        p_spec.add_argument(name, type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"build": cmd_build, "verify": cmd_verify, "catalog": cmd_catalog,
                "iso": cmd_iso, "spectrum": cmd_spectrum}
    try:
        return handlers[args.command](args, parser)
    except DsrgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
