"""Exact integer arithmetic on DSRG parameter tuples.

A (v, k, t, lambda, mu) tuple is admissible only if it satisfies the
basic identities every directed strongly regular graph obeys; the
spectrum of such a graph has three integer eigenvalues k, (lam-mu+d)/2
and (lam-mu-d)/2 with d = sqrt((mu-lam)^2 + 4(t-mu)), and integer
nonnegative multiplicities.  Everything here is computed exactly in
Python integers; there is no floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotFeasibleError


@dataclass(frozen=True)
class DsrgParams:
    """Validated DSRG parameter tuple (v, k, t, lam, mu)."""

    v: int
    k: int
    t: int
    lam: int
    mu: int

    def __post_init__(self):
        v, k, t, lam, mu = self.v, self.k, self.t, self.lam, self.mu
        if min(v, k, t, lam, mu) < 0:
            raise ValueError(f"negative entry in {self.tuple()}")
        if not 0 <= t <= k < v:
            raise ValueError(f"need 0 <= t <= k < v, got {self.tuple()}")
        if lam >= k:
            raise ValueError(f"need lambda < k, got {self.tuple()}")
        if k * (k + mu - lam) != t + (v - 1) * mu:
            raise ValueError(f"degree identity fails for {self.tuple()}")

    def tuple(self) -> tuple[int, int, int, int, int]:
        return (self.v, self.k, self.t, self.lam, self.mu)

    def scaled(self, m: int) -> "DsrgParams":
        """Coordinatewise multiple; valid whenever t = mu and m >= 1."""
        return DsrgParams(m * self.v, m * self.k, m * self.t, m * self.lam, m * self.mu)

    def __str__(self) -> str:
        return f"({self.v}, {self.k}, {self.t}, {self.lam}, {self.mu})"


@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalues theta0 > theta1 > theta2 with multiplicities 1, m1, m2."""

    theta0: int
    theta1: int
    theta2: int
    delta: int
    m0: int
    m1: int
    m2: int

    def __post_init__(self):
        if self.m0 != 1:
            raise ValueError("theta0 = k always has multiplicity 1")
        if self.theta1 <= self.theta2:
            raise ValueError("need theta1 > theta2")
        if self.delta <= 0:
            raise ValueError("delta must be positive")
        if self.theta0 + self.theta1 * self.m1 + self.theta2 * self.m2 != 0:
            raise ValueError("trace of the adjacency matrix must vanish")


def _raw_spectrum(v: int, k: int, t: int, lam: int, mu: int) -> Spectrum:
    disc = (mu - lam) ** 2 + 4 * (t - mu)
    if disc <= 0:
        raise NotFeasibleError("delta_not_integer", f"delta^2={disc}")
    delta = math.isqrt(disc)
    if delta * delta != disc:
        raise NotFeasibleError("delta_not_integer", f"delta^2={disc}")
    if (lam - mu + delta) % 2:
        raise NotFeasibleError("halves_not_integer",
                               f"(lambda-mu+delta)/2 = {(lam - mu + delta)}/2 is not integral")
    theta1 = (lam - mu + delta) // 2
    theta2 = (lam - mu - delta) // 2
    for num, sign in ((k + theta2 * (v - 1), -1), (k + theta1 * (v - 1), 1)):
        if num % delta:
            raise NotFeasibleError("multiplicity_not_integer",
                                   f"multiplicity {sign * num}/{delta} is not integral")
    m1 = -(k + theta2 * (v - 1)) // delta
    m2 = (k + theta1 * (v - 1)) // delta
    if m1 < 0 or m2 < 0:
        raise NotFeasibleError("multiplicity_negative",
                               f"multiplicities ({m1}, {m2}) must be nonnegative")
    return Spectrum(k, theta1, theta2, delta, 1, m1, m2)


def spectrum(p: DsrgParams) -> Spectrum:
    """Exact integer spectrum of a DSRG parameter tuple.

    Raises NotFeasibleError with reason delta_not_integer,
    halves_not_integer, multiplicity_not_integer or
    multiplicity_negative when no integer spectrum exists.
    """
    s = _raw_spectrum(p.v, p.k, p.t, p.lam, p.mu)
    assert s.m0 + s.m1 + s.m2 == p.v
    return s


@dataclass(frozen=True)
class FeasibilityCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of every necessary-condition check on a raw parameter tuple.

    Passing all checks never claims a graph exists; failing any one
    proves it does not.
    """

    params: tuple[int, int, int, int, int]
    checks: tuple[FeasibilityCheck, ...]
    spectrum: Spectrum | None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> FeasibilityCheck | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None


def feasibility(v: int, k: int, t: int, lam: int, mu: int) -> FeasibilityReport:
    """Run all parameter invariants plus spectrum integrality on a raw tuple."""
    checks: list[FeasibilityCheck] = []
    spec: Spectrum | None = None
    try:
        spec = _raw_spectrum(v, k, t, lam, mu)
        checks.append(FeasibilityCheck("integer_spectrum", True,
                                       f"theta=({spec.theta0},{spec.theta1},{spec.theta2}) "
                                       f"mult=({spec.m0},{spec.m1},{spec.m2})"))
    except NotFeasibleError as exc:
        checks.append(FeasibilityCheck("integer_spectrum", False,
                                       f"{exc.reason}: {exc}"))
    checks.append(FeasibilityCheck(
        "nonnegative", min(v, k, t, lam, mu) >= 0, f"entries {(v, k, t, lam, mu)}"))
    checks.append(FeasibilityCheck(
        "degree_bounds", 0 <= t <= k < v, f"need 0 <= t={t} <= k={k} < v={v}"))
    checks.append(FeasibilityCheck(
        "lambda_below_k", lam < k, f"need lambda={lam} < k={k}"))
    lhs, rhs = k * (k + mu - lam), t + (v - 1) * mu
    checks.append(FeasibilityCheck(
        "degree_identity", lhs == rhs, f"k(k+mu-lambda)={lhs} vs t+(v-1)mu={rhs}"))
    return FeasibilityReport((v, k, t, lam, mu), tuple(checks), spec)
