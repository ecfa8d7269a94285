"""Verification suites: batches of codes checked against every claim.

Each suite draws seed-reproducible random codes (and the structured
fixtures), runs the relevant checks, and returns a ``SuiteResult`` with
per-claim counts.  Two checks run on every code in every suite:

* the mu/rho identities d = n-k-mu+2 = n-k-rho+1 with mu = rho+1, and
* soundness of the surrogate bounds (prop1 >= d, prop2 >= k).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bounds import (
    certify_optimal,
    generalized_singleton_like_bound,
    mu_rho,
    optimal_dual_hierarchy,
    optimal_primal_hierarchy,
    prop1_bound,
    prop2_bound,
    singleton_like_bound,
)
from .code import LinearCode
from .constructions import SplitMix64, random_code, tamo_barg
from .ghw import check_wei_duality, dual_hierarchy_values, ghw_oracle, weight_hierarchy
from .locality import UncoverableCoordinateError, locality

DEFAULT_SEED = 2024
DEFAULT_COUNT = 200


@dataclass
class SuiteResult:
    name: str
    codes: int = 0
    checks: int = 0
    skipped: int = 0
    claim_counts: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def tally(self, claim: str, n: int = 1) -> None:
        self.checks += n
        self.claim_counts[claim] = self.claim_counts.get(claim, 0) + n

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = (f"{self.name}: {status} ({self.codes} codes, {self.checks} checks, "
                f"{self.skipped} skipped, {self.elapsed:.1f}s)")
        if self.claim_counts:
            parts = [f"{claim}={count}" for claim, count in
                     sorted(self.claim_counts.items())]
            line += "\n  per-claim: " + " ".join(parts)
        for f_ in self.failures:
            line += f"\n  failure: {f_}"
        for n_ in self.notes:
            line += f"\n  note: {n_}"
        return line


def _random_codes(seed: int, count: int, *, qs=(2, 3, 4), n_lo=3, n_hi=12,
                  k_top=None):
    """Deterministic stream of (label, code) pairs."""
    rng = SplitMix64(seed)
    produced = 0
    while produced < count:
        q = qs[rng.below(len(qs))]
        n = n_lo + rng.below(n_hi - n_lo + 1)
        top = min(n, k_top(q, n)) if k_top else n
        k = 1 + rng.below(top)
        code_seed = rng.next_u64()
        yield f"(q={q},n={n},k={k},seed={code_seed})", random_code(q, n, k, code_seed)
        produced += 1


def _universal_checks(label: str, code: LinearCode, d1: int,
                      dual_values, r, result: SuiteResult) -> None:
    """mu/rho identities and surrogate soundness; run on every code."""
    n, k = code.n, code.k
    try:
        mu_rho(dual_values, n, k, d1=d1)
    except RuntimeError as exc:
        result.failures.append(f"{label}: mu/rho identities: {exc}")
        return
    result.tally("prop3_mu")
    result.tally("prop4_rho")
    p1 = prop1_bound(code, dual_values, r=r)
    if d1 > p1.value or (p1.lrc_value is not None and d1 > p1.lrc_value):
        result.failures.append(f"{label}: prop1 bound {p1} below d={d1}")
    result.tally("prop1")
    p2 = prop2_bound(code, dual_values, d1, r=r)
    if k > p2.value or (p2.lrc_value is not None and k > p2.lrc_value):
        result.failures.append(f"{label}: prop2 bound {p2} below k={k}")
    result.tally("prop2")


def _fixtures() -> list[tuple[str, LinearCode]]:
    return [
        ("tamo-barg(5,4,2,1)", tamo_barg(5, 4, 2, 1)),
        ("tamo-barg(13,12,6,3)", tamo_barg(13, 12, 6, 3)),
        ("tamo-barg(13,12,5,3)", tamo_barg(13, 12, 5, 3)),
    ]


def run_duality(seed: int = DEFAULT_SEED, count: int = DEFAULT_COUNT) -> SuiteResult:
    """Both hierarchy duality identities, exact, on seeded random codes."""
    result = SuiteResult(name="duality")
    t0 = time.monotonic()
    for label, code in _random_codes(seed, count):
        result.codes += 1
        report = check_wei_duality(code)
        result.tally("duality_complement")
        result.tally("duality_gap_form")
        if not report.holds:
            result.failures.append(f"{label}: {'; '.join(report.violations)}")
            continue
        _universal_checks(label, code, report.primal[0], report.dual, None, result)
    result.elapsed = time.monotonic() - t0
    return result


def run_oracle(seed: int = DEFAULT_SEED, count: int = DEFAULT_COUNT) -> SuiteResult:
    """Subset-rank hierarchy values against the definition-level oracle."""
    result = SuiteResult(name="oracle")
    t0 = time.monotonic()

    def k_top(q: int, n: int) -> int:
        return 6 if q == 2 else 5  # keeps the subspace enumeration tractable

    for label, code in _random_codes(seed, count, qs=(2, 3), n_lo=2, n_hi=8,
                                     k_top=k_top):
        result.codes += 1
        hier = weight_hierarchy(code)
        for i in range(1, code.k + 1):
            oracle = ghw_oracle(code, i)
            result.tally("oracle_agreement")
            if hier.values[i - 1] != oracle:
                result.failures.append(
                    f"{label}: d_{i} sweep={hier.values[i - 1]} oracle={oracle}")
        _universal_checks(label, code, hier.values[0],
                          dual_hierarchy_values(code), None, result)
    result.elapsed = time.monotonic() - t0
    return result


def run_lemmas(seed: int = DEFAULT_SEED, count: int = DEFAULT_COUNT) -> SuiteResult:
    """Unconditional LRC claims on random codes with computed locality r < k,
    plus the pure-formula reductions of the hierarchy bound on a grid."""
    result = SuiteResult(name="lemmas")
    t0 = time.monotonic()

    # Formula identities, no codes involved.
    for n in range(1, 21):
        for k in range(1, n + 1):
            for r in range(1, k + 1):
                if generalized_singleton_like_bound(n, k, r, 1) != \
                        singleton_like_bound(n, k, r):
                    result.failures.append(f"thm1(i=1) != eq1 at (n={n},k={k},r={r})")
                result.tally("thm1_reduces_to_eq1")
            for i in range(1, k + 1):
                if generalized_singleton_like_bound(n, k, k, i) != n - k + i:
                    result.failures.append(f"thm1(r=k) != n-k+i at (n={n},k={k},i={i})")
                result.tally("thm1_reduces_to_eq2")

    pool = _fixtures()
    kept = 0
    attempts = 0
    stream = _random_codes(seed, count * 20, n_lo=3, n_hi=12,
                           k_top=lambda q, n: n - 1)
    while kept < count and attempts < count * 20:
        label, code = next(stream)
        attempts += 1
        try:
            prof = locality(code)
        except UncoverableCoordinateError:
            result.skipped += 1
            continue
        if prof.r >= code.k:
            result.skipped += 1
            continue
        kept += 1
        pool.append((label, code))
    result.notes.append(f"{kept} random codes passed the locality-r<k filter "
                        f"({attempts} drawn)")

    unconditional = ("eq1", "thm1", "lem1", "lem2", "lem3", "lem4")
    for label, code in pool:
        result.codes += 1
        report = certify_optimal(code)
        for claim in unconditional:
            result.tally(claim)
            if report.verdict(claim).violated:
                result.failures.append(f"{label}: {claim} violated at index "
                                       f"{report.verdict(claim).witness_index}")
        for v in report.verdicts:
            if v.violated and v.claim not in unconditional:
                result.failures.append(f"{label}: {v.claim} violated")
        _universal_checks(label, code, report.d, report.dual_hierarchy,
                          report.r, result)
    result.elapsed = time.monotonic() - t0
    return result


def run_optimal_rk(seed: int = DEFAULT_SEED, count: int = DEFAULT_COUNT) -> SuiteResult:
    """Exact-hierarchy statements on certified-optimal fixtures with r | k."""
    result = SuiteResult(name="optimal-rk")
    t0 = time.monotonic()
    fixtures = [("tamo-barg(5,4,2,1)", tamo_barg(5, 4, 2, 1), 1),
                ("tamo-barg(13,12,6,3)", tamo_barg(13, 12, 6, 3), 3),
                ("tamo-barg(16,15,8,4)", tamo_barg(16, 15, 8, 4), 4)]
    try:
        fixtures.append(("tamo-barg(?,8,4,2)", tamo_barg(9, 8, 4, 2), 2))
    except ValueError as exc:
        result.notes.append(
            f"(8,4,2) fixture unavailable: {exc}; a distance-optimal code with "
            "r | k needs (r+1) | n, so no such fixture exists")
    for label, code, r in fixtures:
        result.codes += 1
        report = certify_optimal(code)
        if not report.is_optimal:
            result.failures.append(f"{label}: did not certify distance-optimal")
            continue
        if report.r != r:
            result.failures.append(f"{label}: computed locality {report.r} != {r}")
        n, k = code.n, code.k
        expected_dual = optimal_dual_hierarchy(n, k, r)
        expected_primal = optimal_primal_hierarchy(n, k, r)
        result.tally("thm2", n - k)
        result.tally("thm3", k)
        result.tally("thm1_equality", k)
        result.tally("lem1", n - k)
        if report.dual_hierarchy != expected_dual:
            result.failures.append(f"{label}: dual hierarchy {report.dual_hierarchy} "
                                   f"!= closed form {expected_dual}")
        if report.primal_hierarchy != expected_primal:
            result.failures.append(f"{label}: hierarchy {report.primal_hierarchy} "
                                   f"!= closed form {expected_primal}")
        for i in range(1, k + 1):
            if report.primal_hierarchy[i - 1] != \
                    generalized_singleton_like_bound(n, k, r, i):
                result.failures.append(f"{label}: d_{i} does not attain the "
                                       "generalized bound")
        for v in report.verdicts:
            if v.violated:
                result.failures.append(f"{label}: {v.claim} violated")
        _universal_checks(label, code, report.d, report.dual_hierarchy,
                          report.r, result)
    result.elapsed = time.monotonic() - t0
    return result


def run_optimal_rnk(seed: int = DEFAULT_SEED, count: int = DEFAULT_COUNT) -> SuiteResult:
    """Lower-bound statements on certified-optimal fixtures with r not
    dividing k; certification failure marks the fixture unavailable and
    fails the suite."""
    result = SuiteResult(name="optimal-rnk")
    t0 = time.monotonic()
    fixtures = [("tamo-barg(13,12,5,3)", tamo_barg(13, 12, 5, 3), 3, 7),
                ("tamo-barg(13,12,7,3)", tamo_barg(13, 12, 7, 3), 3, 4),
                ("tamo-barg(16,15,9,4)", tamo_barg(16, 15, 9, 4), 4, 5)]
    for label, code, r, expected_d in fixtures:
        result.codes += 1
        report = certify_optimal(code)
        if not report.is_optimal:
            result.failures.append(f"{label}: fixture unavailable - did not "
                                   "certify distance-optimal")
            continue
        n, k = code.n, code.k
        if report.d != expected_d:
            result.failures.append(f"{label}: d={report.d} != {expected_d} "
                                   "from the distance bound")
        if report.r != r:
            result.failures.append(f"{label}: computed locality {report.r} != {r}")
        for claim in ("lem5", "lem6", "thm4"):
            result.tally(claim)
            if report.verdict(claim).status != "holds":
                result.failures.append(f"{label}: {claim} "
                                       f"{report.verdict(claim).status}")
        # Second branch of the dual lower bound is an equality.
        t_ceil = -(-k // r)
        for i in range(t_ceil, n - k + 1):
            result.tally("lem5_second_branch_exact")
            if report.dual_hierarchy[i - 1] != k + i:
                result.failures.append(f"{label}: dual d_{i} != k+i")
        _universal_checks(label, code, report.d, report.dual_hierarchy,
                          report.r, result)
    result.elapsed = time.monotonic() - t0
    return result


def run_props(seed: int = DEFAULT_SEED, count: int = DEFAULT_COUNT) -> SuiteResult:
    """mu/rho identities and surrogate-bound soundness, plus tightness of
    both surrogate bounds on the (12,6,3) fixture."""
    result = SuiteResult(name="props")
    t0 = time.monotonic()
    pool = _fixtures()
    pool.extend(_random_codes(seed + 1, max(count // 4, 40)))
    for label, code in pool:
        result.codes += 1
        hier = weight_hierarchy(code)
        dual_values = dual_hierarchy_values(code)
        _universal_checks(label, code, hier.values[0], dual_values, None, result)

    code = tamo_barg(13, 12, 6, 3)
    dual_values = dual_hierarchy_values(code)
    d1 = weight_hierarchy(code).values[0]
    p1 = prop1_bound(code, dual_values, r=3)
    p2 = prop2_bound(code, dual_values, d1, r=3)
    result.tally("prop1_tight_on_fixture")
    result.tally("prop2_tight_on_fixture")
    if not (p1.value == d1 == 6 and p1.lrc_value == 6):
        result.failures.append(f"(12,6,3): prop1 not tight: {p1} vs d={d1}")
    if not (p2.value == code.k == 6 and p2.lrc_value == 6):
        result.failures.append(f"(12,6,3): prop2 not tight: {p2} vs k={code.k}")
    result.elapsed = time.monotonic() - t0
    return result


SUITES = {
    "duality": run_duality,
    "lemmas": run_lemmas,
    "optimal-rk": run_optimal_rk,
    "optimal-rnk": run_optimal_rnk,
    "props": run_props,
    "oracle": run_oracle,
}


def run_suite(name: str, seed: int = DEFAULT_SEED,
              count: int = DEFAULT_COUNT) -> list[SuiteResult]:
    if name == "all":
        return [fn(seed, count) for fn in SUITES.values()]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join([*SUITES, 'all'])}")
    return [SUITES[name](seed, count)]
