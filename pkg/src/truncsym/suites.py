"""Parameterized verification suites with deterministic machine-readable reports.

Each suite sweeps a grid derived from the configuration, collects failures
with witnesses, and reports counts.  Given the same configuration and seed
the report is byte-identical apart from the ``timings`` subtree; case
ordering is canonical (sorted grids, sequential seeded draws), so the
contract holds regardless of how the suites are scheduled.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import filtration as filt
from . import monomial_box as boxes
from . import slopes as slp
from . import trunc_algebra as alg
from . import trunc_power as tp
from .fp_linalg import is_prime, rank

VERSION = "0.1.0"

ALL_SUITES = ("filtration", "growth", "koszul", "matching", "ranks", "slopes")

# Hard ceiling on the matching sweep (box counts grow fast past this).
SIGMA_LIMIT = 12
# Koszul ranks involve the full symmetric algebra; keep those grids smaller.
KOSZUL_VOLUME_LIMIT = 64
# Skip the word-level layer comparison when a pair would materialize more
# tensor entries than this (only reachable with oversized custom grids).
WORD_VOLUME_LIMIT = 1_500_000
# Coordinate-subspace sweeps are exhaustive over subsets; bound the exponent.
COORD_DIM_LIMIT = 10

_FAILURE_RECORD_LIMIT = 25


class ConfigError(ValueError):
    """Invalid suite configuration (reported before any computation)."""


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 3
    primes: tuple[int, ...] = (2, 3, 5)
    max_sigma: int = 12
    matching_n_max: int = 4
    random_subspaces_per_grade: int = 100
    seed: int = 0
    suites: tuple[str, ...] = ALL_SUITES
    volume_limit: int = 243

    def validate(self) -> None:
        problems = []
        if self.n_max < 1:
            problems.append(f"n_max must be >= 1, got {self.n_max}")
        if not self.primes:
            problems.append("primes must be non-empty")
        for p in self.primes:
            if not is_prime(p):
                problems.append(f"{p} is not prime")
        if not 0 <= self.max_sigma <= SIGMA_LIMIT:
            problems.append(f"max_sigma must be in [0, {SIGMA_LIMIT}], got {self.max_sigma}")
        if self.matching_n_max < 1:
            problems.append(f"matching_n_max must be >= 1, got {self.matching_n_max}")
        if self.random_subspaces_per_grade < 0:
            problems.append("random_subspaces_per_grade must be >= 0")
        if self.volume_limit < 2:
            problems.append("volume_limit must be >= 2")
        unknown = sorted(set(self.suites) - set(ALL_SUITES))
        if unknown:
            problems.append(f"unknown suites: {', '.join(unknown)}")
        if problems:
            raise ConfigError("; ".join(problems))


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    failures: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "cases": self.cases,
            "failures": sorted(self.failures, key=lambda f: f["case"])[:_FAILURE_RECORD_LIMIT],
            "failure_count": len(self.failures),
            "stats": self.stats,
        }


@dataclass
class Report:
    version: str
    config: dict
    passed: bool
    suites: dict
    timings: dict

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "passed": self.passed,
            "suites": self.suites,
            "timings": self.timings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


class _Collector:
    def __init__(self, name: str):
        self.result = SuiteResult(name, True, 0)

    def case(self, key: str, ok: bool, detail: str = "") -> None:
        self.result.cases += 1
        if not ok:
            self.result.passed = False
            self.result.failures.append({"case": key, "detail": detail})


def _algebra_pairs(cfg: SuiteConfig) -> list[tuple[int, int]]:
    return [
        (n, p)
        for p in sorted(set(cfg.primes))
        for n in range(1, cfg.n_max + 1)
        if p ** n <= cfg.volume_limit
    ]


def _run_ranks(cfg: SuiteConfig) -> SuiteResult:
    col = _Collector("ranks")
    table = {}
    for n, p in _algebra_pairs(cfg):
        top = n * (p - 1)
        total = 0
        for ell in range(top + 1):
            key = f"n={n} p={p} l={ell}"
            basis = tp.trunc_basis(n, p, ell)
            formula = tp.trunc_rank(n, p, ell)
            counted = boxes.box_size((p - 1,) * n, ell)
            mrank = tp.symmetrization_matrix(n, p, ell).rank()
            problems = []
            if formula != len(basis):
                problems.append(f"formula {formula} != enumeration {len(basis)}")
            if counted != len(basis):
                problems.append(f"inclusion-exclusion {counted} != enumeration {len(basis)}")
            if mrank != len(basis):
                problems.append(f"matrix rank {mrank} != enumeration {len(basis)}")
            if formula != tp.trunc_rank(n, p, top - ell):
                problems.append("mirror symmetry fails")
            if not tp.degree_weight_check(n, p, ell):
                problems.append("degree weight sums off")
            if n == 2 and tp.gl2_dim(p, ell) != formula:
                problems.append("two-variable closed form disagrees")
            col.case(key, not problems, "; ".join(problems))
            total += len(basis)
        col.case(f"n={n} p={p} total", total == p ** n,
                 f"dimensions total {total}, expected {p ** n}")
        table[f"n={n} p={p}"] = [tp.trunc_rank(n, p, ell) for ell in range(top + 1)]
    col.result.stats["rank_table"] = table
    return col.result


def _run_koszul(cfg: SuiteConfig) -> SuiteResult:
    col = _Collector("koszul")
    pairs = [(n, p) for (n, p) in _algebra_pairs(cfg) if p ** n <= KOSZUL_VOLUME_LIMIT]
    for n, p in pairs:
        # One degree beyond the top exercises the vanishing cokernel.
        for ell in range(n * (p - 1) + 2):
            verdict = tp.verify_koszul_exact(n, p, ell)
            col.case(f"n={n} p={p} l={ell}", verdict.ok, verdict.failure or "")
    col.result.stats["pairs"] = [f"n={n} p={p}" for n, p in pairs]
    return col.result


def _run_matching(cfg: SuiteConfig) -> SuiteResult:
    col = _Collector("matching")
    caps_count = 0
    boundary = 0
    for caps in boxes.iter_caps_vectors(cfg.matching_n_max, cfg.max_sigma):
        caps_count += 1
        sigma = sum(caps)
        for ell in range(sigma // 2 + 1):
            key = f"caps={','.join(map(str, caps))} l={ell}"
            try:
                m = boxes.dominance_matching(caps, ell)
            except ValueError as exc:  # pragma: no cover - construction must succeed
                col.case(key, False, f"construction raised: {exc}")
                continue
            verdict = boxes.verify_matching(m)
            oracle = boxes.hall_matching_exists(caps, ell)
            detail = []
            if not verdict.ok:
                detail.append(f"{verdict.reason} at {verdict.witness}")
            if not oracle:
                detail.append("oracle denies a matching the construction produced")
            col.case(key, verdict.ok and oracle, "; ".join(detail))
        # Above half the cap total no dominance matching can exist on the
        # (non-empty) box, and the constructor must refuse the degree.
        for ell in range(sigma // 2 + 1, sigma + 1):
            boundary += 1
            key = f"caps={','.join(map(str, caps))} l={ell} (boundary)"
            problems = []
            if boxes.hall_matching_exists(caps, ell):
                problems.append("oracle found a matching above half degree")
            try:
                boxes.dominance_matching(caps, ell)
                problems.append("construction accepted a degree above half")
            except ValueError:
                pass
            col.case(key, not problems, "; ".join(problems))
    col.result.stats["caps_vectors"] = caps_count
    col.result.stats["boundary_cases"] = boundary
    col.result.stats["matched_cases"] = col.result.cases - boundary
    return col.result


def _run_growth(cfg: SuiteConfig) -> SuiteResult:
    col = _Collector("growth")
    rng = random.Random(f"{cfg.seed}:growth")
    coordinate_cases = 0
    random_cases = 0
    for n, p in _algebra_pairs(cfg):
        top = n * (p - 1)
        for ell in range(top + 1):
            m = alg.omega_pairing_matrix(n, p, ell)
            ok = m.nrows == m.ncols and rank(m) == m.nrows
            col.case(f"pairing n={n} p={p} l={ell}", ok,
                     f"pairing matrix {m.nrows}x{m.ncols} rank {rank(m)}")
        for ell in range((top + 1) // 2, top + 1):
            dim = len(alg.grade_basis(n, p, ell))
            if dim <= COORD_DIM_LIMIT:
                for mask in range(1 << dim):
                    idxs = [i for i in range(dim) if mask >> i & 1]
                    sub = alg.GradedSubspace.coordinate(n, p, ell, idxs)
                    verdict = alg.check_upper_half_growth(sub)
                    coordinate_cases += 1
                    col.case(
                        f"coord n={n} p={p} l={ell} set={idxs}",
                        verdict.ok,
                        f"dim {verdict.dim_v} > image {verdict.image_dim}",
                    )
            for j in range(cfg.random_subspaces_per_grade):
                target_dim = rng.randint(1, dim) if dim else 0
                sub = alg.GradedSubspace.random(n, p, ell, target_dim, rng)
                verdict = alg.check_upper_half_growth(sub)
                random_cases += 1
                col.case(
                    f"random n={n} p={p} l={ell} i={j}",
                    verdict.ok,
                    f"dim {verdict.dim_v} > image {verdict.image_dim}; "
                    f"basis {sub.basis.entries}",
                )
    col.result.stats["coordinate_subspaces"] = coordinate_cases
    col.result.stats["random_subspaces"] = random_cases
    return col.result


def _run_filtration(cfg: SuiteConfig) -> SuiteResult:
    col = _Collector("filtration")
    skipped_word_checks = []
    for n, p in _algebra_pairs(cfg):
        top = n * (p - 1)
        dims = [len(filt.filtration_basis(n, p, ell)) for ell in range(top + 2)]
        for ell in range(top + 1):
            col.case(
                f"layer-dim n={n} p={p} l={ell}",
                dims[ell] - dims[ell + 1] == tp.trunc_rank(n, p, ell),
                f"{dims[ell]} - {dims[ell + 1]} != rank {tp.trunc_rank(n, p, ell)}",
            )
        for ell in range(1, top + 1):
            m = filt.graded_nabla_matrix(n, p, ell)
            col.case(
                f"graded-injective n={n} p={p} l={ell}",
                rank(m) == m.nrows,
                f"rank {rank(m)} < {m.nrows}",
            )
        volume = sum(filt.nabla_power_volume(n, p, ell) for ell in range(top + 1))
        if volume > WORD_VOLUME_LIMIT:
            skipped_word_checks.append(f"n={n} p={p} (volume {volume})")
        else:
            for ell in range(top + 1):
                wm = filt.nabla_power(n, p, ell)
                sign = (-1) ** ell % p
                bad = None
                for k, row in zip(wm.row_index, wm.rows):
                    expected = {w: sign * c % p for w, c in tp.symmetrized_tensor(k, p).items()}
                    if row != expected:
                        bad = k
                        break
                col.case(
                    f"composite n={n} p={p} l={ell}",
                    bad is None,
                    f"composite row differs from signed symmetrization at {bad}",
                )
        if n == 1:
            report = filt.curve_report(p)
            col.case(f"curve p={p}", report.ok,
                     f"entries {report.graded_entries} dims {report.ideal_dims}")
    col.result.stats["skipped_word_checks"] = skipped_word_checks
    return col.result


def _random_symmetric_profile(rng: random.Random, n: int, p: int) -> list[int]:
    top = n * (p - 1)
    full = [0] * (top + 1)
    for ell in range(top + 1):
        if 2 * ell <= top:
            full[ell] = rng.randint(0, 9)
        else:
            full[ell] = rng.randint(0, full[top - ell])
    m = rng.randint(0, top)
    profile = full[: m + 1]
    if sum(profile) == 0:
        profile[0] = 1
    return profile


def _run_slopes(cfg: SuiteConfig) -> SuiteResult:
    col = _Collector("slopes")
    rng = random.Random(f"{cfg.seed}:slopes")
    primes = sorted(set(cfg.primes))

    # Fixed closed-form anchors.
    sd = slp.make_slope_data(1, 2, 1, g=2, mu_w=0)
    col.case("anchor curve-slope", slp.pushforward_slope(sd) == Fraction(1, 2),
             f"got {slp.pushforward_slope(sd)}")
    col.case("anchor curve-gap", slp.curve_gap(2, 3, (1, 1), 2) == Fraction(1, 3),
             f"got {slp.curve_gap(2, 3, (1, 1), 2)}")
    col.case("anchor full-profile", slp.curve_gap(2, 3, (1, 1, 1), 3) == 0,
             f"got {slp.curve_gap(2, 3, (1, 1, 1), 3)}")

    for i in range(1000):
        n = rng.randint(1, cfg.n_max)
        p = rng.choice(primes)
        rk_w = rng.randint(1, 4)
        kh = Fraction(rng.randint(-6, 12), rng.randint(1, 4))
        c1 = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
        sd = slp.make_slope_data(n, p, rk_w, kh=kh, c1_wh=c1)
        mu_fw = slp.pushforward_slope(sd)
        ok = (
            p * mu_fw == Fraction(p - 1, 2) * kh + sd.mu_w
            and slp.pushforward_c1(sd) == mu_fw * slp.pushforward_rank(sd)
        )
        col.case(f"pushforward-consistency i={i}", ok,
                 f"n={n} p={p} rk={rk_w} kh={kh} c1={c1}")

    for i in range(1000):
        p = rng.choice(primes)
        g = rng.randint(0, 5)
        length = rng.randint(1, p)
        profile = [rng.randint(1, 9)]
        for _ in range(length - 1):
            profile.append(rng.randint(0, profile[-1]))
        sd = slp.make_slope_data(1, p, 1, g=g, mu_w=0)
        ok = slp.curve_gap(g, p, profile) == slp.gap_lower_bound(sd, profile)
        col.case(f"curve-agreement i={i}", ok, f"p={p} g={g} profile={profile}")

    weight_checks = 20_000
    for i in range(weight_checks):
        n = rng.randint(1, cfg.n_max)
        p = rng.choice(primes)
        profile = _random_symmetric_profile(rng, n, p)
        verdict = slp.weight_sum_check(n, p, profile)
        ok = verdict.hypothesis_ok and verdict.equal and verdict.nonnegative
        col.case(f"weight-sum i={i}", ok,
                 f"n={n} p={p} profile={profile} direct={verdict.direct} "
                 f"rearranged={verdict.rearranged}")

    for i in range(2000):
        n = rng.randint(1, cfg.n_max)
        p = rng.choice(primes)
        rk_w = rng.randint(1, 3)
        kh = Fraction(rng.randint(0, 10), rng.randint(1, 3))
        sd = slp.make_slope_data(n, p, rk_w, kh=kh, mu_w=rng.randint(-3, 3))
        profile = _random_symmetric_profile(rng, n, p)
        gap = slp.gap_lower_bound(sd, profile)
        col.case(f"gap-nonnegative i={i}", gap >= 0,
                 f"n={n} p={p} kh={kh} profile={profile} gap={gap}")

    for i in range(200):
        n = rng.randint(1, cfg.n_max)
        p = rng.choice(primes)
        rk_w = rng.randint(1, 3)
        top = n * (p - 1)
        profile = [rk_w * tp.trunc_rank(n, p, ell) for ell in range(top + 1)]
        sd = slp.make_slope_data(n, p, rk_w, kh=rng.randint(0, 8), mu_w=rng.randint(-3, 3))
        gap = slp.gap_lower_bound(sd, profile)
        diag = slp.equality_diagnosis(n, p, profile)
        col.case(f"full-profile i={i}", gap == 0 and diag.full_length and diag.symmetric,
                 f"n={n} p={p} gap={gap}")

    col.result.stats["weight_checks"] = weight_checks
    return col.result


_RUNNERS = {
    "filtration": _run_filtration,
    "growth": _run_growth,
    "koszul": _run_koszul,
    "matching": _run_matching,
    "ranks": _run_ranks,
    "slopes": _run_slopes,
}


def run_suite(config: SuiteConfig) -> Report:
    """Execute the selected suites and assemble the deterministic report."""
    config.validate()
    suites: dict = {}
    timings: dict = {}
    overall = True
    start = time.perf_counter()
    for name in sorted(set(config.suites)):
        t0 = time.perf_counter()
        result = _RUNNERS[name](config)
        timings[name] = time.perf_counter() - t0
        suites[name] = result.to_dict()
        overall = overall and result.passed
    timings["total"] = time.perf_counter() - start
    return Report(
        version=VERSION,
        config=asdict(config),
        passed=overall,
        suites=suites,
        timings=timings,
    )


def strip_timings(report_dict: dict) -> dict:
    """Report with the timing subtree removed (for determinism comparisons)."""
    out = dict(report_dict)
    out.pop("timings", None)
    return out
