"""Exact rational arithmetic for pushforward slopes and stability bounds.

Everything here is plain algebra on exact rationals: the pushforward slope
and first Chern number of a bundle under the p-power map, the slopes of the
graded layers, and the lower bound on the slope gap of a subsheaf in terms
of its rank profile and the layer instabilities.  Geometric inputs (ranks,
slopes, canonical degree, per-layer instabilities) are supplied by the
caller; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fp_linalg import is_prime
from .trunc_power import trunc_rank

Rational = Fraction | int


@dataclass(frozen=True)
class SlopeData:
    """Numeric invariants of a rank-rk_w bundle on an n-fold in char p.

    kh is the canonical degree K.H^{n-1}; mu_w = c1_wh / rk_w is the slope.
    For curves (n = 1) kh equals 2g - 2.
    """

    n: int
    p: int
    rk_w: int
    kh: Fraction
    mu_w: Fraction
    c1_wh: Fraction

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.rk_w < 1:
            raise ValueError("rank must be positive")
        if self.mu_w * self.rk_w != self.c1_wh:
            raise ValueError("mu_w must equal c1_wh / rk_w")


def make_slope_data(
    n: int,
    p: int,
    rk_w: int,
    kh: Rational | None = None,
    g: Rational | None = None,
    mu_w: Rational | None = None,
    c1_wh: Rational | None = None,
) -> SlopeData:
    """Build SlopeData from whichever of (kh | g) and (mu_w | c1_wh) is given."""
    if kh is None and g is None:
        raise ValueError("one of kh or g is required")
    if kh is not None and g is not None:
        raise ValueError("kh and g are mutually exclusive")
    if g is not None:
        if n != 1:
            raise ValueError("genus input requires n = 1")
        kh = 2 * Fraction(g) - 2
    kh = Fraction(kh)
    if mu_w is None and c1_wh is None:
        raise ValueError("one of mu_w or c1_wh is required")
    if mu_w is not None and c1_wh is not None:
        sd = SlopeData(n, p, rk_w, kh, Fraction(mu_w), Fraction(c1_wh))
    elif mu_w is not None:
        mu = Fraction(mu_w)
        sd = SlopeData(n, p, rk_w, kh, mu, mu * rk_w)
    else:
        c1 = Fraction(c1_wh)
        sd = SlopeData(n, p, rk_w, kh, Fraction(c1, rk_w), c1)
    return sd


def pushforward_rank(sd: SlopeData) -> int:
    """rk of the pushforward: p^n times the rank."""
    return sd.p ** sd.n * sd.rk_w


def pushforward_slope(sd: SlopeData) -> Fraction:
    """mu of the pushforward: ((p-1)/2 * K.H^{n-1} + mu(W)) / p."""
    return (Fraction(sd.p - 1, 2) * sd.kh + sd.mu_w) / sd.p


def pushforward_c1(sd: SlopeData) -> Fraction:
    """c1 of the pushforward against H^{n-1}:
    rk(W) (p^n - p^{n-1})/2 * K.H^{n-1} + p^{n-1} c1(W).H^{n-1}."""
    p, n = sd.p, sd.n
    return Fraction(sd.rk_w * (p ** n - p ** (n - 1)), 2) * sd.kh + p ** (n - 1) * sd.c1_wh


def graded_slope(n: int, p: int, ell: int, kh: Rational) -> Fraction:
    """Slope of the degree-ell graded layer bundle: ell * K.H^{n-1} / n."""
    if not 0 <= ell <= n * (p - 1):
        raise ValueError(f"degree {ell} outside [0, {n * (p - 1)}]")
    return Fraction(ell) * Fraction(kh) / n


def validate_profile(
    n: int,
    p: int,
    profile: Sequence[int],
    rk_w: int | None = None,
    mode: str = "symmetric",
) -> list[str]:
    """Hypothesis checks on a rank profile; returns human-readable violations.

    ``monotone`` demands non-increasing ranks (the curve situation);
    ``symmetric`` demands r_l <= r_{N-l} for l above the half degree N/2.
    Either way entries must be non-negative and fit under the layer ranks
    when rk_w is known.
    """
    if mode not in ("symmetric", "monotone"):
        raise ValueError(f"unknown profile mode {mode!r}")
    top = n * (p - 1)
    issues: list[str] = []
    if len(profile) > top + 1:
        issues.append(f"profile has {len(profile)} entries, more than {top + 1} layers")
    if any(r < 0 for r in profile):
        issues.append("profile entries must be non-negative")
        return issues
    if rk_w is not None:
        for ell, r in enumerate(profile):
            cap = rk_w * trunc_rank(n, p, ell)
            if ell <= top and r > cap:
                issues.append(f"r_{ell} = {r} exceeds layer rank {cap}")
    if mode == "monotone":
        for ell in range(1, len(profile)):
            if profile[ell] > profile[ell - 1]:
                issues.append(f"profile not non-increasing at {ell}")
                break
    else:
        full = list(profile) + [0] * (top + 1 - len(profile))
        for ell in range(top + 1):
            if 2 * ell > top and full[ell] > full[top - ell]:
                issues.append(f"r_{ell} = {full[ell]} exceeds mirror r_{top - ell} = {full[top - ell]}")
    return issues


def _weighted_sum_twice(n: int, p: int, profile: Sequence[int]) -> int:
    """2 * sum over layers of (n(p-1)/2 - l) r_l, exactly in integers."""
    top = n * (p - 1)
    return sum((top - 2 * ell) * r for ell, r in enumerate(profile))


def gap_lower_bound(
    sd: SlopeData,
    profile: Sequence[int],
    instabilities: Sequence[Rational] | None = None,
    rk_e: int | None = None,
) -> Fraction:
    """Lower bound for mu(pushforward) - mu(subsheaf) from a rank profile.

    K.H^{n-1}/(n p rk) times the weighted sum of (n(p-1)/2 - l) r_l, minus
    1/(p rk) times the instability-weighted sum of the profile.  The profile
    entries must total rk_e (the subsheaf rank).
    """
    total = sum(profile)
    if rk_e is None:
        rk_e = total
    if rk_e <= 0:
        raise ValueError("subsheaf rank must be positive")
    if total != rk_e:
        raise ValueError(f"profile sums to {total}, expected rank {rk_e}")
    if any(r < 0 for r in profile):
        raise ValueError("profile entries must be non-negative")
    top = sd.n * (sd.p - 1)
    if len(profile) > top + 1:
        raise ValueError(f"profile has {len(profile)} entries, more than {top + 1} layers")
    weight_term = Fraction(sd.kh, sd.n * sd.p * rk_e) * Fraction(_weighted_sum_twice(sd.n, sd.p, profile), 2)
    if instabilities is None:
        inst_term = Fraction(0)
    else:
        if any(Fraction(i) < 0 for i in instabilities):
            raise ValueError("instabilities must be non-negative")
        inst_term = Fraction(
            sum(r * Fraction(i) for r, i in zip(profile, instabilities)), sd.p * rk_e
        )
    return weight_term - inst_term


def curve_gap(g: Rational, p: int, profile: Sequence[int], rk_e: int | None = None) -> Fraction:
    """Curve specialization: (2g-2)/(p rk) times the sum of ((p-1)/2 - l) r_l."""
    sd = make_slope_data(1, p, 1, g=g, mu_w=0)
    return gap_lower_bound(sd, profile, None, rk_e)


@dataclass(frozen=True)
class WeightSumVerdict:
    hypothesis_ok: bool
    violations: tuple[str, ...]
    direct: Fraction
    rearranged: Fraction
    equal: bool
    nonnegative: bool


def weight_sum_check(
    n: int, p: int, profile: Sequence[int], mode: str = "symmetric"
) -> WeightSumVerdict:
    """Evaluate the weighted sum both directly and in the reflected form.

    The reflected form folds layers above the half degree onto their mirror
    images; under the symmetric (or monotone) profile hypothesis both of its
    groups are non-negative, which forces the direct sum to be non-negative.
    The two forms must agree identically for every profile.
    """
    top = n * (p - 1)
    issues = tuple(validate_profile(n, p, profile, mode=mode))
    full = {ell: (profile[ell] if ell < len(profile) else 0) for ell in range(top + 1)}
    m = len(profile) - 1

    direct2 = _weighted_sum_twice(n, p, profile)
    tail2 = sum((2 * ell - top) * full[top - ell] for ell in range(m + 1, top + 1))
    fold2 = sum(
        (2 * ell - top) * (full[top - ell] - full[ell])
        for ell in range(top + 1)
        if 2 * ell > top and ell <= m
    )
    rearranged2 = tail2 + fold2
    direct = Fraction(direct2, 2)
    rearranged = Fraction(rearranged2, 2)
    return WeightSumVerdict(
        hypothesis_ok=not issues,
        violations=issues,
        direct=direct,
        rearranged=rearranged,
        equal=direct2 == rearranged2,
        nonnegative=direct2 >= 0,
    )


@dataclass(frozen=True)
class InstabilityBound:
    """Bound on the pushforward instability; ``value`` is None when the
    canonical-degree hypothesis K.H^{n-1} >= 0 fails and no bound is asserted."""

    value: Fraction | None
    kh_nonnegative: bool


def instability_bound(sd: SlopeData, iwx: Rational) -> InstabilityBound:
    """p^{n-1} rk(W) times the maximal layer instability, when K.H^{n-1} >= 0."""
    iwx = Fraction(iwx)
    if iwx < 0:
        raise ValueError("instability must be non-negative")
    if sd.kh < 0:
        return InstabilityBound(None, False)
    return InstabilityBound(sd.p ** (sd.n - 1) * sd.rk_w * iwx, True)


@dataclass(frozen=True)
class EqualityDiagnosis:
    full_length: bool
    symmetric: bool
    asymmetric_layers: tuple[int, ...]


def equality_diagnosis(n: int, p: int, profile: Sequence[int]) -> EqualityDiagnosis:
    """Necessary conditions for a zero gap with positive canonical degree:
    the profile must reach the top layer and have mirror-symmetric ranks."""
    top = n * (p - 1)
    full = [profile[ell] if ell < len(profile) else 0 for ell in range(top + 1)]
    full_length = len(profile) == top + 1 and profile[-1] > 0
    bad = tuple(
        ell for ell in range(top + 1) if 2 * ell > top and full[ell] != full[top - ell]
    )
    return EqualityDiagnosis(full_length, not bad, bad)
