import random
from fractions import Fraction

import pytest

from truncsym.slopes import (
    curve_gap,
    equality_diagnosis,
    gap_lower_bound,
    graded_slope,
    instability_bound,
    make_slope_data,
    pushforward_c1,
    pushforward_rank,
    pushforward_slope,
    validate_profile,
    weight_sum_check,
)
from truncsym.trunc_power import trunc_rank


def test_slope_data_validation():
    with pytest.raises(ValueError):
        make_slope_data(1, 4, 1, kh=0, mu_w=0)  # composite characteristic
    with pytest.raises(ValueError):
        make_slope_data(0, 2, 1, kh=0, mu_w=0)
    with pytest.raises(ValueError):
        make_slope_data(1, 2, 0, kh=0, mu_w=0)
    with pytest.raises(ValueError):
        make_slope_data(1, 2, 1, mu_w=0)  # no kh or g
    with pytest.raises(ValueError):
        make_slope_data(1, 2, 1, kh=2, g=2, mu_w=0)
    with pytest.raises(ValueError):
        make_slope_data(2, 2, 1, g=2, mu_w=0)  # genus only for curves
    with pytest.raises(ValueError):
        make_slope_data(1, 2, 1, kh=0)  # no mu or c1
    with pytest.raises(ValueError):
        make_slope_data(1, 2, 2, kh=0, mu_w=1, c1_wh=3)  # inconsistent pair


def test_pushforward_examples():
    sd = make_slope_data(1, 2, 1, g=2, mu_w=0)
    assert pushforward_slope(sd) == Fraction(1, 2)
    assert pushforward_c1(sd) == 1
    assert pushforward_rank(sd) == 2

    sd = make_slope_data(2, 3, 1, kh=5, mu_w=1)
    assert pushforward_slope(sd) == 2

    sd = make_slope_data(3, 7, 2, kh=0, mu_w=Fraction(3, 4))
    assert pushforward_slope(sd) == Fraction(3, 28)

    sd = make_slope_data(2, 3, 1, kh=0, c1_wh=7)
    assert pushforward_c1(sd) == 21

    sd = make_slope_data(1, 3, 2, kh=2, c1_wh=0)
    assert pushforward_c1(sd) == 4


def test_pushforward_consistency_random():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 3)
        p = rng.choice([2, 3, 5, 7])
        rk = rng.randint(1, 5)
        kh = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        c1 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        sd = make_slope_data(n, p, rk, kh=kh, c1_wh=c1)
        mu = pushforward_slope(sd)
        assert p * mu == Fraction(p - 1, 2) * kh + sd.mu_w
        assert pushforward_c1(sd) == mu * pushforward_rank(sd)


def test_graded_slope():
    assert graded_slope(2, 3, 0, 4) == 0
    assert graded_slope(2, 3, 3, 4) == 6
    assert graded_slope(1, 3, 2, 2) == 4
    with pytest.raises(ValueError):
        graded_slope(2, 3, 5, 4)


def test_gap_examples():
    sd = make_slope_data(1, 3, 1, g=2, mu_w=0)
    assert gap_lower_bound(sd, (1, 1), rk_e=2) == Fraction(1, 3)
    # Full layer profile of the pushforward itself: palindromic, zero gap.
    full = tuple(trunc_rank(2, 3, ell) for ell in range(5))
    sd = make_slope_data(2, 3, 1, kh=7, mu_w=0)
    assert gap_lower_bound(sd, full) == 0
    # Profile supported below half degree with zero instabilities: non-negative.
    sd = make_slope_data(2, 2, 1, kh=3, mu_w=0)
    assert gap_lower_bound(sd, (2, 1)) >= 0


def test_gap_with_instabilities():
    sd = make_slope_data(1, 3, 1, g=2, mu_w=0)
    plain = gap_lower_bound(sd, (1, 1))
    damped = gap_lower_bound(sd, (1, 1), instabilities=(Fraction(1, 2), Fraction(1, 2)))
    # Instability term: (1/p) * (r_0 I_0 + r_1 I_1) / rk = (1/3) * 1 / 2.
    assert damped == plain - Fraction(1, 6)
    with pytest.raises(ValueError):
        gap_lower_bound(sd, (1, 1), instabilities=(Fraction(-1), 0))


def test_gap_validation():
    sd = make_slope_data(1, 3, 1, g=2, mu_w=0)
    with pytest.raises(ValueError):
        gap_lower_bound(sd, (1, 1), rk_e=3)
    with pytest.raises(ValueError):
        gap_lower_bound(sd, ())
    with pytest.raises(ValueError):
        gap_lower_bound(sd, (1, -1))
    with pytest.raises(ValueError):
        gap_lower_bound(sd, (1, 1, 1, 1))  # more entries than layers


def test_curve_gap_examples():
    assert curve_gap(2, 3, (1, 1), 2) == Fraction(1, 3)
    assert curve_gap(2, 3, (2, 2, 2)) == 0
    assert curve_gap(1, 5, (3, 1, 1)) == 0  # genus one kills the factor
    assert curve_gap(3, 2, (1,)) == 1


def test_curve_gap_matches_general_form():
    rng = random.Random(23)
    for _ in range(1000):
        p = rng.choice([2, 3, 5, 7])
        g = rng.randint(0, 6)
        profile = [rng.randint(1, 9)]
        for _ in range(rng.randint(0, p - 1)):
            profile.append(rng.randint(0, profile[-1]))
        sd = make_slope_data(1, p, 1, g=g, mu_w=0)
        assert curve_gap(g, p, profile) == gap_lower_bound(sd, profile)


def test_weight_sum_examples():
    v = weight_sum_check(1, 3, (1, 1, 1))
    assert v.direct == 0 and v.equal and v.nonnegative and v.hypothesis_ok
    v = weight_sum_check(1, 3, (1, 1))
    assert v.direct == 1 and v.equal and v.nonnegative
    # Profile entirely below half degree: every weight is non-negative.
    v = weight_sum_check(2, 3, (5, 3))
    assert v.nonnegative and v.equal


def test_weight_sum_rearranged_equals_direct_always():
    # The reflected form is an algebraic identity, hypothesis or not.
    rng = random.Random(5)
    for _ in range(3000):
        n = rng.randint(1, 3)
        p = rng.choice([2, 3, 5])
        top = n * (p - 1)
        profile = [rng.randint(0, 9) for _ in range(rng.randint(1, top + 1))]
        v = weight_sum_check(n, p, profile)
        assert v.equal, (n, p, profile, v)


def test_weight_sum_flags_hypothesis_violation():
    # Top layer bigger than its mirror: sum can go negative, but is computed.
    v = weight_sum_check(1, 3, (0, 0, 5))
    assert not v.hypothesis_ok
    assert v.direct == -5
    assert v.equal


def test_validate_profile_modes():
    assert validate_profile(1, 3, (2, 1, 1), mode="monotone") == []
    assert validate_profile(1, 3, (1, 2), mode="monotone") != []
    assert validate_profile(2, 2, (1, 0, 1)) == []
    assert validate_profile(2, 2, (0, 0, 1)) != []
    assert validate_profile(1, 3, (1, 1, 1, 1)) != []  # too long
    assert validate_profile(1, 3, (-1,)) != []
    with pytest.raises(ValueError):
        validate_profile(1, 3, (1,), mode="bogus")
    # Layer-rank cap bound when the ambient rank is known.
    assert validate_profile(2, 2, (1, 3, 1), rk_w=1) != []
    assert validate_profile(2, 2, (1, 2, 1), rk_w=1) == []


def test_instability_bound_examples():
    sd = make_slope_data(2, 3, 2, kh=1, mu_w=0)
    assert instability_bound(sd, Fraction(1, 2)).value == 3
    sd = make_slope_data(1, 2, 1, kh=2, mu_w=0)
    assert instability_bound(sd, 1).value == 1
    assert instability_bound(sd, 0).value == 0
    with pytest.raises(ValueError):
        instability_bound(sd, -1)


def test_instability_bound_negative_kh_omitted():
    sd = make_slope_data(2, 3, 1, kh=-2, mu_w=0)
    bound = instability_bound(sd, 1)
    assert bound.value is None and not bound.kh_nonnegative


def test_equality_diagnosis():
    full = tuple(trunc_rank(2, 3, ell) for ell in range(5))
    diag = equality_diagnosis(2, 3, full)
    assert diag.full_length and diag.symmetric and diag.asymmetric_layers == ()

    short = equality_diagnosis(2, 3, (1, 2, 3))
    assert not short.full_length and short.asymmetric_layers == (3, 4)

    skew = equality_diagnosis(2, 3, (1, 2, 3, 2, 2))
    assert skew.full_length and not skew.symmetric and skew.asymmetric_layers == (4,)


def test_symmetric_profile_gap_nonnegative():
    rng = random.Random(99)
    for _ in range(1500):
        n = rng.randint(1, 3)
        p = rng.choice([2, 3, 5])
        top = n * (p - 1)
        full = [0] * (top + 1)
        for ell in range(top + 1):
            full[ell] = rng.randint(0, 9) if 2 * ell <= top else rng.randint(0, full[top - ell])
        m = rng.randint(0, top)
        profile = full[: m + 1]
        if sum(profile) == 0:
            profile[0] = 1
        sd = make_slope_data(n, p, 3, kh=Fraction(rng.randint(0, 8), rng.randint(1, 3)),
                             mu_w=rng.randint(-3, 3))
        assert gap_lower_bound(sd, profile) >= 0, (n, p, profile)
