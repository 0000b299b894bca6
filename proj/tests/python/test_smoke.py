import math

import pytest

import harris


def test_pmf_values():
    assert harris.pmf(50, 5, 1) == pytest.approx(0.457305, abs=5e-7)
    assert harris.pmf(2, 2, 1) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert harris.pmf(2, 2, 2) == 0.0
    assert harris.pmf(2, 2, 0, variant="h0") == pytest.approx(1 / math.sqrt(2), abs=1e-15)


def test_table_sums_towards_one():
    rows = harris.pmf_table(2, 1, 400)
    assert rows[0][0] == 1
    assert rows[1][0] == 2
    assert sum(p for _, p in rows) == pytest.approx(1.0, abs=1e-12)


def test_cdf_and_quantile_agree():
    for u in (0.01, 0.3, 0.5, 0.9, 0.999):
        x = harris.quantile(4, 3, u)
        assert harris.cdf(4, 3, x) >= u
        assert harris.cdf(4, 3, x - 3) < u


def test_pgf_closed_form():
    s = 0.5
    assert harris.pgf(2, 2, s) == pytest.approx(s / math.sqrt(2 - s * s), abs=1e-15)


def test_moments():
    mo = harris.moments(3, 2)
    assert mo["mean"] == pytest.approx(1 + (3 - 1) * 1, rel=1e-12)
    assert mo["variance"] == pytest.approx(2 * 3 * (3 - 1), rel=1e-12)


def test_sampling_is_reproducible():
    a = harris.sample(2, 2, 1000, seed=5)
    b = harris.sample(2, 2, 1000, seed=5)
    c = harris.sample(2, 2, 1000, seed=5, stream=1)
    assert a == b
    assert a != c
    assert all((x - 1) % 2 == 0 for x in a)


def test_fit_recovers_parameters():
    draws = harris.sample(2, 2, 5000, seed=11)
    fit = harris.fit(draws)
    assert fit["method"] == "mle"
    assert fit["m_hat"] == pytest.approx(2, abs=0.15)
    assert fit["k_hat"] == pytest.approx(2, abs=0.3)
    mom = harris.fit(draws, method="moments")
    assert "iterations" not in mom


def test_errors_carry_a_code():
    with pytest.raises(harris.HarrisError) as info:
        harris.fit([5, 5, 5])
    assert info.value.code == "degenerate_sample"
    with pytest.raises(harris.HarrisError):
        harris.pmf(1.0, 2, 1)
    with pytest.raises(ValueError):
        harris.sample(2, 2, 10, sampler="magic")


def test_stability_checks():
    ok, min_coef, _ = harris.id_check(3, 2, 5)
    assert ok and min_coef >= -1e-9
    ok, _, witness = harris.sd_check(3, 2, 0.5, variant="h1")
    assert not ok and witness
    assert harris.gamma_harris_identity(2, 1, 2, [0.1, 1, 10]) <= 1e-12
