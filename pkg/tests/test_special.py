import math

import pytest

from sumset_density.special import (
    SpecialValue,
    beta_ref,
    big_f,
    lambda_k,
    predicted_density,
    solve_c,
    zeta_ref,
)

# 25-digit references computed once with mpmath at 40 digits
GAMMA_INV_K = {
    1: 1.0,
    2: 1.772453850905516027298167,
    3: 2.678938534707747633655693,
    4: 3.625609908221908311930685,
    5: 4.590843711998803053204758,
    6: 5.566316001780235204250097,
    7: 6.548062940247824437714093,
    8: 7.53394159879761190469923,
    9: 8.522688139219475950514392,
    10: 9.513507698668731836292487,
    11: 10.505874856078685191895,
    12: 11.49942818607399066388561,
}


def test_lambda_k_baselines():
    assert abs(lambda_k(1).value - 1.0) == 0.0
    assert abs(lambda_k(2).value - math.pi / 2) < 1e-12
    assert abs(lambda_k(3).value - 3.204328242099282) < 1e-12
    assert abs(lambda_k(4).value - 7.199677752652512) < 1e-11


def test_lambda_k_against_gamma_table():
    for k, g in GAMMA_INV_K.items():
        expected = g ** k / math.factorial(k)
        assert abs(lambda_k(k).value - expected) <= 1e-10 * expected


def test_error_bounds_are_honest():
    for sv, truth in [
        (beta_ref(0.5, 0.5), math.pi),
        (beta_ref(1.0, 1.0), 1.0),
        (zeta_ref(2.0), math.pi ** 2 / 6),
        (lambda_k(2), math.pi / 2),
    ]:
        assert isinstance(sv, SpecialValue)
        assert sv.abs_error_bound >= 0
        assert abs(sv.value - truth) <= sv.abs_error_bound + 1e-15 * abs(truth)
        assert sv.abs_error_bound < 1e-10


def test_beta_zeta_domains():
    with pytest.raises(ValueError):
        beta_ref(0.0, 1.0)
    with pytest.raises(ValueError):
        zeta_ref(1.0)


def test_big_f_at_zero_is_support_length():
    for k in range(1, 6):
        assert abs(big_f(k, 0.0) - k / (k + 1)) < 1e-10


def test_big_f_monotone_decreasing_and_vanishing():
    vals = [big_f(2, c) for c in (0.0, 0.5, 1.0, 2.0, 4.0)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    # large-c tail: f_2 vanishes linearly at both support ends with unit
    # slope, so F_2(c) ~ 2 / (c^2 * lambda_2) = 1/(100 pi) at c = 20
    assert abs(big_f(2, 20.0) - 1 / (100 * math.pi)) < 1e-6
    assert big_f(2, 80.0) < big_f(2, 20.0) / 10


def test_big_f_small_c_expansion():
    # F_2(c) ~ 2/3 - (pi/2) c^2 * integral(f_2) + O(c^4) with integral 1/9
    c = 0.05
    first_order = 2 / 3 - (math.pi / 2) * c * c / 9
    assert abs(big_f(2, c) - first_order) < 0.1 * (math.pi / 2) * c * c / 9


def test_big_f_against_quadrature_free_oracle():
    # brute Riemann sum on the exact rational evaluator
    from fractions import Fraction

    from sumset_density.piecewise import f_family

    f2 = f_family(2)[-1]
    lam = lambda_k(2).value
    c = 1.3
    n = 4000
    acc = 0.0
    for i in range(n):
        t = Fraction(2, 3) * Fraction(2 * i + 1, 2 * n)
        acc += math.exp(-(c ** 2) * lam * float(f2.evaluate(t)))
    acc *= (2 / 3) / n
    assert abs(big_f(2, c) - acc) < 1e-5


def test_solve_c_round_trip():
    target = big_f(2, 1.0)
    c = solve_c(2, target, tol=1e-10)
    assert abs(c - 1.0) <= 1e-9
    assert abs(big_f(2, c) - target) <= 2e-10


def test_solve_c_rejects_out_of_range():
    with pytest.raises(ValueError):
        solve_c(2, 2 / 3)
    with pytest.raises(ValueError):
        solve_c(2, 0.0)


def test_predicted_density_consistency():
    k, c = 2, 1.0
    assert abs(predicted_density(k, c) - (2 / 3 - big_f(2, 1.0))) < 1e-14
