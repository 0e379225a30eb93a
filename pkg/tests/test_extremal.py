from fractions import Fraction as F

import mpmath
import pytest

from polycert.certify import Verdict, check_even, check_odd
from polycert.extremal import (
    Mode,
    exact_json,
    extremal_ratios,
    numeric_coefficients,
    perturb,
    perturb_toward_interior,
    rational_instance,
    rationalize,
    summed_form,
    theorem2_polynomial,
    theorem3_polynomial,
    verify_extremal_ratios,
)
from polycert.poly import Polynomial, derivative
from polycert.roots import count_real_roots

TOL = mpmath.mpf(10) ** -45


def horner(coeffs, x):
    acc = mpmath.mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def numeric_derivative(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


class TestExamples:
    def test_even_n1(self):
        assert rational_instance(theorem2_polynomial(1)) == Polynomial([F(3, 4), F(3, 2), F(3, 4)])

    def test_even_n2_values(self):
        e = theorem2_polynomial(2, Mode.NUMERIC)
        with mpmath.workdps(60):
            r2 = mpmath.sqrt(2)
            expected = [r2 / 2, r2, r2, r2, r2 / 2]
            assert all(abs(a - b) < TOL for a, b in zip(e.coeffs, expected))

    def test_even_n2_exact_proportional(self):
        assert rational_instance(theorem2_polynomial(2)) == Polynomial([1, 2, 2, 2, 1])

    def test_even_n4_exact_proportional(self):
        assert rational_instance(theorem2_polynomial(4)) == Polynomial([1, 2, 3, 4, 4, 4, 3, 2, 1])

    def test_irrational_has_no_rational_multiple(self):
        assert rational_instance(theorem2_polynomial(3)) is None

    def test_odd_n1(self):
        e = theorem3_polynomial(1)
        assert rational_instance(e) == Polynomial([F(1, 4), F(3, 4), F(3, 4), F(1, 4)])
        b = e.b_coeffs
        assert b[2] ** 2 / (b[1] * b[3]) == 3

    def test_degrees(self):
        assert theorem2_polynomial(5).degree == 10
        assert theorem3_polynomial(5).degree == 11

    def test_invalid(self):
        with pytest.raises(ValueError):
            theorem2_polynomial(0)
        with pytest.raises(ValueError):
            theorem2_polynomial(2, Mode.NUMERIC, precision=10)
        with pytest.raises(ValueError):
            theorem2_polynomial(2, Mode.NUMERIC).polynomial()


@pytest.mark.parametrize("n", range(1, 13))
def test_numeric_roots_at_minus_one(n):
    with mpmath.workdps(60):
        q = list(theorem2_polynomial(n, Mode.NUMERIC).coeffs)
        s = list(theorem3_polynomial(n, Mode.NUMERIC).coeffs)
        dq = numeric_derivative(q)
        ds = numeric_derivative(s)
        dds = numeric_derivative(ds)
        for coeffs in (q, dq, s, ds, dds):
            assert abs(horner(coeffs, -1)) < TOL


@pytest.mark.parametrize("n", range(1, 13))
def test_numeric_ratios(n):
    assert verify_extremal_ratios(theorem2_polynomial(n, Mode.NUMERIC))
    assert verify_extremal_ratios(theorem3_polynomial(n, Mode.NUMERIC))


@pytest.mark.parametrize("n", range(1, 9))
def test_exact_ratios(n):
    assert verify_extremal_ratios(theorem2_polynomial(n))
    assert verify_extremal_ratios(theorem3_polynomial(n))


@pytest.mark.parametrize("n", [1, 2, 4])
def test_rational_ratio_values(n):
    t = {1: 4, 2: 2, 4: F(4, 3)}[n]
    assert all(r == t for r in extremal_ratios(theorem2_polynomial(n)))


@pytest.mark.parametrize("n", range(1, 7))
def test_summed_form_matches_closed_form(n):
    assert summed_form(n) == theorem2_polynomial(n).polynomial()


@pytest.mark.parametrize("n", range(1, 9))
def test_exact_agrees_with_numeric(n):
    for ctor in (theorem2_polynomial, theorem3_polynomial):
        exact = numeric_coefficients(ctor(n), 60)
        numeric = ctor(n, Mode.NUMERIC).coeffs
        with mpmath.workdps(60):
            assert all(abs(a - b) < TOL for a, b in zip(exact, numeric))


@pytest.mark.parametrize("n", range(1, 9))
def test_odd_constant_term_positive(n):
    assert theorem3_polynomial(n).coeffs[0] > 0


@pytest.mark.parametrize("n", range(1, 7))
def test_exact_root_multiplicity(n):
    even = count_real_roots(theorem2_polynomial(n).polynomial(), isolate=False)
    odd = count_real_roots(theorem3_polynomial(n).polynomial(), isolate=False)
    assert even.distinct == 1 and even.with_multiplicity >= 2
    assert odd.with_multiplicity >= 3


@pytest.mark.parametrize("n", range(1, 9))
def test_boundary_verdicts(n):
    assert check_even(theorem2_polynomial(n).polynomial()).verdict is Verdict.BOUNDARY_CASE
    assert check_odd(theorem3_polynomial(n).polynomial()).verdict is Verdict.BOUNDARY_CASE


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("eps", [F(1, 2), F(1, 10), F(1, 100), F(1, 1000)])
def test_interior_perturbation_certified(n, eps):
    p = perturb_toward_interior(theorem2_polynomial(n), eps)
    assert check_even(p).verdict is Verdict.CERTIFIED_POSITIVE


@pytest.mark.parametrize("n", [1, 2, 3])
def test_outward_perturbation_fails(n):
    p = perturb(theorem2_polynomial(n), F(-1, 10))
    assert check_even(p).verdict is Verdict.CONDITION_FAILS
    assert count_real_roots(p, isolate=False).distinct == 2


def test_perturb_range():
    e = theorem2_polynomial(1)
    for bad in (F(1), F(-1), F(3, 2)):
        with pytest.raises(ValueError):
            perturb(e, bad)
    with pytest.raises(ValueError):
        perturb_toward_interior(e, F(0))


def test_rationalize_close():
    e = theorem2_polynomial(3, Mode.NUMERIC)
    r = rationalize(e)
    assert all(c.denominator <= 10**50 for c in r.coeffs)
    with mpmath.workdps(60):
        assert all(abs(mpmath.mpf(c.numerator) / c.denominator - v) <= mpmath.mpf(10) ** -49 for c, v in zip(r.coeffs, e.coeffs))


def test_rationalized_sign_structure():
    # rounding moves the double root: either a nearby pair or none remains, never a single real root
    for n in (3, 5, 6):
        rc = count_real_roots(rationalize(theorem2_polynomial(n, Mode.NUMERIC)), isolate=False)
        assert rc.with_multiplicity in (0, 2)


def test_exact_json():
    j = exact_json(theorem2_polynomial(3))
    assert j["n"] == 3 and j["basis"] == "cos(j*pi/(n+2))" and len(j["coeffs"]) == 7
    for combo in j["coeffs"]:
        for idx, value in combo:
            assert isinstance(idx, int)
            F(value)
    with pytest.raises(ValueError):
        exact_json(theorem2_polynomial(3, Mode.NUMERIC))


def test_derivative_of_odd_is_even():
    for n in range(1, 6):
        assert derivative(theorem3_polynomial(n).polynomial()) == theorem2_polynomial(n).polynomial()
