from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fractions
from polycert.certify import conditions
from polycert.certify import (
    Condition,
    InternalInconsistencyError,
    Relation,
    Verdict,
    check_even,
    check_hutchinson,
    check_odd,
)
from polycert.poly import Polynomial, parse
from polycert.roots import count_real_roots
from polycert.sampling import even_certifiable, make_rng, odd_certifiable


class TestEven:
    def test_certified(self):
        r = check_even(parse("1, 1, 1"))
        assert r.verdict is Verdict.CERTIFIED_POSITIVE
        assert r.condition is Condition.EVEN
        assert [c.ratio for c in r.per_index_comparisons] == [1]
        assert r.leading_minors == (1, F(3, 4))

    def test_boundary_rational(self):
        r = check_even(parse("3/4, 3/2, 3/4"))
        assert r.verdict is Verdict.BOUNDARY_CASE
        assert r.per_index_comparisons[0].relation is Relation.EQUAL
        assert r.leading_minors == (F(3, 4), 0)

    def test_fails(self):
        r = check_even(parse("1, 3, 1"))
        assert r.verdict is Verdict.CONDITION_FAILS
        assert r.message == "condition not satisfied"

    def test_n2_boundary(self):
        assert check_even(parse("1, 2, 2, 2, 1")).verdict is Verdict.BOUNDARY_CASE

    def test_mixed_equal_and_above_fails(self):
        # first ratio equals 2, second exceeds it
        assert check_even(parse("1, 2, 2, 3, 1")).verdict is Verdict.CONDITION_FAILS

    def test_constant(self):
        r = check_even(parse("5"))
        assert r.verdict is Verdict.CERTIFIED_POSITIVE and r.leading_minors == ()

    def test_errors(self):
        with pytest.raises(ValueError, match="even degree"):
            check_even(parse("1, 1, 1, 1"))
        with pytest.raises(ValueError, match="nonpositive coefficient at index 2"):
            check_even(parse("1, 1, -1/2, 1, 1"))

    def test_internal_guard(self, monkeypatch):
        # a broken comparison certifies (1, 3, 1), whose form is indefinite
        monkeypatch.setattr(conditions, "compare_ratio", lambda r, t: Relation.BELOW)
        with pytest.raises(InternalInconsistencyError):
            check_even(parse("1, 3, 1"))

    def test_json(self):
        j = check_even(parse("1, 1, 1")).to_json()
        assert j == {
            "degree": 2,
            "condition": "EvenTheorem1",
            "comparisons": [{"k": 0, "ratio": "1", "relation": "Below"}],
            "minors": ["1", "3/4"],
            "verdict": "CertifiedPositive",
        }


class TestOdd:
    def test_fails(self):
        r = check_odd(parse("1, 1, 4, 1"))
        assert [c.ratio for c in r.per_index_comparisons] == [16]
        assert r.verdict is Verdict.CONDITION_FAILS

    def test_hutchinson_failure_example_is_odd_certified(self):
        assert check_odd(parse("1, 4, 8, 8")).verdict is Verdict.CERTIFIED_ONE_REAL_ZERO

    def test_certified(self):
        r = check_odd(parse("1, 1, 1, 1"))
        assert r.verdict is Verdict.CERTIFIED_ONE_REAL_ZERO
        assert r.condition is Condition.ODD
        # minors come from the form of P' = 1 + 2x + 3x^2
        assert r.leading_minors == (1, 2)

    def test_boundary(self):
        r = check_odd(parse("1/4, 3/4, 3/4, 1/4"))
        assert r.per_index_comparisons[0].ratio == 3
        assert r.verdict is Verdict.BOUNDARY_CASE

    def test_errors(self):
        with pytest.raises(ValueError, match="odd degree"):
            check_odd(parse("1, 1, 1"))
        with pytest.raises(ValueError):
            check_odd(parse("1, 1"))


class TestHutchinson:
    def test_equal_is_certified(self):
        r = check_hutchinson(parse("1, 2, 1"))
        assert r.per_index_comparisons[0].relation is Relation.EQUAL
        assert r.verdict is Verdict.CERTIFIED_ALL_REAL_ZEROS

    def test_fails(self):
        assert check_hutchinson(parse("1, 1, 1")).verdict is Verdict.CONDITION_FAILS

    def test_both_ratios_two(self):
        r = check_hutchinson(parse("1, 4, 8, 8"))
        assert [c.ratio for c in r.per_index_comparisons] == [2, 2]
        assert r.verdict is Verdict.CONDITION_FAILS

    def test_all_real(self):
        p = parse("1, 10, 20, 10")
        assert check_hutchinson(p).verdict is Verdict.CERTIFIED_ALL_REAL_ZEROS
        assert count_real_roots(p).with_multiplicity == 3


def positive_poly(degree_pred):
    return st.lists(fractions(positive=True), min_size=2, max_size=13).filter(lambda c: degree_pred(len(c) - 1)).map(
        Polynomial
    )


@settings(max_examples=80, deadline=None)
@given(positive_poly(lambda d: d % 2 == 0), fractions(positive=True), fractions(positive=True))
def test_scaling_invariance(p, lam, mu):
    scaled = Polynomial(lam * mu**k * c for k, c in enumerate(p.coeffs))
    a, b = check_even(p), check_even(scaled)
    assert a.verdict is b.verdict
    assert [c.ratio for c in a.per_index_comparisons] == [c.ratio for c in b.per_index_comparisons]


@settings(max_examples=80, deadline=None)
@given(positive_poly(lambda d: d % 2 == 0))
def test_certified_implies_positive(p):
    r = check_even(p)
    if r.verdict is Verdict.CERTIFIED_POSITIVE:
        assert all(m > 0 for m in r.leading_minors)
        assert count_real_roots(p, isolate=False).distinct == 0


@settings(max_examples=60, deadline=None)
@given(positive_poly(lambda d: d % 2 == 1 and d >= 3))
def test_certified_implies_one_zero(p):
    if check_odd(p).verdict is Verdict.CERTIFIED_ONE_REAL_ZERO:
        assert count_real_roots(p, isolate=False).with_multiplicity == 1


@settings(max_examples=60, deadline=None)
@given(positive_poly(lambda d: d >= 2))
def test_hutchinson_soundness(p):
    if check_hutchinson(p).verdict is Verdict.CERTIFIED_ALL_REAL_ZEROS:
        assert count_real_roots(p, isolate=False).with_multiplicity == p.deg


@pytest.mark.parametrize("n", range(1, 7))
def test_sampled_instances_certified(n):
    rng = make_rng(n)
    for _ in range(10):
        assert check_even(even_certifiable(rng, n)).verdict is Verdict.CERTIFIED_POSITIVE
        assert check_odd(odd_certifiable(rng, n)).verdict is Verdict.CERTIFIED_ONE_REAL_ZERO


def test_boundary_has_equal_and_no_above():
    for text in ("3/4, 3/2, 3/4", "1, 2, 2, 2, 1", "1/4, 3/4, 3/4, 1/4"):
        p = parse(text)
        r = check_even(p) if p.deg % 2 == 0 else check_odd(p)
        rels = {c.relation for c in r.per_index_comparisons}
        assert Relation.EQUAL in rels and Relation.ABOVE not in rels
