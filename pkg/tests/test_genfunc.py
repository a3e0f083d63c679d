import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcore import formulas as fm
from dcore import genfunc as gfm
from dcore.oracle import DomainError, count
from dcore.genfunc import NoFitError, RationalGF

ints = st.integers(-9, 9)
polys = st.lists(ints, min_size=1, max_size=6)
dens = st.lists(ints, min_size=0, max_size=4).map(lambda t: [1] + t)


def test_poly_helpers():
    assert gfm.trim((1, 2, 0, 0)) == (1, 2)
    assert gfm.poly_mul((1, -1), (1, 1)) == (1, 0, -1)
    assert gfm.degree((0, 0, 3, 0)) == 2
    assert gfm.degree(()) == -1


def test_geometric_series():
    assert gfm.series_coeffs(RationalGF((1,), (1, -1)), 5) == [1, 1, 1, 1, 1]
    assert gfm.series_coeffs(RationalGF((1,), (1, -2)), 5) == [1, 2, 4, 8, 16]


@given(polys, dens)
def test_series_times_denominator_gives_numerator(num, den):
    g = RationalGF(tuple(num), tuple(den))
    n = 20
    a = gfm.series_coeffs(g, n)
    prod = [sum(g.denominator[j] * a[k - j] for j in range(min(len(g.denominator), k + 1)))
            for k in range(n)]
    assert gfm.trim(prod) == g.numerator


@given(polys, dens)
def test_fit_recovers_numerator(num, den):
    g = RationalGF(tuple(num), tuple(den))
    terms = gfm.series_coeffs(g, len(num) + len(den) + 3)
    assert gfm.fit_numerator(g.denominator, terms) == g.numerator


def test_fit_rejects_wrong_denominator():
    fib = gfm.series_coeffs(RationalGF((1,), (1, -1, -1)), 20)
    with pytest.raises(NoFitError):
        gfm.fit_numerator((1, -2), fib)


def test_denominator_must_be_monic():
    with pytest.raises(ValueError):
        RationalGF((1,), (2, 1))
    with pytest.raises(ValueError):
        gfm.fit_numerator((0, 1), [1, 2, 3])


def test_json_round_trip_big_coefficients():
    g = RationalGF((0, 10**30, -7), (1, -1, -5))
    text = g.to_json()
    assert '"1000000000000000000000000000000"' in text
    assert RationalGF.from_json(text) == g


def test_gf_d1_examples():
    assert gfm.gf_d1(1) == RationalGF((0, 1, 1), (1, -1, -1))
    assert gfm.series_coeffs(gfm.gf_d1(1), 8)[1:] == [1, 2, 3, 5, 8, 13, 21]


def test_gf_dr_example():
    g = gfm.gf_dr(2, 2)
    assert g.numerator == (0, 1, 1, 2)
    assert g.denominator == (1, -1, 0, -1)
    assert gfm.series_coeffs(g, 8)[7] == 16 == count(2, 2, 7)


def test_gf_dr_r1_is_gf_d1():
    for d in range(1, 6):
        assert gfm.gf_dr(d, 1) == gfm.gf_d1(d)


@pytest.mark.parametrize("d", range(1, 5))
def test_gf_coefficients_match_oracle(d):
    for r in range(1, d + 1):
        a = gfm.series_coeffs(gfm.gf_dr(d, r), 13)
        assert a[0] == 0
        assert a[1:] == [count(d, r, s) for s in range(1, 13)]


@given(st.integers(1, 6).flatmap(lambda d: st.tuples(st.just(d), st.integers(1, d))))
def test_reduced_equals_unreduced(dr):
    d, r = dr
    assert (gfm.series_coeffs(gfm.gf_dr(d, r), 60)
            == gfm.series_coeffs(gfm.gf_dr_unreduced(d, r), 60))


def test_h_d1_shift():
    d = 3
    h = gfm.series_coeffs(gfm.h_d1(d), 30)
    for s in range(1, 30 - d):
        assert h[s + d] == fm.n_d1_closed(d, s)


def test_gf_domain():
    with pytest.raises(DomainError):
        gfm.gf_dr(2, 3)
    with pytest.raises(DomainError):
        gfm.gf_d1(0)


def test_family_denominator():
    assert gfm.family_denominator(2, 1) == (1, -1, 0, -2)


def test_family_terms_zero_outside_domain():
    t = gfm.family_terms(1, 1, -1, 1, 5)
    assert t[0] == 0 and t[1] == 0
    assert t[2:] == [count(1, s - 1, s) for s in range(2, 5)]


@pytest.mark.parametrize("sign", [1, -1])
def test_fit_family_d1_n1(sign):
    f = gfm.fit_family(1, 1, sign, 1)
    assert f.holdout_ok
    assert f.gf.denominator == (1, -1, -2)
    # direct oracle check on terms beyond the holdout
    more = gfm.family_terms(1, 1, sign, 1, len(f.train) + len(f.holdout) + 3)
    assert gfm.series_coeffs(f.gf, len(more)) == more


def test_fit_family_ns_minus_1_matches_formula():
    f = gfm.fit_family(2, 1, -1, 1)
    a = gfm.series_coeffs(f.gf, 40)
    for s in range(2, 40):
        assert a[s] == fm.n_ns_minus_1(2, 1, s)
