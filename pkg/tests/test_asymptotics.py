import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcore import asymptotics as asy
from dcore import formulas as fm
from dcore.oracle import DomainError

PHI = (1 + math.sqrt(5)) / 2


def test_w1_golden():
    assert abs(asy.find_wd(1) - (math.sqrt(5) - 1) / 2) < 1e-15


@given(st.integers(1, 2000))
def test_root_in_unit_interval(d):
    w = asy.find_wd(d)
    assert 0 < w < 1
    assert abs(asy.f_d(d, w)) < 1e-12


def test_root_decreases_toward_one_from_below():
    ws = [asy.find_wd(d) for d in range(1, 50)]
    assert all(a < b for a, b in zip(ws, ws[1:]))


def test_root_matches_polyroots():
    with mpmath.workdps(40):
        for d in (1, 2, 5, 9):
            coeffs = [1] + [0] * (d - 1) + [1, -1]
            real = [r.real for r in mpmath.polyroots(coeffs, maxsteps=200, extraprec=50)
                    if abs(r.imag) < 1e-20 and r.real > 0]
            assert len(real) == 1
            assert abs(real[0] - asy.find_wd(d)) < 1e-25


def test_family_root():
    assert abs(asy.find_wdn(1, 1) - 0.5) < 1e-20
    assert asy.find_wdn(2, 0) == pytest.approx(float(asy.find_wd(2)), abs=1e-15)
    assert abs(asy.f_dn(3, 2, asy.find_wdn(3, 2))) < 1e-12


def test_root_validation():
    with pytest.raises(DomainError):
        asy.find_wd(0)
    with pytest.raises(ValueError):
        asy.find_wd(2, tol=1e-20)


def test_approximation_bound():
    for d in range(3, 400):
        assert abs(asy.find_wd(d) - asy.wd_approx(d)) <= asy.wd_approx_bound(d)


def test_prefactor_fibonacci():
    assert abs(asy.asymptotic_constant(1, 1) - PHI / math.sqrt(5)) < 1e-12
    # F_{s+1} * w^s -> phi / sqrt(5)
    assert abs(asy.prefactor_limit(1, 1, 300) - PHI / math.sqrt(5)) < 1e-12


@pytest.mark.parametrize("d,r", [(d, r) for d in range(1, 5) for r in range(1, d + 1)])
def test_prefactor_from_counts(d, r):
    m = asy.model_r(d, r, 500)
    assert m.relative_error < 1e-6


@pytest.mark.parametrize("d", [1, 2, 3, 6])
def test_unreduced_constant_is_off_by_w(d):
    with mpmath.workdps(40):
        ratio = asy.printed_constant(d, 1) / asy.asymptotic_constant(d, 1)
        assert abs(ratio - asy.find_wd(d)) < 1e-30


def test_residue_numerically():
    # compare with a contour-free limit: (z - w) * G(z) as z -> w
    d = 2
    w = asy.find_wd(d)
    with mpmath.workdps(40):
        z = w + mpmath.mpf("1e-20")
        g = (z - z ** (d + 2)) / ((1 - z - z ** (d + 1)) * (1 - z))
        assert abs((z - w) * g - asy.residue_at(d, w)) < 1e-15


def test_estimate_formats():
    est = asy.asymptotic_estimate(1, 1, 40)
    assert est == pytest.approx(fm.n_d1_closed(1, 40), rel=1e-12)
    big = asy.asymptotic_estimate(1, 1, 5000)
    assert isinstance(big, tuple) and 1 <= big[0] < 10


def test_model_dict():
    out = asy.model_r(2, 1, 200).to_dict()
    assert set(out) == {"d", "r", "w", "K", "checked_at_s", "relative_error"}
    assert out["r"] == 1


def test_family_model_ns_minus_1():
    m = asy.model_family(1, 1, -1, 1)
    assert abs(m.w - 0.5) < 1e-20
    # 2^{s-1} * 2^{-s} = 1/2
    assert abs(m.K - 0.5) < 1e-20
