"""Density families: construction, normalization, shape reports, reflection."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscilla import ParameterError, make_density, parse_density, reflect

_PARAM = st.floats(min_value=0.2, max_value=5.0,
                   allow_nan=False, allow_infinity=False)


def test_beta_pointwise_values():
    # beta(alpha, beta) puts beta-1 on the power of t and alpha-1 on 1-t
    d = make_density("beta", (2, 1))
    assert d(0.25) == pytest.approx(2 * 0.75, rel=1e-14)
    d = make_density("beta", (1, 2))
    assert d(0.25) == pytest.approx(2 * 0.25, rel=1e-14)
    d = make_density("beta", (3, 1))
    assert d(0.5) == pytest.approx(3 * 0.25, rel=1e-14)
    d = make_density("beta", (1, 3))
    assert d(0.5) == pytest.approx(3 * 0.25, rel=1e-14)


def test_beta_moments():
    d = make_density("beta", (0.5, 2))
    assert d.moment0 == pytest.approx(1.0, abs=1e-12)
    assert d.moment1 == pytest.approx(2 / 2.5, abs=1e-12)
    d = make_density("beta", (3, 1.5))
    assert d.moment0 == pytest.approx(1.0, abs=1e-12)
    assert d.moment1 == pytest.approx(1.5 / 4.5, abs=1e-12)


def test_named_families_pointwise():
    k = make_density("kuttner", (2, 1))
    assert k(0.5) == pytest.approx(0.75, rel=1e-14)
    g = make_density("gegenbauer", (1.0,))
    assert g(0.6) == pytest.approx(math.sqrt(1 - 0.36), rel=1e-14)
    p = make_density("power", (0.5,))
    assert p(0.25) == pytest.approx(2.0, rel=1e-14)
    q = make_density("quadratic", (1, 0.5))
    assert q(0.5) == pytest.approx(1 - 0.125, rel=1e-14)
    u = make_density("uniform")
    assert u(0.123) == 1.0


def test_singularity_flags():
    assert make_density("beta", (0.5, 2)).singular_at_1
    assert not make_density("beta", (0.5, 2)).singular_at_0
    assert make_density("beta", (2, 0.5)).singular_at_0
    assert make_density("power", (0.5,)).singular_at_0
    assert make_density("gegenbauer", (0.0,)).singular_at_1
    assert not make_density("kuttner", (2, 1)).singular_at_0


def test_shape_reports_beta():
    s = make_density("beta", (1, 3)).shape
    assert s.is_increasing() and s.is_convex_weak()
    assert s.f_at_0 == 0.0
    assert s.general_case

    s = make_density("beta", (3, 1)).shape
    assert s.is_decreasing() and s.is_convex_weak()
    assert s.f_at_1 == 0.0

    # t (1-t)^(-1/2) has derivative (1 - t/2)(1-t)^(-3/2) > 0 on (0, 1)
    s = make_density("beta", (0.5, 2)).shape
    assert s.monotonicity == "increasing"

    s = make_density("beta", (1.5, 1)).shape
    assert s.monotonicity == "decreasing" and s.is_concave_weak()

    s = make_density("uniform").shape
    assert s.is_constant
    assert s.is_increasing() and s.is_decreasing()


def test_affine_densities_are_exceptional_for_derivative():
    # the three affine cases have constant derivative, a step function
    for params in ((1, 1), (2, 1), (1, 2)):
        s = make_density("beta", params).shape
        assert not s.deriv_general_case
    assert make_density("beta", (1, 3)).shape.deriv_general_case


def test_quadratic_derivative_shape():
    s = make_density("quadratic", (1, 0.5)).shape
    assert s.monotonicity == "decreasing"
    ds = s.deriv_shape
    assert ds is not None
    assert ds.is_increasing() and ds.is_convex_weak()
    assert s.neg_deriv_at_0 == 0.0


def test_piecewise_density_is_exceptional():
    d = make_density("piecewise", (0.5, 1.0, 1.0, 2.0))
    assert d(0.25) == 1.0 and d(0.75) == 2.0
    assert not d.shape.general_case
    assert 0.5 in d.breakpoints


def test_reflect_swaps_beta_parameters():
    d = make_density("beta", (0.5, 2))
    r = reflect(d)
    assert r.family == "beta" and r.params == (2, 0.5)
    assert r.singular_at_0 and not r.singular_at_1
    assert reflect(r).params == (0.5, 2)


@settings(max_examples=60, deadline=None)
@given(a=_PARAM, b=_PARAM, t=st.floats(min_value=0.05, max_value=0.95))
def test_reflect_pointwise(a, b, t):
    d = make_density("beta", (a, b))
    r = reflect(d)
    assert r(t) == pytest.approx(d(1 - t), rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(a=_PARAM, b=_PARAM)
def test_reflect_swaps_shape(a, b):
    d = make_density("beta", (a, b))
    r = reflect(d)
    assert d.shape.is_increasing() == r.shape.is_decreasing()
    assert d.shape.is_convex_weak() == r.shape.is_convex_weak()


def test_parse_density_round_trip():
    d = parse_density("beta:0.5,2")
    assert d.family == "beta" and d.params == (0.5, 2)
    u = parse_density("uniform")
    assert u.family == "beta" and u.params == (1.0, 1.0)
    assert parse_density("gegenbauer:1.0").params == (1.0,)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        make_density("beta", (0, 1))
    with pytest.raises(ParameterError):
        make_density("beta", (1,))
    with pytest.raises(ParameterError):
        make_density("power", (1.5,))
    with pytest.raises(ParameterError):
        make_density("nosuchfamily", (1,))
    with pytest.raises(ParameterError):
        parse_density("beta:x,y")
    with pytest.raises(ParameterError):
        parse_density("")
