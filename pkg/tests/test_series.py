import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weighted_bohr import series as S
from weighted_bohr.errors import DomainError, PreconditionError
from weighted_bohr.series import PowerSeries

P = {S.POLYNOMIAL}


def coeffs(f):
    return np.asarray(f.coeffs)


def test_add_examples():
    assert np.array_equal(coeffs(S.add(PowerSeries([1, 2]), PowerSeries([3, 4]))), [4, 6])
    f = PowerSeries([1, 2, 3])
    assert np.array_equal(coeffs(S.add(f, PowerSeries([0, 0, 0]))), coeffs(f))
    out = S.add(PowerSeries([1, 1, 1]), PowerSeries([0, 0, 0, 5]))
    assert out.order == 2 and np.array_equal(coeffs(out), [1, 1, 1])


def test_cauchy_product_examples():
    out = S.cauchy_product(PowerSeries([1, 1]), PowerSeries([1, 1]))
    assert np.array_equal(coeffs(out), [1, 2])
    f = PowerSeries([0.3, -1j, 2])
    assert np.array_equal(coeffs(S.cauchy_product(f, PowerSeries([1, 0, 0]))), coeffs(f))
    out = S.cauchy_product(PowerSeries([1, 1, 1, 1]), PowerSeries([1, -1, 0, 0]))
    assert np.array_equal(coeffs(out), [1, 0, 0, 0])


def test_compose_examples():
    g = PowerSeries([0.2, 0.5j, -0.1, 0.3])
    ident = PowerSeries([0, 1, 0, 0])
    assert np.allclose(coeffs(S.compose(g, ident)), coeffs(g), atol=0)
    out = S.compose(PowerSeries([0, 0, 1], P), PowerSeries([0, 2], P))
    assert np.array_equal(coeffs(out), [0, 0, 4])
    geo = PowerSeries(np.ones(9))
    out = S.compose(geo, PowerSeries([0, 0, 1], P))
    assert np.array_equal(coeffs(out), [1, 0, 1, 0, 1, 0, 1, 0, 1])


def test_compose_needs_omega_zero():
    with pytest.raises(PreconditionError):
        S.compose(PowerSeries([1, 1]), PowerSeries([0.1, 1]))


def test_compose_tags():
    g = S.mobius(0.3, 32)
    w = S.shift(S.mobius(0.5, 31))
    out = S.compose(g, w)
    assert out.bounded and not out.polynomial and out.order == 32
    assert S.SCHWARZ in S.compose(S.shift(g), w).tags


def test_derivative_examples():
    assert np.array_equal(coeffs(S.derivative(PowerSeries([0, 1, 1]))), [1, 2])
    assert np.array_equal(coeffs(S.derivative(PowerSeries([5]))), [0])
    a, n = 0.6, 40
    phi_a = S.shift(S.mobius(a, n - 1))
    d = S.derivative(phi_a)
    # d/dz z(a - z)/(1 - a z), via finite differences of the closed form at a few points
    z = np.array([0.1, -0.2j, 0.15 + 0.1j])
    closed = lambda t: t * (a - t) / (1 - a * t)
    h = 1e-6
    fd = (closed(z + h) - closed(z - h)) / (2 * h)
    assert np.allclose(S.eval_many(d, z), fd, atol=1e-8)


def test_integrate_inverts_derivative():
    f = PowerSeries([0, 0.5, -0.25j, 0.125])
    assert np.allclose(coeffs(S.integrate(S.derivative(f))), coeffs(f))


def test_mobius_examples():
    assert np.array_equal(coeffs(S.mobius(0.0, 3)), [0, -1, 0, 0])
    assert np.allclose(coeffs(S.mobius(0.5, 3)), [0.5, -0.75, -0.375, -0.1875], rtol=0, atol=1e-16)
    assert np.allclose(coeffs(S.mobius(0.9, 1)), [0.9, -0.19], atol=1e-16)
    z = 0.3 * np.exp(2j * np.pi * np.arange(8) / 8)
    assert np.allclose(S.eval_many(S.mobius(0.5, 64), z), (0.5 - z) / (1 - 0.5 * z), atol=1e-12)


@pytest.mark.parametrize("a", [-0.1, 1.0, 2.0])
def test_mobius_domain(a):
    with pytest.raises(DomainError):
        S.mobius(a, 4)


def test_blaschke_examples():
    assert np.array_equal(coeffs(S.blaschke([], 1.0, 0)), [1])
    out = S.blaschke([0], 1.0, 4)
    assert np.array_equal(coeffs(out), [0, -1, 0, 0, 0])
    zeros, rot = [0.5, -0.3j], 1j
    f = S.blaschke(zeros, rot, 8)
    z = 0.6 * np.exp(2j * np.pi * np.arange(16) / 16)
    direct = rot * np.prod([(z0 - z) / (1 - np.conj(z0) * z) for z0 in zeros], axis=0)
    # order 8 at |z| = 0.6 leaves a truncation error of order 0.6^9
    assert np.max(np.abs(S.eval_many(f, z))) <= 1 + 0.02
    f = S.blaschke(zeros, rot, 64)
    assert np.max(np.abs(S.eval_many(f, z) - direct)) <= 1e-9
    assert np.max(np.abs(S.eval_many(f, z))) <= 1 + 1e-9


def test_blaschke_domain():
    with pytest.raises(DomainError):
        S.blaschke([1.0], 1.0, 4)
    with pytest.raises(DomainError):
        S.blaschke([0.1], 2.0, 4)


def test_eval_examples():
    assert S.eval_at(PowerSeries([1, 1, 1]), 0) == 1
    assert S.eval_at(PowerSeries([0, 1]), 0.5j) == 0.5j
    assert abs(S.eval_at(S.mobius(0.5, 64), 0.3) - 0.2 / 0.85) <= 1e-10


def test_tags_are_checked():
    with pytest.raises(PreconditionError):
        PowerSeries([0.9, 0.9], {S.BOUNDED})
    with pytest.raises(PreconditionError):
        PowerSeries([0.5], {S.SCHWARZ})
    with pytest.raises(DomainError):
        PowerSeries([1], {"whatever"})
    assert S.BOUNDED in PowerSeries([0, 1], {S.SCHWARZ}).tags


def test_json_round_trip():
    f = S.blaschke([0.2 + 0.1j], 1j, 16)
    g = PowerSeries.from_json(f.to_json())
    assert np.array_equal(coeffs(f), coeffs(g)) and f.tags == g.tags
    h = PowerSeries.from_dict({"coeffs": [[1, 0], [0, 0.5]], "tags": ["polynomial"]})
    assert np.array_equal(coeffs(h), [1, 0.5j])


def test_divide():
    one = PowerSeries([1.0], P).padded(10)
    out = S.divide(one, PowerSeries([1, -1], P))
    assert np.allclose(coeffs(out), np.ones(11))


# properties -----------------------------------------------------------

cplx = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)
series = st.lists(cplx, min_size=1, max_size=12).map(PowerSeries)
schwarz_like = st.lists(cplx, min_size=1, max_size=10).map(lambda c: PowerSeries([0.0] + c))
zeros = st.lists(st.tuples(st.floats(0, 0.95), st.floats(0, 2 * np.pi)), max_size=5).map(
    lambda zs: [r * np.exp(1j * t) for r, t in zs])


@settings(max_examples=80, deadline=None)
@given(f=series, g=series, h=series)
def test_product_commutative_associative(f, g, h):
    assert np.array_equal(coeffs(S.cauchy_product(f, g)), coeffs(S.cauchy_product(g, f)))
    left = S.cauchy_product(S.cauchy_product(f, g), h)
    right = S.cauchy_product(f, S.cauchy_product(g, h))
    assert np.allclose(coeffs(left), coeffs(right), rtol=1e-12, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(g=series, w1=schwarz_like, w2=schwarz_like)
def test_compose_associative(g, w1, w2):
    left = S.compose(S.compose(g, w1), w2)
    right = S.compose(g, S.compose(w1, w2))
    n = min(left.order, right.order)
    scale = max(1.0, np.max(np.abs(coeffs(left)[: n + 1])))
    assert np.allclose(coeffs(left)[: n + 1], coeffs(right)[: n + 1], rtol=0, atol=1e-12 * scale)


series2 = st.lists(cplx, min_size=2, max_size=12).map(PowerSeries)


@settings(max_examples=80, deadline=None)
@given(f=series2, g=series2)
def test_product_rule(f, g):
    lhs = S.derivative(S.cauchy_product(f, g))
    rhs = S.add(S.cauchy_product(S.derivative(f), g), S.cauchy_product(f, S.derivative(g)))
    n = min(lhs.order, rhs.order)
    assert np.allclose(coeffs(lhs)[: n + 1], coeffs(rhs)[: n + 1], rtol=1e-12, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(zs=zeros, angle=st.floats(0, 2 * np.pi), a=st.floats(0, 0.999))
def test_generated_series_bounded_on_circle(zs, angle, a):
    z = 0.7 * np.exp(2j * np.pi * np.arange(64) / 64)
    for f in (S.blaschke(zs, np.exp(1j * angle), 256), S.mobius(a, 256)):
        assert f.bounded
        assert np.max(np.abs(S.eval_many(f, z))) <= 1 + 1e-8
