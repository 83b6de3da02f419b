import math

import numpy as np
import pytest

from spinorkit import (
    ConnectionField,
    FieldShapeError,
    FrameField,
    Settings,
    Signature,
    SpinorField,
    build_representation,
    covariant_derivative,
    dirac_operator,
    lift_to_spin,
    operator_symbol,
)
from spinorkit.geometry import (
    connection_from_json,
    connection_to_json,
    constant_connection,
    dirac_symbol,
    flat_frame,
    frame_from_json,
    frame_to_json,
    laplacian_symbol,
    lattice_momenta,
    plane_wave,
    spinor_field_from_json,
    spinor_field_to_csv,
    spinor_field_to_json,
    zero_connection,
)

LORENTZ = Signature(3, 1)


def close(a, b, tol=1e-10):
    return np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0) <= tol


def random_generator(sig, rng):
    """A random element of so(p,q): M = η A with A antisymmetric."""
    a = rng.normal(size=(sig.n, sig.n))
    return np.diag(sig.metric_signs) @ (a - a.T)


def random_connection(sig, shape, rng):
    n = sig.n
    coefficients = np.zeros(tuple(shape) + (n, n, n))
    for mu in range(n):
        coefficients[..., mu] = random_generator(sig, rng)
    return constant_connection(sig, shape, coefficients)


def test_lift_of_zero_is_zero():
    rep = build_representation(LORENTZ)
    assert close(lift_to_spin(np.zeros((4, 4)), rep), np.zeros((4, 4)))


def test_lift_of_a_rotation_generator():
    rep = build_representation(LORENTZ)
    m = np.zeros((4, 4))
    m[0, 1], m[1, 0] = 1.0, -1.0
    g0, g1 = rep.gammas[0], rep.gammas[1]
    assert close(lift_to_spin(m, rep), 0.5 * g0 @ g1)


def test_lift_of_a_boost_generator():
    rep = build_representation(LORENTZ)
    m = np.zeros((4, 4))
    m[0, 3], m[3, 0] = 1.0, 1.0
    assert close(lift_to_spin(m, rep), 0.5 * rep.gammas[0] @ rep.gammas[3])


@pytest.mark.parametrize("sig", [Signature(3, 1), Signature(2, 2), Signature(3, 0), Signature(1, 4)], ids=str)
def test_lift_is_a_lie_algebra_homomorphism(sig):
    rep = build_representation(sig)
    rng = np.random.default_rng(11)
    for _ in range(100):
        m1, m2 = random_generator(sig, rng), random_generator(sig, rng)
        l1, l2 = lift_to_spin(m1, rep), lift_to_spin(m2, rep)
        assert close(l1 @ l2 - l2 @ l1, lift_to_spin(m1 @ m2 - m2 @ m1, rep), 1e-10)


def test_lift_rejects_non_generators():
    rep = build_representation(LORENTZ)
    with pytest.raises(FieldShapeError, match="antisymmetric"):
        lift_to_spin(np.eye(4), rep)
    with pytest.raises(FieldShapeError):
        lift_to_spin(np.zeros((3, 3)), rep)


def test_covariant_derivative_of_a_constant_field_vanishes():
    shape = (4, 4, 4, 4)
    rep = build_representation(LORENTZ)
    frame = flat_frame(LORENTZ, shape)
    psi = SpinorField(LORENTZ, np.ones(shape + (4,), dtype=complex))
    conn = zero_connection(LORENTZ, shape)
    for a in range(4):
        assert close(covariant_derivative(psi, conn, frame, a, rep).components, 0.0)


def test_constant_connection_on_a_constant_field():
    shape = (3, 3, 3, 3)
    rep = build_representation(LORENTZ)
    rng = np.random.default_rng(4)
    frame = flat_frame(LORENTZ, shape)
    conn = random_connection(LORENTZ, shape, rng)
    psi0 = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi = SpinorField(LORENTZ, np.broadcast_to(psi0, shape + (4,)).copy())
    for a in range(4):
        expected = lift_to_spin(conn.coefficients[(0,) * 4 + (Ellipsis, a)], rep) @ psi0
        out = covariant_derivative(psi, conn, frame, a, rep).components
        assert close(out, np.broadcast_to(expected, out.shape))


def test_plane_wave_derivative_follows_the_central_difference_symbol():
    sig = Signature(2, 0)
    shape = (16, 16)
    rep = build_representation(sig)
    frame = flat_frame(sig, shape, spacing=(0.5, 0.5))
    k = (2 * math.pi / (16 * 0.5), 0.0)
    psi = plane_wave(frame, [1.0, 2.0j], k)
    out = covariant_derivative(psi, zero_connection(sig, shape), frame, 0, rep)
    discrete = 1j * math.sin(k[0] * 0.5) / 0.5
    assert close(out.components, discrete * psi.components)
    continuum_error = np.max(np.abs(out.components - 1j * k[0] * psi.components))
    assert continuum_error <= 2 * (k[0] ** 3 * 0.25 / 6) * np.max(np.abs(psi.components))


def test_dirac_eigen_relation_for_a_single_mode():
    sig = Signature(2, 0)
    shape = (16, 16)
    rep = build_representation(sig)
    frame = flat_frame(sig, shape)
    k1 = 2 * math.pi * 3 / 16
    psi0 = np.array([1.0, -0.5j])
    psi = plane_wave(frame, psi0, (k1, 0.0))
    out = dirac_operator(psi, zero_connection(sig, shape), frame, rep)
    expected = 1j * math.sin(k1) * rep.gammas[0] @ psi0
    assert close(out.components, psi.components[..., :1] / psi0[0] * expected)


def test_flat_lorentzian_dirac_squares_to_the_wave_operator():
    shape = (8, 8, 8, 8)
    rep = build_representation(LORENTZ)
    frame = flat_frame(LORENTZ, shape)
    conn = zero_connection(LORENTZ, shape)
    k = tuple(2 * math.pi * m / 8 for m in (1, 0, 2, 1))
    psi = plane_wave(frame, [1.0, 0.0, 1j, 0.5], k)
    twice = dirac_operator(dirac_operator(psi, conn, frame, rep), conn, frame, rep)
    assert close(twice.components, laplacian_symbol(k, frame.spacing, LORENTZ) * psi.components)
    continuum = -sum(s * k_a * k_a for s, k_a in zip(LORENTZ.metric_signs, k))
    discrete = laplacian_symbol(k, frame.spacing, LORENTZ)
    assert abs(discrete - continuum) <= 2 * sum(k_a**4 for k_a in k) / 3


@pytest.mark.parametrize("sig, size", [(Signature(2, 0), 8), (Signature(1, 1), 8), (Signature(3, 1), 6)], ids=str)
def test_operator_symbol_matches_lattice_symbol(sig, size):
    shape = (size,) * sig.n
    rep = build_representation(sig)
    frame = flat_frame(sig, shape)
    conn = zero_connection(sig, shape)
    symbol = operator_symbol(lambda psi: dirac_operator(psi, conn, frame, rep), frame, rep.f)
    momenta = lattice_momenta(frame)
    for index in np.ndindex(*shape):
        k = momenta[index]
        assert close(symbol[index], dirac_symbol(k, frame.spacing, rep))
        square = symbol[index] @ symbol[index]
        assert close(square, laplacian_symbol(k, frame.spacing, sig) * rep.identity())


def test_squared_dirac_symbol_on_a_16_point_lorentzian_torus():
    shape = (16,) * 4
    rep = build_representation(LORENTZ)
    frame = flat_frame(LORENTZ, shape)
    conn = zero_connection(LORENTZ, shape)

    def squared(psi):
        return dirac_operator(dirac_operator(psi, conn, frame, rep), conn, frame, rep)

    symbol = operator_symbol(squared, frame, rep.f)
    k = np.moveaxis(lattice_momenta(frame), -1, 0)
    discrete = laplacian_symbol(k, frame.spacing, LORENTZ)
    assert close(symbol, discrete[..., None, None] * rep.identity(), 1e-9)

    continuum = -sum(s * k_a**2 for s, k_a in zip(LORENTZ.metric_signs, k))
    bound = 2 * sum((k_a * h) ** 2 / 6 * k_a**2 for k_a, h in zip(k, frame.spacing))
    assert np.all(np.abs(discrete - continuum) <= bound + 1e-12)


def test_dirac_operator_is_linear_and_kills_zero():
    shape = (4, 4, 4, 4)
    rep = build_representation(LORENTZ)
    rng = np.random.default_rng(8)
    frame = flat_frame(LORENTZ, shape)
    conn = random_connection(LORENTZ, shape, rng)
    zero = SpinorField(LORENTZ, np.zeros(shape + (4,)))
    assert close(dirac_operator(zero, conn, frame, rep).components, 0.0)
    a = SpinorField(LORENTZ, rng.normal(size=shape + (4,)) + 1j * rng.normal(size=shape + (4,)))
    b = SpinorField(LORENTZ, rng.normal(size=shape + (4,)))
    combined = SpinorField(LORENTZ, 2.0 * a.components - 3j * b.components)
    lhs = dirac_operator(combined, conn, frame, rep).components
    rhs = 2.0 * dirac_operator(a, conn, frame, rep).components - 3j * dirac_operator(b, conn, frame, rep).components
    assert close(lhs, rhs)


def test_inverse_metric_of_a_flat_frame():
    frame = flat_frame(LORENTZ, (2, 2, 2, 2))
    assert close(frame.inverse_metric()[0, 0, 0, 0], np.diag([1.0, 1.0, 1.0, -1.0]))


def test_field_validation():
    sig = Signature(2, 0)
    with pytest.raises(FieldShapeError, match="vielbein"):
        FrameField(sig, (1.0, 1.0), np.zeros((4, 4, 3, 3)))
    with pytest.raises(FieldShapeError, match="singular"):
        FrameField(sig, (1.0, 1.0), np.zeros((4, 4, 2, 2)))
    with pytest.raises(FieldShapeError, match="spacings"):
        flat_frame(sig, (4, 4), spacing=(1.0, -1.0))
    with pytest.raises(FieldShapeError, match="antisymmetric"):
        ConnectionField(sig, np.ones((4, 4, 2, 2, 2)))
    with pytest.raises(FieldShapeError, match="spinor field"):
        SpinorField(sig, np.zeros((4, 2)))


def test_mismatched_fields_are_rejected():
    sig = Signature(2, 0)
    rep = build_representation(sig)
    frame = flat_frame(sig, (4, 4))
    psi = SpinorField(sig, np.zeros((4, 4, 2)))
    with pytest.raises(FieldShapeError, match="grid"):
        dirac_operator(psi, zero_connection(sig, (4, 5)), frame, rep)
    with pytest.raises(FieldShapeError, match="components"):
        dirac_operator(SpinorField(sig, np.zeros((4, 4, 3))), zero_connection(sig, (4, 4)), frame, rep)
    with pytest.raises(FieldShapeError, match="signature"):
        dirac_operator(psi, zero_connection(sig, (4, 4)), frame, build_representation(Signature(1, 1)))


def test_json_round_trip_of_fields():
    sig = Signature(1, 1)
    rng = np.random.default_rng(2)
    frame = flat_frame(sig, (3, 5), spacing=(0.5, 0.25))
    conn = random_connection(sig, (3, 5), rng)
    psi = SpinorField(sig, rng.normal(size=(3, 5, 2)) + 1j * rng.normal(size=(3, 5, 2)))

    frame_back = frame_from_json(frame_to_json(frame))
    assert frame_back.spacing == (0.5, 0.25)
    assert close(frame_back.vielbein, frame.vielbein, 0.0)
    assert close(connection_from_json(connection_to_json(conn)).coefficients, conn.coefficients, 0.0)
    assert close(spinor_field_from_json(spinor_field_to_json(psi)).components, psi.components, 0.0)

    with pytest.raises(FieldShapeError, match="expected a frame"):
        frame_from_json(spinor_field_to_json(psi))


@pytest.mark.parametrize(
    "text, message",
    [
        ('{"kind": "frame", "signature": [1, 1]}', "missing shape, spacing, vielbein"),
        ("{not json", "not valid JSON"),
        ("[1, 2]", "expected a frame field, got 'list'"),
        ('{"kind": "frame", "signature": [1, -1], "shape": [2], "spacing": [1], "vielbein": []}', "malformed"),
        ('{"kind": "frame", "signature": [1, 0], "shape": [2], "spacing": [1], "vielbein": [1, 2, 3]}', "does not fit"),
    ],
)
def test_malformed_frame_files(text, message):
    with pytest.raises(FieldShapeError, match=message):
        frame_from_json(text)


def test_malformed_connection_and_spinor_files():
    with pytest.raises(FieldShapeError, match="missing coefficients"):
        connection_from_json('{"kind": "connection", "signature": [1, 0], "shape": [2]}')
    with pytest.raises(FieldShapeError, match="'components' does not fit"):
        spinor_field_from_json('{"kind": "spinor", "signature": [1, 0], "shape": [2], "components": [[1, 0]]}')


def test_grids_default_to_grid_size():
    sig = Signature(2, 0)
    assert flat_frame(sig).grid_shape == (16, 16)
    assert zero_connection(sig).grid_shape == (16, 16)
    small = Settings(grid_size=4)
    assert flat_frame(sig, settings=small).grid_shape == (4, 4)
    assert zero_connection(sig, settings=small).grid_shape == (4, 4)
    assert constant_connection(sig, None, np.zeros((2, 2, 2)), settings=small).grid_shape == (4, 4)
    assert flat_frame(sig, (3, 5), settings=small).grid_shape == (3, 5)
    with pytest.raises(ValueError, match="grid_size"):
        Settings(grid_size=0)


def test_spinor_field_csv():
    sig = Signature(1, 0)
    psi = SpinorField(sig, np.array([[1.0 + 2.0j], [0.5 + 0.0j], [0.0 - 1.0j]]))
    lines = spinor_field_to_csv(psi).splitlines()
    assert lines[0] == "i0,re0,im0"
    assert lines[1] == "0,1.0,2.0"
    assert lines[3] == "2,0.0,-1.0"
    with pytest.raises(FieldShapeError, match="1-d and 2-d"):
        spinor_field_to_csv(SpinorField(Signature(3, 0), np.zeros((2, 2, 2, 2))))
