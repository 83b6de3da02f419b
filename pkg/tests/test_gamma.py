import numpy as np
import pytest

from spinorkit import (
    RepresentationError,
    Settings,
    Signature,
    SignatureError,
    SpinorVector,
    blade,
    build_conjugation,
    build_representation,
    chirality,
    conjugation_channels,
    majorana_subspace,
    represent,
    scalar,
    spinor_types,
    weyl_projectors,
    weyl_split,
)
from spinorkit.gamma import spinor_types_match
from spinorkit.multivector import grade

SIGNATURES = [Signature(p, n - p) for n in range(0, 11) for p in range(n + 1)]


def close(a, b, tol=1e-12):
    return np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0) <= tol


@pytest.mark.parametrize("sig", SIGNATURES, ids=str)
def test_clifford_relations_and_dimension(sig):
    rep = build_representation(sig)
    assert rep.f == 2 ** (sig.n // 2)
    eye = rep.identity()
    for mu, g_mu in enumerate(rep.gammas):
        assert g_mu.shape == (rep.f, rep.f)
        for nu, g_nu in enumerate(rep.gammas):
            expected = 2 * sig.metric_sign(mu) * eye if mu == nu else 0 * eye
            assert close(g_mu @ g_nu + g_nu @ g_mu, expected)


@pytest.mark.parametrize("sig", SIGNATURES, ids=str)
def test_conjugation_matches_majorana_predicate(sig):
    rep = build_representation(sig)
    assert spinor_types_match(rep)
    if rep.conjugation is not None:
        c = rep.conjugation.matrix
        assert rep.conjugation.c_squared == 1
        assert close(c @ np.conj(c), rep.identity(), 1e-9)
        for g in rep.gammas:
            assert close(c @ np.conj(g), rep.conjugation.eta * g @ c, 1e-9)


@pytest.mark.parametrize("sig", [s for s in SIGNATURES if s.n and s.n % 2 == 0], ids=str)
def test_chirality_properties(sig):
    rep = build_representation(sig)
    theta = chirality(rep)
    assert close(theta @ theta, rep.identity())
    assert abs(np.trace(theta)) < 1e-12
    for g in rep.gammas:
        assert close(theta @ g, -g @ theta)
    left, right = weyl_projectors(rep)
    assert close(left + right, rep.identity())
    assert close(left @ right, 0 * left)
    assert np.linalg.matrix_rank(left) == rep.f // 2
    if rep.conjugation is not None:
        c = rep.conjugation.matrix
        expected = not spinor_types(sig).chirality_uses_i
        assert rep.conjugation.commutes_with_theta is expected
        sign = 1 if expected else -1
        assert close(c @ np.conj(theta), sign * theta @ c, 1e-9)


def test_chirality_uses_i_in_lorentzian_four_dimensions():
    rep = build_representation(Signature(3, 1))
    assert close(chirality(rep), 1j * rep.epsilon_matrix)
    rep = build_representation(Signature(1, 1))
    assert close(chirality(rep), rep.epsilon_matrix)


def test_chirality_needs_even_n():
    rep = build_representation(Signature(3, 0))
    with pytest.raises(RepresentationError, match="even number"):
        chirality(rep)
    with pytest.raises(RepresentationError):
        weyl_split(rep, SpinorVector(np.ones(rep.f), rep.signature))


def test_real_type_seeds_stay_real():
    for sig in (Signature(2, 0), Signature(1, 1), Signature(3, 1), Signature(2, 2)):
        rep = build_representation(sig)
        assert all(np.all(g.imag == 0) for g in rep.gammas)


def test_trivial_and_one_dimensional_representations():
    rep = build_representation(Signature(0, 0))
    assert rep.f == 1 and rep.gammas == ()
    assert rep.conjugation is not None
    assert close(build_representation(Signature(1, 0)).gammas[0], [[1]])
    assert close(build_representation(Signature(0, 1)).gammas[0], [[1j]])


def test_representation_size_ceiling():
    with pytest.raises(SignatureError):
        build_representation(Signature(13, 0))
    with pytest.raises(SignatureError):
        build_representation(Signature(4, 1), Settings(max_concrete_n=4))


@pytest.mark.parametrize("sig", [Signature(2, 0), Signature(3, 1), Signature(1, 3), Signature(2, 2)], ids=str)
def test_even_n_representation_is_faithful(sig):
    rep = build_representation(sig)
    images = np.stack([represent(rep, blade(sig, _indices(mask))).ravel() for mask in range(sig.dimension)])
    assert np.linalg.matrix_rank(images) == rep.f ** 2


@pytest.mark.parametrize("sig", [Signature(3, 0), Signature(2, 1), Signature(4, 1), Signature(1, 4)], ids=str)
def test_odd_n_representation_collapses_orientation(sig):
    rep = build_representation(sig)
    eps = rep.epsilon_matrix
    value = eps[0, 0]
    assert abs(abs(value) - 1) < 1e-12
    assert close(eps, value * rep.identity())
    even_masks = [mask for mask in range(sig.dimension) if grade(mask) % 2 == 0]
    images = np.stack([represent(rep, blade(sig, _indices(mask))).ravel() for mask in even_masks])
    assert np.linalg.matrix_rank(images) == rep.f ** 2


def _indices(mask):
    return [mu for mu in range(mask.bit_length()) if mask >> mu & 1]


def test_represent_is_an_algebra_homomorphism():
    sig = Signature(3, 1)
    rep = build_representation(sig)
    a = blade(sig, [0, 3]) + scalar(sig, 2)
    b = blade(sig, [1]) - blade(sig, [0, 1, 2])
    assert close(represent(rep, a * b), represent(rep, a) @ represent(rep, b))


def test_represent_rejects_other_signatures():
    rep = build_representation(Signature(2, 0))
    with pytest.raises(SignatureError):
        represent(rep, scalar(Signature(1, 1), 1))


def test_weyl_split():
    sig = Signature(3, 1)
    rep = build_representation(sig)
    theta = chirality(rep)
    rng = np.random.default_rng(7)
    psi = SpinorVector(rng.normal(size=4) + 1j * rng.normal(size=4), sig)
    left, right = weyl_split(rep, psi)
    assert (left + right).allclose(psi)
    assert close(theta @ left.components, -left.components)
    assert close(theta @ right.components, right.components)

    values, vectors = np.linalg.eigh(theta)
    minus = SpinorVector(vectors[:, np.argmin(values)], sig)
    left, right = weyl_split(rep, minus)
    assert left.allclose(minus)
    assert close(right.components, np.zeros(4))

    zero_left, zero_right = weyl_split(rep, SpinorVector(np.zeros(4), sig))
    assert close(zero_left.components, np.zeros(4))
    assert close(zero_right.components, np.zeros(4))


def test_spinor_vector_validation():
    with pytest.raises(ValueError):
        SpinorVector(np.array([1.0, np.nan]), Signature(2, 0))
    with pytest.raises(ValueError):
        SpinorVector(np.eye(2), Signature(2, 0))


def test_quaternionic_signature_has_only_minus_one_conjugations():
    rep = build_representation(Signature(4, 0))
    assert rep.conjugation is None
    channels = conjugation_channels(rep)
    assert channels
    assert all(channel.c_squared == -1 for channel in channels)
    with pytest.raises(RepresentationError, match="no Majorana"):
        majorana_subspace(rep)


def test_lorentzian_conjugation():
    rep = build_representation(Signature(3, 1))
    assert rep.conjugation is not None
    assert rep.conjugation.commutes_with_theta is False
    assert majorana_subspace(rep) == 4
    assert majorana_subspace(rep, chirality_sign=-1) == 0


@pytest.mark.parametrize(
    "sig, total, weyl",
    [(Signature(1, 1), 2, 1), (Signature(8, 0), 16, 8), (Signature(0, 0), 1, None)],
    ids=str,
)
def test_majorana_subspace_dimensions(sig, total, weyl):
    rep = build_representation(sig)
    assert majorana_subspace(rep) == total
    if weyl is not None:
        assert rep.conjugation.commutes_with_theta is True
        assert majorana_subspace(rep, chirality_sign=-1) == weyl
        assert majorana_subspace(rep, chirality_sign=1) == weyl


def test_conjugation_is_an_involution_on_spinors():
    rep = build_representation(Signature(2, 2))
    rng = np.random.default_rng(3)
    psi = rng.normal(size=rep.f) + 1j * rng.normal(size=rep.f)
    c = rep.conjugation
    assert close(c.apply(c.apply(psi)), psi, 1e-9)


def test_representation_json_layout():
    payload = build_representation(Signature(1, 1)).to_json()
    assert payload["signature"] == [1, 1]
    assert payload["f"] == 2
    assert len(payload["gammas"]) == 2
    assert payload["gammas"][0][0][1] == [1.0, 0.0]
    assert payload["conjugation"]["c_squared"] == 1
    assert payload["conjugation"]["eta"] in (1, -1)
    assert payload["conjugation"]["theta_relation"] == "commutes"


@pytest.mark.parametrize("sig", [Signature(3, 1), Signature(1, 3), Signature(2, 2), Signature(3, 0)], ids=str)
def test_representation_json_lists_every_channel(sig):
    rep = build_representation(sig)
    payload = rep.to_json()
    expected = conjugation_channels(rep)
    assert [(c["eta"], c["c_squared"]) for c in payload["channels"]] == [
        (c.eta, c.c_squared) for c in expected
    ]
    if sig.n % 2 == 0:
        assert {c["eta"] for c in payload["channels"]} == {1, -1}
    if payload["conjugation"] is not None:
        assert payload["conjugation"] in payload["channels"]


def test_build_conjugation_prefers_the_real_channel():
    rep = build_representation(Signature(2, 2))
    c = build_conjugation(rep)
    assert c.c_squared == 1
    assert c.eta == 1
    assert build_conjugation(build_representation(Signature(4, 0))) is None
