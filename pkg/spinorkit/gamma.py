"""Explicit gamma matrices, chirality, Weyl projectors and charge conjugation.

The generators are built by peeling two-dimensional factors off the signature:
for a pair E with orientation ε_E the remaining generators become ε_E ⊗ γ^α,
whose squares pick up the factor ε_E². All seed matrices have entries in
{0, ±1, ±i}, so every product of gammas is exact in floating point.
"""
import logging
from dataclasses import dataclass, field, replace
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space

from .classify import spinor_types
from .config import DEFAULT_SETTINGS, Settings
from .errors import RepresentationError, SignatureError
from .multivector import Multivector, blade_indices
from .signature import Signature

logger = logging.getLogger(__name__)

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_HYPERBOLIC_MINUS = np.array([[0, 1], [-1, 0]], dtype=complex)


@dataclass(frozen=True)
class ConjugationOperator:
    """Antilinear c(ψ) = C·ψ* with C·γ^μ* = η·γ^μ·C."""

    matrix: np.ndarray = field(repr=False)
    eta: int
    c_squared: int
    commutes_with_theta: Optional[bool] = None

    def apply(self, psi: np.ndarray) -> np.ndarray:
        return self.matrix @ np.conj(psi)

    def to_json(self) -> dict:
        payload = {
            "matrix": _matrix_to_json(self.matrix),
            "eta": self.eta,
            "c_squared": self.c_squared,
        }
        if self.commutes_with_theta is not None:
            payload["theta_relation"] = (
                "commutes" if self.commutes_with_theta else "anticommutes"
            )
        return payload


@dataclass(frozen=True, eq=False)
class GammaRepresentation:
    signature: Signature
    f: int
    gammas: Tuple[np.ndarray, ...] = field(repr=False)
    epsilon_matrix: np.ndarray = field(repr=False)
    theta_matrix: Optional[np.ndarray] = field(default=None, repr=False)
    conjugation: Optional[ConjugationOperator] = field(default=None, repr=False)
    channels: Tuple[ConjugationOperator, ...] = field(default=(), repr=False)

    @property
    def n(self) -> int:
        return self.signature.n

    def identity(self) -> np.ndarray:
        return np.eye(self.f, dtype=complex)

    def to_json(self) -> dict:
        return {
            "signature": [self.signature.p, self.signature.q],
            "f": self.f,
            "gammas": [_matrix_to_json(g) for g in self.gammas],
            "theta": None if self.theta_matrix is None else _matrix_to_json(self.theta_matrix),
            "conjugation": None if self.conjugation is None else self.conjugation.to_json(),
            "channels": [channel.to_json() for channel in self.channels],
        }


@dataclass(frozen=True, eq=False)
class SpinorVector:
    components: np.ndarray
    signature: Signature

    def __post_init__(self):
        components = np.asarray(self.components, dtype=complex)
        if components.ndim != 1:
            raise ValueError("spinor components must form a vector")
        if not np.all(np.isfinite(components)):
            raise ValueError("spinor components must be finite")
        object.__setattr__(self, "components", components)

    def __add__(self, other: "SpinorVector") -> "SpinorVector":
        return SpinorVector(self.components + other.components, self.signature)

    def allclose(self, other: "SpinorVector", tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.components - other.components), initial=0.0) <= tol)


def _matrix_to_json(matrix: np.ndarray) -> list:
    return [[[float(x.real), float(x.imag)] for x in row] for row in matrix]


def _gamma_matrices(signs: Sequence[int]) -> List[np.ndarray]:
    n = len(signs)
    if n == 0:
        return []
    if n == 1:
        return [np.array([[1 if signs[0] > 0 else 1j]], dtype=complex)]

    plus = [mu for mu, s in enumerate(signs) if s > 0]
    minus = [mu for mu, s in enumerate(signs) if s < 0]
    seeds = {}
    if plus and minus:
        seeds[plus[0]], seeds[minus[0]] = _PAULI_X, _HYPERBOLIC_MINUS
        flip = False
    elif len(plus) >= 2:
        seeds[plus[0]], seeds[plus[1]] = _PAULI_Z, _PAULI_X
        flip = True
    else:
        seeds[minus[0]], seeds[minus[1]] = 1j * _PAULI_Z, 1j * _PAULI_X
        flip = True

    first, second = sorted(seeds)
    eps_pair = seeds[first] @ seeds[second]
    rest = [mu for mu in range(n) if mu not in seeds]
    inner = _gamma_matrices([-signs[mu] if flip else signs[mu] for mu in rest])
    size = inner[0].shape[0] if inner else 1

    result: List[Optional[np.ndarray]] = [None] * n
    for mu, seed in seeds.items():
        result[mu] = np.kron(seed, np.eye(size, dtype=complex))
    for mu, gamma in zip(rest, inner):
        result[mu] = np.kron(eps_pair, gamma)
    return result


def _check_relations(rep: GammaRepresentation, tol: float):
    eye = rep.identity()
    for mu, g_mu in enumerate(rep.gammas):
        for nu, g_nu in enumerate(rep.gammas):
            expected = 2 * rep.signature.metric_sign(mu) * eye if mu == nu else 0 * eye
            if np.max(np.abs(g_mu @ g_nu + g_nu @ g_mu - expected)) > tol:
                raise RepresentationError(
                    f"anticommutation relation fails for γ^{mu}, γ^{nu} in {rep.signature}"
                )


def build_representation(
    sig: Signature, settings: Settings = DEFAULT_SETTINGS
) -> GammaRepresentation:
    sig.require_at_most(settings.max_concrete_n, "gamma representations")
    gammas = tuple(_gamma_matrices(sig.metric_signs))
    f = 1 << (sig.n // 2)
    if sig.n == 0:
        eye = np.eye(1, dtype=complex)
        trivial = ConjugationOperator(eye, 1, 1)
        return GammaRepresentation(sig, 1, (), eye, conjugation=trivial, channels=(trivial,))

    epsilon = reduce(np.matmul, gammas)
    theta = None
    if sig.n % 2 == 0:
        theta = epsilon if sig.orientation_square() == 1 else 1j * epsilon
    rep = GammaRepresentation(sig, f, gammas, epsilon, theta)
    _check_relations(rep, settings.matrix_tolerance)
    channels = tuple(conjugation_channels(rep, settings))
    rep = replace(rep, conjugation=_real_channel(rep, channels), channels=channels)
    logger.debug(
        "built %dx%d representation of C%s (conjugation: %s)",
        f, f, sig, "none" if rep.conjugation is None else rep.conjugation.eta,
    )
    return rep


def represent(rep: GammaRepresentation, a: Multivector) -> np.ndarray:
    """Image of a multivector: Σ c_B γ_B with γ_B the ascending product."""
    if a.signature != rep.signature:
        raise SignatureError(f"multivector in {a.signature}, representation of {rep.signature}")
    out = np.zeros((rep.f, rep.f), dtype=complex)
    for mask, value in a.terms.items():
        out += complex(value) * _blade_matrix(rep, mask)
    return out


def chirality(rep: GammaRepresentation) -> np.ndarray:
    """θ = ε when ε² = +1, θ = iε when ε² = -1."""
    if rep.theta_matrix is None:
        raise RepresentationError(
            f"chirality needs an even number of generators; {rep.signature} has n = {rep.n}"
        )
    return rep.theta_matrix


def weyl_projectors(rep: GammaRepresentation) -> Tuple[np.ndarray, np.ndarray]:
    theta = chirality(rep)
    eye = rep.identity()
    return (eye - theta) / 2, (eye + theta) / 2


def weyl_split(
    rep: GammaRepresentation, psi: SpinorVector
) -> Tuple[SpinorVector, SpinorVector]:
    """(ψ_L, ψ_R) with θψ_L = -ψ_L and θψ_R = ψ_R."""
    left, right = weyl_projectors(rep)
    if psi.components.shape != (rep.f,):
        raise RepresentationError(f"spinor of length {psi.components.shape[0]}, expected {rep.f}")
    return (
        SpinorVector(left @ psi.components, psi.signature),
        SpinorVector(right @ psi.components, psi.signature),
    )


def _reality_signs(rep: GammaRepresentation, tol: float) -> Optional[List[int]]:
    signs = []
    for gamma in rep.gammas:
        if np.max(np.abs(np.conj(gamma) - gamma)) <= tol:
            signs.append(1)
        elif np.max(np.abs(np.conj(gamma) + gamma)) <= tol:
            signs.append(-1)
        else:
            return None
    return signs


def _blade_matrix(rep: GammaRepresentation, mask: int) -> np.ndarray:
    product = rep.identity()
    for mu in blade_indices(mask):
        product = product @ rep.gammas[mu]
    return product


def _channel_solutions(rep: GammaRepresentation, eta: int, tol: float) -> List[np.ndarray]:
    """Basis of {C : C·γ^μ* = η·γ^μ·C for all μ}."""
    signs = _reality_signs(rep, tol)
    if signs is not None:
        # γ^μ* = s_μ γ^μ, so the condition on a blade product γ_B is
        # γ_B γ^μ = η s_μ γ^μ γ_B; distinct blades decouple.
        found = []
        for mask in range(rep.signature.dimension):
            candidate = _blade_matrix(rep, mask)
            if all(
                np.max(np.abs(s * candidate @ g - eta * g @ candidate)) <= tol
                for s, g in zip(signs, rep.gammas)
            ):
                found.append(candidate)
        return found
    f = rep.f
    eye = np.eye(f, dtype=complex)
    system = np.vstack(
        [np.kron(eye, np.conj(g).T) - eta * np.kron(g, eye) for g in rep.gammas]
    )
    basis = null_space(system)
    return [basis[:, k].reshape(f, f) for k in range(basis.shape[1])]


def _normalise(matrix: np.ndarray, tol: float) -> Tuple[np.ndarray, int]:
    product = matrix @ np.conj(matrix)
    scale = product[0, 0] if abs(product[0, 0]) > tol else np.trace(product) / len(product)
    lam = scale.real
    matrix = matrix / np.sqrt(abs(lam))
    # a global phase leaves C·C* unchanged; prefer a real matrix
    pivot = matrix.flat[np.argmax(np.abs(matrix))]
    matrix = matrix * (abs(pivot) / pivot)
    if np.max(np.abs(matrix.imag)) <= tol:
        matrix = matrix.real.astype(complex)
    return matrix, 1 if lam > 0 else -1


def conjugation_channels(
    rep: GammaRepresentation, settings: Settings = DEFAULT_SETTINGS
) -> List[ConjugationOperator]:
    """Every sign channel η = ±1 that admits an intertwiner C."""
    tol = settings.matrix_tolerance
    channels = []
    for eta in (1, -1):
        solutions = _channel_solutions(rep, eta, tol)
        if not solutions:
            continue
        matrix, c_squared = _normalise(solutions[0], tol)
        if np.max(np.abs(matrix @ np.conj(matrix) - c_squared * rep.identity())) > 1e-9:
            raise RepresentationError(f"C·C* is not ±1 for η = {eta} in {rep.signature}")
        commutes = None
        if rep.theta_matrix is not None:
            theta = rep.theta_matrix
            lhs = matrix @ np.conj(theta)
            commutes = bool(np.max(np.abs(lhs - theta @ matrix)) <= 1e-9)
        channels.append(ConjugationOperator(matrix, eta, c_squared, commutes))
    return channels


def build_conjugation(
    rep: GammaRepresentation, settings: Settings = DEFAULT_SETTINGS
) -> Optional[ConjugationOperator]:
    """Conjugation with c∘c = +1, preferring η = +1; None if only c∘c = -1 exists."""
    return _real_channel(rep, conjugation_channels(rep, settings))


def _real_channel(
    rep: GammaRepresentation, channels: Sequence[ConjugationOperator]
) -> Optional[ConjugationOperator]:
    if not channels:
        raise RepresentationError(
            f"no charge-conjugation intertwiner in either channel for {rep.signature}"
        )
    for channel in channels:
        if channel.c_squared == 1:
            return channel
    return None


def _real_form(matrix: np.ndarray) -> np.ndarray:
    # ψ = x + iy  ↦  (Re(Mψ), Im(Mψ)) for complex-linear M
    return np.block([[matrix.real, -matrix.imag], [matrix.imag, matrix.real]])


def majorana_subspace(
    rep: GammaRepresentation,
    conjugation: Optional[ConjugationOperator] = None,
    chirality_sign: Optional[int] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> int:
    """Real dimension of {ψ : cψ = ψ}, optionally inside the θ = chirality_sign eigenspace."""
    conjugation = conjugation if conjugation is not None else rep.conjugation
    if conjugation is None or conjugation.c_squared != 1:
        raise RepresentationError(f"{rep.signature} admits no Majorana spinors")
    c = conjugation.matrix
    # ψ = x + iy  ↦  C ψ*  is real-linear with matrix [[Cr, Ci], [Ci, -Cr]]
    antilinear = np.block([[c.real, c.imag], [c.imag, -c.real]])
    eye = np.eye(2 * rep.f)
    blocks = [antilinear - eye]
    if chirality_sign is not None:
        if chirality_sign not in (1, -1):
            raise ValueError("chirality_sign must be +1 or -1")
        blocks.append(_real_form(chirality(rep)) - chirality_sign * eye)
    kernel = null_space(np.vstack(blocks), rcond=settings.matrix_tolerance)
    return int(kernel.shape[1])


def spinor_types_match(rep: GammaRepresentation) -> bool:
    """Concrete conjugation agrees with the symbolic Majorana predicate."""
    return (rep.conjugation is not None) == spinor_types(rep.signature).majorana_exists
