"""Spin connection, spinor covariant derivative and Dirac operator on a periodic lattice.

Fields live on a d-torus with d = n grid axes, one per coordinate direction μ,
sampled with spacing h_μ. Derivatives are central differences, so a plane wave
exp(i k·x) sees the symbol i·sin(k h)/h.

Index conventions:
    vielbein[..., a, μ]          = e_a^μ
    coefficients[..., a, b, μ]   = Γ^a_{bμ}
    components[..., i]           = Ψ_i, i < f
"""
import csv
import io
import json
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_SETTINGS, Settings
from .errors import FieldShapeError
from .gamma import GammaRepresentation
from .signature import Signature

logger = logging.getLogger(__name__)


def _metric(sig: Signature) -> np.ndarray:
    return np.array(sig.metric_signs, dtype=float)


@dataclass(frozen=True, eq=False)
class FrameField:
    signature: Signature
    spacing: Tuple[float, ...]
    vielbein: np.ndarray

    def __post_init__(self):
        vielbein = np.asarray(self.vielbein, dtype=float)
        n = self.signature.n
        object.__setattr__(self, "vielbein", vielbein)
        object.__setattr__(self, "spacing", tuple(float(h) for h in self.spacing))
        if vielbein.ndim != n + 2 or vielbein.shape[-2:] != (n, n):
            raise FieldShapeError(
                f"vielbein for {self.signature} needs shape grid + ({n}, {n}) over {n} axes, "
                f"got {vielbein.shape}"
            )
        if len(self.spacing) != n or any(h <= 0 for h in self.spacing):
            raise FieldShapeError(f"need {n} positive spacings, got {self.spacing}")
        if n and np.min(np.abs(np.linalg.det(vielbein))) < 1e-12:
            raise FieldShapeError("vielbein is singular at some site")

    @property
    def grid_shape(self) -> Tuple[int, ...]:
        return self.vielbein.shape[:-2]

    def inverse_metric(self) -> np.ndarray:
        """g^{μν} = e_a^μ e_b^ν η^{ab} at every site."""
        return np.einsum("...am,...bn,ab->...mn", self.vielbein, self.vielbein, np.diag(_metric(self.signature)))


@dataclass(frozen=True, eq=False)
class ConnectionField:
    signature: Signature
    coefficients: np.ndarray

    def __post_init__(self):
        coefficients = np.asarray(self.coefficients, dtype=float)
        n = self.signature.n
        object.__setattr__(self, "coefficients", coefficients)
        if coefficients.ndim != n + 3 or coefficients.shape[-3:] != (n, n, n):
            raise FieldShapeError(
                f"connection for {self.signature} needs shape grid + ({n}, {n}, {n}), "
                f"got {coefficients.shape}"
            )
        lowered = _metric(self.signature)[:, None, None] * coefficients
        asymmetry = lowered + np.swapaxes(lowered, -3, -2)
        if asymmetry.size and np.max(np.abs(asymmetry)) > 1e-10:
            raise FieldShapeError("Γ_{abμ} is not antisymmetric in a, b")

    @property
    def grid_shape(self) -> Tuple[int, ...]:
        return self.coefficients.shape[:-3]


@dataclass(frozen=True, eq=False)
class SpinorField:
    signature: Signature
    components: np.ndarray

    def __post_init__(self):
        components = np.asarray(self.components, dtype=complex)
        object.__setattr__(self, "components", components)
        if components.ndim != self.signature.n + 1:
            raise FieldShapeError(
                f"spinor field for {self.signature} needs {self.signature.n} grid axes plus one "
                f"spinor axis, got shape {components.shape}"
            )

    @property
    def grid_shape(self) -> Tuple[int, ...]:
        return self.components.shape[:-1]

    @property
    def f(self) -> int:
        return self.components.shape[-1]


def _grid(sig: Signature, shape: Optional[Sequence[int]], settings: Settings) -> Tuple[int, ...]:
    if shape is None:
        return (settings.grid_size,) * sig.n
    return tuple(shape)


def flat_frame(
    sig: Signature,
    shape: Optional[Sequence[int]] = None,
    spacing: Sequence[float] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> FrameField:
    """Identity vielbein; the grid defaults to grid_size points per axis."""
    shape = _grid(sig, shape, settings)
    spacing = tuple(spacing) if spacing is not None else (1.0,) * sig.n
    vielbein = np.broadcast_to(np.eye(sig.n), shape + (sig.n, sig.n)).copy()
    return FrameField(sig, spacing, vielbein)


def constant_connection(
    sig: Signature,
    shape: Optional[Sequence[int]],
    coefficients: np.ndarray,
    settings: Settings = DEFAULT_SETTINGS,
) -> ConnectionField:
    """The same Γ^a_{bμ} (shape (n, n, n)) at every site."""
    coefficients = np.asarray(coefficients, dtype=float)
    shape = _grid(sig, shape, settings)
    return ConnectionField(sig, np.broadcast_to(coefficients, shape + coefficients.shape).copy())


def zero_connection(
    sig: Signature, shape: Optional[Sequence[int]] = None, settings: Settings = DEFAULT_SETTINGS
) -> ConnectionField:
    n = sig.n
    return ConnectionField(sig, np.zeros(_grid(sig, shape, settings) + (n, n, n)))


def plane_wave(
    frame: FrameField, psi0: Sequence[complex], k: Sequence[float]
) -> SpinorField:
    """ψ₀·exp(i k·x) sampled at x_μ = j_μ h_μ."""
    k = np.asarray(k, dtype=float)
    axes = [np.arange(size) * h for size, h in zip(frame.grid_shape, frame.spacing)]
    coords = np.meshgrid(*axes, indexing="ij")
    phase = np.exp(1j * sum(k_mu * x for k_mu, x in zip(k, coords)))
    return SpinorField(frame.signature, phase[..., None] * np.asarray(psi0, dtype=complex))


def _gamma_pairs(rep: GammaRepresentation) -> np.ndarray:
    gammas = np.stack(rep.gammas)
    return np.einsum("aij,bjk->abik", gammas, gammas)


def lift_to_spin(matrix: np.ndarray, rep: GammaRepresentation, tol: float = 1e-12) -> np.ndarray:
    """¼ M_ab γ^a γ^b for M = M^a_b in so(p,q), summed over all a, b."""
    matrix = np.asarray(matrix, dtype=float)
    n = rep.n
    if matrix.shape != (n, n):
        raise FieldShapeError(f"expected a {n}x{n} matrix, got {matrix.shape}")
    lowered = _metric(rep.signature)[:, None] * matrix
    if n and np.max(np.abs(lowered + lowered.T)) > tol:
        raise FieldShapeError("M_ab is not antisymmetric after lowering the first index")
    if n == 0:
        return np.zeros((rep.f, rep.f), dtype=complex)
    return 0.25 * np.einsum("ab,abij->ij", lowered, _gamma_pairs(rep))


def _check_fields(psi: SpinorField, conn: ConnectionField, frame: FrameField, rep: GammaRepresentation):
    signatures = {psi.signature, conn.signature, frame.signature, rep.signature}
    if len(signatures) != 1:
        raise FieldShapeError(f"fields disagree on the signature: {sorted(map(str, signatures))}")
    shapes = {psi.grid_shape, conn.grid_shape, frame.grid_shape}
    if len(shapes) != 1:
        raise FieldShapeError(f"fields disagree on the grid: {sorted(shapes)}")
    if psi.f != rep.f:
        raise FieldShapeError(f"spinors have {psi.f} components, representation needs {rep.f}")


def _partials(psi: SpinorField, frame: FrameField) -> np.ndarray:
    """Central differences ∂_μΨ stacked on a leading axis."""
    data = psi.components
    return np.stack(
        [
            (np.roll(data, -1, axis=mu) - np.roll(data, 1, axis=mu)) / (2.0 * h)
            for mu, h in enumerate(frame.spacing)
        ]
    )


def _covariant(psi, conn, frame, rep, a, partials, pairs) -> np.ndarray:
    e_a = frame.vielbein[..., a, :]
    derivative = np.einsum("...m,m...i->...i", e_a, partials)
    gamma_a = np.einsum("...bcm,...m->...bc", conn.coefficients, e_a)
    lowered = _metric(rep.signature)[:, None] * gamma_a
    spin = 0.25 * np.einsum("...bc,bcij->...ij", lowered, pairs)
    return derivative + np.einsum("...ij,...j->...i", spin, psi.components)


def covariant_derivative(
    psi: SpinorField,
    conn: ConnectionField,
    frame: FrameField,
    a: int,
    rep: GammaRepresentation,
) -> SpinorField:
    """∇_aΨ = e_a^μ ∂_μΨ + ¼ Γ_{bcμ} e_a^μ γ^b γ^c Ψ."""
    _check_fields(psi, conn, frame, rep)
    rep.signature.check_index(a)
    partials = _partials(psi, frame)
    return SpinorField(psi.signature, _covariant(psi, conn, frame, rep, a, partials, _gamma_pairs(rep)))


def dirac_operator(
    psi: SpinorField,
    conn: ConnectionField,
    frame: FrameField,
    rep: GammaRepresentation,
) -> SpinorField:
    """γ^a ∇_aΨ."""
    _check_fields(psi, conn, frame, rep)
    partials = _partials(psi, frame)
    pairs = _gamma_pairs(rep)
    out = np.zeros_like(psi.components)
    for a, gamma in enumerate(rep.gammas):
        out += np.einsum("ij,...j->...i", gamma, _covariant(psi, conn, frame, rep, a, partials, pairs))
    return SpinorField(psi.signature, out)


def dirac_symbol(k: Sequence[float], spacing: Sequence[float], rep: GammaRepresentation) -> np.ndarray:
    """Lattice symbol Σ_a γ^a · i sin(k_a h_a)/h_a of the flat, connection-free operator."""
    out = np.zeros((rep.f, rep.f), dtype=complex)
    for gamma, k_a, h in zip(rep.gammas, k, spacing):
        out += gamma * (1j * np.sin(k_a * h) / h)
    return out


def laplacian_symbol(k: Sequence[float], spacing: Sequence[float], sig: Signature) -> float:
    """Symbol of the squared flat lattice Dirac operator: -Σ η_aa sin²(k_a h_a)/h_a²."""
    return -sum(
        s * (np.sin(k_a * h) / h) ** 2 for s, k_a, h in zip(sig.metric_signs, k, spacing)
    )


def operator_symbol(
    apply: Callable[[SpinorField], SpinorField], frame: FrameField, f: int
) -> np.ndarray:
    """Symbol of a translation-invariant operator on every lattice plane wave at once.

    Returns shape grid + (f, f); entry [m, :, j] is the FFT of the response to a
    unit impulse in spinor component j, so operator(ψ₀ e^{ik·x}) = symbol[k] ψ₀ e^{ik·x}.
    """
    shape = frame.grid_shape
    grid_axes = tuple(range(len(shape)))
    columns = []
    for j in range(f):
        impulse = np.zeros(shape + (f,), dtype=complex)
        impulse[(0,) * len(shape) + (j,)] = 1.0
        response = apply(SpinorField(frame.signature, impulse)).components
        columns.append(np.fft.fftn(response, axes=grid_axes))
    return np.stack(columns, axis=-1)


def lattice_momenta(frame: FrameField) -> np.ndarray:
    """k_μ = 2π m_μ / (N_μ h_μ) in FFT order, shape grid + (n,)."""
    axes = [
        2 * np.pi * np.fft.fftfreq(size, d=h) for size, h in zip(frame.grid_shape, frame.spacing)
    ]
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)


def _site_major(array: np.ndarray, grid_ndim: int) -> list:
    flat = array.reshape((-1,) + array.shape[grid_ndim:])
    return flat.tolist()


def frame_to_json(frame: FrameField) -> str:
    return json.dumps(
        {
            "kind": "frame",
            "signature": [frame.signature.p, frame.signature.q],
            "shape": list(frame.grid_shape),
            "spacing": list(frame.spacing),
            "vielbein": _site_major(frame.vielbein, len(frame.grid_shape)),
        }
    )


def connection_to_json(conn: ConnectionField) -> str:
    return json.dumps(
        {
            "kind": "connection",
            "signature": [conn.signature.p, conn.signature.q],
            "shape": list(conn.grid_shape),
            "coefficients": _site_major(conn.coefficients, len(conn.grid_shape)),
        }
    )


def spinor_field_to_json(psi: SpinorField) -> str:
    data = np.stack([psi.components.real, psi.components.imag], axis=-1)
    return json.dumps(
        {
            "kind": "spinor",
            "signature": [psi.signature.p, psi.signature.q],
            "shape": list(psi.grid_shape),
            "components": _site_major(data, len(psi.grid_shape)),
        }
    )


_FIELD_KEYS = {
    "frame": ("signature", "shape", "spacing", "vielbein"),
    "connection": ("signature", "shape", "coefficients"),
    "spinor": ("signature", "shape", "components"),
}


def _load(text: str, kind: str) -> Tuple[dict, Signature, Tuple[int, ...]]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FieldShapeError(f"{kind} field is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("kind") != kind:
        found = payload.get("kind") if isinstance(payload, dict) else type(payload).__name__
        raise FieldShapeError(f"expected a {kind} field, got {found!r}")
    missing = [key for key in _FIELD_KEYS[kind] if key not in payload]
    if missing:
        raise FieldShapeError(f"{kind} field is missing {', '.join(missing)}")
    try:
        sig = Signature(*payload["signature"])
        shape = tuple(int(size) for size in payload["shape"])
    except (TypeError, ValueError) as exc:
        raise FieldShapeError(f"{kind} field has a malformed signature or shape: {exc}") from exc
    return payload, sig, shape


def _array(payload: dict, key: str, shape: Tuple[int, ...]) -> np.ndarray:
    try:
        return np.asarray(payload[key], dtype=float).reshape(shape)
    except (TypeError, ValueError) as exc:
        raise FieldShapeError(f"{key!r} does not fit the shape {shape}: {exc}") from exc


def frame_from_json(text: str) -> FrameField:
    payload, sig, shape = _load(text, "frame")
    vielbein = _array(payload, "vielbein", shape + (sig.n, sig.n))
    spacing = _array(payload, "spacing", (sig.n,))
    return FrameField(sig, tuple(spacing), vielbein)


def connection_from_json(text: str) -> ConnectionField:
    payload, sig, shape = _load(text, "connection")
    n = sig.n
    return ConnectionField(sig, _array(payload, "coefficients", shape + (n, n, n)))


def spinor_field_from_json(text: str) -> SpinorField:
    payload, sig, shape = _load(text, "spinor")
    sites = int(np.prod(shape, dtype=int))
    data = _array(payload, "components", (sites, -1, 2)).reshape(shape + (-1, 2))
    return SpinorField(sig, data[..., 0] + 1j * data[..., 1])


def spinor_field_to_csv(psi: SpinorField) -> str:
    """One row per site: grid indices, then re/im of each component."""
    ndim = len(psi.grid_shape)
    if ndim > 2:
        raise FieldShapeError("CSV output is available for 1-d and 2-d grids only")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = [f"i{axis}" for axis in range(ndim)]
    for j in range(psi.f):
        header += [f"re{j}", f"im{j}"]
    writer.writerow(header)
    for index in np.ndindex(*psi.grid_shape):
        row = list(index)
        for value in psi.components[index]:
            row += [repr(float(value.real)), repr(float(value.imag))]
        writer.writerow(row)
    return buffer.getvalue()
