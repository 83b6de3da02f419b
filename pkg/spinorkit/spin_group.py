"""Clifford group, Pin and Spin, and the covering map χ onto O(p,q).

χ(s) sends x to s·x·s⁻¹. Elements are plain multivectors with float
coefficients; the factor parity is carried along when an element is built as a
product of vectors.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .config import DEFAULT_SETTINGS, Settings
from .errors import (
    GradeError,
    NotInCliffordGroupError,
    PinNormalFormError,
    SignatureError,
    SignatureMismatchError,
)
from .multivector import (
    Multivector,
    bar,
    generator,
    grade,
    multiplication_matrix,
    scalar,
    vector,
)
from .signature import Signature

logger = logging.getLogger(__name__)


class Component(Enum):
    L_PLUS_UP = "L+↑"
    L_PLUS_DOWN = "L+↓"
    L_MINUS_UP = "L-↑"
    L_MINUS_DOWN = "L-↓"
    L_PLUS = "L+"
    L_MINUS = "L-"


_COMPONENTS = {
    (0, 1): Component.L_PLUS_UP,
    (0, -1): Component.L_PLUS_DOWN,
    (1, 1): Component.L_MINUS_UP,
    (1, -1): Component.L_MINUS_DOWN,
}


def _is_definite(sig: Signature) -> bool:
    return sig.p == 0 or sig.q == 0


@dataclass(frozen=True, eq=False)
class SpinElement:
    value: Multivector
    factor_parity: Optional[int] = None
    norm_sign: Optional[int] = None

    @property
    def signature(self) -> Signature:
        return self.value.signature

    def __mul__(self, other: "SpinElement") -> "SpinElement":
        parity = None
        if self.factor_parity is not None and other.factor_parity is not None:
            parity = (self.factor_parity + other.factor_parity) % 2
        sign = None
        if self.norm_sign is not None and other.norm_sign is not None:
            sign = self.norm_sign * other.norm_sign
        return SpinElement(self.value * other.value, parity, sign)

    def __neg__(self) -> "SpinElement":
        return SpinElement(-self.value, self.factor_parity, self.norm_sign)


@dataclass(frozen=True, eq=False)
class OrthogonalMatrix:
    entries: np.ndarray
    component: Component

    def to_json(self) -> dict:
        return {
            "entries": [[float(x) for x in row] for row in self.entries],
            "component": self.component.value,
        }


def from_vectors(sig: Signature, vectors: Sequence[Sequence[float]]) -> SpinElement:
    """Product v_1 v_2 ... v_k of vectors given by their components."""
    value = scalar(sig, 1.0)
    for components in vectors:
        value = value * vector(sig, [float(c) for c in components])
    return SpinElement(value, factor_parity=len(vectors) % 2)


def random_unit_vectors(
    sig: Signature, count: int, rng: np.random.Generator, min_ratio: float = 0.8
) -> List[np.ndarray]:
    """Vectors with |v·v| = 1, drawn away from the null cone.

    A Gaussian draw is kept when |v·v| >= min_ratio·|v|², which bounds the
    Euclidean length of the normalised vector by 1/√min_ratio.
    """
    if not 0 < min_ratio <= 1:
        raise ValueError("min_ratio must lie in (0, 1]")
    if sig.n == 0:
        raise SignatureError("C(0,0) has no vectors")
    signs = np.array(sig.metric_signs, dtype=float)
    vectors: List[np.ndarray] = []
    while len(vectors) < count:
        v = rng.normal(size=sig.n)
        square = float(np.sum(signs * v * v))
        if abs(square) >= min_ratio * float(np.sum(v * v)):
            vectors.append(v / math.sqrt(abs(square)))
    return vectors


def random_versor(sig: Signature, rng: np.random.Generator, max_factors: int = 3) -> SpinElement:
    """Product of 1..max_factors random unit vectors."""
    count = int(rng.integers(1, max_factors + 1))
    return from_vectors(sig, random_unit_vectors(sig, count, rng))


def _grade_parity(value: Multivector) -> Optional[int]:
    parities = {grade(mask) % 2 for mask in value.terms}
    if len(parities) == 1:
        return parities.pop()
    return None if parities else 0


def numeric_inverse(value: Multivector) -> Multivector:
    """Solve s·x = 1 in the 2ⁿ-dimensional coefficient space."""
    left = multiplication_matrix(value, "left")
    rhs = np.zeros(value.signature.dimension, dtype=complex)
    rhs[0] = 1.0
    try:
        coords = np.linalg.solve(left, rhs)
    except np.linalg.LinAlgError as exc:
        raise NotInCliffordGroupError(f"{value!r} is not invertible") from exc
    return Multivector.from_array(value.signature, coords)


def component_from_matrix(
    entries: np.ndarray, sig: Signature, parity: Optional[int] = None
) -> Component:
    """Component of the reflection product (-1)^k χ(s) read off the matrix.

    Orientation comes from its determinant, time orientation ("↑") from the
    sign of the determinant of its block on the negative-square generators.
    """
    reflection = -entries if parity == 1 else entries
    det_sign = 0 if np.linalg.det(reflection) > 0 else 1
    if _is_definite(sig):
        return Component.L_PLUS if det_sign == 0 else Component.L_MINUS
    negative = slice(sig.p, sig.n)
    time_sign = 1 if np.linalg.det(reflection[negative, negative]) > 0 else -1
    return _COMPONENTS[(det_sign, time_sign)]


def chi(
    s: Union[SpinElement, Multivector],
    sig: Optional[Signature] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> OrthogonalMatrix:
    """Matrix of x ↦ s·x·s⁻¹ on the generator span; column μ is the image of γ^μ."""
    element = s if isinstance(s, SpinElement) else SpinElement(s)
    value = element.value
    sig = value.signature if sig is None else sig
    if sig != value.signature:
        raise SignatureMismatchError(sig, value.signature, "signature and element")
    inverse = numeric_inverse(value)
    n = sig.n
    entries = np.zeros((n, n))
    for mu in range(n):
        image = (value * generator(sig, mu) * inverse).to_array()
        vector_part = np.array([image[1 << nu] for nu in range(n)])
        residual = image.copy()
        for nu in range(n):
            residual[1 << nu] = 0.0
        leak = max(np.max(np.abs(residual)), np.max(np.abs(vector_part.imag), initial=0.0))
        if leak > settings.tolerance:
            raise NotInCliffordGroupError(
                f"s·γ^{mu}·s⁻¹ leaves the generator span (residual {leak:.3g})"
            )
        entries[:, mu] = vector_part.real
    metric = np.diag(sig.metric_signs).astype(float)
    if n and np.max(np.abs(entries.T @ metric @ entries - metric)) > settings.tolerance:
        raise NotInCliffordGroupError("χ(s) does not preserve the metric")
    parity = element.factor_parity
    if parity is None:
        parity = _grade_parity(value)
    return OrthogonalMatrix(entries, component_from_matrix(entries, sig, parity))


def _norm_scalar(value: Multivector, tol: float) -> float:
    norm = bar(value) * value
    off_scalar = max(
        (abs(complex(v)) for m, v in norm.terms.items() if m != 0), default=0.0
    )
    scalar_part = complex(norm.scalar_part())
    if off_scalar > tol or abs(scalar_part.imag) > tol:
        raise PinNormalFormError("element is not expressible in Pin normal form: bar(s)·s is not a scalar")
    if abs(scalar_part.real) <= tol:
        raise PinNormalFormError("element is not expressible in Pin normal form: bar(s)·s = 0")
    return scalar_part.real


def pin_normalize(s: SpinElement, settings: Settings = DEFAULT_SETTINGS) -> SpinElement:
    """Rescale s so that |bar(s)·s| = 1, recording the sign of bar(s)·s."""
    norm = _norm_scalar(s.value, settings.tolerance)
    value = s.value * (1.0 / math.sqrt(abs(norm)))
    return SpinElement(value, s.factor_parity, 1 if norm > 0 else -1)


def component_of(s: SpinElement, settings: Settings = DEFAULT_SETTINGS) -> Component:
    """Component from the parity of k and the sign of bar(s)·s."""
    parity = s.factor_parity if s.factor_parity is not None else _grade_parity(s.value)
    if parity is None:
        raise GradeError("mixed even/odd grade support: the element is not in Pin")
    sign = s.norm_sign
    if sign is None:
        sign = 1 if _norm_scalar(s.value, settings.tolerance) > 0 else -1
    if _is_definite(s.signature):
        return Component.L_PLUS if parity == 0 else Component.L_MINUS
    return _COMPONENTS[(parity, sign)]


def exp_multivector(a: Multivector, terms: int = 30) -> Multivector:
    """exp(a) by scaling and squaring around a truncated power series."""
    norm = a.max_abs()
    squarings = 0
    while norm > 0.5:
        norm /= 2.0
        squarings += 1
    small = a * (1.0 / (2 ** squarings))
    result = scalar(a.signature, 1.0)
    term = scalar(a.signature, 1.0)
    for k in range(1, terms + 1):
        term = term * small * (1.0 / k)
        result = result + term
    for _ in range(squarings):
        result = result * result
    return result


def exp_bivector(b: Multivector, settings: Settings = DEFAULT_SETTINGS) -> SpinElement:
    if any(grade(mask) != 2 for mask in b.terms):
        raise GradeError(f"expected a bivector, got grades {b.grades()}")
    sig = b.signature
    if b.is_zero():
        return SpinElement(scalar(sig, 1.0), 0, 1)
    square = b * b
    off_scalar = max(
        (abs(complex(v)) for m, v in square.terms.items() if m != 0), default=0.0
    )
    if off_scalar < 1e-12:
        c = float(complex(square.scalar_part()).real)
        if c < 0:
            angle = math.sqrt(-c)
            value = scalar(sig, math.cos(angle)) + b * (math.sin(angle) / angle)
        elif c > 0:
            angle = math.sqrt(c)
            value = scalar(sig, math.cosh(angle)) + b * (math.sinh(angle) / angle)
        else:
            value = scalar(sig, 1.0) + b * 1.0
    else:
        value = exp_multivector(b, settings.series_terms)
    residual = (bar(value) * value - scalar(sig, 1.0)).max_abs()
    if residual > settings.tolerance:
        logger.warning("exp of bivector: bar(s)·s deviates from 1 by %.3g", residual)
    return SpinElement(value, 0, 1)


def lie_algebra_basis(sig: Signature) -> Tuple[Multivector, ...]:
    """The n(n-1)/2 bivectors γ^μγ^ν with μ < ν."""
    if sig.n < 2:
        raise SignatureError(f"the spin Lie algebra needs n >= 2, got {sig}")
    return tuple(
        Multivector(sig, {(1 << mu) | (1 << nu): 1})
        for mu in range(sig.n)
        for nu in range(mu + 1, sig.n)
    )


def _direction(sig: Signature, axis: Union[int, Sequence[float]], allowed) -> Multivector:
    if isinstance(axis, int):
        sig.check_index(axis)
        if axis not in allowed:
            raise SignatureError(f"axis {axis} is not allowed here for {sig}")
        return generator(sig, axis) * 1.0
    components = np.asarray(axis, dtype=float)
    if components.shape != (sig.n,):
        raise SignatureError(f"direction needs {sig.n} components")
    if any(abs(components[mu]) > 0 for mu in range(sig.n) if mu not in allowed):
        raise SignatureError("direction has components outside the allowed axes")
    length = math.sqrt(abs(float(np.sum(components ** 2 * np.array(sig.metric_signs)))))
    if length == 0:
        raise SignatureError("direction must be non-null")
    return vector(sig, list(components / length))


def boost(
    sig: Signature,
    beta: float,
    axis: Union[int, Sequence[float]],
    settings: Settings = DEFAULT_SETTINGS,
) -> SpinElement:
    """exp((β/2) γ^t v) for the first time-like generator t and a space-like v."""
    if _is_definite(sig):
        raise SignatureError(f"{sig} has no boosts")
    time_like = sig.time_like_indices()
    t = time_like[0]
    spatial = [mu for mu in range(sig.n) if mu not in time_like]
    direction = _direction(sig, axis, spatial)
    return exp_bivector(generator(sig, t) * direction * (beta / 2.0), settings)


def rotation(
    sig: Signature,
    theta: float,
    plane: Tuple[int, int],
    settings: Settings = DEFAULT_SETTINGS,
) -> SpinElement:
    """exp((θ/2) γ^μ γ^ν) for generators of equal sign."""
    mu, nu = plane
    sig.check_index(mu)
    sig.check_index(nu)
    if mu == nu or sig.metric_sign(mu) != sig.metric_sign(nu):
        raise SignatureError(f"plane ({mu},{nu}) is not a rotation plane of {sig}")
    bivector = generator(sig, mu) * generator(sig, nu) * (theta / 2.0)
    return exp_bivector(bivector, settings)
