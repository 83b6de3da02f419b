"""Multivectors of the real and complexified Clifford algebras C(p,q).

A blade is stored as an n-bit mask; bit μ set means γ^μ is a factor, always in
ascending order. Coefficients are exact (Fraction, GaussianRational) unless a
caller supplies floats, as the group and geometry code does.
"""
import json
import logging
import numbers
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .config import DEFAULT_SETTINGS
from .errors import SignatureError, SignatureMismatchError
from .scalars import (
    GaussianRational,
    conjugate,
    exact,
    format_scalar,
    is_exact,
    parse_scalar,
)
from .signature import Signature

logger = logging.getLogger(__name__)

Blade = int


def grade(mask: Blade) -> int:
    return bin(mask).count("1")


def blade_indices(mask: Blade) -> Tuple[int, ...]:
    indices = []
    mu = 0
    while mask:
        if mask & 1:
            indices.append(mu)
        mask >>= 1
        mu += 1
    return tuple(indices)


def blade_mask(indices: Iterable[int]) -> Blade:
    mask = 0
    for mu in indices:
        if mask & (1 << mu):
            raise ValueError(f"repeated generator {mu} in an ascending blade")
        mask |= 1 << mu
    return mask


def reversion_sign(mask: Blade) -> int:
    k = grade(mask)
    return -1 if (k * (k - 1) // 2) % 2 else 1


def _reordering_sign(a: Blade, b: Blade) -> int:
    # one transposition per pair (i in a, j in b) with i > j
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _blade_product(negative_mask: int, a: Blade, b: Blade) -> Tuple[int, Blade]:
    sign = _reordering_sign(a, b)
    if bin(a & b & negative_mask).count("1") % 2:
        sign = -sign
    return sign, a ^ b


def blade_product(sig: Signature, a: Blade, b: Blade) -> Tuple[int, Blade]:
    """Sign and mask of the product of two ascending blades."""
    return _blade_product(sig.negative_mask, a, b)


def blades_commute(sig: Signature, a: Blade, b: Blade) -> bool:
    return blade_product(sig, a, b)[0] == blade_product(sig, b, a)[0]


class Multivector:
    __slots__ = ("_signature", "_terms")

    def __init__(self, signature: Signature, terms: Mapping[Blade, object] = None):
        self._signature = signature
        limit = signature.dimension
        cleaned: Dict[Blade, object] = {}
        for mask, value in (terms or {}).items():
            if not 0 <= mask < limit:
                raise SignatureError(f"blade mask {mask} out of range for {signature}")
            value = exact(value)
            if value != 0:
                cleaned[mask] = value
        self._terms = MappingProxyType(cleaned)

    @property
    def signature(self) -> Signature:
        return self._signature

    @property
    def terms(self) -> Mapping[Blade, object]:
        return self._terms

    def coefficient(self, mask: Blade):
        return self._terms.get(mask, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self) -> Tuple[int, ...]:
        return tuple(sorted({grade(mask) for mask in self._terms}))

    @property
    def is_complex(self) -> bool:
        for value in self._terms.values():
            if isinstance(value, GaussianRational) and not value.is_real():
                return True
            if isinstance(value, complex) and value.imag != 0:
                return True
        return False

    @property
    def is_exact(self) -> bool:
        return all(is_exact(value) for value in self._terms.values())

    def _check(self, other: "Multivector"):
        if other.signature != self._signature:
            raise SignatureMismatchError(self._signature, other.signature)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return (
                self._signature == other.signature
                and dict(self._terms) == dict(other.terms)
            )
        if isinstance(other, numbers.Number) or isinstance(other, GaussianRational):
            return self == scalar(self._signature, other)
        return NotImplemented

    __hash__ = None

    def __neg__(self):
        return Multivector(self._signature, {m: -v for m, v in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Multivector):
            try:
                other = scalar(self._signature, other)
            except TypeError:
                return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for mask, value in other.terms.items():
            terms[mask] = terms.get(mask, 0) + value
        return Multivector(self._signature, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        try:
            factor = exact(other)
        except TypeError:
            return NotImplemented
        return Multivector(
            self._signature, {m: v * factor for m, v in self._terms.items()}
        )

    def __rmul__(self, other):
        try:
            factor = exact(other)
        except TypeError:
            return NotImplemented
        return Multivector(
            self._signature, {m: factor * v for m, v in self._terms.items()}
        )

    def __truediv__(self, other):
        if isinstance(other, Multivector):
            return self * other.inverse()
        factor = exact(other)
        return Multivector(
            self._signature, {m: v / factor for m, v in self._terms.items()}
        )

    def grade_part(self, k: int) -> "Multivector":
        return Multivector(
            self._signature, {m: v for m, v in self._terms.items() if grade(m) == k}
        )

    def scalar_part(self):
        return self.coefficient(0)

    def even_part(self) -> "Multivector":
        return even_part(self)

    def odd_part(self) -> "Multivector":
        return Multivector(
            self._signature, {m: v for m, v in self._terms.items() if grade(m) % 2}
        )

    def bar(self) -> "Multivector":
        return bar(self)

    def inverse(self) -> "Multivector":
        return inverse(self)

    def max_abs(self) -> float:
        return max((abs(complex(v)) for v in self._terms.values()), default=0.0)

    def allclose(self, other, tol: float = 1e-10) -> bool:
        return (self - other).max_abs() <= tol

    def chop(self, tol: float) -> "Multivector":
        return Multivector(
            self._signature,
            {m: v for m, v in self._terms.items() if abs(complex(v)) > tol},
        )

    def to_array(self, dtype=complex) -> np.ndarray:
        """Coordinates in the blade basis ordered by mask."""
        out = np.zeros(self._signature.dimension, dtype=dtype)
        for mask, value in self._terms.items():
            out[mask] = complex(value) if np.issubdtype(dtype, np.complexfloating) else float(value)
        return out

    @classmethod
    def from_array(cls, sig: Signature, coords, tol: float = 0.0) -> "Multivector":
        coords = np.asarray(coords)
        if coords.shape != (sig.dimension,):
            raise SignatureError(
                f"expected {sig.dimension} coordinates for {sig}, got {coords.shape}"
            )
        real = not np.iscomplexobj(coords) or np.all(np.abs(coords.imag) <= tol)
        terms = {}
        for mask, value in enumerate(coords):
            if abs(value) > tol:
                terms[mask] = float(np.real(value)) if real else complex(value)
        return cls(sig, terms)

    def to_json(self) -> str:
        payload = {
            "signature": [self._signature.p, self._signature.q],
            "terms": [
                {"blade": list(blade_indices(mask)), **format_scalar(value)}
                for mask, value in sorted(self._terms.items())
            ],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "Multivector":
        payload = json.loads(text) if isinstance(text, str) else text
        p, q = payload["signature"]
        sig = Signature(p, q)
        terms = {}
        for term in payload.get("terms", []):
            mask = blade_mask(term["blade"])
            terms[mask] = terms.get(mask, 0) + parse_scalar(term)
        return cls(sig, terms)

    def __repr__(self):
        if not self._terms:
            return f"Multivector{self._signature}(0)"
        parts = []
        for mask, value in sorted(self._terms.items()):
            name = "".join(f"g{mu}" for mu in blade_indices(mask)) or "1"
            parts.append(f"({value})*{name}")
        return f"Multivector{self._signature}({' + '.join(parts)})"


def scalar(sig: Signature, value) -> Multivector:
    return Multivector(sig, {0: value})


def generator(sig: Signature, mu: int) -> Multivector:
    sig.check_index(mu)
    return Multivector(sig, {1 << mu: 1})


def vector(sig: Signature, coefficients: Sequence) -> Multivector:
    if len(coefficients) != sig.n:
        raise SignatureError(f"{sig} needs {sig.n} vector components")
    return Multivector(sig, {1 << mu: c for mu, c in enumerate(coefficients)})


def blade(sig: Signature, indices: Sequence[int]) -> Multivector:
    """Product γ^{i1}γ^{i2}... in the order given (repeats use the metric)."""
    result = scalar(sig, 1)
    for mu in indices:
        result = result * generator(sig, mu)
    return result


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    if a.signature != b.signature:
        raise SignatureMismatchError(a.signature, b.signature)
    sig = a.signature
    negative = sig.negative_mask
    out: Dict[Blade, object] = {}
    for ma, va in a.terms.items():
        for mb, vb in b.terms.items():
            sign, mask = _blade_product(negative, ma, mb)
            value = va * vb
            out[mask] = out.get(mask, 0) + (value if sign > 0 else -value)
    return Multivector(sig, out)


def bar(a: Multivector) -> Multivector:
    """Reversion combined with complex conjugation of the coefficients."""
    return Multivector(
        a.signature,
        {m: reversion_sign(m) * conjugate(v) for m, v in a.terms.items()},
    )


def even_part(a: Multivector) -> Multivector:
    return Multivector(
        a.signature, {m: v for m, v in a.terms.items() if grade(m) % 2 == 0}
    )


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a * b - b * a


def orientation_operator(sig: Signature) -> Multivector:
    """ε = γ^0 γ^1 ... γ^{n-1}."""
    if sig.n == 0:
        raise SignatureError("the orientation operator needs n >= 1")
    return Multivector(sig, {sig.dimension - 1: 1})


def orientation_projectors(sig: Signature) -> Tuple[Multivector, Multivector]:
    """(P_L, P_R) = ((1 - ε)/2, (1 + ε)/2); needs ε² = +1."""
    if sig.orientation_square() != 1:
        raise SignatureError(f"ε² = -1 in {sig}; its eigenvalues are not real")
    eps = orientation_operator(sig)
    one = scalar(sig, 1)
    half = Fraction(1, 2)
    return (one - eps) * half, (one + eps) * half


def multiplication_matrix(a: Multivector, side: str = "left", dtype=complex) -> np.ndarray:
    """Matrix of x ↦ a·x (side="left") or x ↦ x·a in the blade basis."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    sig = a.signature
    size = sig.dimension
    negative = sig.negative_mask
    out = np.zeros((size, size), dtype=dtype)
    cast = complex if np.issubdtype(dtype, np.complexfloating) else float
    terms = [(m, cast(v)) for m, v in a.terms.items()]
    for column in range(size):
        for mask, value in terms:
            if side == "left":
                sign, target = _blade_product(negative, mask, column)
            else:
                sign, target = _blade_product(negative, column, mask)
            out[target, column] += sign * value
    return out


def _to_domain(value, domain):
    if isinstance(value, GaussianRational):
        re, im = value.real, value.imag
    else:
        re, im = Fraction(value), Fraction(0)
    real = QQ(re.numerator, re.denominator)
    if domain == QQ:
        return real
    return domain(real, QQ(im.numerator, im.denominator))


def _from_domain(element, domain):
    if domain == QQ:
        return Fraction(int(element.numerator), int(element.denominator))
    return GaussianRational(
        Fraction(int(element.x.numerator), int(element.x.denominator)),
        Fraction(int(element.y.numerator), int(element.y.denominator)),
    )


def _exact_inverse(a: Multivector) -> Multivector:
    """Solve a·x = 1 over QQ (or QQ_I) with sympy's exact domain matrices."""
    sig = a.signature
    size = sig.dimension
    domain = QQ_I if a.is_complex else QQ
    entries = [[domain.zero] * size for _ in range(size)]
    terms = [(mask, _to_domain(value, domain)) for mask, value in a.terms.items()]
    for column in range(size):
        for mask, value in terms:
            sign, target = blade_product(sig, mask, column)
            entries[target][column] += value if sign > 0 else -value
    rhs = [[domain.one]] + [[domain.zero] for _ in range(size - 1)]
    left = DomainMatrix(entries, (size, size), domain)
    try:
        solution = left.lu_solve(DomainMatrix(rhs, (size, 1), domain))
    except DMNonInvertibleMatrixError as exc:
        raise ZeroDivisionError("multivector is not invertible") from exc
    coords = [_from_domain(row[0], domain) for row in solution.to_list()]
    return Multivector(sig, dict(enumerate(coords)))


def inverse(a: Multivector) -> Multivector:
    """Two-sided inverse; exact when the coefficients are exact."""
    sig = a.signature
    norm = bar(a) * a
    if norm.grades() == (0,):
        return bar(a) / norm.scalar_part()
    if a.is_exact:
        return _exact_inverse(a)
    left = multiplication_matrix(a, "left")
    rhs = np.zeros(sig.dimension, dtype=complex)
    rhs[0] = 1.0
    try:
        coords = np.linalg.solve(left, rhs)
    except np.linalg.LinAlgError as exc:
        raise ZeroDivisionError("multivector is not invertible") from exc
    return Multivector.from_array(sig, coords)


@dataclass(frozen=True)
class CenterReport:
    dimension: int
    basis: Tuple[Multivector, ...]


def center(sig: Signature, even_only: bool = False) -> CenterReport:
    """Center Z of C(p,q), or Z₀ of the even subalgebra C₀(p,q).

    Commutators with a generator send distinct blades to distinct blades, so
    the linear system for Σ c_B γ_B decouples: the center is spanned by the
    blades commuting with every generator (bivectors γ^μγ^ν for C₀).
    """
    sig.require_at_most(DEFAULT_SETTINGS.max_concrete_n, "center")
    if even_only and sig.n == 0:
        raise SignatureError("C₀(0,0) is not defined")
    if even_only:
        generators = [(1 << mu) | (1 << nu) for mu in range(sig.n) for nu in range(mu + 1, sig.n)]
        candidates = [m for m in range(sig.dimension) if grade(m) % 2 == 0]
    else:
        generators = [1 << mu for mu in range(sig.n)]
        candidates = range(sig.dimension)
    basis = tuple(
        Multivector(sig, {mask: 1})
        for mask in candidates
        if all(blades_commute(sig, mask, g) for g in generators)
    )
    logger.debug("center of %s%s has dimension %d", "C0" if even_only else "C", sig, len(basis))
    return CenterReport(len(basis), basis)
