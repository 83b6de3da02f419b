"""Symbolic classification of C(p,q), its even part and its complexification.

Every real Clifford algebra is a full matrix algebra M(d, K) over K ∈ {ℝ, ℂ, ℍ},
or a direct sum of two copies of one. ``classify_real`` derives the type by an
explicit reduction chain and cross-checks it against the mod-8 table.
"""
import logging
from dataclasses import dataclass, replace
from enum import Enum
from math import isqrt
from typing import List, Sequence, Tuple, Union

from .config import DEFAULT_SETTINGS, Settings
from .errors import ClassificationError, SignatureError, TensorTypeError
from .signature import Signature

logger = logging.getLogger(__name__)


class DivisionRing(Enum):
    R = "R"
    C = "C"
    H = "H"

    @property
    def dimension(self) -> int:
        return {"R": 1, "C": 2, "H": 4}[self.value]

    @property
    def symbol(self) -> str:
        return {"R": "ℝ", "C": "ℂ", "H": "ℍ"}[self.value]


@dataclass(frozen=True)
class MatrixAlgebraType:
    d: int
    ring: DivisionRing
    doubled: bool = False

    def __post_init__(self):
        if self.d < 1 or self.d & (self.d - 1):
            raise ValueError(f"block size must be a power of two, got {self.d}")

    @property
    def real_dimension(self) -> int:
        return (2 if self.doubled else 1) * self.d * self.d * self.ring.dimension

    def block(self) -> "MatrixAlgebraType":
        return replace(self, doubled=False)

    def __str__(self):
        single = self.ring.symbol if self.d == 1 else f"({self.d},{self.ring.symbol})"
        return f"{single} ⊕ {single}" if self.doubled else single

    def to_json(self) -> dict:
        return {"d": self.d, "ring": self.ring.value, "doubled": self.doubled}

    @classmethod
    def from_json(cls, payload: dict) -> "MatrixAlgebraType":
        return cls(int(payload["d"]), DivisionRing(payload["ring"]), bool(payload["doubled"]))

    @classmethod
    def from_dimension(cls, dimension: int, ring: DivisionRing, doubled: bool = False):
        """Block size read off the real dimension of the whole algebra."""
        per_block = dimension // (2 if doubled else 1) // ring.dimension
        d = isqrt(per_block)
        if d * d != per_block:
            raise ValueError(f"{dimension} is not the dimension of a {ring.symbol} matrix algebra")
        return cls(d, ring, doubled)


R, C, H = DivisionRing.R, DivisionRing.C, DivisionRing.H

# ring of a ⊗ ring of b -> (ring, extra block factor, doubles)
_RING_PRODUCTS = {
    (R, R): (R, 1, False),
    (R, C): (C, 1, False),
    (R, H): (H, 1, False),
    (C, C): (C, 1, True),
    (C, H): (C, 2, False),
    (H, H): (R, 4, False),
}


def tensor_type(a: MatrixAlgebraType, b: MatrixAlgebraType) -> MatrixAlgebraType:
    """M(d1,K1)⊗M(d2,K2) over ℝ; doubling distributes, ℝ is neutral."""
    if a.doubled and b.doubled:
        raise TensorTypeError(
            f"{a} ⊗ {b} splits into four blocks and is not a single algebra type"
        )
    key = (a.ring, b.ring)
    if key not in _RING_PRODUCTS:
        key = (b.ring, a.ring)
    ring, factor, doubles = _RING_PRODUCTS[key]
    return MatrixAlgebraType(
        a.d * b.d * factor, ring, doubled=a.doubled or b.doubled or doubles
    )


class ReductionRule(Enum):
    SIGNATURE = "signature"
    HYPERBOLIC_REDUCTION = "hyperbolic-reduction"
    PERIODICITY = "periodicity"
    EUCLIDEAN_REDUCTION = "euclidean-reduction"
    ANTI_EUCLIDEAN_REDUCTION = "anti-euclidean-reduction"
    BASE_CASE = "base-case"
    TENSOR_PRODUCT = "tensor-product"


@dataclass(frozen=True)
class ReductionStep:
    rule: ReductionRule
    expression: str

    def to_json(self) -> dict:
        return {"rule": self.rule.value, "expression": self.expression}


@dataclass(frozen=True)
class ReductionChain:
    steps: Tuple[ReductionStep, ...]

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_json(self) -> list:
        return [step.to_json() for step in self.steps]


BASE_CASES = {
    Signature(0, 0): MatrixAlgebraType(1, R),
    Signature(1, 0): MatrixAlgebraType(1, R, doubled=True),
    Signature(0, 1): MatrixAlgebraType(1, C),
    Signature(2, 0): MatrixAlgebraType(2, R),
    Signature(1, 1): MatrixAlgebraType(2, R),
    Signature(0, 2): MatrixAlgebraType(1, H),
}

Factor = Union[MatrixAlgebraType, Signature]


def _render(factors: Sequence[Factor]) -> str:
    return " ⊗ ".join(
        f"C({f.p},{f.q})" if isinstance(f, Signature) else str(f) for f in factors
    )


def _check_symbolic(sig: Signature, settings: Settings):
    sig.require_at_most(settings.max_symbolic_n, "symbolic classification")


def periodicity_type(sig: Signature) -> MatrixAlgebraType:
    """Table lookup on (p - q) mod 8."""
    residue = (sig.p - sig.q) % 8
    dimension = sig.dimension
    if residue in (0, 2):
        return MatrixAlgebraType.from_dimension(dimension, R)
    if residue == 1:
        return MatrixAlgebraType.from_dimension(dimension, R, doubled=True)
    if residue in (3, 7):
        return MatrixAlgebraType.from_dimension(dimension, C)
    if residue in (4, 6):
        return MatrixAlgebraType.from_dimension(dimension, H)
    return MatrixAlgebraType.from_dimension(dimension, H, doubled=True)


def classify_real(
    sig: Signature, settings: Settings = DEFAULT_SETTINGS
) -> Tuple[MatrixAlgebraType, ReductionChain]:
    _check_symbolic(sig, settings)
    steps: List[ReductionStep] = [
        ReductionStep(ReductionRule.SIGNATURE, _render([sig]))
    ]
    prefix: List[Factor] = []
    m = min(sig.p, sig.q)
    residual = Signature(sig.p - m, sig.q - m)
    if m:
        prefix.append(MatrixAlgebraType(1 << m, R))
        steps.append(
            ReductionStep(ReductionRule.HYPERBOLIC_REDUCTION, _render(prefix + [residual]))
        )
    while residual.n >= 8:
        prefix.append(MatrixAlgebraType(16, R))
        residual = Signature(max(residual.p - 8, 0), max(residual.q - 8, 0))
        steps.append(ReductionStep(ReductionRule.PERIODICITY, _render(prefix + [residual])))
    while residual not in BASE_CASES:
        if residual.q == 0:
            prefix.append(Signature(2, 0))
            residual = Signature(0, residual.p - 2)
            rule = ReductionRule.EUCLIDEAN_REDUCTION
        else:
            prefix.append(Signature(0, 2))
            residual = Signature(residual.q - 2, 0)
            rule = ReductionRule.ANTI_EUCLIDEAN_REDUCTION
        steps.append(ReductionStep(rule, _render(prefix + [residual])))

    factors = [BASE_CASES[f] if isinstance(f, Signature) else f for f in prefix + [residual]]
    steps.append(ReductionStep(ReductionRule.BASE_CASE, _render(factors)))
    result = factors[0]
    for index, factor in enumerate(factors[1:], start=2):
        result = tensor_type(result, factor)
        steps.append(
            ReductionStep(ReductionRule.TENSOR_PRODUCT, _render([result] + factors[index:]))
        )

    expected = periodicity_type(sig)
    if result != expected:
        raise ClassificationError(f"reduction chain gave {result} for {sig}, table says {expected}")
    logger.debug("C%s = %s in %d steps", sig, result, len(steps))
    return result, ReductionChain(tuple(steps))


def classify_complex(n: int, settings: Settings = DEFAULT_SETTINGS) -> MatrixAlgebraType:
    if n < 0 or n > settings.max_symbolic_n:
        raise SignatureError(f"n must lie in 0..{settings.max_symbolic_n}, got {n}")
    if n % 2 == 0:
        return MatrixAlgebraType(1 << (n // 2), C)
    return MatrixAlgebraType(1 << ((n - 1) // 2), C, doubled=True)


def classify_complex_even(n: int, settings: Settings = DEFAULT_SETTINGS) -> MatrixAlgebraType:
    """C₀^ℂ(n) ≅ C^ℂ(n-1)."""
    if n < 1:
        raise SignatureError("the even subalgebra needs n >= 1")
    return classify_complex(n - 1, settings)


def classify_even(sig: Signature, settings: Settings = DEFAULT_SETTINGS) -> MatrixAlgebraType:
    """C₀(p,q) ≅ C(p,q-1) for q ≥ 1 and ≅ C(q,p-1) for p ≥ 1."""
    if sig.n == 0:
        raise SignatureError("C₀(0,0) is not defined")
    _check_symbolic(sig, settings)
    routes = []
    if sig.q >= 1:
        routes.append(classify_real(Signature(sig.p, sig.q - 1), settings)[0])
    if sig.p >= 1:
        routes.append(classify_real(Signature(sig.q, sig.p - 1), settings)[0])
    if len(set(routes)) != 1:
        raise ClassificationError(f"even-subalgebra routes disagree for {sig}: {routes}")
    return routes[0]


@dataclass(frozen=True)
class SpinorTypeReport:
    dirac_dimension: int
    weyl_defined: bool
    majorana_exists: bool
    weyl_majorana_exists: bool
    chirality_uses_i: bool
    real_type: bool = False
    swapped_real_type: bool = False

    def to_json(self) -> dict:
        return {
            "real_type": self.real_type,
            "swapped_real_type": self.swapped_real_type,
            "dirac_dimension": self.dirac_dimension,
            "weyl_defined": self.weyl_defined,
            "majorana_exists": self.majorana_exists,
            "weyl_majorana_exists": self.weyl_majorana_exists,
            "chirality_uses_i": self.chirality_uses_i,
        }


def _real_type(t: MatrixAlgebraType) -> bool:
    return t.ring is R


def spinor_types(sig: Signature, settings: Settings = DEFAULT_SETTINGS) -> SpinorTypeReport:
    """Which spinor species exist in signature (p,q).

    Majorana spinors exist when C(p,q) or C(q,p) is of real type. Weyl-Majorana
    spinors additionally need p - q ≡ 0 mod 8, which is when the even part
    C₀(p,q) is itself of real type.
    """
    _check_symbolic(sig, settings)
    direct = classify_real(sig, settings)[0]
    swapped = classify_real(sig.swapped(), settings)[0]
    majorana = _real_type(direct) or _real_type(swapped)
    weyl = sig.n % 2 == 0
    return SpinorTypeReport(
        dirac_dimension=1 << (sig.n // 2),
        weyl_defined=weyl,
        majorana_exists=majorana,
        weyl_majorana_exists=majorana and (sig.p - sig.q) % 8 == 0,
        chirality_uses_i=sig.n > 0 and sig.orientation_square() == -1,
        real_type=_real_type(direct),
        swapped_real_type=_real_type(swapped),
    )
