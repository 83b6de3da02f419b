"""Standard Model fermion content, the hypercharge audit and spinor bilinears."""
import json
import logging
import os as _os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .errors import RegistryError
from .gamma import GammaRepresentation, SpinorVector, weyl_split

logger = logging.getLogger(__name__)

_basepath = _os.path.dirname(__file__)
REGISTRY_PATH = _os.path.abspath(_os.path.join(_basepath, "data", "standard_model.json"))

FAMILIES = (1, 2, 3)
SECTORS = ("quark", "lepton")


class Chirality(Enum):
    L = "L"
    R = "R"


@dataclass(frozen=True)
class ParticleSpec:
    name: str
    family: int
    sector: str
    chirality: Chirality
    su2: str
    slot: Optional[int]
    hypercharge: Fraction
    color: str

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RegistryError([f"{self.name}: family {self.family} outside 1..3"])
        if self.sector not in SECTORS:
            raise RegistryError([f"{self.name}: unknown sector {self.sector!r}"])
        expected_color = "triplet" if self.sector == "quark" else "singlet"
        if self.color != expected_color:
            raise RegistryError([f"{self.name}: {self.sector}s are color {expected_color}s"])
        if self.su2 == "doublet" and self.slot not in (0, 1):
            raise RegistryError([f"{self.name}: doublet members need slot 0 or 1"])
        if self.su2 == "singlet" and self.slot is not None:
            raise RegistryError([f"{self.name}: singlets carry no slot"])
        if self.su2 not in ("singlet", "doublet"):
            raise RegistryError([f"{self.name}: unknown SU(2) representation {self.su2!r}"])

    @classmethod
    def from_json(cls, payload: dict) -> "ParticleSpec":
        return cls(
            name=payload["name"],
            family=int(payload["family"]),
            sector=payload["sector"],
            chirality=Chirality(payload["chirality"]),
            su2=payload["su2"],
            slot=payload.get("slot"),
            hypercharge=Fraction(payload["hypercharge"]),
            color=payload["color"],
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "family": self.family,
            "sector": self.sector,
            "chirality": self.chirality.value,
            "su2": self.su2,
            "slot": self.slot,
            "hypercharge": str(self.hypercharge),
            "color": self.color,
        }

    @property
    def representation_dimension(self) -> int:
        """dim of ℂ² (Weyl spinor) ⊗ color ⊗ SU(2) ⊗ ℂ (hypercharge)."""
        color = 3 if self.color == "triplet" else 1
        weak = 2 if self.su2 == "doublet" else 1
        return 2 * color * weak * 1


class Registry:
    def __init__(self, particles: Iterable[ParticleSpec] = (), version: int = 1):
        self.particles: Tuple[ParticleSpec, ...] = tuple(particles)
        self.version = version

    def __len__(self):
        return len(self.particles)

    def __iter__(self):
        return iter(self.particles)

    def find(self, name: str) -> ParticleSpec:
        for particle in self.particles:
            if particle.name == name:
                return particle
        raise KeyError(name)

    def select(self, family: int, sector: str, chirality: Chirality) -> List[ParticleSpec]:
        return [
            p
            for p in self.particles
            if p.family == family and p.sector == sector and p.chirality is chirality
        ]

    def missing(self) -> List[str]:
        missing = []
        for family in FAMILIES:
            for sector in SECTORS:
                left = self.select(family, sector, Chirality.L)
                slots = {p.slot for p in left if p.su2 == "doublet"}
                for slot in (0, 1):
                    if slot not in slots:
                        missing.append(f"family {family} {sector} L doublet slot {slot}")
                right = [p for p in self.select(family, sector, Chirality.R) if p.su2 == "singlet"]
                for index in range(len(right), 2):
                    missing.append(f"family {family} {sector} R singlet {index + 1} of 2")
        return missing

    def validate(self) -> "Registry":
        missing = self.missing()
        if missing:
            raise RegistryError(missing)
        return self


def load_registry(path: Optional[str] = None) -> Registry:
    with open(path or REGISTRY_PATH, encoding="utf-8") as f:
        payload = json.load(f)
    particles = [ParticleSpec.from_json(entry) for entry in payload.get("particles", [])]
    logger.debug("loaded %d particles from %s", len(particles), path or REGISTRY_PATH)
    return Registry(particles, payload.get("version", 1))


@dataclass(frozen=True)
class HyperchargeAudit:
    family: int
    sector: str
    left_sum: Fraction
    right_sum: Fraction

    @property
    def balanced(self) -> bool:
        return self.left_sum == self.right_sum

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "sector": self.sector,
            "left_sum": str(self.left_sum),
            "right_sum": str(self.right_sum),
            "balanced": self.balanced,
        }


def hypercharge_audit(registry: Optional[Registry] = None) -> List[HyperchargeAudit]:
    """Per family and sector: Σ Y over left slots against Σ Y over right singlets."""
    registry = (registry if registry is not None else load_registry()).validate()
    audits = []
    for family in FAMILIES:
        for sector in SECTORS:
            left = sum((p.hypercharge for p in registry.select(family, sector, Chirality.L)), Fraction(0))
            right = sum((p.hypercharge for p in registry.select(family, sector, Chirality.R)), Fraction(0))
            audits.append(HyperchargeAudit(family, sector, left, right))
    return audits


def audit_to_markdown(audits: List[HyperchargeAudit]) -> str:
    lines = [
        "| family | sector | Σ Y (left) | Σ Y (right) | balanced |",
        "|---|---|---|---|---|",
    ]
    for audit in audits:
        lines.append(
            f"| {audit.family} | {audit.sector} | {audit.left_sum} | {audit.right_sum} | "
            f"{'yes' if audit.balanced else 'no'} |"
        )
    return "\n".join(lines) + "\n"


def dirac_adjoint_matrix(rep: GammaRepresentation) -> np.ndarray:
    """Ordered product of the time-like gammas, times i when needed to make it Hermitian."""
    product = rep.identity()
    for mu in rep.signature.time_like_indices():
        product = product @ rep.gammas[mu]
    if np.allclose(product.conj().T, product, atol=1e-12):
        return product
    return 1j * product


def dirac_adjoint(psi: SpinorVector, rep: GammaRepresentation) -> np.ndarray:
    """Row vector Ψ̄ = Ψ†·T."""
    return psi.components.conj() @ dirac_adjoint_matrix(rep)


def hermitian_form_signature(rep: GammaRepresentation, tol: float = 1e-9) -> Tuple[int, int]:
    """(#positive, #negative) eigenvalues of the form Ψ ↦ Ψ̄Ψ."""
    eigenvalues = np.linalg.eigvalsh(dirac_adjoint_matrix(rep))
    return int(np.sum(eigenvalues > tol)), int(np.sum(eigenvalues < -tol))


@dataclass(frozen=True)
class BilinearReport:
    lhs: complex
    rhs: complex

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)


def _pair(rep: GammaRepresentation, left: SpinorVector, operator: np.ndarray, right: SpinorVector) -> complex:
    return complex(dirac_adjoint(left, rep) @ operator @ right.components)


def bilinear_decomposition_check(
    rep: GammaRepresentation,
    psi: SpinorVector,
    phi: complex,
    a: Optional[np.ndarray] = None,
) -> Tuple[BilinearReport, BilinearReport]:
    """Vector coupling Ψ̄γ^μA_μΨ keeps chiralities apart; the scalar coupling Ψ̄φΨ crosses them.

    Both identities hold when the number of time-like generators is odd.
    """
    left, right = weyl_split(rep, psi)
    if a is None:
        a = np.zeros(rep.n)
    slash_a = sum((gamma * a_mu for gamma, a_mu in zip(rep.gammas, a)), np.zeros((rep.f, rep.f), dtype=complex))
    vector = BilinearReport(
        _pair(rep, psi, slash_a, psi),
        _pair(rep, left, slash_a, left) + _pair(rep, right, slash_a, right),
    )
    scalar_term = phi * rep.identity()
    scalar = BilinearReport(
        _pair(rep, psi, scalar_term, psi),
        _pair(rep, left, scalar_term, right) + _pair(rep, right, scalar_term, left),
    )
    return vector, scalar

