"""Cross-validation suites run by ``spinorkit check``.

Each suite is a list of independent cases; a case returns None on success or a
message describing the failure. Cases are pure and run on a thread pool.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .classify import classify_even, classify_real, spinor_types
from .config import DEFAULT_SETTINGS, Settings
from .errors import SpinorKitError
from .gamma import build_representation, chirality
from .oracle import classify_structural
from .signature import Signature
from .spin_group import chi, component_from_matrix, component_of, pin_normalize, random_versor
from .standard_model import hermitian_form_signature, hypercharge_audit

logger = logging.getLogger(__name__)

Case = Tuple[str, Callable[[], Optional[str]]]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "failures": list(self.failures),
        }


def _signatures(max_n: int) -> List[Signature]:
    return [Signature(p, n - p) for n in range(max_n + 1) for p in range(n + 1)]


def _table_cases(settings: Settings) -> List[Case]:
    def identities(n: int):
        def case():
            euclid_even = classify_even(Signature(n, 0), settings)
            if euclid_even != classify_real(Signature(0, n - 1), settings)[0]:
                return f"C0({n},0) != C(0,{n - 1})"
            if euclid_even != classify_even(Signature(0, n), settings):
                return f"C0({n},0) != C0(0,{n})"
            hyper_even = classify_even(Signature(n - 1, 1), settings)
            if hyper_even != classify_even(Signature(1, n - 1), settings):
                return f"C0({n - 1},1) != C0(1,{n - 1})"
            if hyper_even != classify_real(Signature(1, n - 2), settings)[0]:
                return f"C0({n - 1},1) != C(1,{n - 2})"
            if classify_real(Signature(n, 0), settings)[0] != classify_real(Signature(1, n - 1), settings)[0]:
                return f"C({n},0) != C(1,{n - 1})"
            return None

        return case

    def asymmetry():
        differing = [
            n
            for n in range(4, 12)
            if classify_real(Signature(0, n), settings)[0]
            != classify_real(Signature(n - 1, 1), settings)[0]
        ]
        return None if differing else "C(0,n) == C(n-1,1) for every n in 4..11"

    def periodicity(sig: Signature):
        def case():
            base = classify_real(sig, settings)[0]
            shifted = classify_real(Signature(sig.p + 8, sig.q), settings)[0]
            if (shifted.ring, shifted.doubled, shifted.d) != (base.ring, base.doubled, 16 * base.d):
                return f"C{sig} and C({sig.p + 8},{sig.q}) break mod-8 periodicity"
            return None

        return case

    cases: List[Case] = [(f"identities n={n}", identities(n)) for n in range(4, 12)]
    cases.append(("C(0,n) vs C(n-1,1)", asymmetry))
    cases += [(f"periodicity {sig}", periodicity(sig)) for sig in _signatures(12)]
    return cases


def _oracle_cases(settings: Settings, max_n: int) -> List[Case]:
    def case_for(sig: Signature):
        def case():
            structural = classify_structural(sig, settings=settings)
            symbolic = classify_real(sig, settings)[0]
            if structural != symbolic:
                return f"oracle gives {structural} for {sig}, table gives {symbolic}"
            return None

        return case

    limit = min(max_n, settings.max_oracle_n)
    return [(f"oracle {sig}", case_for(sig)) for sig in _signatures(limit)]


def _chi_cases(settings: Settings, max_n: int, samples: int = 4) -> List[Case]:
    tol = settings.tolerance

    def case_for(sig: Signature, seed: int):
        def case():
            rng = np.random.default_rng(seed)
            s, t = random_versor(sig, rng), random_versor(sig, rng)
            chi_s, chi_t = chi(s, settings=settings), chi(t, settings=settings)
            if np.max(np.abs(chi(s * t, settings=settings).entries - chi_s.entries @ chi_t.entries)) > tol:
                return f"χ(st) != χ(s)χ(t) in {sig}"
            if np.max(np.abs(chi(-s, settings=settings).entries - chi_s.entries)) > tol:
                return f"χ(-s) != χ(s) in {sig}"
            normalised = pin_normalize(s, settings)
            if component_of(normalised, settings) != component_from_matrix(chi_s.entries, sig, s.factor_parity):
                return f"component disagreement in {sig}"
            return None

        return case

    cases = []
    for sig in _signatures(min(max_n, 6)):
        if sig.n == 0:
            continue
        for k in range(samples):
            seed = settings.seed + 97 * k + 13 * sig.p + sig.q
            cases.append((f"chi {sig} #{k}", case_for(sig, seed)))
    return cases


def _representation_cases(settings: Settings, max_n: int) -> List[Case]:
    tol = 1e-9

    def case_for(sig: Signature):
        def case():
            rep = build_representation(sig, settings)
            report = spinor_types(sig, settings)
            if (rep.conjugation is not None) != report.majorana_exists:
                return f"conjugation with c² = +1 disagrees with the Majorana predicate in {sig}"
            if sig.n % 2 == 0 and sig.n > 0:
                theta = chirality(rep)
                if np.max(np.abs(theta @ theta - rep.identity())) > tol:
                    return f"θ² != 1 in {sig}"
                if any(np.max(np.abs(theta @ g + g @ theta)) > tol for g in rep.gammas):
                    return f"θ does not anticommute with the gammas in {sig}"
                if rep.conjugation is not None:
                    expected = not report.chirality_uses_i
                    if rep.conjugation.commutes_with_theta is not expected:
                        return f"c and θ have the wrong commutation relation in {sig}"
            return None

        return case

    limit = min(max_n, 10)
    return [(f"representation {sig}", case_for(sig)) for sig in _signatures(limit)]


def _standard_model_cases(settings: Settings) -> List[Case]:
    def audit():
        unbalanced = [a for a in hypercharge_audit() if not a.balanced]
        if unbalanced:
            return "hypercharges unbalanced: " + ", ".join(f"family {a.family} {a.sector}" for a in unbalanced)
        return None

    def neutral_form():
        form = hermitian_form_signature(build_representation(Signature(3, 1), settings))
        return None if form == (2, 2) else f"Ψ̄Ψ has signature {form} on (3,1)"

    return [("hypercharge audit", audit), ("neutral Dirac form", neutral_form)]


SUITES = ("tables", "oracle", "chi", "representation", "standard-model")


def suite_cases(name: str, settings: Settings, max_n: int) -> List[Case]:
    if name == "tables":
        return _table_cases(settings)
    if name == "oracle":
        return _oracle_cases(settings, max_n)
    if name == "chi":
        return _chi_cases(settings, max_n)
    if name == "representation":
        return _representation_cases(settings, max_n)
    if name == "standard-model":
        return _standard_model_cases(settings)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")


def _run_case(case: Case) -> Optional[str]:
    label, body = case
    try:
        message = body()
    except SpinorKitError as exc:
        message = f"{type(exc).__name__}: {exc}"
    return None if message is None else f"{label}: {message}"


def run_checks(
    suites: Sequence[str] = SUITES,
    max_n: int = 8,
    settings: Settings = DEFAULT_SETTINGS,
    jobs: Optional[int] = None,
) -> List[SuiteResult]:
    planned: Dict[str, List[Case]] = {name: suite_cases(name, settings, max_n) for name in suites}
    results = []
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        for name, cases in planned.items():
            result = SuiteResult(name)
            for outcome in executor.map(_run_case, cases):
                if outcome is None:
                    result.passed += 1
                else:
                    result.failed += 1
                    result.failures.append(outcome)
            logger.info("suite %s: %d passed, %d failed", name, result.passed, result.failed)
            results.append(result)
    return results
