"""Structural classification of a concrete C(p,q), independent of the mod-8 table.

The center tells simple from doubled algebras and detects ℂ. For a simple
real algebra the minimal left ideal has dimension √D over ℝ-type and 2√D over
ℍ-type blocks, D the block dimension. Candidate primitive idempotents are
products (1 ± b)/2 over a maximal commuting set of blades b with b² = +1; the
rank of x ↦ x·e measures the left ideal C·e.
"""
import logging
from dataclasses import replace
from fractions import Fraction
from math import isqrt
from typing import List, Optional

import numpy as np

from .classify import DivisionRing, MatrixAlgebraType
from .config import DEFAULT_SETTINGS, Settings
from .errors import OracleError
from .multivector import (
    Multivector,
    blade_product,
    blades_commute,
    center,
    multiplication_matrix,
    orientation_operator,
    scalar,
)
from .signature import Signature

logger = logging.getLogger(__name__)


def _squares_to_one(sig: Signature, mask: int) -> bool:
    sign, _ = blade_product(sig, mask, mask)
    return sign == 1


def _random_idempotent(
    sig: Signature, rng: np.random.Generator, excluded: Optional[int] = None
) -> Multivector:
    """Product of (1 ± b)/2 over a greedily grown commuting set of +1-square blades."""
    span = {0}
    if excluded is not None:
        span.add(excluded)
    chosen: List[int] = []
    for mask in rng.permutation(sig.dimension).tolist():
        if mask in span or not _squares_to_one(sig, mask):
            continue
        if not all(blades_commute(sig, mask, other) for other in chosen):
            continue
        chosen.append(mask)
        span |= {mask ^ element for element in span}
    half = Fraction(1, 2)
    idempotent = scalar(sig, 1)
    for mask in chosen:
        sign = 1 if rng.random() < 0.5 else -1
        idempotent = idempotent * Multivector(sig, {0: half, mask: sign * half})
    return idempotent


def _left_ideal_rank(element: Multivector) -> int:
    return int(np.linalg.matrix_rank(multiplication_matrix(element, "right", dtype=float)))


def _simple_block(
    sig: Signature,
    unit: Multivector,
    block_dimension: int,
    rng: np.random.Generator,
    trials: int,
    stable_repeats: int,
    excluded: Optional[int] = None,
) -> MatrixAlgebraType:
    best = None
    repeats = 0
    for trial in range(trials):
        element = _random_idempotent(sig, rng, excluded) * unit
        if element.is_zero():
            continue
        rank = _left_ideal_rank(element)
        logger.debug("oracle %s trial %d: left ideal rank %d", sig, trial, rank)
        if best is None or rank < best:
            best, repeats = rank, 1
        elif rank == best:
            repeats += 1
        if repeats >= stable_repeats:
            break
    if best is None or repeats < stable_repeats:
        raise OracleError(
            f"minimal left ideal rank for {sig} did not stabilise after {trials} "
            f"trials; increase trials"
        )
    root = isqrt(block_dimension)
    if best == root:
        return MatrixAlgebraType(root, DivisionRing.R)
    if best == 2 * root:
        return MatrixAlgebraType(root // 2, DivisionRing.H)
    raise OracleError(
        f"minimal left ideal rank {best} fits no real or quaternionic block of "
        f"dimension {block_dimension}"
    )


def classify_structural(
    sig: Signature,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> MatrixAlgebraType:
    """Classify C(p,q) from its concrete multiplication table."""
    sig.require_at_most(settings.max_oracle_n, "the structural oracle")
    trials = settings.trials if trials is None else trials
    seed = settings.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    total = sig.dimension
    report = center(sig)
    one = scalar(sig, 1)

    if report.dimension == 1:
        result = _simple_block(sig, one, total, rng, trials, settings.stable_repeats)
    elif sig.orientation_square() == -1:
        result = MatrixAlgebraType.from_dimension(total, DivisionRing.C)
    else:
        eps = orientation_operator(sig)
        half = Fraction(1, 2)
        blocks = [
            _simple_block(
                sig,
                (one + sign * eps) * half,
                total // 2,
                rng,
                trials,
                settings.stable_repeats,
                excluded=total - 1,
            )
            for sign in (1, -1)
        ]
        if blocks[0] != blocks[1]:
            raise OracleError(f"the two blocks of {sig} classify differently: {blocks}")
        result = replace(blocks[0], doubled=True)
    logger.debug("structural oracle: C%s = %s", sig, result)
    return result
