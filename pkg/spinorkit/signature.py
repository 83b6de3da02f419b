"""Metric signatures (p, q) and the index conventions built on them.

Generators 0..p-1 square to +1, generators p..n-1 square to -1.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from .errors import SignatureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        for name, value in (("p", self.p), ("q", self.q)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise SignatureError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise SignatureError(f"{name} must be non-negative, got {value}")

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse ``"p,q"`` (also ``"(p,q)"`` and ``"p q"``)."""
        cleaned = text.strip().strip("()").replace(" ", ",")
        parts = [part for part in cleaned.split(",") if part]
        if len(parts) != 2:
            raise SignatureError(f"cannot read a signature from {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise SignatureError(f"cannot read a signature from {text!r}") from exc

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dimension(self) -> int:
        """Real dimension 2^n of C(p,q)."""
        return 1 << self.n

    @property
    def negative_mask(self) -> int:
        return ((1 << self.q) - 1) << self.p

    def metric_sign(self, mu: int) -> int:
        self.check_index(mu)
        return 1 if mu < self.p else -1

    @property
    def metric_signs(self) -> Tuple[int, ...]:
        return (1,) * self.p + (-1,) * self.q

    def check_index(self, mu: int) -> int:
        if not 0 <= mu < self.n:
            raise SignatureError(f"generator index {mu} out of range for {self}")
        return mu

    def require_at_most(self, max_n: int, what: str = "this operation") -> "Signature":
        if self.n > max_n:
            raise SignatureError(
                f"{what} supports n <= {max_n}; {self} has n = {self.n}"
            )
        return self

    def swapped(self) -> "Signature":
        return Signature(self.q, self.p)

    def orientation_square(self) -> int:
        """Sign of ε² for the ascending product ε of all generators."""
        n = self.n
        if n == 0:
            raise SignatureError("the orientation operator needs n >= 1")
        reorder = -1 if (n * (n - 1) // 2) % 2 else 1
        metric = -1 if self.q % 2 else 1
        return reorder * metric

    def time_like_indices(self) -> Tuple[int, ...]:
        """Generators of the minority sign; ties count the negative-square ones."""
        if self.p < self.q:
            return tuple(range(self.p))
        return tuple(range(self.p, self.n))

    def __str__(self):
        return f"({self.p},{self.q})"


def relabel_time_first(sig: Signature) -> Tuple[int, ...]:
    """Map physics labels to generator indices.

    ``perm[k]`` is the generator playing the role of γ^k when the time-like
    generators are listed first, e.g. (3,1) gives ``(3, 0, 1, 2)``.
    """
    time_like = sig.time_like_indices()
    rest = [mu for mu in range(sig.n) if mu not in time_like]
    perm = tuple(time_like) + tuple(rest)
    logger.debug("time-first relabelling for %s: %s", sig, perm)
    return perm
