"""Protocol parameters and their derived probabilities."""

import math
from dataclasses import dataclass

from ldpbench.core import validate_epsilon


def default_hash_range(epsilon: float) -> int:
    """Hash range for optimized local hashing: exp(eps) + 1, rounded to the
    nearest integer and never below 2."""
    return max(2, round(math.exp(epsilon) + 1))


def default_subset_size(epsilon: float, d: int) -> int:
    """Subset size for subset selection: d / (exp(eps) + 1), rounded to the
    nearest integer and clamped to [1, d-1]."""
    return min(max(round(d / (math.exp(epsilon) + 1)), 1), d - 1)


@dataclass(frozen=True)
class ProtocolParams:
    """Privacy budget, domain size, and the per-protocol tuning knobs.

    ``g`` (hash range, OLH) and ``k`` (subset size, SS) fall back to their
    variance-minimizing defaults when left unset.  Derived probabilities are
    exposed as accessors so perturbation and estimation always agree.
    """

    epsilon: float
    d: int
    g: int | None = None
    k: int | None = None

    def __post_init__(self):
        validate_epsilon(self.epsilon)
        if self.d < 2:
            raise ValueError(f"domain size must be at least 2, got {self.d}")
        if self.g is not None and self.g < 2:
            raise ValueError(f"hash range g must be at least 2, got {self.g}")
        if self.k is not None and not 1 <= self.k <= self.d - 1:
            raise ValueError(f"subset size k must be in [1, {self.d - 1}], got {self.k}")

    @property
    def exp_eps(self) -> float:
        return math.exp(self.epsilon)

    def grr_probs(self) -> tuple[float, float]:
        """(p, q): keep probability and per-other-value probability."""
        e = self.exp_eps
        return e / (e + self.d - 1), 1.0 / (e + self.d - 1)

    def rappor_keep_prob(self) -> float:
        """Probability that a bit is transmitted unflipped."""
        half = math.exp(self.epsilon / 2)
        return half / (half + 1)

    def oue_probs(self) -> tuple[float, float]:
        """(P[1 | true bit], P[1 | other bit])."""
        return 0.5, 1.0 / (self.exp_eps + 1)

    def hash_range(self, binary: bool = False) -> int:
        """Resolved hash range: 2 for the binary variant, else g."""
        if binary:
            return 2
        return self.g if self.g is not None else default_hash_range(self.epsilon)

    def lh_keep_prob(self, g: int) -> float:
        """Probability that the hashed symbol is transmitted unchanged."""
        return self.exp_eps / (self.exp_eps + g - 1)

    def subset_size(self) -> int:
        return self.k if self.k is not None else default_subset_size(self.epsilon, self.d)

    def ss_probs(self) -> tuple[float, float]:
        """Inclusion probabilities (sigma, theta) for the true value and for
        any fixed other value."""
        k, d, e = self.subset_size(), self.d, self.exp_eps
        sigma = k * e / (k * e + d - k)
        theta = ((k - 1) * k * e + (d - k) * k) / ((d - 1) * (k * e + d - k))
        # sigma - theta = k (d-k)(e-1) / ((d-1)(ke + d - k)) > 0 whenever eps > 0
        assert sigma > theta, "subset-selection estimator is degenerate"
        return sigma, theta
