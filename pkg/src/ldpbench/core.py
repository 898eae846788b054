"""Shared domain types and the exceptions raised across the toolkit."""

from dataclasses import dataclass, field

import numpy as np

#: Master seed used when the caller supplies none, so default runs are
#: reproducible end to end.
DEFAULT_MASTER_SEED = 42


class DomainTooSmallError(ValueError):
    """Fewer than two distinct values; every estimator would be degenerate."""


class TooManyThreadsError(ValueError):
    """More chunks requested than there are users to fill them."""


class DimensionMismatchError(ValueError):
    """Two frequency vectors of different lengths were combined."""


class DegenerateDistributionError(ValueError):
    """A vector with nonpositive total mass was used as a distribution."""


@dataclass(frozen=True)
class Domain:
    """Ordered mapping between raw value labels and indices 0..d-1.

    Labels are kept in canonical (lexicographic) order so that index-based
    quantities such as EMD and golden-file outputs do not depend on input
    ordering.
    """

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) < 2:
            raise DomainTooSmallError(
                f"domain needs at least 2 distinct values, got {len(self.labels)}"
            )
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("domain labels must be distinct")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.labels)})

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        return self._index[label]


def build_domain(raw_labels) -> Domain:
    """Canonical domain from raw labels: dedupe, sort, index 0..d-1."""
    return Domain(tuple(sorted(set(raw_labels))))


@dataclass(frozen=True)
class Dataset:
    """User values as domain indices, one entry per user."""

    values: np.ndarray

    def __post_init__(self):
        values = np.ascontiguousarray(self.values, dtype=np.int64)
        if values.ndim != 1 or values.size < 1:
            raise ValueError("dataset must be a nonempty 1-d array of indices")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def validate_for(self, domain: Domain) -> None:
        if self.values.min() < 0 or self.values.max() >= domain.size:
            raise ValueError("dataset contains indices outside 0..d-1")

    @classmethod
    def from_labels(cls, labels, domain: Domain) -> "Dataset":
        return cls(np.fromiter((domain.index_of(v) for v in labels), dtype=np.int64))


def true_frequencies(dataset: Dataset, domain: Domain) -> np.ndarray:
    """Empirical frequency of each domain value: count(v) / n."""
    dataset.validate_for(domain)
    counts = np.bincount(dataset.values, minlength=domain.size)
    return counts / dataset.n


def validate_true_frequencies(values: np.ndarray, tol: float = 1e-9) -> None:
    """Check the invariant for a *true* frequency vector.

    Estimated and post-processed vectors are exempt; they may carry negative
    entries or miss total mass 1 by design.
    """
    if np.any(values < 0):
        raise ValueError("true frequency vector has negative entries")
    total = float(values.sum())
    if abs(total - 1.0) > tol:
        raise ValueError(f"true frequency vector sums to {total}, expected 1")


def validate_epsilon(epsilon: float) -> float:
    """Privacy budget must be a positive finite real."""
    eps = float(epsilon)
    if not np.isfinite(eps) or eps <= 0:
        raise ValueError(f"epsilon must be positive and finite, got {epsilon}")
    return eps
