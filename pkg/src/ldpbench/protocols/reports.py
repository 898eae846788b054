"""Chunk-level report containers, one per report wire format.

A container holds all reports from one batch of users as flat arrays, which
is what the kernels produce and consume.  ``piece`` and ``merge`` exist so
report streams can be split and recombined without touching the payloads
(the weighted-combine tests rely on this).
"""

from dataclasses import dataclass

import numpy as np


@dataclass
class SupportCounts:
    """Per-value support totals from n aggregated reports."""

    counts: np.ndarray
    n: int


@dataclass
class CategoricalReports:
    """One perturbed domain index per user."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return int(self.values.size)

    def piece(self, lo: int, hi: int) -> "CategoricalReports":
        return CategoricalReports(self.values[lo:hi])

    @staticmethod
    def merge(parts) -> "CategoricalReports":
        return CategoricalReports(np.concatenate([p.values for p in parts]))


@dataclass
class BitVectorReports:
    """One perturbed one-hot bitvector per user, packed 8 bits per byte."""

    packed: np.ndarray

    @property
    def n(self) -> int:
        return int(self.packed.shape[0])

    def piece(self, lo: int, hi: int) -> "BitVectorReports":
        return BitVectorReports(self.packed[lo:hi])

    @staticmethod
    def merge(parts) -> "BitVectorReports":
        return BitVectorReports(np.concatenate([p.packed for p in parts], axis=0))


@dataclass
class HashedReports:
    """One (hash seed, perturbed symbol) pair per user; symbols lie in [0, g)."""

    seeds: np.ndarray
    symbols: np.ndarray
    g: int

    @property
    def n(self) -> int:
        return int(self.seeds.size)

    def piece(self, lo: int, hi: int) -> "HashedReports":
        return HashedReports(self.seeds[lo:hi], self.symbols[lo:hi], self.g)

    @staticmethod
    def merge(parts) -> "HashedReports":
        g = parts[0].g
        if any(p.g != g for p in parts):
            raise ValueError("cannot merge hashed reports with different hash ranges")
        return HashedReports(
            np.concatenate([p.seeds for p in parts]),
            np.concatenate([p.symbols for p in parts]),
            g,
        )


@dataclass
class SubsetReports:
    """One sorted size-k index subset per user, as an (n, k) matrix."""

    members: np.ndarray

    @property
    def n(self) -> int:
        return int(self.members.shape[0])

    @property
    def k(self) -> int:
        return int(self.members.shape[1])

    def piece(self, lo: int, hi: int) -> "SubsetReports":
        return SubsetReports(self.members[lo:hi])

    @staticmethod
    def merge(parts) -> "SubsetReports":
        return SubsetReports(np.concatenate([p.members for p in parts], axis=0))
