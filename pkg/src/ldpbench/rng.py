"""Deterministic, splittable random number generation.

Every randomized step in the toolkit draws from a counter-based splitmix64
stream: output ``i`` of stream ``key`` is the avalanche mix of
``key + (i + 1) * GOLDEN``.  Because draws are addressed by (key, counter)
rather than hidden mutable state, the scalar Python path, the vectorized
numpy path, and the compiled kernels all produce bit-identical values, and
worker threads can be handed disjoint streams up front.

Stream keys are derived from (master_seed, repetition, thread_index) with a
fixed avalanche mix, so a run is reproducible from its master seed alone and
independent of how the OS schedules threads.
"""

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB
# distinct odd multipliers for absorbing the repetition / thread axes
_REP_PRIME = 0xC2B2AE3D27D4EB4F
_THREAD_PRIME = 0x165667B19E3779F9

_U64_GOLDEN = np.uint64(_GOLDEN)
_U64_MIX_A = np.uint64(_MIX_A)
_U64_MIX_B = np.uint64(_MIX_B)
_TWO_NEG53 = 2.0 ** -53


def mix64(x: int) -> int:
    """splitmix64 finalizer: a fixed 64-bit avalanche permutation."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * _MIX_A) & _MASK64
    x ^= x >> 27
    x = (x * _MIX_B) & _MASK64
    return x ^ (x >> 31)


def derive_key(master_seed: int, repetition: int, thread_index: int) -> int:
    """Mix the three run coordinates into one 64-bit stream key.

    Pure function of its arguments; distinct (repetition, thread_index)
    pairs yield statistically independent streams.
    """
    if repetition < 0 or thread_index < 0:
        raise ValueError("repetition and thread_index must be nonnegative")
    key = mix64((master_seed + _GOLDEN) & _MASK64)
    key = mix64(key ^ ((repetition * _REP_PRIME) & _MASK64))
    key = mix64(key ^ ((thread_index * _THREAD_PRIME) & _MASK64))
    return key


def stream_u64(key: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of stream ``key`` as uint64."""
    counters = np.arange(start + 1, start + 1 + count, dtype=np.uint64)
    x = np.uint64(key) + counters * _U64_GOLDEN
    x ^= x >> np.uint64(30)
    x *= _U64_MIX_A
    x ^= x >> np.uint64(27)
    x *= _U64_MIX_B
    x ^= x >> np.uint64(31)
    return x


def stream_f64(key: int, start: int, count: int) -> np.ndarray:
    """Same stream positions mapped to doubles in [0, 1)."""
    return (stream_u64(key, start, count) >> np.uint64(11)) * _TWO_NEG53


def hash_symbol(seed: int, value: int, hash_range: int) -> int:
    """Keyed hash of a domain index into {0, .., hash_range-1}.

    Stands in for the per-user random hash function of the local-hashing
    protocols; the seed fully identifies the function.
    """
    return mix64((seed + (value + 1) * _GOLDEN) & _MASK64) % hash_range


def hash_symbols(seeds: np.ndarray, value: int, hash_range: int) -> np.ndarray:
    """Vectorized :func:`hash_symbol` over an array of seeds."""
    x = seeds + np.uint64(((value + 1) * _GOLDEN) & _MASK64)
    x ^= x >> np.uint64(30)
    x *= _U64_MIX_A
    x ^= x >> np.uint64(27)
    x *= _U64_MIX_B
    x ^= x >> np.uint64(31)
    return (x % np.uint64(hash_range)).astype(np.int64)


class RandomSource:
    """One (key, counter) position in a splitmix64 stream.

    Single-owner by convention: one instance per (repetition, thread), never
    shared.  Scalar draws and block draws consume the same counters, so a
    loop of ``next_f64()`` calls sees exactly the values ``f64_block`` would
    return in one shot.
    """

    __slots__ = ("key", "counter")

    def __init__(self, key: int, counter: int = 0):
        self.key = key & _MASK64
        self.counter = counter

    def next_u64(self) -> int:
        value = mix64((self.key + (self.counter + 1) * _GOLDEN) & _MASK64)
        self.counter += 1
        return value

    def next_f64(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * _TWO_NEG53

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound).

        Maps one double draw as floor(u * bound); the resulting bias is at
        most bound / 2**53 and the mapping is identical in every backend.
        """
        return int(self.next_f64() * bound)

    def skip(self, count: int) -> None:
        """Advance past ``count`` draws without generating them."""
        self.counter += count

    def u64_block(self, count: int) -> np.ndarray:
        out = stream_u64(self.key, self.counter, count)
        self.counter += count
        return out

    def f64_block(self, count: int) -> np.ndarray:
        out = stream_f64(self.key, self.counter, count)
        self.counter += count
        return out

    def __repr__(self) -> str:
        return f"RandomSource(key={self.key:#018x}, counter={self.counter})"


def derive_rng(master_seed: int, repetition: int, thread_index: int) -> RandomSource:
    """Fresh stream for one (repetition, thread) cell of a run."""
    return RandomSource(derive_key(master_seed, repetition, thread_index))
