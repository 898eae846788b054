"""Pure-numpy kernel backend.

Vectorized mirror of the compiled kernels in ``_native.pyx``: same stream
positions, same float64 arithmetic, bit-identical outputs.  Matrix-shaped
intermediates are processed in row batches to bound peak memory.

Draw layout per user j (stream counters relative to ``base``):
  direct perturbation   2j, 2j+1            keep test, replacement index
  unary encoding        d*j + i             one per bit i
  local hashing         3j, 3j+1, 3j+2      hash seed, keep test, replacement
  subset selection      (1+k)j .. (1+k)j+k  inclusion test, k sampling draws
"""

import numpy as np

from ldpbench.rng import hash_symbols, stream_f64, stream_u64

BACKEND_NAME = "python"

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)

# element budget for (rows x d) scratch matrices
_BATCH_ELEMS = 1 << 21


def _row_batch(d: int) -> int:
    return max(1, _BATCH_ELEMS // max(d, 1))


def grr_perturb(values, d, p_keep, key, base):
    """Direct randomized response over domain indices."""
    values = np.asarray(values, dtype=np.int64)
    n = values.size
    u = stream_f64(key, base, 2 * n)
    keep = u[0::2] < p_keep
    r = (u[1::2] * (d - 1)).astype(np.int64)
    return np.where(keep, values, r + (r >= values))


def ue_perturb(values, d, p_one, q_one, key, base):
    """Bitwise-perturbed one-hot encodings, packed little-endian per row."""
    values = np.asarray(values, dtype=np.int64)
    n = values.size
    out = np.empty((n, (d + 7) // 8), dtype=np.uint8)
    batch = _row_batch(d)
    for lo in range(0, n, batch):
        hi = min(n, lo + batch)
        m = hi - lo
        u = stream_f64(key, base + lo * d, m * d).reshape(m, d)
        thresholds = np.full((m, d), q_one)
        thresholds[np.arange(m), values[lo:hi]] = p_one
        out[lo:hi] = np.packbits(u < thresholds, axis=1, bitorder="little")
    return out


def ue_support(packed, d):
    """Column sums of the packed bit matrix."""
    packed = np.asarray(packed, dtype=np.uint8)
    counts = np.zeros(d, dtype=np.int64)
    batch = _row_batch(d)
    for lo in range(0, packed.shape[0], batch):
        bits = np.unpackbits(packed[lo : lo + batch], axis=1, count=d, bitorder="little")
        counts += bits.sum(axis=0, dtype=np.int64)
    return counts


def lh_perturb(values, g, p_keep, key, base):
    """Hash each value into [0, g), randomize the symbol, report (seed, symbol)."""
    values = np.asarray(values, dtype=np.int64)
    n = values.size
    raw = stream_u64(key, base, 3 * n)
    seeds = np.ascontiguousarray(raw[0::3])
    u_keep = (raw[1::3] >> np.uint64(11)) * 2.0**-53
    u_repl = (raw[2::3] >> np.uint64(11)) * 2.0**-53
    # per-user hash of the own value (seed varies per element)
    x = _mix64(seeds + (values.astype(np.uint64) + np.uint64(1)) * _GOLDEN)
    x = (x % np.uint64(g)).astype(np.int64)
    r = (u_repl * (g - 1)).astype(np.int64)
    symbols = np.where(u_keep < p_keep, x, r + (r >= x))
    return seeds, symbols


def lh_support(seeds, symbols, d, g):
    """For each candidate value, count reports whose symbol matches its hash."""
    seeds = np.asarray(seeds, dtype=np.uint64)
    counts = np.empty(d, dtype=np.int64)
    for v in range(d):
        counts[v] = np.count_nonzero(hash_symbols(seeds, v, g) == symbols)
    return counts


def ss_perturb(values, d, k, include_prob, key, base):
    """Size-k subsets biased to contain the true value; rows sorted."""
    values = np.asarray(values, dtype=np.int64)
    n = values.size
    pool_size = d - 1
    draws = 1 + k
    out = np.empty((n, k), dtype=np.int64)
    batch = _row_batch(d)
    for lo in range(0, n, batch):
        hi = min(n, lo + batch)
        m = hi - lo
        u = stream_f64(key, base + lo * draws, m * draws).reshape(m, draws)
        include = u[:, 0] < include_prob
        take = np.where(include, k - 1, k)
        # pool rows enumerate the domain minus the user's own value
        pool = np.arange(pool_size, dtype=np.int64)[None, :] + np.zeros((m, 1), dtype=np.int64)
        pool += pool >= values[lo:hi, None]
        rows = np.arange(m)
        for t in range(k):
            # partial Fisher-Yates step; rows past their quota skip the swap
            # but the draw position is still consumed
            idx = t + (u[:, 1 + t] * (pool_size - t)).astype(np.int64)
            act = t < take
            swapped = pool[rows, idx]
            pool[rows[act], idx[act]] = pool[rows[act], t]
            pool[rows[act], t] = swapped[act]
        block = np.empty((m, k), dtype=np.int64)
        block[include, 0] = values[lo:hi][include]
        block[include, 1:] = pool[include, : k - 1]
        block[~include, :] = pool[~include, :k]
        out[lo:hi] = np.sort(block, axis=1)
    return out


def _mix64(x):
    x = x.copy()
    x ^= x >> np.uint64(30)
    x *= np.uint64(0xBF58476D1CE4E5B9)
    x ^= x >> np.uint64(27)
    x *= np.uint64(0x94D049BB133111EB)
    x ^= x >> np.uint64(31)
    return x
