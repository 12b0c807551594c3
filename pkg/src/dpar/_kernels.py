"""Edit-distance kernels: numba-compiled with a pure-numpy fallback.

The recommender scores ~676 candidate passwords per call, and corpus
evaluation repeats that for thousands of passwords, so the Levenshtein
batch is the hot loop. Set ``DPAR_NUMBA=0`` to force the numpy path;
numba is also skipped automatically when it is not importable.
"""

from __future__ import annotations

import os

import numpy as np

_FALSY = {"0", "false", "off", "no"}


def _numba_enabled() -> bool:
    flag = os.environ.get("DPAR_NUMBA", "").strip().lower()
    if flag in _FALSY:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _numba_enabled()

if NUMBA_ENABLED:
    from numba import njit
else:  # pragma: no cover - exercised via DPAR_NUMBA=0 runs
    def njit(*args, **kwargs):
        def decorate(func):
            return func
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return decorate


def encode(text: str) -> np.ndarray:
    """Code-point array used by the distance kernels."""
    return np.array([ord(ch) for ch in text], dtype=np.int32)


def encode_batch(texts) -> tuple[np.ndarray, np.ndarray]:
    """Pad a list of strings into a (batch, max_len) code matrix plus lengths."""
    lengths = np.array([len(t) for t in texts], dtype=np.int64)
    width = int(lengths.max()) if len(texts) else 0
    matrix = np.zeros((len(texts), width), dtype=np.int32)
    for row, text in enumerate(texts):
        for col, ch in enumerate(text):
            matrix[row, col] = ord(ch)
    return matrix, lengths


@njit(cache=True)
def _lev_pair_nb(a: np.ndarray, b: np.ndarray) -> int:
    n, m = a.shape[0], b.shape[0]
    prev = np.empty(m + 1, dtype=np.int32)
    cur = np.empty(m + 1, dtype=np.int32)
    for j in range(m + 1):
        prev[j] = j
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            best = prev[j - 1] + cost
            if prev[j] + 1 < best:
                best = prev[j] + 1
            if cur[j - 1] + 1 < best:
                best = cur[j - 1] + 1
            cur[j] = best
        prev, cur = cur, prev
    return int(prev[m])


@njit(cache=True)
def _lev_batch_nb(orig: np.ndarray, cands: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    batch = cands.shape[0]
    out = np.empty(batch, dtype=np.int32)
    for row in range(batch):
        out[row] = _lev_pair_nb(orig, cands[row, : lengths[row]])
    return out


def _lev_batch_np(orig: np.ndarray, cands: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    """Vectorized DP over the whole batch; exact, no compilation needed."""
    batch, width = cands.shape
    j_range = np.arange(width + 1, dtype=np.int32)
    prev = np.tile(j_range, (batch, 1))
    for i in range(1, orig.shape[0] + 1):
        cost = (cands != orig[i - 1]).astype(np.int32)
        cur = np.empty_like(prev)
        cur[:, 0] = i
        cur[:, 1:] = np.minimum(prev[:, 1:] + 1, prev[:, :-1] + cost)
        # Resolve the left-to-right insertion chain in one accumulate pass:
        # cur[j] = min_{k<=j} (cur[k] + (j - k)).
        chain = cur - j_range
        np.minimum.accumulate(chain, axis=1, out=chain)
        prev = chain + j_range
    return prev[np.arange(batch), lengths].astype(np.int32)


def _lev_pair_np(a: np.ndarray, b: np.ndarray) -> int:
    return int(_lev_batch_np(a, b.reshape(1, -1), np.array([b.shape[0]]))[0])


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance between two strings."""
    if a == b:
        return 0
    ca, cb = encode(a), encode(b)
    if ca.size == 0:
        return cb.size
    if cb.size == 0:
        return ca.size
    if NUMBA_ENABLED:
        return _lev_pair_nb(ca, cb)
    return _lev_pair_np(ca, cb)


def levenshtein_batch(original: str, candidates) -> np.ndarray:
    """Edit distance from ``original`` to each candidate string."""
    if not candidates:
        return np.empty(0, dtype=np.int32)
    orig = encode(original)
    matrix, lengths = encode_batch(candidates)
    if orig.size == 0:
        return lengths.astype(np.int32)
    if matrix.shape[1] == 0:
        return np.full(len(candidates), orig.size, dtype=np.int32)
    if NUMBA_ENABLED:
        return _lev_batch_nb(orig, matrix, lengths)
    return _lev_batch_np(orig, matrix, lengths)


def backend() -> str:
    """Active kernel backend name, surfaced in benchmarks and metadata."""
    return "numba" if NUMBA_ENABLED else "numpy"
