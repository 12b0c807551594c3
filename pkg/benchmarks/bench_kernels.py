#!/usr/bin/env python3
"""Benchmark the numba and pure-numpy Levenshtein batch kernels.

The workload mirrors the recommender: one original password scored
against batches of ~675 tweaked candidates. Run directly:

    python benchmarks/bench_kernels.py --batches 200
"""

import argparse
import time

import numpy as np

from dpar._kernels import (NUMBA_ENABLED, _lev_batch_nb, _lev_batch_np,
                           encode, encode_batch)
from dpar.charset import SUPPORTED_SET

ALPHABET = sorted(SUPPORTED_SET)


def make_workload(rng, n_batches, batch_size, min_len=8, max_len=16):
    workloads = []
    for _ in range(n_batches):
        orig_len = int(rng.integers(min_len, max_len + 1))
        original = "".join(ALPHABET[i]
                           for i in rng.integers(0, len(ALPHABET), orig_len))
        candidates = []
        for _ in range(batch_size):
            length = int(rng.integers(min_len, max_len + 4))
            candidates.append("".join(
                ALPHABET[i] for i in rng.integers(0, len(ALPHABET), length)))
        workloads.append((encode(original), *encode_batch(candidates)))
    return workloads


def run(kernel, workloads):
    start = time.perf_counter()
    checksum = 0
    for orig, matrix, lengths in workloads:
        checksum += int(kernel(orig, matrix, lengths).sum())
    return time.perf_counter() - start, checksum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--batches", type=int, default=200,
                        help="number of recommend-sized batches")
    parser.add_argument("--batch-size", type=int, default=675,
                        help="candidates per batch")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    workloads = make_workload(rng, args.batches, args.batch_size)
    pairs = args.batches * args.batch_size

    print(f"workload: {args.batches} batches x {args.batch_size} candidates "
          f"({pairs} distance computations)")

    np_time, np_sum = run(_lev_batch_np, workloads)
    print(f"numpy : {np_time:8.3f}s  ({pairs / np_time:12.0f} pairs/s)")

    if not NUMBA_ENABLED:
        print("numba : unavailable (DPAR_NUMBA=0 or numba not installed)")
        return

    run(_lev_batch_nb, workloads[:1])  # JIT warmup
    nb_time, nb_sum = run(_lev_batch_nb, workloads)
    print(f"numba : {nb_time:8.3f}s  ({pairs / nb_time:12.0f} pairs/s)")
    assert nb_sum == np_sum, "kernel outputs diverge"
    print(f"speedup: {np_time / nb_time:.1f}x (identical results)")


if __name__ == "__main__":
    main()
