#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the individual hot kernels and one full training epoch under each
backend. Matrix products use BLAS either way, so the step-level speedup
comes from fusing the elementwise work (ReLU, softmax cross-entropy, SGD
updates).

Usage: python benchmarks/bench_backends.py [--epoch-examples N] [--repeats R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np
from threadpoolctl import threadpool_limits

from prunelab import backend
from prunelab.backend import NUMBA_KERNELS, NUMPY_KERNELS
from prunelab.data import synthetic_gaussian
from prunelab.network import InitScheme, initialize, mlp_specs
from prunelab.training import OptimizerConfig, train


def time_fn(fn, repeats: int) -> float:
    fn()  # warm-up (and numba JIT)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(kernels, repeats: int) -> dict[str, float]:
    rng = np.random.default_rng(0)
    x = rng.standard_normal((128, 300))
    g = rng.standard_normal((128, 300))
    logits = rng.standard_normal((128, 10))
    labels = rng.integers(0, 10, 128)
    w = rng.standard_normal(784 * 300)
    grad = rng.standard_normal(784 * 300)
    buf = np.zeros_like(w)
    return {
        "relu": time_fn(lambda: kernels.relu(x), repeats),
        "relu_grad_mul": time_fn(lambda: kernels.relu_grad_mul(x, g), repeats),
        "softmax_xent": time_fn(lambda: kernels.softmax_xent(logits, labels), repeats),
        "sgd_update": time_fn(
            lambda: kernels.sgd_update(w, grad, buf, 0.1, 0.9, 1e-4), repeats
        ),
    }


def bench_epoch(name: str, examples: int) -> float:
    backend.set_backend(name)
    data = synthetic_gaussian(10, 784, examples // 10, 3.0, 0)
    net = initialize(mlp_specs((784, 300, 100, 10)), InitScheme(), 1)
    cfg = OptimizerConfig(learning_rate=0.1, epochs=1, batch_size=128)
    train(net, data, cfg, seed=2)  # warm-up / JIT
    t0 = time.perf_counter()
    train(net, data, cfg, seed=2)
    return time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--epoch-examples", type=int, default=10000)
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args()

    if NUMBA_KERNELS is None:
        print("numba not installed; nothing to compare")
        return

    with threadpool_limits(limits=1):
        rows = []
        np_times = bench_kernels(NUMPY_KERNELS, args.repeats)
        nb_times = bench_kernels(NUMBA_KERNELS, args.repeats)
        for key in np_times:
            rows.append((key, np_times[key], nb_times[key]))

        print(f"{'kernel':<16} {'numpy':>12} {'numba':>12} {'speedup':>9}")
        for key, t_np, t_nb in rows:
            print(f"{key:<16} {t_np * 1e6:>10.1f}us {t_nb * 1e6:>10.1f}us "
                  f"{t_np / t_nb:>8.2f}x")

        e_np = bench_epoch("numpy", args.epoch_examples)
        e_nb = bench_epoch("numba", args.epoch_examples)
        print(f"{'train epoch':<16} {e_np:>11.3f}s {e_nb:>11.3f}s "
              f"{e_np / e_nb:>8.2f}x")
    backend.set_backend("auto")


if __name__ == "__main__":
    main()
