"""Benchmark the compiled MLP kernels against the pure-numpy fallback.

Times the three hot shapes: single-state policy forward (rollout
collection), minibatch policy forward+backward (PPO updates), and large
autoencoder batches (novelty scoring and training).

Usage: python benchmarks/bench_mlp.py [--repeats N]
"""

import argparse
import time

import numpy as np

from tnb.nn import MlpSpec, init_params
from tnb.nn import backend_numpy

try:
    from tnb.nn import _fastmlp
except ImportError:
    _fastmlp = None

CASES = [
    ("policy fwd, single state", MlpSpec(4, (64, 64, 64), 2), 1, False),
    ("policy fwd+bwd, minibatch", MlpSpec(4, (64, 64, 64), 2), 64, True),
    ("autoencoder fwd, batch", MlpSpec(64, (256, 128, 64, 32, 64, 128, 256), 64, "relu"), 512, False),
    ("autoencoder fwd+bwd, batch", MlpSpec(64, (256, 128, 64, 32, 64, 128, 256), 64, "relu"), 512, True),
]


def run_case(impl, spec, batch, with_backward, repeats):
    rng = np.random.default_rng(0)
    params = init_params(spec, rng)
    x = rng.standard_normal((batch, spec.input_dim))
    gout = rng.standard_normal((batch, spec.output_dim))
    dims = spec._dims32
    # warmup
    y, cache = impl.forward(params, dims, spec.act_id, x, with_backward)
    if with_backward:
        impl.backward(params, dims, spec.act_id, cache, gout)
    t0 = time.perf_counter()
    for _ in range(repeats):
        y, cache = impl.forward(params, dims, spec.act_id, x, with_backward)
        if with_backward:
            impl.backward(params, dims, spec.act_id, cache, gout)
    return (time.perf_counter() - t0) / repeats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=2000)
    args = parser.parse_args()

    print(f"{'case':<30}{'batch':>7}{'numpy us':>12}{'cython us':>12}{'speedup':>9}")
    for name, spec, batch, bwd in CASES:
        reps = max(20, args.repeats // max(1, batch // 8))
        t_np = run_case(backend_numpy, spec, batch, bwd, reps) * 1e6
        if _fastmlp is None:
            print(f"{name:<30}{batch:>7}{t_np:>12.1f}{'n/a':>12}{'-':>9}")
            continue
        t_cy = run_case(_fastmlp, spec, batch, bwd, reps) * 1e6
        print(f"{name:<30}{batch:>7}{t_np:>12.1f}{t_cy:>12.1f}{t_np / t_cy:>8.2f}x")
    if _fastmlp is None:
        print("\ncompiled extension not built; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
