"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Times the raw contractions on every basis 4-tuple of the octonions and the
end-to-end checks that dominate real runs, once per available backend.
"""
import argparse
import time

from bihom import _kernels, associated_akivis, audit, classify
from bihom._kernels import apply_linear, apply_multilinear, basis_batches
from bihom.catalog import build, make_octonion_rotation, octonion_table


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def kernel_work():
    mu, rho = octonion_table(), make_octonion_rotation()
    w, x, y, z = basis_batches(8, 4)
    for _ in range(5):
        apply_multilinear(mu, apply_multilinear(mu, apply_linear(rho, w), x), apply_multilinear(mu, y, z))


def pipeline_work():
    for name in ("octonions", "octonions-bihom"):
        A = build(name)
        classify(A)
        K = associated_akivis(A)
        audit(classify(K), K)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    rows = []
    for backend in _kernels.available_backends():
        _kernels.use_backend(backend)
        rows.append((backend, best_of(kernel_work, args.repeat), best_of(pipeline_work, args.repeat)))
    print(f"{'backend':<8} {'kernels (s)':>12} {'pipeline (s)':>13}")
    for backend, k, pl in rows:
        print(f"{backend:<8} {k:>12.3f} {pl:>13.3f}")
    if len(rows) == 2:
        print(f"speedup  {rows[1][1] / rows[0][1]:>12.2f}x {rows[1][2] / rows[0][2]:>12.2f}x")


if __name__ == "__main__":
    main()
