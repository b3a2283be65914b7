"""Benchmark the numba kernels against the pure-numpy fallback.

Run with ``python benchmarks/bench_kernels.py``.  Set QLAT_NO_NUMBA=1 to
confirm the fallback path is selected globally; this script times both
implementations directly when numba is available.
"""

import time

import numpy as np

from qlat import kernels


def timeit(fn, *args, repeat=5):
    fn(*args)  # warm up (includes JIT compilation)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_quad_matmul():
    rng = np.random.default_rng(0)
    a = (2 * rng.integers(-3, 4, size=(5000, 4, 4, 2))).astype(np.int64)
    b = (2 * rng.integers(-3, 4, size=(4, 4, 2))).astype(np.int64)
    cases = [("numpy", lambda: kernels._quad_matmul_batch_np(a, b, 1, 1))]
    if kernels.HAVE_NUMBA:
        cases.append(("numba", lambda: kernels._quad_matmul_batch_nb(a, b, 1, 1)))
    return "quad_matmul_batch (5000 x 4x4)", cases


def bench_box_scan():
    from qlat.cutproject import Window, _zonotope_facets, embedding

    emb = embedding("H3-primitive")
    normals, supports = _zonotope_facets(emb.cell_generators, 1.0)
    combined = np.vstack([emb.parallel, emb.perpendicular])
    inv = np.linalg.inv(combined)
    reach = np.hypot(8.0, 0.5 * np.linalg.norm(emb.cell_generators, axis=0).sum())
    bounds = np.ceil(np.linalg.norm(inv, axis=1) * reach + 1e-9).astype(np.int64)
    args_np = (emb.parallel, emb.perpendicular, bounds, 8.0, normals, supports, 0.0)
    cases = [("numpy", lambda: kernels._box_scan_np(*args_np))]
    if kernels.HAVE_NUMBA:
        par = np.ascontiguousarray(emb.parallel)
        perp = np.ascontiguousarray(emb.perpendicular)
        cases.append(
            ("numba", lambda: kernels._box_scan_nb(
                par, perp, bounds, 8.0, normals, supports, 0.0))
        )
    return "box_scan (H3 patch, radius 8)", cases


def bench_structure_factor():
    rng = np.random.default_rng(1)
    points = rng.normal(size=(4000, 3))
    ks = rng.normal(size=(50, 3))
    cases = [("numpy", lambda: kernels._structure_factor_np(points, ks))]
    if kernels.HAVE_NUMBA:
        cases.append(("numba", lambda: kernels._structure_factor_nb(points, ks)))
    return "structure_factor (4000 pts x 50 k)", cases


def main():
    print(f"active backend: {kernels.backend()}")
    for builder in (bench_quad_matmul, bench_box_scan, bench_structure_factor):
        label, cases = builder()
        times = {name: timeit(fn) for name, fn in cases}
        line = "  ".join(f"{name}: {t * 1e3:8.2f} ms" for name, t in times.items())
        if len(times) == 2:
            speedup = times["numpy"] / times["numba"]
            line += f"  speedup: {speedup:.1f}x"
        print(f"{label:38s} {line}")


if __name__ == "__main__":
    main()
