#!/usr/bin/env python3
"""Benchmark: compiled kernel vs pure-Python fallback.

Two views:
  * micro -- times the term-dict multiply on real intermediates harvested
    from the dim-15 spin kernel assembly;
  * macro -- wall time of a full dim-23 verification in a subprocess under
    each backend (ODDGENUS_PURE toggles the fallback).

Run: python benchmarks/bench_kernels.py
"""

import os
import subprocess
import sys
import time

from oddgenus import _kernel_py
from oddgenus import anomaly

try:
    from oddgenus import _kernels
except ImportError:
    _kernels = None


def harvest_operands():
    """Two representative big x small coefficient polynomials from the
    dim-15 kernel product."""
    kern = anomaly.spin_kernel(4, 6)
    coeffs = sorted(kern.coeffs.items())
    big = max((c for _, c in coeffs), key=lambda p: len(p.terms))
    from oddgenus.theta import theta_quotient
    from oddgenus.anomaly import _lift_univariate

    uni = theta_quotient("Q2", "X", 6, 12).series
    small = _lift_univariate(uni, kern.ring, 0).coeff(1)
    return big.terms, small.terms, big.ring.degree_cap


def bench_micro(reps=20):
    big, small, cap = harvest_operands()
    rows = []
    impls = [("python", _kernel_py)]
    if _kernels is not None:
        impls.append(("cython", _kernels))
    for name, impl in impls:
        t0 = time.perf_counter()
        for _ in range(reps):
            impl.mul_terms(big, small, cap)
            impl.mul_terms(big, big, cap)
        dt = (time.perf_counter() - t0) / reps
        rows.append((name, dt))
    return rows


def bench_macro():
    rows = []
    for name, env_extra in (("cython", {}), ("python", {"ODDGENUS_PURE": "1"})):
        env = dict(os.environ, **env_extra)
        t0 = time.perf_counter()
        subprocess.run(
            [sys.executable, "-m", "oddgenus.cli", "verify", "--family", "spin_sl2z", "--dim", "23"],
            check=False,
            env=env,
            capture_output=True,
        )
        rows.append((name, time.perf_counter() - t0))
    return rows


def main():
    print(f"active backend: {__import__('oddgenus').KERNEL_BACKEND}")
    print("\nmicro (term-dict multiply, dim-15 intermediates):")
    micro = bench_micro()
    base = dict(micro).get("python")
    for name, dt in micro:
        speed = f"  ({base / dt:.2f}x vs python)" if base and name != "python" else ""
        print(f"  {name:8s} {dt * 1e3:8.2f} ms/rep{speed}")
    print("\nmacro (full dim-23 verification, subprocess):")
    macro = bench_macro()
    base = dict(macro).get("python")
    for name, dt in macro:
        speed = f"  ({base / dt:.2f}x vs python)" if base and name != "python" else ""
        print(f"  {name:8s} {dt:8.2f} s{speed}")


if __name__ == "__main__":
    main()
