"""Compare the compiled kernels against the pure-Python fallback.

Each workload runs in a fresh interpreter so the monomial product cache starts
empty; ``GRS_PURE_PYTHON=1`` selects the fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from grs import hopf, kernels, rmatrix, suites
from grs.algebra import DEFAULT_BOUND, Bound, coproduct, generator

def timed(fn):
    kernels.clear_cache()
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start

a, b, c, d, f = (generator(x) for x in "abcdf")

def powers():
    x = a * b + c * d * f + b * c + d
    y = x
    for _ in range(6):
        y = y * x

def coproducts():
    x = (a * b * c + d * d * f) ** 2
    coproduct(x)
    coproduct(x, 3)

results = {
    "implementation": kernels.IMPLEMENTATION,
    "element powers": timed(powers),
    "coproducts": timed(coproducts),
    "hopf suite": timed(lambda: hopf.verify_hopf_axioms(Bound(k=2, l=2, m=2, n=2, t=2, j=1))),
    "rll suite": timed(lambda: rmatrix.verify_rll(DEFAULT_BOUND)),
}
json.dump(results, sys.stdout)
"""


def run(pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("GRS_PURE_PYTHON", None)
    if pure:
        env["GRS_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    best: dict[str, dict[str, float]] = {}
    for pure in (False, True):
        for _ in range(args.repeat):
            res = run(pure)
            impl = res.pop("implementation")
            slot = best.setdefault(impl, {})
            for name, secs in res.items():
                slot[name] = min(secs, slot.get(name, float("inf")))

    if "cython" not in best:
        print("compiled extension not built; only the fallback was timed")
    names = list(next(iter(best.values())))
    print(f"{'workload':<16} {'cython':>10} {'python':>10} {'speedup':>8}")
    for name in names:
        cy = best.get("cython", {}).get(name)
        py = best["python"][name]
        ratio = f"{py / cy:7.2f}x" if cy else "      -"
        cy_text = f"{cy:9.3f}s" if cy else "         -"
        print(f"{name:<16} {cy_text:>10} {py:9.3f}s {ratio:>8}")


if __name__ == "__main__":
    main()
