"""Compare the compiled and pure-Python polynomial kernels.

Runs each workload once per backend in a fresh interpreter (so caches do
not leak between backends) and checks that both produce the same polynomial.

    python benchmarks/bench_kernels.py [--quick] [--repeat N]
"""

import argparse
import json
import subprocess
import sys

WORKLOADS = [
    # (label, r, n, mu, object)
    ("E r=3 n=1 mu=(-2,0,4)", 3, 1, (-2, 0, 4), "E"),
    ("E r=4 n=1 mu=(0,0,0,4)", 4, 1, (0, 0, 0, 4), "E"),
    ("E r=4 n=1 mu=(-1,0,1,3)", 4, 1, (-1, 0, 1, 3), "E"),
    ("E r=3 n=2 mu=(-3,1,6)", 3, 2, (-3, 1, 6), "E"),
    ("P r=5 n=1 mu=(3,1,0,0,0)", 5, 1, (3, 1, 0, 0, 0), "P"),
]
QUICK = [WORKLOADS[0], WORKLOADS[3]]

_CHILD = r"""
import hashlib, json, sys, time
from ssvpoly import kernel
from ssvpoly.formulas import compute_E, compute_P
from ssvpoly.rootsys import MetaplecticContext
backend, r, n, mu, obj = json.loads(sys.argv[1])
kernel.use_backend(backend)
ctx = MetaplecticContext(r, n)
t = time.perf_counter()
poly = (compute_E if obj == "E" else compute_P)(tuple(mu), ctx)
dt = time.perf_counter() - t
print(json.dumps({"seconds": dt, "terms": len(poly), "digest": hashlib.sha1(poly.to_text().encode()).hexdigest()}))
"""


def run_one(backend, r, n, mu, obj):
    arg = json.dumps([backend, r, n, list(mu), obj])
    res = subprocess.run([sys.executable, "-c", _CHILD, arg], capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)

    from ssvpoly import kernel

    backends = kernel.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':28s} {'terms':>5s} " + " ".join(f"{b:>9s}" for b in backends) + "  speedup")
    for label, r, n, mu, obj in QUICK if args.quick else WORKLOADS:
        times, digests, terms = {}, set(), 0
        for b in backends:
            best = None
            for _ in range(args.repeat):
                out = run_one(b, r, n, mu, obj)
                best = out["seconds"] if best is None else min(best, out["seconds"])
                digests.add(out["digest"])
                terms = out["terms"]
            times[b] = best
        speed = f"{times['python'] / times['cython']:6.2f}x" if "cython" in times else "   n/a"
        same = "" if len(digests) == 1 else "  MISMATCH"
        cols = " ".join(f"{times[b]:8.2f}s" for b in backends)
        print(f"{label:28s} {terms:5d} {cols}  {speed}{same}")


if __name__ == "__main__":
    main()
