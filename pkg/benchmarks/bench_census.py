"""Time the induced-cycle census with and without numba.

Each backend runs in its own interpreter because the backend is fixed at
import time by ``INDCYCLES_DISABLE_NUMBA``. Run with::

    python3 benchmarks/bench_census.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from indcycles import count_induced_cycles, make_required_form, make_even_blowup, make_k2m
from indcycles._jit import NUMBA_ENABLED
cases = [
    ("required form n=31, k=5", make_required_form(31).graph, 5),
    ("required form n=40, k=5", make_required_form(40).graph, 5),
    ("K_2,38, k=4", make_k2m(40).graph, 4),
    ("C6 blow-up n=24, k=6", make_even_blowup(3, 24).graph, 6),
]
repeat = int(sys.argv[1])
for _, g, k in cases[:1]:
    count_induced_cycles(g, k)  # compile / warm up
out = {"numba": NUMBA_ENABLED, "rows": []}
for label, g, k in cases:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        total = count_induced_cycles(g, k).total
        best = min(best, time.perf_counter() - t)
    out["rows"].append([label, total, best])
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("INDCYCLES_DISABLE_NUMBA", None)
    if disable:
        env["INDCYCLES_DISABLE_NUMBA"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if not fast["numba"]:
        print("numba is not available; both columns use the pure-Python kernels")
    print(f"{'workload':28} {'count':>7} {'numba s':>10} {'python s':>10} {'speedup':>8}")
    for (label, c1, t1), (_, c2, t2) in zip(fast["rows"], slow["rows"]):
        if c1 != c2:
            print(f"MISMATCH on {label}: {c1} vs {c2}")
            return 1
        print(f"{label:28} {c1:7d} {t1:10.4f} {t2:10.4f} {t2 / t1:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
