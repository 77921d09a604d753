"""Compare the compiled and pure-Python Hecke multiplication kernels.

    python benchmarks/bench_kernel.py [--repeat 3]

Each case is run on both backends; results are checked for equality before
timings are reported.
"""
import argparse
import random
import time

from skeinhecke import hecke
from skeinhecke.hecke import a_n, b_n, e_lambda
from skeinhecke.verify import random_element
from skeinhecke.young import YoungDiagram


def cases():
    rng = random.Random(1)
    e321 = e_lambda(YoungDiagram((3, 2, 1)))
    e33 = e_lambda(YoungDiagram((3, 3)))
    r6 = [random_element(rng, 6, 40) for _ in range(2)]
    return [
        ("a_5 * a_5", a_n(5), a_n(5)),
        ("a_6 * a_6", a_n(6), a_n(6)),
        ("b_6 * a_6", b_n(6), a_n(6)),
        ("e(3,2,1)^2", e321, e321),
        ("e(3,2,1) e(3,3)", e321, e33),
        ("random H_6, 40 terms", r6[0], r6[1]),
    ]


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if hecke._ckernel is None:
        raise SystemExit("compiled kernel not built; reinstall with a C++ compiler and Cython available")
    # build e_lambda once outside the timed region
    hecke.set_backend("compiled")
    work = cases()
    print(f"{'case':24} {'compiled (s)':>13} {'python (s)':>11} {'speed-up':>9}")
    for name, left, right in work:
        hecke.set_backend("compiled")
        tc, rc = timed(lambda: left * right, args.repeat)
        hecke.set_backend("python")
        tp, rp = timed(lambda: left * right, args.repeat)
        if rc != rp:
            raise SystemExit(f"backend mismatch on {name}")
        print(f"{name:24} {tc:13.4f} {tp:11.4f} {tp / tc:8.1f}x")
    hecke.set_backend("compiled")


if __name__ == "__main__":
    main()
