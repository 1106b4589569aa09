"""Time the compiled and pure-Python partition kernels side by side.

    python benchmarks/bench_kernels.py [--repeat 3] [--no-oracle]
"""

import argparse
import time

from planar2tree import families as F
from planar2tree import kernels
from planar2tree.partitions import PATH_PATH, PATH_TREE, find_partition, oracle_find_partition

CASES = [
    ("g4 path-tree", lambda: F.g_k(4).graph, PATH_TREE),
    ("h22 path-path", lambda: F.h_22().graph, PATH_PATH),
    ("h22 path-tree", lambda: F.h_22().graph, PATH_TREE),
    ("prism(12) path-path", lambda: F.prism(12).graph, PATH_PATH),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn()
        best = min(best, time.perf_counter() - t0)
    return best, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--no-oracle", action="store_true", help="skip the brute-force oracle timings")
    args = ap.parse_args()

    backends = kernels.available()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':<22}{'kind':<8}" + "".join(f"{b:>14}" for b in backends) + f"{'speedup':>10}")
    kinds = [("search", find_partition)] + ([] if args.no_oracle else [("oracle", oracle_find_partition)])
    for label, make, spec in CASES:
        g = make()
        for kind, fn in kinds:
            if kind == "oracle" and g.n > 24:
                continue
            times, answers = [], set()
            for b in backends:
                # the python oracle walks millions of subsets; once is enough
                rep = 1 if (kind == "oracle" and b == "python") else args.repeat
                t, res = best_of(lambda: fn(g, spec, backend=b), rep)
                times.append(t)
                answers.add(res.sat)
            assert len(answers) == 1, f"backends disagree on {label}"
            speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 and times[-1] > 0 else ""
            print(f"{label:<22}{kind:<8}" + "".join(f"{t:>13.4f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
