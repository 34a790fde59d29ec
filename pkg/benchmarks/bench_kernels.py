"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py            # paper3-sized inputs (3 points, L10)
    python3 benchmarks/bench_kernels.py --n 2 --q 6 --repeat 5
"""

import argparse
import timeit

import numpy as np

from mvtop import kernels
from mvtop.fuzzy import powerset_array
from mvtop.io import parse_space
from mvtop.spaces import interior_table


def cases(n, q, seed):
    rng = np.random.default_rng(seed)
    vec = powerset_array(n, q)
    N = len(vec)
    if (n, q) == (3, 10):
        S = parse_space("paper3")
        opens = np.array([o.levels for o in S.opens], dtype=np.int64)
        table = interior_table(S)
    else:
        opens = vec[rng.random(N) < 0.1]
        table = np.array([np.max(opens[(opens <= a).all(axis=1)], axis=0, initial=0) for a in vec],
                         dtype=np.int64)
    members = np.zeros(N, dtype=np.int64)
    w = (q + 1) ** np.arange(n - 1, -1, -1)
    members[opens @ w] = 1
    idx = np.flatnonzero(members).astype(np.int64)
    dl = np.array([0, q], dtype=np.int64)
    return {
        "interior_rows": lambda b: b.interior_rows(vec, opens),
        "pair_laws": lambda b: b.pair_laws(table, vec, q, 10),
        "u6_joins": lambda b: b.u6_joins(table, vec),
        "closure_violations": lambda b: b.closure_violations(members, idx, vec, q, dl, 10),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3, help="carrier size")
    ap.add_argument("--q", type=int, default=10, help="chain denominator")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled extension not available; timing the fallback only")
    N = (args.q + 1) ** args.n
    print(f"|V^X| = {N} (n={args.n}, q={args.q}), best of {args.repeat}")
    print(f"{'kernel':<20}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for kname, fn in cases(args.n, args.q, args.seed).items():
        times = []
        for _, b in backends:
            times.append(min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)))
        speed = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 and times[1] > 0 else ""
        print(f"{kname:<20}" + "".join(f"{t * 1000:>10.1f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
