"""Compare the compiled and pure-Python kernels on the canonical family sweep.

    python benchmarks/bench_kernels.py [--max-prefix 5] [--max-cycle 4] [--max-n 8] [--repeat 3]

Both backends are run over identical inputs; results are checked for equality
before any timing is reported.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from finred.fixpoint import build_quotient
from finred.kernels import backend
from finred.stream import all_streams


def sweep(mod, quotients, max_n):
    out = []
    for q in quotients:
        p, n, red = q.prefix_len, q.state_count, q.red
        out.append((
            mod.eventually_mask(p, n, red),
            mod.always_mask(p, n, ((1 << n) - 1) & ~red),
            mod.mu_w_mask(p, n, red),
            mod.nu_u_mask(p, n, red),
            tuple(mod.atmost_mask(p, n, red, k) for k in range(max_n + 1)),
            tuple(mod.fiter_mask(p, n, red, k) for k in range(max_n + 1)),
        ))
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-prefix", type=int, default=5)
    ap.add_argument("--max-cycle", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    quotients = [build_quotient(s) for s in all_streams(args.max_prefix, args.max_cycle)]
    py = backend("python")
    try:
        cy = backend("cython")
    except ImportError:
        print("compiled kernels not built; only the Python backend is available")
        cy = None

    mods = {"python": py} if cy is None else {"python": py, "cython": cy}
    if cy is not None and sweep(py, quotients, args.max_n) != sweep(cy, quotients, args.max_n):
        print("backends disagree", file=sys.stderr)
        return 1

    print(f"{len(quotients)} streams, n <= {args.max_n}, best of {args.repeat}")
    best = {}
    for name, mod in mods.items():
        best[name] = min(timeit.repeat(lambda: sweep(mod, quotients, args.max_n),
                                       number=1, repeat=args.repeat))
        print(f"  {name:7s} {best[name] * 1e3:9.2f} ms")
    if len(best) == 2:
        print(f"  speedup {best['python'] / best['cython']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
