"""Absolute and relative gap between the extremal value and the odd-degree bound, even N.

The absolute gap settles near 0.2026 while the bound grows like N^2, so the
relative gap decays like 1/N^2.
"""

import argparse

from typreal import j_value, upper_bound

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=400)
    ap.add_argument("--step", type=int, default=20)
    args = ap.parse_args()
    print(f"{'N':>6} {'bound':>14} {'J_N':>14} {'gap':>10} {'gap/bound':>10}")
    for n in range(2, args.max_n + 1, args.step):
        b, j = upper_bound(n), j_value(n)
        print(f"{n:>6} {b:14.6f} {j:14.6f} {b - j:10.6f} {(b - j) / b:10.2e}")
