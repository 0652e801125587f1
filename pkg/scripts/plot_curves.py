"""Plot the image of the upper unit semicircle under the extremal polynomials.

Needs matplotlib (``pip install -e .[plot]``).
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from typreal import compute_extremal, curve_samples  # noqa: E402

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("degrees", nargs="*", type=int, default=[6, 7])
    ap.add_argument("--samples", type=int, default=2048)
    ap.add_argument("--out", default="curves.png")
    args = ap.parse_args()

    fig, axes = plt.subplots(1, len(args.degrees), figsize=(5 * len(args.degrees), 4), squeeze=False)
    for ax, n in zip(axes[0], args.degrees):
        s = curve_samples(compute_extremal(n).coeffs, args.samples)
        ax.plot([p.re for p in s], [p.im for p in s], lw=1.2)
        ax.axhline(0, color="k", lw=0.5)
        ax.set_title(f"F_{n}(e^(it)), 0 <= t <= pi")
        ax.set_aspect("equal", adjustable="datalim")
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}")
