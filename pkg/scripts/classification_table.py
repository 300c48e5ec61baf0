#!/usr/bin/env python3
"""Print the projection summary for the five standard solutions at one n,
plus the two-direction fit of equal surplus division through equal division
and Banzhaf. All entries are exact fractions with a decimal rendering."""

import argparse

from valuegeom import (
    fraction_str,
    gram_fit,
    mixture_profile,
    named_profile,
    projection_report,
)


def cell(x) -> str:
    return f"{fraction_str(x)} ({float(x):.4g})"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4, help="player count (default 4)")
    args = parser.parse_args()
    n = args.n

    header = ["target", "eps_star", "dist_sq", "proj_sq", "resid_sq", "r2"]
    rows = []
    for kind in ("sh", "ed", "bz", "esd", "so"):
        rep = projection_report(named_profile(kind, n), kind)
        rows.append([kind, cell(rep.eps_star), cell(rep.dist_sq), cell(rep.proj_sq), cell(rep.resid_sq), cell(rep.r2)])
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    print(f"projection onto the Shapley-to-equal-division line, n = {n}")
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)))

    fit = gram_fit(named_profile("esd", n), [named_profile("ed", n), named_profile("bz", n)], ["ed", "bz"])
    print()
    print(f"two-direction fit of esd through ed and bz, n = {n}")
    print(f"  gram det {cell(fit.gram_det)}, coeffs ({cell(fit.coeffs[0])}, {cell(fit.coeffs[1])})")
    print(f"  proj_sq {cell(fit.proj_sq)}, r2 {cell(fit.r2_u)}")
    mix = mixture_profile(fit)
    print(f"  mixture keeps {cell(fit.shapley_coefficient)} on sh; alpha = "
          + ", ".join(fraction_str(a) for a in mix.alpha))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
