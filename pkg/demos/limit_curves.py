#!/usr/bin/env python3
"""Sampling basic limit functions to CSV.

The basic limit function is generated from a unit impulse; its integer
translates span every limit of the scheme.  Refinement is exact rational
arithmetic, converted to floats only when the rows are written, and for
Hermite schemes the second channel carries the derivative.
"""

import os

from fractions import Fraction

from subsmooth import catalog, render

OUT_DIR = os.path.join(os.path.dirname(__file__), "out")


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    jobs = [
        ("bspline1", 6, 1),           # hat function
        ("bspline3", 6, 1),           # cubic B-spline
        ("merrien", 6, 1),            # interpolatory basis, f(0) = 1
        ("merrien-smoothed", 6, 1),   # smoothed, supported on [-6, 1]
        ("derham-smoothed", 6, 1),
    ]
    for name, depth, basis in jobs:
        sample = render(catalog.get(name), depth, basis)
        path = os.path.join(OUT_DIR, f"{name}.csv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(sample.to_csv())
        ts = [t for t, _ in sample.rows]
        print(f"{name}: {len(sample.rows)} samples on "
              f"[{min(ts)}, {max(ts)}] -> {path}")

    # derivative-channel consistency of the smoothed Hermite scheme
    c = catalog.get("merrien-smoothed")
    print("\nchannel 2 vs scaled forward difference of channel 1:")
    for n in range(4, 9):
        s = render(c, n, 1)
        pow2 = Fraction(2) ** n
        dev = max(abs(s.values[i][1] - (s.values[i + 1][0] - s.values[i][0]) * pow2)
                  for i in range(len(s.values) - 1))
        print(f"  depth {n}: max deviation {float(dev):.3e}")


if __name__ == "__main__":
    main()
