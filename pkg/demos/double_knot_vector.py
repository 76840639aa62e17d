#!/usr/bin/env python3
"""Raising the smoothness of a vector scheme, stage by stage.

The double-knot cubic spline scheme refines pairs of control values with a
2x2 matrix mask and produces C^1 limits.  The walk below mirrors the
smoothing procedure: find the common 1-eigenspace, change basis so it
spans the first coordinate, smooth blockwise, transform back, and inspect
how the eigenvalues of the symbol value at z = 1 halved.
"""

from subsmooth import (canonical_transform, catalog, common_one_eigenspace,
                       conjugate, smooth_raw, smooth_vector)


def fmt(m):
    return "[" + ";  ".join(", ".join(str(m[i, j]) for j in range(m.cols))
                            for i in range(m.rows)) + "]"


def main():
    b = catalog.get("double-knot")
    print("input symbol value at 1: ", fmt(b.symbol.evaluate(1)))
    print("input symbol value at -1:", fmt(b.symbol.evaluate(-1)))

    basis = common_one_eigenspace(b)
    print("\ncommon 1-eigenspace basis:",
          [tuple(str(v[i, 0]) for i in range(2)) for v in basis])

    es = canonical_transform(b)
    print("canonical transform R =", fmt(es.r))
    barred = conjugate(b, es.r)
    print("normalized symbol entries:")
    for i in range(2):
        for j in range(2):
            print(f"  ({i + 1},{j + 1}): {barred.symbol[i, j]}")

    smoothed = smooth_raw(barred, es.k)
    print("\nafter blockwise smoothing (k = 1):")
    for i in range(2):
        for j in range(2):
            print(f"  ({i + 1},{j + 1}): {smoothed.symbol[i, j]}")

    a = smooth_vector(b)
    print("\nfinal mask (original coordinates):")
    print("value at 1: ", fmt(a.symbol.evaluate(1)))
    print("value at -1:", fmt(a.symbol.evaluate(-1)))
    print("support:", a.support, "(input:", b.support, ")")

    at1 = a.symbol.evaluate(1)
    tr = at1[0, 0] + at1[1, 1]
    det = at1[0, 0] * at1[1, 1] - at1[0, 1] * at1[1, 0]
    print("eigenvalues of the value at 1: trace =", tr, ", det =", det,
          " -> {2, 1/8} (input had {2, 1/4})")


if __name__ == "__main__":
    main()
