#!/usr/bin/env python3
"""B-spline degree raising: the scalar smoothing factor in action.

Starting from the piecewise-constant splitting scheme with symbol 1 + z,
each application of the smoothing operator multiplies the symbol by
(1+z)/2 * z^-1 and raises the regularity of the limit curve by one.  The
derived scheme walks the chain back down.
"""

from subsmooth import (certify_c0, derived_scalar, operator_norm,
                       scheme_scalar, smooth_scalar, catalog)


def main():
    mask = catalog.get("bspline0")
    print("degree  symbol" + " " * 42 + "norm   certificate")
    for degree in range(0, 7):
        cert = certify_c0(mask) if degree >= 1 else None
        cert_txt = (f"L={cert.L}, |(S/2)^L|={cert.norm_value}"
                    if cert and hasattr(cert, "L") else "-")
        print(f"{degree:>6}  {str(scheme_scalar(mask)):<47} "
              f"{str(operator_norm(mask)):<6} {cert_txt}")
        mask = smooth_scalar(mask)

    print("\nwalking back down with the derived scheme:")
    mask = catalog.get("bspline6")
    for degree in range(6, 0, -1):
        down = derived_scalar(mask)
        print(f"der(bspline{degree}) == bspline{degree - 1}:",
              scheme_scalar(down) == scheme_scalar(catalog.get(f"bspline{degree - 1}")))
        mask = catalog.get(f"bspline{degree - 1}")


if __name__ == "__main__":
    main()
