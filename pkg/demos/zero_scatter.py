"""Zero sets of computed Chebyshev polynomials, written as SVG scatter plots.

Computes a moderate-degree Chebyshev polynomial on a hypocycloid and a
non-convex lune, finds its zeros, prints a summary of how deep in the
interior the zero mass sits, and writes curve-plus-zeros scatter plots
next to this script.
"""

import pathlib
from fractions import Fraction

from mpmath import mp, mpf

from complexcheb import (
    chebyshev,
    hypocycloid_curve,
    lune_curve,
    polynomial_zeros,
    set_precision,
    zero_measure_summary,
)
from complexcheb.svgplot import scatter_svg

HERE = pathlib.Path(__file__).resolve().parent


def show(curve, degree, stem):
    rec = chebyshev(curve, degree, threshold="1e-10", precision=40)
    with set_precision(40):
        zs = polynomial_zeros(rec.polynomial)
        summary = zero_measure_summary(zs, curve, curve_samples=1024)
        print(f"\n{curve.label}, degree {degree}")
        print(f"  widom factor     {mp.nstr(rec.widom, 10)}")
        print(f"  zero set size    {len(zs.zeros)}")
        print(f"  min dist to curve {mp.nstr(summary.min_distance, 6)}")
        for s, frac in summary.interior_fractions.items():
            print(f"  fraction deeper than {mp.nstr((1 - s), 3)} * diameter: "
                  f"{mp.nstr(frac, 4)}")
        pts = [curve.eval(mpf(i) / 1024) for i in range(1024)]
        svg = scatter_svg([(p.real, p.imag) for p in pts],
                          [(z.real, z.imag) for z in zs.zeros])
    out = HERE / f"{stem}.svg"
    out.write_text(svg)
    print(f"  wrote {out}")


if __name__ == "__main__":
    show(hypocycloid_curve(3), 11, "zeros_hypocycloid3_deg11")
    show(lune_curve(Fraction(1, 2)), 12, "zeros_lune_half_deg12")
