"""Recompute small Widom-factor tables for the built-in set families.

Runs the exchange solver on regular polygons, cusped hypocycloids and
circular lunes at modest degrees and prints one table per family.  With
the default settings this takes a minute or two; raise DEGREES or the
threshold for higher-fidelity values.
"""

from fractions import Fraction

from mpmath import mp

from complexcheb import (
    hypocycloid_curve,
    lune_curve,
    polygon_curve,
    set_precision,
    widom_table,
)

DEGREES = [2, 3, 5, 8, 10]
THRESHOLD = "1e-10"
DIGITS = 40


def show(curve):
    records = widom_table(curve, DEGREES, threshold=THRESHOLD, precision=DIGITS)
    print(f"\n{curve.label}")
    with set_precision(DIGITS):
        for rec in records:
            if rec.failed:
                print(f"  n={rec.degree:3d}  failed: {rec.error}")
            else:
                print(f"  n={rec.degree:3d}  W_n = {mp.nstr(rec.widom, 12)}"
                      f"   ({rec.iterations} exchanges)")


if __name__ == "__main__":
    for m in (3, 4, 6):
        show(polygon_curve(m))
    show(hypocycloid_curve(3))
    show(lune_curve(Fraction(1, 2)))
    show(lune_curve(2))  # the segment [-2, 2]: every factor equals 2
