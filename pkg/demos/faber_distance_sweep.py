"""How fast Chebyshev polynomials of level curves merge into Faber polynomials.

For a fixed degree, sweeps the level parameter r and prints the
coefficient distance between the Chebyshev polynomial of the level curve
and the Faber polynomial of the base set, plus the fitted log-log slope.
Smooth families show clean power-law decay; the exponent depends on the
geometry of the base set.
"""

from mpmath import mp

from complexcheb import faber_connection_sweep, set_precision

DEGREE = 7
R_GRID = ["1.5", "2", "2.7", "3.6"]


def show(family, m):
    res = faber_connection_sweep(family, DEGREE, r_grid=R_GRID,
                                 threshold="1e-16", precision=40, m=m)
    print(f"\n{family} (m={res.m}), degree {res.degree}")
    with set_precision(40):
        for p in res.points:
            if p.error:
                print(f"  r={mp.nstr(p.r, 6)}  error: {p.error}")
            elif p.censored:
                print(f"  r={mp.nstr(p.r, 6)}  distance at/below threshold")
            else:
                print(f"  r={mp.nstr(p.r, 6)}  distance {mp.nstr(p.distance, 8)}")
        if res.slope is not None:
            print(f"  fitted log-log slope: {mp.nstr(res.slope, 6)}")


if __name__ == "__main__":
    show("power-lemniscate", 2)
    show("lune", 2)
    show("hypocycloid", 5)
