"""Minimal static SVG scatter emitter (curve polyline + zero markers)."""


def _fmt(x):
    return format(float(x), ".6g")


def scatter_svg(curve_points, markers, size=640, margin=0.08):
    """SVG document showing a closed polyline and scatter markers.

    ``curve_points`` and ``markers`` are sequences of (x, y) pairs.  The
    viewBox is fitted to the data; no external assets are referenced.
    """
    pts = [(float(x), float(y)) for x, y in curve_points]
    mks = [(float(x), float(y)) for x, y in markers]
    allpts = pts + mks or [(0.0, 0.0)]
    xs = [p[0] for p in allpts]
    ys = [p[1] for p in allpts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-12)
    pad = span * margin
    x0, y0 = min(xs) - pad, min(ys) - pad
    w = (max(xs) - min(xs)) + 2 * pad
    h = (max(ys) - min(ys)) + 2 * pad
    scale = size / max(w, h)

    def sx(x):
        return (x - x0) * scale

    def sy(y):
        # SVG y grows downward
        return (y0 + h - y) * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(w * scale)} {_fmt(h * scale)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if pts:
        path = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in pts)
        lines.append(
            f'<polygon points="{path}" fill="none" stroke="black" stroke-width="1"/>')
    radius = size / 320
    for x, y in mks:
        lines.append(
            f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="{_fmt(radius)}" fill="crimson"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
