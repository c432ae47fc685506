"""Small static SVG emitters: line chart, bar chart, heat map.

No plotting dependency, no interactivity, deterministic bytes.  These are
diagnostic figures, not publication graphics.
"""
from __future__ import annotations

W, H, PAD = 880, 480, 56
_STROKE = "#1f6fb2"


def _fmt(v: float) -> str:
    return format(v, ".2f").rstrip("0").rstrip(".")


def _scales(xs, ys):
    x0, x1 = float(min(xs)), float(max(xs))
    y0, y1 = float(min(ys)), float(max(ys))
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def sx(v):
        return PAD + (v - x0) / (x1 - x0) * (W - 2 * PAD)

    def sy(v):
        return H - PAD - (v - y0) / (y1 - y0) * (H - 2 * PAD)

    return sx, sy, (x0, x1, y0, y1)


def _frame(title, extent):
    x0, x1, y0, y1 = extent
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}">',
        f'<rect width="{W}" height="{H}" fill="white"/>',
        f'<text x="{W // 2}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
        f'<line x1="{PAD}" y1="{H - PAD}" x2="{W - PAD}" y2="{H - PAD}" '
        f'stroke="black"/>',
        f'<line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{H - PAD}" '
        f'stroke="black"/>',
        f'<text x="{PAD}" y="{H - PAD + 18}" font-family="sans-serif" '
        f'font-size="11" text-anchor="middle">{_fmt(x0)}</text>',
        f'<text x="{W - PAD}" y="{H - PAD + 18}" font-family="sans-serif" '
        f'font-size="11" text-anchor="middle">{_fmt(x1)}</text>',
        f'<text x="{PAD - 6}" y="{H - PAD + 4}" font-family="sans-serif" '
        f'font-size="11" text-anchor="end">{_fmt(y0)}</text>',
        f'<text x="{PAD - 6}" y="{PAD + 4}" font-family="sans-serif" '
        f'font-size="11" text-anchor="end">{_fmt(y1)}</text>',
    ]


def _write(path, parts) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")


def render_line_chart(path, xs, ys, title: str = "") -> None:
    if len(xs) != len(ys) or not len(xs):
        raise ValueError("need equal, nonzero point counts")
    sx, sy, extent = _scales(xs, ys)
    pts = " ".join(f"{sx(float(a)):.2f},{sy(float(b)):.2f}"
                   for a, b in zip(xs, ys))
    parts = _frame(title, extent)
    parts.append(f'<polyline points="{pts}" fill="none" stroke="{_STROKE}" '
                 f'stroke-width="1"/>')
    parts.append("</svg>")
    _write(path, parts)


def render_bar_chart(path, edges, counts, title: str = "") -> None:
    """Histogram bars over [edges[k], edges[k+1]) cells."""
    if len(edges) != len(counts) + 1 or not len(counts):
        raise ValueError("edges must be one longer than counts")
    top = max(float(max(counts)), 1.0)
    sx, sy, extent = _scales([edges[0], edges[-1]], [0.0, top])
    parts = _frame(title, extent)
    for k, c in enumerate(counts):
        x_left = sx(float(edges[k]))
        x_right = sx(float(edges[k + 1]))
        y_top = sy(float(c))
        height = (H - PAD) - y_top
        if height <= 0:
            continue
        parts.append(
            f'<rect x="{x_left:.2f}" y="{y_top:.2f}" '
            f'width="{x_right - x_left:.2f}" height="{height:.2f}" '
            f'fill="{_STROKE}" stroke="white" stroke-width="0.3"/>')
    parts.append("</svg>")
    _write(path, parts)


def render_heatmap(path, grid, title: str = "") -> None:
    """Grayscale cell map of a 2D count grid; row index runs along x."""
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    if not rows or not cols:
        raise ValueError("empty grid")
    top = max(max(float(v) for v in row) for row in grid)
    top = max(top, 1.0)
    side = min((W - 2 * PAD) / rows, (H - 2 * PAD) / cols)
    parts = _frame(title, (0.0, 1.0, 0.0, 1.0))
    for i in range(rows):
        for j in range(cols):
            v = float(grid[i][j])
            if v == 0:
                continue
            shade = int(round(245 * (1.0 - v / top)))
            x = PAD + i * side
            y = H - PAD - (j + 1) * side
            parts.append(
                f'<rect x="{x:.2f}" y="{y:.2f}" width="{side:.2f}" '
                f'height="{side:.2f}" '
                f'fill="rgb({shade},{shade},{shade})"/>')
    parts.append("</svg>")
    _write(path, parts)
