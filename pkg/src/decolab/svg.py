"""Standalone SVG line plots for sweep records - no external assets or deps.

Geometry is fixed and linear so tests can recompute any pixel coordinate:
a 640x480 canvas, the plot area inset by the margins below, x mapped
left-to-right and y bottom-to-top over the data ranges (a degenerate range is
padded by 0.5 on both sides).
"""

from __future__ import annotations

WIDTH = 640
HEIGHT = 480
MARGIN_LEFT = 70
MARGIN_RIGHT = 20
MARGIN_TOP = 20
MARGIN_BOTTOM = 50

PLOT_WIDTH = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_HEIGHT = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")

N_TICKS = 5


def data_range(values) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    return lo, hi


def map_x(value: float, lo: float, hi: float) -> float:
    return MARGIN_LEFT + (value - lo) / (hi - lo) * PLOT_WIDTH


def map_y(value: float, lo: float, hi: float) -> float:
    return MARGIN_TOP + (1.0 - (value - lo) / (hi - lo)) * PLOT_HEIGHT


def _x_field(records, series_key: str) -> str:
    if series_key == "theta":
        return "gamma"
    gammas = {r.gamma for r in records}
    thetas = {r.theta for r in records}
    return "theta" if len(gammas) == 1 and len(thetas) > 1 else "gamma"


def emit_svg_lineplot(records, path, series_key: str = "p") -> None:
    """Write one polyline per distinct series value, with axes and a legend."""
    records = list(records)
    if not records:
        raise ValueError("no records to plot")
    if series_key not in ("p", "theta"):
        raise ValueError(f"series key must be 'p' or 'theta', got {series_key!r}")
    quantities = {r.quantity for r in records}
    if len(quantities) != 1:
        raise ValueError(f"records mix quantities: {sorted(quantities)}")
    quantity = quantities.pop()

    x_field = _x_field(records, series_key)
    xs = [getattr(r, x_field) for r in records]
    ys = [r.value for r in records]
    x_lo, x_hi = data_range(xs)
    y_lo, y_hi = data_range(ys)

    series_values = sorted({getattr(r, series_key) for r in records})
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{PLOT_WIDTH}" '
        f'height="{PLOT_HEIGHT}" fill="none" stroke="black"/>',
    ]

    for i in range(N_TICKS):
        frac = i / (N_TICKS - 1)
        xv = x_lo + frac * (x_hi - x_lo)
        xp = map_x(xv, x_lo, x_hi)
        parts.append(
            f'<line x1="{xp:.2f}" y1="{HEIGHT - MARGIN_BOTTOM}" x2="{xp:.2f}" '
            f'y2="{HEIGHT - MARGIN_BOTTOM + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{xp:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 18}" font-size="11" '
            f'text-anchor="middle">{xv:.3g}</text>'
        )
        yv = y_lo + frac * (y_hi - y_lo)
        yp = map_y(yv, y_lo, y_hi)
        parts.append(
            f'<line x1="{MARGIN_LEFT - 5}" y1="{yp:.2f}" x2="{MARGIN_LEFT}" '
            f'y2="{yp:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{yp:.2f}" font-size="11" '
            f'text-anchor="end" dominant-baseline="middle">{yv:.3g}</text>'
        )

    parts.append(
        f'<text x="{MARGIN_LEFT + PLOT_WIDTH / 2:.2f}" y="{HEIGHT - 8}" font-size="13" '
        f'text-anchor="middle">{x_field}</text>'
    )
    parts.append(
        f'<text x="16" y="{MARGIN_TOP + PLOT_HEIGHT / 2:.2f}" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 {MARGIN_TOP + PLOT_HEIGHT / 2:.2f})">'
        f"{quantity}</text>"
    )

    for idx, sv in enumerate(series_values):
        color = PALETTE[idx % len(PALETTE)]
        line = sorted(
            (r for r in records if getattr(r, series_key) == sv),
            key=lambda r: getattr(r, x_field),
        )
        points = " ".join(
            f"{map_x(getattr(r, x_field), x_lo, x_hi):.2f},{map_y(r.value, y_lo, y_hi):.2f}"
            for r in line
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )
        ly = MARGIN_TOP + 14 + 16 * idx
        lx = WIDTH - MARGIN_RIGHT - 110
        parts.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{lx + 28}" y="{ly + 4}" font-size="12">{series_key}={sv:g}</text>'
        )

    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
