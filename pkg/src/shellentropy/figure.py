"""Discrete entropy versus ln Z overlaid with a continuous log-linear law.

Both outputs are plain text: a CSV of plotted points and a standalone SVG 1.1
chart written without any plotting library.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .measures import shannon_entropy
from .occupancy import OccupationRecord, occupation_to_distribution

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 80, 30, 40, 70

CSV_HEADER = ("series", "Z", "ln_Z", "S")


@dataclass(frozen=True)
class FigurePoint:
    series: str  # "discrete" or "continuous"
    Z: float
    S: float

    @property
    def ln_Z(self) -> float:
        return math.log(self.Z)


def figure_points(
    records: Iterable[OccupationRecord],
    intercept: float,
    slope: float,
    case: str = "A",
    line_samples: int = 50,
) -> list[FigurePoint]:
    """Discrete ``S_J`` of the ``case`` records plus samples of ``a + b ln Z``.

    The line spans the Z range of the discrete points.
    """
    pts = []
    for rec in sorted((r for r in records if r.case_tag == case), key=lambda r: r.proton_number):
        s = shannon_entropy(occupation_to_distribution(rec))
        pts.append(FigurePoint("discrete", float(rec.proton_number), s))
    if pts:
        lo, hi = math.log(pts[0].Z), math.log(pts[-1].Z)
    else:
        lo, hi = 0.0, math.log(40.0)
    if hi == lo:
        hi = lo + 1.0
    for i in range(line_samples):
        x = lo + (hi - lo) * i / (line_samples - 1)
        pts.append(FigurePoint("continuous", math.exp(x), intercept + slope * x))
    return pts


def render_csv(points: Sequence[FigurePoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p in points:
        writer.writerow([p.series, repr(p.Z), repr(p.ln_Z), repr(p.S)])
    return buf.getvalue()


def read_csv(text: str) -> list[FigurePoint]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return [FigurePoint(r["series"], float(r["Z"]), float(r["S"])) for r in rows]


def _nice_ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    span = hi - lo
    raw = span / max(count - 1, 1)
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=raw)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 10))
        t += step
    return ticks


def render_svg(points: Sequence[FigurePoint], title: str = "Information entropy versus ln Z") -> str:
    xs = [p.ln_Z for p in points] or [0.0, 1.0]
    ys = [p.S for p in points] or [0.0, 1.0]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    pad_x, pad_y = 0.05 * (x_hi - x_lo), 0.08 * (y_hi - y_lo)
    x_lo, x_hi, y_lo, y_hi = x_lo - pad_x, x_hi + pad_x, y_lo - pad_y, y_hi + pad_y

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x):
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y):
        return MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<!-- viewport {WIDTH}x{HEIGHT}; margins left={MARGIN_LEFT} right={MARGIN_RIGHT} "
        f"top={MARGIN_TOP} bottom={MARGIN_BOTTOM} -->",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="{MARGIN_TOP / 2 + 6:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{escape(title)}</text>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black"/>',
    ]
    for t in _nice_ticks(x_lo, x_hi):
        x = sx(t)
        out.append(
            f'<line x1="{x:.2f}" y1="{MARGIN_TOP + plot_h}" x2="{x:.2f}" '
            f'y2="{MARGIN_TOP + plot_h + 6}" stroke="black"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{MARGIN_TOP + plot_h + 22}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{t:g}</text>'
        )
    for t in _nice_ticks(y_lo, y_hi):
        y = sy(t)
        out.append(
            f'<line x1="{MARGIN_LEFT - 6}" y1="{y:.2f}" x2="{MARGIN_LEFT}" y2="{y:.2f}" stroke="black"/>'
        )
        out.append(
            f'<text x="{MARGIN_LEFT - 10}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12">{t:g}</text>'
        )
    out.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 20}" text-anchor="middle" '
        'font-family="sans-serif" font-size="14">ln Z</text>'
    )
    out.append(
        f'<text x="20" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14" transform="rotate(-90 20 '
        f'{MARGIN_TOP + plot_h / 2:.1f})">S (nats)</text>'
    )
    line = [p for p in points if p.series == "continuous"]
    if line:
        coords = " ".join(f"{sx(p.ln_Z):.2f},{sy(p.S):.2f}" for p in line)
        out.append(f'<polyline points="{coords}" fill="none" stroke="steelblue" stroke-width="2"/>')
    for p in points:
        if p.series == "discrete":
            out.append(
                f'<circle cx="{sx(p.ln_Z):.2f}" cy="{sy(p.S):.2f}" r="5" fill="firebrick"/>'
            )
    lx, ly = MARGIN_LEFT + 15, MARGIN_TOP + 20
    out += [
        f'<circle cx="{lx}" cy="{ly}" r="5" fill="firebrick"/>',
        f'<text x="{lx + 12}" y="{ly + 4}" font-family="sans-serif" font-size="12">discrete S_J</text>',
        f'<line x1="{lx - 8}" y1="{ly + 20}" x2="{lx + 8}" y2="{ly + 20}" stroke="steelblue" stroke-width="2"/>',
        f'<text x="{lx + 12}" y="{ly + 24}" font-family="sans-serif" font-size="12">continuous a + b ln Z</text>',
        "</svg>",
    ]
    return "\n".join(out) + "\n"
