"""Deterministic SVG stem plots of the weight function.

One stem per realized lag over [-A, A], optional hole markers at height 0,
axes labeled "Spatial lags m" / "Weights w(m)", y-range pinned to [0, N].
Identical inputs produce byte-identical output, so plots are golden-testable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CoarrayAnalysis

_NICE_LADDER = (1, 2, 5)


@dataclass(frozen=True)
class RenderOptions:
    width: int = 640
    height: int = 400
    tick_step: int | str = "auto"
    highlight_holes: bool = True

    def __post_init__(self):
        if self.width < 100 or self.height < 100:
            raise ValueError("width and height must be at least 100 pixels")
        if self.tick_step != "auto":
            if not isinstance(self.tick_step, int) or self.tick_step < 1:
                raise ValueError("tick_step must be 'auto' or a positive integer")


def auto_tick_step(aperture: int) -> int:
    """Largest 1-2-5 ladder value not exceeding max(1, round(A / 8))."""
    raw = max(1, round(aperture / 8))
    best = 1
    scale = 1
    while True:
        for unit in _NICE_LADDER:
            step = unit * scale
            if step <= raw:
                best = step
            else:
                return best
        scale *= 10


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_stem_svg(analysis: CoarrayAnalysis, options: RenderOptions | None = None) -> str:
    """Render the weight function of an analysis as an SVG document string."""
    opts = options or RenderOptions()
    width, height = opts.width, opts.height
    left, right, top, bottom = 58, 16, 16, 46
    plot_w = width - left - right
    plot_h = height - top - bottom
    pad = 8.0

    aperture = analysis.aperture
    span = max(aperture, 1)
    y_max = max(analysis.source.count, 1)

    def x_px(lag: float) -> float:
        return left + pad + (lag + span) / (2 * span) * (plot_w - 2 * pad)

    def y_px(weight: float) -> float:
        return top + plot_h - weight / y_max * plot_h

    step = opts.tick_step if opts.tick_step != "auto" else auto_tick_step(aperture)
    x_ticks = [m for m in range(-aperture, aperture + 1) if m % step == 0]
    if not x_ticks:
        x_ticks = [0]
    y_step = auto_tick_step(y_max)  # same ladder works for the weight axis
    y_ticks = list(range(0, y_max + 1, y_step))
    if y_ticks[-1] != y_max:
        y_ticks.append(y_max)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<style>"
        "text{font-family:Helvetica,Arial,sans-serif;font-size:11px;fill:#333}"
        ".grid{stroke:#e4e4e4;stroke-width:1}"
        ".axis{stroke:#333;stroke-width:1}"
        ".stem{stroke:#2457e6;stroke-width:1.5}"
        ".dot{fill:#2457e6}"
        ".hole{stroke:#d62728;stroke-width:1.5;fill:none}"
        "</style>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]

    base_y = y_px(0)
    for tick in y_ticks:
        py = _fmt(y_px(tick))
        parts.append(
            f'<line class="grid" x1="{left}" y1="{py}" x2="{left + plot_w}" y2="{py}"/>'
        )
        parts.append(
            f'<text x="{left - 6}" y="{py}" text-anchor="end" dominant-baseline="middle">{tick}</text>'
        )
    for tick in x_ticks:
        px = _fmt(x_px(tick))
        parts.append(
            f'<line class="grid" x1="{px}" y1="{top}" x2="{px}" y2="{_fmt(base_y)}"/>'
        )
        parts.append(
            f'<text x="{px}" y="{top + plot_h + 14}" text-anchor="middle">{tick}</text>'
        )

    parts.append(
        f'<line class="axis" x1="{left}" y1="{_fmt(base_y)}" '
        f'x2="{left + plot_w}" y2="{_fmt(base_y)}"/>'
    )
    parts.append(
        f'<line class="axis" x1="{left}" y1="{top}" x2="{left}" y2="{_fmt(base_y)}"/>'
    )

    for lag, weight in analysis.weight_function.pairs():
        if weight == 0:
            continue
        px = _fmt(x_px(lag))
        parts.append(
            f'<line class="stem" data-lag="{lag}" x1="{px}" y1="{_fmt(base_y)}" '
            f'x2="{px}" y2="{_fmt(y_px(weight))}"/>'
        )
        parts.append(f'<circle class="dot" cx="{px}" cy="{_fmt(y_px(weight))}" r="2.5"/>')

    if opts.highlight_holes:
        for hole in analysis.holes:
            px = x_px(hole)
            py = base_y
            parts.append(
                f'<path class="hole" data-lag="{hole}" '
                f'd="M {_fmt(px - 3)} {_fmt(py - 3)} L {_fmt(px + 3)} {_fmt(py + 3)} '
                f'M {_fmt(px - 3)} {_fmt(py + 3)} L {_fmt(px + 3)} {_fmt(py - 3)}"/>'
            )

    parts.append(
        f'<text x="{left + plot_w / 2:.2f}" y="{height - 10}" '
        f'text-anchor="middle">Spatial lags m</text>'
    )
    parts.append(
        f'<text x="14" y="{top + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 14 {top + plot_h / 2:.2f})">Weights w(m)</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
