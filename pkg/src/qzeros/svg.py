"""Static SVG rendering for histogram and CDF plots; no plotting library."""

from __future__ import annotations

from typing import Sequence

WIDTH, HEIGHT = 640, 400
MARGIN = 50


def _fmt(v: float) -> str:
    return f"{v:.3f}"


class _Frame:
    def __init__(self, xmax: float, ymax: float):
        self.xmax = xmax
        self.ymax = ymax

    def x(self, v: float) -> float:
        return MARGIN + (WIDTH - 2 * MARGIN) * v / self.xmax

    def y(self, v: float) -> float:
        return HEIGHT - MARGIN - (HEIGHT - 2 * MARGIN) * v / self.ymax


def _axes(frame: _Frame, title: str, xticks: Sequence[float], yticks: Sequence[float]) -> list[str]:
    out = [
        f'<text x="{WIDTH / 2}" y="{MARGIN / 2}" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
    ]
    for t in xticks:
        px = _fmt(frame.x(t))
        out.append(f'<text x="{px}" y="{HEIGHT - MARGIN + 16}" text-anchor="middle" font-size="10">{t:g}</text>')
    for t in yticks:
        py = _fmt(frame.y(t))
        out.append(f'<text x="{MARGIN - 6}" y="{py}" text-anchor="end" font-size="10">{t:g}</text>')
    return out


def _wrap(body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _polyline(frame: _Frame, xs, ys, color: str) -> str:
    pts = " ".join(f"{_fmt(frame.x(a))},{_fmt(frame.y(min(b, frame.ymax)))}" for a, b in zip(xs, ys))
    return f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'


def histogram_svg(edges, heights, curve_x, curve_y, title: str) -> str:
    ymax = max(max(heights), 0.3)
    frame = _Frame(float(edges[-1]), ymax * 1.05)
    body = _axes(frame, title, [0, 2, 4, 6, 8, 10], [0, round(ymax / 2, 2), round(ymax, 2)])
    for lo, hi, h in zip(edges[:-1], edges[1:], heights):
        x0, x1 = frame.x(lo), frame.x(hi)
        y = frame.y(h)
        body.append(
            f'<rect x="{_fmt(x0)}" y="{_fmt(y)}" width="{_fmt(x1 - x0)}" '
            f'height="{_fmt(HEIGHT - MARGIN - y)}" fill="#9ecae1" stroke="#3182bd" stroke-width="0.3"/>'
        )
    body.append(_polyline(frame, curve_x, curve_y, "#d62728"))
    return _wrap(body)


def cdf_svg(xs, fs, title: str) -> str:
    frame = _Frame(float(xs[-1]), 1.0)
    body = _axes(frame, title, [0, 2, 4, 6, 8, 10], [0, 0.5, 1])
    body.append(_polyline(frame, xs, fs, "#3182bd"))
    return _wrap(body)
