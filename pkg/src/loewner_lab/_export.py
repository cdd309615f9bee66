"""CSV and SVG writers.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.
"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"

import io
import csv
import dataclasses
from pathlib import Path
from typing import (
    Any,
    TextIO,
    Union,
)
from collections.abc import (
    Iterable,
    Sequence,
)

import numpy as np

from ._internals import fmt_float

Target = Union[str, Path, TextIO]


def _cell(value: Any) -> str:
    if isinstance(value, (float, np.floating)):
        return fmt_float(value)
    return str(value)


def write_csv(
    target: Target,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
) -> None:
    """Write rows to a CSV file or stream, floats with 17 digits.

    Args:
        target: A path or an open text stream.
        header: Column names.
        rows: Row sequences; float cells are formatted round-trip exact.

    """
    if isinstance(target, (str, Path)):
        with open(target, "w", newline="", encoding="utf-8") as fp:
            write_csv(fp, header, rows)
        return

    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Return the CSV document as a string."""
    buffer = io.StringIO()
    write_csv(buffer, header, rows)
    return buffer.getvalue()


def write_text(target: Target, text: str) -> None:
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)


@dataclasses.dataclass(eq=False, frozen=True)
class SvgCanvas:
    """Maps world coordinates (y up) onto an SVG viewport (y down).

    Args:
        width: Viewport width in pixels.
        height: Viewport height in pixels.
        margin: Blank border kept on every side.

    """
    width: float = 800.0
    height: float = 600.0
    margin: float = 20.0

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("viewport dimensions must be positive")
        if not 0 <= 2 * self.margin < min(self.width, self.height):
            raise ValueError("margin does not fit inside the viewport")

    def _project(
        self, points: np.ndarray, pad: float = 0.0
    ) -> tuple[np.ndarray, float]:
        """Return projected points and the world-to-pixel scale."""
        points = np.asarray(points, dtype=complex).ravel()
        if points.size == 0:
            return points, 1.0
        x, y = points.real, points.imag
        x0, x1 = x.min() - pad, x.max() + pad
        y0, y1 = y.min() - pad, y.max() + pad
        span_x = max(x1 - x0, 1e-12)
        span_y = max(y1 - y0, 1e-12)
        scale = min(
            (self.width - 2 * self.margin) / span_x,
            (self.height - 2 * self.margin) / span_y,
        )
        px = self.margin + (x - x0) * scale
        py = self.height - self.margin - (y - y0) * scale
        return px + 1j * py, scale

    def _document(self, body: Iterable[str]) -> str:
        head = (
            '<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{self.width:g}" height="{self.height:g}" '
            f'viewBox="0 0 {self.width:g} {self.height:g}">'
        )
        return "\n".join([head, *body, "</svg>"]) + "\n"

    def polyline(
        self,
        points: Sequence[complex],
        stroke: str = "black",
        stroke_width: float = 1.0,
    ) -> str:
        """Render a single open polyline."""
        projected, _ = self._project(np.asarray(points))
        coords = " ".join(f"{p.real:.3f},{p.imag:.3f}" for p in projected)
        return self._document([
            f'<polyline fill="none" stroke="{stroke}" '
            f'stroke-width="{stroke_width:g}" points="{coords}"/>'
        ])

    def scatter(
        self,
        points: Sequence[complex],
        radius: float = 1.5,
        fill: str = "black",
    ) -> str:
        """Render a point cloud."""
        projected, _ = self._project(np.asarray(points), pad=0.5)
        return self._document(
            f'<circle cx="{p.real:.3f}" cy="{p.imag:.3f}" '
            f'r="{radius:g}" fill="{fill}"/>'
            for p in projected
        )

    def hexagons(
        self,
        centers: Sequence[complex],
        fills: Sequence[str],
        path: Union[Sequence[complex], None] = None,
    ) -> str:
        """Render pointy-top unit hexagons, optionally with a path on top.

        Args:
            centers: Hexagon centres in world units (circumradius 1).
            fills: One fill colour per hexagon.
            path: Optional polyline drawn over the tiling.

        """
        centers = np.asarray(centers, dtype=complex)
        extra = np.asarray(path if path is not None else [], dtype=complex)
        projected, scale = self._project(
            np.concatenate([centers, extra]), pad=1.0
        )
        corners = np.exp(1j * (np.pi / 6 + np.pi / 3 * np.arange(6)))
        corners = corners.real - 1j * corners.imag
        body = []
        for c, fill in zip(projected[:centers.size], fills):
            pts = " ".join(
                f"{q.real:.3f},{q.imag:.3f}" for q in c + scale * corners
            )
            body.append(
                f'<polygon points="{pts}" fill="{fill}" stroke="#888" '
                'stroke-width="0.5"/>'
            )
        if extra.size:
            coords = " ".join(
                f"{p.real:.3f},{p.imag:.3f}" for p in projected[centers.size:]
            )
            body.append(
                f'<polyline fill="none" stroke="red" stroke-width="1.5" '
                f'points="{coords}"/>'
            )
        return self._document(body)
