"""Pictures of triangle colorings: text, SVG, and PPM.

The quadrant is drawn the usual way up, origin in the bottom-left corner,
so row y of the staircase appears max_y - y lines from the top.  All three
renderers iterate tiles in diagonal order and emit no timestamps or
float formatting, so equal colorings produce equal bytes.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass

from .systems import InputError, TriangleColoring

# an homage to the classic crayon box; colors beyond these are generated
_BASE_COLORS: tuple = (
    ("red", (255, 0, 0)),
    ("blue", (0, 0, 255)),
    ("forest green", (34, 139, 34)),
    ("purple", (128, 0, 128)),
    ("yellow", (255, 255, 0)),
    ("pink", (255, 192, 203)),
    ("aqua", (0, 255, 255)),
    ("grey", (128, 128, 128)),
    ("teal", (0, 128, 128)),
    ("lime green", (50, 205, 50)),
    ("brown", (139, 69, 19)),
    ("candy green", (99, 214, 104)),
    ("orange", (255, 165, 0)),
)

_BACKGROUND = (255, 255, 255)

FORMATS = ("text", "svg", "ppm")


@dataclass(frozen=True)
class Palette:
    """Color number -> (name, rgb).  Lookups past the end are errors."""

    entries: tuple

    def __len__(self) -> int:
        return len(self.entries)

    def name(self, color: int) -> str:
        self._check(color)
        return self.entries[color][0]

    def rgb(self, color: int) -> tuple:
        self._check(color)
        return self.entries[color][1]

    def _check(self, color: int) -> None:
        if not 0 <= color < len(self.entries):
            raise InputError(f"palette has {len(self.entries)} colors, cannot draw color {color}")


def default_palette(n: int) -> Palette:
    """The named base colors, extended with evenly spaced hues as needed."""
    if n < 1:
        raise InputError(f"palette size must be >= 1, got {n}")
    entries = list(_BASE_COLORS[:n])
    for i in range(len(_BASE_COLORS), n):
        hue = (i - len(_BASE_COLORS)) / max(1, n - len(_BASE_COLORS))
        r, g, b = colorsys.hsv_to_rgb(hue, 0.55, 0.82)
        entries.append((f"hue{i}", (round(r * 255), round(g * 255), round(b * 255))))
    return Palette(entries=tuple(entries))


def render_triangle(
    tri: TriangleColoring,
    fmt: str = "text",
    palette: Palette = None,
    scale: int = 1,
) -> bytes:
    """Render a staircase triangle; fmt is one of text, svg, ppm."""
    if fmt not in FORMATS:
        raise InputError(f"format must be one of {'/'.join(FORMATS)}, got {fmt!r}")
    if scale < 1:
        raise InputError(f"scale must be >= 1, got {scale}")
    if palette is None and fmt != "text":
        palette = default_palette(max(tri.cells.values()) + 1)
    if fmt == "text":
        return _render_text(tri)
    if fmt == "svg":
        return _render_svg(tri, palette, scale)
    return _render_ppm(tri, palette, scale)


def _render_text(tri: TriangleColoring) -> bytes:
    lines = [" ".join(str(c) for c in row) for row in reversed(tri.rows())]
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_text_triangle(text: str) -> TriangleColoring:
    """Inverse of the text renderer: top line is the highest row."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError("empty triangle text")
    rows = []
    for line in reversed(lines):
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise InputError(f"triangle text line is not integers: {line!r}") from None
    depth = sum(len(row) for row in rows) - 1
    return TriangleColoring.from_rows(depth, rows)


def _render_svg(tri: TriangleColoring, palette: Palette, scale: int) -> bytes:
    side = 10 * scale
    width = (tri.max_x() + 1) * side
    height = (tri.max_y() + 1) * side
    max_y = tri.max_y()
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for (x, y), color in sorted(tri.cells.items(), key=lambda item: (item[0][1], item[0][0])):
        r, g, b = palette.rgb(color)
        parts.append(
            f'<rect x="{x * side}" y="{(max_y - y) * side}" width="{side}" height="{side}" '
            f'fill="#{r:02x}{g:02x}{b:02x}"><title>{palette.name(color)}</title></rect>'
        )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("ascii")


def _render_ppm(tri: TriangleColoring, palette: Palette, scale: int) -> bytes:
    width = (tri.max_x() + 1) * scale
    height = (tri.max_y() + 1) * scale
    max_y = tri.max_y()
    lines = ["P3", f"{width} {height}", "255"]
    for py in range(height):
        y = max_y - py // scale
        row = []
        for px in range(width):
            x = px // scale
            color = tri.cells.get((x, y))
            rgb = _BACKGROUND if color is None else palette.rgb(color)
            row.append("%d %d %d" % rgb)
        lines.append("  ".join(row))
    return ("\n".join(lines) + "\n").encode("ascii")
