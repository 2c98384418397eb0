"""Two-path diagrams of clans.

Every clan gives an upper and a lower lattice path in a p x q box: ``+`` moves
both paths up, ``-`` moves both right, a first occurrence moves the upper path
up and the lower path right, and a second occurrence does the opposite.  The
band between the paths records the orbit closure when the clan avoids
(1,2,1,2).

Coordinates are unrotated: x counts right steps and y counts up steps.  The
45 degree rotation only happens when drawing.

>>> d = clan_diagram(parse_clan("1++--1"))
>>> d.upper.steps, d.lower.steps
('UUURRR', 'RUURRU')
>>> singular_corners(d)
[Corner(point=(1, 2), boundary=<Boundary.BOTTOM: 'bottom'>, left_leg=2, right_leg=2, step=3)]
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .clans import Clan, avoids_1212, parse_clan
from .permutation import RIGHT, UP, LatticePath

__all__ = [
    "Boundary",
    "Corner",
    "PathDiagram",
    "clan_diagram",
    "components",
    "inner_corners",
    "singular_corners",
    "corner_capacity",
    "band_contains",
    "diagram_contains",
    "render_ascii",
    "render_svg",
]


class Boundary(Enum):
    TOP = "top"
    BOTTOM = "bottom"


@dataclass(frozen=True)
class Corner:
    """A turn of one path.  ``step`` is the number of steps taken to reach it."""

    point: tuple[int, int]
    boundary: Boundary
    left_leg: int
    right_leg: int
    step: int

    @property
    def legs(self) -> tuple[int, int]:
        return (self.left_leg, self.right_leg)


@dataclass(frozen=True)
class PathDiagram:
    upper: LatticePath
    lower: LatticePath

    def __post_init__(self):
        if self.upper.p != self.lower.p or len(self.upper) != len(self.lower):
            raise ValueError("the two paths must share the same box")
        if not self.upper.weakly_above(self.lower):
            raise ValueError("upper path must lie weakly northwest of the lower path")

    @property
    def p(self) -> int:
        return self.upper.p

    @property
    def q(self) -> int:
        return self.upper.q

    def fs_entries(self) -> tuple[str, ...]:
        table = {(UP, UP): "+", (RIGHT, RIGHT): "-", (UP, RIGHT): "F", (RIGHT, UP): "S"}
        return tuple(table[pair] for pair in zip(self.upper.steps, self.lower.steps))


def clan_diagram(c: Clan) -> PathDiagram:
    mates = c.mates
    upper, lower = [], []
    for pos, sym in enumerate(c.symbols):
        if sym == "+":
            upper.append(UP)
            lower.append(UP)
        elif sym == "-":
            upper.append(RIGHT)
            lower.append(RIGHT)
        elif mates[pos] > pos:
            upper.append(UP)
            lower.append(RIGHT)
        else:
            upper.append(RIGHT)
            lower.append(UP)
    return PathDiagram(LatticePath("".join(upper)), LatticePath("".join(lower)))


def components(d: PathDiagram) -> list[tuple[int, int]]:
    """Maximal 1-based step ranges over which the paths enclose area.

    >>> components(clan_diagram(parse_clan("1122")))
    [(1, 2), (3, 4)]
    """
    gaps = [a - b for a, b in zip(d.upper.heights, d.lower.heights)]
    result = []
    start = None
    for k in range(1, len(gaps)):
        if start is None and gaps[k - 1] == 0 and gaps[k] > 0:
            start = k
        elif start is not None and gaps[k] == 0:
            result.append((start, k))
            start = None
    return result


def _run_length(steps: str, end: int, direction: str, backwards: bool) -> int:
    length = 0
    indices = range(end, -1, -1) if backwards else range(end, len(steps))
    for i in indices:
        if steps[i] != direction:
            break
        length += 1
    return length


def inner_corners(path: LatticePath, boundary: Boundary) -> list[Corner]:
    """Up-then-right turns (bottom) or right-then-up turns (top) of ``path``."""
    first, second = (UP, RIGHT) if boundary is Boundary.BOTTOM else (RIGHT, UP)
    steps = path.steps
    corners = []
    for k in range(1, len(steps)):
        if steps[k - 1] == first and steps[k] == second:
            corners.append(
                Corner(
                    point=path.points[k],
                    boundary=boundary,
                    left_leg=_run_length(steps, k - 1, first, backwards=True),
                    right_leg=_run_length(steps, k, second, backwards=False),
                    step=k,
                )
            )
    return corners


def singular_corners(d: PathDiagram, against: Optional[PathDiagram] = None) -> list[Corner]:
    """Corners of ``d`` that witness singularity.

    Without ``against``: turns of the lower path that miss the upper path and
    turns of the upper path that miss the lower path.  With ``against`` (the
    diagram of a smaller orbit): turns of each path of ``d`` that miss the
    corresponding path of ``against``.  Bottom corners come first.
    """
    bottom_cmp = d.upper if against is None else against.lower
    top_cmp = d.lower if against is None else against.upper
    return [
        c for c in inner_corners(d.lower, Boundary.BOTTOM) if c.point not in bottom_cmp.point_set
    ] + [c for c in inner_corners(d.upper, Boundary.TOP) if c.point not in top_cmp.point_set]


def corner_capacity(corner: Corner, other: LatticePath) -> int:
    """Diagonal distance from a corner to ``other``.

    A bottom corner (a, b) moves to (a-c, b+c); a top corner to (a+c, b-c).
    """
    a, b = corner.point
    sign = -1 if corner.boundary is Boundary.BOTTOM else 1
    for c in range(min(other.p, other.q) + 1):
        if (a + sign * c, b - sign * c) in other.point_set:
            return c
    raise ValueError(f"corner {corner.point} never reaches the comparison path")


def band_contains(outer: PathDiagram, inner: PathDiagram) -> bool:
    """Both paths of ``inner`` lie weakly between the two paths of ``outer``."""
    return all(
        outer.upper.weakly_above(path) and path.weakly_above(outer.lower)
        for path in (inner.upper, inner.lower)
    )


def diagram_contains(gamma: Clan, tau: Clan) -> bool:
    """Whether the orbit of ``tau`` lies in the closure of the orbit of ``gamma``.

    >>> diagram_contains(parse_clan("1221"), parse_clan("+11-"))
    True
    """
    if not avoids_1212(gamma):
        raise ValueError(f"{gamma} contains (1,2,1,2); diagram containment does not apply")
    if (gamma.p, gamma.q) != (tau.p, tau.q):
        return False
    return band_contains(clan_diagram(gamma), clan_diagram(tau))


def _canvas(d: PathDiagram, overlay: Optional[PathDiagram]):
    paths = [d.upper, d.lower] + ([overlay.upper, overlay.lower] if overlay else [])
    top = max(max(path.heights) for path in paths)
    bottom = min(min(path.heights) for path in paths)
    return paths, top, bottom


def render_ascii(d: PathDiagram, overlay: Optional[PathDiagram] = None) -> str:
    """Draw the diagram rotated 45 degrees clockwise.

    Up steps become ``/`` and right steps ``\\``.  Points of ``d`` are ``.``,
    points that only the overlay visits are ``+`` and singular corners are
    ``o``; with an overlay the singular corners are taken relative to it.

    >>> print(render_ascii(clan_diagram(parse_clan("11"))))
      .
     / \\
    .   .
     \\ /
      .
    """
    paths, top, bottom = _canvas(d, overlay)
    width = 2 * len(d.upper) + 1
    rows = 2 * (top - bottom) + 1
    grid = [[" "] * width for _ in range(rows)]

    def cell(k: int, h: int) -> tuple[int, int]:
        return 2 * (top - h), 2 * k

    def draw(path: LatticePath, point_char: str):
        hs = path.heights
        for k, step in enumerate(path.steps):
            r, c = cell(k, hs[k])
            seg_row = r - 1 if step == UP else r + 1
            grid[seg_row][c + 1] = "/" if step == UP else "\\"
        for k, h in enumerate(hs):
            r, c = cell(k, h)
            if grid[r][c] == " ":
                grid[r][c] = point_char

    draw(d.upper, ".")
    draw(d.lower, ".")
    if overlay is not None:
        draw(overlay.upper, "+")
        draw(overlay.lower, "+")
    for corner in singular_corners(d, overlay):
        path = d.lower if corner.boundary is Boundary.BOTTOM else d.upper
        r, c = cell(corner.step, path.heights[corner.step])
        grid[r][c] = "o"
    lines = ["".join(row).rstrip() for row in grid]
    return "\n".join(lines)


def render_svg(d: PathDiagram, overlay: Optional[PathDiagram] = None, unit: int = 20) -> str:
    """Same geometry as :func:`render_ascii`, as a standalone SVG document."""
    paths, top, bottom = _canvas(d, overlay)
    margin = unit
    width = unit * len(d.upper) + 2 * margin
    height = unit * (top - bottom) + 2 * margin

    def xy(k: int, h: int) -> tuple[int, int]:
        return margin + unit * k, margin + unit * (top - h)

    def polyline(path: LatticePath, style: str) -> str:
        pts = " ".join("%d,%d" % xy(k, h) for k, h in enumerate(path.heights))
        return f'<polyline points="{pts}" fill="none" {style}/>'

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    if overlay is not None:
        for path in (overlay.upper, overlay.lower):
            parts.append(polyline(path, 'stroke="gray" stroke-dasharray="4,3"'))
    for path in (d.upper, d.lower):
        parts.append(polyline(path, 'stroke="black" stroke-width="2"'))
    for corner in singular_corners(d, overlay):
        path = d.lower if corner.boundary is Boundary.BOTTOM else d.upper
        cx, cy = xy(corner.step, path.heights[corner.step])
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="{unit // 4}" fill="white" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
