"""Packings of inverted unit triangles inside an equilateral triangle.

The container is the equilateral triangle Delta with vertices (0,0), (L,0),
(L/2, L*sqrt(3)/2).  Each packed triangle is an upside-down unit equilateral
triangle, identified by its anchor, the midpoint of its horizontal top side:
T(x,y) has vertices (x-1/2, y), (x+1/2, y), (x, y-sqrt(3)/2).

Two such triangles have disjoint interiors exactly when the difference of
their anchors has hexagon-gauge at least 1, where the gauge's unit ball is
the regular side-1 hexagon with vertices (+-1, 0), (+-1/2, +-sqrt(3)/2) --
the set of differences {p - q : p, q in T}.  The module keeps both routes to
the disjointness verdict independent: a separating-axis test over the
triangles' edge normals, and the gauge computed from the hexagon's facet
functionals.  Around every packed triangle's anchor a side-1/2 hexagon
(area 3*sqrt(3)/8) fits inside Delta whenever the triangle does, and these
hexagons are pairwise disjoint; comparing areas gives the packing bound
n <= (2/3) L^2.  tessellate builds near-optimal packings from the lattice
that tiles the plane by side-1/2 hexagons, approaching that density from
below as L grows.

All coordinates live in Q(sqrt(3)) so every containment and overlap verdict,
including boundary contact, is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .kernel import Sqrt3

Point = tuple[Sqrt3, Sqrt3]

HALF = Fraction(1, 2)
HALF_SQRT3 = Sqrt3(0, HALF)           # sqrt(3)/2
INV_SQRT3 = Sqrt3(0, Fraction(1, 3))  # 1/sqrt(3) = sqrt(3)/3


def as_point(xy) -> Point:
    x, y = xy
    return (Sqrt3.of(x), Sqrt3.of(y))


def triangle_vertices(anchor: Point) -> tuple[Point, Point, Point]:
    """Vertices of the inverted unit triangle with the given anchor."""
    x, y = anchor
    return ((x - HALF, y), (x + HALF, y), (x, y - HALF_SQRT3))


# -- containment in Delta ----------------------------------------------


def point_inside_delta(p: Point, side_len: Fraction, margin: Fraction = Fraction(0)) -> bool:
    """Closed containment in Delta, optionally inset by a rational margin.

    The three facet distances of Delta are y, (sqrt(3)x - y)/2 and
    (sqrt(3)(L-x) - y)/2, so insetting by m keeps the test in Q(sqrt(3)).
    """
    x, y = p
    two_m = 2 * margin
    if y < margin:
        return False
    if Sqrt3(0, 1) * x - y < two_m:
        return False
    if Sqrt3(0, 1) * (side_len - x) - y < two_m:
        return False
    return True


def triangle_inside_delta(anchor: Point, side_len: Fraction, margin: Fraction = Fraction(0)) -> bool:
    """A triangle is inside Delta iff all three of its vertices are."""
    return all(point_inside_delta(v, side_len, margin) for v in triangle_vertices(anchor))


# -- overlap predicates (two independent routes) ------------------------


def _dot(p: Point, q: Point) -> Sqrt3:
    return p[0] * q[0] + p[1] * q[1]


def _edge_normals(vertices: tuple[Point, ...]) -> list[Point]:
    normals = []
    for i in range(len(vertices)):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % len(vertices)]
        normals.append((ay - by, bx - ax))
    return normals


def _project(vertices: tuple[Point, ...], axis: Point) -> tuple[Sqrt3, Sqrt3]:
    values = [_dot(v, axis) for v in vertices]
    return min(values), max(values)


def triangles_overlap_exact(a1, a2) -> bool:
    """True iff the open interiors of T(a1) and T(a2) intersect.

    Separating-axis test over the triangles' edge normals (the two triangles
    are translates, so three axes cover both).  Shared boundary alone does
    not count as overlap: projections must overlap strictly on every axis.
    """
    t1 = triangle_vertices(as_point(a1))
    t2 = triangle_vertices(as_point(a2))
    for axis in _edge_normals(t1):
        lo1, hi1 = _project(t1, axis)
        lo2, hi2 = _project(t2, axis)
        if not (lo1 < hi2 and lo2 < hi1):
            return False
    return True


def hex_gauge(p) -> Sqrt3:
    """Gauge whose unit ball is the side-1 hexagon, evaluated exactly.

    The hexagon's three facet pairs give the functionals |x + y/sqrt(3)|,
    |x - y/sqrt(3)| and |2y/sqrt(3)|; the gauge is their maximum.  It is
    symmetric and positively homogeneous.
    """
    x, y = as_point(p)
    t = y * INV_SQRT3
    return max(abs(x + t), abs(x - t), abs(t + t))


def hex_gauge_overlap(a1, a2) -> bool:
    """True iff the anchor difference has gauge < 1 (boundary contact allowed)."""
    x1, y1 = as_point(a1)
    x2, y2 = as_point(a2)
    return hex_gauge((x2 - x1, y2 - y1)) < 1


# -- hexagons ------------------------------------------------------------


@dataclass(frozen=True)
class HexGauge:
    """Regular hexagon with vertices at angles k*60 degrees from the center.

    radius is the circumradius, equal to the side length.
    """

    center: Point
    radius: Fraction

    def vertices(self) -> tuple[Point, ...]:
        cx, cy = self.center
        r = self.radius
        rh = r * HALF
        rh3 = Sqrt3(0, rh)  # r*sqrt(3)/2
        return (
            (cx + r, cy),
            (cx + rh, cy + rh3),
            (cx - rh, cy + rh3),
            (cx - r, cy),
            (cx - rh, cy - rh3),
            (cx + rh, cy - rh3),
        )


def hexagon_inside_delta(instance: "PackingInstance", anchor) -> bool:
    """Whether the side-1/2 hexagon centered at the anchor lies inside Delta.

    Requires the anchor's triangle to be inside Delta (that is the lemma's
    hypothesis); raises ValueError otherwise.
    """
    a = as_point(anchor)
    if not triangle_inside_delta(a, instance.side_len):
        raise ValueError("anchor's triangle is not inside Delta")
    hexagon = HexGauge(center=a, radius=Fraction(1, 2))
    return all(point_inside_delta(v, instance.side_len) for v in hexagon.vertices())


# -- packings ------------------------------------------------------------


@dataclass
class PackingInstance:
    """Side length L of Delta plus the anchors of the packed triangles."""

    side_len: Fraction
    anchors: list[Point] = field(default_factory=list)

    def __post_init__(self):
        self.side_len = Fraction(self.side_len)
        if self.side_len <= 0:
            raise ValueError("side length must be positive")
        self.anchors = [as_point(a) for a in self.anchors]

    @property
    def count(self) -> int:
        return len(self.anchors)


@dataclass(frozen=True)
class PackingReport:
    count: int
    side_len: Fraction
    all_inside: bool
    first_outside: Optional[int]          # anchor index
    disjoint: bool
    first_overlap: Optional[tuple[int, int]]
    bound_ok: bool
    bound_is_warning: bool                # True when L < 2: bound reported, not enforced
    density: float                        # n / L^2

    @property
    def valid(self) -> bool:
        ok = self.all_inside and self.disjoint
        if not self.bound_is_warning:
            ok = ok and self.bound_ok
        return ok


def _grid_key(p: Point) -> tuple[int, int]:
    return (p[0].floor(), p[1].floor())


def _overlapping_pairs(anchors: list[Point], use_grid: bool) -> Iterable[tuple[int, int]]:
    """Candidate index pairs (i, j), i < j, checked with the exact test.

    With the grid, only anchors in adjacent unit cells are compared; any
    overlapping pair has |dx| < 1 and |dy| < sqrt(3)/2, so adjacency (via
    exact floors) never misses one.  Verdicts are identical either way.
    """
    if use_grid:
        cells: dict[tuple[int, int], list[int]] = {}
        for j, a in enumerate(anchors):
            key = _grid_key(a)
            near = []
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    near.extend(cells.get((key[0] + dx, key[1] + dy), ()))
            for i in sorted(near):
                if triangles_overlap_exact(anchors[i], anchors[j]):
                    yield (i, j)
            cells.setdefault(key, []).append(j)
    else:
        for j in range(len(anchors)):
            for i in range(j):
                if triangles_overlap_exact(anchors[i], anchors[j]):
                    yield (i, j)


def validate_packing(instance: PackingInstance, use_grid: bool = True) -> PackingReport:
    """Full packing check: containment, pairwise disjointness, density bound.

    The bound n <= (2/3) L^2 is enforced for L >= 2 and only reported as a
    warning below that (no unit triangle fits in Delta at all for L < 2, so
    a packing that passes containment there is necessarily empty).
    """
    n = instance.count
    side = instance.side_len

    first_outside = None
    for idx, a in enumerate(instance.anchors):
        if not triangle_inside_delta(a, side):
            first_outside = idx
            break

    first_overlap = next(iter(_overlapping_pairs(instance.anchors, use_grid)), None)

    bound_ok = Fraction(n) <= Fraction(2, 3) * side * side
    return PackingReport(
        count=n,
        side_len=side,
        all_inside=first_outside is None,
        first_outside=first_outside,
        disjoint=first_overlap is None,
        first_overlap=first_overlap,
        bound_ok=bound_ok,
        bound_is_warning=side < 2,
        density=n / float(side) ** 2 if side else 0.0,
    )


# -- tessellation ---------------------------------------------------------


def tessellate(side_len, margin=Fraction(0)) -> PackingInstance:
    """Near-optimal packing from the lattice that tiles by side-1/2 hexagons.

    Anchors sit on the lattice generated by (3/4, sqrt(3)/4) and
    (0, sqrt(3)/2), based at (1, sqrt(3)/2): one triangle per tiling hexagon,
    kept iff all three triangle vertices lie in Delta (inset by margin).
    Every pair of distinct lattice points differs by gauge >= 1, so the
    output always validates; the count is (2/3 - eps(L)) L^2 with eps(L)
    a boundary-loss term that vanishes as L grows.
    """
    side = Fraction(side_len)
    margin = Fraction(margin)
    if side < 4:
        raise ValueError("tessellate requires L >= 4")
    if margin < 0:
        raise ValueError("margin must be nonnegative")

    anchors: list[Point] = []
    # x = 1 + 3i/4, y = sqrt(3)(2 + m)/4 with m = i (mod 2); generous index
    # ranges, exact clipping.
    i_hi = int(4 * (side - 2) / 3) + 2
    m_hi = int(2 * side) - 3
    for m in range(0, m_hi + 1):
        y = Sqrt3(0, Fraction(2 + m, 4))
        for i in range(-1, i_hi + 1):
            if (i - m) % 2:
                continue
            anchor = (Sqrt3(1 + Fraction(3 * i, 4)), y)
            if triangle_inside_delta(anchor, side, margin):
                anchors.append(anchor)
    return PackingInstance(side_len=side, anchors=anchors)


# -- file format ----------------------------------------------------------
#
# First line: L as an exact rational.  Then one anchor per line:
#     x  y  [y3]
# meaning the anchor (x, y + y3*sqrt(3)) with all fields exact rationals;
# the third field defaults to 0.  Anchor x-coordinates are rational in
# every packing this module produces.


def dump_packing(instance: PackingInstance) -> str:
    lines = [str(instance.side_len)]
    for x, y in instance.anchors:
        if x.b != 0:
            raise ValueError("packing file format requires rational x coordinates")
        lines.append(f"{x.a} {y.a} {y.b}" if y.b else f"{x.a} {y.a}")
    return "\n".join(lines) + "\n"


def parse_packing(text: str) -> PackingInstance:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty packing file")
    side = Fraction(lines[0])
    anchors: list[Point] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'x y [y3]', got {line!r}")
        x = Fraction(parts[0])
        y = Sqrt3(Fraction(parts[1]), Fraction(parts[2]) if len(parts) == 3 else 0)
        anchors.append((Sqrt3(x), y))
    return PackingInstance(side_len=side, anchors=anchors)
