"""Exact planar realization of coded points and the brute-force overlap
oracle.

A coding evaluates to the point sum(d_i / beta^i); the convex hull is the
right triangle with legs 1/(beta-1), and the three first-generation images
are its copies scaled by 1/beta at the three digits.  Overlap regions are
the pairwise intersections of those closed triangles, so membership of a
tail in an overlap is decided by closed inequalities: exact rational
arithmetic when the base is rational, adaptive interval refinement
otherwise.  This is the geometric side of the dual-route admissibility
check: a coding's shifted tails all avoid the overlap exactly when the
lexicographic conditions hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import bases
from .bases import Interval, PrecisionExhausted
from .words import EventuallyPeriodic

REGION_TAGS = ("fA", "fB", "fC", "O_A", "O_B", "O_C", "outsideHull")

DIGIT_VEC = {"A": (Fraction(0), Fraction(0)),
             "B": (Fraction(1), Fraction(0)),
             "C": (Fraction(0), Fraction(1))}

Coordinate = Union[Fraction, Interval]


class Undecidable(ArithmeticError):
    """A closed-region membership could not be signed at the precision cap."""


@dataclass(frozen=True)
class PlanarPoint:
    x: Coordinate
    y: Coordinate

    @property
    def exact(self) -> bool:
        return isinstance(self.x, Fraction) and isinstance(self.y, Fraction)


def _coding_digits(coding: EventuallyPeriodic):
    if not coding.alphabet() <= set("ABC"):
        raise ValueError("coding must be over ABC")


def point_of(coding: EventuallyPeriodic, beta: bases.RealBase,
             width=Fraction(1, 2**128)) -> PlanarPoint:
    """Evaluate the coding: exact rational point for a rational base, a pair
    of enclosing intervals otherwise (preperiod plus closed-form periodic
    part, all outward-safe interval arithmetic)."""
    _coding_digits(coding)
    if beta.kind == "rational":
        return _point_exact(coding, beta.fraction)
    return _point_interval(coding, beta.enclosure(width))


def _point_exact(coding: EventuallyPeriodic, b: Fraction) -> PlanarPoint:
    x = y = Fraction(0)
    inv = 1 / b
    scale = Fraction(1)
    for ch in coding.pre:
        scale *= inv
        dx, dy = DIGIT_VEC[ch]
        x += dx * scale
        y += dy * scale
    px = py = Fraction(0)
    pscale = Fraction(1)
    for ch in coding.per:
        pscale *= inv
        dx, dy = DIGIT_VEC[ch]
        px += dx * pscale
        py += dy * pscale
    q = len(coding.per)
    geom = 1 / (1 - inv**q)
    x += scale * px * geom
    y += scale * py * geom
    return PlanarPoint(x, y)


def _point_interval(coding: EventuallyPeriodic, enc: Interval) -> PlanarPoint:
    b = enc
    inv = Interval.point(1) / b
    x = y = Interval.point(0)
    scale = Interval.point(1)
    for ch in coding.pre:
        scale = scale * inv
        dx, dy = DIGIT_VEC[ch]
        x = x + scale * dx
        y = y + scale * dy
    px = py = Interval.point(0)
    pscale = Interval.point(1)
    for ch in coding.per:
        pscale = pscale * inv
        dx, dy = DIGIT_VEC[ch]
        px = px + pscale * dx
        py = py + pscale * dy
    q = len(coding.per)
    geom = Interval.point(1) / (Interval.point(1) - inv.pow_int(q))
    x = x + scale * px * geom
    y = y + scale * py * geom
    return PlanarPoint(x, y)


def _ge(a, b) -> Optional[bool]:
    """Tri-valued a >= b for Fractions/Intervals; None when undecided."""
    diff = _as_iv(a) - _as_iv(b)
    if diff.lo >= 0:
        return True
    if diff.hi < 0:
        return False
    return None


def _le(a, b) -> Optional[bool]:
    diff = _as_iv(b) - _as_iv(a)
    if diff.lo >= 0:
        return True
    if diff.hi < 0:
        return False
    return None


def _as_iv(v) -> Interval:
    return v if isinstance(v, Interval) else Interval.point(v)


def _and3(*vals) -> Optional[bool]:
    if any(v is False for v in vals):
        return False
    if all(v is True for v in vals):
        return True
    return None


def _memberships(p: PlanarPoint, b) -> dict:
    """Tri-valued membership in the three closed first-generation triangles.
    b is a Fraction or an Interval for the base."""
    bi = _as_iv(b)
    inv_b = Interval.point(1) / bi
    small = inv_b * (Interval.point(1) / (bi - Interval.point(1)))  # 1/(b(b-1))
    zero = Fraction(0)
    in_a = _and3(_ge(p.x, zero), _ge(p.y, zero), _le(_as_iv(p.x) + _as_iv(p.y), small))
    in_b = _and3(_ge(p.x, inv_b), _ge(p.y, zero),
                 _le(_as_iv(p.x) + _as_iv(p.y), small + inv_b))
    in_c = _and3(_ge(p.x, zero), _ge(p.y, inv_b),
                 _le(_as_iv(p.x) + _as_iv(p.y), small + inv_b))
    return {"fA": in_a, "fB": in_b, "fC": in_c}


def region_of(p: PlanarPoint, beta: bases.RealBase,
              width=Fraction(1, 2**128)) -> frozenset:
    """Closed-region tags of a point: the containing first-generation
    triangles, the overlap tags implied by pairwise containment, or
    outsideHull.  Raises Undecidable when an inequality cannot be signed
    for the given data."""
    b = beta.fraction if beta.kind == "rational" else beta.enclosure(width)
    mem = _memberships(p, b)
    if any(v is None for v in mem.values()):
        raise Undecidable("membership straddles a triangle boundary")
    tags = {k for k, v in mem.items() if v}
    if not tags:
        return frozenset({"outsideHull"})
    if mem["fB"] and mem["fC"]:
        tags.add("O_A")
    if mem["fA"] and mem["fC"]:
        tags.add("O_B")
    if mem["fA"] and mem["fB"]:
        tags.add("O_C")
    return frozenset(tags)


def _overlap_status(p: PlanarPoint, b) -> Optional[bool]:
    mem = _memberships(p, b)
    pairs = (_and3(mem["fB"], mem["fC"]),
             _and3(mem["fA"], mem["fC"]),
             _and3(mem["fA"], mem["fB"]))
    if any(v is True for v in pairs):
        return True
    if all(v is False for v in pairs):
        return False
    return None


@dataclass(frozen=True)
class UniqueCheck:
    kind: str                      # InUtilde | TailInOverlap | Undecidable
    shift: Optional[int] = None

    def to_json(self) -> dict:
        return {"result": self.kind, "shift": self.shift}


def geometric_unique_check(coding: EventuallyPeriodic, beta: bases.RealBase,
                           bits_cap: int = bases.BITS_CAP) -> UniqueCheck:
    """Brute-force orbit test: evaluate every distinct shifted tail and ask
    whether it lands in the closed overlap region.  Exact for rational
    bases; otherwise the base enclosure is refined until every tail is
    decided or the bit cap is hit."""
    _coding_digits(coding)
    shifts = len(coding.pre) + len(coding.per)
    if beta.kind == "rational":
        b = beta.fraction
        for s in range(shifts):
            p = _point_exact(coding.shift(s), b)
            if _overlap_status(p, b):
                return UniqueCheck("TailInOverlap", s)
        return UniqueCheck("InUtilde")
    bits = 128
    while bits <= bits_cap:
        enc = beta.enclosure(Fraction(1, 2**bits))
        verdicts = []
        for s in range(shifts):
            p = _point_interval(coding.shift(s), enc)
            verdicts.append(_overlap_status(p, enc))
        for s, v in enumerate(verdicts):
            if v is True:
                return UniqueCheck("TailInOverlap", s)
        if all(v is False for v in verdicts):
            return UniqueCheck("InUtilde")
        bits *= 2
    return UniqueCheck("Undecidable")


# ---------------------------------------------------------------------------
# rendering


def _svg_num(value: Fraction) -> str:
    scaled = round(value * 10000)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return "%s%d.%04d" % (sign, scaled // 10000, scaled % 10000)


def _triangle_points(verts, side: Fraction) -> str:
    coords = []
    for vx, vy in verts:
        sx = vx / side * 1000
        sy = 1000 - vy / side * 1000
        coords.append("%s,%s" % (_svg_num(sx), _svg_num(sy)))
    return " ".join(coords)


def render_svg(beta: bases.RealBase, depth: int, out_path: str) -> str:
    """Draw every depth-level image of the hull triangle; translucent fills
    make the pairwise intersections read as darker bands, and at depth one
    the three overlap triangles are drawn explicitly.  Output is
    deterministic for fixed inputs."""
    if not (1 <= depth <= 12):
        raise ValueError("depth must be between 1 and 12")
    if beta.kind == "rational":
        b = beta.fraction
        if not (1 < b < 2):
            raise ValueError("base must lie strictly inside (1, 2) to render")
    else:
        enc = beta.enclosure(Fraction(1, 2**64))
        b = enc.mid
    side = 1 / (b - 1)
    hull = ((Fraction(0), Fraction(0)), (side, Fraction(0)), (Fraction(0), side))
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000">',
        '<g fill="#7aa8d8" fill-opacity="0.4" stroke="#23395d" stroke-width="1">',
    ]
    stack = [("", hull)]
    polys = []
    while stack:
        word, tri = stack.pop()
        if len(word) == depth:
            polys.append((word, tri))
            continue
        for ch in reversed("ABC"):
            d = DIGIT_VEC[ch]
            image = tuple(((vx + d[0]) / b, (vy + d[1]) / b) for vx, vy in tri)
            stack.append((word + ch, image))
    polys.sort(key=lambda item: item[0])
    for word, tri in polys:
        lines.append('<polygon points="%s"><title>%s</title></polygon>'
                     % (_triangle_points(tri, side), word))
    lines.append("</g>")
    if depth == 1:
        inv_b = 1 / b
        small = 1 / (b * (b - 1))
        overlaps = [
            ("O_A", ((inv_b, inv_b), (small, inv_b), (inv_b, small))),
            ("O_B", ((Fraction(0), inv_b), (small - inv_b, inv_b),
                     (Fraction(0), small))),
            ("O_C", ((inv_b, Fraction(0)), (small, Fraction(0)),
                     (inv_b, small - inv_b))),
        ]
        lines.append('<g fill="#2c4f7c" fill-opacity="0.4" stroke="none">')
        for name, tri in overlaps:
            lines.append('<polygon points="%s"><title>%s</title></polygon>'
                         % (_triangle_points(tri, side), name))
        lines.append("</g>")
    lines.append("</svg>")
    payload = "\n".join(lines) + "\n"
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write(payload)
    return out_path
