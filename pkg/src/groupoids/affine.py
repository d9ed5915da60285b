"""An exactly-verified groupoid structure on the rational plane over the line.

Arrows are points (x1, x2); objects are scalars.  Source is x1 + 2*x2, target
is x1 + x2, the unit embeds u as (u, 0), inversion is (x1 + 3*x2, -x2), and
(x1, x2).(y1, y2) = (x1 - 2*y2, x2 + y2) whenever x2 = -x1 + y1 + 2*y2.

Everything runs on Fraction, so every check is exact; sampling only chooses
where to look, never what counts as equal.  The groupoid is compatible with
componentwise addition, and composable quadruples trace out parallelograms
whose sides have slope -1/2; aff_parallelograms reports them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .report import (
    InternalCheckFailed,
    NotComposable,
    ReportBuilder,
    ValidationReport,
)

__all__ = [
    "Vec2",
    "src",
    "tgt",
    "unit",
    "inverse",
    "aff_eval",
    "aff_product",
    "QuadReport",
    "aff_verify",
    "aff_parallelograms",
]


@dataclass(frozen=True)
class Vec2:
    """A point of the plane with exact rational coordinates."""

    x1: Fraction
    x2: Fraction

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x1 + other.x1, self.x2 + other.x2)

    def __str__(self) -> str:
        return f"({self.x1}, {self.x2})"


def _vec(x1, x2) -> Vec2:
    return Vec2(Fraction(x1), Fraction(x2))


def src(p: Vec2) -> Fraction:
    return p.x1 + 2 * p.x2


def tgt(p: Vec2) -> Fraction:
    return p.x1 + p.x2


def unit(u: Fraction) -> Vec2:
    return Vec2(Fraction(u), Fraction(0))


def inverse(p: Vec2) -> Vec2:
    return Vec2(p.x1 + 3 * p.x2, -p.x2)


def aff_eval(fn: str, value):
    """Dispatch by name: 'alpha' | 'beta' (point -> scalar), 'eps' | 'inv'."""
    table = {"alpha": src, "beta": tgt, "eps": unit, "inv": inverse}
    if fn not in table:
        raise ValueError("fn must be one of alpha, beta, eps, inv")
    return table[fn](value)


def aff_product(x: Vec2, y: Vec2) -> Vec2:
    """The partial product; composability means x2 = -x1 + y1 + 2*y2 exactly."""
    lhs = x.x2
    rhs = -x.x1 + y.x1 + 2 * y.x2
    if lhs != rhs:
        raise NotComposable(
            f"{x} and {y} do not compose: x2 = {lhs} but -x1 + y1 + 2*y2 = {rhs}"
        )
    return Vec2(x.x1 - 2 * y.x2, x.x2 + y.x2)


def _compose_after(x: Vec2, free: Fraction) -> Vec2:
    """The unique y with second coordinate ``free`` such that x.y is defined."""
    return Vec2(x.x1 + x.x2 - 2 * free, free)


def _random_fraction(rng: random.Random) -> Fraction:
    # numerators in [-100, 100], denominators in [1, 10]; Fraction reduces
    return Fraction(rng.randint(-100, 100), rng.randint(1, 10))


def aff_verify(samples: int, seed: int) -> ValidationReport:
    """Sample composable data deterministically and check every law exactly.

    Per sample: a composable pair and triple (for associativity, endpoints,
    unit and inverse laws and the inversion identities), a second composable
    pair (for the interchange law and additivity of the four structure maps),
    and two scalars (for additivity of the unit and commutativity).
    """
    rb = ReportBuilder()
    rng = random.Random(seed)
    for k in range(samples):
        tag = f"{k:06d}"

        def hit(rule: str, detail: str, *points) -> None:
            rb.violation(rule, (tag, *[str(p) for p in points]), detail)

        x = Vec2(_random_fraction(rng), _random_fraction(rng))
        y = _compose_after(x, _random_fraction(rng))
        w = _compose_after(y, _random_fraction(rng))
        z = Vec2(_random_fraction(rng), _random_fraction(rng))
        t = _compose_after(z, _random_fraction(rng))
        u = _random_fraction(rng)
        v = _random_fraction(rng)
        try:
            xy = aff_product(x, y)
            if aff_product(xy, w) != aff_product(x, aff_product(y, w)):
                hit("G1-assoc", "associativity fails", x, y, w)
            if src(xy) != src(x):
                hit("G1-source", "source of product is not the first source", x, y)
            if tgt(xy) != tgt(y):
                hit("G1-target", "target of product is not the second target", x, y)
            if aff_product(unit(src(x)), x) != x:
                hit("G2-left-unit", "left unit law fails", x)
            if aff_product(x, unit(tgt(x))) != x:
                hit("G2-right-unit", "right unit law fails", x)
            if aff_product(inverse(x), x) != unit(tgt(x)):
                hit("G3-left-inverse", "left inverse law fails", x)
            if aff_product(x, inverse(x)) != unit(src(x)):
                hit("G3-right-inverse", "right inverse law fails", x)
            zt = aff_product(z, t)
            lhs = xy + zt
            rhs = aff_product(x + z, y + t)
            if lhs != rhs:
                hit("interchange", f"(x.y)+(z.t) = {lhs} but (x+z).(y+t) = {rhs}", x, y, z, t)
        except NotComposable as exc:
            hit("composability", f"unexpected: {exc}", x, y, w, z, t)

        if src(inverse(x)) != tgt(x) or tgt(inverse(x)) != src(x):
            hit("inverse-endpoints", "inversion does not swap endpoints", x)
        if inverse(inverse(x)) != x:
            hit("inversion-involution", "double inversion is not the identity", x)
        if inverse(unit(u)) != unit(u):
            hit("unit-self-inverse", "unit arrow is not fixed by inversion", unit(u))
        if src(unit(u)) != u or tgt(unit(u)) != u:
            hit("unit-section", "unit arrow is not a loop at its scalar", unit(u))

        if src(x + z) != src(x) + src(z):
            hit("source-additive", "source is not additive", x, z)
        if tgt(x + z) != tgt(x) + tgt(z):
            hit("target-additive", "target is not additive", x, z)
        if inverse(x + z) != inverse(x) + inverse(z):
            hit("inversion-additive", "inversion is not additive", x, z)
        if unit(u + v) != unit(u) + unit(v):
            hit("unit-additive", "unit is not additive", unit(u), unit(v))
        if x + z != z + x:
            hit("addition-commutes", "addition is not commutative", x, z)
    return rb.build()


@dataclass(frozen=True)
class QuadReport:
    """Four labelled points, their diagonal midpoints, and the verdict.

    ``slopes`` and ``squared_lengths`` describe the two slanted sides named in
    ``side_labels``; both are None for a degenerate quadrilateral.
    """

    kind: str
    labels: tuple[str, str, str, str]
    points: tuple[Vec2, Vec2, Vec2, Vec2]
    midpoint_13: Vec2
    midpoint_24: Vec2
    side_labels: tuple[str, str]
    slopes: tuple[Fraction, Fraction] | None
    squared_lengths: tuple[Fraction, Fraction] | None
    degenerate: bool

    @property
    def is_parallelogram(self) -> bool:
        return not self.degenerate and self.midpoint_13 == self.midpoint_24

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "points": {l: str(p) for l, p in zip(self.labels, self.points)},
            "diagonal_midpoints": [str(self.midpoint_13), str(self.midpoint_24)],
            "side_labels": list(self.side_labels),
            "slopes": None if self.slopes is None else [str(s) for s in self.slopes],
            "squared_lengths": None
            if self.squared_lengths is None
            else [str(s) for s in self.squared_lengths],
            "degenerate": self.degenerate,
            "parallelogram": self.is_parallelogram,
        }


def _midpoint(p: Vec2, q: Vec2) -> Vec2:
    return Vec2((p.x1 + q.x1) / 2, (p.x2 + q.x2) / 2)


def _slope(p: Vec2, q: Vec2) -> Fraction:
    return (q.x2 - p.x2) / (q.x1 - p.x1)


def _sq_length(p: Vec2, q: Vec2) -> Fraction:
    return (q.x1 - p.x1) ** 2 + (q.x2 - p.x2) ** 2


def aff_parallelograms(kind: str, params) -> QuadReport:
    """Build one of the two parallelogram families and verify it exactly.

    Kind A takes (a, b, c) and uses the composable pair x = (a, -a+b+2c),
    y = (b, c): the corners are unit(tgt(x)), x, x.y, y, degenerate iff c = 0.
    Kind B takes a single point (x1, x2) and uses unit(src(x)), x,
    unit(tgt(x)), inverse(x), degenerate iff x2 = 0.

    The quadrilateral is a parallelogram iff the diagonal midpoints coincide
    (checked exactly); when not degenerate the two slanted sides must have
    slope -1/2 and equal squared length, so those are computed and asserted.
    """
    if kind == "A":
        a, b, c = (Fraction(p) for p in params)
        x = _vec(a, -a + b + 2 * c)
        y = _vec(b, c)
        labels = ("A1", "A2", "A3", "A4")
        points = (unit(tgt(x)), x, aff_product(x, y), y)
        sides = ("A1A4", "A2A3")
        side_pairs = ((points[0], points[3]), (points[1], points[2]))
        degenerate = c == 0
        scale = c
    elif kind == "B":
        x1, x2 = (Fraction(p) for p in params)
        x = _vec(x1, x2)
        labels = ("B1", "B2", "B3", "B4")
        points = (unit(src(x)), x, unit(tgt(x)), inverse(x))
        sides = ("B1B2", "B3B4")
        side_pairs = ((points[0], points[1]), (points[2], points[3]))
        degenerate = x2 == 0
        scale = x2
    else:
        raise ValueError("kind must be 'A' or 'B'")

    mid13 = _midpoint(points[0], points[2])
    mid24 = _midpoint(points[1], points[3])
    slopes = None
    sq_lengths = None
    if not degenerate:
        slopes = tuple(_slope(p, q) for p, q in side_pairs)
        sq_lengths = tuple(_sq_length(p, q) for p, q in side_pairs)
        # these are theorems; a mismatch would mean the arithmetic above is wrong
        if (
            mid13 != mid24
            or slopes != (Fraction(-1, 2), Fraction(-1, 2))
            or sq_lengths != (5 * scale**2, 5 * scale**2)
        ):
            raise InternalCheckFailed(
                f"quadrilateral of kind {kind} at {points} is not the expected "
                "parallelogram"
            )
    return QuadReport(
        kind=kind,
        labels=labels,
        points=points,
        midpoint_13=mid13,
        midpoint_24=mid24,
        side_labels=sides,
        slopes=slopes,
        squared_lengths=sq_lengths,
        degenerate=degenerate,
    )
