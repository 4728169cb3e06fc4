"""Parametrized contours in the z-plane.

A PathSpec is an ordered list of line segments and circular arcs; each
segment maps t in [0, 1] to a point and carries its derivative.  Consecutive
segments must share endpoints.  These contours realize both quadrature
paths and the base projections of cycles on the spectral curve.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Line:
    start: complex
    end: complex

    def at(self, t: float) -> complex:
        return self.start + t * (self.end - self.start)

    def deriv(self, t: float) -> complex:
        return self.end - self.start

    @property
    def length(self) -> float:
        return abs(self.end - self.start)


@dataclass(frozen=True)
class Arc:
    """Circular arc z = center + radius * exp(i theta), theta from theta0 to theta1.

    theta1 < theta0 traverses clockwise; |theta1 - theta0| may exceed 2 pi.
    """

    center: complex
    radius: float
    theta0: float
    theta1: float

    def at(self, t: float) -> complex:
        th = self.theta0 + t * (self.theta1 - self.theta0)
        return self.center + self.radius * cmath.exp(1j * th)

    def deriv(self, t: float) -> complex:
        th = self.theta0 + t * (self.theta1 - self.theta0)
        return 1j * (self.theta1 - self.theta0) * self.radius * cmath.exp(1j * th)

    @property
    def start(self) -> complex:
        return self.at(0.0)

    @property
    def end(self) -> complex:
        return self.at(1.0)

    @property
    def length(self) -> float:
        return abs(self.theta1 - self.theta0) * self.radius


Segment = Line | Arc


@dataclass(frozen=True)
class PathSpec:
    segments: tuple[Segment, ...]

    def __post_init__(self):
        segs = tuple(self.segments)
        object.__setattr__(self, "segments", segs)
        if not segs:
            raise ValueError("PathSpec needs at least one segment")
        for a, b in zip(segs, segs[1:]):
            gap = abs(a.end - b.start)
            scale = 1.0 + abs(a.end)
            if gap > 1e-9 * scale:
                raise ValueError(f"segments do not chain: gap {gap:.3e}")

    @property
    def start(self) -> complex:
        return self.segments[0].start

    @property
    def end(self) -> complex:
        return self.segments[-1].end

    @property
    def length(self) -> float:
        return sum(s.length for s in self.segments)

    def is_closed(self, tol: float = 1e-9) -> bool:
        return abs(self.start - self.end) <= tol * (1.0 + abs(self.start))

    def reversed(self) -> "PathSpec":
        segs = []
        for s in reversed(self.segments):
            if isinstance(s, Line):
                segs.append(Line(s.end, s.start))
            else:
                segs.append(Arc(s.center, s.radius, s.theta1, s.theta0))
        return PathSpec(tuple(segs))


def circle(center: complex, radius: float, theta_start: float = 0.0,
           counterclockwise: bool = True) -> PathSpec:
    """Full circle as a one-arc path."""
    sweep = 2.0 * math.pi if counterclockwise else -2.0 * math.pi
    return PathSpec((Arc(center, radius, theta_start, theta_start + sweep),))
