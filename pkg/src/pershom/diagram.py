"""Persistence diagrams: finite-support multiplicity maps on {p < q}.

A diagram point is an endpoint pair (p, q) with p < q, p != +inf and
q != -inf; openness of the originating interval endpoints is forgotten.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .barcode import Barcode
from .extreal import NEG_INF, POS_INF, ExtendedReal

PointLike = Union["DiagramPoint", Tuple[float, float]]


@dataclass(frozen=True, order=False)
class DiagramPoint:
    """A birth/death pair (p, q) in the open half-plane p < q."""

    p: ExtendedReal
    q: ExtendedReal

    def __post_init__(self):
        object.__setattr__(self, "p", ExtendedReal.wrap(self.p))
        object.__setattr__(self, "q", ExtendedReal.wrap(self.q))
        if self.p == POS_INF:
            raise ValueError("birth coordinate cannot be +inf")
        if self.q == NEG_INF:
            raise ValueError("death coordinate cannot be -inf")
        if not self.p < self.q:
            raise ValueError(f"requires p < q, got ({self.p}, {self.q})")

    @property
    def gap(self) -> float:
        """The lifetime q - p as a float (inf when an endpoint is infinite)."""
        return self.q.float_value - self.p.float_value

    def _key(self):
        return (self.p._key(), self.q._key())

    def __str__(self):
        return f"({self.p}, {self.q})"


def _as_point(value: PointLike) -> DiagramPoint:
    if isinstance(value, DiagramPoint):
        return value
    p, q = value
    return DiagramPoint(ExtendedReal.wrap(p), ExtendedReal.wrap(q))


class PersistenceDiagram:
    """Per-degree multiplicity map with finite support and positive counts."""

    __slots__ = ("_points",)

    def __init__(self, points: Mapping[int, Union[Mapping[PointLike, int], Iterable[PointLike]]] = None):
        """Build from ``{degree: {point: multiplicity}}`` or ``{degree: [point, ...]}``.

        Points may be DiagramPoint instances or plain (p, q) pairs; repeats in
        an iterable accumulate multiplicity.
        """
        table: Dict[int, Dict[DiagramPoint, int]] = {}
        if points:
            for degree, content in points.items():
                degree = int(degree)
                bucket = table.setdefault(degree, {})
                if isinstance(content, Mapping):
                    entries = [(pt, int(m)) for pt, m in content.items()]
                else:
                    entries = [(pt, 1) for pt in content]
                for pt, mult in entries:
                    if mult < 1:
                        raise ValueError(f"multiplicity must be >= 1, got {mult}")
                    pt = _as_point(pt)
                    bucket[pt] = bucket.get(pt, 0) + mult
                if not bucket:
                    del table[degree]
        object.__setattr__(self, "_points", table)

    def __setattr__(self, name, value):
        raise AttributeError("PersistenceDiagram is immutable")

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self._points))

    def items(self, d: int) -> Iterator[Tuple[DiagramPoint, int]]:
        """Deterministically ordered (point, multiplicity) pairs in degree d."""
        bucket = self._points.get(d, {})
        for pt in sorted(bucket, key=DiagramPoint._key):
            yield pt, bucket[pt]

    def multiplicity(self, d: int, point: PointLike) -> int:
        return self._points.get(d, {}).get(_as_point(point), 0)

    def count(self, d: int) -> int:
        """Total point count, with multiplicity, in degree d."""
        return sum(self._points.get(d, {}).values())

    def total(self) -> int:
        return sum(self.count(d) for d in self._points)

    def __eq__(self, other):
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return self._points == other._points

    def __repr__(self):
        parts = []
        for d in self.degrees():
            inner = ", ".join(
                f"{pt}" if m == 1 else f"{pt}x{m}" for pt, m in self.items(d)
            )
            parts.append(f"{d}: {{{inner}}}")
        return f"PersistenceDiagram({'; '.join(parts)})"


def diagram_of(barcode: Barcode) -> PersistenceDiagram:
    """The diagram of a barcode: group bars by (inf, sup), dropping singletons.

    Endpoint openness is invisible here, so the radical of a barcode has the
    same diagram as the barcode itself.
    """
    table: Dict[int, Dict[DiagramPoint, int]] = {}
    for d, iv in barcode:
        if iv.is_singleton:
            continue
        pt = DiagramPoint(iv.lo, iv.hi)
        bucket = table.setdefault(d, {})
        bucket[pt] = bucket.get(pt, 0) + 1
    return PersistenceDiagram(table)


def quadrant_count(diagram: PersistenceDiagram, d: int, x: float, y: float) -> int:
    """Total multiplicity of degree-d points in the open quadrant p < x, q > y.

    Infinite endpoints compare through the extended order, so (-inf, inf)
    lands in every quadrant.
    """
    if math.isnan(x) or math.isnan(y):
        raise ValueError("quadrant corner must not be NaN")
    ex, ey = ExtendedReal(x), ExtendedReal(y)
    return sum(m for pt, m in diagram.items(d) if pt.p < ex and ey < pt.q)


__all__ = ["DiagramPoint", "PersistenceDiagram", "diagram_of", "quadrant_count"]
