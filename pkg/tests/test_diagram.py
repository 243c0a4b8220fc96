"""Diagram construction, multiplicity bookkeeping, and quadrant counts."""

import math
import random

import pytest

from pershom import (
    Barcode,
    DiagramPoint,
    ExtendedReal,
    Interval,
    NEG_INF,
    POS_INF,
    PersistenceDiagram,
    diagram_of,
    quadrant_count,
    radical,
)

from helpers import random_diagram


def test_diagram_point_validation():
    with pytest.raises(ValueError):
        DiagramPoint(ExtendedReal(1.0), ExtendedReal(1.0))  # needs p < q
    with pytest.raises(ValueError):
        DiagramPoint(POS_INF, POS_INF)
    with pytest.raises(ValueError):
        DiagramPoint(ExtendedReal(0.0), NEG_INF)
    pt = DiagramPoint(NEG_INF, POS_INF)
    assert pt.gap == math.inf


def test_diagram_accumulates_multiplicity():
    d = PersistenceDiagram({0: [(0, 1), (0, 1), (0, 2)]})
    assert d.multiplicity(0, (0, 1)) == 2
    assert d.multiplicity(0, (0, 2)) == 1
    assert d.count(0) == 3
    assert d == PersistenceDiagram({0: {(0, 1): 2, (0, 2): 1}})
    with pytest.raises(ValueError):
        PersistenceDiagram({0: {(0, 1): 0}})


def test_diagram_of_examples():
    openness_forgotten = Barcode(
        [
            (0, Interval.closed_open(0, 1)),
            (0, Interval.closed_closed(0, 1)),
            (0, Interval.open_open(0, 1)),
        ]
    )
    assert diagram_of(openness_forgotten) == PersistenceDiagram({0: {(0, 1): 3}})

    assert diagram_of(Barcode([(1, Interval.singleton(2.0))])) == PersistenceDiagram()
    assert diagram_of(Barcode()) == PersistenceDiagram()


def test_diagram_of_ignores_radical():
    rng = random.Random(7)
    for _ in range(50):
        bars = []
        for _ in range(rng.randint(0, 8)):
            lo = rng.uniform(-3, 3)
            bars.append((rng.randint(0, 2), Interval.closed_open(lo, lo + rng.uniform(0.1, 2))))
        b = Barcode(bars)
        assert diagram_of(radical(b)) == diagram_of(b)


def test_quadrant_count_examples():
    d = PersistenceDiagram({0: [(0, 1), (0, 3), (2, 5)]})
    assert quadrant_count(d, 0, 1.0, 2.0) == 1  # only (0, 3)

    assert quadrant_count(PersistenceDiagram({0: [(0, 1)]}), 0, 0.0, 0.0) == 0

    unbounded = PersistenceDiagram({0: [(-math.inf, math.inf)]})
    assert quadrant_count(unbounded, 0, 0.0, 0.0) == 1


def test_quadrant_count_against_enumeration():
    rng = random.Random(99)
    for _ in range(100):
        diagram = random_diagram(rng, max_points=50, neg_inf_rate=0.1)
        d = rng.randint(0, 4)
        x = rng.uniform(-12, 12)
        y = rng.uniform(-12, 12)
        expected = sum(
            m
            for pt, m in diagram.items(d)
            if pt.p.float_value < x and pt.q.float_value > y
        )
        assert quadrant_count(diagram, d, x, y) == expected


def test_quadrant_dominates_long_gap_count():
    rng = random.Random(5)
    for _ in range(100):
        diagram = random_diagram(rng, max_points=50)
        d = rng.randint(0, 4)
        x = rng.uniform(-12, 12)
        y = x + rng.uniform(0, 5)
        restricted = sum(
            m
            for pt, m in diagram.items(d)
            if pt.gap > y - x and pt.p.float_value < x and pt.q.float_value > y
        )
        assert quadrant_count(diagram, d, x, y) >= restricted
