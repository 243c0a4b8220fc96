"""Bottleneck distance between persistence diagrams.

Ground cost between points is the L-infinity distance, with like infinite
coordinates at distance 0 and unlike ones at distance +inf; an unmatched
point pays half its lifetime, its true sup-distance to the diagonal.
Feasibility of a threshold is decided by maximum matching on the usual
augmented bipartite graph (each point gets a private diagonal slot, and
diagonal slots pair off freely), and the optimum is located by binary
search over the finite set of realizable costs, so results are exact.

Points with an infinite coordinate can only be matched to points with the
same infinity pattern; diagrams whose essential counts differ in a degree
are infinitely far apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .barcode import Barcode
from .diagram import DiagramPoint, PersistenceDiagram, diagram_of
from .extreal import POS_INF, ExtendedReal

BRUTE_FORCE_LIMIT = 8


class TooLargeError(ValueError):
    """The brute-force oracle only handles small diagrams."""


@dataclass(frozen=True)
class MatchingResult:
    """An explicit partial matching between two diagrams at a threshold."""

    matched: Tuple[Tuple[DiagramPoint, DiagramPoint], ...]
    unmatched_a: Tuple[DiagramPoint, ...]
    unmatched_b: Tuple[DiagramPoint, ...]
    feasible: bool


def _expand(diagram: PersistenceDiagram, d: int) -> List[DiagramPoint]:
    pts: List[DiagramPoint] = []
    for pt, mult in diagram.items(d):
        pts.extend([pt] * mult)
    return pts


def _infinity_class(pt: DiagramPoint) -> Tuple[bool, bool]:
    return (pt.p.is_finite, pt.q.is_finite)


def _pair_cost(a: DiagramPoint, b: DiagramPoint) -> float:
    if _infinity_class(a) != _infinity_class(b):
        return math.inf
    dp = abs(a.p.value - b.p.value) if a.p.is_finite else 0.0
    dq = abs(a.q.value - b.q.value) if a.q.is_finite else 0.0
    return max(dp, dq)


def _diagonal_cost(pt: DiagramPoint) -> float:
    if pt.p.is_finite and pt.q.is_finite:
        return (pt.q.value - pt.p.value) / 2.0
    return math.inf


def _split_classes(points: Sequence[DiagramPoint]) -> Dict[Tuple[bool, bool], List[DiagramPoint]]:
    out: Dict[Tuple[bool, bool], List[DiagramPoint]] = {}
    for pt in points:
        out.setdefault(_infinity_class(pt), []).append(pt)
    return out


def _match_class(
    points_a: Sequence[DiagramPoint],
    points_b: Sequence[DiagramPoint],
    delta: float,
    with_diagonal: bool,
) -> Tuple[List[Tuple[int, int]], List[int], List[int], bool]:
    """Maximum matching under threshold delta within one infinity class.

    With the diagonal enabled (finite points), left vertices are A points
    plus one private slot per B point, right vertices are B points plus one
    private slot per A point, and slots pair off freely; feasibility means
    a perfect matching.  Without it (essential points), feasibility means a
    perfect matching between the two point lists themselves.
    """
    n, m = len(points_a), len(points_b)
    if n + m == 0:
        return [], [], [], True
    if not with_diagonal and (n == 0 or m == 0):
        return [], list(range(n)), list(range(m)), n == m
    rows: List[int] = []
    cols: List[int] = []
    for i, a in enumerate(points_a):
        for j, b in enumerate(points_b):
            if _pair_cost(a, b) <= delta:
                rows.append(i)
                cols.append(j)
    if with_diagonal:
        size_left, size_right = n + m, m + n
        for i, a in enumerate(points_a):
            if _diagonal_cost(a) <= delta:
                rows.append(i)
                cols.append(m + i)
        for j, b in enumerate(points_b):
            if _diagonal_cost(b) <= delta:
                rows.append(n + j)
                cols.append(j)
        for j in range(m):
            for i in range(n):
                rows.append(n + j)
                cols.append(m + i)
    else:
        size_left, size_right = n, m
    graph = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)),
        shape=(size_left, size_right),
    )
    match = maximum_bipartite_matching(graph, perm_type="column")
    matched_pairs = [(i, int(match[i])) for i in range(n) if 0 <= match[i] < m]
    matched_a = {i for i, _ in matched_pairs}
    matched_b = {j for _, j in matched_pairs}
    unmatched_a = [i for i in range(n) if i not in matched_a]
    unmatched_b = [j for j in range(m) if j not in matched_b]
    size = int((match >= 0).sum())
    if with_diagonal:
        feasible = size == n + m
    else:
        feasible = n == m and size == n
    return matched_pairs, unmatched_a, unmatched_b, feasible


def matching_at(
    a: PersistenceDiagram, b: PersistenceDiagram, d: int, delta: float
) -> MatchingResult:
    """Explicit matching with every matched pair within L-inf distance delta
    and every unmatched point within delta of the diagonal, if one exists."""
    delta = float(delta)
    if delta < 0 or math.isnan(delta):
        raise ValueError(f"requires delta >= 0, got {delta}")
    class_a = _split_classes(_expand(a, d))
    class_b = _split_classes(_expand(b, d))
    matched: List[Tuple[DiagramPoint, DiagramPoint]] = []
    unmatched_a: List[DiagramPoint] = []
    unmatched_b: List[DiagramPoint] = []
    feasible = True
    for cls in sorted(set(class_a) | set(class_b)):
        pts_a = class_a.get(cls, [])
        pts_b = class_b.get(cls, [])
        with_diagonal = cls == (True, True)
        pairs, left_a, left_b, ok = _match_class(pts_a, pts_b, delta, with_diagonal)
        matched.extend((pts_a[i], pts_b[j]) for i, j in pairs)
        unmatched_a.extend(pts_a[i] for i in left_a)
        unmatched_b.extend(pts_b[j] for j in left_b)
        feasible = feasible and ok
    return MatchingResult(tuple(matched), tuple(unmatched_a), tuple(unmatched_b), feasible)


def _sorted_coordinate_bottleneck(
    points_a: Sequence[DiagramPoint], points_b: Sequence[DiagramPoint]
) -> float:
    """Optimal bottleneck for a one-coordinate class: match in sorted order."""
    if len(points_a) != len(points_b):
        return math.inf
    if not points_a:
        return 0.0
    if points_a[0].p.is_finite:
        xs = sorted(pt.p.value for pt in points_a)
        ys = sorted(pt.p.value for pt in points_b)
    elif points_a[0].q.is_finite:
        xs = sorted(pt.q.value for pt in points_a)
        ys = sorted(pt.q.value for pt in points_b)
    else:
        return 0.0
    return max(abs(x - y) for x, y in zip(xs, ys))


def _finite_class_bottleneck(
    points_a: Sequence[DiagramPoint], points_b: Sequence[DiagramPoint]
) -> float:
    if not points_a and not points_b:
        return 0.0
    candidates = {0.0}
    candidates.update(_diagonal_cost(pt) for pt in points_a)
    candidates.update(_diagonal_cost(pt) for pt in points_b)
    candidates.update(_pair_cost(x, y) for x in points_a for y in points_b)
    grid = sorted(candidates)

    def feasible(delta: float) -> bool:
        return _match_class(points_a, points_b, delta, with_diagonal=True)[3]

    lo, hi = 0, len(grid) - 1
    # Leaving every point unmatched is allowed at the largest diagonal cost,
    # so the top candidate is always feasible.
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(grid[mid]):
            hi = mid
        else:
            lo = mid + 1
    return grid[lo]


def bottleneck(a: PersistenceDiagram, b: PersistenceDiagram, d: int) -> ExtendedReal:
    """The smallest delta admitting a delta-feasible matching in degree d.

    Exact: the optimum is realized among inter-point costs and diagonal
    costs, and classes with infinite coordinates are matched separately by
    sorted order on their finite coordinate.  Returns POS_INF when the
    essential counts make matching impossible.
    """
    class_a = _split_classes(_expand(a, d))
    class_b = _split_classes(_expand(b, d))
    worst = 0.0
    for cls in sorted(set(class_a) | set(class_b)):
        pts_a = class_a.get(cls, [])
        pts_b = class_b.get(cls, [])
        if cls == (True, True):
            value = _finite_class_bottleneck(pts_a, pts_b)
        else:
            value = _sorted_coordinate_bottleneck(pts_a, pts_b)
        worst = max(worst, value)
        if math.isinf(worst):
            return POS_INF
    return ExtendedReal(worst)


def bottleneck_bruteforce(a: PersistenceDiagram, b: PersistenceDiagram, d: int) -> ExtendedReal:
    """Exact bottleneck by exhaustive search over all partial matchings.

    Independent test oracle; each diagram may hold at most 8 points (with
    multiplicity) in the requested degree.
    """
    points_a = _expand(a, d)
    points_b = _expand(b, d)
    if len(points_a) > BRUTE_FORCE_LIMIT or len(points_b) > BRUTE_FORCE_LIMIT:
        raise TooLargeError(
            f"brute force limited to {BRUTE_FORCE_LIMIT} points per diagram, "
            f"got {len(points_a)} and {len(points_b)}"
        )
    n, m = len(points_a), len(points_b)
    pair = [[_pair_cost(x, y) for y in points_b] for x in points_a]
    diag_a = [_diagonal_cost(x) for x in points_a]
    diag_b = [_diagonal_cost(y) for y in points_b]

    @lru_cache(maxsize=None)
    def best(i: int, used: int) -> float:
        if i == n:
            cost = 0.0
            for j in range(m):
                if not used & (1 << j):
                    cost = max(cost, diag_b[j])
            return cost
        value = max(diag_a[i], best(i + 1, used))
        for j in range(m):
            if not used & (1 << j):
                value = min(value, max(pair[i][j], best(i + 1, used | (1 << j))))
        return value

    result = best(0, 0)
    best.cache_clear()
    return POS_INF if math.isinf(result) else ExtendedReal(result)


def interleaving_distance(a: Barcode, b: Barcode, d: int) -> ExtendedReal:
    """Interleaving distance of two barcode modules in degree d.

    For barcode modules this coincides with the bottleneck distance of
    their diagrams, which is how it is computed here.
    """
    return bottleneck(diagram_of(a), diagram_of(b), d)


__all__ = [
    "MatchingResult",
    "TooLargeError",
    "BRUTE_FORCE_LIMIT",
    "bottleneck",
    "matching_at",
    "bottleneck_bruteforce",
    "interleaving_distance",
]
