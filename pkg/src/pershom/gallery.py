"""Worked constructions: wedge-of-spheres truncations, the shrinking-interval
product family, and numerical evaluation of the Douglas energy of a
reparametrized closed curve.

The truncation family gives a two-value filtration whose degree-d rank
between any two values past the jump grows without bound in the truncation
index -- finite evidence that the limiting space is not tame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

import numpy as np

from .barcode import Barcode, Interval
from .filtration import FilteredComplex, betti_at, validate
from .linalg import GF2


@dataclass(frozen=True)
class HawaiianSpec:
    """A wedge of k sphere summands of dimension d, the k-th one filled."""

    d: int
    k: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"requires sphere dimension d >= 1, got {self.d}")
        if self.k < 1:
            raise ValueError(f"requires truncation index k >= 1, got {self.k}")


def hawaiian_complex(spec: HawaiianSpec) -> FilteredComplex:
    """Filtered model of the earring truncation: k-1 hollow d-spheres and one
    filled one, wedged at a base vertex.

    Each sphere is the boundary of a (d+1)-simplex through the base vertex;
    the k-th keeps its top cell and is therefore contractible.  The base
    vertex sits at filtration value 0 and every other simplex at 1, so the
    sublevel filtration jumps from a point to the whole wedge.  Any d >= 1
    is accepted; d = 1 (triangle circles) is the well-trodden path.
    """
    d, k = spec.d, spec.k
    entries: List[Tuple[Tuple[int, ...], float]] = [((0,), 0.0)]
    next_vertex = 1
    for sphere in range(1, k + 1):
        verts = (0,) + tuple(range(next_vertex, next_vertex + d + 1))
        next_vertex += d + 1
        filled = sphere == k
        for size in range(1, len(verts) + 1):
            if size == len(verts) and not filled:
                continue
            for simplex in combinations(verts, size):
                if simplex == (0,):
                    continue
                entries.append((simplex, 1.0))
    out = FilteredComplex(entries)
    validate(out)
    return out


def hawaiian_rank_sweep(d: int, k_max: int) -> Tuple[Tuple[int, int], ...]:
    """Degree-d rank of the filtration's structure map past the jump, for
    each truncation index k <= k_max.

    The map between any two sublevels at values >= 1 is the identity of the
    whole wedge, so the rank is its d-th Betti number: k - 1.  The sweep
    growing without bound is the finite shadow of the untamed limit.
    """
    if k_max < 1:
        raise ValueError(f"requires k_max >= 1, got {k_max}")
    out = []
    for k in range(1, k_max + 1):
        complex_ = hawaiian_complex(HawaiianSpec(d, k))
        out.append((k, betti_at(complex_, 1.0, d, GF2)))
    return tuple(out)


def product_family(n: int) -> Barcode:
    """The barcode {[0, 1), [0, 1/2), ..., [0, 1/n)} in degree 0.

    Truncation of the product of ever-shorter half-open intervals; its
    radical opens every left endpoint.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    return Barcode([(0, Interval.closed_open(0.0, 1.0 / i)) for i in range(1, n + 1)])


@dataclass(frozen=True)
class DouglasInput:
    """Uniform samples of a closed curve and of a monotone degree-1 circle map.

    ``curve_samples`` holds g(2*pi*i/K) for i = 0..K-1 as rows; ``phi``
    holds the reparametrization at the same grid points and must be
    monotone with phi(t + 2*pi) = phi(t) + 2*pi.  ``quadrature_n`` sets the
    integration grid.
    """

    curve_samples: np.ndarray
    phi: np.ndarray
    quadrature_n: int

    def __post_init__(self):
        curve = np.asarray(self.curve_samples, dtype=float)
        if curve.ndim == 1:
            curve = curve[:, None]
        if curve.ndim != 2:
            raise ValueError(f"curve samples must be a (K, n) array, got shape {curve.shape}")
        phi = np.asarray(self.phi, dtype=float).ravel()
        object.__setattr__(self, "curve_samples", curve)
        object.__setattr__(self, "phi", phi)
        if curve.shape[0] != phi.shape[0]:
            raise ValueError(
                f"curve and phi must be sampled on grids of equal size, "
                f"got {curve.shape[0]} and {phi.shape[0]}"
            )
        if curve.shape[0] == 0:
            raise ValueError("need at least one curve sample")
        if np.any(np.diff(phi) < 0) or phi[0] + 2 * math.pi < phi[-1]:
            raise ValueError("phi samples must be monotone over one period")
        if self.quadrature_n < 8:
            raise ValueError(f"requires quadrature_n >= 8, got {self.quadrature_n}")

    @staticmethod
    def identity(curve_samples: np.ndarray, quadrature_n: int) -> "DouglasInput":
        """Input with the identity reparametrization on the curve's grid."""
        curve = np.asarray(curve_samples, dtype=float)
        count = curve.shape[0]
        grid = np.arange(count) * (2 * math.pi / count)
        return DouglasInput(curve, grid, quadrature_n)


def douglas_eval(inp: DouglasInput) -> float:
    """Numerical Douglas energy (1/16) double-integral of
    ||g(phi(a)) - g(phi(b))||^2 / sin((a-b)/2)^2 over [0, 2*pi)^2.

    Uses two interleaved midpoint grids of size n, offset by half a cell so
    the diagonal a = b (a removable singularity for Lipschitz curves) is
    never sampled.  The curve and phi are interpolated linearly and
    periodically between their samples.
    """
    n = inp.quadrature_n
    h = 2 * math.pi / n
    alpha = (np.arange(n) + 0.5) * h
    beta = np.arange(n) * h

    grid = np.arange(inp.phi.shape[0]) * (2 * math.pi / inp.phi.shape[0])
    # phi minus identity is 2*pi-periodic; interpolate that and add back.
    drift = inp.phi - grid

    def curve_at(angles: np.ndarray) -> np.ndarray:
        mapped = np.interp(angles, grid, drift, period=2 * math.pi) + angles
        return np.column_stack(
            [
                np.interp(mapped, grid, coord, period=2 * math.pi)
                for coord in inp.curve_samples.T
            ]
        )

    ga = curve_at(alpha)
    gb = curve_at(beta)
    sq_dist = (
        (ga * ga).sum(axis=1)[:, None]
        + (gb * gb).sum(axis=1)[None, :]
        - 2.0 * ga @ gb.T
    )
    np.maximum(sq_dist, 0.0, out=sq_dist)
    kernel = np.sin((alpha[:, None] - beta[None, :]) / 2.0) ** (-2)
    return float(h * h / 16.0 * (kernel * sq_dist).sum())


__all__ = [
    "HawaiianSpec",
    "DouglasInput",
    "hawaiian_complex",
    "hawaiian_rank_sweep",
    "product_family",
    "douglas_eval",
]
