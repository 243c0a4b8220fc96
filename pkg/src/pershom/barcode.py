"""Intervals, barcodes, and the barcode-level persistence-module algebra.

A barcode is a finite multiset of (degree, interval) bars and stands for the
direct sum of the corresponding one-dimensional interval summands.  All
values here are immutable; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .extreal import NEG_INF, POS_INF, ExtendedReal


@dataclass(frozen=True)
class Interval:
    """An interval of the real line with explicit endpoint openness.

    Invariants: ``lo <= hi``; a closed endpoint is always finite; equal
    endpoints force a (finite) singleton ``[a,a]``.
    """

    lo: ExtendedReal
    hi: ExtendedReal
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self):
        object.__setattr__(self, "lo", ExtendedReal.wrap(self.lo))
        object.__setattr__(self, "hi", ExtendedReal.wrap(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self}")
        if self.lo_closed and not self.lo.is_finite:
            raise ValueError("closed left endpoint must be finite")
        if self.hi_closed and not self.hi.is_finite:
            raise ValueError("closed right endpoint must be finite")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("an interval with equal endpoints must be a singleton [a,a]")

    @staticmethod
    def closed_open(lo: float, hi) -> "Interval":
        """The half-open interval [lo, hi); ``hi`` may be +infinity."""
        return Interval(ExtendedReal(lo), ExtendedReal.wrap(hi), True, False)

    @staticmethod
    def open_open(lo, hi) -> "Interval":
        return Interval(ExtendedReal.wrap(lo), ExtendedReal.wrap(hi), False, False)

    @staticmethod
    def closed_closed(lo: float, hi: float) -> "Interval":
        return Interval(ExtendedReal(lo), ExtendedReal(hi), True, True)

    @staticmethod
    def singleton(at: float) -> "Interval":
        return Interval(ExtendedReal(at), ExtendedReal(at), True, True)

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def contains(self, t: float) -> bool:
        """Membership of a finite point, respecting openness flags."""
        t = ExtendedReal(t)
        if t < self.lo or (t == self.lo and not self.lo_closed):
            return False
        if t > self.hi or (t == self.hi and not self.hi_closed):
            return False
        return True

    def _key(self):
        return (self.lo._key(), self.hi._key(), self.lo_closed, self.hi_closed)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo},{self.hi}{right}"


@dataclass(frozen=True)
class ConstancyWitness:
    """Threshold pair: the module is constant below t0 and above t1."""

    t0: float
    t1: float

    def __post_init__(self):
        if self.t0 > self.t1:
            raise ValueError("witness requires t0 <= t1")


def _bar_key(bar: Tuple[int, Interval]):
    degree, interval = bar
    return (degree, interval._key())


class Barcode:
    """A finite multiset of (degree, interval) bars, stored canonically sorted.

    Equality is multiset equality; degrees may be any integers.
    """

    __slots__ = ("_bars",)

    def __init__(self, bars: Iterable[Tuple[int, Interval]] = ()):
        bars = [(int(d), iv) for d, iv in bars]
        for _, iv in bars:
            if not isinstance(iv, Interval):
                raise TypeError(f"expected Interval, got {type(iv).__name__}")
        object.__setattr__(self, "_bars", tuple(sorted(bars, key=_bar_key)))

    @property
    def bars(self) -> Tuple[Tuple[int, Interval], ...]:
        return self._bars

    def __iter__(self) -> Iterator[Tuple[int, Interval]]:
        return iter(self._bars)

    def __len__(self) -> int:
        return len(self._bars)

    def __eq__(self, other):
        if not isinstance(other, Barcode):
            return NotImplemented
        return self._bars == other._bars

    def __hash__(self):
        return hash(self._bars)

    def __setattr__(self, name, value):
        raise AttributeError("Barcode is immutable")

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({d for d, _ in self._bars}))

    def in_degree(self, d: int) -> Tuple[Interval, ...]:
        return tuple(iv for deg, iv in self._bars if deg == d)

    def __repr__(self):
        inner = ", ".join(f"{d}: {iv}" for d, iv in self._bars)
        return f"Barcode({{{inner}}})"


def interval_module_rank(interval: Interval, s: float, t: float) -> int:
    """Rank of the structure map of a one-interval summand from value s to t.

    Equals 1 exactly when both s and t lie in the interval, else 0.
    """
    if s > t:
        raise ValueError(f"requires s <= t, got s={s}, t={t}")
    return int(interval.contains(s) and interval.contains(t))


def barcode_rank(barcode: Barcode, d: int, s: float, t: float) -> int:
    """Rank of the degree-d structure map from value s to value t.

    The barcode module's map has one identity component per bar containing
    both s and t, so the rank is that bar count.
    """
    if s > t:
        raise ValueError(f"requires s <= t, got s={s}, t={t}")
    return sum(1 for iv in barcode.in_degree(d) if iv.contains(s) and iv.contains(t))


def radical(barcode: Barcode) -> Barcode:
    """Minimal submodule with ephemeral cokernel, at the barcode level.

    Attained (closed, finite) left endpoints open up; singleton bars vanish;
    everything else is unchanged.
    """
    out = []
    for d, iv in barcode:
        if iv.is_singleton:
            continue
        if iv.lo_closed:
            out.append((d, Interval(iv.lo, iv.hi, False, iv.hi_closed)))
        else:
            out.append((d, iv))
    return Barcode(out)


def constancy_witness(barcode: Barcode, d: int) -> ConstancyWitness:
    """Values below/above which the degree-d barcode module stops changing.

    Convention: one unit below the smallest finite endpoint and one unit
    above the largest; (0, 0) when no finite endpoint exists in degree d.
    """
    finite = []
    for iv in barcode.in_degree(d):
        if iv.lo.is_finite:
            finite.append(iv.lo.value)
        if iv.hi.is_finite:
            finite.append(iv.hi.value)
    if not finite:
        return ConstancyWitness(0.0, 0.0)
    return ConstancyWitness(min(finite) - 1.0, max(finite) + 1.0)


__all__ = [
    "Interval",
    "Barcode",
    "ConstancyWitness",
    "interval_module_rank",
    "barcode_rank",
    "radical",
    "constancy_witness",
    "NEG_INF",
    "POS_INF",
    "ExtendedReal",
]
