"""Two-generator numerical semigroups and their gap-counting functions.

For coprime 1 <= a < b the semigroup <a, b> = {ua + vb : u, v >= 0} misses
exactly delta = (a-1)(b-1)/2 non-negative integers (its gaps), the largest
being 2*delta - 1.  Two counting functions drive everything downstream:

    elements_below(m)  -- how many semigroup elements are < m,
    gaps_at_least(m)   -- how many integers outside the semigroup are >= m,

where "outside" includes every negative integer, so gaps_at_least(m) equals
delta - m for m <= 0.  The two are linked by

    elements_below(m) = m - delta + gaps_at_least(m)   for every integer m.

The gap-counting function of a semigroup is a non-increasing step function
that drops by exactly 1 at each gap; `GapFunction` captures that shape and
`convolve` combines several of them by infimum convolution
h(s) = min_m f(m) + g(s - m), the operation used when a curve carries
several cusps.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import gcd


class Semigroup:
    """The numerical semigroup <a, b> with its gap data precomputed."""

    __slots__ = ("_a", "_b", "_delta", "_gaps", "_elements")

    def __init__(self, a: int, b: int):
        if a < 1:
            raise ValueError(f"generator a must be >= 1, got {a}")
        if a >= b:
            raise ValueError(f"generators must satisfy a < b, got a={a}, b={b}")
        if gcd(a, b) != 1:
            raise ValueError(f"generators must be coprime, got gcd({a}, {b}) = {gcd(a, b)}")
        delta = (a - 1) * (b - 1) // 2
        span = 2 * delta
        hit = bytearray(span + 1)
        hit[0] = 1
        for gen in (a, b):
            for i in range(gen, span + 1):
                if hit[i - gen]:
                    hit[i] = 1
        self._a = a
        self._b = b
        self._delta = delta
        # everything at or beyond 2*delta belongs to the semigroup
        self._elements = tuple(i for i in range(span) if hit[i])
        self._gaps = tuple(i for i in range(1, span) if not hit[i])
        if len(self._gaps) != delta:
            raise RuntimeError(f"sieve produced {len(self._gaps)} gaps, expected {delta}")

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def delta(self) -> int:
        """Number of gaps; also the local delta invariant of the cusp."""
        return self._delta

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 when there is none (a = 1)."""
        return self._gaps[-1] if self._gaps else -1

    def contains(self, m: int) -> bool:
        if m < 0:
            return False
        if m >= 2 * self._delta:
            return True
        i = bisect_left(self._elements, m)
        return i < len(self._elements) and self._elements[i] == m

    def nth_element(self, n: int) -> int:
        """The n-th smallest element, 1-indexed: nth_element(1) = 0."""
        if n < 1:
            raise ValueError(f"index must be >= 1, got {n}")
        if n <= self._delta:
            return self._elements[n - 1]
        # beyond the conductor the elements are consecutive integers
        return self._delta + n - 1

    def elements_below(self, m: int) -> int:
        """Count of semigroup elements strictly below m."""
        if m <= 0:
            return 0
        if m >= 2 * self._delta:
            return m - self._delta
        return bisect_left(self._elements, m)

    def gaps_at_least(self, m: int) -> int:
        """Count of integers >= m outside the semigroup (negatives included)."""
        if m <= 0:
            return self._delta - m
        if m >= 2 * self._delta:
            return 0
        return self._delta - bisect_left(self._gaps, m)

    def gap_function(self) -> GapFunction:
        return GapFunction(self._delta, self._gaps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Semigroup):
            return NotImplemented
        return (self._a, self._b) == (other._a, other._b)

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __repr__(self) -> str:
        return f"Semigroup({self._a}, {self._b})"


@dataclass(frozen=True)
class GapFunction:
    """Non-increasing step function determined by (delta, drop positions).

    Evaluates to delta - m for m <= 0, to 0 for m >= 2*delta, and drops by
    exactly 1 just past each entry of gap_list in between.  Semigroup gap
    counting functions have this shape and the shape is closed under
    infimum convolution, so a (delta, gap_list) pair is all the state any
    convolution result needs.
    """

    delta: int
    gap_list: tuple[int, ...]

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError("delta must be >= 0")
        if len(self.gap_list) != self.delta:
            raise ValueError(
                f"gap_list has {len(self.gap_list)} entries, delta says {self.delta}"
            )
        prev = 0
        for g in self.gap_list:
            if g <= prev:
                raise ValueError("gap_list must be strictly increasing and >= 1")
            prev = g
        if self.gap_list and self.gap_list[-1] >= 2 * self.delta:
            raise ValueError("largest gap must be < 2*delta")

    @classmethod
    def zero(cls) -> GapFunction:
        """The gap function of the full semigroup N: identically max(0, -m)."""
        return cls(0, ())

    def __call__(self, m: int) -> int:
        if m <= 0:
            return self.delta - m
        if m >= 2 * self.delta:
            return 0
        return self.delta - bisect_left(self.gap_list, m)


def convolve(f: GapFunction, g: GapFunction) -> GapFunction:
    """Infimum convolution h(s) = min over m of f(m) + g(s - m).

    The minimum only needs m in [0, 2*f.delta]: stepping m below 0 raises
    f by exactly 1 while g falls by at most 1, and stepping m above
    2*f.delta leaves f frozen at 0 while g cannot fall, so the objective is
    non-decreasing in both escape directions.  (Unit-tested against an
    enlarged window.)
    """
    lo_span = 2 * f.delta
    total = f.delta + g.delta
    span = 2 * total
    if total == 0:
        return GapFunction.zero()
    fv = [f(m) for m in range(lo_span + 1)]
    off = lo_span  # g evaluated on [-lo_span, span]
    gv = [g(m) for m in range(-lo_span, span + 1)]
    h = [
        min(fv[m] + gv[s - m + off] for m in range(lo_span + 1))
        for s in range(span + 1)
    ]
    if h[0] != total:
        raise RuntimeError(f"convolution lost mass: h(0) = {h[0]}, expected {total}")
    drops = tuple(s for s in range(1, span) if h[s] > h[s + 1])
    if h[0] > h[1]:
        raise RuntimeError("convolution dropped at 0; inputs were not gap functions")
    return GapFunction(total, drops)


def combined_gap_value(parts: list[GapFunction], m: int) -> int:
    """Convolve all parts and evaluate at m + (sum of deltas).

    The shift recentres the convolution so that m = 0 lands on the total
    delta; values vanish for m at or beyond the sum of the deltas.
    """
    if m < 0:
        raise ValueError(f"offset must be >= 0, got {m}")
    acc = GapFunction.zero()
    for part in parts:
        acc = convolve(acc, part)
    return acc(m + acc.delta)
