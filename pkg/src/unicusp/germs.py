"""Local germ computations on two plane-curve models, done in exact
truncated power series over the rationals.

The node model is the parametrization x(t) = t/(1 + t^3),
y(t) = t^2/(1 + t^3), which satisfies x^3 + y^3 - x*y = 0 identically.
`germ_sequence` runs the polynomial recursion

    f_1 = y,  f_2 = y - x^2,
    f_n = c_{n-2} f_{n-1} - c_{n-1} x y f_{n-2},

where c_n is the leading coefficient of f_n along the parametrization.
Each f_n must vanish to order exactly 3n - 1 at the node, carry a nonzero
y coefficient, have total degree n, and be supported on monomials
x^i y^j with i + 2j == 2 (mod 3); any breach raises instead of passing
silently.

The flex model is x(t) = t, y(t) = t^3/(1 - t^2), where
x^3 + x^2 y - y = 0 identically, so `flex_check` confirms that
y^d + x^3 + x^2 y - y collapses to y^d on the nose, with valuation
exactly 3d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PowerSeries:
    """Power series in t truncated at a fixed order (exclusive).

    coeffs[k] is the coefficient of t^k; len(coeffs) is the truncation
    order.  Mixed-order arithmetic truncates to the shorter operand.
    """

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls(tuple([Fraction(0)] * order))

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Fraction | int = 1) -> "PowerSeries":
        if not 0 <= k < order:
            raise ValueError(f"exponent {k} outside truncation order {order}")
        c = [Fraction(0)] * order
        c[k] = Fraction(coeff)
        return cls(tuple(c))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n)))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            out = [Fraction(0)] * n
            for i, ci in enumerate(self.coeffs[:n]):
                if ci == 0:
                    continue
                for j in range(n - i):
                    cj = other.coeffs[j]
                    if cj:
                        out[i + j] += ci * cj
            return PowerSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return PowerSeries(tuple(c * f for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            raise ValueError(f"negative power {k}; invert explicitly instead")
        acc = PowerSeries.monomial(0, self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def reciprocal(self) -> "PowerSeries":
        if not self.coeffs or self.coeffs[0] == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [Fraction(0)] * self.order
        out[0] = inv0
        for k in range(1, self.order):
            s = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -inv0 * s
        return PowerSeries(tuple(out))

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None


def node_parametrization(order: int) -> tuple[PowerSeries, PowerSeries]:
    """Alternating expansions of t/(1 + t^3) and t^2/(1 + t^3)."""
    if order < 3:
        raise ValueError(f"order must be >= 3, got {order}")
    xs = [Fraction(0)] * order
    ys = [Fraction(0)] * order
    sign = 1
    for k in range(0, order, 3):
        if k + 1 < order:
            xs[k + 1] = Fraction(sign)
        if k + 2 < order:
            ys[k + 2] = Fraction(sign)
        sign = -sign
    return (PowerSeries(tuple(xs)), PowerSeries(tuple(ys)))


Poly = dict[tuple[int, int], Fraction]


def _poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for key, c in q.items():
        s = out.get(key, Fraction(0)) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _poly_scale(p: Poly, c: Fraction) -> Poly:
    if c == 0:
        return {}
    return {key: v * c for key, v in p.items()}


def _poly_shift_xy(p: Poly) -> Poly:
    """Multiply by the monomial x*y."""
    return {(i + 1, j + 1): c for (i, j), c in p.items()}


def _poly_eval(p: Poly, x: PowerSeries, y: PowerSeries) -> PowerSeries:
    order = min(x.order, y.order)
    xpow = {0: PowerSeries.monomial(0, order)}
    ypow = {0: PowerSeries.monomial(0, order)}

    def power(cache, base, k):
        while len(cache) <= k:
            cache[len(cache)] = cache[len(cache) - 1] * base
        return cache[k]

    acc = PowerSeries.zero(order)
    for (i, j), c in sorted(p.items()):
        acc = acc + c * (power(xpow, x, i) * power(ypow, y, j))
    return acc


@dataclass(frozen=True)
class GermRecord:
    """One step of the node recursion: the polynomial and its local data."""

    n: int
    polynomial: tuple[tuple[tuple[int, int], Fraction], ...]
    c: Fraction
    valuation: int


def _check_invariants(n: int, poly: Poly) -> None:
    degree = max(i + j for i, j in poly)
    if degree != n:
        raise RuntimeError(f"step {n}: total degree {degree} != {n}")
    if poly.get((0, 1), Fraction(0)) == 0:
        raise RuntimeError(f"step {n}: vanishing y coefficient")
    bad = [(i, j) for i, j in poly if (i + 2 * j) % 3 != 2]
    if bad:
        raise RuntimeError(f"step {n}: support off the residue class: {sorted(bad)}")


def germ_sequence(n_max: int, order: int | None = None) -> list[GermRecord]:
    """Run the node recursion up to f_{n_max} and certify each step.

    The truncation order defaults to 3*n_max + 3, enough to see past every
    expected valuation 3n - 1.  Raises RuntimeError the moment a step
    vanishes to the wrong order or breaks a structural invariant.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if order is None:
        order = 3 * n_max + 3
    if order < 3 * n_max + 3:
        raise ValueError(f"order {order} too small; need at least {3 * n_max + 3}")
    x, y = node_parametrization(order)
    polys: list[Poly] = [
        {(0, 1): Fraction(1)},
        {(0, 1): Fraction(1), (2, 0): Fraction(-1)},
    ]
    cs: list[Fraction] = []
    records: list[GermRecord] = []
    for n in range(1, n_max + 1):
        if n > 2:
            prev, prev2 = polys[-1], polys[-2]
            poly = _poly_add(
                _poly_scale(prev, cs[-2]),
                _poly_scale(_poly_shift_xy(prev2), -cs[-1]),
            )
            polys.append(poly)
        poly = polys[n - 1]
        _check_invariants(n, poly)
        series = _poly_eval(poly, x, y)
        val = series.valuation()
        if val != 3 * n - 1:
            raise RuntimeError(f"step {n}: valuation {val}, expected {3 * n - 1}")
        c = series.coeffs[val]
        if c == 0:
            raise RuntimeError(f"step {n}: zero leading coefficient")
        cs.append(c)
        records.append(
            GermRecord(
                n=n,
                polynomial=tuple(sorted(poly.items())),
                c=c,
                valuation=val,
            )
        )
    return records


@dataclass(frozen=True)
class FlexReport:
    """Outcome of the flex-model collapse check for one exponent d."""

    d: int
    valuation: int
    collapse_exact: bool  # x^3 + x^2 y - y vanished identically


def flex_check(d: int, order: int | None = None) -> FlexReport:
    """Certify that y^d + x^3 + x^2 y - y has valuation exactly 3d.

    Along x = t, y = t^3/(1 - t^2) the tail x^3 + x^2 y - y cancels to
    zero, so the whole germ is y^d with valuation 3d on the nose.
    """
    if d <= 2:
        raise ValueError(f"d must be > 2, got {d}")
    if order is None:
        order = 3 * d + 3
    if order < 3 * d + 3:
        raise ValueError(f"order {order} too small; need at least {3 * d + 3}")
    x = PowerSeries.monomial(1, order)
    one = PowerSeries.monomial(0, order)
    y = PowerSeries.monomial(3, order) * (one - PowerSeries.monomial(2, order)).reciprocal()
    tail = x ** 3 + x ** 2 * y - y
    collapse = tail.valuation() is None
    germ = y ** d + tail
    val = germ.valuation()
    if val != 3 * d:
        raise RuntimeError(f"flex germ at d={d}: valuation {val}, expected {3 * d}")
    return FlexReport(d=d, valuation=val, collapse_exact=collapse)
