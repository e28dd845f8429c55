"""Candidate families: the Pell correspondence, Lucas-indexed series and
Cremona moves between neighbouring candidates.

A coprime pair (a, b) with a + b = 3d corresponds to the ring element
zeta = x + y*sqrt5 with x = (7b - 2a)/3 and y = b; the degree-genus
identity (d-1)(d-2) = (a-1)(b-1) + 2g then reads norm(zeta) = 4(2g - 1).
`pair_to_element` and `element_to_pair` translate back and forth, and
`orbit_candidates` sweeps the unit orbit of a fixed-norm element to list
every candidate pair it carries.

Whether any orbit element yields a pair depends on g mod 3: for
g == 0 (mod 3) both parities of the phi^2 exponent can contribute, for
g == 1 exactly one parity survives the 3 | y test, and for g == 2 nothing
does (3 divides 2g - 1, forcing 3 | y throughout).

For each k >= 2 the bidirectional Lucas sequence L_0 = k-1, L_1 = 1,
L_{n+1} = L_n + L_{n-1} indexes two candidate ladders of genus k(k-1)/2:
(L_{4i-3}, L_{4i+1}) with degree L_{4i-1} going up, and the negated
negative-index mirror going down.  Consecutive rungs differ by the
`cremona_step` moves, which act on zeta by phi^4, phi^-4, or conjugated
phi^-12.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .quadring import QuadInt, phi_power


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    x, y = 0, 1
    for _ in range(n):
        x, y = y, x + y
    return x


class LucasSeq:
    """L_0 = k-1, L_1 = 1, L_{n+1} = L_n + L_{n-1}, indexed by all of Z.

    Values are memoised in both directions; extension holds a lock so the
    cache can be shared across threads.
    """

    def __init__(self, k: int):
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        self.k = k
        self._lock = threading.Lock()
        self._cache = {0: k - 1, 1: 1}
        self._lo = 0
        self._hi = 1

    def __call__(self, n: int) -> int:
        with self._lock:
            while self._hi < n:
                self._cache[self._hi + 1] = self._cache[self._hi] + self._cache[self._hi - 1]
                self._hi += 1
            while self._lo > n:
                self._cache[self._lo - 1] = self._cache[self._lo + 1] - self._cache[self._lo]
                self._lo -= 1
            return self._cache[n]


_lucas_registry: dict[int, LucasSeq] = {}
_registry_lock = threading.Lock()


def lucas(k: int, n: int) -> int:
    with _registry_lock:
        seq = _lucas_registry.get(k)
        if seq is None:
            seq = _lucas_registry[k] = LucasSeq(k)
    return seq(n)


@dataclass(frozen=True)
class Candidate:
    """A (genus, a, b, degree) tuple satisfying the degree-genus identity."""

    g: int
    a: int
    b: int
    d: int
    element: QuadInt | None = None
    admissible: bool | None = None

    def __post_init__(self):
        if self.a < 1 or self.a >= self.b:
            raise ValueError(f"need 1 <= a < b, got ({self.a}, {self.b})")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"pair ({self.a}, {self.b}) is not coprime")
        if self.g < 0 or self.d < 1:
            raise ValueError(f"bad genus/degree ({self.g}, {self.d})")
        lhs = (self.d - 1) * (self.d - 2)
        rhs = (self.a - 1) * (self.b - 1) + 2 * self.g
        if lhs != rhs:
            raise ValueError(
                f"degree-genus violated for {(self.a, self.b, self.d, self.g)}: "
                f"{lhs} != {rhs}"
            )
        if self.element is not None:
            expected = pair_to_element(self.a, self.b)
            if expected != self.element:
                raise ValueError(f"element {self.element} does not match pair ({self.a}, {self.b})")
            if self.element.norm() != 4 * (2 * self.g - 1):
                raise ValueError(
                    f"element norm {self.element.norm()} != 4*(2g-1) = {4 * (2 * self.g - 1)}"
                )

    @property
    def on_3d_line(self) -> bool:
        return self.a + self.b == 3 * self.d

    def key(self) -> tuple[int, int, int]:
        return (self.d, self.a, self.b)


def pair_to_element(a: int, b: int) -> QuadInt | None:
    """zeta = (7b - 2a)/3 + b*sqrt5, or None when 3 does not divide a + b."""
    if (a + b) % 3 != 0:
        return None
    return QuadInt.from_sqrt5((7 * b - 2 * a) // 3, b)


def element_to_pair(z: QuadInt, genus: int) -> Candidate | None:
    """Invert the correspondence, trying z, -z and both conjugates.

    Requires norm(z) = 4(2*genus - 1).  A variant x + y*sqrt5 yields a pair
    only when x, y > 0, gcd(x, y) is 1 or 2, 3 does not divide y, and the
    recovered (a, b) is a valid coprime pair; for positive norm at most one
    variant can win, which is asserted.
    """
    target = 4 * (2 * genus - 1)
    if z.norm() != target:
        raise ValueError(f"norm {z.norm()} does not match 4*(2g-1) = {target}")
    found: Candidate | None = None
    for w in (z, -z, z.conjugate(), -z.conjugate()):
        coords = w.as_sqrt5()
        if coords is None:
            # odd parity forces an odd norm; 4(2g-1) is even
            continue
        x, y = coords
        cand = _pair_from_coords(x, y, genus)
        if cand is None:
            continue
        if found is not None and target > 0:
            raise RuntimeError(f"two variants of {z} produced pairs: {found}, {cand}")
        if found is None:
            found = cand
    return found


def _pair_from_coords(x: int, y: int, genus: int) -> Candidate | None:
    if x <= 0 or y <= 0 or y % 3 == 0:
        return None
    common = gcd(x, y)
    if common == 1:
        # coprime coordinates are both odd here, so the halving is exact
        a, b = (7 * y - 3 * x) // 2, y
    elif common == 2:
        a, b = 7 * (y // 2) - 3 * (x // 2), y
    else:
        return None
    if a < 1 or a >= b or gcd(a, b) != 1:
        return None
    if (a + b) % 3 != 0:
        return None
    d = (a + b) // 3
    if d < 1 or (d - 1) * (d - 2) != (a - 1) * (b - 1) + 2 * genus:
        return None
    return Candidate(genus, a, b, d, element=QuadInt.from_sqrt5(x, y))


def orbit_candidates(z: QuadInt, genus: int, h_min: int, h_max: int) -> list[Candidate]:
    """All candidate pairs among +-phi^(2h) * z and conjugates, h_min <= h <= h_max."""
    if h_min > h_max:
        raise ValueError(f"empty exponent window [{h_min}, {h_max}]")
    seen: dict[tuple[int, int], Candidate] = {}
    for h in range(h_min, h_max + 1):
        cand = element_to_pair(z * phi_power(2 * h), genus)
        if cand is not None:
            seen.setdefault((cand.a, cand.b), cand)
    return sorted(seen.values(), key=Candidate.key)


def lucas_family(k: int, i: int) -> Candidate:
    """Ladder rung (L_{4i-3}, L_{4i+1}) of degree L_{4i-1}, genus k(k-1)/2."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if i < 2:
        raise ValueError(f"i must be >= 2, got {i}")
    return _lucas_candidate(k, 4 * i - 3, 4 * i + 1, 4 * i - 1, negate=False)


def lucas_family_neg(k: int, j: int) -> Candidate:
    """Mirror rung (-L_{-4j+1}, -L_{-4j-3}) of degree -L_{-4j-1}."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return _lucas_candidate(k, -4 * j + 1, -4 * j - 3, -4 * j - 1, negate=True)


def _lucas_candidate(k: int, ia: int, ib: int, id_: int, negate: bool) -> Candidate:
    sign = -1 if negate else 1
    a, b, d = sign * lucas(k, ia), sign * lucas(k, ib), sign * lucas(k, id_)
    g = k * (k - 1) // 2
    if a + b != 3 * d:
        raise RuntimeError(f"Lucas rung ({a}, {b}) is off the 3d line, d={d}")
    element = pair_to_element(a, b)
    # Candidate validation enforces the degree-genus identity and the norm
    # condition norm(element) = 4(2g-1), i.e. both defining equations.
    return Candidate(g, a, b, d, element=element)


_CREMONA_VARIANTS = ("1", "2a", "2b")


def cremona_step(a: int, b: int, variant: str) -> tuple[int, int]:
    """One quadratic sweep move on a pair with 3 | a + b.

    variant "1":  (a, b) -> (b, 7b - a)        zeta -> zeta * phi^4
    variant "2a": (a, b) -> (7a - b, a), b < 7a  zeta -> zeta * phi^-4
    variant "2b": (a, b) -> (b - 7a, 7b - 48a), b > 7a
                                                zeta -> conj(zeta * phi^-12)
    """
    if variant not in _CREMONA_VARIANTS:
        raise ValueError(f"variant must be one of {_CREMONA_VARIANTS}, got {variant!r}")
    if (a + b) % 3 != 0:
        raise ValueError(f"pair ({a}, {b}) is off the 3d line; a + b must be divisible by 3")
    zeta = pair_to_element(a, b)
    if variant == "1":
        out = (b, 7 * b - a)
        image = zeta * phi_power(4)
    elif variant == "2a":
        if b >= 7 * a:
            raise ValueError(f"variant 2a needs b < 7a, got ({a}, {b})")
        out = (7 * a - b, a)
        image = zeta * phi_power(-4)
    else:
        if b <= 7 * a:
            raise ValueError(f"variant 2b needs b > 7a, got ({a}, {b})")
        out = (b - 7 * a, 7 * b - 48 * a)
        image = (zeta * phi_power(-12)).conjugate()
    a2, b2 = out
    if a2 < 1 or a2 >= b2:
        raise ValueError(f"step {variant} leaves the ordered range: ({a}, {b}) -> ({a2}, {b2})")
    if pair_to_element(a2, b2) != image:
        raise RuntimeError(f"ring action mismatch on step {variant} from ({a}, {b})")
    return out


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the exact Fibonacci identity sweep plus two limit probes."""

    l_max: int
    checks: int
    failures: tuple[str, ...]
    lim_gap_lower: float  # | F_{2l-1}^2 * phi^4 - F_{2l+1}^2  -  (2/5)(phi^4 - 1) |
    lim_gap_upper: float  # | F_{2l-1}^2 - F_{2l+1}^2 * phi^-4 -  (2/5)(1 - phi^-4) |

    @property
    def all_hold(self) -> bool:
        return not self.failures


def _sqrt5_rational(digits: int = 80) -> Fraction:
    scale = 10 ** digits
    return Fraction(isqrt(5 * scale * scale), scale)


def verify_fibonacci_identities(l_max: int) -> IdentityReport:
    """Exact checks of the five Fibonacci identities behind the sector walls.

    For l in [1, l_max] (and k in [2, 2*l_max + 3] for the two running-index
    identities):

        gcd(F_{2l-1}, F_{2l+1}) = gcd(F_{2l-1}, F_{2l+3}) = 1
        F_k^2 - F_{k-2} F_{k+2} = (-1)^k
        F_{k-2} + F_{k+2} = 3 F_k
        F_{2l+3}^2 F_{2l-1}^2 - F_{2l+1}^2 (F_{2l+1}^2 + 2) = 1
        F_{2l+3}^2 + F_{2l+1}^2 - 3 F_{2l+1} F_{2l+3} = -1

    The two limit gaps are evaluated at l = l_max in exact rational
    arithmetic against a fixed-precision rational sqrt5, then reported as
    floats; a failed identity lands in `failures`, never raises.
    """
    if l_max < 2:
        raise ValueError(f"l_max must be >= 2, got {l_max}")
    fails: list[str] = []
    checks = 0
    fib = [fibonacci(n) for n in range(2 * l_max + 6)]
    for l in range(1, l_max + 1):
        f1, f2, f3 = fib[2 * l - 1], fib[2 * l + 1], fib[2 * l + 3]
        checks += 4
        if gcd(f1, f2) != 1 or gcd(f1, f3) != 1:
            fails.append(f"gcd failure at l={l}")
        if f3 * f3 * f1 * f1 - f2 * f2 * (f2 * f2 + 2) != 1:
            fails.append(f"quartic identity failure at l={l}")
        if f3 * f3 + f2 * f2 - 3 * f2 * f3 != -1:
            fails.append(f"near-unit identity failure at l={l}")
    for k in range(2, 2 * l_max + 4):
        checks += 2
        if fib[k] ** 2 - fib[k - 2] * fib[k + 2] != (-1) ** k:
            fails.append(f"determinant identity failure at k={k}")
        if fib[k - 2] + fib[k + 2] != 3 * fib[k]:
            fails.append(f"triple identity failure at k={k}")
    s5 = _sqrt5_rational()
    f1, f2 = fib[2 * l_max - 1], fib[2 * l_max + 1]
    # F^2 * phi^4 - F'^2 -> (2/5)(phi^4 - 1) = 1 + (3/5) sqrt5
    gap_lower = abs(
        (Fraction(7, 2) * f1 * f1 - f2 * f2 - 1) + (Fraction(3, 2) * f1 * f1 - Fraction(3, 5)) * s5
    )
    # F^2 - F'^2 * phi^-4 -> (2/5)(1 - phi^-4) = -1 + (3/5) sqrt5
    gap_upper = abs(
        (f1 * f1 - Fraction(7, 2) * f2 * f2 + 1) + (Fraction(3, 2) * f2 * f2 - Fraction(3, 5)) * s5
    )
    return IdentityReport(
        l_max=l_max,
        checks=checks,
        failures=tuple(fails),
        lim_gap_lower=float(gap_lower),
        lim_gap_upper=float(gap_upper),
    )
