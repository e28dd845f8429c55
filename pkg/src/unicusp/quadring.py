"""Arithmetic in Z[phi], the ring of integers of Q(sqrt5), and the Pell
equation x^2 - 5y^2 = n.

Elements are stored as (u + v*sqrt5)/2 with u and v of equal parity.  The
golden ratio phi = (1 + sqrt5)/2 is a fundamental unit of norm -1, so the
units of norm +1 are exactly +-phi^(2h); orbits under that action are what
`canonical` collapses.

Solvability of x^2 - 5y^2 = n is a local condition: it holds iff every
prime factor of n congruent to +-2 mod 5 occurs to an even power.  Coprime
solutions (gcd(x, y) = 1) are rarer: they exist iff n = a * n' with
a in {1, 4, 5, 20} and n' a product of primes congruent to +-1 mod 5; the
solutions then fall into exactly 2^(omega(n') - 1) orbits (one when n' = 1),
generated by fixing one fundamental solution per a-part and per prime and
flipping independent conjugation choices.

Factorisation is plain trial division; fine up to roughly 10^12, far above
anything the candidate searches need.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


@dataclass(frozen=True)
class QuadInt:
    """(u + v*sqrt5)/2 with u == v (mod 2)."""

    u: int
    v: int

    def __post_init__(self):
        if (self.u - self.v) % 2 != 0:
            raise ValueError(f"u and v must share parity, got ({self.u}, {self.v})")

    @classmethod
    def from_int(cls, n: int) -> QuadInt:
        return cls(2 * n, 0)

    @classmethod
    def from_sqrt5(cls, x: int, y: int) -> QuadInt:
        """The element x + y*sqrt5."""
        return cls(2 * x, 2 * y)

    def __add__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.u + other.u, self.v + other.v)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.u - other.u, self.v - other.v)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.u, -self.v)

    def __mul__(self, other):
        if isinstance(other, QuadInt):
            return QuadInt(
                (self.u * other.u + 5 * self.v * other.v) // 2,
                (self.u * other.v + self.v * other.u) // 2,
            )
        if isinstance(other, int):
            return QuadInt(self.u * other, self.v * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadInt:
        if k < 0:
            n = self.norm()
            if n not in (1, -1):
                raise ValueError(f"negative powers need a unit, norm is {n}")
            inv = self.conjugate() if n == 1 else -self.conjugate()
            return inv ** (-k)
        out = QuadInt.from_int(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> QuadInt:
        return QuadInt(self.u, -self.v)

    def norm(self) -> int:
        return (self.u * self.u - 5 * self.v * self.v) // 4

    def as_sqrt5(self) -> tuple[int, int] | None:
        """Coordinates (x, y) with self = x + y*sqrt5, or None if half-integral."""
        if self.u % 2 or self.v % 2:
            return None
        return self.u // 2, self.v // 2

    def __str__(self) -> str:
        if self.u % 2 == 0 and self.v % 2 == 0:
            return f"{self.u // 2}{self.v // 2:+}*sqrt5"
        return f"({self.u}{self.v:+}*sqrt5)/2"


PHI = QuadInt(1, 1)
_PHI2 = QuadInt(3, 1)
_PHI2_INV = QuadInt(3, -1)  # norm(phi^2) = 1, so the inverse is the conjugate


def phi_power(k: int) -> QuadInt:
    """phi^k for any integer k (phi has norm -1, so phi^-1 = -conj(phi))."""
    return PHI ** k


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of |n| by trial division (intended for |n| <= ~1e12)."""
    n = abs(n)
    if n < 1:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def has_solution(n: int) -> bool:
    """Whether x^2 - 5y^2 = n has any integer solution."""
    if n == 0:
        raise ValueError("n must be nonzero")
    return all(e % 2 == 0 for p, e in factorize(n).items() if p % 5 in (2, 3))


def fundamental_prime(p: int) -> QuadInt:
    """Smallest-y solution of x^2 - 5y^2 = p for a split or ramified prime."""
    if p < 2 or any(p % q == 0 for q in range(2, isqrt(p) + 1)):
        raise ValueError(f"{p} is not prime")
    if p != 5 and p % 5 in (2, 3):
        raise ValueError(f"{p} is congruent to +-2 mod 5; no solution exists")
    for y in range(p + 1):
        x2 = p + 5 * y * y
        x = isqrt(x2)
        if x * x == x2:
            return QuadInt.from_sqrt5(x, y)
    raise RuntimeError(f"no fundamental solution found for p={p} with y <= {p}")


@dataclass(frozen=True)
class PellDecomposition:
    """Shape certificate n = a_part * n_prime for coprime solvability."""

    n: int
    a_part: int          # 1, 4, 5 or 20
    n_prime: int         # product of primes congruent to +-1 mod 5
    distinct_primes: int  # omega(n_prime)
    class_count: int     # number of solution orbits: 2^(omega - 1), or 1


def coprime_decompose(n: int) -> PellDecomposition | None:
    """Certificate that x^2 - 5y^2 = n admits coprime solutions, else None.

    Absent exactly when 8 | n, 25 | n, or some prime +-2 mod 5 divides n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fac = factorize(n)
    e2, e5 = fac.get(2, 0), fac.get(5, 0)
    if e2 not in (0, 2) or e5 > 1:
        return None
    rest = {p: e for p, e in fac.items() if p not in (2, 5)}
    if any(p % 5 in (2, 3) for p in rest):
        return None
    a_part = (4 if e2 else 1) * (5 if e5 else 1)
    omega = len(rest)
    return PellDecomposition(
        n=n,
        a_part=a_part,
        n_prime=n // a_part,
        distinct_primes=omega,
        class_count=1 if omega == 0 else 2 ** (omega - 1),
    )


_A_PART_ELEMENT = {
    1: QuadInt.from_int(1),
    4: QuadInt.from_sqrt5(3, 1),
    5: QuadInt.from_sqrt5(5, 2),
    20: QuadInt.from_sqrt5(5, 1),
}


def generating_set(n: int) -> list[QuadInt]:
    """One canonical element per orbit of coprime solutions of x^2 - 5y^2 = n.

    Built as a_part element times alpha_p^e for each prime power of n_prime,
    with a free conjugation choice on every prime after the first; the first
    prime's choice is fixed to kill the global conjugation symmetry.
    """
    dec = coprime_decompose(n)
    if dec is None:
        raise ValueError(f"n={n} admits no coprime solutions")
    acc = [_A_PART_ELEMENT[dec.a_part]]
    fac = factorize(dec.n_prime) if dec.n_prime > 1 else {}
    for idx, p in enumerate(sorted(fac)):
        alpha = fundamental_prime(p) ** fac[p]
        if idx == 0:
            acc = [z * alpha for z in acc]
        else:
            acc = [z * alpha for z in acc] + [z * alpha.conjugate() for z in acc]
    out = sorted({canonical(z) for z in acc}, key=lambda z: (z.u, z.v))
    if len(out) != dec.class_count:
        raise RuntimeError(
            f"built {len(out)} distinct orbits for n={n}, expected {dec.class_count}"
        )
    for z in out:
        if z.norm() != n:
            raise RuntimeError(f"generating element {z} has norm {z.norm()}, wanted {n}")
    return out


def canonical(z: QuadInt) -> QuadInt:
    """Distinguished representative of the orbit {+-phi^(2h) * z, conjugates}.

    |v| along the phi^2-orbit is unimodal (a difference of two real
    exponentials has one turning point), so a greedy slide finds its
    minimum; ties are broken by v >= 0 first, then u > 0.
    """
    if z.norm() == 0:
        raise ValueError("zero has no canonical representative")
    w = z
    for step in (_PHI2, _PHI2_INV):
        while True:
            nxt = w * step
            if abs(nxt.v) < abs(w.v):
                w = nxt
            else:
                break
    plateau = [w]
    for step in (_PHI2, _PHI2_INV):
        nxt = w * step
        if abs(nxt.v) == abs(w.v) and nxt != w:
            plateau.append(nxt)
    cands: set[QuadInt] = set()
    for x in plateau:
        cands.update((x, -x, x.conjugate(), -x.conjugate()))
    best = min(cands, key=lambda t: (abs(t.v), t.v < 0, t.u <= 0, t.u, t.v))
    ties = [c for c in cands if (abs(c.v), c.v < 0, c.u <= 0) == (abs(best.v), best.v < 0, best.u <= 0)]
    if len(ties) != 1:
        raise RuntimeError(f"canonical form of {z} is ambiguous: {ties}")
    return best
