"""Exact integer arithmetic for prime-gap planning and Cayley generators.

Everything here is deterministic and free of floating point except for the
final division in ``delta_k``: prime tests use a fixed Miller-Rabin base set
that is exact below 2**64, and the argmax in ``max_delta_in_range`` compares
gap ratios by integer cross-multiplication so the winning prime never
depends on rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as _iproduct
from typing import NamedTuple

from .errors import ValidationError

# Strong-pseudoprime bases covering all n < 2**64 (Sinclair's seven-base
# set, exhaustively verified against the Feitsma-Galway pseudoprime list).
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_LIMIT = 2**63


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**63."""
    if not 0 <= n < _LIMIT:
        raise ValidationError(f"is_prime requires 0 <= n < 2**63, got {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    # n is odd and coprime to the small primes; run Miller-Rabin.
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prev_prime(k: int) -> int:
    """Largest prime strictly below k; requires k >= 3."""
    if k < 3:
        raise ValidationError(f"no prime below {k}")
    if k == 3:
        return 2
    n = k - 1
    if n % 2 == 0:
        if n == 2:
            return 2
        n -= 1
    while n >= 3:
        if is_prime(n):
            return n
        n -= 2
    return 2


def next_prime(p: int) -> int:
    """Smallest prime strictly above p; requires p >= 2."""
    if p < 2:
        raise ValidationError(f"next_prime requires p >= 2, got {p}")
    if p == 2:
        return 3
    n = p + 1 if p % 2 == 0 else p + 2
    while not is_prime(n):
        n += 2
    return n


def delta_k(k: int) -> float:
    """Normalized prime gap (p' - p) / sqrt(p) at p = prev_prime(k)."""
    p = prev_prime(k)
    return (next_prime(p) - p) / math.sqrt(p)


def max_delta_in_range(lo: int, hi: int) -> tuple[float, int]:
    """Maximum of delta_k over k in [lo, hi], with the smallest witness k.

    delta_k is constant for k in (p, p'], so it suffices to walk the primes
    p in [prev_prime(lo), prev_prime(hi)].  The argmax compares
    gap/sqrt(p) > gap'/sqrt(p') via gap^2 * p' > gap'^2 * p exactly.
    """
    if not 3 <= lo <= hi:
        raise ValidationError(f"need 3 <= lo <= hi, got [{lo}, {hi}]")
    p = prev_prime(lo)
    best_p = best_gap = 0
    while p < hi:
        gap = next_prime(p) - p
        if best_p == 0 or gap * gap * best_p > best_gap * best_gap * p:
            best_p, best_gap = p, gap
        p += gap
    witness = max(lo, best_p + 1)
    return best_gap / math.sqrt(best_p), witness


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a|q) in {-1, 0, +1} for an odd prime q."""
    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise ValidationError(f"legendre requires an odd prime modulus, got {q}")
    a %= q
    if a == 0:
        return 0
    t = pow(a, (q - 1) // 2, q)
    return 1 if t == 1 else -1


def sqrt_mod(a: int, q: int) -> int:
    """Smaller square root of a modulo an odd prime q (Tonelli-Shanks).

    Returns x with x^2 = a (mod q) and x <= q - x; raises if a is a
    non-residue.
    """
    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise ValidationError(f"sqrt_mod requires an odd prime modulus, got {q}")
    a %= q
    if a == 0:
        return 0
    if legendre(a, q) != 1:
        raise ValidationError(f"{a} is not a quadratic residue mod {q}")
    if q % 4 == 3:
        x = pow(a, (q + 1) // 4, q)
        return min(x, q - x)
    # Tonelli-Shanks: write q - 1 = s * 2^e with s odd.
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    # Any non-residue serves as the 2^e-th root generator.
    z = 2
    while legendre(z, q) != -1:
        z += 1
    g = pow(z, s, q)
    x = pow(a, (s + 1) // 2, q)
    b = pow(a, s, q)
    r = e
    while b != 1:
        # Find least m with b^(2^m) = 1; it satisfies 0 < m < r.
        m, t = 0, b
        while t != 1:
            t = t * t % q
            m += 1
        gs = pow(g, 1 << (r - m - 1), q)
        x = x * gs % q
        g = gs * gs % q
        b = b * g % q
        r = m
    return min(x, q - x)


class FourSquareTuple(NamedTuple):
    """Integer solution of a0^2 + a1^2 + a2^2 + a3^2 = p with a0 odd > 0."""

    a0: int
    a1: int
    a2: int
    a3: int


def four_square_generators(p: int) -> list[FourSquareTuple]:
    """All four-square representations of p with a0 odd positive, a1..a3 even.

    For a prime p = 1 (mod 4) there are exactly p + 1 such tuples (Jacobi's
    four-square theorem restricted to this parity class); they index the
    generators of the degree-(p+1) Cayley graphs built downstream.  Returned
    in lexicographic order.
    """
    if p < 5 or p % 4 != 1 or not is_prime(p):
        raise ValidationError(f"need a prime p = 1 (mod 4) with p >= 5, got {p}")
    lim = math.isqrt(p)
    found: set[FourSquareTuple] = set()
    for a0 in range(1, lim + 1, 2):
        r0 = p - a0 * a0
        for a1 in range(0, lim + 1, 2):
            r1 = r0 - a1 * a1
            if r1 < 0:
                break
            for a2 in range(0, lim + 1, 2):
                r2 = r1 - a2 * a2
                if r2 < 0:
                    break
                a3 = math.isqrt(r2)
                if a3 * a3 != r2 or a3 % 2 != 0:
                    continue
                signs = [(v, -v) if v else (0,) for v in (a1, a2, a3)]
                for s1, s2, s3 in _iproduct(*signs):
                    found.add(FourSquareTuple(a0, s1, s2, s3))
    tuples = sorted(found)
    if len(tuples) != p + 1:
        raise AssertionError(
            f"four-square count for p={p} is {len(tuples)}, expected {p + 1}"
        )
    return tuples


@dataclass(frozen=True)
class PrimePlan:
    """Prime-gap data behind a target regularity k.

    p is the largest prime below k, p_next the one after it, increments the
    number of degree bumps needed to lift a (p+1)-regular base to k, and
    delta the normalized gap (p_next - p) / sqrt(p).
    """

    k: int
    p: int
    p_next: int
    increments: int
    delta: float

    @classmethod
    def for_target(cls, k: int) -> "PrimePlan":
        if k < 3:
            raise ValidationError(f"regularity target must be >= 3, got {k}")
        p = prev_prime(k)
        p_next = next_prime(p)
        return cls(k=k, p=p, p_next=p_next, increments=k - p - 1,
                   delta=(p_next - p) / math.sqrt(p))
