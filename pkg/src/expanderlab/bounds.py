"""Explicit spectral bounds driven by prime gaps.

A k-regular graph grown from a (p+1)-regular Ramanujan base (p the largest
prime below k) by perfect-matching increments satisfies the chain

    lambda_2  <=  2*sqrt(p) + (k - p - 1)  <=  2*(1 + delta_k)*sqrt(k - 1),

with delta_k = (p' - p)/sqrt(p) the normalized prime gap at p.  The gap
models translate prime-gap theorems into lower bounds on the family's
spectral gap k - lambda_2:

    Trudgian   gap >= k*(1 - 2/(111*ln^2(k-1))) - 2*sqrt(k-1),
               unconditional for k >= 2898239;
    BHP        gap >= k - 2*(1 + k**0.025)*sqrt(k-1), built from the
               p' - p << p**0.525 prime-gap exponent, advisory because no
               explicit onset threshold is published;
    CramerRH   gap >= k - 2*(k-1)**(1/2 + r) with
               r = ln(1 + C*ln(k-1))/ln(k-1), conditional on the Riemann
               hypothesis (C tunes the constant in the conjectured gap).

All logarithms are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError
from .numtheory import delta_k, max_delta_in_range, prev_prime

# Onset of the unconditional prime-gap interval behind the Trudgian model.
TRUDGIAN_MIN_K = 2898239

# The six decades reproduced by delta_table's default run.
TABLE_RANGES = (
    (10, 100),
    (100, 1000),
    (1000, 10**4),
    (10**4, 10**5),
    (10**5, 10**6),
    (10**6, 10**7),
)


def lambda2_bound_chain(k: int, p: int | None = None) -> tuple[float, float]:
    """(intermediate, normalized) upper bounds for lambda_2 at regularity k.

    intermediate = 2*sqrt(p) + (k - p - 1) tracks the construction exactly;
    normalized = 2*(1 + delta_k)*sqrt(k - 1) restates it against the
    Ramanujan value.  intermediate <= normalized always.  p defaults to
    prev_prime(k) and is rejected if it disagrees.
    """
    if k < 3:
        raise ValidationError(f"chain bounds need k >= 3, got {k}")
    expected = prev_prime(k)
    if p is None:
        p = expected
    elif p != expected:
        raise ValidationError(
            f"p={p} is not the largest prime below k={k} (expected {expected})")
    intermediate = 2.0 * math.sqrt(p) + (k - p - 1)
    normalized = 2.0 * (1.0 + delta_k(k)) * math.sqrt(k - 1)
    return intermediate, normalized


def _check_k(k: float) -> None:
    if not k > 2:
        raise ValidationError(f"gap bounds need k > 2, got {k}")


def gap_bound_trudgian(k: float) -> float:
    """k*(1 - 2/(111*ln^2(k-1))) - 2*sqrt(k-1); meaningful for k >= 2898239."""
    _check_k(k)
    return k * (1.0 - 2.0 / (111.0 * math.log(k - 1) ** 2)) - 2.0 * math.sqrt(k - 1)


def trudgian_valid(k: float) -> bool:
    return k >= TRUDGIAN_MIN_K


def gap_bound_bhp(k: float) -> float:
    """k - 2*(1 + k**0.025)*sqrt(k - 1), from the 0.525 prime-gap exponent.

    Advisory: the underlying theorem is asymptotic, with no explicit k from
    which the inequality is guaranteed, so no validity threshold is baked
    in.  Callers that trust an onset pass it to the BoundModel instead.
    """
    _check_k(k)
    return k - 2.0 * (1.0 + k**0.025) * math.sqrt(k - 1)


def rh_exponent(k: float, c: float = 1.0) -> float:
    """r = ln(1 + c*ln(k-1)) / ln(k-1), the conditional gap exponent."""
    _check_k(k)
    if not c > 0:
        raise ValidationError(f"rh constant must be positive, got {c}")
    return math.log(1.0 + c * math.log(k - 1)) / math.log(k - 1)


def gap_bound_rh(k: float, c: float = 1.0) -> float:
    """k - 2*(k-1)**(1/2 + r) with r = rh_exponent(k, c).

    Equals k - 2*(1 + c*ln(k-1))*sqrt(k-1) exactly: (k-1)**r = 1 + c*ln(k-1)
    by construction.  Conditional on the Riemann hypothesis for every k.
    """
    r = rh_exponent(k, c)
    return k - 2.0 * (k - 1.0) ** (0.5 + r)


def _ceil2(x: float) -> float:
    return math.ceil(x * 100.0) / 100.0


def delta_table(ranges: tuple[tuple[int, int], ...] = TABLE_RANGES) -> list[dict]:
    """Worst normalized prime gap per range, ceiling-rounded to 2 decimals.

    Each row reports the exact maximum of delta_k over the range, its
    2-decimal ceiling, and the smallest k attaining it.
    """
    rows = []
    for lo, hi in ranges:
        value, witness = max_delta_in_range(lo, hi)
        rows.append({
            "lo": lo,
            "hi": hi,
            "max_delta": value,
            "delta_ceil": _ceil2(value),
            "witness_k": witness,
        })
    return rows


_KINDS = ("DeltaExact", "ChainIntermediate", "Trudgian", "BHP", "CramerRH")


@dataclass(frozen=True)
class BoundModel:
    """One named bound with its domain predicate and conditionality.

    DeltaExact and ChainIntermediate bound lambda_2 from above;
    Trudgian, BHP and CramerRH bound the spectral gap from below.
    """

    kind: str
    bhp_threshold: int | None = None
    rh_constant: float = 1.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValidationError(
                f"unknown bound kind {self.kind!r}; expected one of {_KINDS}")
        if not self.rh_constant > 0:
            raise ValidationError(
                f"rh constant must be positive, got {self.rh_constant}")

    def evaluate(self, k) -> float:
        if self.kind == "DeltaExact":
            return lambda2_bound_chain(k)[1]
        if self.kind == "ChainIntermediate":
            return lambda2_bound_chain(k)[0]
        if self.kind == "Trudgian":
            return gap_bound_trudgian(k)
        if self.kind == "BHP":
            return gap_bound_bhp(k)
        return gap_bound_rh(k, self.rh_constant)

    def is_valid(self, k) -> bool:
        """Whether the bound's own theorem covers regularity k.

        CramerRH is valid on its whole domain but remains conditional;
        BHP has no published onset, so it is valid only when the caller
        configured a threshold they trust.
        """
        if self.kind in ("DeltaExact", "ChainIntermediate"):
            return k >= 3
        if self.kind == "Trudgian":
            return trudgian_valid(k)
        if self.kind == "BHP":
            return self.bhp_threshold is not None and k >= self.bhp_threshold
        return k > 2

    @property
    def conditional(self) -> bool:
        return self.kind == "CramerRH"
