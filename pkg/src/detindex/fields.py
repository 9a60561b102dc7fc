"""Coefficient fields: the rationals and large prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MIN_CLI_PRIME = 1 << 30  # smaller primes allowed at library level only

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (the witness set covers all n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """kind 'rationals' (characteristic 0) or 'prime_field' (characteristic p)."""

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("rationals have characteristic 0")
        elif self.kind == "prime_field":
            if self.characteristic < 2 or not is_prime(self.characteristic):
                raise ValueError("prime_field requires a prime characteristic >= 2")
        else:
            raise ValueError(f"unknown field kind: {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime_field"

    def reduce_fraction(self, q: Fraction) -> int:
        """Image of a rational in the prime field; rejects bad denominators."""
        p = self.characteristic
        if q.denominator % p == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes mod {p}")
        return q.numerator * pow(q.denominator, -1, p) % p


RATIONALS = FieldSpec("rationals")


def prime_field(p: int) -> FieldSpec:
    return FieldSpec("prime_field", p)
