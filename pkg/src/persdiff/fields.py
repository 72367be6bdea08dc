"""Field specifications and exact scalar arithmetic.

Two coefficient kinds are supported: prime fields GF(p), stored as int64
residues, and the rationals, stored as ``fractions.Fraction`` objects in
object-dtype arrays.  Everything is exact; nothing here touches floating
point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Residue products must stay inside int64.
_MAX_CHARACTERISTIC = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class InvalidField(ValueError):
    """Field description does not name a supported field."""


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) for a prime p, or the rationals (characteristic 0)."""

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "prime-field":
            p = self.characteristic
            if not isinstance(p, int) or not _is_prime(p):
                raise InvalidField(f"characteristic {self.characteristic!r} is not prime")
            if p >= _MAX_CHARACTERISTIC:
                raise InvalidField(f"characteristic {p} too large (must be < 2^31)")
        elif self.kind == "rational":
            if self.characteristic != 0:
                raise InvalidField("the rational field has characteristic 0")
        else:
            raise InvalidField(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls("prime-field", p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def parse(cls, token: str) -> "FieldSpec":
        """Parse a field token: ``gf2``, ``gf:p``, or ``rational``."""
        t = str(token).strip().lower()
        if t == "gf2":
            return cls.gf(2)
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise InvalidField(f"bad field token {token!r}") from None
            return cls.gf(p)
        if t == "rational":
            return cls.rationals()
        raise InvalidField(f"bad field token {token!r}")

    def token(self) -> str:
        if self.is_prime_field:
            return "gf2" if self.characteristic == 2 else f"gf:{self.characteristic}"
        return "rational"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime-field"

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        if self.is_prime_field:
            return np.zeros((rows, cols), dtype=np.int64)
        a = np.empty((rows, cols), dtype=object)
        a[...] = Fraction(0)
        return a

    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def coerce(self, x):
        """Coerce a number (or an ``a/b`` string) to a field scalar."""
        if self.is_prime_field:
            return int(x) % self.characteristic
        if isinstance(x, bool):
            raise InvalidField(f"bad coefficient {x!r}")
        if isinstance(x, float):
            raise InvalidField("floating point coefficients are not accepted; use 'a/b' strings")
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def normalize(self, a: np.ndarray) -> np.ndarray:
        """Reduce an array back into canonical residues (no-op over Q)."""
        if self.is_prime_field:
            return a % self.characteristic
        return a

    def inv(self, x):
        if self.is_prime_field:
            xi = int(x) % self.characteristic
            if xi == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(xi, self.characteristic - 2, self.characteristic)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / x

    def neg(self, x):
        if self.is_prime_field:
            return (-int(x)) % self.characteristic
        return -x
