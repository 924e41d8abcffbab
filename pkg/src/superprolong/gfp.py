"""Prime field arithmetic and multinomial coefficients mod p."""

from __future__ import annotations

from functools import lru_cache
from math import comb


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def check_modulus(p: int) -> int:
    p = int(p)
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")
    return p


class Fp:
    """An element of GF(p), stored as a canonical residue in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", check_modulus(p))
        object.__setattr__(self, "value", int(value) % self.p)

    def __setattr__(self, name, value):
        raise AttributeError("Fp is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mismatched moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Fp(self.value + b, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Fp(self.value - b, self.p)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Fp(b - self.value, self.p)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Fp(self.value * b, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inv(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * Fp(b, self.p).inv()

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Fp(b, self.p) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return Fp(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in GF({p})")
    return pow(a, p - 2, p)


@lru_cache(maxsize=None)
def _small_binom_table(p: int) -> tuple:
    # Pascal triangle mod p for digits 0..p-1
    rows = [[1]]
    for a in range(1, p):
        prev = rows[-1]
        rows.append([1] + [(prev[k - 1] + prev[k]) % p for k in range(1, a)] + [1])
    return tuple(tuple(r) for r in rows)


def binom_lucas(a: int, b: int, p: int) -> int:
    """C(a, b) mod p by Lucas' theorem on base-p digits."""
    if b < 0 or b > a:
        return 0
    table = _small_binom_table(p) if p <= 64 else None
    out = 1
    while a or b:
        ad, bd = a % p, b % p
        if bd > ad:
            return 0
        out = out * (table[ad][bd] if table else comb(ad, bd) % p) % p
        a //= p
        b //= p
    return out


def binom_mod(top, bottom, p: int) -> int:
    """Product over indices of C(top_i, bottom_i) mod p.

    Accepts plain integers or equal-length multi-indices.
    """
    if isinstance(top, int):
        top, bottom = (top,), (bottom,)
    if len(top) != len(bottom):
        raise ValueError("multi-indices must have equal length")
    out = 1
    for a, b in zip(top, bottom):
        if b < 0 or b > a:
            raise ValueError(f"bottom index {bottom} exceeds top {top}")
        out = out * binom_lucas(a, b, p) % p
        if not out:
            return 0
    return out
