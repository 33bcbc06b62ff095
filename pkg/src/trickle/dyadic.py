"""Exact dyadic rationals num / 2**exp, canonical (num odd or exp == 0)."""

from __future__ import annotations


class Dyadic:
    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            num <<= -exp
            exp = 0
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        if num == 0:
            exp = 0
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, *a):
        raise AttributeError("Dyadic is immutable")

    # -- parsing / rendering ------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        text = text.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            den = int(q)
            if den <= 0 or den & (den - 1):
                raise ValueError(f"{text!r}: denominator must be a positive power of two")
            return cls(int(p), den.bit_length() - 1)
        return cls(int(text))

    def __str__(self):
        return str(self.num) if self.exp == 0 else f"{self.num}/{1 << self.exp}"

    def __repr__(self):
        return f"Dyadic({self})"

    # -- arithmetic ----------------------------------------------------

    def _aligned(self, other):
        e = max(self.exp, other.exp)
        return self.num << (e - self.exp), other.num << (e - other.exp), e

    def __add__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        a, b, e = self._aligned(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        a, b, e = self._aligned(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        return Dyadic(other) - self

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def scaled(self, k: int) -> "Dyadic":
        """self * 2**k, exactly."""
        return Dyadic(self.num, self.exp - k)

    def double(self):
        return self.scaled(1)

    def half(self):
        return self.scaled(-1)

    @staticmethod
    def mid(a: "Dyadic", b: "Dyadic") -> "Dyadic":
        return (a + b).half()

    # -- comparisons ---------------------------------------------------

    def _cmp(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return (a > b) - (a < b)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        return isinstance(other, Dyadic) and self.num == other.num and self.exp == other.exp

    def __hash__(self):
        return hash((self.num, self.exp))

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    # -- structure -----------------------------------------------------

    @property
    def is_integer(self):
        return self.exp == 0

    def floor(self) -> int:
        return self.num >> self.exp

    def __float__(self):
        return self.num / (1 << self.exp)


def power_of_two_ratio(a: Dyadic, b: Dyadic):
    """k with a == b * 2**k, or None when a/b is not a power of two.

    Both arguments must be positive.
    """
    if a.num <= 0 or b.num <= 0:
        raise ValueError("power_of_two_ratio needs positive arguments")
    if a.num != b.num:
        return None
    return b.exp - a.exp
