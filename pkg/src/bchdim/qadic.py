"""Base-q digit arithmetic on the integers 0..q^m - 1.

Digit vectors are tuples stored most-significant first, so ``d[0]`` is the
coefficient of ``q**(m-1)`` and ``d[-1]`` the coefficient of ``1``.  Use
:func:`digit` to read a coefficient by its exponent.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Sequence, Tuple

from .errors import DomainError

DigitVector = Tuple[int, ...]

INT_LIMIT = 2**63


def checked_pow(base: int, exp: int, limit: int = INT_LIMIT) -> int:
    """``base**exp`` by repeated multiplication, refusing to reach ``limit``."""
    out = 1
    for _ in range(exp):
        out *= base
        if out >= limit:
            raise OverflowError(f"{base}**{exp} does not fit below 2**63")
    return out


@dataclass(frozen=True)
class CodeIndex:
    """Ambient parameters of a primitive BCH code of length ``q**m - 1``."""

    q: int
    m: int
    n: int = field(init=False)
    h: int = field(init=False)

    def __post_init__(self):
        if self.q < 2:
            raise DomainError(f"q must be >= 2, got {self.q}")
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        try:
            qm = checked_pow(self.q, self.m, INT_LIMIT + 1)
        except OverflowError:
            raise DomainError(f"q^m - 1 = {self.q}^{self.m} - 1 exceeds 2^63") from None
        if qm - 1 >= INT_LIMIT:
            raise DomainError(f"q^m - 1 = {self.q}^{self.m} - 1 exceeds 2^63")
        object.__setattr__(self, "n", qm - 1)
        object.__setattr__(self, "h", self.m // 2)

    @property
    def odd(self) -> bool:
        return self.m % 2 == 1

    @property
    def max_k(self) -> int:
        """Largest admissible k, i.e. floor((2m-1)/3) - h."""
        return (2 * self.m - 1) // 3 - self.h

    @property
    def limit(self) -> int:
        """Upper end q^(floor((2m-1)/3)+1) of the closed-form range."""
        return self.q ** ((2 * self.m - 1) // 3 + 1)

    def pow(self, e: int) -> int:
        return self.q**e


def digit(d: Sequence[int], ell: int) -> int:
    """Coefficient of ``q**ell`` in a most-significant-first digit vector."""
    return d[len(d) - 1 - ell]


def to_digits(a: int, idx: CodeIndex) -> DigitVector:
    a = operator.index(a)
    if not 0 <= a <= idx.n:
        raise DomainError(f"{a} outside [0, {idx.n}]")
    out = [0] * idx.m
    for pos in range(idx.m - 1, -1, -1):
        a, out[pos] = divmod(a, idx.q)
    return tuple(out)


def from_digits(d: Sequence[int], idx: CodeIndex) -> int:
    if len(d) != idx.m:
        raise DomainError(f"digit vector has length {len(d)}, expected {idx.m}")
    a = 0
    for x in d:
        if not 0 <= x < idx.q:
            raise DomainError(f"digit {x} outside [0, {idx.q - 1}]")
        a = a * idx.q + x
    return a


def rotate(d: Sequence[int], t: int) -> DigitVector:
    """Cyclic left shift by ``t``: the digit image of ``a * q**t mod n``."""
    m = len(d)
    if not 0 <= t < m:
        raise DomainError(f"rotation {t} outside [0, {m})")
    return tuple(d[t:]) + tuple(d[:t])


def lex_compare(u: Sequence[int], w: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``u`` is lexicographically below, equal to or above ``w``."""
    if len(u) != len(w):
        raise ValueError(f"length mismatch: {len(u)} != {len(w)}")
    for x, y in zip(u, w):
        if x != y:
            return -1 if x < y else 1
    return 0


def nondiv(a: int, q: int) -> int:
    """Number of integers in [1, a-1] not divisible by q."""
    if a <= 1:
        return 0
    return (a - 1) - (a - 1) // q


def count_nondiv(a: int, idx: CodeIndex) -> int:
    """The counting function N(a) for the alphabet size of ``idx``.

    Integer arguments only; a real argument x + 1 should be passed as
    floor(x) + 1, which gives the same count.
    """
    a = operator.index(a)
    if a < 0:
        raise DomainError(f"N is defined for a >= 0, got {a}")
    return nondiv(a, idx.q)


def ndigits(a: int, q: int) -> int:
    """Length of the base-q expansion of ``a >= 1`` (no logarithms involved)."""
    if a < 1:
        raise DomainError(f"ndigits needs a >= 1, got {a}")
    count = 0
    while a:
        a //= q
        count += 1
    return count


def window(a: int, q: int, lo: int, hi: int, shift: int = 0) -> int:
    """Sum of a_ell * q**(ell - shift) over lo <= ell <= hi, for shift <= lo.

    ``a_ell`` are the base-q digits of ``a``.  An empty range gives 0.
    """
    if hi < lo:
        return 0
    if lo < 0:
        raise ValueError("window starts below digit 0")
    if shift > lo:
        raise ValueError("window shift would produce fractional powers")
    return (a // q**lo) % q ** (hi - lo + 1) * q ** (lo - shift)
