"""Closed-form dimension and Bose distance of narrow-sense primitive BCH codes.

Every function here works on exact integers.  Quantities written with a
real argument, such as N(t * q**e + 1) for negative e, are evaluated as
N(floor(t * q**e) + 1), which counts the same integers.

Functions raise :class:`ClosedFormInapplicable` when asked about parameters
outside the range the formulas cover, and :func:`bch_parameters` catches that
and falls back to the coset oracle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .cosets import oracle_bose, oracle_dimension
from .errors import ClosedFormInapplicable, DeferredToPriorWork, DomainError
from .qadic import CodeIndex, DigitVector, count_nondiv, digit, ndigits, nondiv, to_digits, window


class Source(str, enum.Enum):
    CLOSED_FORM = "ClosedForm"
    ORACLE = "Oracle"
    HYBRID = "Hybrid"


@dataclass(frozen=True)
class BchResult:
    n: int
    dimension: int
    bose: int
    source: Source
    min_distance: Optional[int] = None


@dataclass(frozen=True)
class DeltaProfile:
    """Digit data of a designed distance.

    ``k_delta``/``s_delta`` come from the expansion of delta - 1 and feed the
    dimension formulas; ``j_delta``/``r_delta``/``delta_hat`` come from the
    expansion of delta itself and feed the Bose-distance formulas.  Fields
    are None where the corresponding definition does not apply.
    """

    delta: int
    dim_digits: DigitVector
    bose_digits: DigitVector
    k_delta: Optional[int]
    s_delta: Optional[int]
    j_delta: Optional[int]
    r_delta: Optional[int]
    delta_hat: Optional[int]

    def dim_digit(self, ell: int) -> int:
        return digit(self.dim_digits, ell)

    def bose_digit(self, ell: int) -> int:
        return digit(self.bose_digits, ell)


@dataclass(frozen=True)
class NonMultiples:
    """Integers t in [lo, hi] with q not dividing t."""

    lo: int
    hi: int
    q: int

    def __len__(self) -> int:
        if self.hi < self.lo:
            return 0
        return nondiv(self.hi + 1, self.q) - nondiv(max(self.lo, 1), self.q)

    def __iter__(self) -> Iterator[int]:
        return (t for t in range(self.lo, self.hi + 1) if t % self.q)

    def __contains__(self, t) -> bool:
        return self.lo <= t <= self.hi and t % self.q != 0


def _require_closed_form_index(idx: CodeIndex):
    if idx.m < 4:
        raise ClosedFormInapplicable(f"closed forms need m >= 4, got m = {idx.m}")


def _require_delta(delta: int, idx: CodeIndex):
    if delta < 2:
        raise DomainError(f"delta must be >= 2, got {delta}")
    if delta > idx.limit:
        raise ClosedFormInapplicable(f"delta = {delta} exceeds q^(floor((2m-1)/3)+1) = {idx.limit}")


def delta_profile(delta: int, idx: CodeIndex) -> DeltaProfile:
    _require_closed_form_index(idx)
    _require_delta(delta, idx)
    h, q = idx.h, idx.q
    parity = idx.m - 2 * h
    dim_digits = to_digits(delta - 1, idx)
    bose_digits = to_digits(delta, idx)

    k = s = None
    if delta - 1 >= idx.pow(idx.m - h):
        k = ndigits(delta - 1, q) - 1 - h
        s = next((i for i in range(parity - k, k + 1) if digit(dim_digits, h + i) > 0), None)
        assert s is not None, "the leading digit of delta - 1 is nonzero"

    j = r = dhat = None
    if delta >= idx.pow(idx.m - h):
        j = ndigits(delta, q) - 1 - h
        if delta < idx.limit:
            r = next((i for i in range(parity - j, j + 1) if digit(bose_digits, h + i) > 0), None)
            assert r is not None, "the leading digit of delta is nonzero"
            lo = h - r + parity
            dhat = window(delta, q, h + r, h + j) + window(delta, q, lo, h + j, shift=lo)
    return DeltaProfile(delta, dim_digits, bose_digits, k, s, j, r, dhat)


def _need_s(p: DeltaProfile):
    if p.s_delta is None:
        raise DomainError(f"delta = {p.delta} has no s_delta (delta - 1 < q^(m-h))")


def t_set(p: DeltaProfile, i: int, idx: CodeIndex) -> NonMultiples:
    """The index set T_i(delta) as an interval filtered by q not dividing t."""
    _need_s(p)
    k, s, h, q = p.k_delta, p.s_delta, idx.h, idx.q
    lo_i = -k + 1 if idx.odd else -k
    if not lo_i <= i <= k:
        raise DomainError(f"i = {i} outside [{lo_i}, {k}]")
    d = p.delta - 1
    if i <= s:
        top = window(d, q, h + s, h + k, shift=h + i) - 1
    else:
        top = (window(d, q, h + s, h + k, shift=h + s) - 1) // q ** (i - s)
    return NonMultiples(q ** (k - i), top, q)


def mu(p: DeltaProfile, idx: CodeIndex) -> int:
    """mu(delta) for odd m, the tilde variant for even m."""
    _need_s(p)
    k, s, h, q = p.k_delta, p.s_delta, idx.h, idx.q
    d = p.delta - 1
    if idx.odd:
        return min(window(d, q, 0, h - k), window(d, q, h - s + 1, h + k, shift=h - s + 1))
    return min(window(d, q, 0, h - k - 1), window(d, q, h - s, h + k, shift=h - s))


def tau(p: DeltaProfile, idx: CodeIndex) -> int:
    if idx.odd:
        raise DomainError("tau is defined for even m")
    if p.delta <= idx.pow(idx.h):
        raise DomainError(f"tau needs delta > q^h, got {p.delta}")
    h, q, d = idx.h, idx.q, p.delta - 1
    k = ndigits(d, q) - 1 - h
    return int(p.dim_digit(h) > 0 and window(d, q, h, h + k, shift=h) <= window(d, q, 0, h - 1))


def _scaled(t: int, e: int, q: int) -> int:
    """floor(t * q**e) for any integer e."""
    return t * q**e if e >= 0 else t // q ** (-e)


def _t_sum(p: DeltaProfile, idx: CodeIndex) -> int:
    k, q = p.k_delta, idx.q
    if idx.odd:
        return sum(
            nondiv(_scaled(t, 2 * i - 1, q) + 1, q)
            for i in range(-k + 1, k + 1)
            for t in t_set(p, i, idx)
        )
    return sum(
        nondiv(_scaled(t, 2 * i, q) + 1, q) for i in range(-k, k + 1) for t in t_set(p, i, idx)
    )


def _check_parity(idx: CodeIndex, odd: bool):
    _require_closed_form_index(idx)
    if idx.odd != odd:
        raise DomainError(f"m = {idx.m} has the wrong parity")


def f_odd(delta: int, idx: CodeIndex) -> int:
    """Number of elements of S below delta, for odd m."""
    _check_parity(idx, odd=True)
    _require_delta(delta, idx)
    q = idx.q
    if delta <= idx.pow(idx.h + 1):
        return 0
    p = delta_profile(delta, idx)
    k = p.k_delta
    lead = 0 if k == 1 else (k - 1) * q ** (2 * k - 3) * (q - 1) ** 2
    return lead + nondiv(mu(p, idx) + 1, q) + _t_sum(p, idx)


def f_even(delta: int, idx: CodeIndex) -> int:
    """Number of elements of S or H below delta, for even m."""
    _check_parity(idx, odd=False)
    _require_delta(delta, idx)
    q, h = idx.q, idx.h
    if delta <= idx.pow(h):
        return 0
    p = delta_profile(delta, idx)
    n_mu = nondiv(mu(p, idx) + 1, q)
    if delta <= idx.pow(h + 1):
        dh = p.dim_digit(h)
        return (dh - 1) * dh // 2 + n_mu
    k = p.k_delta
    twice = (2 * k - 1) * q ** (2 * k - 2) * (q - 1) ** 2 + q ** (k - 1) * (q - 1)
    assert twice % 2 == 0
    return twice // 2 + n_mu + _t_sum(p, idx)


def g_even(delta: int, idx: CodeIndex) -> int:
    """Number of elements of H below delta."""
    _check_parity(idx, odd=False)
    _require_delta(delta, idx)
    q, h = idx.q, idx.h
    if delta <= idx.pow(h):
        return 0
    p = delta_profile(delta, idx)
    if delta <= idx.pow(h + 1):
        return p.dim_digit(h) - 1 + tau(p, idx)
    top = window(delta - 1, q, h, h + p.k_delta, shift=h)
    return nondiv(top, q) + tau(p, idx)


def dimension(delta: int, idx: CodeIndex) -> int:
    _require_closed_form_index(idx)
    _require_delta(delta, idx)
    n, m = idx.n, idx.m
    if idx.odd:
        return n - m * (count_nondiv(delta, idx) - f_odd(delta, idx))
    return n - m * (count_nondiv(delta, idx) - f_even(delta, idx)) - (m // 2) * g_even(delta, idx)


def _require_reduction(delta: int, b: int, idx: CodeIndex):
    if b < 2:
        raise DomainError(f"the reduction is for b >= 2, got b = {b}")
    if delta < b * (idx.q - 1) + 1:
        raise ClosedFormInapplicable(
            f"reduction inapplicable: delta = {delta} < b(q-1)+1 = {b * (idx.q - 1) + 1}"
        )


def dimension_nonnarrow(delta: int, b: int, idx: CodeIndex) -> int:
    """Dimension of the code with window starting at b, via C(delta, b) = C(b+delta-1, 1)."""
    _require_closed_form_index(idx)
    _require_reduction(delta, b, idx)
    if b + delta - 1 > idx.limit:
        raise ClosedFormInapplicable(f"b + delta - 1 = {b + delta - 1} exceeds {idx.limit}")
    return dimension(b + delta - 1, idx)


def bose_distance(delta: int, idx: CodeIndex) -> int:
    """Smallest coset leader >= delta, from the digits of delta."""
    _require_closed_form_index(idx)
    if delta < 2:
        raise DomainError(f"delta must be >= 2, got {delta}")
    if delta == idx.limit:
        raise DeferredToPriorWork(f"delta = {delta} sits exactly on the range boundary")
    if delta > idx.limit:
        raise ClosedFormInapplicable(f"delta = {delta} exceeds {idx.limit}")
    q, h = idx.q, idx.h
    if delta < idx.pow(idx.m - h):
        return delta + 1 if delta % q == 0 else delta
    p = delta_profile(delta, idx)
    j, r = p.j_delta, p.r_delta
    parity = idx.m - 2 * h
    low = window(delta, q, 0, h - j - 1 + parity)
    c_pos = h - r + parity
    high = window(delta, q, c_pos, h + j, shift=c_pos)
    bump = 1 if p.bose_digit(c_pos) != q - 1 else 2
    divisible = delta % q == 0
    if not idx.odd and r == 0:
        if low > high:
            return delta + 1 if divisible else delta
        return p.delta_hat
    if divisible:
        return delta + 1 if low >= high else p.delta_hat + bump
    return delta if low > high else p.delta_hat + bump


def bose_nonnarrow(delta: int, b: int, idx: CodeIndex) -> int:
    """Bose distance of the code with window starting at b, through the same reduction."""
    _require_closed_form_index(idx)
    _require_reduction(delta, b, idx)
    return bose_distance(b + delta - 1, idx) - b + 1


def closed_form_special(a: int, k: int, b: int, idx: CodeIndex) -> BchResult:
    """Parameters for delta = a*q^(h+k) + b straight from the special-case formulas."""
    _require_closed_form_index(idx)
    q, m, n, h = idx.q, idx.m, idx.n, idx.h
    if not 1 <= a <= q - 1:
        raise DomainError(f"a = {a} outside [1, {q - 1}]")
    kmin = 1 if idx.odd else 0
    if not kmin <= k <= idx.max_k:
        raise DomainError(f"k = {k} outside [{kmin}, {idx.max_k}]")
    bmax = q ** (h - k + 1) if idx.odd else q ** (h - k)
    if not 1 <= b <= bmax:
        raise DomainError(f"b = {b} outside [1, {bmax}]")
    delta = a * q ** (h + k) + b
    nd = count_nondiv(delta, idx)
    Q = Fraction(q)
    if idx.odd:
        shared = m * a * a * (q - 1) * Q ** (2 * k - 3) * ((q - 1) * k + 1)
        if b > a * q ** (2 * k - 1):
            bose, dim = delta, n - m * nd + shared
        else:
            bose = a * q ** (h + k) + a * q ** (2 * k - 1) + 1
            dim = n - m * a * q ** (h + k - 1) * (q - 1) - m * a * (q - 1) * Q ** (2 * k - 2) + shared
    elif k == 0:
        if b <= a:
            bose = a * q**h + a
            dim = n - m * a * q ** (h - 1) * (q - 1) + Fraction(m * (a - 1) ** 2, 2)
        else:
            bose, dim = delta, n - m * nd + Fraction(m * a * a, 2)
    else:
        shared = m * a * a * (q - 1) ** 2 * Q ** (2 * k - 2) * (k - Fraction(1, 2))
        if b > a * q ** (2 * k):
            bose = delta
            dim = shared + m * a * a * (q - 1) * q ** (2 * k - 1) + n - m * nd
        else:
            bose = a * q ** (h + k) + a * q ** (2 * k) + 1
            dim = shared + m * a * (a - 1) * (q - 1) * q ** (2 * k - 1) + n - m * a * q ** (h + k - 1) * (q - 1)
    dim = Fraction(dim)
    if dim.denominator != 1:
        raise AssertionError(f"non-integral dimension {dim} for a={a}, k={k}, b={b}")
    source = Source.CLOSED_FORM
    if bose == delta and b % q == 0:
        # delta itself is a multiple of q here, so it cannot be a leader;
        # the general digit rule gives the right answer.
        try:
            bose = bose_distance(delta, idx)
        except ClosedFormInapplicable:
            bose, source = oracle_bose(delta, idx), Source.HYBRID
    return BchResult(n, int(dim), bose, source)


def lemma_sum_N(k: int, idx: CodeIndex) -> int:
    """Closed form of the sum of N(t+1) over q^k <= t < q^(k+1)."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    q = idx.q
    if k == 0:
        return (q * q - q) // 2
    return q ** (2 * k - 1) * (q - 1) ** 2 * (q + 1) // 2


def lemma_sum_T(k: int, a: int, i: int, parity: str, idx: CodeIndex) -> int:
    """Closed form of the sum of N(t*q^e + 1) over q^(k-i) <= t < a*q^(k-i), q not dividing t.

    ``parity`` "odd" uses e = 2i - 1 with i in [-k+1, k]; "even" uses e = 2i
    with i in [-k, k].
    """
    q = idx.q
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not 1 <= a <= q:
        raise DomainError(f"a = {a} outside [1, {q}]")
    if parity == "odd":
        if not -k + 1 <= i <= k:
            raise DomainError(f"i = {i} outside [{-k + 1}, {k}]")
        if i in (k, -k + 1):
            return a * (a - 1) * (q - 1) * q ** (2 * k - 2) // 2
        return (a * a - 1) * (q - 1) ** 2 * q ** (2 * k - 3) // 2
    if parity == "even":
        if not -k <= i <= k:
            raise DomainError(f"i = {i} outside [{-k}, {k}]")
        if i in (k, -k):
            return a * (a - 1) * (q - 1) * q ** (2 * k - 1) // 2
        base = (a * a - 1) * (q - 1) ** 2 * q ** (2 * k - 2)
        if i == 0:
            return (base + (a - 1) * (q - 1) * q ** (k - 1)) // 2
        return base // 2
    raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


def direct_sum_T(k: int, a: int, i: int, parity: str, idx: CodeIndex) -> int:
    """The same sum as :func:`lemma_sum_T`, by brute force."""
    q = idx.q
    e = 2 * i - 1 if parity == "odd" else 2 * i
    lo = q ** (k - i)
    return sum(nondiv(_scaled(t, e, q) + 1, q) for t in NonMultiples(lo, a * lo - 1, q))


def direct_sum_N(k: int, idx: CodeIndex) -> int:
    q = idx.q
    return sum(nondiv(t + 1, q) for t in range(q**k, q ** (k + 1)))


def class_size_A(k: int, i: int, idx: CodeIndex) -> int:
    """Closed-form |A_k(i)| for odd m."""
    q = idx.q
    if i in (k, -k + 1):
        return q ** (2 * k - 1) * (q - 1) ** 2 // 2
    return q ** (2 * k - 3) * (q - 1) ** 3 * (q + 1) // 2


def class_size_B(k: int, i: int, idx: CodeIndex) -> int:
    """Closed-form |B_k(i)| for even m."""
    q = idx.q
    if i == 0:
        if k == 0:
            return q * (q - 1) // 2
        return (q - 1) ** 2 * (q ** (2 * k) - q ** (2 * k - 2) + q ** (k - 1)) // 2
    if i in (k, -k):
        return q ** (2 * k) * (q - 1) ** 2 // 2
    return q ** (2 * k - 2) * (q - 1) ** 3 * (q + 1) // 2


def h_slice_count(k: int, idx: CodeIndex) -> int:
    """Closed-form number of H elements in [q^(h+k), q^(h+k+1)), k >= 1."""
    return idx.q ** (k - 1) * (idx.q - 1) ** 2


def bch_parameters(q: int, m: int, delta: int, b: int = 1) -> BchResult:
    """Dimension and Bose distance, from the closed forms where they apply.

    Anything the closed forms do not cover is computed by the coset oracle,
    and ``source`` records which path produced the numbers.
    """
    idx = CodeIndex(q, m)
    if delta < 2 or b < 1 or b + delta - 2 > idx.n - 1:
        raise DomainError(f"window b={b}, delta={delta} not inside [1, {idx.n - 1}]")
    closed = 0
    try:
        dim = dimension(delta, idx) if b == 1 else dimension_nonnarrow(delta, b, idx)
        closed += 1
    except ClosedFormInapplicable:
        dim = oracle_dimension(delta, b, idx)
    try:
        bose = bose_distance(delta, idx) if b == 1 else bose_nonnarrow(delta, b, idx)
        closed += 1
    except ClosedFormInapplicable:
        bose = oracle_bose(delta, idx, b=b)
    source = (Source.ORACLE, Source.HYBRID, Source.CLOSED_FORM)[closed]
    return BchResult(idx.n, dim, bose, source)
