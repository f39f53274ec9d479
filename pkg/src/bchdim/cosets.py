"""q-cyclotomic cosets modulo n = q^m - 1.

Two kinds of code live here.  The brute-force routines (``coset_of``,
``oracle_dimension``, ``oracle_bose``, ``leader_flags``) walk orbits of
x -> x*q mod n and never look at digit patterns; they are the ground truth.
The digit-pattern routines (``is_leader``, ``in_H``, ``classify_A``,
``classify_B``) implement the structural characterisations and are checked
against the brute-force ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import DeskScaleExceeded, DomainError
from .qadic import CodeIndex, digit, lex_compare, ndigits, rotate, to_digits

ORACLE_MAX_N = 2**24


@dataclass(frozen=True)
class CosetRecord:
    representative: int
    leader: int
    size: int
    elements: Tuple[int, ...]


@dataclass(frozen=True)
class LeaderInventory:
    lo: int
    hi: int
    leaders: Tuple[int, ...]
    size_of: Dict[int, int] = field(hash=False)

    def total_size(self) -> int:
        return sum(self.size_of.values())


def _check_desk_scale(idx: CodeIndex):
    if idx.n > ORACLE_MAX_N:
        raise DeskScaleExceeded(f"n = {idx.n} exceeds the oracle limit 2^24")


def coset_of(a: int, idx: CodeIndex) -> CosetRecord:
    if not 0 <= a < idx.n:
        raise DomainError(f"{a} outside [0, {idx.n - 1}]")
    elems = [a]
    x = a * idx.q % idx.n
    while x != a:
        elems.append(x)
        x = x * idx.q % idx.n
    return CosetRecord(a, min(elems), len(elems), tuple(elems))


def is_leader(a: int, idx: CodeIndex) -> bool:
    """True iff V(a) is lexicographically minimal among its rotations."""
    if not 1 <= a < idx.n:
        raise DomainError(f"{a} outside [1, {idx.n - 1}]")
    v = to_digits(a, idx)
    return all(lex_compare(v, rotate(v, t)) <= 0 for t in range(1, idx.m))


def coset_size_thm1(a: int, idx: CodeIndex) -> int:
    """|C_a| for 1 <= a < q^(m - floor(m/3)) without walking the orbit."""
    if not 1 <= a < idx.pow(idx.m - idx.m // 3):
        raise DomainError(f"{a} outside [1, q^(m - floor(m/3)))")
    if idx.odd:
        return idx.m
    return idx.h if a * idx.pow(idx.h) % idx.n == a else idx.m


def _h_by_definition(a: int, idx: CodeIndex) -> bool:
    return is_leader(a, idx) and coset_of(a, idx).size == idx.h


def _h_by_digits(a: int, idx: CodeIndex) -> bool:
    if a < idx.pow(idx.h):
        return False
    k = ndigits(a, idx.q) - 1 - idx.h
    if not 0 <= k <= idx.max_k:
        raise DomainError(f"{a} outside the digit-form range of H")
    v = to_digits(a, idx)
    top, bottom = v[: idx.h], v[idx.h:]
    return (
        top == bottom
        and not any(bottom[: idx.h - k - 1])
        and digit(v, 0) > 0
        and digit(v, k) > 0
    )


def in_H(a: int, idx: CodeIndex, method: str = "auto") -> bool:
    """Is ``a`` a coset leader whose coset has size m/2 (even m only)?

    ``method`` selects the digit-form test ("digits"), the definition
    ("definition"), or whichever applies ("auto": digits below the
    closed-form limit, definition above).
    """
    if idx.odd:
        raise DomainError("H is only defined for even m")
    if not 1 <= a < idx.n:
        raise DomainError(f"{a} outside [1, {idx.n - 1}]")
    if method == "definition":
        return _h_by_definition(a, idx)
    if method == "digits" or (method == "auto" and a < idx.limit):
        return _h_by_digits(a, idx)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    return _h_by_definition(a, idx)


def _segment(v, hi: int, lo: int) -> Tuple[int, ...]:
    """(a_hi, ..., a_lo) read from a most-significant-first vector."""
    return tuple(digit(v, ell) for ell in range(hi, lo - 1, -1))


def _check_class_args(a: int, k: int, idx: CodeIndex, odd: bool):
    if idx.odd != odd:
        raise DomainError(f"m = {idx.m} has the wrong parity for this class")
    if idx.m < 4:
        raise DomainError("classes are defined for m >= 4")
    kmin = 1 if odd else 0
    if not kmin <= k <= idx.max_k:
        raise DomainError(f"k = {k} outside [{kmin}, {idx.max_k}]")
    lo = idx.pow(idx.h + k)
    if not lo <= a < lo * idx.q:
        raise DomainError(f"{a} outside [q^(h+k), q^(h+k+1))")


def member_A(a: int, k: int, i: int, idx: CodeIndex) -> bool:
    """Membership of ``a`` in A_k(i) (odd m), checked condition by condition."""
    _check_class_args(a, k, idx, odd=True)
    if not -k + 1 <= i <= k:
        raise DomainError(f"i = {i} outside [{-k + 1}, {k}]")
    h = idx.h
    v = to_digits(a, idx)
    if digit(v, h + i) == 0 or digit(v, 0) == 0:
        return False
    if _segment(v, k + i - 1, 0) > _segment(v, h + k, h - i + 1):
        return False
    return not any(digit(v, ell) for ell in range(k + i, h + i))


def member_B(a: int, k: int, i: int, idx: CodeIndex) -> bool:
    """Membership of ``a`` in B_k(i) (even m)."""
    _check_class_args(a, k, idx, odd=False)
    if not -k <= i <= k:
        raise DomainError(f"i = {i} outside [{-k}, {k}]")
    h = idx.h
    v = to_digits(a, idx)
    if digit(v, h + i) == 0 or digit(v, 0) == 0:
        return False
    if _segment(v, k + i, 0) > _segment(v, h + k, h - i):
        return False
    return not any(digit(v, ell) for ell in range(k + i + 1, h + i))


def _first_positive(a: int, idx: CodeIndex, lo: int, hi: int) -> int:
    v = to_digits(a, idx)
    for i in range(lo, hi + 1):
        if digit(v, idx.h + i) > 0:
            return i
    raise AssertionError("leading digit a_(h+k) must be positive")


def classify_A(a: int, k: int, idx: CodeIndex) -> Optional[int]:
    """The i with a in A_k(i), or None when a lies in no class."""
    _check_class_args(a, k, idx, odd=True)
    i = _first_positive(a, idx, -k + 1, k)
    return i if member_A(a, k, i, idx) else None


def classify_B(a: int, k: int, idx: CodeIndex) -> Optional[int]:
    _check_class_args(a, k, idx, odd=False)
    i = _first_positive(a, idx, -k, k)
    return i if member_B(a, k, i, idx) else None


def enumerate_S(lo: int, hi: int, idx: CodeIndex) -> List[int]:
    """Integers in [lo, hi] not divisible by q that are not coset leaders."""
    if not 1 <= lo <= hi <= idx.n - 1:
        raise DomainError(f"[{lo}, {hi}] not inside [1, {idx.n - 1}]")
    return [a for a in range(lo, hi + 1) if a % idx.q and not is_leader(a, idx)]


def leader_inventory(lo: int, hi: int, idx: CodeIndex) -> LeaderInventory:
    if not 1 <= lo <= hi <= idx.n - 1:
        raise DomainError(f"[{lo}, {hi}] not inside [1, {idx.n - 1}]")
    leaders = tuple(a for a in range(lo, hi + 1) if is_leader(a, idx))
    return LeaderInventory(lo, hi, leaders, {a: coset_of(a, idx).size for a in leaders})


def _union_size(marks: bytearray, a: int, idx: CodeIndex) -> int:
    if marks[a]:
        return 0
    added = 0
    x = a
    while not marks[x]:
        marks[x] = 1
        added += 1
        x = x * idx.q % idx.n
    return added


def oracle_dimension(delta: int, b: int, idx: CodeIndex) -> int:
    """n minus the size of the union of C_b, ..., C_(b+delta-2), by explicit marking."""
    _check_desk_scale(idx)
    if b < 1 or delta < 2 or b + delta - 2 > idx.n - 1:
        raise DomainError(f"window b={b}, delta={delta} not inside [1, {idx.n - 1}]")
    marks = bytearray(idx.n)
    covered = 0
    for a in range(b, b + delta - 1):
        covered += _union_size(marks, a, idx)
    return idx.n - covered


def oracle_dimensions(b: int, delta_max: int, idx: CodeIndex) -> List[Optional[int]]:
    """``out[delta] == oracle_dimension(delta, b)`` for 2 <= delta <= delta_max.

    The union grows one element at a time, so the whole sweep costs one pass.
    """
    _check_desk_scale(idx)
    if b < 1 or delta_max < 2 or b + delta_max - 2 > idx.n - 1:
        raise DomainError(f"window b={b}, delta_max={delta_max} not inside [1, {idx.n - 1}]")
    out: List[Optional[int]] = [None, None]
    marks = bytearray(idx.n)
    covered = 0
    for delta in range(2, delta_max + 1):
        covered += _union_size(marks, b + delta - 2, idx)
        out.append(idx.n - covered)
    return out


def _orbit_min(a: int, idx: CodeIndex) -> int:
    best = x = a
    while True:
        x = x * idx.q % idx.n
        if x == a:
            return best
        if x < best:
            best = x


def leader_flags(hi: int, idx: CodeIndex) -> bytearray:
    """``flags[a] == 1`` iff a is the smallest element of its orbit, 0 <= a <= hi."""
    _check_desk_scale(idx)
    hi = min(hi, idx.n - 1)
    flags = bytearray(hi + 1)
    for a in range(hi + 1):
        flags[a] = _orbit_min(a, idx) == a
    return flags


def oracle_bose(delta: int, idx: CodeIndex, b: int = 1) -> int:
    """Largest delta' giving the same code as delta.

    For b = 1 this is the smallest coset leader in [delta, n-1]; for other b
    it is one less than the distance from b to the first integer past the
    window whose coset is not yet covered.
    """
    _check_desk_scale(idx)
    if b == 1:
        if not 2 <= delta <= idx.n - 1:
            raise DomainError(f"delta = {delta} outside [2, {idx.n - 1}]")
        for a in range(delta, idx.n):
            if _orbit_min(a, idx) == a:
                return a
        raise DomainError(f"no coset leader in [{delta}, {idx.n - 1}]")
    if b < 1 or delta < 2 or b + delta - 2 > idx.n - 1:
        raise DomainError(f"window b={b}, delta={delta} not inside [1, {idx.n - 1}]")
    marks = bytearray(idx.n)
    for a in range(b, b + delta - 1):
        _union_size(marks, a, idx)
    for a in range(b + delta - 1, idx.n):
        if not marks[a]:
            return a - b + 1
    raise DomainError(f"the window already covers [{b}, {idx.n - 1}]")


def oracle_bose_sweep(b: int, delta_max: int, idx: CodeIndex) -> List[Optional[int]]:
    """``out[delta] == oracle_bose(delta, idx, b)`` for 2 <= delta <= delta_max.

    Entries are None where every integer past the window is already covered.
    """
    _check_desk_scale(idx)
    if b < 1 or delta_max < 2 or b + delta_max - 2 > idx.n - 1:
        raise DomainError(f"window b={b}, delta_max={delta_max} not inside [1, {idx.n - 1}]")
    out: List[Optional[int]] = [None, None]
    marks = bytearray(idx.n)
    probe = b
    for delta in range(2, delta_max + 1):
        _union_size(marks, b + delta - 2, idx)
        probe = max(probe, b + delta - 1)
        while probe < idx.n and marks[probe]:
            probe += 1
        out.append(probe - b + 1 if probe < idx.n else None)
    return out
