"""Sweeps that compare the closed forms against brute force.

Each suite returns a :class:`SuiteReport` counting checks and failures and
keeping the first counterexample.  Brute-force membership in S and H is taken
from orbit minima (``leader_flags``) and explicit coset sizes, never from the
digit-pattern classifiers being tested.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Callable, Dict, List, Optional

from . import cosets as C
from . import formulas as F
from .errors import ClosedFormInapplicable, DomainError
from .qadic import CodeIndex, nondiv, window

SWEEP_PAIRS = [(2, m) for m in range(4, 13)] + [(3, m) for m in range(4, 8)] + [(4, 4), (4, 5), (5, 4), (5, 5)]


@dataclass(frozen=True)
class Mismatch:
    suite: str
    q: int
    m: int
    where: str
    expected: object
    got: object

    def __str__(self):
        return f"[{self.suite}] q={self.q} m={self.m} {self.where}: expected {self.expected}, got {self.got}"


@dataclass
class SuiteReport:
    name: str
    q: int
    m: int
    checked: int = 0
    failed: int = 0
    first: Optional[Mismatch] = None
    extra: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, where: str, expected, got) -> bool:
        self.checked += 1
        if expected == got:
            return True
        self.failed += 1
        if self.first is None:
            self.first = Mismatch(self.name, self.q, self.m, where, expected, got)
        return False

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        where = f"q={self.q} m={self.m}" if self.m else f"q={self.q}"
        return f"{status} {self.name:<12} {where} checked={self.checked} failed={self.failed}"


# ---------------------------------------------------------------- brute sets


@dataclass(frozen=True)
class BruteSets:
    """Membership flags for S and H on [0, hi], and prefix counts."""

    hi: int
    in_S: bytearray
    in_H: bytearray
    pre_S: List[int]
    pre_H: List[int]

    def count_S(self, lo: int, hi: int) -> int:
        return self.pre_S[hi + 1] - self.pre_S[lo] if hi >= lo else 0

    def count_H(self, lo: int, hi: int) -> int:
        return self.pre_H[hi + 1] - self.pre_H[lo] if hi >= lo else 0

    def count_SH(self, lo: int, hi: int) -> int:
        return self.count_S(lo, hi) + self.count_H(lo, hi)


def brute_sets(idx: CodeIndex, hi: int) -> BruteSets:
    hi = min(hi, idx.n - 1)
    flags = C.leader_flags(hi, idx)
    in_S = bytearray(hi + 1)
    in_H = bytearray(hi + 1)
    for a in range(1, hi + 1):
        if flags[a]:
            if not idx.odd and C.coset_of(a, idx).size == idx.m // 2:
                in_H[a] = 1
        elif a % idx.q:
            in_S[a] = 1
    pre_S = [0] + list(accumulate(in_S))
    pre_H = [0] + list(accumulate(in_H))
    return BruteSets(hi, in_S, in_H, pre_S, pre_H)


def _next_leader_table(idx: CodeIndex, hi: int) -> List[Optional[int]]:
    flags = C.leader_flags(idx.n - 1, idx)
    nxt: List[Optional[int]] = [None] * (idx.n + 1)
    for a in range(idx.n - 1, -1, -1):
        nxt[a] = a if flags[a] else nxt[a + 1]
    return nxt[: hi + 1]


# -------------------------------------------------------------------- suites


def suite_dimension(idx: CodeIndex) -> SuiteReport:
    rep = SuiteReport("dimension", idx.q, idx.m)
    oracle = C.oracle_dimensions(1, idx.limit, idx)
    for delta in range(2, idx.limit + 1):
        rep.check(f"delta={delta}", oracle[delta], F.dimension(delta, idx))
    return rep


def suite_bose(idx: CodeIndex) -> SuiteReport:
    rep = SuiteReport("bose", idx.q, idx.m)
    nxt = _next_leader_table(idx, idx.limit)
    for delta in range(2, idx.limit):
        rep.check(f"delta={delta}", nxt[delta], F.bose_distance(delta, idx))
    return rep


def suite_nonnarrow(idx: CodeIndex) -> SuiteReport:
    """Dimension and Bose distance for every (b, delta) the reduction covers."""
    rep = SuiteReport("nonnarrow", idx.q, idx.m)
    q, L = idx.q, idx.limit
    for b in range(2, L):
        dmin, dmax = b * (q - 1) + 1, L + 1 - b
        if dmin > dmax:
            break
        dims = C.oracle_dimensions(b, dmax, idx)
        boses = C.oracle_bose_sweep(b, dmax, idx)
        for delta in range(dmin, dmax + 1):
            rep.check(f"b={b} delta={delta} dim", dims[delta], F.dimension_nonnarrow(delta, b, idx))
            if b + delta - 1 < L:
                rep.check(f"b={b} delta={delta} bose", boses[delta], F.bose_nonnarrow(delta, b, idx))
    return rep


def suite_special(idx: CodeIndex) -> SuiteReport:
    rep = SuiteReport("special", idx.q, idx.m)
    q, h = idx.q, idx.h
    oracle = C.oracle_dimensions(1, idx.limit, idx)
    nxt = _next_leader_table(idx, idx.limit)
    for k in range(1 if idx.odd else 0, idx.max_k + 1):
        bmax = q ** (h - k + 1) if idx.odd else q ** (h - k)
        for a in range(1, q):
            for b in range(1, bmax + 1):
                delta = a * q ** (h + k) + b
                if nxt[delta] is None:
                    continue
                r = F.closed_form_special(a, k, b, idx)
                rep.check(f"a={a} k={k} b={b}", (oracle[delta], nxt[delta]), (r.dimension, r.bose))
    return rep


def suite_thm1(idx: CodeIndex) -> SuiteReport:
    rep = SuiteReport("coset-size", idx.q, idx.m)
    for a in range(1, idx.pow(idx.m - idx.m // 3)):
        rep.check(f"a={a}", C.coset_of(a, idx).size, C.coset_size_thm1(a, idx))
    return rep


def suite_partition(idx: CodeIndex, sets: Optional[BruteSets] = None) -> SuiteReport:
    """Slices of S (odd m) or S u H (even m) against the class partition."""
    rep = SuiteReport("partition", idx.q, idx.m)
    sets = sets or brute_sets(idx, idx.limit)
    h, q = idx.h, idx.q
    member = C.member_A if idx.odd else C.member_B
    classify = C.classify_A if idx.odd else C.classify_B
    for k in range(1 if idx.odd else 0, idx.max_k + 1):
        i_lo = -k + 1 if idx.odd else -k
        for a in range(q ** (h + k), q ** (h + k + 1)):
            expected = bool(sets.in_S[a] or sets.in_H[a])
            hits = [i for i in range(i_lo, k + 1) if member(a, k, i, idx)]
            rep.check(f"k={k} a={a} classes", expected, bool(hits))
            rep.check(f"k={k} a={a} disjoint", True, len(hits) <= 1)
            rep.check(f"k={k} a={a} classify", hits[0] if hits else None, classify(a, k, idx))
    return rep


def suite_counts(idx: CodeIndex, sets: Optional[BruteSets] = None) -> SuiteReport:
    """Class sizes, H counts, and the interval identities behind the dimension formula."""
    rep = SuiteReport("counts", idx.q, idx.m)
    sets = sets or brute_sets(idx, idx.limit)
    h, q = idx.h, idx.q

    for k in range(1 if idx.odd else 0, idx.max_k + 1):
        lo, hi = q ** (h + k), q ** (h + k + 1) - 1
        i_lo = -k + 1 if idx.odd else -k
        sizes = {i: 0 for i in range(i_lo, k + 1)}
        for a in range(lo, hi + 1):
            i = (C.classify_A if idx.odd else C.classify_B)(a, k, idx)
            if i is not None:
                sizes[i] += 1
        for i, got in sizes.items():
            closed = F.class_size_A(k, i, idx) if idx.odd else F.class_size_B(k, i, idx)
            rep.check(f"|class k={k} i={i}|", got, closed)
        if not idx.odd and k >= 1:
            rep.check(f"|H slice k={k}|", sets.count_H(lo, hi), F.h_slice_count(k, idx))

    # small-leader bound: every a <= bound with q not dividing a is a leader
    bound = q ** (h + 1) if idx.odd else 2 * q**h
    rep.check("small leaders", 0, sets.count_S(1, min(bound, sets.hi)))

    if not idx.odd:
        for a in range(1, idx.limit):
            rep.check(f"H digits vs definition a={a}", C.in_H(a, idx, "definition"), C.in_H(a, idx, "digits"))

    for delta in range(2, idx.limit + 1):
        if idx.odd:
            rep.check(f"f delta={delta}", sets.count_S(1, delta - 1), F.f_odd(delta, idx))
        else:
            rep.check(f"f~ delta={delta}", sets.count_SH(1, delta - 1), F.f_even(delta, idx))
            rep.check(f"g delta={delta}", sets.count_H(1, delta - 1), F.g_even(delta, idx))
        if delta <= idx.pow(idx.m - h):
            continue
        p = F.delta_profile(delta, idx)
        k, d = p.k_delta, delta - 1
        n_mu = nondiv(F.mu(p, idx) + 1, q)
        t_sum = F._t_sum(p, idx)
        if idx.odd:
            cut = window(d, q, h - k + 1, h + k)
            rep.check(f"tail delta={delta}", sets.count_S(cut, d), n_mu)
            rep.check(f"body delta={delta}", sets.count_S(q ** (h + k), cut - 1), t_sum)
        else:
            cut = window(d, q, h - k, h + k)
            rep.check(f"tail delta={delta}", sets.count_SH(cut, d), n_mu)
            rep.check(f"body delta={delta}", sets.count_SH(q ** (h + k), cut - 1), t_sum)
            cut_h = window(d, q, h, h + k)
            rep.check(f"H tail delta={delta}", sets.count_H(cut_h, d), F.tau(p, idx))
            top = window(d, q, h, h + k, shift=h)
            rep.check(
                f"H body delta={delta}",
                sets.count_H(q ** (h + k), cut_h - 1),
                nondiv(top, q) - nondiv(q**k, q),
            )
    return rep


def suite_lemmas(q: int, kmax: int = 4) -> SuiteReport:
    idx = CodeIndex(q, 1)
    rep = SuiteReport("lemmas", q, 0)
    for k in range(0, kmax + 1):
        rep.check(f"N-sum k={k}", F.direct_sum_N(k, idx), F.lemma_sum_N(k, idx))
    for k in range(1, kmax + 1):
        for a in range(1, q + 1):
            for parity, i_lo in (("odd", -k + 1), ("even", -k)):
                for i in range(i_lo, k + 1):
                    rep.check(
                        f"T-sum {parity} k={k} a={a} i={i}",
                        F.direct_sum_T(k, a, i, parity, idx),
                        F.lemma_sum_T(k, a, i, parity, idx),
                    )
    return rep


def suite_codes(idx: CodeIndex, product_check: bool = True) -> SuiteReport:
    from .gf import build_field, generator_polys, parity_check_poly

    rep = SuiteReport("codes", idx.q, idx.m)
    fs = build_field(idx.q, idx.m)
    last = None
    for delta, g in generator_polys(idx.limit, 1, fs):
        rep.check(f"delta={delta} deg g", idx.n - F.dimension(delta, idx), len(g) - 1)
        if product_check and (last is None or len(g) != len(last)):
            try:
                parity_check_poly(g, fs)
                rep.check(f"delta={delta} g*h", True, True)
            except AssertionError as exc:
                rep.check(f"delta={delta} g*h", "x^n - 1", str(exc))
        last = g
    return rep


LEVELS: Dict[str, List[str]] = {
    "formulas": ["dimension", "bose", "nonnarrow", "special"],
    "partitions": ["coset-size", "partition", "counts"],
    "lemmas": ["lemmas"],
    "codes": ["codes"],
}
LEVELS["all"] = [s for lv in ("formulas", "partitions", "lemmas", "codes") for s in LEVELS[lv]]

_RUNNERS: Dict[str, Callable[[CodeIndex], SuiteReport]] = {
    "dimension": suite_dimension,
    "bose": suite_bose,
    "nonnarrow": suite_nonnarrow,
    "special": suite_special,
    "coset-size": suite_thm1,
    "partition": suite_partition,
    "counts": suite_counts,
    "lemmas": lambda idx: suite_lemmas(idx.q),
    "codes": suite_codes,
}


def run_level(idx: CodeIndex, level: str) -> List[SuiteReport]:
    if level not in LEVELS:
        raise DomainError(f"unknown level {level!r}")
    needs_closed_form = set(LEVELS[level]) - {"lemmas"}
    if needs_closed_form and idx.m < 4:
        raise ClosedFormInapplicable(f"level {level!r} needs m >= 4")
    return [_RUNNERS[name](idx) for name in LEVELS[level]]
