"""Minimum distance of small cyclic codes.

Small dimensions are enumerated outright.  Larger ones use a
Brouwer-Zimmermann style search over disjoint information sets: after every
message of weight <= w on each of the s sets has been tried, any codeword
not yet seen has weight >= s * (w + 1).  A caller may also supply a lower
bound it already trusts (the BCH bound, say), which can end the search as
soon as a codeword of that weight turns up.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence

import numpy as np

from .gf import FieldSpec, Poly, degree

FULL_ENUMERATION_CAP = 2**22
CHUNK = 4096


@dataclass(frozen=True)
class DistanceSearch:
    """Outcome of a search: ``distance`` is None when the budget ran out."""

    distance: Optional[int]
    upper: Optional[int]
    lower: int
    work: int
    exhaustive: bool


def generator_matrix(g: Poly, fs: FieldSpec) -> np.ndarray:
    n, k = fs.n, fs.n - degree(g)
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(g)] = g
    return G


def systematic(G: np.ndarray, cols: Sequence[int], fs: FieldSpec) -> Optional[np.ndarray]:
    """Row-reduce G so the columns ``cols`` carry an identity; None if they are dependent."""
    G = G.copy()
    k = G.shape[0]
    for r, c in enumerate(cols):
        piv = next((i for i in range(r, k) if G[i, c]), None)
        if piv is None:
            return None
        if piv != r:
            G[[r, piv]] = G[[piv, r]]
        G[r] = fs.mul[fs.inv[G[r, c]], G[r]]
        for i in range(k):
            if i != r and G[i, c]:
                G[i] = fs.add[G[i], fs.mul[fs.neg[G[i, c]], G[r]]]
    return G


def _span(rows: np.ndarray, fs: FieldSpec) -> np.ndarray:
    """All q^len(rows) linear combinations of ``rows``."""
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for row in rows:
        scaled = fs.mul[:, row]  # q x n: every multiple of row
        out = fs.add[out[:, None, :], scaled[None, :, :]].reshape(-1, rows.shape[1])
    return out


def _full_enumeration(G: np.ndarray, fs: FieldSpec) -> int:
    k, n = G.shape
    inner_rows = 0
    while inner_rows < k and fs.q ** (inner_rows + 1) <= 2**14:
        inner_rows += 1
    inner = _span(G[:inner_rows], fs)
    outer_rows = G[inner_rows:]
    best = n + 1
    for coefs in itertools.product(range(fs.q), repeat=len(outer_rows)):
        v = np.zeros(n, dtype=np.int64)
        for c, row in zip(coefs, outer_rows):
            if c:
                v = fs.add[v, fs.mul[c, row]]
        words = fs.add[inner, v[None, :]]
        wts = np.count_nonzero(words, axis=1)
        if not any(coefs):
            wts = wts[1:]
        if wts.size:
            best = min(best, int(wts.min()))
    return best


class _Combiner:
    """Fast linear combinations of the rows of one generator matrix."""

    def __init__(self, Gs: np.ndarray, fs: FieldSpec):
        self.fs = fs
        # scaled[a] holds every row multiplied by the field element a
        self.scaled = fs.mul[:, Gs].astype(np.uint8)
        if fs.p == 2:
            self.add = np.bitwise_xor
        elif fs.s == 1:
            p = fs.p
            self.add = lambda x, y: (x + y) % p
        else:
            table = fs.add.astype(np.uint8)
            self.add = lambda x, y: table[x, y]

    def min_weight(self, w: int) -> int:
        """Minimum weight over messages with exactly w nonzero symbols (first one fixed to 1)."""
        k, n = self.scaled.shape[1:]
        best = n + 1
        tails = list(itertools.product(range(1, self.fs.q), repeat=w - 1))
        combos = itertools.combinations(range(k), w)
        while True:
            chunk = np.array(list(itertools.islice(combos, CHUNK)), dtype=np.int64)
            if chunk.size == 0:
                return best
            base = self.scaled[1][chunk[:, 0]]
            for tail in tails:
                acc = base
                for col, a in enumerate(tail, start=1):
                    acc = self.add(acc, self.scaled[a][chunk[:, col]])
                best = min(best, int(np.count_nonzero(acc, axis=1).min()))


def _round_cost(k: int, w: int, q: int) -> int:
    return comb(k, w) * (q - 1) ** (w - 1)


def search_min_distance(
    g: Poly,
    fs: FieldSpec,
    budget: int,
    lower_bound: Optional[int] = None,
    random_sets: int = 64,
    seed: int = 0,
) -> DistanceSearch:
    n, k = fs.n, fs.n - degree(g)
    if k < 1:
        return DistanceSearch(None, None, 0, 0, False)
    G = generator_matrix(g, fs)
    if fs.q**k <= min(budget, FULL_ENUMERATION_CAP):
        d = _full_enumeration(G, fs)
        return DistanceSearch(d, d, d, fs.q**k, True)

    trusted = lower_bound or 1
    s = n // k
    sets: List[_Combiner] = []
    for j in range(s):
        Gs = systematic(G, range(j * k, (j + 1) * k), fs)
        assert Gs is not None, "consecutive positions of a cyclic code form an information set"
        sets.append(_Combiner(Gs, fs))
    upper = min(int(np.count_nonzero(row)) for row in G)
    work, certified, w = 0, 1, 0
    while upper > max(certified, trusted):
        w += 1
        if w > k:
            certified = upper
            break
        cost = s * _round_cost(k, w, fs.q)
        if work + cost > budget:
            break
        for comb_ in sets:
            upper = min(upper, comb_.min_weight(w))
        work += cost
        certified = max(certified, s * (w + 1))

    if upper > max(certified, trusted) and lower_bound is not None:
        # Randomised information sets only sharpen the upper bound.
        rng = np.random.default_rng(seed)
        per_set = sum(_round_cost(k, v, fs.q) for v in (1, 2))
        for _ in range(random_sets):
            if upper <= trusted or work + per_set > budget:
                break
            Gs = systematic(G, rng.permutation(n)[:k], fs)
            if Gs is None:
                continue
            comb_ = _Combiner(Gs, fs)
            for v in (1, 2):
                upper = min(upper, comb_.min_weight(v))
            work += per_set

    lower = max(certified, trusted)
    done = upper <= lower
    return DistanceSearch(upper if done else None, upper, min(lower, upper), work, False)


def min_distance_exhaustive(
    g: Poly, fs: FieldSpec, budget: int = FULL_ENUMERATION_CAP, lower_bound: Optional[int] = None
) -> Optional[int]:
    """Exact minimum distance of the cyclic code generated by g, or None past the budget.

    ``lower_bound`` must be a proven bound (e.g. the BCH bound); it is never
    checked, only used to stop early.
    """
    return search_min_distance(g, fs, budget, lower_bound).distance
