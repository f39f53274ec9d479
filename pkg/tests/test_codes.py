import itertools

import numpy as np
import pytest

from bchdim.codes import (
    FULL_ENUMERATION_CAP,
    generator_matrix,
    min_distance_exhaustive,
    search_min_distance,
    systematic,
)
from bchdim.formulas import bch_parameters
from bchdim.gf import build_field, degree, generator_poly

from conftest import listed_row


def naive_min_distance(g, q, n):
    """Smallest nonzero weight of m(x) g(x) over all messages (prime q only)."""
    k = n - (len(g) - 1)
    best = n
    for msg in itertools.product(range(q), repeat=k):
        if any(msg):
            word = np.convolve(np.array(msg), g) % q
            best = min(best, int(np.count_nonzero(word)))
    return best


def small_codes(limit=4096):
    for q, m in [(2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (5, 2), (7, 2)]:
        fs = build_field(q, m)
        seen = set()
        for delta in range(2, fs.n):
            g = generator_poly(delta, 1, fs)
            k = fs.n - degree(g)
            if k in seen or k < 1:
                continue
            seen.add(k)
            if q**k <= limit:
                yield q, m, delta, g


CODES = list(small_codes())


@pytest.mark.parametrize("q,m,delta,k,d", [(2, 4, 4, 7, 5), (2, 4, 2, 11, 3), (2, 5, 2, 26, 3)])
def test_listed_distances(q, m, delta, k, d, source_tables):
    fs = build_field(q, m)
    g = generator_poly(delta, 1, fs)
    assert fs.n - degree(g) == k
    assert min_distance_exhaustive(g, fs) == d
    n_, k_, _, d_ = listed_row(source_tables, q, m, delta)
    assert (n_, k_, d_) == (fs.n, k, d)


@pytest.mark.parametrize("q,m,delta,g", CODES, ids=[f"{q}-{m}-{d}" for q, m, d, _ in CODES])
def test_full_enumeration_matches_naive(q, m, delta, g):
    fs = build_field(q, m)
    d = naive_min_distance(g, q, fs.n)
    res = search_min_distance(g, fs, FULL_ENUMERATION_CAP)
    assert res.exhaustive and res.distance == d
    assert d >= delta
    if delta < q ** (m - 1):
        assert d >= bch_parameters(q, m, delta).bose


@pytest.mark.parametrize("q,m,delta,g", CODES, ids=[f"{q}-{m}-{d}" for q, m, d, _ in CODES])
def test_information_set_search_matches_naive(q, m, delta, g):
    fs = build_field(q, m)
    k = fs.n - degree(g)
    budget = max(1, q**k // 2)
    res = search_min_distance(g, fs, budget)
    assert not res.exhaustive
    d = naive_min_distance(g, q, fs.n)
    assert res.lower <= d <= res.upper
    if res.distance is not None:
        assert res.distance == d


def test_bch_bound_lets_search_stop_early():
    fs = build_field(3, 4)
    g = generator_poly(9, 1, fs)
    assert search_min_distance(g, fs, 2**16).distance is None
    res = search_min_distance(g, fs, 2**16, lower_bound=10)
    assert res.distance == 10 and res.upper == 10


def test_budget_exhaustion_reports_none():
    fs = build_field(2, 8)
    g = generator_poly(25, 1, fs)
    res = search_min_distance(g, fs, 10**4)
    assert res.distance is None
    assert res.lower <= res.upper
    assert min_distance_exhaustive(g, fs, budget=10**4) is None


def test_systematic_form():
    fs = build_field(3, 3)
    g = generator_poly(4, 1, fs)
    G = generator_matrix(g, fs)
    k = G.shape[0]
    S = systematic(G, range(5, 5 + k), fs)
    assert np.array_equal(S[:, 5 : 5 + k], np.eye(k, dtype=np.int64))
    # every row of the systematic matrix is still a codeword: divisible by g
    from bchdim.gf import poly_divmod

    assert all(len(poly_divmod(row, g, fs)[1]) == 0 for row in S)
