import pytest
from hypothesis import given, settings, strategies as st

from bchdim import cosets as C
from bchdim.errors import DeskScaleExceeded, DomainError
from bchdim.formulas import class_size_A, class_size_B, h_slice_count
from bchdim.qadic import CodeIndex

from conftest import SMALL_PAIRS, naive_bose, naive_coset, naive_dimension, naive_leaders


def idx_(q, m):
    return CodeIndex(q, m)


@st.composite
def pair_and_a(draw, pairs=SMALL_PAIRS + [(2, 8), (2, 9), (3, 6), (4, 5)]):
    q, m = draw(st.sampled_from(pairs))
    return CodeIndex(q, m), draw(st.integers(1, q**m - 2))


# -------------------------------------------------------------- examples


def test_coset_of_examples():
    r = C.coset_of(5, idx_(2, 4))
    assert (set(r.elements), r.leader, r.size) == ({5, 10}, 5, 2)
    r = C.coset_of(0, idx_(2, 4))
    assert (set(r.elements), r.leader, r.size) == ({0}, 0, 1)
    r = C.coset_of(10, idx_(3, 4))
    assert (set(r.elements), r.leader, r.size) == ({10, 30}, 10, 2)
    assert set(r.elements) == naive_coset(10, 3, 80)


def test_is_leader_examples():
    assert not C.is_leader(17, idx_(2, 7))
    assert 17 * 8 % 127 == 9
    assert C.is_leader(1, idx_(2, 7))
    assert C.is_leader(10, idx_(3, 4))


def test_coset_size_thm1_examples():
    assert C.coset_size_thm1(7, idx_(2, 5)) == 5
    assert C.coset_size_thm1(10, idx_(3, 4)) == 2
    assert C.coset_size_thm1(7, idx_(3, 4)) == 4
    with pytest.raises(DomainError):
        C.coset_size_thm1(0, idx_(3, 4))


def test_in_H_examples():
    assert C.in_H(5, idx_(2, 4))
    assert not C.in_H(3, idx_(2, 4))
    assert C.in_H(10, idx_(3, 4))
    with pytest.raises(DomainError):
        C.in_H(5, idx_(2, 5))


def test_classify_A_examples():
    idx = idx_(2, 7)
    assert C.classify_A(18, 1, idx) is None
    assert C.classify_A(17, 1, idx) == 1
    # 19 = 0010011: the zero block a_1..a_3 is fine but (a_1, a_0) = (1, 1) > (a_4) padded
    assert C.classify_A(19, 1, idx) is None
    assert not C.member_A(19, 1, 1, idx)
    assert 19 not in C.enumerate_S(16, 31, idx)


def test_classify_B_examples():
    idx = idx_(2, 4)
    assert C.classify_B(5, 0, idx) == 0
    assert C.classify_B(7, 0, idx) is None
    # only k = 0 is admissible for (2, 4), so 13 sits outside every class range
    with pytest.raises(DomainError):
        C.classify_B(13, 1, idx)
    assert idx.max_k == 0


@pytest.mark.parametrize("q", [2, 3])
def test_classify_B_k1_in_range(q):
    idx = idx_(q, 8)
    assert idx.max_k == 1
    lo, hi = q**5, q**6
    leaders = naive_leaders(q, 8)
    got = {a for a in range(lo, hi) if C.classify_B(a, 1, idx) is not None}
    expected = {a for a in range(lo, hi) if a % q and (a not in leaders or len(naive_coset(a, q, idx.n)) == 4)}
    assert got == expected


def test_enumerate_S_examples():
    assert C.enumerate_S(1, 14, idx_(2, 4)) == [9, 11, 13]
    assert min(naive_coset(13, 2, 15)) == 7
    assert min(naive_coset(9, 2, 15)) == 3
    with pytest.raises(DomainError):
        C.enumerate_S(1, 15, idx_(2, 4))


@pytest.mark.parametrize("q,m", [(2, 5), (2, 7), (3, 5), (4, 5), (2, 9)])
def test_no_small_non_leaders_odd(q, m):
    idx = idx_(q, m)
    top = q ** (idx.h + 1)
    assert C.enumerate_S(1, top, idx) == []
    assert C.enumerate_S(1, top + 1, idx) == ([top + 1] if top + 1 not in naive_leaders(q, m) else [])


@pytest.mark.parametrize("q,m", [(2, 4), (2, 6), (3, 4), (4, 4), (2, 8)])
def test_no_small_non_leaders_even(q, m):
    idx = idx_(q, m)
    assert C.enumerate_S(1, 2 * q**idx.h, idx) == []


def test_oracle_dimension_examples():
    assert C.oracle_dimension(4, 1, idx_(2, 4)) == 7
    assert C.oracle_dimension(9, 1, idx_(3, 4)) == 56
    for q, m in SMALL_PAIRS:
        idx = idx_(q, m)
        assert C.oracle_dimension(2, 1, idx) == idx.n - len(naive_coset(1, q, idx.n)) == idx.n - m


def test_oracle_bose_examples():
    assert C.oracle_bose(6, idx_(2, 4)) == 7
    assert C.oracle_bose(16, idx_(2, 7)) == 19
    assert C.oracle_bose(9, idx_(3, 4)) == 10


def test_oracle_bose_without_leader():
    with pytest.raises(DomainError):
        C.oracle_bose(8, idx_(2, 4))


def test_desk_scale_refusal():
    big = idx_(2, 25)
    with pytest.raises(DeskScaleExceeded):
        C.oracle_dimension(3, 1, big)
    with pytest.raises(DeskScaleExceeded):
        C.oracle_bose(3, big)
    assert issubclass(DeskScaleExceeded, DomainError)


def test_leader_inventory():
    inv = C.leader_inventory(1, 14, idx_(2, 4))
    assert inv.leaders == (1, 3, 5, 7)
    assert inv.size_of == {1: 4, 3: 4, 5: 2, 7: 4}
    assert inv.total_size() == 14


# -------------------------------------------------------------- properties


@given(pair_and_a())
def test_leader_matches_orbit_minimum(ia):
    idx, a = ia
    rec = C.coset_of(a, idx)
    assert set(rec.elements) == naive_coset(a, idx.q, idx.n)
    assert C.is_leader(a, idx) == (rec.leader == a)


@given(pair_and_a())
def test_leaders_not_divisible_by_q(ia):
    idx, a = ia
    if C.is_leader(a, idx):
        assert a % idx.q


@pytest.mark.parametrize("q,m", [(2, m) for m in range(4, 13)] + [(3, m) for m in range(4, 8)] + [(4, 4), (4, 5), (5, 4), (5, 5)])
def test_coset_size_formula_exhaustive(q, m):
    idx = idx_(q, m)
    top = q ** (m - m // 3)
    assert all(C.coset_size_thm1(a, idx) == C.coset_of(a, idx).size for a in range(1, top))


@given(pair_and_a([(2, 4), (2, 6), (2, 8), (3, 4), (3, 6), (4, 4), (5, 4)]))
def test_in_H_digit_form_matches_definition(ia):
    idx, a = ia
    if a < idx.limit:
        assert C.in_H(a, idx, "digits") == C.in_H(a, idx, "definition")
    rec = C.coset_of(a, idx)
    assert C.in_H(a, idx) == (rec.leader == a and rec.size == idx.m // 2)


@pytest.mark.parametrize("q,m", [(2, 5), (2, 7), (2, 9), (3, 5), (3, 7), (4, 5), (5, 5)])
def test_partition_odd(q, m):
    idx = idx_(q, m)
    h = idx.h
    for k in range(1, idx.max_k + 1):
        lo, hi = q ** (h + k), q ** (h + k + 1) - 1
        s = set(C.enumerate_S(lo, hi, idx))
        counts = {}
        for a in range(lo, hi + 1):
            hits = [i for i in range(-k + 1, k + 1) if C.member_A(a, k, i, idx)]
            assert len(hits) <= 1
            assert C.classify_A(a, k, idx) == (hits[0] if hits else None)
            assert bool(hits) == (a in s)
            for i in hits:
                counts[i] = counts.get(i, 0) + 1
        for i in range(-k + 1, k + 1):
            assert counts.get(i, 0) == class_size_A(k, i, idx)


@pytest.mark.parametrize("q,m", [(2, 4), (2, 6), (2, 8), (2, 10), (3, 4), (3, 8), (4, 4), (5, 4)])
def test_partition_even(q, m):
    idx = idx_(q, m)
    h = idx.h
    leaders = naive_leaders(q, m)
    for k in range(0, idx.max_k + 1):
        lo, hi = q ** (h + k), q ** (h + k + 1) - 1
        target = {
            a for a in range(lo, hi + 1)
            if a % q and (a not in leaders or len(naive_coset(a, q, idx.n)) == m // 2)
        }
        counts = {}
        for a in range(lo, hi + 1):
            hits = [i for i in range(-k, k + 1) if C.member_B(a, k, i, idx)]
            assert len(hits) <= 1
            assert bool(hits) == (a in target)
            for i in hits:
                counts[i] = counts.get(i, 0) + 1
        for i in range(-k, k + 1):
            assert counts.get(i, 0) == class_size_B(k, i, idx)
        if k >= 1:
            n_h = sum(1 for a in range(lo, hi + 1) if C.in_H(a, idx))
            assert n_h == h_slice_count(k, idx) == q ** (k - 1) * (q - 1) ** 2


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_PAIRS), st.data())
def test_oracle_dimension_matches_naive(pair, data):
    q, m = pair
    n = q**m - 1
    b = data.draw(st.integers(1, min(20, n - 1)))
    delta = data.draw(st.integers(2, min(n - b + 1, 90)))
    assert C.oracle_dimension(delta, b, idx_(q, m)) == naive_dimension(q, m, delta, b)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_PAIRS), st.data())
def test_oracle_bose_matches_naive(pair, data):
    q, m = pair
    delta = data.draw(st.integers(2, CodeIndex(q, m).limit - 1))
    assert C.oracle_bose(delta, idx_(q, m)) == naive_bose(q, m, delta)


@pytest.mark.parametrize("q,m", [(2, 5), (3, 4), (2, 6)])
def test_oracle_sweeps_agree_with_single_calls(q, m):
    idx = idx_(q, m)
    for b in (1, 2, 3, q + 1):
        top = min(idx.n - b + 1, 3 * q**3)
        dims = C.oracle_dimensions(b, top, idx)
        boses = C.oracle_bose_sweep(b, top, idx)
        for delta in range(2, top + 1):
            assert dims[delta] == C.oracle_dimension(delta, b, idx)
            try:
                expected = C.oracle_bose(delta, idx, b=b)
            except DomainError:
                expected = None
            assert boses[delta] == expected
