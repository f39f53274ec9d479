"""Shared helpers: naive reference computations written without the package."""
from __future__ import annotations

import re
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
SOURCE_TABLES = ROOT / "paper.md"

SMALL_PAIRS = [(2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (4, 4), (5, 4)]


def naive_coset(a, q, n):
    out, x = set(), a % n
    while x not in out:
        out.add(x)
        x = x * q % n
    return out


def naive_leaders(q, m):
    """Coset leaders of [1, n-1], by brute orbit minima."""
    n = q**m - 1
    return {a for a in range(1, n) if min(naive_coset(a, q, n)) == a}


def naive_dimension(q, m, delta, b=1):
    n = q**m - 1
    roots = set()
    for e in range(b, b + delta - 1):
        roots |= naive_coset(e, q, n)
    return n - len(roots)


def naive_bose(q, m, delta):
    n = q**m - 1
    return next(a for a in range(delta, n) if min(naive_coset(a, q, n)) == a)


def naive_digits(a, q, m):
    return tuple((a // q**e) % q for e in reversed(range(m)))


_ROW = re.compile(r"^\s*(\d+)\s*&\s*(\d+)\s*&\s*(\d+)\s*(?:--\s*(\d+))?\s*&\s*(\d+)\s*&\s*(\d+)\s*&\s*(\d+)\s*&\s*(\d+|--)")


def source_table_rows(label):
    """Rows (q, m, lo, hi, n, k, d_B, d) of a labelled tabular block in the reference document."""
    text = SOURCE_TABLES.read_text()
    start = text.index(r"\label{" + label + "}")
    body = text[start : text.index(r"\end{table}", start)]
    rows = []
    for line in body.splitlines():
        mt = _ROW.match(line)
        if mt:
            q, m, lo, hi, n, k, dB, d = mt.groups()
            rows.append((int(q), int(m), int(lo), int(hi or lo), int(n), int(k), int(dB), None if d == "--" else int(d)))
    return rows


@pytest.fixture(scope="session")
def source_tables():
    if not SOURCE_TABLES.exists():
        pytest.skip("reference tables not present")
    return {"table2": source_table_rows("table2"), "table3": source_table_rows("table3")}


def listed_row(tables, q, m, delta):
    """(n, k, d_B, d) of the reference row whose delta range holds ``delta``."""
    for rows in tables.values():
        for rq, rm, lo, hi, n, k, dB, d in rows:
            if (rq, rm) == (q, m) and lo <= delta <= hi:
                return n, k, dB, d
    raise KeyError((q, m, delta))
