"""Parameter tables: per-delta rows, merging into delta ranges, fixture I/O."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from importlib import resources
from typing import Dict, Iterable, List, Optional

from .codes import search_min_distance
from .formulas import Source, bch_parameters
from .gf import build_field, generator_poly
from .qadic import CodeIndex

FIELDS = ("q", "m", "delta_lo", "delta_hi", "n", "k", "d_B", "d", "source")


@dataclass(frozen=True)
class TableRow:
    q: int
    m: int
    delta_lo: int
    delta_hi: int
    n: int
    k: int
    d_B: int
    d: Optional[int] = None
    source: str = Source.CLOSED_FORM.value

    def as_dict(self) -> Dict[str, object]:
        return {f: getattr(self, f) for f in FIELDS}


def default_range(idx: CodeIndex):
    return 2, idx.limit - 1


def compute_rows(q: int, m: int, lo: int, hi: int, b: int = 1) -> List[TableRow]:
    """One unmerged row per delta in [lo, hi]."""
    out = []
    for delta in range(lo, hi + 1):
        r = bch_parameters(q, m, delta, b)
        out.append(TableRow(q, m, delta, delta, r.n, r.dimension, r.bose, None, r.source.value))
    return out


def _merged_source(a: str, b: str) -> str:
    return a if a == b else Source.HYBRID.value


def merge_rows(rows: Iterable[TableRow]) -> List[TableRow]:
    """Join consecutive deltas that give the same (k, d_B)."""
    merged: List[TableRow] = []
    for row in rows:
        last = merged[-1] if merged else None
        if (
            last is not None
            and (last.q, last.m, last.k, last.d_B) == (row.q, row.m, row.k, row.d_B)
            and last.delta_hi + 1 == row.delta_lo
        ):
            merged[-1] = replace(last, delta_hi=row.delta_hi, source=_merged_source(last.source, row.source))
        else:
            merged.append(row)
    return merged


def add_distances(rows: List[TableRow], budget: int, b: int = 1, use_bch_bound: bool = False) -> List[TableRow]:
    """Fill the d column by search; rows whose search runs out of budget keep None."""
    out = []
    for row in rows:
        fs = build_field(row.q, row.m)
        g = generator_poly(row.delta_lo, b, fs)
        bound = row.d_B if use_bch_bound else None
        d = search_min_distance(g, fs, budget, lower_bound=bound).distance
        out.append(replace(row, d=d))
    return out


def generate_table(
    q: int,
    m: int,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
    b: int = 1,
    merge: bool = True,
) -> List[TableRow]:
    idx = CodeIndex(q, m)
    dlo, dhi = default_range(idx)
    lo = dlo if lo is None else lo
    hi = dhi if hi is None else hi
    rows = compute_rows(q, m, lo, hi, b) if lo <= hi else []
    return merge_rows(rows) if merge else rows


# ------------------------------------------------------------------ output


def to_csv(rows: List[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in rows:
        w.writerow(["" if v is None else v for v in r.as_dict().values()])
    return buf.getvalue()


def to_json(rows: List[TableRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"


def to_markdown(rows: List[TableRow]) -> str:
    lines = ["| " + " | ".join(FIELDS) + " |", "|" + "---|" * len(FIELDS)]
    for r in rows:
        lines.append("| " + " | ".join("--" if v is None else str(v) for v in r.as_dict().values()) + " |")
    return "\n".join(lines) + "\n"


FORMATTERS = {"csv": to_csv, "json": to_json, "md": to_markdown}


# ---------------------------------------------------------------- fixtures


@dataclass(frozen=True)
class FixtureRow:
    q: int
    m: int
    delta_lo: int
    delta_hi: int
    n: int
    k: int
    d_B: int
    d: Optional[int]


def load_fixture(name: str) -> List[FixtureRow]:
    """Rows of ``table2`` or ``table3`` shipped with the package."""
    text = resources.files("bchdim").joinpath("fixtures").joinpath(f"{name}.csv").read_text()
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        d = rec.pop("d")
        out.append(FixtureRow(**{k: int(v) for k, v in rec.items()}, d=int(d) if d else None))
    return out


def fixture_mismatches(fixture: List[FixtureRow], generated: Dict[tuple, List[TableRow]]) -> List[str]:
    """Every fixture delta must give the fixture (n, k, d_B) and sit inside one generated row.

    ``generated`` maps (q, m) to merged rows.  An empty list means all rows match.
    """
    problems = []
    for fx in fixture:
        rows = generated[(fx.q, fx.m)]
        host = [r for r in rows if r.delta_lo <= fx.delta_lo and fx.delta_hi <= r.delta_hi]
        if len(host) != 1:
            problems.append(f"{fx}: delta range not inside a single generated row")
            continue
        r = host[0]
        if (r.n, r.k, r.d_B) != (fx.n, fx.k, fx.d_B):
            problems.append(f"{fx}: generated n={r.n}, k={r.k}, d_B={r.d_B}")
    return problems
