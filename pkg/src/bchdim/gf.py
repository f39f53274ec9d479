"""Finite fields GF(q) and GF(q^m), and polynomials over GF(q).

Encodings
---------
* An element of GF(q), q = p^s, is an int in [0, q-1] whose base-p digits
  are the coefficients of its polynomial representative modulo the base
  modulus (least significant digit = constant term).
* An element of GF(q^m) is an int in [0, q^m - 1] whose base-q digits are
  GF(q) coefficients of a polynomial in alpha, again constant term first.
  Constants (ints below q) are exactly the subfield GF(q).
* A polynomial over GF(q) is a 1-d numpy int64 array of coefficients in
  ascending degree with no trailing zeros; the zero polynomial is empty.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, Optional, Sequence, Tuple

import numpy as np

from .cosets import coset_of
from .errors import DomainError
from .qadic import CodeIndex

Poly = np.ndarray


def prime_power(q: int) -> Tuple[int, int]:
    """(p, s) with q = p**s and p prime; DomainError otherwise."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    s, rest = 0, q
    while rest % p == 0:
        rest //= p
        s += 1
    if rest != 1:
        raise DomainError(f"{q} is not a prime power")
    return p, s


def _digits(x: int, base: int, width: int):
    out = []
    for _ in range(width):
        x, d = divmod(x, base)
        out.append(d)
    return out


def _undigits(ds: Sequence[int], base: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * base + int(d)
    return x


def _tables_prime(p: int):
    r = np.arange(p)
    return (r[:, None] + r[None, :]) % p, (r[:, None] * r[None, :]) % p


def _order_of_x(lower: Sequence[int], add, mul, neg, q: int, width: int, stop: int) -> int:
    """Multiplicative order of x modulo x^width + sum(lower[i] x^i), capped at ``stop``.

    Returns 0 when x is not invertible or never returns to 1 before ``stop``.
    """
    if lower[0] == 0:
        return 0
    minus = [int(neg[c]) for c in lower]
    state = [1] + [0] * (width - 1)
    one = list(state)
    for step in range(1, stop + 1):
        top = state[-1]
        state = [0] + state[:-1]
        if top:
            state = [int(add[state[i], mul[top, minus[i]]]) for i in range(width)]
        if state == one:
            return step
    return 0


@dataclass(frozen=True)
class FieldSpec:
    """GF(q) and GF(q^m) with a primitive element alpha, plus lookup tables."""

    p: int
    s: int
    q: int
    m: int
    n: int
    base_modulus: Optional[Tuple[int, ...]]
    ext_modulus: Tuple[int, ...]
    add: np.ndarray = field(repr=False, compare=False)
    mul: np.ndarray = field(repr=False, compare=False)
    neg: np.ndarray = field(repr=False, compare=False)
    inv: np.ndarray = field(repr=False, compare=False)
    exp: np.ndarray = field(repr=False, compare=False)
    log: np.ndarray = field(repr=False, compare=False)

    @property
    def index(self) -> CodeIndex:
        return CodeIndex(self.q, self.m)

    def ext_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out, place = 0, 1
        while a or b:
            a, da = divmod(a, self.p)
            b, db = divmod(b, self.p)
            out += (da + db) % self.p * place
            place *= self.p
        return out

    def ext_neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out, place = 0, 1
        while a:
            a, d = divmod(a, self.p)
            out += (-d) % self.p * place
            place *= self.p
        return out

    def ext_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % self.n])

    def alpha_pow(self, e: int) -> int:
        return int(self.exp[e % self.n])


def _base_field(p: int, s: int):
    """ADD/MUL tables of GF(p^s) and the chosen base modulus (None when s = 1)."""
    if s == 1:
        add, mul = _tables_prime(p)
        return add, mul, None
    padd, pmul = _tables_prime(p)
    pneg = (-np.arange(p)) % p
    q = p**s
    for code in range(1, q):
        lower = _digits(code, p, s)
        if _order_of_x(lower, padd, pmul, pneg, p, s, q - 1) == q - 1:
            break
    else:  # pragma: no cover - a primitive polynomial always exists
        raise RuntimeError(f"no primitive polynomial of degree {s} over GF({p})")
    exp = [0] * (q - 1)
    state = [1] + [0] * (s - 1)
    minus = [int(pneg[c]) for c in lower]
    for e in range(q - 1):
        exp[e] = _undigits(state, p)
        top = state[-1]
        state = [0] + state[:-1]
        if top:
            state = [int(padd[state[i], pmul[top, minus[i]]]) for i in range(s)]
    log = {v: e for e, v in enumerate(exp)}
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        da = _digits(a, p, s)
        for b in range(q):
            db = _digits(b, p, s)
            add[a, b] = _undigits([(x + y) % p for x, y in zip(da, db)], p)
            if a and b:
                mul[a, b] = exp[(log[a] + log[b]) % (q - 1)]
    return add, mul, tuple(lower) + (1,)


@lru_cache(maxsize=None)
def build_field(q: int, m: int) -> FieldSpec:
    """Deterministic GF(q^m): the smallest primitive moduli in integer encoding order."""
    p, s = prime_power(q)
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    n = CodeIndex(q, m).n
    add, mul, base_mod = _base_field(p, s)
    neg = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)], dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])

    for code in range(1, q**m):
        lower = _digits(code, q, m)
        if _order_of_x(lower, add, mul, neg, q, m, n) == n:
            break
    else:  # pragma: no cover
        raise RuntimeError(f"no primitive polynomial of degree {m} over GF({q})")

    minus = [int(neg[c]) for c in lower]
    exp = np.zeros(n, dtype=np.int64)
    state = [1] + [0] * (m - 1)
    for e in range(n):
        exp[e] = _undigits(state, q)
        top = state[-1]
        state = [0] + state[:-1]
        if top:
            state = [int(add[state[i], mul[top, minus[i]]]) for i in range(m)]
    log = np.full(q**m, -1, dtype=np.int64)
    log[exp] = np.arange(n)
    if (log[1:] < 0).any():
        raise AssertionError("alpha is not primitive")
    return FieldSpec(p, s, q, m, n, base_mod, tuple(lower) + (1,), add, mul, neg, inv, exp, log)


# ---------------------------------------------------------------- polynomials


def trim(a) -> Poly:
    a = np.asarray(a, dtype=np.int64)
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def degree(a: Poly) -> int:
    return len(a) - 1


def poly_add(a: Poly, b: Poly, fs: FieldSpec) -> Poly:
    size = max(len(a), len(b))
    x = np.zeros(size, dtype=np.int64)
    y = np.zeros(size, dtype=np.int64)
    x[: len(a)] = a
    y[: len(b)] = b
    return trim(fs.add[x, y])


def poly_mul(a: Poly, b: Poly, fs: FieldSpec) -> Poly:
    if len(a) == 0 or len(b) == 0:
        return trim([])
    if len(a) > len(b):
        a, b = b, a
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i, c in enumerate(a):
        if c:
            seg = out[i : i + len(b)]
            out[i : i + len(b)] = fs.add[seg, fs.mul[c, b]]
    return trim(out)


def poly_divmod(a: Poly, b: Poly, fs: FieldSpec) -> Tuple[Poly, Poly]:
    b = trim(b)
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = np.array(trim(a), dtype=np.int64)
    if len(rem) < len(b):
        return trim([]), rem
    quot = np.zeros(len(rem) - len(b) + 1, dtype=np.int64)
    lead_inv = fs.inv[b[-1]]
    neg_b = fs.neg[b]
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(b) - 1]
        if c:
            f = fs.mul[c, lead_inv]
            quot[shift] = f
            seg = rem[shift : shift + len(b)]
            rem[shift : shift + len(b)] = fs.add[seg, fs.mul[f, neg_b]]
    return trim(quot), trim(rem[: len(b) - 1])


def x_n_minus_1(fs: FieldSpec, n: Optional[int] = None) -> Poly:
    n = fs.n if n is None else n
    out = np.zeros(n + 1, dtype=np.int64)
    out[0] = fs.neg[1]
    out[n] = 1
    return out


def poly_str(a: Poly) -> str:
    """Human-readable form, highest degree first."""
    if len(a) == 0:
        return "0"
    terms = []
    for e in range(len(a) - 1, -1, -1):
        c = int(a[e])
        if not c:
            continue
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        coef = str(c) if (c != 1 or e == 0) else ""
        terms.append(coef + ("*" if coef and mono else "") + mono)
    return " + ".join(terms)


# ------------------------------------------------------- minimal / generator


def minimal_poly(a: int, fs: FieldSpec) -> Poly:
    """Product of (x - alpha^i) over the coset of ``a``; coefficients checked to lie in GF(q)."""
    idx = fs.index
    coset = coset_of(a, idx)
    coeffs = [1]
    for i in coset.elements:
        root = fs.ext_neg(fs.alpha_pow(i))
        nxt = [0] + coeffs
        for d, c in enumerate(coeffs):
            nxt[d] = fs.ext_add(nxt[d], fs.ext_mul(c, root))
        coeffs = nxt
    for c in coeffs:
        frob = 0 if c == 0 else fs.alpha_pow(int(fs.log[c]) * fs.q)
        if frob != c or c >= fs.q:
            raise AssertionError(f"coefficient {c} of m_{a}(x) is not in GF({fs.q})")
    return trim(coeffs)


def _window_check(delta: int, b: int, n: int):
    if b < 1 or delta < 2 or b + delta - 2 > n - 1:
        raise DomainError(f"window b={b}, delta={delta} not inside [1, {n - 1}]")


def generator_polys(delta_max: int, b: int, fs: FieldSpec) -> Iterator[Tuple[int, Poly]]:
    """Yield (delta, g_delta) for delta = 2..delta_max, reusing the previous product."""
    _window_check(delta_max, b, fs.n)
    seen = bytearray(fs.n)
    g = trim([1])
    for delta in range(2, delta_max + 1):
        a = b + delta - 2
        if not seen[a]:
            for x in coset_of(a, fs.index).elements:
                seen[x] = 1
            g = poly_mul(g, minimal_poly(a, fs), fs)
        yield delta, g


def generator_poly(delta: int, b: int, fs: FieldSpec) -> Poly:
    """Generator polynomial of the BCH code with roots alpha^b, ..., alpha^(b+delta-2)."""
    g = None
    for _, g in generator_polys(delta, b, fs):
        pass
    return g


def parity_check_poly(g: Poly, fs: FieldSpec) -> Poly:
    """(x^n - 1) / g, with g * h = x^n - 1 re-checked."""
    target = x_n_minus_1(fs)
    h, rem = poly_divmod(target, g, fs)
    if len(rem):
        raise AssertionError("g(x) does not divide x^n - 1")
    if not np.array_equal(poly_mul(g, h, fs), target):
        raise AssertionError("g(x) * h(x) != x^n - 1")
    return h


def encode(message: Sequence[int], g: Poly, fs: FieldSpec) -> np.ndarray:
    """Codeword message(x) * g(x) as a length-n coefficient vector."""
    k = fs.n - degree(g)
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape != (k,):
        raise ValueError(f"message must have length {k}, got {msg.shape}")
    if ((msg < 0) | (msg >= fs.q)).any():
        raise ValueError(f"message symbols must lie in [0, {fs.q - 1}]")
    out = np.zeros(fs.n, dtype=np.int64)
    prod = poly_mul(msg, g, fs)
    out[: len(prod)] = prod
    return out


def serialize_poly(g: Poly) -> list:
    return [int(c) for c in g]


def field_element_digits(c: int, fs: FieldSpec) -> Tuple[int, ...]:
    """Base-p digits of a GF(q) element, constant term first."""
    return tuple(_digits(c, fs.p, fs.s))
