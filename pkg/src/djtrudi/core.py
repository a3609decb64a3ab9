"""Entries, partitions and polynomials in the shifted z-variables.

Entries are handled internally as signed integer codes: ``i`` stands for the
unbarred entry ``i`` and ``-i`` for the barred one.  A polynomial is a
``ZPoly`` whose monomials are packed into Python ints (8 bits per variable),
so monomial multiplication is integer addition.
"""
from __future__ import annotations

import json
import random
import re
import threading
from dataclasses import dataclass

# --------------------------------------------------------------------------
# entries


def entry_key(code: int) -> tuple[bool, int]:
    """Sort key putting 1 < 2 < ... < n < nbar < ... < 1bar."""
    return (code < 0, code)


def entry_str(code: int) -> str:
    return f"{-code}bar" if code < 0 else str(code)


def parse_entry(text: str) -> int:
    text = text.strip()
    m = re.fullmatch(r"(\d+)(bar)?", text)
    if not m or int(m.group(1)) == 0:
        raise ValueError(f"bad entry token {text!r}")
    i = int(m.group(1))
    return -i if m.group(2) else i


def entry_rank(code: int, n: int) -> int:
    return code if code > 0 else 2 * n + 1 + code


def cmp_entries(x: int, y: int, n: int) -> str:
    """Return 'lt', 'eq', 'gt' or 'incomparable' in the partial order on entries."""
    if x == y:
        return "eq"
    if x == -y == n or y == -x == n:
        return "incomparable"
    return "lt" if entry_rank(x, n) < entry_rank(y, n) else "gt"


def prec(x: int, y: int, n: int) -> bool:
    return cmp_entries(x, y, n) == "lt"


def preceq(x: int, y: int, n: int) -> bool:
    return cmp_entries(x, y, n) in ("lt", "eq")


def all_entries(n: int) -> list[int]:
    return list(range(1, n + 1)) + list(range(-n, 0))


@dataclass(frozen=True)
class Entry:
    """An element of the index set {1..n, nbar..1bar}."""

    code: int
    n: int

    def __post_init__(self):
        if self.code == 0 or abs(self.code) > self.n:
            raise ValueError(f"entry {self.code} out of range for n={self.n}")

    @property
    def barred(self) -> bool:
        return self.code < 0

    def __str__(self):
        return entry_str(self.code)

    @classmethod
    def parse(cls, text: str, n: int) -> "Entry":
        return cls(parse_entry(text), n)

    def __lt__(self, other: "Entry") -> bool:
        return prec(self.code, other.code, self.n)

    def __le__(self, other: "Entry") -> bool:
        return preceq(self.code, other.code, self.n)


# --------------------------------------------------------------------------
# partitions


def normalize_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError("negative part")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    return tuple(p for p in parts if p > 0)


def conjugate(lam) -> tuple[int, ...]:
    lam = normalize_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def part(lam, i: int) -> int:
    """1-based part, zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def partitions_in_box(rows: int, cols: int):
    """All partitions fitting in a rows x cols box."""

    def rec(prefix, maxpart):
        yield tuple(p for p in prefix if p > 0)
        if len(prefix) == rows:
            return
        for p in range(min(maxpart, cols), 0, -1):
            yield from rec(prefix + (p,), p)

    return sorted(set(rec((), cols)), key=lambda t: (sum(t), t))


def subpartitions(lam):
    lam = normalize_partition(lam)

    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        for p in range(min(bound, lam[i]), -1, -1):
            for rest in rec(i + 1, p):
                yield (p,) + rest

    return sorted({normalize_partition(m) for m in rec(0, lam[0] if lam else 0)},
                  key=lambda t: (sum(t), t))


@dataclass(frozen=True)
class SkewDiagram:
    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        lam = normalize_partition(self.lam)
        mu = normalize_partition(self.mu)
        if len(mu) > len(lam) or any(mu[i] > lam[i] for i in range(len(mu))):
            raise ValueError(f"{mu} is not contained in {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @classmethod
    def parse(cls, text: str) -> "SkewDiagram":
        text = text.strip()
        outer, _, inner = text.partition("/")

        def parts(s):
            s = s.strip()
            if not s or s in ("0", "()", "empty"):
                return ()
            return tuple(int(x) for x in s.split(","))

        try:
            return cls(parts(outer), parts(inner))
        except ValueError as exc:
            raise ValueError(f"bad shape {text!r}: {exc}") from None

    def __str__(self):
        out = ",".join(map(str, self.lam)) or "0"
        return out + ("/" + ",".join(map(str, self.mu)) if self.mu else "")

    @property
    def lam_conj(self):
        return conjugate(self.lam)

    @property
    def mu_conj(self):
        return conjugate(self.mu)

    def cells(self) -> list[tuple[int, int]]:
        """Cells (row, col), 1-based, in reading order."""
        return [(i, j) for i in range(1, len(self.lam) + 1)
                for j in range(part(self.mu, i) + 1, self.lam[i - 1] + 1)]

    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)


def depth(d: SkewDiagram) -> int:
    """Longest column of the skew diagram."""
    lc, mc = d.lam_conj, d.mu_conj
    return max((lc[j] - part(mc, j + 1) for j in range(len(lc))), default=0)


def positivity(d: SkewDiagram, n: int) -> bool:
    """lam'_{i+1} - mu'_i <= n for every adjacent pair of columns."""
    lc, mc = d.lam_conj, d.mu_conj
    l = len(lc)
    return all(part(lc, i + 1) - part(mc, i) <= n for i in range(1, l))


# --------------------------------------------------------------------------
# packed monomials


class _Registry:
    """Append-only numbering of variables (entry code, offset)."""

    BITS = 8
    MASK = (1 << BITS) - 1

    def __init__(self):
        self.index: dict[tuple[int, int], int] = {}
        self.keys: list[tuple[int, int]] = []
        self._lock = threading.Lock()

    def slot(self, key):
        i = self.index.get(key)
        if i is None:
            with self._lock:
                i = self.index.get(key)
                if i is None:
                    i = len(self.keys)
                    self.keys.append(key)
                    self.index[key] = i
        return i


_REG = _Registry()
_DECODE_CACHE: dict[int, tuple] = {}
_SHIFT_CACHE: dict[tuple[int, int], int] = {}


def zvar(code: int, offset: int, exp: int = 1) -> int:
    """Packed monomial z_{code, a - 2*offset}^exp."""
    return exp << (_Registry.BITS * _REG.slot((code, offset)))


def mono_factors(m: int) -> tuple[tuple[int, int, int], ...]:
    """Decode a packed monomial to sorted (code, offset, exponent) triples."""
    got = _DECODE_CACHE.get(m)
    if got is not None:
        return got
    out = []
    rest, slot = m, 0
    bits, mask = _Registry.BITS, _Registry.MASK
    while rest:
        e = rest & mask
        if e:
            code, off = _REG.keys[slot]
            out.append((code, off, e))
        rest >>= bits
        slot += 1
    out.sort(key=lambda f: (entry_key(f[0]), f[1]))
    got = tuple(out)
    if len(_DECODE_CACHE) < 2_000_000:
        _DECODE_CACHE[m] = got
    return got


def mono_from_factors(factors) -> int:
    m = 0
    for code, off, e in factors:
        m += zvar(code, off, e)
    return m


def mono_shift(m: int, k: int) -> int:
    """Add k to every offset (the effect of moving past X^k)."""
    if k == 0 or m == 0:
        return m
    key = (m, k)
    got = _SHIFT_CACHE.get(key)
    if got is None:
        got = mono_from_factors((c, o + k, e) for c, o, e in mono_factors(m))
        if len(_SHIFT_CACHE) < 2_000_000:
            _SHIFT_CACHE[key] = got
    return got


def mono_degree(m: int) -> int:
    return sum(e for _, _, e in mono_factors(m))


def mono_str(m: int) -> str:
    if m == 0:
        return "1"
    bits = []
    for c, o, e in mono_factors(m):
        s = f"z[{entry_str(c)},{o}]"
        bits.append(s if e == 1 else f"{s}^{e}")
    return "*".join(bits)


# --------------------------------------------------------------------------
# polynomials


class ZPoly:
    """Integer polynomial in the commuting variables z_{i,a-2x}.

    Treated as immutable once built.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def var(cls, code: int, offset: int):
        return cls({zvar(code, offset): 1})

    @classmethod
    def const(cls, c: int):
        return cls({0: c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ZPoly.const(other)
        return isinstance(other, ZPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ZPoly(out)

    def __neg__(self):
        return ZPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int):
        return ZPoly({m: k * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
        return ZPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int):
        if k == 0:
            return self
        return ZPoly({mono_shift(m, k): c for m, c in self.terms.items()})

    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=-1)

    def sorted_terms(self):
        def key(item):
            return [(entry_key(c), o, e) for c, o, e in mono_factors(item[0])]

        return sorted(self.terms.items(), key=key)

    def to_json(self) -> dict:
        terms = []
        for m, c in self.sorted_terms():
            mono = []
            for code, off, e in mono_factors(m):
                mono.extend({"entry": entry_str(code), "offset": off} for _ in range(e))
            terms.append({"coeff": c, "monomial": mono})
        return {"terms": terms}

    @classmethod
    def from_json(cls, data) -> "ZPoly":
        if isinstance(data, str):
            data = json.loads(data)
        out: dict[int, int] = {}
        for t in data["terms"]:
            m = 0
            for f in t["monomial"]:
                m += zvar(parse_entry(f["entry"]), int(f["offset"]))
            out[m] = out.get(m, 0) + int(t["coeff"])
        return cls(out)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            ms = mono_str(m)
            if m == 0:
                bits.append(str(c))
            elif c == 1:
                bits.append(ms)
            elif c == -1:
                bits.append("-" + ms)
            else:
                bits.append(f"{c}*{ms}")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def poly_sum(polys) -> ZPoly:
    out: dict[int, int] = {}
    for p in polys:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return ZPoly(out)


def monomials_sum(monos_with_coeffs) -> ZPoly:
    """Sum of c * m over (m, c) pairs of packed monomials."""
    out: dict[int, int] = {}
    for m, c in monos_with_coeffs:
        out[m] = out.get(m, 0) + c
    return ZPoly(out)


# --------------------------------------------------------------------------
# specialization to Laurent polynomials in u_{i,s}


def specialize_var(code: int, offset: int, n: int) -> dict[tuple[int, int], int]:
    """Image of z_{code, a-2*offset} as a Laurent monomial {(i, s): exp}."""
    if code > 0:
        return {(code, offset): 1}
    i = -code
    out: dict[tuple[int, int], int] = {}
    for k in range(1, i + 1):
        s = offset - n + k
        if k - 1 > 0:
            out[(k - 1, s)] = out.get((k - 1, s), 0) + 1
        out[(k, s)] = out.get((k, s), 0) - 1
    return {key: e for key, e in out.items() if e}


_SPEC_CACHE: dict[tuple[int, int], tuple] = {}


def specialize_mono(m: int, n: int) -> tuple:
    key = (m, n)
    got = _SPEC_CACHE.get(key)
    if got is not None:
        return got
    acc: dict[tuple[int, int], int] = {}
    for code, off, e in mono_factors(m):
        for var, x in specialize_var(code, off, n).items():
            acc[var] = acc.get(var, 0) + e * x
    got = tuple(sorted((v, e) for v, e in acc.items() if e))
    if len(_SPEC_CACHE) < 2_000_000:
        _SPEC_CACHE[key] = got
    return got


def specialize(p: ZPoly, n: int) -> dict[tuple, int]:
    """Laurent polynomial as {sorted ((i, s), exp) tuple: coeff}."""
    out: dict[tuple, int] = {}
    for m, c in p.terms.items():
        u = specialize_mono(m, n)
        out[u] = out.get(u, 0) + c
    return {u: c for u, c in out.items() if c}


_PRIME = (1 << 61) - 1


def _evaluate(lp: dict[tuple, int], values) -> int:
    total = 0
    for mono, c in lp.items():
        v = c
        for var, e in mono:
            v = v * pow(values(var), e, _PRIME) % _PRIME
        total = (total + v) % _PRIME
    return total


def eq_in_Z(p: ZPoly, q: ZPoly, n: int, seed: int = 0, trials: int = 3) -> bool:
    """Equality in the quotient ring, decided through the specialization.

    The exact comparison of Laurent polynomials is cross-checked by evaluating
    both sides at random positive integers modulo a large prime.
    """
    sp, sq = specialize(p, n), specialize(q, n)
    exact = sp == sq
    rng = random.Random(seed)
    for _ in range(trials):
        cache: dict = {}

        def values(var):
            if var not in cache:
                cache[var] = rng.randrange(1, 10**6)
            return cache[var]

        same = _evaluate(sp, values) == _evaluate(sq, values)
        if exact and not same:
            raise AssertionError("specialized forms agree but evaluations differ")
        if not same:
            return False
    return exact


def relation_poly(i: int, offset: int, n: int) -> ZPoly:
    """z_{i,a} z_{ibar,a-2n+2i} - z_{i-1,a} z_{(i-1)bar,a-2n+2i} at a-2*offset."""
    lhs = ZPoly({zvar(i, offset) + zvar(-i, offset + n - i): 1})
    if i == 1:
        rhs = ZPoly.one()
    else:
        rhs = ZPoly({zvar(i - 1, offset) + zvar(-(i - 1), offset + n - i): 1})
    return lhs - rhs

