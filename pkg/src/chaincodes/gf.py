"""Arithmetic in GF(p^m) on a fixed polynomial basis.

An element is an integer in ``range(q)`` whose base-p digits are the
coefficients of its representative polynomial, constant term first.  The
Field object owns the modulus and performs all arithmetic on these integer
codes; FieldElement is a thin operator-overloading wrapper on top.

The modulus is canonical: the lexicographically smallest monic irreducible
polynomial of degree m over GF(p), coefficients compared from the constant
term upward.  Two fields built from the same (p, m) therefore agree element
by element, which keeps every serialized object portable.
"""
from __future__ import annotations

import functools
import itertools
from math import isqrt

DEFAULT_MAX_ORDER = 1 << 20

# q at or below this gets an eager multiplication table (m > 1 only).
_TABLE_LIMIT = 128


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with p prime and q = p^m."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    m = 0
    n = q
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise ValueError(f"not a prime power: {q}")
    return p, m


# ---------------------------------------------------------------------------
# polynomial helpers (little-endian coefficient tuples over GF(p))

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _prem(a: list[int], b: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a mod b; b must be monic."""
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lead = r[-1]
        shift = len(r) - 1 - db
        if lead:
            for i in range(db + 1):
                r[shift + i] = (r[shift + i] - lead * b[i]) % p
        _ptrim(r)
    return r


def is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] != 1:
        return False
    if coeffs[0] == 0:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = low + (1,)
            if not _prem(list(coeffs), div, p):
                return False
    return True


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        cand = low + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("irreducible polynomial search failed")  # unreachable


# ---------------------------------------------------------------------------

class Field:
    """GF(p^m) with elements coded as integers in range(p^m)."""

    __slots__ = ("p", "m", "q", "modulus", "_mul_table", "_inv_table",
                 "_conj_table", "_trace_pre")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None = None,
                 *, max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        q = p ** m
        if q > max_order:
            raise ValueError(f"field order {q} exceeds bound {max_order}")
        if modulus is None:
            modulus = canonical_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not is_irreducible(modulus, p):
                raise ValueError("modulus is not irreducible")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        self._conj_table: list[int] | None = None
        self._trace_pre: dict[int, tuple[int, ...]] | None = None
        if m > 1 and q <= _TABLE_LIMIT:
            self._build_tables()

    # -- representation ----------------------------------------------------

    def encode(self, coeffs) -> int:
        """Coefficient sequence (constant term first) -> integer code."""
        cs = list(coeffs)
        if len(cs) > self.m:
            raise ValueError(f"too many coefficients for GF({self.q})")
        code = 0
        for c in reversed(cs):
            code = code * self.p + int(c) % self.p
        return code

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element code of GF({self.q})")
        return a

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic on codes -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        r = 0
        shift = 1
        for _ in range(self.m):
            r += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return r

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return -a % p
        r = 0
        shift = 1
        for _ in range(self.m):
            r += (-a % p) * shift
            a //= p
            shift *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _pmul(self.decode(a), self.decode(b), self.p)
        return self.encode(_prem(prod, self.modulus, self.p))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a = self.inv(a)
            k = -k
        r = 1
        base = a
        while k:
            if k & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            k >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def _build_tables(self) -> None:
        q = self.q
        table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = table[a].index(1)
        self._mul_table = table
        self._inv_table = inv

    # -- conjugation and trace (order-2 subfield structure) -----------------

    @property
    def has_conjugation(self) -> bool:
        s = isqrt(self.q)
        return s * s == self.q

    @property
    def sqrt_q(self) -> int:
        s = isqrt(self.q)
        if s * s != self.q:
            raise ValueError(f"GF({self.q}) is not a quadratic extension")
        return s

    def conjugate(self, a: int) -> int:
        """a -> a^sqrt(q), the order-2 automorphism fixing GF(sqrt(q))."""
        s = self.sqrt_q
        if self._conj_table is None and self.q <= 4096:
            self._conj_table = [self.pow(x, s) for x in range(self.q)]
        if self._conj_table is not None:
            return self._conj_table[a]
        return self.pow(a, s)

    def trace(self, a: int) -> int:
        """Relative trace onto GF(sqrt(q)): a + a^sqrt(q)."""
        return self.add(a, self.conjugate(a))

    def in_subfield(self, a: int) -> bool:
        """True iff a lies in the fixed field GF(sqrt(q))."""
        return self.conjugate(a) == a

    def trace_preimage(self, t: int) -> tuple[int, ...]:
        """All x with trace(x) = t; t must lie in the subfield."""
        if not self.in_subfield(t):
            raise ValueError(f"{t} is not in the subfield GF({self.sqrt_q})")
        if self._trace_pre is None:
            pre: dict[int, list[int]] = {}
            for x in range(self.q):
                pre.setdefault(self.trace(x), []).append(x)
            self._trace_pre = {k: tuple(v) for k, v in pre.items()}
        return self._trace_pre.get(t, ())

    # -- wrapping ------------------------------------------------------------

    def element(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, int):
            return FieldElement(self, self.check(x))
        return FieldElement(self, self.encode(x))

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict, *, max_order: int = DEFAULT_MAX_ORDER) -> Field:
        return Field(int(obj["p"]), int(obj["m"]),
                     tuple(int(c) for c in obj["modulus"]), max_order=max_order)


@functools.lru_cache(maxsize=None)
def field_make(p: int, m: int, *, max_order: int = DEFAULT_MAX_ORDER) -> Field:
    """The field GF(p^m) with the canonical modulus (cached)."""
    return Field(p, m, max_order=max_order)


def _poly_str(coeffs: tuple[int, ...]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            x = "x" if i == 1 else f"x^{i}"
            terms.append(x if c == 1 else f"{c}{x}")
    return " + ".join(reversed(terms)) if terms else "0"


class FieldElement:
    """A field element bound to its Field; supports +, -, *, /, **."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = field.check(code)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed-field operands")
            return other.code
        if isinstance(other, int):
            return other % self.field.p  # lift a plain integer through GF(p)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(c)))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.code, k))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def conjugate(self) -> FieldElement:
        return FieldElement(self.field, self.field.conjugate(self.code))

    def trace(self) -> FieldElement:
        return FieldElement(self.field, self.field.trace(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __repr__(self) -> str:
        return f"GF({self.field.q})({_poly_str(self.coeffs)})"
