"""The finite chain ring GF(q)[u]/(u^e).

Ring elements are integers in ``range(q**e)`` whose base-q digits are the
field codes of the u-coefficients, u^0 first.  Every element factors as
u^v * w with w a unit, so the ideals form the chain (1) > (u) > ... > (u^e)
and `valuation` returns v (with e for the zero element).

Conjugation lifts the order-2 field automorphism coefficient-wise; it is
only available when q is a square.
"""
from __future__ import annotations

import functools

from .gf import Field, FieldElement, field_make, factor_prime_power, DEFAULT_MAX_ORDER

# rings at or below this many elements get eager add/mul tables
_TABLE_LIMIT = 256


class ChainRing:
    """GF(q)[u]/(u^e) with elements coded as integers in range(q^e)."""

    __slots__ = ("field", "e", "q", "size", "_add_table", "_mul_table",
                 "_val_table", "_conj_table")

    def __init__(self, field: Field, e: int):
        if e < 1:
            raise ValueError(f"e must be >= 1, got {e}")
        self.field = field
        self.e = e
        self.q = field.q
        self.size = field.q ** e
        self._add_table: list[list[int]] | None = None
        self._mul_table: list[list[int]] | None = None
        self._val_table: list[int] | None = None
        self._conj_table: list[int] | None = None
        if self.size <= _TABLE_LIMIT:
            self._build_tables()

    # -- representation ------------------------------------------------------

    def encode(self, digits) -> int:
        ds = list(digits)
        if len(ds) > self.e:
            raise ValueError("too many u-coefficients")
        code = 0
        for d in reversed(ds):
            code = code * self.q + self.field.check(int(d))
        return code

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(a % self.q)
            a //= self.q
        return tuple(out)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise ValueError(f"{a!r} is not an element code of {self!r}")
        return a

    def elements(self) -> range:
        return range(self.size)

    @property
    def u(self) -> int:
        """Code of the generator u of the maximal ideal."""
        if self.e < 2:
            return 0
        return self.q

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def _add_slow(self, a: int, b: int) -> int:
        f = self.field
        q = self.q
        r = 0
        shift = 1
        for _ in range(self.e):
            r += f.add(a % q, b % q) * shift
            a //= q
            b //= q
            shift *= q
        return r

    def neg(self, a: int) -> int:
        f = self.field
        q = self.q
        r = 0
        shift = 1
        for _ in range(self.e):
            r += f.neg(a % q) * shift
            a //= q
            shift *= q
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        f = self.field
        da = self.decode(a)
        db = self.decode(b)
        out = 0
        shift = 1
        for k in range(self.e):
            acc = 0
            for i in range(k + 1):
                ai = da[i]
                bj = db[k - i]
                if ai and bj:
                    acc = f.add(acc, f.mul(ai, bj))
            out += acc * shift
            shift *= self.q
        return out

    def smul(self, c: int, a: int) -> int:
        """Scalar multiple by a field element code c (degree-0 ring element)."""
        return self.mul(self.field.check(c), a)

    def _build_tables(self) -> None:
        n = self.size
        self._add_table = [[self._add_slow(a, b) for b in range(n)] for a in range(n)]
        self._mul_table = [[self._mul_slow(a, b) for b in range(n)] for a in range(n)]
        self._val_table = [self._valuation_slow(a) for a in range(n)]

    # -- chain structure --------------------------------------------------------

    def valuation(self, a: int) -> int:
        """Largest v with a in (u^v); the zero element gets e."""
        if self._val_table is not None:
            return self._val_table[a]
        return self._valuation_slow(a)

    def _valuation_slow(self, a: int) -> int:
        if a == 0:
            return self.e
        v = 0
        while a % self.q == 0:
            a //= self.q
            v += 1
        return v

    def is_unit(self, a: int) -> bool:
        return a % self.q != 0

    def unit_inverse(self, a: int) -> int:
        """Inverse of a unit, solved coefficient by coefficient."""
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit in {self!r}")
        f = self.field
        da = self.decode(a)
        inv0 = f.inv(da[0])
        out = [inv0] + [0] * (self.e - 1)
        for k in range(1, self.e):
            acc = 0
            for i in range(1, k + 1):
                if da[i] and out[k - i]:
                    acc = f.add(acc, f.mul(da[i], out[k - i]))
            out[k] = f.neg(f.mul(inv0, acc))
        return self.encode(out)

    def shift_up(self, a: int, v: int) -> int:
        """Multiply by u^v (coefficients above u^(e-1) truncate away)."""
        if v <= 0:
            return a
        return (a * self.q ** v) % self.size

    def shift_down(self, a: int, v: int) -> int:
        """A witness w with u^v * w = a; requires valuation(a) >= v."""
        if v <= 0:
            return a
        if a % self.q ** v != 0:
            raise ValueError(f"element {a} is not divisible by u^{v}")
        return a // self.q ** v

    def residue(self, a: int) -> int:
        """Image in the residue field GF(q): the u^0 coefficient."""
        return a % self.q

    # -- conjugation -----------------------------------------------------------

    def conjugate(self, a: int) -> int:
        """Apply the field conjugation to every u-coefficient."""
        if self._conj_table is None and self.size <= _TABLE_LIMIT and self.field.has_conjugation:
            f = self.field
            self._conj_table = [
                self.encode([f.conjugate(d) for d in self.decode(x)])
                for x in range(self.size)
            ]
        if self._conj_table is not None:
            return self._conj_table[a]
        f = self.field
        return self.encode([f.conjugate(d) for d in self.decode(a)])

    # -- construction -----------------------------------------------------------

    def element(self, x) -> ChainRingElement:
        if isinstance(x, ChainRingElement):
            if x.ring != self:
                raise ValueError("element belongs to a different ring")
            return x
        if isinstance(x, FieldElement):
            if x.field != self.field:
                raise ValueError("coefficient from a different field")
            return ChainRingElement(self, x.code)
        if isinstance(x, int):
            return ChainRingElement(self, self.check(x))
        return self.from_coeffs(x)

    def from_coeffs(self, coeffs) -> ChainRingElement:
        """Build an element from u-coefficients (field codes, elements, or
        coefficient lists), constant term first."""
        digits = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != self.field:
                    raise ValueError("coefficient from a different field")
                digits.append(c.code)
            elif isinstance(c, int):
                digits.append(self.field.check(c))
            else:
                digits.append(self.field.encode(c))
        return ChainRingElement(self, self.encode(digits))

    def galois_extension(self, d: int, *, max_order: int = DEFAULT_MAX_ORDER) -> ChainRing:
        """The unramified extension with residue field GF(q^d), same e."""
        if d < 1:
            raise ValueError(f"extension degree must be >= 1, got {d}")
        return ChainRing(field_make(self.field.p, self.field.m * d,
                                    max_order=max_order), self.e)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ChainRing) and self.e == other.e
                and self.field == other.field)

    def __hash__(self) -> int:
        return hash((self.field, self.e))

    def __repr__(self) -> str:
        return f"GF({self.q})[u]/(u^{self.e})"


@functools.lru_cache(maxsize=None)
def chain_ring(q: int, e: int) -> ChainRing:
    """The ring GF(q)[u]/(u^e) over the canonical field (cached)."""
    p, m = factor_prime_power(q)
    return ChainRing(field_make(p, m), e)


class ChainRingElement:
    """A ring element bound to its ChainRing; supports +, -, *."""

    __slots__ = ("ring", "code")

    def __init__(self, ring: ChainRing, code: int):
        self.ring = ring
        self.code = ring.check(code)

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        f = self.ring.field
        return tuple(FieldElement(f, d) for d in self.ring.decode(self.code))

    def _coerce(self, other) -> int:
        if isinstance(other, ChainRingElement):
            if other.ring != self.ring:
                raise ValueError("mixed-ring operands")
            return other.code
        if isinstance(other, FieldElement):
            if other.field != self.ring.field:
                raise ValueError("mixed-field operands")
            return other.code
        if isinstance(other, int):
            return other % self.ring.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return ChainRingElement(self.ring, self.ring.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return ChainRingElement(self.ring, self.ring.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return ChainRingElement(self.ring, self.ring.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return ChainRingElement(self.ring, self.ring.mul(self.code, c))

    __rmul__ = __mul__

    def __neg__(self):
        return ChainRingElement(self.ring, self.ring.neg(self.code))

    @property
    def valuation(self) -> int:
        return self.ring.valuation(self.code)

    @property
    def is_unit(self) -> bool:
        return self.ring.is_unit(self.code)

    def inverse(self) -> ChainRingElement:
        return ChainRingElement(self.ring, self.ring.unit_inverse(self.code))

    def conjugate(self) -> ChainRingElement:
        return ChainRingElement(self.ring, self.ring.conjugate(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, ChainRingElement):
            return self.ring == other.ring and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.ring.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.code))

    def __repr__(self) -> str:
        f = self.ring.field
        terms = []
        for i, d in enumerate(self.ring.decode(self.code)):
            if not d:
                continue
            upow = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            if i == 0 or d != 1:
                coeff = str(d) if f.m == 1 else f"[{','.join(map(str, f.decode(d)))}]"
                terms.append(f"{coeff}{'*' if upow else ''}{upow}")
            else:
                terms.append(upow)
        body = " + ".join(terms) if terms else "0"
        return f"{self.ring!r}({body})"
