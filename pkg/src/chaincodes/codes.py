"""Linear codes over GF(q)[u]/(u^e) and over GF(q).

A LinearCode is the row span of a generator matrix over the chain ring.
Gaussian elimination with column permutations brings any generator matrix
to a block-triangular standard form whose pivots are powers of u with
nondecreasing exponents; for e = 3 the pivot multiplicities give the usual
type (k, l, m).  Duals for both the Euclidean and the Hermitian inner
product come out of the standard form by valuation-aware back-substitution,
and the Hermitian dual is the Euclidean dual of the conjugated code.

FieldCode is the residue-field counterpart (a plain linear code over GF(q)
held in reduced row echelon form); torsion codes of a LinearCode land there.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass

from .gf import Field, FieldElement
from .chainring import ChainRing, ChainRingElement

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"


def _check_inner(inner: str) -> str:
    if inner not in (EUCLIDEAN, HERMITIAN):
        raise ValueError(f"inner product must be {EUCLIDEAN!r} or {HERMITIAN!r}")
    return inner


def inner_product(ring: ChainRing, v, w, inner: str = EUCLIDEAN) -> int:
    """Sum of v_i * w_i, with w conjugated for the Hermitian product."""
    _check_inner(inner)
    s = 0
    if inner == HERMITIAN:
        for a, b in zip(v, w):
            if a and b:
                s = ring.add(s, ring.mul(a, ring.conjugate(b)))
    else:
        for a, b in zip(v, w):
            if a and b:
                s = ring.add(s, ring.mul(a, b))
    return s


# ---------------------------------------------------------------------------
# standard form

@dataclass(frozen=True)
class StandardForm:
    """Result of row reduction over the chain ring.

    rows are in permuted coordinates: pivot j sits at column j and equals
    u^(pivot_vals[j]).  perm[j] is the original index of permuted column j.
    """
    ring: ChainRing
    n: int
    perm: tuple[int, ...]
    pivot_vals: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_vals)

    @property
    def profile(self) -> tuple[int, ...]:
        """Pivot multiplicity per valuation; (k, l, m) when e = 3."""
        counts = [0] * self.ring.e
        for v in self.pivot_vals:
            counts[v] += 1
        return tuple(counts)

    def unpermuted_rows(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for row in self.rows:
            vec = [0] * self.n
            for pos, entry in enumerate(row):
                vec[self.perm[pos]] = entry
            out.append(tuple(vec))
        return tuple(out)


def _standard_form(ring: ChainRing, n: int, gens) -> StandardForm:
    q, e = ring.q, ring.e
    rows = [list(g) for g in gens]
    nr = len(rows)
    perm = list(range(n))
    pivot_vals: list[int] = []
    r = 0
    while r < nr and r < n:
        # smallest valuation wins; ties go to the smallest (row, column)
        best = None
        for i in range(r, nr):
            for c in range(r, n):
                a = rows[i][c]
                if a:
                    v = ring.valuation(a)
                    if best is None or v < best[0]:
                        best = (v, i, c)
                        if v == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, i, c = best
        rows[r], rows[i] = rows[i], rows[r]
        if c != r:
            perm[r], perm[c] = perm[c], perm[r]
            for row in rows:
                row[r], row[c] = row[c], row[r]
        # scale the pivot row so the pivot becomes exactly u^v
        winv = ring.unit_inverse(ring.shift_down(rows[r][r], v))
        if winv != 1:
            rows[r] = [ring.mul(winv, x) for x in rows[r]]
        # clear the u^(>=v) part of column r everywhere else; rows not yet
        # processed lose the entry entirely, earlier rows keep it mod u^v
        qv = q ** v
        prow = rows[r]
        for i2 in range(nr):
            if i2 == r:
                continue
            bh = rows[i2][r] // qv
            if bh:
                rows[i2] = [ring.sub(x, ring.mul(bh, y))
                            for x, y in zip(rows[i2], prow)]
        pivot_vals.append(v)
        r += 1
    return StandardForm(ring, n, tuple(perm), tuple(pivot_vals),
                        tuple(tuple(row) for row in rows[:r]))


# ---------------------------------------------------------------------------

class LinearCode:
    """Row span of a generator matrix over a chain ring."""

    __slots__ = ("ring", "n", "gens", "_std", "_lock")

    def __init__(self, ring: ChainRing, n: int, gens):
        if n < 1:
            raise ValueError(f"length must be >= 1, got {n}")
        self.ring = ring
        self.n = n
        packed = []
        for row in gens:
            vec = tuple(self._entry(x) for x in row)
            if len(vec) != n:
                raise ValueError(f"generator length {len(vec)} != n = {n}")
            packed.append(vec)
        self.gens: tuple[tuple[int, ...], ...] = tuple(packed)
        self._std: StandardForm | None = None
        self._lock = threading.Lock()

    def _entry(self, x) -> int:
        if isinstance(x, ChainRingElement):
            if x.ring != self.ring:
                raise ValueError("generator entry from a different ring")
            return x.code
        if isinstance(x, int):
            return self.ring.check(x)
        return self.ring.from_coeffs(x).code

    @classmethod
    def zero(cls, ring: ChainRing, n: int) -> LinearCode:
        return cls(ring, n, [])

    @classmethod
    def full(cls, ring: ChainRing, n: int) -> LinearCode:
        rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
        return cls(ring, n, rows)

    # -- structure ------------------------------------------------------------

    def standard_form(self) -> StandardForm:
        s = self._std
        if s is None:
            with self._lock:
                if self._std is None:
                    self._std = _standard_form(self.ring, self.n, self.gens)
                s = self._std
        return s

    @property
    def type_profile(self) -> tuple[int, ...]:
        """(k, l, m) for e = 3; generally one count per pivot valuation."""
        return self.standard_form().profile

    def cardinality(self) -> int:
        e = self.ring.e
        return self.ring.q ** sum(e - v for v in self.standard_form().pivot_vals)

    def contains(self, word) -> bool:
        w = [self._entry(x) for x in word]
        if len(w) != self.n:
            raise ValueError("word length mismatch")
        ring = self.ring
        std = self.standard_form()
        w = [w[std.perm[pos]] for pos in range(self.n)]
        for j, v in enumerate(std.pivot_vals):
            b = w[j]
            if b:
                if b % ring.q ** v:
                    return False
                c = b // ring.q ** v
                row = std.rows[j]
                w = [ring.sub(x, ring.mul(c, y)) for x, y in zip(w, row)]
        return not any(w)

    def codewords(self):
        """Every codeword once, as tuples of ring codes."""
        ring = self.ring
        q, e, n = ring.q, ring.e, self.n
        std = self.standard_form()
        acc = [(0,) * n]
        for row, v in zip(std.rows, std.pivot_vals):
            nxt = []
            for c in range(q ** (e - v)):
                if c:
                    scaled = tuple(ring.mul(c, x) for x in row)
                    nxt.extend(tuple(ring.add(a, b) for a, b in zip(w, scaled))
                               for w in acc)
                else:
                    nxt.extend(acc)
            acc = nxt
        perm = std.perm
        for w in acc:
            vec = [0] * n
            for pos, entry in enumerate(w):
                vec[perm[pos]] = entry
            yield tuple(vec)

    def conjugate_code(self) -> LinearCode:
        conj = self.ring.conjugate
        return LinearCode(self.ring, self.n,
                          [[conj(x) for x in row] for row in self.gens])

    def equal(self, other: LinearCode) -> bool:
        """Same set of codewords (mutual containment of generators)."""
        if not isinstance(other, LinearCode):
            raise ValueError("can only compare with another LinearCode")
        if self.ring != other.ring or self.n != other.n:
            return False
        return (all(self.contains(g) for g in other.gens)
                and all(other.contains(g) for g in self.gens))

    # -- torsion --------------------------------------------------------------

    def torsion(self, i: int) -> FieldCode:
        """The residue-field code {v mod u : u^i * v in C}; e = 3 only."""
        ring = self.ring
        if ring.e != 3:
            raise ValueError("torsion codes are defined here for e = 3 only")
        if not 0 <= i < ring.e:
            raise ValueError(f"torsion index must be in 0..{ring.e - 1}")
        std = self.standard_form()
        rows = []
        for row, v in zip(std.rows, std.pivot_vals):
            if v <= i:
                rows.append(tuple(ring.residue(ring.shift_down(x, v)) for x in row))
        vecs = []
        for row in rows:
            vec = [0] * self.n
            for pos, entry in enumerate(row):
                vec[std.perm[pos]] = entry
            vecs.append(vec)
        return FieldCode.from_rows(ring.field, self.n, vecs)

    def residue(self) -> FieldCode:
        return self.torsion(0)

    # -- duality ----------------------------------------------------------------

    def dual(self, inner: str = EUCLIDEAN) -> LinearCode:
        """The dual code under the chosen inner product."""
        _check_inner(inner)
        if inner == HERMITIAN:
            if not self.ring.field.has_conjugation:
                raise ValueError("Hermitian dual needs a square field order")
            # [v, w] = sum v_i conj(w_i) vanishes on C exactly when the
            # Euclidean product of conj(C) with w does
            return self.conjugate_code().dual(EUCLIDEAN)
        ring = self.ring
        n, e, q = self.n, self.ring.e, self.ring.q
        std = self.standard_form()
        r = std.rank

        def back_solve(g: list[int], start: int) -> None:
            # rows below `start` are already satisfied; solve upward
            for i in range(start - 1, -1, -1):
                row = std.rows[i]
                s = 0
                for t in range(i + 1, n):
                    if row[t] and g[t]:
                        s = ring.add(s, ring.mul(row[t], g[t]))
                s = ring.neg(s)
                v = std.pivot_vals[i]
                if s % q ** v:
                    raise AssertionError("standard form lost row divisibility")
                g[i] = s // q ** v

        gens_std: list[list[int]] = []
        for c in range(r, n):
            g = [0] * n
            g[c] = 1
            back_solve(g, r)
            gens_std.append(g)
        for i in range(r):
            v = std.pivot_vals[i]
            if v == 0:
                continue
            g = [0] * n
            g[i] = q ** (e - v)  # the element u^(e-v)
            back_solve(g, i)
            gens_std.append(g)

        gens = []
        for g in gens_std:
            vec = [0] * n
            for pos, entry in enumerate(g):
                vec[std.perm[pos]] = entry
            gens.append(vec)
        return LinearCode(ring, n, gens)

    def is_self_orthogonal(self, inner: str = EUCLIDEAN) -> bool:
        _check_inner(inner)
        if inner == HERMITIAN and not self.ring.field.has_conjugation:
            raise ValueError("Hermitian product needs a square field order")
        return all(inner_product(self.ring, a, b, inner) == 0
                   for a in self.gens for b in self.gens)

    def is_self_dual(self, inner: str = EUCLIDEAN) -> bool:
        """Self-duality test; for e = 3 via the block congruences of the
        standard form, which agree with dual(C) = C."""
        _check_inner(inner)
        ring = self.ring
        if inner == HERMITIAN and not ring.field.has_conjugation:
            raise ValueError("Hermitian duality needs a square field order")
        if ring.e != 3:
            return self.equal(self.dual(inner))
        std = self.standard_form()
        k, l, m = std.profile
        if l != m or k != self.n - k - l - m:
            return False
        a_rows = [row for row, v in zip(std.rows, std.pivot_vals) if v == 0]
        b_rows = [tuple(x // ring.q for x in row)
                  for row, v in zip(std.rows, std.pivot_vals) if v == 1]
        c_rows = [tuple(x // ring.q ** 2 for x in row)
                  for row, v in zip(std.rows, std.pivot_vals) if v == 2]
        conj = inner == HERMITIAN

        def gram_min_val(rows1, rows2, need: int) -> bool:
            for x in rows1:
                for y in rows2:
                    s = 0
                    for a, b in zip(x, y):
                        if a and b:
                            bb = ring.conjugate(b) if conj else b
                            s = ring.add(s, ring.mul(a, bb))
                    if s % ring.q ** need:
                        return False
            return True

        return (gram_min_val(a_rows, a_rows, 3)
                and gram_min_val(a_rows, b_rows, 2)
                and gram_min_val(b_rows, b_rows, 1)
                and gram_min_val(a_rows, c_rows, 1))

    def __repr__(self) -> str:
        return (f"LinearCode({self.ring!r}, n={self.n}, "
                f"generators={len(self.gens)})")


# ---------------------------------------------------------------------------
# codes over the residue field

def field_rref(field: Field, n: int, rows) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over GF(q); canonical per subspace."""
    mat = [list(r) for r in rows]
    pr = 0
    for c in range(n):
        piv = None
        for i in range(pr, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[pr], mat[piv] = mat[piv], mat[pr]
        inv = field.inv(mat[pr][c])
        if inv != 1:
            mat[pr] = [field.mul(inv, x) for x in mat[pr]]
        prow = mat[pr]
        for i in range(len(mat)):
            if i != pr and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(x, field.mul(f, y))
                          for x, y in zip(mat[i], prow)]
        pr += 1
        if pr == len(mat):
            break
    return tuple(tuple(r) for r in mat[:pr] if any(r))


class FieldCode:
    """A linear code over GF(q), stored as a canonical RREF basis."""

    __slots__ = ("field", "n", "basis")

    def __init__(self, field: Field, n: int, basis: tuple[tuple[int, ...], ...]):
        self.field = field
        self.n = n
        self.basis = basis

    @classmethod
    def from_rows(cls, field: Field, n: int, rows) -> FieldCode:
        packed = []
        for row in rows:
            vec = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.field != field:
                        raise ValueError("entry from a different field")
                    vec.append(x.code)
                else:
                    vec.append(field.check(int(x)))
            if len(vec) != n:
                raise ValueError(f"row length {len(vec)} != n = {n}")
            packed.append(vec)
        return cls(field, n, field_rref(field, n, packed))

    @classmethod
    def zero(cls, field: Field, n: int) -> FieldCode:
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> FieldCode:
        return cls.from_rows(field, n,
                             [[1 if j == i else 0 for j in range(n)]
                              for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def cardinality(self) -> int:
        return self.field.q ** self.dim

    def contains(self, word) -> bool:
        f = self.field
        w = [x.code if isinstance(x, FieldElement) else f.check(int(x))
             for x in word]
        if len(w) != self.n:
            raise ValueError("word length mismatch")
        for row in self.basis:
            piv = next(c for c, x in enumerate(row) if x)
            if w[piv]:
                coef = w[piv]
                w = [f.sub(x, f.mul(coef, y)) for x, y in zip(w, row)]
        return not any(w)

    def codewords(self):
        f = self.field
        q, n = f.q, self.n
        acc = [(0,) * n]
        for row in self.basis:
            nxt = []
            for c in range(q):
                if c:
                    scaled = tuple(f.mul(c, x) for x in row)
                    nxt.extend(tuple(f.add(a, b) for a, b in zip(w, scaled))
                               for w in acc)
                else:
                    nxt.extend(acc)
            acc = nxt
        yield from acc

    def subspace_of(self, other: FieldCode) -> bool:
        return all(other.contains(row) for row in self.basis)

    def conjugate_code(self) -> FieldCode:
        conj = self.field.conjugate
        return FieldCode(self.field, self.n,
                         field_rref(self.field, self.n,
                                    [[conj(x) for x in row] for row in self.basis]))

    def dual(self, inner: str = EUCLIDEAN) -> FieldCode:
        _check_inner(inner)
        f = self.field
        if inner == HERMITIAN:
            if not f.has_conjugation:
                raise ValueError("Hermitian dual needs a square field order")
            return self.conjugate_code().dual(EUCLIDEAN)
        pivots = [next(c for c, x in enumerate(row) if x) for row in self.basis]
        free = [c for c in range(self.n) if c not in pivots]
        rows = []
        for c in free:
            vec = [0] * self.n
            vec[c] = 1
            for row, p in zip(self.basis, pivots):
                vec[p] = f.neg(row[c])
            rows.append(vec)
        return FieldCode.from_rows(f, self.n, rows)

    def is_self_orthogonal(self, inner: str = EUCLIDEAN) -> bool:
        _check_inner(inner)
        f = self.field
        conj = inner == HERMITIAN
        if conj and not f.has_conjugation:
            raise ValueError("Hermitian product needs a square field order")
        for a in self.basis:
            for b in self.basis:
                s = 0
                for x, y in zip(a, b):
                    if x and y:
                        s = f.add(s, f.mul(x, f.conjugate(y) if conj else y))
                if s:
                    return False
        return True

    def is_self_dual(self, inner: str = EUCLIDEAN) -> bool:
        return 2 * self.dim == self.n and self.is_self_orthogonal(inner)

    def __eq__(self, other):
        if not isinstance(other, FieldCode):
            return NotImplemented
        return (self.field, self.n, self.basis) == (other.field, other.n, other.basis)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.basis))

    def __repr__(self) -> str:
        return f"FieldCode(GF({self.field.q}), n={self.n}, dim={self.dim})"


# ---------------------------------------------------------------------------
# small dense matrices over the residue field (row-major tuples)

def fmat(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in rows)


def fmat_identity(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if j == i else 0 for j in range(k)) for i in range(k))


def fmat_mul(field: Field, a, b, cols: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Matrix product; pass `cols` when b can be empty (inner dimension 0),
    since a zero-row matrix cannot carry its column count."""
    if b:
        cols = len(b[0])
    elif cols is None:
        cols = 0
    if cols == 0:
        return tuple(() for _ in a)
    out = []
    for arow in a:
        row = [0] * cols
        for i, x in enumerate(arow):
            if x:
                brow = b[i]
                for j in range(cols):
                    if brow[j]:
                        row[j] = field.add(row[j], field.mul(x, brow[j]))
        out.append(tuple(row))
    return tuple(out)


def fmat_add(field: Field, a, b):
    return tuple(tuple(field.add(x, y) for x, y in zip(r1, r2))
                 for r1, r2 in zip(a, b))


def fmat_neg(field: Field, a):
    return tuple(tuple(field.neg(x) for x in r) for r in a)


def fmat_t(a):
    return tuple(zip(*a)) if a else ()


def fmat_dagger(field: Field, a):
    """Conjugate transpose."""
    return tuple(tuple(field.conjugate(x) for x in col) for col in zip(*a)) if a else ()


def fmat_inv(field: Field, a) -> tuple[tuple[int, ...], ...] | None:
    """Inverse of a square matrix, or None when singular."""
    k = len(a)
    aug = [list(row) + [1 if j == i else 0 for j in range(k)]
           for i, row in enumerate(a)]
    for c in range(k):
        piv = None
        for i in range(c, k):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = field.inv(aug[c][c])
        if inv != 1:
            aug[c] = [field.mul(inv, x) for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [field.sub(x, field.mul(f, y))
                          for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[k:]) for row in aug)


# ---------------------------------------------------------------------------
# serialization: one portable schema for ring codes (any e) and field codes
# (e = 1); entries are length-e lists of length-m coefficient lists

def code_to_json(code: LinearCode) -> dict:
    ring = code.ring
    f = ring.field
    rows = [[[list(f.decode(d)) for d in ring.decode(entry)] for entry in row]
            for row in code.gens]
    return {"p": f.p, "m": f.m, "e": ring.e, "n": code.n,
            "modulus": list(f.modulus), "rows": rows}


def code_from_json(obj: dict) -> LinearCode:
    f = Field(int(obj["p"]), int(obj["m"]),
              tuple(int(c) for c in obj["modulus"]))
    ring = ChainRing(f, int(obj["e"]))
    gens = []
    for row in obj["rows"]:
        vec = []
        for entry in row:
            if len(entry) != ring.e:
                raise ValueError("entry does not have e coefficient lists")
            vec.append(ring.encode([f.encode(c) for c in entry]))
        gens.append(vec)
    return LinearCode(ring, int(obj["n"]), gens)


def field_code_to_json(code: FieldCode) -> dict:
    f = code.field
    rows = [[[list(f.decode(x))] for x in row] for row in code.basis]
    return {"p": f.p, "m": f.m, "e": 1, "n": code.n,
            "modulus": list(f.modulus), "rows": rows}


def field_code_from_json(obj: dict) -> FieldCode:
    if int(obj["e"]) != 1:
        raise ValueError("field codes must have e = 1")
    f = Field(int(obj["p"]), int(obj["m"]),
              tuple(int(c) for c in obj["modulus"]))
    rows = [[f.encode(entry[0]) for entry in row] for row in obj["rows"]]
    return FieldCode.from_rows(f, int(obj["n"]), rows)


def dumps_code(code) -> str:
    obj = code_to_json(code) if isinstance(code, LinearCode) else field_code_to_json(code)
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def loads_code(text: str) -> LinearCode:
    """Parse the portable schema as a chain-ring code (works for any e;
    use field_code_from_json to reload an e = 1 file as a FieldCode)."""
    obj = json.loads(text)
    try:
        return code_from_json(obj)
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed code document: {exc}") from exc
