"""Tests for the finite-field layer."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, sampled_from

from chaincodes.gf import (
    Field,
    canonical_modulus,
    factor_prime_power,
    field_make,
    is_irreducible,
    is_prime,
)

MAX_EXAMPLES = 200

FIELD_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49]
SQUARE_ORDERS = [4, 9, 16, 25, 49]


def poly_mul_mod_p(a, b, p):
    """Schoolbook product of coefficient tuples (constant term first)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def irreducible_by_factor_scan(coeffs, p):
    """Independent oracle: no monic factor pair multiplies back to coeffs."""
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] != 1 or (deg > 1 and coeffs[0] == 0):
        return False
    for d in range(1, deg // 2 + 1):
        for low_a in itertools.product(range(p), repeat=d):
            a = low_a + (1,)
            for low_b in itertools.product(range(p), repeat=deg - d):
                b = low_b + (1,)
                if poly_mul_mod_p(a, b, p) == tuple(coeffs):
                    return False
    return True


# ---------------------------------------------------------------------------
# primes, prime powers, moduli

def test_is_prime_small_range():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-1, 50):
        assert is_prime(n) == (n in primes)


def test_factor_prime_power_roundtrip():
    for p in (2, 3, 5, 7, 11):
        for m in range(1, 6):
            assert factor_prime_power(p ** m) == (p, m)


@pytest.mark.parametrize("bad", [0, 1, 6, 10, 12, 15, 36, 100])
def test_factor_prime_power_rejects_composites(bad):
    with pytest.raises(ValueError):
        factor_prime_power(bad)


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3),
                                 (5, 2), (7, 2)])
def test_canonical_modulus_is_first_irreducible(p, m):
    got = canonical_modulus(p, m)
    assert irreducible_by_factor_scan(got, p)
    # first monic irreducible in lexicographic coefficient order
    for low in itertools.product(range(p), repeat=m):
        cand = low + (1,)
        if irreducible_by_factor_scan(cand, p):
            assert cand == got
            break
        assert not is_irreducible(cand, p)


def test_canonical_modulus_known_values():
    assert canonical_modulus(2, 2) == (1, 1, 1)
    assert canonical_modulus(3, 2) == (1, 0, 1)


def test_is_irreducible_agrees_with_factor_scan():
    for p in (2, 3):
        for deg in (1, 2, 3, 4):
            for low in itertools.product(range(p), repeat=deg):
                cand = low + (1,)
                assert is_irreducible(cand, p) == \
                    irreducible_by_factor_scan(cand, p)


def test_field_rejects_bad_moduli():
    with pytest.raises(ValueError):
        Field(2, 2, (0, 0, 1))        # x^2 factors
    with pytest.raises(ValueError):
        Field(2, 2, (1, 1))           # wrong degree
    with pytest.raises(ValueError):
        Field(4, 1)                   # not prime
    with pytest.raises(ValueError):
        field_make(2, 30)             # exceeds default order bound


# ---------------------------------------------------------------------------
# arithmetic

def test_gf4_multiplication_table():
    f = field_make(2, 2)
    x = f.encode((0, 1))
    assert f.mul(x, x) == f.encode((1, 1))       # x^2 = x + 1
    assert f.mul(x, f.encode((1, 1))) == 1       # x * (x + 1) = 1
    assert f.inv(x) == f.encode((1, 1))


def test_gf9_squares():
    f = field_make(3, 2)
    x = f.encode((0, 1))
    assert f.mul(x, x) == f.neg(1)               # x^2 = -1 under x^2 + 1
    assert f.pow(x, 4) == 1


@pytest.mark.parametrize("q", FIELD_ORDERS)
def test_field_axioms_exhaustive(q):
    p, m = factor_prime_power(q)
    f = field_make(p, m)
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    # spot-check associativity and distributivity on a deterministic slice
    sample = els[:: max(1, len(els) // 8)]
    for a in sample:
        for b in sample:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in sample:
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
                assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49])
def test_frobenius_is_additive(q):
    p, m = factor_prime_power(q)
    f = field_make(p, m)
    for a in f.elements():
        for b in f.elements():
            assert f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p))


@given(a=integers(min_value=0, max_value=48), k=integers(min_value=0, max_value=60))
@settings(deadline=None, max_examples=MAX_EXAMPLES)
def test_pow_matches_repeated_multiplication(a, k):
    f = field_make(7, 2)
    acc = 1
    for _ in range(k):
        acc = f.mul(acc, a)
    assert f.pow(a, k) == acc


def test_encode_decode_roundtrip():
    f = field_make(3, 3)
    for a in f.elements():
        assert f.encode(f.decode(a)) == a
    assert f.decode(f.encode((2, 1))) == (2, 1, 0)


# ---------------------------------------------------------------------------
# conjugation and trace down to the index-2 subfield

@pytest.mark.parametrize("q", SQUARE_ORDERS)
def test_conjugation_is_an_involution_fixing_the_subfield(q):
    p, m = factor_prime_power(q)
    f = field_make(p, m)
    assert f.has_conjugation
    r = f.sqrt_q
    for a in f.elements():
        assert f.conjugate(f.conjugate(a)) == a
        assert (f.conjugate(a) == a) == f.in_subfield(a)
        assert f.conjugate(a) == f.pow(a, r)
    assert sum(f.in_subfield(a) for a in f.elements()) == r


@pytest.mark.parametrize("q", SQUARE_ORDERS)
def test_conjugation_is_a_field_automorphism(q):
    p, m = factor_prime_power(q)
    f = field_make(p, m)
    for a in f.elements():
        for b in f.elements():
            assert f.conjugate(f.add(a, b)) == f.add(f.conjugate(a), f.conjugate(b))
            assert f.conjugate(f.mul(a, b)) == f.mul(f.conjugate(a), f.conjugate(b))


def test_conjugation_refused_on_odd_degree():
    f = field_make(2, 3)
    assert not f.has_conjugation
    with pytest.raises(ValueError):
        f.conjugate(1)


@pytest.mark.parametrize("q", SQUARE_ORDERS)
def test_trace_partitions_the_field(q):
    p, m = factor_prime_power(q)
    f = field_make(p, m)
    r = f.sqrt_q
    seen = []
    for t in f.elements():
        if not f.in_subfield(t):
            with pytest.raises(ValueError):
                f.trace_preimage(t)
            continue
        pre = f.trace_preimage(t)
        assert len(pre) == q // r
        for a in pre:
            assert f.trace(a) == t
            assert f.trace(a) == f.add(a, f.conjugate(a))
        seen.extend(pre)
    assert sorted(seen) == list(f.elements())


# ---------------------------------------------------------------------------
# element wrapper

def test_element_wrapper_operators():
    f = field_make(2, 2)
    x = f.element((0, 1))
    y = f.element(1)
    assert (x + y) * x == f.one()
    assert (x / x) == 1
    assert (-x) == x           # characteristic 2
    assert x ** 3 == 1
    assert x.inverse() * x == y
    assert bool(f.zero()) is False
    assert x.conjugate() == x + 1


@given(code=integers(min_value=0, max_value=8), k=integers(min_value=1, max_value=7))
@settings(deadline=None, max_examples=MAX_EXAMPLES)
def test_element_pow_consistent_with_field_pow(code, k):
    f = field_make(3, 2)
    assert (f.element(code) ** k).code == f.pow(code, k)
