"""Tests for linear codes over the chain ring and their residue-field shadows."""
import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, lists, sampled_from, tuples

from chaincodes.chainring import chain_ring
from chaincodes.codes import (
    EUCLIDEAN,
    HERMITIAN,
    FieldCode,
    LinearCode,
    code_from_json,
    code_to_json,
    dumps_code,
    field_code_from_json,
    field_code_to_json,
    field_rref,
    fmat,
    fmat_dagger,
    fmat_identity,
    fmat_inv,
    fmat_mul,
    inner_product,
    loads_code,
)
from chaincodes.gf import field_make

MAX_EXAMPLES = 120


def all_vectors(ring, n):
    return itertools.product(ring.elements(), repeat=n)


def brute_codewords(code):
    """Membership scan over the full ambient module."""
    return {v for v in all_vectors(code.ring, code.n) if code.contains(v)}


def brute_dual(code, inner):
    """Orthogonality scan against the generators."""
    ring = code.ring
    out = set()
    for w in all_vectors(ring, code.n):
        if all(inner_product(ring, g, w, inner) == 0 for g in code.gens):
            out.add(w)
    return out


def brute_torsion(code, i):
    """Residues of the vectors that land in the code after scaling by u^i."""
    ring = code.ring
    out = set()
    for v in all_vectors(ring, code.n):
        scaled = tuple(ring.shift_up(x, i) for x in v)
        if code.contains(scaled):
            out.add(tuple(ring.residue(x) for x in v))
    return out


# ---------------------------------------------------------------------------
# inner products

def test_inner_product_examples():
    r = chain_ring(4, 3)
    u = r.u
    assert inner_product(r, (u, u), (u, u), HERMITIAN) == r.add(
        r.mul(u, r.conjugate(u)), r.mul(u, r.conjugate(u)))
    assert inner_product(r, (1, 0), (0, 1)) == 0
    assert inner_product(r, (1, 1), (1, 1)) == r.add(1, 1)
    with pytest.raises(ValueError):
        inner_product(r, (1,), (1,), "symplectic")


def test_hermitian_product_is_conjugate_symmetric():
    r = chain_ring(4, 2)
    for v in all_vectors(r, 2):
        for w in all_vectors(r, 2):
            lhs = inner_product(r, v, w, HERMITIAN)
            rhs = r.conjugate(inner_product(r, w, v, HERMITIAN))
            assert lhs == rhs


# ---------------------------------------------------------------------------
# standard form

def test_standard_form_worked_example():
    r = chain_ring(4, 3)
    u = r.u
    u2 = r.mul(u, u)
    code = LinearCode(r, 2, [(u, u), (0, u2)])
    sf = code.standard_form()
    assert sf.pivot_vals == (1, 2)
    assert code.type_profile == (0, 1, 1)
    assert code.cardinality() == 4 ** 2 * 4


def test_standard_form_full_and_zero():
    r = chain_ring(2, 3)
    full = LinearCode.full(r, 3)
    assert full.type_profile == (3, 0, 0)
    assert full.cardinality() == r.size ** 3
    zero = LinearCode.zero(r, 3)
    assert zero.type_profile == (0, 0, 0)
    assert zero.cardinality() == 1
    assert list(zero.codewords()) == [(0, 0, 0)]


def test_standard_form_is_a_fixed_point():
    r = chain_ring(3, 3)
    code = LinearCode(r, 3, [(1, 2, r.u), (0, r.u, 1), (0, 0, r.mul(r.u, r.u))])
    sf = code.standard_form()
    again = LinearCode(r, 3, sf.unpermuted_rows()).standard_form()
    assert again.rows == sf.rows or LinearCode(
        r, 3, again.unpermuted_rows()).equal(code)
    # the span is unchanged either way
    assert LinearCode(r, 3, sf.unpermuted_rows()).equal(code)


def test_pivot_valuations_are_sorted():
    r = chain_ring(2, 3)
    code = LinearCode(r, 4, [(r.u, 1, 0, 1), (0, r.u, r.u, 0), (1, 1, 1, 1)])
    sf = code.standard_form()
    assert list(sf.pivot_vals) == sorted(sf.pivot_vals)
    assert sf.rank == len(sf.rows)


@given(gens=lists(tuples(integers(0, 7), integers(0, 7)), min_size=0, max_size=3))
@settings(deadline=None, max_examples=MAX_EXAMPLES)
def test_cardinality_matches_codeword_scan(gens):
    r = chain_ring(2, 3)
    code = LinearCode(r, 2, gens)
    words = set(code.codewords())
    assert len(words) == code.cardinality()
    assert words == brute_codewords(code)


@given(gens=lists(tuples(integers(0, 26), integers(0, 26)), min_size=1, max_size=2))
@settings(deadline=None, max_examples=60)
def test_codewords_are_closed_under_the_module_action(gens):
    r = chain_ring(3, 3)
    code = LinearCode(r, 2, gens)
    words = list(code.codewords())
    probe = words[: 12]
    for v in probe:
        for w in probe:
            assert code.contains(tuple(r.add(a, b) for a, b in zip(v, w)))
        for c in (r.u, 2):
            assert code.contains(tuple(r.mul(c, a) for a in v))


def test_contains_rejects_outsiders():
    r = chain_ring(2, 3)
    code = LinearCode(r, 2, [(r.u, 0), (0, r.u)])
    assert code.contains((r.u, r.u))
    assert not code.contains((1, 0))
    assert not code.contains((1, r.u))
    with pytest.raises(ValueError):
        code.contains((1,))


# ---------------------------------------------------------------------------
# torsion and residue codes

@pytest.mark.parametrize("gens", [
    [(2, 2), (0, 4)],          # u codes as 2, u^2 as 4 over GF(2)
    [(1, 3)],
    [(2, 0), (0, 1)],
    [],
])
def test_torsion_matches_membership_scan(gens):
    r = chain_ring(2, 3)
    code = LinearCode(r, 2, gens)
    for i in range(3):
        tor = code.torsion(i)
        assert set(tor.codewords()) == brute_torsion(code, i)
    assert code.residue() == code.torsion(0)


def test_torsion_tower_is_increasing():
    r = chain_ring(3, 3)
    code = LinearCode(r, 2, [(1, 2), (0, r.u)])
    t0, t1, t2 = (code.torsion(i) for i in range(3))
    assert t0.subspace_of(t1) and t1.subspace_of(t2)
    assert code.cardinality() == 3 ** (t0.dim + t1.dim + t2.dim)


def test_torsion_rejects_other_depths():
    r = chain_ring(2, 2)
    code = LinearCode.full(r, 1)
    with pytest.raises(ValueError):
        code.torsion(1)
    code3 = LinearCode.full(chain_ring(2, 3), 1)
    with pytest.raises(ValueError):
        code3.torsion(3)


# ---------------------------------------------------------------------------
# duality

DUAL_CASES = [
    (2, 2, [(2, 2), (0, 4)]),
    (2, 2, [(1, 1)]),
    (2, 2, []),
    (2, 1, [(2,)]),
    (3, 2, [(3, 1)]),
]


@pytest.mark.parametrize("q,n,gens", DUAL_CASES)
def test_euclidean_dual_matches_orthogonality_scan(q, n, gens):
    r = chain_ring(q, 3)
    code = LinearCode(r, n, gens)
    dual = code.dual(EUCLIDEAN)
    assert set(dual.codewords()) == brute_dual(code, EUCLIDEAN)
    assert code.cardinality() * dual.cardinality() == r.size ** n
    assert code.dual(EUCLIDEAN).dual(EUCLIDEAN).equal(code)


@pytest.mark.parametrize("gens", [[(2, 2), (0, 4)], [(1, 6)], [], [(3, 5), (0, 4)]])
def test_hermitian_dual_matches_orthogonality_scan(gens):
    r = chain_ring(4, 3)
    code = LinearCode(r, 2, gens)
    dual = code.dual(HERMITIAN)
    assert set(dual.codewords()) == brute_dual(code, HERMITIAN)
    assert code.dual(HERMITIAN).dual(HERMITIAN).equal(code)
    # the Hermitian dual is the coordinatewise conjugate of the Euclidean one
    assert dual.equal(code.dual(EUCLIDEAN).conjugate_code())


def test_dual_type_profile_flips():
    r = chain_ring(2, 3)
    code = LinearCode(r, 3, [(1, 0, 1), (0, 2, 0)])   # type (1, 1, 0)
    k, l, m = code.type_profile
    dk, dl, dm = code.dual(EUCLIDEAN).type_profile
    assert (dk, dl, dm) == (3 - k - l - m, m, l)


def test_hermitian_dual_needs_conjugation():
    r = chain_ring(2, 3)
    with pytest.raises(ValueError):
        LinearCode.full(r, 1).dual(HERMITIAN)


def test_self_dual_examples():
    r4 = chain_ring(4, 3)
    u, u2 = r4.u, r4.mul(r4.u, r4.u)
    code = LinearCode(r4, 2, [(u, u), (0, u2)])
    assert code.is_self_orthogonal(HERMITIAN)
    assert code.is_self_dual(HERMITIAN)

    # x generates GF(4); 1 + x*conj(x) = 0 but 1 + x^2 != 0
    x = r4.field.encode((0, 1))
    gen = LinearCode(r4, 2, [(1, x)])
    assert gen.is_self_dual(HERMITIAN)
    assert not gen.is_self_orthogonal(EUCLIDEAN)

    r2 = chain_ring(2, 3)
    assert LinearCode(r2, 2, [(1, 1)]).is_self_dual(EUCLIDEAN)
    assert not LinearCode(r2, 2, [(1, 0)]).is_self_orthogonal(EUCLIDEAN)
    assert not LinearCode.zero(r2, 2).is_self_dual(EUCLIDEAN)


def test_equal_distinguishes_codes():
    r = chain_ring(2, 3)
    a = LinearCode(r, 2, [(1, 1)])
    b = LinearCode(r, 2, [(1, 1), (2, 2)])
    c = LinearCode(r, 2, [(1, 0)])
    assert a.equal(b)
    assert not a.equal(c)


# ---------------------------------------------------------------------------
# residue-field codes

def test_field_rref_and_dims():
    f = field_make(2, 1)
    rows = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    basis = field_rref(f, 3, rows)
    assert len(basis) == 2
    code = FieldCode.from_rows(f, 3, rows)
    assert code.dim == 2
    assert code.cardinality() == 4
    assert len(set(code.codewords())) == 4


def test_field_dual_and_subspaces():
    f = field_make(3, 1)
    code = FieldCode.from_rows(f, 3, [(1, 1, 1)])
    dual = code.dual(EUCLIDEAN)
    assert dual.dim == 2
    assert all(sum(a * b for a, b in zip(v, w)) % 3 == 0
               for v in code.codewords() for w in dual.codewords())
    assert dual.dual(EUCLIDEAN) == code
    assert FieldCode.zero(f, 3).subspace_of(code)
    assert code.subspace_of(FieldCode.full(f, 3))
    assert not dual.subspace_of(code)


def test_field_self_dual_examples():
    f2 = field_make(2, 1)
    assert FieldCode.from_rows(f2, 2, [(1, 1)]).is_self_dual(EUCLIDEAN)
    f4 = field_make(2, 2)
    x = f4.encode((0, 1))
    herm = FieldCode.from_rows(f4, 2, [(1, x)])
    assert herm.is_self_dual(HERMITIAN) == (
        f4.add(f4.mul(1, f4.conjugate(1)), f4.mul(x, f4.conjugate(x))) == 0)


def test_field_code_conjugate():
    f = field_make(2, 2)
    x = f.encode((0, 1))
    code = FieldCode.from_rows(f, 2, [(1, x)])
    conj = code.conjugate_code()
    assert set(conj.codewords()) == {
        tuple(f.conjugate(c) for c in w) for w in code.codewords()}


# ---------------------------------------------------------------------------
# matrix helpers

def test_fmat_inverse_and_dagger():
    f = field_make(2, 2)
    x = f.encode((0, 1))
    a = fmat([(1, x), (x, 1)])
    inv = fmat_inv(f, a)
    assert inv is not None
    assert fmat_mul(f, a, inv) == fmat_identity(2)
    singular = fmat([(1, 1), (1, 1)])
    assert fmat_inv(f, singular) is None
    dag = fmat_dagger(f, a)
    assert dag == fmat([(1, f.conjugate(x)), (f.conjugate(x), 1)])


def test_fmat_mul_degenerate_shapes():
    f = field_make(2, 1)
    tall = fmat([(), ()])                       # 2 x 0
    assert fmat_mul(f, tall, (), cols=3) == ((0, 0, 0), (0, 0, 0))
    assert fmat_mul(f, tall, (), cols=0) == ((), ())
    assert fmat_mul(f, (), fmat([(1, 0)])) == ()


# ---------------------------------------------------------------------------
# serialization

def test_linear_code_json_roundtrip():
    r = chain_ring(4, 3)
    code = LinearCode(r, 2, [(r.u, 1), (0, 5)])
    text = dumps_code(code)
    back = loads_code(text)
    assert back.ring == code.ring and back.n == code.n
    assert back.equal(code)
    obj = json.loads(text)
    assert code_from_json(obj).equal(code)
    assert code_to_json(code) == obj


def test_field_code_json_roundtrip():
    f = field_make(3, 2)
    code = FieldCode.from_rows(f, 3, [(1, 2, 3), (0, 1, 1)])
    obj = field_code_to_json(code)
    back = field_code_from_json(obj)
    assert back == code


def test_loads_code_rejects_garbage():
    with pytest.raises(ValueError):
        loads_code("not json")
    with pytest.raises(ValueError):
        loads_code(json.dumps({"q": 4}))
