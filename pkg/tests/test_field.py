import random

import pytest
import sympy

from pzero import field as fld
from pzero.field import FieldElement, FieldError, make_field


def schoolbook_mul(a, b, modulus, r):
    """Carry-less product reduced bit by bit; independent of the log tables."""
    prod = 0
    for i in range(r):
        if b >> i & 1:
            prod ^= a << i
    for bit in range(2 * r - 2, r - 1, -1):
        if prod >> bit & 1:
            prod ^= modulus << (bit - r)
    return prod


def elems(F):
    return [FieldElement(F, b) for b in range(F.order)]


def test_make_field_is_canonical():
    assert make_field(1).order == 2
    assert make_field(3).order == 8
    assert make_field(4) is make_field(4)
    assert make_field(4).modulus == 0x13


@pytest.mark.parametrize("r", [0, 21, -1])
def test_make_field_rejects_out_of_range(r):
    with pytest.raises(FieldError):
        make_field(r)


@pytest.mark.parametrize("r", range(1, 21))
def test_moduli_irreducible_by_independent_oracle(r):
    F = make_field(r)
    coeffs = [int(c) for c in bin(F.modulus)[2:]]
    x = sympy.symbols("x")
    assert sympy.Poly(coeffs, x, modulus=2).is_irreducible
    assert fld.is_irreducible(F.modulus)


def test_trial_division_rejects_reducible():
    assert not fld.is_irreducible(0b101)  # x^2 + 1 = (x+1)^2
    assert not fld.is_irreducible(0b110)  # x(x+1)

def test_trial_division_products():
    # (x^2+x+1)(x^3+x+1) is reducible
    assert not fld.is_irreducible(fld.clmul_mod(0b111, 0b1011, 1 << 40, 40))
    assert fld.is_irreducible(0b11111)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6, 7, 8])
def test_multiplication_matches_schoolbook(r):
    F = make_field(r)
    rng = random.Random(r)
    pairs = [(a, b) for a in range(F.order) for b in range(F.order)] if r <= 5 else [
        (rng.randrange(F.order), rng.randrange(F.order)) for _ in range(5000)
    ]
    for a, b in pairs:
        assert F.mul(a, b) == schoolbook_mul(a, b, F.modulus, r)


@pytest.mark.parametrize("r", range(1, 9))
def test_inverse_law_and_lagrange(r):
    F = make_field(r)
    for x in elems(F)[1:]:
        assert (x * fld.inv(x)).bits == 1
        assert fld.pow(x, F.order - 1).bits == 1


@pytest.mark.parametrize("r", [3, 5, 8])
def test_axioms_on_random_triples(r):
    F = make_field(r)
    rng = random.Random(0xF1E1D + r)
    for _ in range(10_000):
        a, b, c = (FieldElement(F, rng.randrange(F.order)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert fld.add(a, a).bits == 0


def test_inv_zero_and_mixed_specs_are_errors():
    F = make_field(3)
    with pytest.raises(ZeroDivisionError):
        fld.inv(FieldElement(F, 0))
    with pytest.raises(FieldError):
        FieldElement(F, 1) + FieldElement(make_field(4), 1)
    with pytest.raises(FieldError):
        FieldElement(F, 8)


def test_pow_square_and_multiply_agrees_with_log_pow():
    F = make_field(7)
    for a in range(F.order):
        for k in (0, 1, 2, 5, 127, 300):
            assert F.pow_sqm(a, k) == F.pow(a, k)


def test_frobenius():
    F = make_field(5)
    for x in elems(F):
        assert fld.frobenius(x, 0) == x
        assert fld.frobenius(x, 5) == x
        assert fld.frobenius(x, 1) == x * x
    with pytest.raises(FieldError):
        fld.frobenius(FieldElement(F, 1), -1)


def test_relative_trace_and_norm_16_over_4():
    F = make_field(4)
    traces = [fld.rel_trace(x, 2) for x in elems(F)]
    assert sum(1 for t in traces if t.bits == 0) == 4  # kernel has index 4
    assert all(F.in_subfield(t.bits, 2) for t in traces)
    assert fld.rel_trace(FieldElement(F, 0), 2).bits == 0
    assert fld.rel_norm(FieldElement(F, 1), 2).bits == 1
    fibres = {}
    for x in elems(F)[1:]:
        fibres.setdefault(fld.rel_norm(x, 2).bits, []).append(x)
    assert sorted(fibres) == sorted(b for b in F.subfield(2) if b)
    assert all(len(v) == 5 for v in fibres.values())


def test_relative_trace_rejects_non_subfield():
    with pytest.raises(FieldError):
        make_field(6).rel_trace(3, 4)


@pytest.mark.parametrize("r", [1, 4, 9])
def test_absolute_trace_balanced_and_linear(r):
    F = make_field(r)
    tr = [F.trace(a) for a in range(F.order)]
    assert set(tr) <= {0, 1}
    assert tr.count(0) == F.order // 2
    rng = random.Random(r)
    for _ in range(200):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        assert F.trace(a ^ b) == tr[a] ^ tr[b]


def test_tits_power_on_gf8():
    F = make_field(3)
    for x in elems(F):
        t = fld.tits_power(x)
        assert t == fld.frobenius(x, 2)
        assert fld.tits_power(t) == x * x
    assert fld.tits_power(FieldElement(F, 0)).bits == 0
    assert fld.tits_power(FieldElement(F, 1)).bits == 1


@pytest.mark.parametrize("r", [3, 5, 7])
def test_tits_power_is_automorphism(r):
    F = make_field(r)
    imgs = [F.tits_power(a) for a in range(F.order)]
    assert sorted(imgs) == list(range(F.order))
    rng = random.Random(r)
    for _ in range(500):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        assert F.tits_power(F.mul(a, b)) == F.mul(imgs[a], imgs[b])
        assert F.tits_power(a ^ b) == imgs[a] ^ imgs[b]
        assert F.tits_power(imgs[a]) == F.frobenius(a, 1)


@pytest.mark.parametrize("r", [2, 4, 6])
def test_tits_power_rejects_even_degree(r):
    with pytest.raises(FieldError):
        make_field(r).tits_power(1)


@pytest.mark.parametrize("r", [1, 2, 3, 6, 10])
def test_artin_schreier_solver_matches_enumeration(r):
    F = make_field(r)
    table = {}
    for y in range(F.order):
        table.setdefault(F.mul(y, y) ^ y, set()).add(y)
    for c in range(F.order):
        sols = fld.solve_artin_schreier(FieldElement(F, c))
        assert {s.bits for s in sols} == table.get(c, set())
        assert len(sols) in (0, 2)
        assert (len(sols) == 2) == (F.trace(c) == 0)
        assert {FieldElement(F, s.bits ^ 1) for s in sols} == sols


def test_artin_schreier_examples():
    F4 = make_field(2)
    assert {s.bits for s in fld.solve_artin_schreier(FieldElement(F4, 0))} == {0, 1}
    trace_one = [c for c in range(4) if F4.trace(c)]
    assert trace_one and all(not fld.solve_artin_schreier(FieldElement(F4, c)) for c in trace_one)


def test_json_roundtrip():
    x = FieldElement(make_field(3), 5)
    assert x.to_json() == {"r": 3, "val": 5}
    assert FieldElement.from_json({"r": 3, "val": 5}) == x


@pytest.mark.parametrize("r", range(2, 21))
def test_moduli_are_primitive(r):
    F = make_field(r)
    order = F.order - 1
    primes = [p for p in sympy.primefactors(order)]
    assert F.generator == 2
    for p in primes:
        assert F.pow_sqm(2, order // p) != 1
