import random
from fractions import Fraction

import pytest
import sympy

from pzero import poly as P
from pzero.field import make_field
from pzero.ramify import (
    INF,
    ASCover,
    Orbit,
    RamificationError,
    RamificationProfile,
    as_cover_analyze,
    as_profile,
    as_reduce,
    as_reduce_with_shift,
    check_filtration,
    deuring_shafarevich,
    different_exponent,
    hurwitz_genus,
    quotient_genus_tame,
    tame_hurwitz_genus,
)


def rand_poly(F, rng, d):
    return P.trim(tuple(rng.randrange(F.order) for _ in range(d)) + (rng.randrange(1, F.order),))


def product(F, factors):
    out = (1,)
    for f, m in factors:
        for _ in range(m):
            out = P.mul(F, out, f)
    return out


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_factorisation_multiplies_back(e):
    F = make_field(e)
    rng = random.Random(e)
    for _ in range(40):
        f = P.monic(F, rand_poly(F, rng, rng.randrange(1, 9)))
        fac = P.factor(F, f)
        assert product(F, fac) == f
        for g, _ in fac:
            assert g[-1] == 1 and P.deg(g) >= 1


def test_factorisation_over_gf2_matches_sympy():
    x = sympy.symbols("x")
    rng = random.Random(3)
    F = make_field(1)
    for _ in range(60):
        f = rand_poly(F, rng, rng.randrange(2, 12))
        ours = sorted((P.deg(g), m) for g, m in P.factor(F, f))
        expr = sympy.Poly(list(reversed(f)), x, modulus=2)
        theirs = sorted((sympy.degree(g, x), m) for g, m in expr.factor_list()[1])
        assert ours == theirs


def test_poly_arithmetic_basics():
    F = make_field(3)
    a, b = (1, 2, 3), (5, 1)
    q, r = P.divmod_(F, a, b)
    assert P.add(P.mul(F, q, b), r) == a
    assert P.deg(r) < P.deg(b)
    assert P.derivative((1, 1, 1, 1)) == (1, 0, 1)
    sq = P.mul(F, a, a)
    assert P.sqrt_poly(F, sq) == a
    m = (1, 1, 0, 1)  # x^3 + x + 1, irreducible over GF(2) hence coprime to most things
    inv = P.inv_mod(F, (3, 1), m)
    assert P.mod(F, P.mul(F, inv, (3, 1)), m) == (1,)
    assert P.evaluate(F, (1, 0, 1), 1) == 0


def test_different_exponent_and_filtrations():
    assert different_exponent([2, 2, 2, 1]) == 3
    assert different_exponent([3, 1]) == 2
    for bad in ([], [2, 3], [4, 3], [6, 3], [0]):
        with pytest.raises(RamificationError):
            check_filtration(bad)


def test_hurwitz_hermitian_curve_over_gf16():
    # the Hermitian curve of degree 5 has genus 6; quotient by the Sylow
    # 2-subgroup of order 64 of its stabiliser, one wild orbit of size 1
    n = 4
    prof = RamificationProfile(n**3, 0, [Orbit(1, (n**3,) * 2 + (n,) * n + (1,))])
    assert hurwitz_genus(prof) == n * (n - 1) // 2


def test_hurwitz_rejects_non_integral():
    prof = RamificationProfile(2, 0, [Orbit(1, (2, 1))])
    with pytest.raises(RamificationError):
        hurwitz_genus(prof)


def test_profile_json_roundtrip():
    prof = RamificationProfile(8, 1, [Orbit(2, (4, 4, 1))])
    again = RamificationProfile.loads('{"G": 8, "g_quot": 1, "orbits": [{"size": 2, "filtration": [4, 4, 1]}]}')
    assert again == prof
    assert RamificationProfile.from_json(prof.to_json()) == prof
    with pytest.raises(RamificationError):
        RamificationProfile(8, 0, [Orbit(3, (4, 1))])


def test_tame_hurwitz():
    # C3 acting on P^1 with two fixed points: genus 0
    assert tame_hurwitz_genus(3, 0, [1, 1]) == 0
    # hyperelliptic: C2 over P^1 with 2g + 2 branch points
    assert tame_hurwitz_genus(2, 0, [1] * 8) == 3
    with pytest.raises(RamificationError):
        tame_hurwitz_genus(3, 0, [2])


def test_deuring_shafarevich():
    assert deuring_shafarevich(2, 0, [1, 1, 1]) == 2
    assert deuring_shafarevich(4, 0, [1]) == 0
    assert deuring_shafarevich(8, 1, []) == 1
    with pytest.raises(RamificationError):
        deuring_shafarevich(6, 0, [])


def test_quotient_genus_by_odd_group():
    assert quotient_genus_tame(456, 13, 65) == 6
    assert quotient_genus_tame(456, 5, 65) == 66
    with pytest.raises(RamificationError):
        quotient_genus_tame(456, 65, 65)
    with pytest.raises(RamificationError):
        quotient_genus_tame(10, 4, 1)



@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_artin_schreier_polynomial_genus(m):
    c = ASCover.polynomial(1, (0,) * m + (1,))
    a = as_cover_analyze(c)
    assert a.genus == (m - 1) // 2
    assert a.two_rank == 0
    assert a.ramified_places == [INF]


def test_even_poles_are_reduced():
    F = make_field(2)
    c = ASCover(F, (0, 0, 0, 0, 1))  # x^4 ~ x
    r = as_reduce(c)
    assert r.reduced
    assert as_cover_analyze(r).genus == 0
    # x^6 + x^3: x^6 = (x^3)^2 ~ x^3 so f ~ 0 ... keep a genuine pole
    c2 = ASCover(F, (0, 0, 0, 0, 0, 1, 1))
    r2, (hn, hd) = as_reduce_with_shift(c2)
    assert P.deg(r2.num) - P.deg(r2.den) == 5
    # f' = f + h^2 + h
    again = c2.add(hn, hd)
    assert (again.num, again.den) == (r2.num, r2.den)
    with pytest.raises(RamificationError):
        as_cover_analyze(c2)


def test_finite_pole_and_two_rank():
    F = make_field(1)
    # y^2 + y = x^3 + 1/x : poles of order 3 at infinity and 1 at 0
    c = ASCover(F, (1, 0, 0, 0, 1), (0, 1))
    a = as_cover_analyze(c)
    assert sorted(a.pole_orders) == [1, 3]
    assert a.genus == 2
    assert a.two_rank == 1
    prof = as_profile(a)
    assert hurwitz_genus(prof) == a.genus


def test_poles_at_degree_two_place():
    F = make_field(1)
    # 1/(x^2+x+1): one place of degree 2, i.e. two geometric points
    c = ASCover(F, (1,), (1, 1, 1))
    a = as_cover_analyze(c)
    assert a.place_degrees == [2]
    # 2g - 2 = -4 + 2 * (1 + 1)
    assert a.genus == 1 and a.two_rank == 1


def test_genus_matches_point_count_bound():
    # Weil: |#C(F_q) - (q+1)| <= 2 g sqrt(q) for the smooth model
    F = make_field(4)
    c = ASCover(F, (0, 1, 0, 1, 0, 1))  # x^5 + x^3 + x
    g = as_cover_analyze(c).genus
    assert g == 2
    fib = {}
    for y in range(F.order):
        fib.setdefault(F.mul(y, y) ^ y, 0)
        fib[F.mul(y, y) ^ y] += 1
    affine = sum(fib.get(P.evaluate(F, c.num, x), 0) for x in range(F.order))
    total = affine + 1
    assert abs(total - (F.order + 1)) <= 2 * g * Fraction(F.order) ** Fraction(1, 2) + 1e-9


def test_constant_cover_rejected():
    with pytest.raises(RamificationError):
        as_cover_analyze(ASCover(make_field(2), (3,)))
