"""Genus arithmetic for Galois covers: the Hurwitz formula with higher
ramification groups, its tame specialisation, the Deuring-Shafarevich
formula for the p-rank, and Artin-Schreier covers y^2 + y = f(x) of the
projective line over GF(2^e).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import poly as P
from .field import FieldSpec, make_field

INF = "inf"


class RamificationError(ValueError):
    """Inconsistent ramification data (non-integral or negative genus, bad filtration)."""


def _is_power_of_two(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def _as_genus(two_g_minus_2: Fraction | int, what: str = "genus") -> int:
    g = Fraction(two_g_minus_2 + 2, 2)
    if g.denominator != 1:
        raise RamificationError(f"{what} {g} is not an integer")
    if g < 0:
        raise RamificationError(f"{what} {g} is negative")
    return int(g)


def different_exponent(filtration: Sequence[int]) -> int:
    """d = sum over i of (|G^(i)| - 1)."""
    check_filtration(filtration)
    return sum(k - 1 for k in filtration)


def check_filtration(filtration: Sequence[int]) -> None:
    if not filtration:
        raise RamificationError("empty filtration")
    if any(k < 1 for k in filtration):
        raise RamificationError("filtration entries must be positive")
    for a, b in zip(filtration, filtration[1:]):
        if b > a or a % b:
            raise RamificationError(f"filtration {list(filtration)} is not a descending chain of subgroups")
    if len(filtration) > 1 and not _is_power_of_two(filtration[1]):
        raise RamificationError(f"first higher ramification group has order {filtration[1]}, not a power of 2")


@dataclass(frozen=True)
class Orbit:
    size: int
    filtration: tuple[int, ...]

    @property
    def stabilizer_order(self) -> int:
        return self.filtration[0]

    @property
    def different(self) -> int:
        return different_exponent(self.filtration)


@dataclass
class RamificationProfile:
    group_order: int
    quotient_genus: int
    orbits: list[Orbit] = field(default_factory=list)

    def __post_init__(self):
        self.orbits = [o if isinstance(o, Orbit) else Orbit(o[0], tuple(o[1])) for o in self.orbits]
        if self.group_order < 1 or self.quotient_genus < 0:
            raise RamificationError("group order must be positive and quotient genus non-negative")
        for o in self.orbits:
            check_filtration(o.filtration)
            if self.group_order % (o.size * o.filtration[0]):
                raise RamificationError(
                    f"orbit of size {o.size} with stabilizer {o.filtration[0]} does not divide |G| = {self.group_order}"
                )

    def to_json(self) -> dict:
        return {
            "G": self.group_order,
            "g_quot": self.quotient_genus,
            "orbits": [{"size": o.size, "filtration": list(o.filtration)} for o in self.orbits],
        }

    @classmethod
    def from_json(cls, data: dict) -> RamificationProfile:
        return cls(
            int(data["G"]),
            int(data["g_quot"]),
            [Orbit(int(o["size"]), tuple(int(k) for k in o["filtration"])) for o in data["orbits"]],
        )

    @classmethod
    def loads(cls, text: str) -> RamificationProfile:
        return cls.from_json(json.loads(text))


def hurwitz_genus(profile: RamificationProfile) -> int:
    """2g - 2 = |G|(2g' - 2) + sum over short orbits of size * d."""
    total = profile.group_order * (2 * profile.quotient_genus - 2)
    total += sum(o.size * o.different for o in profile.orbits)
    return _as_genus(total)


def tame_hurwitz_genus(group_order: int, quotient_genus: int, short_orbits: Iterable[int]) -> int:
    """Tame case: 2g - 2 = |G|(2g' - 2) + sum (|G| - l_i) over short orbit sizes l_i."""
    total = group_order * (2 * quotient_genus - 2)
    for size in short_orbits:
        if group_order % size:
            raise RamificationError(f"orbit size {size} does not divide {group_order}")
        total += group_order - size
    return _as_genus(total)


def deuring_shafarevich(group_order: int, gamma_quotient: int, short_orbit_sizes: Iterable[int]) -> int:
    """p-rank of a cover by a 2-group: gamma - 1 = |S|(gamma' - 1) + sum (|S| - l_i)."""
    if not _is_power_of_two(group_order):
        raise RamificationError(f"group order {group_order} is not a power of 2")
    gamma = 1 + group_order * (gamma_quotient - 1)
    for size in short_orbit_sizes:
        if group_order % size:
            raise RamificationError(f"orbit size {size} does not divide {group_order}")
        gamma += group_order - size
    if gamma < 0:
        raise RamificationError(f"2-rank {gamma} is negative")
    return gamma


def quotient_genus_tame(g_top: int, h_order: int, fixed_point_count: int) -> int:
    """Genus of the quotient by an odd-order group whose nontrivial elements
    fix exactly ``fixed_point_count`` points (all with full stabilizer)."""
    if h_order < 1 or h_order % 2 == 0:
        raise RamificationError(f"quotient order {h_order} must be odd and positive")
    num = 2 * g_top - 2 - fixed_point_count * (h_order - 1)
    return _as_genus(Fraction(num, h_order), "quotient genus")


# -- Artin-Schreier covers -----------------------------------------------------------


@dataclass(frozen=True)
class ASCover:
    """y^2 + y = num/den over GF(2^e); ``reduced`` once every pole is odd."""

    base_field: FieldSpec
    num: tuple
    den: tuple = (1,)
    reduced: bool = False

    def __post_init__(self):
        F = self.base_field
        num, den = P.trim(self.num), P.trim(self.den)
        if not den:
            raise RamificationError("zero denominator")
        g = P.gcd(F, num, den) if num else P.monic(F, den)
        num, den = P.divmod_(F, num, g)[0], P.divmod_(F, den, g)[0]
        lc = F.inv(den[-1])
        object.__setattr__(self, "num", P.scale(F, num, lc))
        object.__setattr__(self, "den", P.scale(F, den, lc))

    @classmethod
    def polynomial(cls, e: int, coeffs: Sequence[int]) -> ASCover:
        return cls(make_field(e), tuple(coeffs))

    def poles(self) -> list[tuple[object, int, int]]:
        """``(place, degree, pole order)``; place is ``"inf"`` or a monic irreducible."""
        F = self.base_field
        out: list[tuple[object, int, int]] = []
        for pi, m in P.factor(F, self.den):
            out.append((pi, P.deg(pi), m))
        at_inf = P.deg(self.num) - P.deg(self.den)
        if self.num and at_inf > 0:
            out.append((INF, 1, at_inf))
        return out

    def add(self, hn: tuple, hd: tuple) -> ASCover:
        """f + h^2 + h for h = hn/hd."""
        F = self.base_field
        h2n, h2d = P.mul(F, hn, hn), P.mul(F, hd, hd)
        # h^2 + h = (hn^2 + hn*hd) / hd^2
        an = P.add(h2n, P.mul(F, hn, hd))
        num = P.add(P.mul(F, self.num, h2d), P.mul(F, an, self.den))
        return ASCover(F, num, P.mul(F, self.den, h2d))

    def is_constant(self) -> bool:
        return P.deg(self.num) <= 0 and P.deg(self.den) == 0


def as_reduce(c: ASCover) -> ASCover:
    """Equivalent cover whose poles all have odd order."""
    return as_reduce_with_shift(c)[0]


def as_reduce_with_shift(c: ASCover) -> tuple[ASCover, tuple[tuple, tuple]]:
    """As :func:`as_reduce`, also returning h = (num, den) with f' = f + h^2 + h."""
    F = c.base_field
    h_num, h_den = (), (1,)
    while True:
        even = [(pl, d, m) for pl, d, m in c.poles() if m % 2 == 0]
        if not even:
            return ASCover(F, c.num, c.den, reduced=True), (h_num, h_den)
        place, d, m = even[0]
        k = m // 2
        if place == INF:
            lead = F.div(c.num[-1], c.den[-1])
            root = F.frobenius(lead, F.r - 1)
            step = (P.monomial(root, k), (1,))
        else:
            pik = (1,)
            for _ in range(m):
                pik = P.mul(F, pik, place)
            rest = P.divmod_(F, c.den, pik)[0]
            u = P.mod(F, P.mul(F, c.num, P.inv_mod(F, rest, place)), place)
            # square root in GF(q^d) = GF(q)[x]/(pi): u^(q^d / 2)
            s = P.powmod(F, u, F.order**d // 2, place)
            hk = (1,)
            for _ in range(k):
                hk = P.mul(F, hk, place)
            step = (s, hk)
        c = c.add(*step)
        # h^2 + h is additive in h over characteristic 2
        h_num = P.add(P.mul(F, h_num, step[1]), P.mul(F, step[0], h_den))
        h_den = P.mul(F, h_den, step[1])


@dataclass
class ASAnalysis:
    ramified_places: list
    place_degrees: list[int]
    pole_orders: list[int]
    genus: int
    two_rank: int
    filtrations: list[list[int]]

    def to_json(self) -> dict:
        return {
            "ramified_places": [p if p == INF else list(p) for p in self.ramified_places],
            "place_degrees": self.place_degrees,
            "pole_orders": self.pole_orders,
            "genus": self.genus,
            "two_rank": self.two_rank,
            "filtrations": self.filtrations,
        }


def as_cover_analyze(c: ASCover) -> ASAnalysis:
    if c.is_constant():
        raise RamificationError("constant f gives a degenerate (split or constant) cover")
    poles = c.poles()
    for place, _, m in poles:
        if m % 2 == 0:
            raise RamificationError(f"pole of even order {m} at {place}; run as_reduce first")
    places = [p for p, _, _ in poles]
    degrees = [d for _, d, _ in poles]
    orders = [m for _, _, m in poles]
    filtrations = [[2] * (m + 1) + [1] for m in orders]
    # Hurwitz over the algebraic closure: each place of degree d is d points
    two_g_minus_2 = 2 * (-2) + sum(d * (m + 1) for d, m in zip(degrees, orders))
    genus = _as_genus(two_g_minus_2)
    two_rank = deuring_shafarevich(2, 0, [1] * sum(degrees))
    return ASAnalysis(places, degrees, orders, genus, two_rank, filtrations)


def as_profile(analysis: ASAnalysis) -> RamificationProfile:
    """The degree-2 ramification profile of an analysed cover (geometric points)."""
    orbits = []
    for d, filt in zip(analysis.place_degrees, analysis.filtrations):
        orbits.extend(Orbit(1, tuple(filt)) for _ in range(d))
    return RamificationProfile(2, 0, orbits)
