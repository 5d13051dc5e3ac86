"""The rank-one groups of Lie type in characteristic 2 in their natural
2-transitive actions: PSL(2,n) on the projective line, PGU(3,n) and
PSU(3,n) on the Hermitian unital, Sz(n) on the Tits ovoid, and SU(3,n) as
a matrix group acting on nonzero vectors.

Point labels are canonical: affine labels sorted by ``(bits(x), bits(y))``
with the point at infinity last, so the permutation arrays are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from .chain import StabChain
from .field import FieldError, FieldSpec, make_field
from .perm import PermGroup, Permutation, SEED

INF = "inf"
FAMILIES = ("PSL2", "SZ", "PGU3", "PSU3", "SU3")


class FamilyError(ValueError):
    pass


def log2_exact(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise FamilyError(f"{n} is not a power of 2")
    return n.bit_length() - 1


@dataclass(frozen=True)
class FamilyId:
    name: str
    n: int

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise FamilyError(f"unknown family {self.name!r}; expected one of {FAMILIES}")
        r = log2_exact(self.n)
        if self.n < 4:
            raise FamilyError(f"n = {self.n} is below 4")
        if self.name == "SZ" and r % 2 == 0:
            raise FamilyError(f"Suzuki groups need n = 2^(2m+1); got n = {self.n}")

    @property
    def r(self) -> int:
        return self.n.bit_length() - 1

    @property
    def n0(self) -> int:
        if self.name != "SZ":
            raise FamilyError("n0 is only defined for the Suzuki family")
        return 1 << (self.r - 1) // 2

    @property
    def mu(self) -> int:
        return gcd(3, self.n + 1)

    def __str__(self) -> str:
        return f"{self.name}({self.n})"


def family(name: str, n: int) -> FamilyId:
    return FamilyId(name.upper(), n)


def stabilizer_constants(f: FamilyId) -> tuple[int, int, int, int]:
    """``(|S_P|, |S_P^(1)|, |H|, degree)`` for the natural action.

    For SU(3,n) the action is the one of its central quotient on the unital,
    so the degree is ``n^3 + 1`` and ``|S_P|`` counts the full preimage.
    """
    n = f.n
    if f.name == "PSL2":
        return n * (n - 1), n, n - 1, n + 1
    if f.name == "SZ":
        return n * n * (n - 1), n * n, n - 1, n * n + 1
    if f.name == "PGU3":
        return n**3 * (n * n - 1), n**3, n * n - 1, n**3 + 1
    if f.name == "PSU3":
        h = (n * n - 1) // f.mu
        return n**3 * h, n**3, h, n**3 + 1
    return n**3 * (n * n - 1), n**3, n * n - 1, n**3 + 1


def expected_order(f: FamilyId) -> int:
    sp, _, _, degree = stabilizer_constants(f)
    return sp * degree


def fpf_cyclic_divisors(f: FamilyId) -> list[int]:
    """Orders of cyclic subgroups acting with no fixed points (sorted)."""
    n = f.n
    if f.name == "PSL2":
        moduli = [n + 1]
    elif f.name in ("PSU3", "PGU3"):
        moduli = [n + 1, (n * n - n + 1) // f.mu]
    elif f.name == "SZ":
        moduli = [n - 2 * f.n0 + 1, n + 2 * f.n0 + 1]
    else:
        raise FamilyError(f"fixed-point-free cyclic orders are not tabulated for {f.name}")
    return sorted({d for m in moduli for d in divisors(m)})


def divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


@dataclass
class NaturalAction:
    family: FamilyId
    group: PermGroup
    point_labels: list
    distinguished_point: int
    sylow2: PermGroup
    generator_names: list[str] = field(default_factory=list)
    point_maps: dict[str, Callable] = field(default_factory=dict, repr=False)

    @property
    def degree(self) -> int:
        return self.group.degree

    def index_of(self, label) -> int:
        return self._index[label]

    def __post_init__(self):
        self._index = {lab: i for i, lab in enumerate(self.point_labels)}

    def label_json(self) -> list:
        return [lab if lab == INF else list(lab) if isinstance(lab, tuple) else lab
                for lab in self.point_labels]


def _perm_from_map(labels: list, index: dict, f: Callable) -> Permutation:
    return Permutation([index[f(lab)] for lab in labels])


def _assemble(fam, labels, maps: dict, sylow_maps: list) -> NaturalAction:
    index = {lab: i for i, lab in enumerate(labels)}
    names = list(maps)
    gens = [_perm_from_map(labels, index, maps[k]) for k in names]
    s2 = [_perm_from_map(labels, index, f) for f in sylow_maps]
    return NaturalAction(
        family=fam,
        group=PermGroup(len(labels), gens),
        point_labels=labels,
        distinguished_point=index[INF],
        sylow2=PermGroup(len(labels), s2),
        generator_names=names,
        point_maps=maps,
    )


# -- PSL(2,n) -----------------------------------------------------------------


def build_psl2(n: int) -> NaturalAction:
    fam = FamilyId("PSL2", n)
    F = make_field(fam.r)
    a = F.generator
    labels: list = list(range(n)) + [INF]

    def translate(c):
        return lambda x: INF if x == INF else x ^ c

    def scale(x):
        return INF if x == INF else F.mul(a, x)

    def invert(x):
        if x == INF:
            return 0
        return INF if x == 0 else F.inv(x)

    maps = {"x+1": translate(1), "a*x": scale, "1/x": invert}
    sylow = [translate(1 << i) for i in range(fam.r)]
    return _assemble(fam, labels, maps, sylow)


# -- unitary groups on the Hermitian unital -------------------------------------


def unital_points(n: int) -> list[tuple[int, int]]:
    """Affine points of y^n + y = x^(n+1) over GF(n^2), sorted by bits."""
    F = make_field(2 * log2_exact(n))
    fibres: dict[int, list[int]] = {}
    for y in range(F.order):
        fibres.setdefault(F.pow(y, n) ^ y, []).append(y)
    pts = []
    for x in range(F.order):
        for y in fibres.get(F.pow(x, n + 1), ()):
            pts.append((x, y))
    return pts


def _unital_maps(n: int, mu: int):
    F = make_field(2 * log2_exact(n))
    c = F.generator

    def trace_solutions(a):
        # b with b^n + b = a^(n+1)
        target = F.pow(a, n + 1)
        return [b for b in range(F.order) if F.pow(b, n) ^ b == target]

    def psi(a, b):
        an = F.pow(a, n)

        def f(p):
            if p == INF:
                return INF
            x, y = p
            return (x ^ a, y ^ F.mul(an, x) ^ b)

        return f

    def scaling(k):
        ck = F.pow(c, k)
        ck1 = F.pow(ck, n + 1)

        def f(p):
            if p == INF:
                return INF
            x, y = p
            return (F.mul(ck, x), F.mul(ck1, y))

        return f

    def phi(p):
        if p == INF:
            return (0, 0)
        x, y = p
        if y == 0:
            return INF
        iy = F.inv(y)
        return (F.mul(x, iy), iy)

    b1 = min(trace_solutions(1))
    b0 = min(b for b in trace_solutions(0) if b)
    maps = {
        f"Psi(1,{b1})": psi(1, b1),
        f"Psi(0,{b0})": psi(0, b0),
        f"M(c^{mu})": scaling(mu),
        "phi": phi,
    }
    r2 = F.r
    sylow = [psi(1 << i, min(trace_solutions(1 << i))) for i in range(r2)]
    sylow += [psi(0, b) for b in _gf2_basis(F, trace_solutions(0))]
    return maps, sylow


def _gf2_basis(F: FieldSpec, vals: list[int]) -> list[int]:
    basis: list[int] = []
    reduced: list[int] = []
    for v in sorted(vals):
        w = v
        for rb in reduced:
            w = min(w, w ^ rb)
        if w:
            basis.append(v)
            reduced.append(w)
            reduced.sort(reverse=True)
    return basis


def _build_unital(name: str, n: int) -> NaturalAction:
    fam = FamilyId(name, n)
    mu = fam.mu if name == "PSU3" else 1
    labels: list = unital_points(n) + [INF]
    maps, sylow = _unital_maps(n, mu)
    return _assemble(fam, labels, maps, sylow)


def build_pgu3(n: int) -> NaturalAction:
    return _build_unital("PGU3", n)


def build_psu3(n: int) -> NaturalAction:
    return _build_unital("PSU3", n)


# -- Suzuki groups on the Tits ovoid ------------------------------------------------


def _suzuki_maps(fam: FamilyId):
    F = make_field(fam.r)
    th = F.tits_power
    kappa = F.generator

    def translation(alpha, beta):
        ta = th(alpha)

        def f(p):
            if p == INF:
                return INF
            a, b = p
            return (a ^ alpha, b ^ beta ^ F.mul(a, ta))

        return f

    k1 = F.mul(th(kappa), kappa)

    def scaling(p):
        if p == INF:
            return INF
        a, b = p
        return (F.mul(kappa, a), F.mul(k1, b))

    def involution(p):
        if p == INF:
            return (0, 0)
        a, b = p
        z = F.mul(a, b) ^ F.mul(th(a), F.mul(a, a)) ^ th(b)
        if z == 0:
            return INF
        iz = F.inv(z)
        return (F.mul(b, iz), F.mul(a, iz))

    maps = {
        "T(1,0)": translation(1, 0),
        "T(0,1)": translation(0, 1),
        "scale": scaling,
        "swap": involution,
    }
    sylow = [translation(1 << i, 0) for i in range(fam.r)]
    sylow += [translation(0, 1 << i) for i in range(fam.r)]
    return maps, sylow


def ovoid_labels(n: int) -> list:
    return [(a, b) for a in range(n) for b in range(n)]


def build_sz(n: int) -> NaturalAction:
    fam = FamilyId("SZ", n)
    labels: list = ovoid_labels(n) + [INF]
    maps, sylow = _suzuki_maps(fam)
    return _assemble(fam, labels, maps, sylow)


BUILDERS = {
    "PSL2": build_psl2,
    "SZ": build_sz,
    "PGU3": build_pgu3,
    "PSU3": build_psu3,
}


def build_family(name: str, n: int) -> NaturalAction:
    name = name.upper()
    if name not in BUILDERS:
        raise FamilyError(f"no permutation builder for {name}; SU3 uses build_su3_matrix")
    return BUILDERS[name](n)


# -- SU(3,n) as a matrix group ---------------------------------------------------------

SU3_MAX_N = 8


class MatrixOps:
    """3x3 matrices over GF(q) (flat 9-tuples) acting on nonzero column vectors.

    A vector ``(v0, v1, v2)`` has label ``v0*q^2 + v1*q + v2 - 1``; the
    product ``mul(a, b)`` applies ``a`` first, i.e. it is the matrix ``b a``.
    """

    element_bytes = 9 * 8 + 120

    def __init__(self, F: FieldSpec):
        self.F = F
        self.q = F.order
        self.identity = (1, 0, 0, 0, 1, 0, 0, 0, 1)
        exp, log = F._tables()
        self._exp, self._log, self._q1 = exp, log, F.order - 1

    def matmul(self, m, k):
        """The ordinary product ``m k``."""
        exp, log = self._exp, self._log
        out = []
        for i in range(3):
            r0, r1, r2 = m[3 * i], m[3 * i + 1], m[3 * i + 2]
            for j in range(3):
                s = 0
                for a, b in ((r0, k[j]), (r1, k[3 + j]), (r2, k[6 + j])):
                    if a and b:
                        s ^= exp[log[a] + log[b]]
                out.append(s)
        return tuple(out)

    def mul(self, a, b):
        return self.matmul(b, a)

    def inv(self, m):
        F = self.F
        a, b, c, d, e, f, g, h, i = m
        mul = F.mul
        cof = (
            mul(e, i) ^ mul(f, h), mul(c, h) ^ mul(b, i), mul(b, f) ^ mul(c, e),
            mul(f, g) ^ mul(d, i), mul(a, i) ^ mul(c, g), mul(c, d) ^ mul(a, f),
            mul(d, h) ^ mul(e, g), mul(b, g) ^ mul(a, h), mul(a, e) ^ mul(b, d),
        )
        det = mul(a, cof[0]) ^ mul(b, cof[3]) ^ mul(c, cof[6])
        if det == 0:
            raise FieldError("singular matrix")
        idet = F.inv(det)
        return tuple(mul(idet, x) for x in cof)

    def det(self, m):
        F = self.F
        a, b, c, d, e, f, g, h, i = m
        return (F.mul(a, F.mul(e, i) ^ F.mul(f, h)) ^ F.mul(b, F.mul(d, i) ^ F.mul(f, g))
                ^ F.mul(c, F.mul(d, h) ^ F.mul(e, g)))

    def encode(self, v) -> int:
        q = self.q
        return v[0] * q * q + v[1] * q + v[2] - 1

    def decode(self, p: int):
        q = self.q
        p += 1
        return (p // (q * q), p // q % q, p % q)

    def apply(self, m, v):
        exp, log = self._exp, self._log
        out = []
        for i in range(3):
            s = 0
            for a, b in zip(m[3 * i : 3 * i + 3], v):
                if a and b:
                    s ^= exp[log[a] + log[b]]
            out.append(s)
        return tuple(out)

    def image(self, m, p):
        return self.encode(self.apply(m, self.decode(p)))

    def is_identity(self, m):
        return m == self.identity

    def first_moved(self, m):
        # basis vectors e3, e2, e1 carry the smallest labels of their lines
        for col, v in ((2, (0, 0, 1)), (1, (0, 1, 0)), (0, (1, 0, 0))):
            if (m[col], m[3 + col], m[6 + col]) != v:
                return self.encode(v)
        return None


@dataclass
class SU3Matrix:
    n: int
    ops: MatrixOps
    generators: list
    chain: StabChain

    @property
    def degree(self) -> int:
        return self.ops.q**3 - 1

    def order(self) -> int:
        return self.chain.order()

    def center_order(self) -> int:
        """Number of scalar matrices in the group."""
        F = self.ops.F
        count = 0
        for w in range(1, F.order):
            if self.chain.contains((w, 0, 0, 0, w, 0, 0, 0, w)):
                count += 1
        return count

    def is_unitary(self, m) -> bool:
        """m^T J m^(n) = J for the form x0 y0^n + x1 y2^n + x2 y1^n."""
        ops = self.ops
        F = ops.F
        bar = tuple(F.pow(x, self.n) for x in m)
        tr = tuple(m[3 * j + i] for i in range(3) for j in range(3))
        J = (1, 0, 0, 0, 0, 1, 0, 1, 0)
        return ops.matmul(ops.matmul(tr, J), bar) == J


def build_su3_matrix(n: int) -> SU3Matrix:
    fam = FamilyId("SU3", n)
    if n > SU3_MAX_N:
        raise FamilyError(f"SU(3,{n}) vector action exceeds the supported n <= {SU3_MAX_N}")
    F = make_field(2 * fam.r)
    ops = MatrixOps(F)
    target1 = F.pow(1, n + 1)
    b1 = min(b for b in range(F.order) if F.pow(b, n) ^ b == target1)
    b0 = min(b for b in range(1, F.order) if F.pow(b, n) ^ b == 0)
    e = F.generator

    def translation(a, b):
        return (1, 0, a, F.pow(a, n), 1, b, 0, 0, 1)

    diag = (F.pow(e, n - 1), 0, 0, 0, e, 0, 0, 0, F.inv(F.pow(e, n)))
    swap = (1, 0, 0, 0, 0, 1, 0, 1, 0)
    gens = [translation(1, b1), translation(0, b0), diag, swap]
    return SU3Matrix(n=n, ops=ops, generators=gens, chain=StabChain(ops, gens))


# -- fixed-point-free cyclic witnesses ------------------------------------------------------


def fpf_witness(action: NaturalAction, c: int, tries: int = 5000, seed: int = SEED):
    """An element of order ``c`` none of whose nontrivial powers fixes a point."""
    if c == 1:
        return Permutation.identity(action.degree)
    rng = random.Random(seed)
    g = action.group
    for _ in range(tries):
        x = g.random_element(rng)
        m = x.order()
        if m % c:
            continue
        y = x ** (m // c)
        if all(not (y**k).fixed_points() for k in range(1, c)):
            return y
    return None
