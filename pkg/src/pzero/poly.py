"""Univariate polynomials over GF(2^e), stored as coefficient tuples
(lowest degree first, no trailing zeros; the zero polynomial is ``()``).
"""

from __future__ import annotations

import random

from .field import FieldSpec

Poly = tuple


def trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def deg(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def monomial(c: int, k: int) -> Poly:
    return trim((0,) * k + (c,))


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    return trim(tuple(a ^ b for a, b in zip(p, q)) + p[len(q):])


def mul(F: FieldSpec, p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] ^= F.mul(a, b)
    return trim(out)


def scale(F: FieldSpec, p: Poly, c: int) -> Poly:
    return trim(F.mul(c, a) for a in p)


def divmod_(F: FieldSpec, p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = deg(q)
    ilc = F.inv(q[-1])
    quot = [0] * max(len(p) - dq, 0)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if c:
            c = F.mul(c, ilc)
            quot[k - dq] = c
            for j, b in enumerate(q):
                if b:
                    r[k - dq + j] ^= F.mul(c, b)
    return trim(quot), trim(r[:dq] if dq >= 0 else r)


def mod(F: FieldSpec, p: Poly, q: Poly) -> Poly:
    return divmod_(F, p, q)[1]


def monic(F: FieldSpec, p: Poly) -> Poly:
    return scale(F, p, F.inv(p[-1])) if p else p


def gcd(F: FieldSpec, p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, mod(F, p, q)
    return monic(F, p)


def inv_mod(F: FieldSpec, a: Poly, m: Poly) -> Poly:
    """Inverse of ``a`` modulo ``m`` (extended Euclid)."""
    r0, r1 = m, mod(F, a, m)
    s0, s1 = (), (1,)
    while r1:
        qt, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, add(s0, mul(F, qt, s1))
    if deg(r0) != 0:
        raise ValueError("polynomial is not invertible modulo m")
    return scale(F, s0, F.inv(r0[0]))


def powmod(F: FieldSpec, p: Poly, k: int, m: Poly) -> Poly:
    result: Poly = (1,)
    base = mod(F, p, m)
    while k:
        if k & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        k >>= 1
    return result


def derivative(p: Poly) -> Poly:
    return trim(p[i] if i % 2 else 0 for i in range(1, len(p)))


def sqrt_poly(F: FieldSpec, p: Poly) -> Poly:
    """The square root of a polynomial in x^2 (char 2)."""
    if any(p[i] for i in range(1, len(p), 2)):
        raise ValueError("not a square")
    return trim(F.frobenius(p[i], F.r - 1) for i in range(0, len(p), 2))


def evaluate(F: FieldSpec, p: Poly, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = F.mul(acc, x) ^ c
    return acc


def squarefree_factors(F: FieldSpec, f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition: monic pairwise coprime (g, multiplicity)."""
    f = monic(F, f)
    if deg(f) <= 0:
        return []
    out: dict[Poly, int] = {}
    d = derivative(f)
    if not d:
        for g, k in squarefree_factors(F, sqrt_poly(F, f)):
            out[g] = out.get(g, 0) + 2 * k
        return sorted(out.items())
    c = gcd(F, f, d)
    w = divmod_(F, f, c)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(F, w, c)
        z = divmod_(F, w, y)[0]
        if deg(z) > 0:
            out[z] = out.get(z, 0) + i
        i += 1
        w = y
        c = divmod_(F, c, y)[0]
    if deg(c) > 0:
        for g, k in squarefree_factors(F, sqrt_poly(F, c)):
            out[g] = out.get(g, 0) + 2 * k
    return sorted(out.items())


def _distinct_degree(F: FieldSpec, f: Poly) -> list[tuple[Poly, int]]:
    q = F.order
    out = []
    h: Poly = (0, 1)
    x: Poly = (0, 1)
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(F, h, q, f)
        g = gcd(F, f, add(h, x))
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_(F, f, g)[0]
            h = mod(F, h, f)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _equal_degree(F: FieldSpec, f: Poly, d: int, rng: random.Random) -> list[Poly]:
    if deg(f) == d:
        return [f]
    m = F.r * d
    while True:
        a = trim(rng.randrange(F.order) for _ in range(deg(f)))
        if deg(a) < 1:
            continue
        # absolute trace map GF(q^d) -> GF(2) splits f in characteristic 2
        t, s = a, a
        for _ in range(m - 1):
            s = mod(F, mul(F, s, s), f)
            t = add(t, s)
        g = gcd(F, f, t)
        if 0 < deg(g) < deg(f):
            return _equal_degree(F, g, d, rng) + _equal_degree(F, divmod_(F, f, g)[0], d, rng)


def factor(F: FieldSpec, f: Poly, seed: int = 0x5A5A) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted."""
    rng = random.Random(seed)
    out: dict[Poly, int] = {}
    for g, k in squarefree_factors(F, f):
        for h, d in _distinct_degree(F, g):
            for p in _equal_degree(F, h, d, rng):
                out[p] = out.get(p, 0) + k
    return sorted(out.items(), key=lambda t: (deg(t[0]), t[0]))
