"""Deterministic Schreier-Sims over an abstract group action.

The chain only needs a handful of operations on group elements, supplied by
an *ops* object: ``identity``, ``mul(a, b)`` (apply ``a`` then ``b``),
``inv(a)``, ``image(a, point)``, ``is_identity(a)`` and
``first_moved(a)``.  Permutations (tuples) use :class:`TupleOps`; the
matrix groups in :mod:`pzero.lingrp` bring their own.
"""

from __future__ import annotations

import os
import random
from itertools import product
from math import prod


class BudgetError(RuntimeError):
    """A computation would exceed a configured size limit."""


def budget_bytes() -> int:
    mb = os.environ.get("PZERO_BUDGET_MB")
    return int(float(mb) * 2**20) if mb else 4 * 2**30


class TupleOps:
    """Permutations of ``range(degree)`` stored as tuples of images."""

    def __init__(self, degree: int):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.element_bytes = 8 * degree + 56

    @staticmethod
    def mul(a, b):
        return tuple(map(b.__getitem__, a))

    @staticmethod
    def mul3(a, b, c):
        return tuple(map(c.__getitem__, map(b.__getitem__, a)))

    def inv(self, a):
        out = [0] * len(a)
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    @staticmethod
    def image(a, p):
        return a[p]

    def is_identity(self, a):
        return a == self.identity

    @staticmethod
    def first_moved(a):
        for i, j in enumerate(a):
            if i != j:
                return i
        return None


class _Level:
    __slots__ = ("point", "gens", "orbit", "u", "uinv", "done")

    def __init__(self, point, identity):
        self.point = point
        self.gens = []
        self.orbit = [point]
        self.u = {point: identity}
        self.uinv = {point: identity}
        self.done = []


class StabChain:
    """Base and strong generating set with explicit transversals.

    ``levels[i].u[p]`` maps ``levels[i].point`` to ``p`` and lies in the
    pointwise stabilizer of the first ``i`` base points.  The base is
    extended with the smallest point moved by a new residue, so for a given
    generator list the chain is fully deterministic.
    """

    def __init__(self, ops, gens=(), base_prefix=()):
        self.ops = ops
        self.levels: list[_Level] = []
        self._stored = 0
        for b in base_prefix:
            self.levels.append(_Level(b, ops.identity))
        self.extend(gens)

    # -- construction ------------------------------------------------------

    def extend(self, gens) -> bool:
        """Add generators; returns True when the group grew."""
        ops = self.ops
        grew = False
        for g in gens:
            if ops.is_identity(g):
                continue
            h, j = self.strip(g, 0)
            if j == len(self.levels) and ops.is_identity(h):
                continue
            grew = True
            if not self.levels:
                self.levels.append(_Level(ops.first_moved(g), ops.identity))
            self._add_gen(0, g)
            self._complete(0)
        return grew

    def _add_gen(self, i, s):
        ops = self.ops
        lvl = self.levels[i]
        lvl.gens.append(s)
        lvl.done.append(0)
        gens = lvl.gens
        u, uinv, orbit = lvl.u, lvl.uinv, lvl.orbit
        queue = []
        for p in list(orbit):
            q = ops.image(s, p)
            if q not in u:
                self._store(lvl, q, ops.mul(u[p], s))
                queue.append(q)
        k = 0
        while k < len(queue):
            p = queue[k]
            k += 1
            up = u[p]
            for t in gens:
                q = ops.image(t, p)
                if q not in u:
                    self._store(lvl, q, ops.mul(up, t))
                    queue.append(q)

    def _store(self, lvl, q, uq):
        ops = self.ops
        lvl.u[q] = uq
        lvl.uinv[q] = ops.inv(uq)
        lvl.orbit.append(q)
        self._stored += 2
        if self._stored * ops.element_bytes > budget_bytes():
            raise BudgetError(
                f"transversals exceed PZERO_BUDGET_MB ({self._stored} elements stored)"
            )

    def _complete(self, start):
        ops = self.ops
        mul3 = getattr(ops, "mul3", None)
        i = start
        while i >= 0:
            lvl = self.levels[i]
            jumped = False
            for gi in range(len(lvl.gens)):
                s = lvl.gens[gi]
                while lvl.done[gi] < len(lvl.orbit):
                    p = lvl.orbit[lvl.done[gi]]
                    lvl.done[gi] += 1
                    q = ops.image(s, p)
                    if mul3 is not None:
                        y = mul3(lvl.u[p], s, lvl.uinv[q])
                    else:
                        y = ops.mul(ops.mul(lvl.u[p], s), lvl.uinv[q])
                    if ops.is_identity(y):
                        continue
                    h, j = self.strip(y, i + 1)
                    if j == len(self.levels) and ops.is_identity(h):
                        continue
                    if j == len(self.levels):
                        self.levels.append(_Level(ops.first_moved(h), ops.identity))
                    for level in range(i + 1, j + 1):
                        self._add_gen(level, h)
                    i = j
                    jumped = True
                    break
                if jumped:
                    break
            if not jumped:
                i -= 1

    # -- queries -----------------------------------------------------------

    def strip(self, g, start=0):
        """Sift ``g`` from level ``start``; returns (residue, level reached)."""
        ops = self.ops
        for j in range(start, len(self.levels)):
            lvl = self.levels[j]
            p = ops.image(g, lvl.point)
            if p not in lvl.uinv:
                return g, j
            if p != lvl.point:
                g = ops.mul(g, lvl.uinv[p])
        return g, len(self.levels)

    def contains(self, g) -> bool:
        h, j = self.strip(g)
        return j == len(self.levels) and self.ops.is_identity(h)

    def order(self) -> int:
        return prod(len(lvl.orbit) for lvl in self.levels)

    @property
    def base(self) -> list:
        return [lvl.point for lvl in self.levels]

    def strong_generators(self, level=0) -> list:
        if level >= len(self.levels):
            return []
        return list(self.levels[level].gens)

    def random_element(self, rng: random.Random):
        ops = self.ops
        g = ops.identity
        for lvl in reversed(self.levels):
            p = lvl.orbit[rng.randrange(len(lvl.orbit))]
            g = ops.mul(g, lvl.u[p])
        return g

    def elements(self):
        """Every group element exactly once (product of transversals)."""
        ops = self.ops
        trans = [[lvl.u[p] for p in lvl.orbit] for lvl in reversed(self.levels)]
        for combo in product(*trans):
            g = ops.identity
            for t in combo:
                g = ops.mul(g, t)
            yield g

    def subchain(self, level) -> StabChain:
        """The chain of the stabilizer of the first ``level`` base points."""
        sub = StabChain.__new__(StabChain)
        sub.ops = self.ops
        sub.levels = self.levels[level:]
        sub._stored = 0
        return sub

    def conjugate(self, t) -> StabChain:
        """Chain of ``t^-1 G t`` with base points mapped by ``t``."""
        ops = self.ops
        tinv = ops.inv(t)

        def conj(x):
            return ops.mul(ops.mul(tinv, x), t)

        out = StabChain.__new__(StabChain)
        out.ops = ops
        out._stored = 0
        out.levels = []
        for lvl in self.levels:
            new = _Level(ops.image(t, lvl.point), ops.identity)
            new.gens = [conj(s) for s in lvl.gens]
            new.done = [len(lvl.orbit)] * len(lvl.gens)
            new.orbit = [ops.image(t, p) for p in lvl.orbit]
            new.u = {}
            new.uinv = {}
            for p, q in zip(lvl.orbit, new.orbit):
                new.u[q] = conj(lvl.u[p])
                new.uinv[q] = conj(lvl.uinv[p])
            out.levels.append(new)
        return out
