"""Deterministic Schreier-Sims stabilizer chains on raw permutation tuples.

Products here use the "apply left factor first" convention of
:func:`igrowth.perm.then`, i.e. points are acted on from the right.
Each new base point is the smallest point moved by the element that
forced the new level, so the chain depends only on the generator order.
"""

from __future__ import annotations

from itertools import product

from .perm import identity_tuple, inverse, is_identity_tuple, then


class OrderExceeded(Exception):
    """Raised when a chain built with ``order_limit`` provably exceeds it."""


def _first_moved(a):
    for i, j in enumerate(a):
        if i != j:
            return i
    raise ValueError("identity has no moved point")


class _Level:
    __slots__ = ("base", "gens", "orbit", "inv", "checked")

    def __init__(self, base, identity):
        self.base = base
        self.gens = []
        # orbit point -> u with base^u == point; inv caches u^-1
        self.orbit = {base: identity}
        self.inv = {base: identity}
        self.checked = set()


class StabChain:
    """Base and strong generating set for ``<gens>`` acting on ``range(degree)``.

    ``order_limit`` turns the build into a bounded test: as soon as the product
    of the orbit lengths exceeds it, :class:`OrderExceeded` is raised. Orbits
    only grow during the build, so this never fires for a group within the limit.
    """

    def __init__(self, degree, gens=(), order_limit=None):
        self.degree = degree
        self.identity = identity_tuple(degree)
        self.levels = []
        self.order_limit = order_limit
        for g in gens:
            self.extend(g)

    # -- queries ---------------------------------------------------------

    @property
    def base(self):
        return [L.base for L in self.levels]

    def order(self):
        n = 1
        for L in self.levels:
            n *= len(L.orbit)
        return n

    def strip(self, g, start=0):
        """Sift ``g`` from level ``start``; return ``(residue, level_reached)``."""
        levels = self.levels
        for i in range(start, len(levels)):
            L = levels[i]
            b = g[L.base]
            if b not in L.inv:
                return g, i
            g = then(g, L.inv[b])
        return g, len(levels)

    def contains(self, g):
        if len(g) != self.degree:
            raise ValueError("degree mismatch")
        h, _ = self.strip(g)
        return is_identity_tuple(h)

    def transversals(self):
        return [list(L.orbit.values()) for L in self.levels]

    def elements(self):
        """Yield every group element exactly once (deterministic order)."""
        trans = self.transversals()
        if not trans:
            yield self.identity
            return
        # g = u_k then ... then u_1, deepest level applied first
        for combo in product(*reversed(trans)):
            g = combo[0]
            for u in combo[1:]:
                g = then(g, u)
            yield g

    def strong_generators(self):
        seen = []
        for L in self.levels:
            for g in L.gens:
                if g not in seen:
                    seen.append(g)
        return seen

    # -- construction ----------------------------------------------------

    def extend(self, g):
        """Add ``g`` to the group; return True iff the group grew."""
        h, j = self.strip(g)
        if is_identity_tuple(h):
            return False
        self._add_strong(h, 0, j)
        self._complete(j)
        return True

    def _add_strong(self, h, lo, j):
        if j == len(self.levels):
            self.levels.append(_Level(_first_moved(h), self.identity))
        for level in range(lo, j + 1):
            L = self.levels[level]
            L.gens.append(h)
            self._grow_orbit(L)
        if self.order_limit is not None and self.order() > self.order_limit:
            raise OrderExceeded

    @staticmethod
    def _grow_orbit(L):
        queue = list(L.orbit)
        k = 0
        while k < len(queue):
            p = queue[k]
            k += 1
            u = L.orbit[p]
            for s in L.gens:
                q = s[p]
                if q not in L.orbit:
                    w = then(u, s)
                    L.orbit[q] = w
                    L.inv[q] = inverse(w)
                    queue.append(q)

    def _complete(self, i):
        # Schreier generators at level i must sift through levels > i, which
        # are complete whenever level i is examined. Checked pairs stay valid
        # because transversal entries never change and deeper groups only grow.
        while i >= 0:
            L = self.levels[i]
            grown = False
            for p, u in list(L.orbit.items()):
                for gi in range(len(L.gens)):
                    key = (p, gi)
                    if key in L.checked:
                        continue
                    L.checked.add(key)
                    s = L.gens[gi]
                    q = s[p]
                    sg = then(then(u, s), L.inv[q])
                    h, j = self.strip(sg, i + 1)
                    if not is_identity_tuple(h):
                        self._add_strong(h, i + 1, j)
                        i = j
                        grown = True
                        break
                if grown:
                    break
            if not grown:
                i -= 1
