"""Full subgroup lattice of a small group: the brute-force oracle.

Subgroups are bitmasks over the sorted element list. The lattice is the
closure of the set of cyclic subgroups under joins with cyclic subgroups,
iterated to a fixpoint; every subgroup is reached because a subgroup
``<g1, ..., gr>`` is the iterated join ``((<g1> v <g2>) v ...) v <gr>``.
"""

from __future__ import annotations

from array import array

from . import kernels
from .errors import CapacityError
from .group import Subgroup
from .perm import inverse, then

LATTICE_CAPACITY = 2000


def _pack(mask, n):
    return mask.to_bytes((n + 7) // 8, "little")


def _unpack(data):
    return int.from_bytes(data, "little")


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Lattice:
    """Every subgroup of ``G``; build via :func:`lattice_of` to share the cache."""

    def __init__(self, G, capacity=LATTICE_CAPACITY):
        order = G.order()
        if order > capacity:
            raise CapacityError(f"full lattice needs order <= {capacity}, got {order}")
        self.G = G
        self.elements = sorted(G.elements())
        self.n = len(self.elements)
        self.index_of = {e: i for i, e in enumerate(self.elements)}
        self._table = array("i")
        self._column = {}
        self.cyclic = self._cyclic_subgroups()
        self.gens = self._close()
        self.masks = sorted(self.gens, key=lambda m: (self.n // m.bit_count(), m))

    # -- multiplication table, built one column per generator used ----------

    def _col(self, g):
        c = self._column.get(g)
        if c is None:
            c = len(self._column)
            self._column[g] = c
            elems, idx = self.elements, self.index_of
            h = elems[g]
            self._table.extend(idx[then(x, h)] for x in elems)
        return c

    def generate(self, gens, seed=1):
        """Mask of the subgroup generated by element indices ``gens`` and ``seed``."""
        cols = array("i", [self._col(g) for g in gens])
        out = kernels.closure(self._table, self.n, cols, _pack(seed, self.n))
        return _unpack(out)

    def _cyclic_subgroups(self):
        found = {}
        ident = self.elements[0]
        for i, e in enumerate(self.elements):
            mask = 1
            x = e
            while x != ident:
                mask |= 1 << self.index_of[x]
                x = then(x, e)
            found.setdefault(mask, i)
        return found

    def _close(self):
        subs = {m: (g,) if m != 1 else () for m, g in self.cyclic.items()}
        cyclic = sorted(self.cyclic.items())
        frontier = sorted(subs)
        joined = set()
        while frontier:
            fresh = []
            for H in frontier:
                hg = subs[H]
                for C, c in cyclic:
                    if C & ~H == 0:
                        continue
                    key = H | C
                    if key in joined:
                        continue
                    joined.add(key)
                    J = self.generate(hg + (c,), seed=H)
                    if J not in subs:
                        subs[J] = hg + (c,)
                        fresh.append(J)
            frontier = fresh
        return subs

    # -- views ----------------------------------------------------------------

    def order_of(self, mask):
        return mask.bit_count()

    def index_of_mask(self, mask):
        return self.n // mask.bit_count()

    def subgroup(self, mask):
        gens = self.gens.get(mask)
        if gens is None:
            gens = self._generators_for(mask)
        H = Subgroup(self.G, [self.elements[i] for i in gens], order=mask.bit_count())
        H._mask = mask
        H._lattice = self
        return H

    def _generators_for(self, mask):
        gens = ()
        cur = 1
        for i in _bits(mask):
            if not cur >> i & 1:
                gens += (i,)
                cur = self.generate(gens, seed=cur)
                if cur == mask:
                    break
        return gens

    def mask_of(self, H):
        """Mask of an arbitrary subgroup of ``G`` (by element enumeration)."""
        if getattr(H, "_lattice", None) is self:
            return H._mask
        mask = 0
        for e in H.chain.elements():
            mask |= 1 << self.index_of[e]
        return mask

    def is_normal_mask(self, mask):
        elems, idx = self.elements, self.index_of
        hs = [elems[i] for i in self.gens.get(mask) or self._generators_for(mask)]
        for s in self.G.raw_generators:
            si = inverse(s)
            for h in hs:
                if not mask >> idx[then(then(si, h), s)] & 1:
                    return False
        return True

    def normal_masks(self):
        return [m for m in self.masks if self.is_normal_mask(m)]


def lattice_of(G):
    """Cached :class:`Lattice` for ``G``."""
    return G.cached("lattice", lambda: Lattice(G))
