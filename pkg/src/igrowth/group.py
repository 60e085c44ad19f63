"""Permutation groups, subgroups and the subgroup-level primitives."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .chain import StabChain
from .errors import CapacityError
from .perm import MAX_DEGREE, Permutation, inverse, is_identity_tuple, then

INTERSECT_CAPACITY = 10**5


@dataclass(frozen=True)
class Factor:
    """One direct factor of a group built with :func:`direct_product`.

    ``offset``/``degree`` give the block of points the factor acts on.
    ``simple`` is only set by constructors that know it (Alt(m) for m >= 5,
    cyclic groups of prime order).
    """

    name: str
    order: int
    simple: bool
    offset: int
    degree: int
    generators: tuple  # raw tuples on the factor's own points


class PermGroup:
    """A finite group given by permutation generators of a common degree.

    Immutable after construction. The stabilizer chain is built on first use
    under a lock, so concurrent first access is safe.
    """

    def __init__(self, degree, generators=(), name=None, factors=None):
        if not 1 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name or f"<group of degree {degree} on {len(gens)} generators>"
        self._factors = factors
        self._chain = None
        self._lock = threading.Lock()
        self._cache = {}
        self._cache_lock = threading.RLock()

    @property
    def raw_generators(self):
        return [g.arr for g in self.generators]

    @property
    def chain(self):
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabChain(self.degree, self.raw_generators)
        return self._chain

    def order(self):
        return self.chain.order()

    def contains(self, p):
        arr = p.arr if isinstance(p, Permutation) else tuple(p)
        if len(arr) != self.degree:
            raise ValueError(f"degree mismatch: {len(arr)} vs {self.degree}")
        return self.chain.contains(arr)

    __contains__ = contains

    def elements(self):
        """Iterate raw element tuples; deterministic order."""
        return self.chain.elements()

    @property
    def factors(self):
        if self._factors is None:
            return (Factor(self.name, self.order(), False, 0, self.degree,
                           tuple(self.raw_generators)),)
        return self._factors

    def factor_subgroup(self, i):
        """The ``i``-th direct factor, embedded as a :class:`Subgroup`."""
        f = self.factors[i]
        return Subgroup(self, [_embed(g, f.offset, self.degree) for g in f.generators],
                        order=f.order)

    def whole(self):
        return Subgroup(self, self.generators, order=self.order())

    def trivial(self):
        return Subgroup(self, (), order=1)

    def cached(self, key, compute):
        """Memoize a derived structure on this (immutable) group."""
        with self._cache_lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    def __repr__(self):
        return f"PermGroup({self.name})"


def _embed(g, offset, degree):
    arr = list(range(degree))
    for i, j in enumerate(g):
        arr[offset + i] = offset + j
    return tuple(arr)


class Subgroup:
    """A subgroup of a fixed ambient :class:`PermGroup`.

    ``order`` may be passed when already known (e.g. from the lattice oracle);
    otherwise it comes from a stabilizer chain on the generators.
    """

    def __init__(self, ambient, generators, order=None, check=False):
        raw = []
        for g in generators:
            arr = g.arr if isinstance(g, Permutation) else tuple(g)
            if len(arr) != ambient.degree:
                raise ValueError("generator degree differs from ambient degree")
            if check and not ambient.chain.contains(arr):
                raise ValueError(f"generator {Permutation._raw(arr)} not in ambient group")
            if not is_identity_tuple(arr) and arr not in raw:
                raw.append(arr)
        self.ambient = ambient
        self.raw_generators = raw
        self._order = order
        self._chain = None
        self._lock = threading.Lock()
        self._elements = None

    @property
    def generators(self):
        return [Permutation._raw(g) for g in self.raw_generators]

    @property
    def chain(self):
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabChain(self.ambient.degree, self.raw_generators)
        return self._chain

    @property
    def order(self):
        if self._order is None:
            self._order = self.chain.order()
        return self._order

    @property
    def index(self):
        return self.ambient.order() // self.order

    def contains(self, p):
        arr = p.arr if isinstance(p, Permutation) else tuple(p)
        return self.chain.contains(arr)

    __contains__ = contains

    def elements(self):
        """Frozen set of raw element tuples (cached)."""
        if self._elements is None:
            self._elements = frozenset(self.chain.elements())
        return self._elements

    def is_subgroup_of(self, other):
        _same_ambient(self, other)
        if self.order > other.order or other.order % self.order:
            return False
        return all(other.contains(g) for g in self.raw_generators)

    def conjugate(self, s):
        """``s^-1 H s`` for a raw or :class:`Permutation` ``s`` of the ambient degree."""
        s = s.arr if isinstance(s, Permutation) else s
        si = inverse(s)
        return Subgroup(self.ambient, [then(then(si, h), s) for h in self.raw_generators],
                        order=self._order)

    def is_normal(self):
        return is_normal(self)

    def __eq__(self, other):
        if not isinstance(other, Subgroup) or self.ambient is not other.ambient:
            return NotImplemented
        return self.order == other.order and self.is_subgroup_of(other)

    def __hash__(self):
        return hash((id(self.ambient), self.order))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"Subgroup(order={self.order}, gens=[{gens}])"


def _same_ambient(H, K):
    if H.ambient is not K.ambient:
        raise ValueError("subgroups have different ambient groups")


def subgroup_from_elements(ambient, elements, order=None):
    """Subgroup whose element set is exactly ``elements`` (raw tuples).

    Generators are picked greedily in sorted order, so the result is
    deterministic. ``order`` defaults to ``len(elements)``.
    """
    elems = sorted(elements)
    target = len(elems) if order is None else order
    chain = StabChain(ambient.degree)
    gens = []
    for x in elems:
        if chain.order() == target:
            break
        if chain.extend(x):
            gens.append(x)
    return Subgroup(ambient, gens, order=chain.order())


def intersect(H, K):
    """Exact intersection of two subgroups of the same ambient group.

    Enumerates the smaller subgroup and keeps the members of the larger.
    """
    _same_ambient(H, K)
    if H.ambient.order() > INTERSECT_CAPACITY:
        raise CapacityError(
            f"intersection needs ambient order <= {INTERSECT_CAPACITY}, got {H.ambient.order()}")
    if H.order > K.order:
        H, K = K, H
    if H.is_subgroup_of(K):
        return Subgroup(H.ambient, H.raw_generators, order=H.order)
    kept = [x for x in H.chain.elements() if K.chain.contains(x)]
    return subgroup_from_elements(H.ambient, kept)


def is_normal(H):
    """True iff every ambient generator conjugates ``H`` into itself."""
    for s in H.ambient.raw_generators:
        si = inverse(s)
        for h in H.raw_generators:
            if not H.contains(then(then(si, h), s)):
                return False
    return True


def core(H):
    """Largest normal subgroup of the ambient group contained in ``H``."""
    C = H
    changed = True
    while changed:
        changed = False
        for s in H.ambient.raw_generators:
            D = C.conjugate(s)
            if not D.is_subgroup_of(C):
                C = intersect(C, D)
                changed = True
    return C


# -- constructors ------------------------------------------------------------

def _cycle(points, degree):
    arr = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        arr[a] = b
    return Permutation._raw(tuple(arr))


def _is_prime(m):
    return m >= 2 and all(m % p for p in range(2, math.isqrt(m) + 1))


def _single(degree, gens, name, order, simple):
    g = PermGroup(degree, gens, name=name)
    raw = tuple(x.arr for x in g.generators)
    g._factors = (Factor(name, order, simple, 0, degree, raw),)
    return g


def alternating(m):
    """Alt(m) on ``m`` points, generated by (1 2 3) and an (m or m-1)-cycle."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m < 3:
        return _single(m, (), f"Alt({m})", 1, False)
    long = list(range(m)) if m % 2 else list(range(1, m))
    gens = [_cycle([0, 1, 2], m)]
    if m > 3:
        gens.append(_cycle(long, m))
    return _single(m, gens, f"Alt({m})", math.factorial(m) // 2, m >= 5)


def symmetric(m):
    """Sym(m) generated by (1 2) and (1 2 ... m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return _single(1, (), "Sym(1)", 1, False)
    gens = [_cycle([0, 1], m)]
    if m > 2:
        gens.append(_cycle(list(range(m)), m))
    return _single(m, gens, f"Sym({m})", math.factorial(m), m == 2)


def cyclic(m):
    """Cyclic group of order ``m`` acting regularly on ``m`` points."""
    if m < 1:
        raise ValueError("m must be >= 1")
    gens = [_cycle(list(range(m)), m)] if m > 1 else []
    return _single(m, gens, f"C{m}", m, _is_prime(m))


def dihedral(m):
    """Dihedral group of order ``2m`` acting on the vertices of an m-gon (m >= 3)."""
    if m < 3:
        raise ValueError("dihedral(m) needs m >= 3")
    refl = tuple((-i) % m for i in range(m))
    gens = [_cycle(list(range(m)), m), Permutation._raw(refl)]
    return _single(m, gens, f"D{2 * m}", 2 * m, False)


def trivial_group(degree=1):
    return _single(degree, (), "1", 1, False)


def direct_product(A, B):
    """``A x B`` acting on the disjoint union of the two domains.

    The factors of ``A`` and ``B`` are concatenated, so iterated products keep
    every original factor retrievable via :meth:`PermGroup.factor_subgroup`.
    """
    d = A.degree + B.degree
    gens = [_embed(g, 0, d) for g in A.raw_generators]
    gens += [_embed(g, A.degree, d) for g in B.raw_generators]
    factors = tuple(A.factors) + tuple(
        Factor(f.name, f.order, f.simple, f.offset + A.degree, f.degree, f.generators)
        for f in B.factors)
    name = " x ".join(f.name for f in factors)
    return PermGroup(d, [Permutation._raw(g) for g in gens], name=name, factors=factors)
