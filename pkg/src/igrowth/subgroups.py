"""Subgroup enumeration: full lattice, bounded index, normal, maximal normal.

``method`` selects the route for bounded-index queries:

``"lattice"``
    filter the full lattice (order <= 2000 only);
``"homsearch"``
    transitive actions accepted by the homomorphism-graph test;
``"auto"``
    lattice when it fits, homsearch otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapacityError
from .group import Subgroup, is_normal
from .lattice import LATTICE_CAPACITY, lattice_of
from .lowindex import low_index_subgroups

DEDUP_BY_ELEMENTS = 10**4
METHODS = ("auto", "lattice", "homsearch")


@dataclass(frozen=True)
class Completeness:
    kind: str  # FullLattice | UpToIndex | NormalOnly | MaxNormalOnly
    bound: int | None = None

    def __str__(self):
        return self.kind if self.bound is None else f"{self.kind}({self.bound})"


FULL_LATTICE = Completeness("FullLattice")


@dataclass
class SubgroupList:
    ambient: object
    items: list = field(default_factory=list)
    tag: Completeness = FULL_LATTICE

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def indices(self):
        return sorted(H.index for H in self.items)


def _resolve(G, method):
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        return "lattice" if G.order() <= LATTICE_CAPACITY else "homsearch"
    return method


def dedupe(subgroups):
    """Drop repeated subgroups, keeping first occurrences."""
    out = []
    seen = set()
    for H in subgroups:
        if H.order <= DEDUP_BY_ELEMENTS:
            key = H.elements()
            if key in seen:
                continue
            seen.add(key)
        elif any(K == H for K in out):
            continue
        out.append(H)
    return out


def all_subgroups(G):
    lat = lattice_of(G)
    return SubgroupList(G, [lat.subgroup(m) for m in lat.masks], FULL_LATTICE)


def _homsearch(G, n):
    # cached for the largest bound seen so far; smaller bounds are filtered
    n = min(n, G.order())
    with G._cache_lock:
        best = G._cache.get("homsearch")
        if best is None or best[0] < n:
            found = dedupe(H for H, _ in low_index_subgroups(G, n))
            best = (n, found)
            G._cache["homsearch"] = best
    return [H for H in best[1] if H.index <= n]


def subgroups_up_to_index(G, n, method="auto"):
    if n < 1:
        raise ValueError("n must be >= 1")
    how = _resolve(G, method)
    if how == "lattice":
        lat = lattice_of(G)
        items = [lat.subgroup(m) for m in lat.masks if lat.index_of_mask(m) <= n]
    else:
        items = _homsearch(G, n)
    return SubgroupList(G, items, Completeness("UpToIndex", n))


def normal_subgroups_up_to_index(G, n, method="auto"):
    if n < 1:
        raise ValueError("n must be >= 1")
    how = _resolve(G, method)
    if how == "lattice":
        lat = lattice_of(G)
        items = [lat.subgroup(m) for m in lat.masks
                 if lat.index_of_mask(m) <= n and lat.is_normal_mask(m)]
    else:
        items = [H for H in _homsearch(G, n) if is_normal(H)]
    return SubgroupList(G, items, Completeness("NormalOnly", n))


def _maximal_among(normals, G):
    """Proper members of ``normals`` with no proper member strictly above them.

    ``normals`` must be closed upward: every normal subgroup containing a
    member is itself a member (true for any index-bounded family).
    """
    proper = [N for N in normals if N.order < G.order()]
    out = []
    for N in proper:
        if not any(M.order > N.order and M.order % N.order == 0 and N.is_subgroup_of(M)
                   for M in proper):
            out.append(N)
    return out


def has_simple_factor_structure(G):
    """True when ``G`` is recorded as a product of pairwise non-isomorphic simple groups."""
    factors = [f for f in G.factors if f.order > 1]
    if not factors or not all(f.simple for f in factors):
        return False
    # the simple groups built here are determined up to isomorphism by their order
    orders = [f.order for f in factors]
    return len(set(orders)) == len(orders)


def _cofactors(G):
    idx = [i for i, f in enumerate(G.factors) if f.order > 1]
    out = []
    for skip in idx:
        gens = []
        for i in idx:
            if i != skip:
                gens.extend(G.factor_subgroup(i).raw_generators)
        out.append(Subgroup(G, gens, order=G.order() // G.factors[skip].order))
    return out


def maximal_normal_subgroups(G, method="auto"):
    """Maximal normal subgroups of ``G``.

    ``method="structural"`` uses the recorded direct-factor structure: for a
    product of pairwise non-isomorphic simple groups these are exactly the
    products of all factors but one.
    """
    if method == "structural" or (
            method == "auto" and G.order() > LATTICE_CAPACITY and has_simple_factor_structure(G)):
        if not has_simple_factor_structure(G):
            raise CapacityError("structural shortcut needs pairwise non-isomorphic simple factors")
        items = _cofactors(G)
    else:
        if _resolve(G, method) != "lattice":
            raise CapacityError(
                f"maximal normal subgroups need order <= {LATTICE_CAPACITY} or simple factors")
        lat = lattice_of(G)
        normals = [lat.subgroup(m) for m in lat.normal_masks()]
        items = _maximal_among(normals, G)
    return SubgroupList(G, items, Completeness("MaxNormalOnly"))


def maximal_normal_up_to_index(G, n, method="auto"):
    """Maximal normal subgroups of index at most ``n``."""
    if method == "structural" or (
            method == "auto" and G.order() > LATTICE_CAPACITY and has_simple_factor_structure(G)):
        items = [N for N in maximal_normal_subgroups(G, "structural") if N.index <= n]
    elif _resolve(G, method) == "lattice":
        items = [N for N in maximal_normal_subgroups(G, "lattice") if N.index <= n]
    else:
        # a normal subgroup strictly between N and G has smaller index, so the
        # index-bounded family already decides maximality
        items = _maximal_among(normal_subgroups_up_to_index(G, n, "homsearch").items, G)
    return SubgroupList(G, items, Completeness("MaxNormalOnly", n))
