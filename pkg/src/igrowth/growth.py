"""Intersection growth of finite permutation groups.

For a class ``c`` of subgroups, ``lambda_subgroup(G, n, c)`` is the
intersection of all class-``c`` subgroups of index at most ``n`` and
``igrowth(G, n, c)`` is its index. An empty family intersects to ``G``.
Bounds ``n >= |G|`` are treated as ``n = |G|``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import reduce

from .group import intersect
from .subgroups import (
    maximal_normal_up_to_index,
    normal_subgroups_up_to_index,
    subgroups_up_to_index,
)


class SubgroupClass(enum.Enum):
    ALL = "all"
    NORMAL = "normal"
    MAXNORMAL = "maxnormal"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown subgroup class {text!r}; use all|normal|maxnormal") from None


def family(G, n, cls=SubgroupClass.ALL, method="auto"):
    """Class-``cls`` subgroups of index at most ``n``."""
    cls = SubgroupClass(cls)
    n = min(n, G.order())
    if cls is SubgroupClass.ALL:
        return subgroups_up_to_index(G, n, method).items
    if cls is SubgroupClass.NORMAL:
        return normal_subgroups_up_to_index(G, n, method).items
    return maximal_normal_up_to_index(G, n, method).items


def intersect_all(G, subgroups):
    """Intersection of a family of subgroups of ``G`` (``G`` itself when empty)."""
    subgroups = [H for H in subgroups if H.order < G.order()]
    if not subgroups:
        return G.whole()
    lat = getattr(subgroups[0], "_lattice", None)
    if lat is not None and all(getattr(H, "_lattice", None) is lat for H in subgroups):
        mask = reduce(lambda a, b: a & b, (H._mask for H in subgroups))
        return lat.subgroup(mask)
    subgroups.sort(key=lambda H: H.order)
    return reduce(intersect, subgroups)


def lambda_subgroup(G, n, cls=SubgroupClass.ALL, method="auto"):
    if n < 1:
        raise ValueError("n must be >= 1")
    return intersect_all(G, family(G, n, cls, method))


def igrowth(G, n, cls=SubgroupClass.ALL, method="auto"):
    return lambda_subgroup(G, n, cls, method).index


@dataclass(frozen=True)
class GrowthRow:
    n: int
    i: int
    lambda_order: int


@dataclass
class GrowthTable:
    group: str
    cls: SubgroupClass
    rows: list = field(default_factory=list)

    def values(self):
        return [r.i for r in self.rows]


def growth_table(G, n_max, cls=SubgroupClass.ALL, method="auto", incremental=True):
    """Rows ``(n, i(n), |Lambda(n)|)`` for ``n = 1..n_max``.

    The incremental path intersects ``Lambda(n-1)`` with the subgroups of index
    exactly ``n``; the other path recomputes every row from scratch. Both must
    agree exactly.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    cls = SubgroupClass(cls)
    order = G.order()
    rows = []
    if not incremental:
        for n in range(1, n_max + 1):
            lam = lambda_subgroup(G, n, cls, method)
            rows.append(GrowthRow(n, lam.index, lam.order))
        return GrowthTable(G.name, cls, rows)

    subs = family(G, n_max, cls, method)
    by_index = {}
    for H in subs:
        by_index.setdefault(H.index, []).append(H)
    lam = G.whole()
    for n in range(1, n_max + 1):
        new = by_index.get(n, [])
        if new and n <= order:
            lam = intersect_all(G, [lam] + new)
        rows.append(GrowthRow(n, order // lam.order, lam.order))
    return GrowthTable(G.name, cls, rows)


def jump_points(table):
    """``(n, i)`` for each row where ``i`` strictly increases over the previous row."""
    out = []
    prev = None
    for r in table.rows:
        if prev is not None and r.i > prev:
            out.append((r.n, r.i))
        prev = r.i
    return out
