"""Naive reference computations, independent of the package's algorithms.

Elements are 0-based image tuples; products apply the left factor first.
Nothing here uses stabilizer chains, the lattice closure or coset tables.
"""

from itertools import product


def mul(a, b):
    return tuple(b[i] for i in a)


def generate(gens, degree):
    """All elements of ``<gens>`` by naive breadth-first closure."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def subgroups_by_rank(elements, degree, rank=2):
    """Every subgroup generated by at most ``rank`` elements."""
    elems = sorted(elements)
    found = set()
    for combo in product(elems, repeat=rank):
        found.add(generate(combo, degree))
    return found


def subgroups_by_subsets(elements):
    """Every subset containing the identity and closed under products (tiny groups)."""
    elems = sorted(elements)
    ident = elems[0]
    rest = elems[1:]
    out = set()
    for bits in range(1 << len(rest)):
        s = {ident} | {rest[i] for i in range(len(rest)) if bits >> i & 1}
        if all(mul(a, b) in s for a in s for b in s):
            out.add(frozenset(s))
    return out


def is_normal(sub, elements):
    inv = {}
    for g in elements:
        for h in elements:
            if mul(g, h) == tuple(range(len(g))):
                inv[g] = h
                break
    return all(mul(mul(inv[g], h), g) in sub for g in elements for h in sub)


def brute_igrowth(subgroups, order, n, cls="all", elements=None):
    """Index of the intersection of the class members with index <= n."""
    fam = [H for H in subgroups if order // len(H) <= n]
    if cls in ("normal", "maxnormal"):
        fam = [H for H in fam if is_normal(H, elements)]
    if cls == "maxnormal":
        normals = [H for H in subgroups if is_normal(H, elements) and len(H) < order]
        fam = [H for H in fam if len(H) < order
               and not any(H < M for M in normals)]
    lam = frozenset(elements) if elements is not None else None
    for H in fam:
        lam = H if lam is None else lam & H
    return order // len(lam)
