"""Bounded-index subgroups through transitive actions.

A subgroup of index ``m`` is the point stabilizer of the transitive action on
its ``m`` cosets, and every transitive action arises this way. Candidate
actions are generator images in Sym(m), produced as standard coset tables by a
backtracking search (one table per subgroup) pruned with relators harvested
from the group itself. A candidate is accepted only if the subgroup of
``G x Sym(m)`` generated by the pairs ``(g_i, image_i)`` has order ``|G|``,
i.e. it is the graph of a homomorphism. Harvested relators can therefore be
incomplete without affecting correctness; they only steer the search.
"""

from __future__ import annotations

import logging

from . import kernels
from .chain import OrderExceeded, StabChain
from .errors import CapacityError
from .group import Subgroup
from .perm import element_order, inverse, is_identity_tuple, then

log = logging.getLogger(__name__)

FULL_PRESENTATION_ORDER = 5000
MAX_RELATORS = 400
MAX_NODES = 5_000_000


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    while len(out) > 1 and out[0] == out[-1] ^ 1:
        out = out[1:-1]
    return out


def _canonical(word):
    inv = [x ^ 1 for x in reversed(word)]
    return min(tuple(w[i:] + w[:i]) for w in (word, inv) for i in range(len(w)))


def harvest_relators(G, full_order=FULL_PRESENTATION_ORDER, max_relators=MAX_RELATORS):
    """Relators of ``G`` over its generators, letters as in the kernel.

    When ``|G| <= full_order`` the fundamental cycles of a BFS spanning tree of
    the Cayley graph are all returned, which is a complete presentation.
    Otherwise the BFS stops after ``full_order`` elements and only the shortest
    ``max_relators`` are kept.
    """
    gens = G.raw_generators
    ident = tuple(range(G.degree))
    words = {ident: []}
    order = [ident]
    complete = G.order() <= full_order
    rels = set()
    for i, g in enumerate(gens):
        k = element_order(g)
        rels.add(_canonical([2 * i] * k))
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for i, g in enumerate(gens):
            y = then(x, g)
            if y not in words:
                if len(words) < full_order:
                    words[y] = words[x] + [2 * i]
                    order.append(y)
                continue
            r = _free_reduce(words[x] + [2 * i] + [z ^ 1 for z in reversed(words[y])])
            if r:
                rels.add(_canonical(r))
    rels = sorted(rels, key=lambda r: (len(r), r))
    if not complete:
        rels = rels[:max_relators]
    return [list(r) for r in rels]


def _action_images(table, ngens, m):
    L = 2 * ngens
    return [tuple(table[c * L + 2 * i] for c in range(m)) for i in range(ngens)]


def is_homomorphism(G, images):
    """True iff ``g_i -> images[i]`` extends to a homomorphism of ``G``.

    Builds the group generated by the graph pairs on ``degree + m`` points and
    compares its order with ``|G|``; the build aborts once it is exceeded.
    """
    d = G.degree
    m = len(images[0]) if images else 0
    pairs = [g + tuple(d + x for x in img) for g, img in zip(G.raw_generators, images)]
    try:
        chain = StabChain(d + m, pairs, order_limit=G.order())
    except OrderExceeded:
        return False
    return chain.order() == G.order()


def _is_transitive(images, m):
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for img in images:
            y = img[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == m


def _stabilizer(G, images, m):
    """Point stabilizer of 0 via Schreier generators of the coset action."""
    gens = G.raw_generators
    ident = tuple(range(G.degree))
    trans = {0: ident}
    queue = [0]
    for c in queue:
        for g, img in zip(gens, images):
            d = img[c]
            if d not in trans:
                trans[d] = then(trans[c], g)
                queue.append(d)
    inv = {c: inverse(t) for c, t in trans.items()}
    chain = StabChain(G.degree)
    sgens = []
    target = G.order() // m
    for c in queue:
        for g, img in zip(gens, images):
            s = then(then(trans[c], g), inv[img[c]])
            if not is_identity_tuple(s) and chain.extend(s):
                sgens.append(s)
                if chain.order() == target:
                    break
    H = Subgroup(G, sgens, order=chain.order())
    H._chain = chain
    return H


def low_index_subgroups(G, n, max_nodes=None):
    """All subgroups of index ``<= n`` with their actions, in discovery order.

    Returns a list of ``(Subgroup, images)``. Raises :class:`CapacityError`
    when the search exceeds ``max_nodes``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    n = min(n, G.order())
    if max_nodes is None:
        max_nodes = MAX_NODES
    gens = G.raw_generators
    if not gens:
        return [(G.whole(), [])]
    rels = harvest_relators(G)
    tables, nodes, finished = kernels.low_index(len(gens), rels, n, max_nodes)
    log.debug("low_index %s n=%d: %d tables, %d nodes", G.name, n, len(tables), nodes)
    if not finished:
        raise CapacityError(f"coset-table search for index <= {n} exceeded {max_nodes} nodes")
    out = []
    L = 2 * len(gens)
    for table in tables:
        m = len(table) // L
        images = _action_images(table, len(gens), m)
        if not _is_transitive(images, m) or not is_homomorphism(G, images):
            continue
        H = _stabilizer(G, images, m)
        if H.order * m != G.order():
            raise AssertionError("stabilizer order disagrees with action degree")
        out.append((H, images))
    return out
