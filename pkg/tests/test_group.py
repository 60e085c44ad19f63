import math
import threading
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from igrowth.chain import OrderExceeded, StabChain
from igrowth.errors import CapacityError
from igrowth.group import (
    PermGroup,
    Subgroup,
    alternating,
    core,
    cyclic,
    dihedral,
    direct_product,
    intersect,
    is_normal,
    subgroup_from_elements,
    symmetric,
    trivial_group,
)
from igrowth.lattice import lattice_of
from igrowth.perm import Permutation

from oracles import generate, mul


def P(text, degree):
    return Permutation.parse(text, degree)


def small_groups():
    return {
        "C1": trivial_group(1),
        "C2": cyclic(2),
        "C6": cyclic(6),
        "S3": symmetric(3),
        "A4": alternating(4),
        "S4": symmetric(4),
        "D8": dihedral(4),
        "D10": dihedral(5),
        "A5": alternating(5),
        "S5": symmetric(5),
        "A6": alternating(6),
        "C2xC2": direct_product(cyclic(2), cyclic(2)),
        "S3xC2": direct_product(symmetric(3), cyclic(2)),
        "A4xC3": direct_product(alternating(4), cyclic(3)),
        "S7": symmetric(7),
        "A7": alternating(7),
        "mixed": PermGroup(6, [P("(1 2)(3 4)", 6), P("(2 5 6)", 6)]),
    }


def test_group_order_examples():
    assert PermGroup(5, [P("(1 2 3)", 5), P("(3 4 5)", 5)]).order() == 60
    assert PermGroup(1, []).order() == 1
    assert PermGroup(4, [P("(1 2)", 4), P("(1 2 3 4)", 4)]).order() == 24


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_order_matches_exhaustive_enumeration(name):
    G = small_groups()[name]
    elems = generate(G.raw_generators, G.degree)
    assert G.order() == len(elems)
    assert set(G.elements()) == set(elems)


def test_elements_are_distinct():
    G = symmetric(5)
    listed = list(G.elements())
    assert len(listed) == len(set(listed)) == 120


def test_contains_examples():
    A5 = alternating(5)
    assert A5.contains(P("(1 2 3)", 5))
    assert not A5.contains(P("(1 2)", 5))
    S4 = symmetric(4)
    assert S4.contains(P("(1 3)(2 4)", 4))
    assert P("(1 3)(2 4)", 4).arr in set(generate(S4.raw_generators, 4))
    with pytest.raises(ValueError):
        A5.contains(P("(1 2)", 4))


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_closure_smoke(name):
    G = small_groups()[name]
    for a in G.generators:
        for b in G.generators:
            assert G.contains(a * b)


@pytest.mark.parametrize("m,order", [(1, 1), (2, 1), (3, 3), (4, 12), (5, 60), (7, 2520), (9, 181440)])
def test_alternating_orders(m, order):
    assert alternating(m).order() == order == max(1, math.factorial(m) // 2)


def test_symmetric_cyclic_orders():
    assert [symmetric(m).order() for m in (1, 2, 3, 6)] == [1, 2, 6, 720]
    assert [cyclic(m).order() for m in (1, 2, 7)] == [1, 2, 7]
    assert dihedral(4).order() == 8
    for ctor in (alternating, symmetric, cyclic):
        with pytest.raises(ValueError):
            ctor(0)


def test_direct_product():
    A = direct_product(alternating(5), alternating(6))
    assert A.order() == 21600
    G = symmetric(4)
    assert direct_product(G, trivial_group(1)).order() == G.order()
    V = direct_product(cyclic(2), cyclic(2))
    assert V.order() == 4
    assert all(mul(x, x) == tuple(range(4)) for x in V.elements())


def test_direct_product_factors_commute():
    G = direct_product(alternating(5), alternating(6))
    F0, F1 = G.factor_subgroup(0), G.factor_subgroup(1)
    assert (F0.order, F1.order) == (60, 360)
    for a in F0.generators:
        for b in F1.generators:
            assert a * b == b * a
    assert intersect(F0, F1).order == 1
    assert is_normal(F0) and is_normal(F1)


def test_iterated_product_keeps_factors():
    G = direct_product(direct_product(cyclic(2), cyclic(3)), alternating(5))
    assert [f.order for f in G.factors] == [2, 3, 60]
    assert [G.factor_subgroup(i).order for i in range(3)] == [2, 3, 60]


def test_subgroup_lagrange_and_membership():
    A5 = alternating(5)
    H = Subgroup(A5, [P("(1 2 3)", 5), P("(2 3 4)", 5)], check=True)
    assert H.order == 12 and H.index == 5
    assert H.order * H.index == A5.order()
    with pytest.raises(ValueError):
        Subgroup(A5, [P("(1 2)", 5)], check=True)


def point_stabilizer_alt5(point):
    pts = [p for p in range(1, 6) if p != point]
    a, b, c, d = pts
    return Subgroup(alternating(5), [P(f"({a} {b} {c})", 5), P(f"({b} {c} {d})", 5)])


def test_intersect_examples():
    A5 = alternating(5)
    H = Subgroup(A5, [P("(1 2 3)", 5), P("(2 3 4)", 5)])  # fixes 5
    K = Subgroup(A5, [P("(2 3 4)", 5), P("(3 4 5)", 5)])  # fixes 1
    assert intersect(H, H) == H
    I = intersect(H, K)
    assert I.order == 3
    assert I.elements() == H.elements() & K.elements()
    C = direct_product(cyclic(3), cyclic(3))
    assert intersect(C.factor_subgroup(0), C.factor_subgroup(1)).order == 1


def test_intersect_rejects_other_ambient():
    with pytest.raises(ValueError):
        intersect(alternating(5).whole(), alternating(5).whole())


def test_intersect_capacity():
    S9 = symmetric(9)
    with pytest.raises(CapacityError):
        intersect(S9.whole(), S9.trivial())


def test_core_examples():
    A5 = alternating(5)
    stab = point_stabilizer_alt5(5)
    assert core(stab).order == 1
    assert core(A5.whole()).order == 60
    S4 = symmetric(4)
    A4 = Subgroup(S4, [P("(1 2 3)", 4), P("(2 3 4)", 4)])
    assert A4.order == 12
    assert core(A4) == A4


def test_is_normal_examples():
    A5 = alternating(5)
    assert is_normal(A5.trivial())
    assert is_normal(A5.whole())
    assert not is_normal(point_stabilizer_alt5(1))


def _subgroup_sample(G, limit=12):
    lat = lattice_of(G)
    return [lat.subgroup(m) for m in lat.masks[:: max(1, len(lat.masks) // limit)]]


@pytest.mark.parametrize("G", [symmetric(4), alternating(5), dihedral(6),
                               direct_product(symmetric(3), cyclic(3))],
                         ids=["S4", "A5", "D12", "S3xC3"])
def test_intersect_commutative_associative(G):
    subs = _subgroup_sample(G, 8)
    for H, K in combinations(subs, 2):
        assert intersect(H, K) == intersect(K, H)
        assert intersect(H, K).elements() == H.elements() & K.elements()
    for H, K, L in combinations(subs, 3):
        assert intersect(intersect(H, K), L) == intersect(H, intersect(K, L))


@pytest.mark.parametrize("G", [symmetric(4), alternating(5), dihedral(4), symmetric(3)],
                         ids=["S4", "A5", "D8", "S3"])
def test_core_properties(G):
    elems = list(G.elements())
    for H in all_subgroups_of(G):
        C = core(H)
        assert is_normal(C)
        assert C.is_subgroup_of(H)
        assert core(C) == C
        # core is the intersection of all conjugates
        brute = H.elements()
        for g in elems:
            brute = brute & H.conjugate(g).elements()
        assert C.elements() == brute


def all_subgroups_of(G):
    lat = lattice_of(G)
    return [lat.subgroup(m) for m in lat.masks]


def test_subgroup_from_elements_is_deterministic():
    S4 = symmetric(4)
    H = Subgroup(S4, [P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)])
    a = subgroup_from_elements(S4, H.elements())
    b = subgroup_from_elements(S4, list(reversed(sorted(H.elements()))))
    assert a.raw_generators == b.raw_generators
    assert a == H


def test_chain_base_is_smallest_moved_points():
    G = PermGroup(6, [P("(3 4 5)", 6), P("(4 5 6)", 6)])
    assert G.chain.base[0] == 2  # 0-based point 3


def test_chain_order_limit():
    S5 = symmetric(5)
    with pytest.raises(OrderExceeded):
        StabChain(5, S5.raw_generators, order_limit=60)
    assert StabChain(5, S5.raw_generators, order_limit=120).order() == 120


def test_concurrent_first_access_builds_one_chain():
    G = symmetric(7)
    results, chains = [], []
    barrier = threading.Barrier(8)

    def worker():
        barrier.wait()
        results.append(G.order())
        chains.append(id(G.chain))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [5040] * 8
    assert len(set(chains)) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(range(6)), min_size=0, max_size=3))
def test_random_groups_match_enumeration(gens):
    gens = [tuple(g) for g in gens]
    G = PermGroup(6, [Permutation(g, zero_based=True) for g in gens])
    elems = generate(gens, 6)
    assert G.order() == len(elems)
    for x in list(elems)[:20]:
        assert G.contains(x)
