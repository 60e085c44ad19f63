import pytest

from igrowth.group import alternating, cyclic, dihedral, direct_product, is_normal, symmetric
from igrowth.growth import (
    SubgroupClass,
    growth_table,
    igrowth,
    jump_points,
    lambda_subgroup,
)
from igrowth.subgroups import all_subgroups, subgroups_up_to_index

from oracles import brute_igrowth, subgroups_by_rank

C = SubgroupClass


def groups():
    return {
        "S3": symmetric(3), "C2xC2": direct_product(cyclic(2), cyclic(2)),
        "C6": cyclic(6), "D8": dihedral(4), "A4": alternating(4), "S4": symmetric(4),
        "A5": alternating(5), "S3xC2": direct_product(symmetric(3), cyclic(2)),
    }


def pad(prefix, length):
    return prefix + [prefix[-1]] * (length - len(prefix))


# i(n) for n = 1..min(|G|, 12), brute force over all subgroups, frozen
FROZEN = {
    ("S3", C.ALL): [1, 2, 6, 6, 6, 6],
    ("S3", C.NORMAL): [1, 2, 2, 2, 2, 6],
    ("S3", C.MAXNORMAL): [1, 2, 2, 2, 2, 2],
    ("C2xC2", C.ALL): [1, 4, 4, 4],
    ("C2xC2", C.NORMAL): [1, 4, 4, 4],
    ("C2xC2", C.MAXNORMAL): [1, 4, 4, 4],
    ("C6", C.ALL): [1, 2, 6, 6, 6, 6],
    ("C6", C.NORMAL): [1, 2, 6, 6, 6, 6],
    ("C6", C.MAXNORMAL): [1, 2, 6, 6, 6, 6],
    ("D8", C.ALL): [1, 4, 4, 8, 8, 8, 8, 8],
    ("D8", C.NORMAL): [1, 4, 4, 4, 4, 4, 4, 8],
    ("D8", C.MAXNORMAL): [1, 4, 4, 4, 4, 4, 4, 4],
    ("A4", C.ALL): pad([1, 1, 3, 12], 12),
    ("A4", C.NORMAL): pad([1, 1, 3], 11) + [12],
    ("A4", C.MAXNORMAL): pad([1, 1, 3], 12),
    ("S4", C.ALL): pad([1, 2, 6, 24], 12),
    ("S4", C.NORMAL): pad([1, 2, 2, 2, 2, 6], 12),
    ("S4", C.MAXNORMAL): pad([1, 2], 12),
    ("A5", C.ALL): pad([1, 1, 1, 1, 60], 12),
    ("A5", C.NORMAL): [1] * 12,
    ("A5", C.MAXNORMAL): [1] * 12,
    ("S3xC2", C.ALL): pad([1, 4, 12], 12),
    ("S3xC2", C.NORMAL): pad([1, 4, 4, 4, 4, 12], 12),
    ("S3xC2", C.MAXNORMAL): pad([1, 4], 12),
}


@pytest.mark.parametrize("name,cls", sorted(FROZEN, key=lambda k: (k[0], k[1].value)),
                         ids=lambda v: v if isinstance(v, str) else v.value)
def test_frozen_values(name, cls):
    G = groups()[name]
    expected = FROZEN[name, cls]
    assert growth_table(G, len(expected), cls).values() == expected


@pytest.mark.parametrize("name", ["S3", "D8", "A4", "S4", "S3xC2"])
@pytest.mark.parametrize("cls", list(C), ids=lambda c: c.value)
def test_live_oracle_full_range(name, cls):
    G = groups()[name]
    N = G.order()
    elems = frozenset(G.elements())
    subs = subgroups_by_rank(elems, G.degree)
    expected = [brute_igrowth(subs, N, n, cls.value, elems) for n in range(1, N + 1)]
    assert growth_table(G, N, cls).values() == expected


def test_alt5_examples():
    A5 = alternating(5)
    assert igrowth(A5, 4) == 1
    assert igrowth(A5, 5) == 60
    assert lambda_subgroup(A5, 5).order == 1
    assert igrowth(A5, 60, C.NORMAL) == 60
    assert igrowth(A5, 59, C.NORMAL) == 1
    assert igrowth(A5, 60, C.MAXNORMAL) == 60


def test_sym4_examples():
    S4 = symmetric(4)
    assert igrowth(S4, 1) == 1
    assert igrowth(S4, 24) == 24
    assert igrowth(S4, 6, C.NORMAL) == 6


def test_table_shape():
    t = growth_table(alternating(5), 6)
    assert [r.n for r in t.rows] == list(range(1, 7))
    assert t.values() == [1, 1, 1, 1, 60, 60]
    assert [r.lambda_order for r in t.rows] == [60, 60, 60, 60, 1, 1]
    assert jump_points(t) == [(5, 60)]
    assert growth_table(symmetric(4), 5, C.NORMAL).values() == [1, 2, 2, 2, 2]
    with pytest.raises(ValueError):
        growth_table(symmetric(3), 0)


def test_jump_points_s4():
    assert jump_points(growth_table(symmetric(4), 24)) == [(2, 2), (3, 6), (4, 24)]


def test_n_beyond_order_is_stable():
    G = symmetric(3)
    assert growth_table(G, 20).values() == [1, 2] + [6] * 18


@pytest.mark.parametrize("name", sorted(groups()))
@pytest.mark.parametrize("cls", list(C), ids=lambda c: c.value)
def test_incremental_equals_scratch(name, cls):
    G = groups()[name]
    N = min(G.order(), 24)
    assert (growth_table(G, N, cls).values()
            == growth_table(G, N, cls, incremental=False).values())


@pytest.mark.parametrize("name", sorted(groups()))
def test_invariants(name):
    G = groups()[name]
    N = G.order()
    t = {c: growth_table(G, N, c) for c in C}
    for c in C:
        vals = t[c].values()
        assert vals[0] == 1
        assert all(a <= b for a, b in zip(vals, vals[1:]))
        for r in t[c].rows:
            assert r.i * r.lambda_order == N
            assert 1 <= r.i <= N
            assert is_normal(lambda_subgroup(G, r.n, c))
    for a, b, c in zip(t[C.MAXNORMAL].values(), t[C.NORMAL].values(), t[C.ALL].values()):
        assert a <= b <= c


@pytest.mark.parametrize("name", sorted(groups()))
def test_realized_index_lower_bound(name):
    G = groups()[name]
    N = G.order()
    vals = growth_table(G, N).values()
    for m in {H.index for H in all_subgroups(G)}:
        assert vals[m - 1] >= m


def test_all_class_lambda_is_core_intersection():
    # Lambda_All(n) is normal, so it equals the intersection of cores
    from igrowth.group import core, intersect
    G = symmetric(4)
    for n in range(1, 25):
        subs = subgroups_up_to_index(G, n).items
        acc = G.whole()
        for H in subs:
            acc = intersect(acc, core(H))
        assert acc == lambda_subgroup(G, n)


@pytest.mark.parametrize("a,b", [(cyclic(2), cyclic(3)), (symmetric(3), cyclic(2)),
                                 (alternating(4), cyclic(2)), (cyclic(2), cyclic(2))],
                         ids=["C2xC3", "S3xC2", "A4xC2", "C2xC2"])
@pytest.mark.parametrize("cls", [C.ALL, C.NORMAL], ids=lambda c: c.value)
def test_multiplicative(a, b, cls):
    P = direct_product(a, b)
    N = P.order()
    tp = growth_table(P, N, cls).values()
    ta = growth_table(a, N, cls).values()
    tb = growth_table(b, N, cls).values()
    assert tp == [x * y for x, y in zip(ta, tb)]


def test_homsearch_path_beyond_lattice():
    A56 = direct_product(alternating(5), alternating(6))
    assert growth_table(A56, 5).values() == [1, 1, 1, 1, 60]
    assert growth_table(alternating(7), 7).values() == [1] * 6 + [2520]


def test_maxnormal_on_large_product():
    G = direct_product(alternating(5), alternating(6))
    assert igrowth(G, 59, C.MAXNORMAL) == 1
    assert igrowth(G, 60, C.MAXNORMAL) == 60
    assert igrowth(G, 360, C.MAXNORMAL) == 21600


def test_class_parse():
    assert SubgroupClass.parse("Normal") is C.NORMAL
    with pytest.raises(ValueError):
        SubgroupClass.parse("minimal")


def test_lambda_examples():
    S4 = symmetric(4)
    V4 = lambda_subgroup(S4, 6, C.NORMAL)
    assert V4.order == 4
    assert all(x.order() <= 2 for x in V4.generators)
    assert lambda_subgroup(alternating(5), 4).order == 60
    assert igrowth(symmetric(3), 2) == 2 and igrowth(symmetric(3), 3) == 6


def test_jump_point_examples():
    assert jump_points(growth_table(direct_product(cyclic(2), cyclic(2)), 4)) == [(2, 4)]
    assert jump_points(growth_table(alternating(5), 4)) == []


@pytest.mark.parametrize("cls", list(C), ids=lambda c: c.value)
def test_single_row_table(cls):
    for G in (cyclic(2), symmetric(4), alternating(5)):
        t = growth_table(G, 1, cls)
        assert [(r.n, r.i) for r in t.rows] == [(1, 1)]
