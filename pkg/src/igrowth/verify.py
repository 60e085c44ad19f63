"""Self-verification suites behind ``igrowth verify``.

Each check returns a :class:`Check`; a suite passes iff every check does.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement

from . import kernels
from .altprod import (
    AltSequence,
    Exponential,
    Identity,
    Polynomial,
    build_sequence,
    closed_igrowth,
    verify_main_theorem,
    verify_truncation,
)
from .group import alternating, cyclic, dihedral, direct_product, is_normal, symmetric
from .growth import SubgroupClass, growth_table, lambda_subgroup
from .subgroups import subgroups_up_to_index

C = SubgroupClass


def corpus():
    """The named test groups, smallest first."""
    return {
        "C2": cyclic(2),
        "C3": cyclic(3),
        "C6": cyclic(6),
        "S3": symmetric(3),
        "C2xC2": direct_product(cyclic(2), cyclic(2)),
        "A4": alternating(4),
        "S4": symmetric(4),
        "D8": dihedral(4),
        "A5": alternating(5),
        "S3xC2": direct_product(symmetric(3), cyclic(2)),
    }


def multiplicativity_factors():
    return {"C2": cyclic(2), "C3": cyclic(3), "S3": symmetric(3), "A4": alternating(4)}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _timed(name, fn):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, bool(ok), detail, round(time.perf_counter() - t0, 3))


# -- individual checks ------------------------------------------------------

def oracle_equivalence(groups=None, classes=(C.ALL, C.NORMAL)):
    """Lattice filter and homomorphism-graph search give the same i(n), n <= |G|."""
    groups = groups or corpus()
    bad = []
    for name, G in groups.items():
        N = G.order()
        for c in classes:
            a = growth_table(G, N, c, "lattice").values()
            b = growth_table(G, N, c, "homsearch").values()
            if a != b:
                bad.append(f"{name}/{c.value}")
    return not bad, "mismatch: " + ", ".join(bad) if bad else f"{len(groups)} groups agree"


def multiplicativity(factors=None):
    """i(AxB, n) = i(A, n) i(B, n) for all and normal subgroups, n <= |AxB|."""
    factors = factors or multiplicativity_factors()
    bad = []
    count = 0
    for (na, A), (nb, B) in combinations_with_replacement(sorted(factors.items()), 2):
        P = direct_product(A, B)
        N = P.order()
        for c in (C.ALL, C.NORMAL):
            tp = growth_table(P, N, c).values()
            ta = growth_table(A, N, c).values()
            tb = growth_table(B, N, c).values()
            count += 1
            if tp != [x * y for x, y in zip(ta, tb)]:
                bad.append(f"{na}x{nb}/{c.value}")
    return not bad, "fails: " + ", ".join(bad) if bad else f"{count} product tables agree"


def minimal_index(ms=(5, 6, 7)):
    """Alt(m) has no proper subgroup of index < m but has one of index m."""
    details = []
    ok = True
    for m in ms:
        G = alternating(m)
        below = subgroups_up_to_index(G, m - 1)
        at = subgroups_up_to_index(G, m)
        good = ([H.index for H in below] == [1]
                and any(H.index == m for H in at))
        ok &= good
        details.append(f"Alt({m}):{'ok' if good else 'FAIL'}")
    return ok, " ".join(details)


def invariants(groups=None):
    """Class ordering, monotonicity, normality of Lambda, Lagrange, index bound."""
    groups = groups or corpus()
    bad = []
    for name, G in groups.items():
        N = G.order()
        tables = {c: growth_table(G, N, c) for c in C}
        for c, t in tables.items():
            vals = t.values()
            if any(b < a for a, b in zip(vals, vals[1:])):
                bad.append(f"{name}/{c.value}: not monotone")
            if any(r.i * r.lambda_order != N for r in t.rows):
                bad.append(f"{name}/{c.value}: Lagrange")
        for a, b, c in zip(tables[C.MAXNORMAL].values(), tables[C.NORMAL].values(),
                           tables[C.ALL].values()):
            if not a <= b <= c:
                bad.append(f"{name}: class ordering")
                break
        for n in range(1, N + 1):
            for c in C:
                if not is_normal(lambda_subgroup(G, n, c)):
                    bad.append(f"{name}/{c.value}/n={n}: Lambda not normal")
    return not bad, "; ".join(bad[:5]) if bad else f"{len(groups)} groups"


def realized_index_bound(groups=None):
    """For every realized index m, i(m) >= m."""
    groups = groups or corpus()
    bad = []
    for name, G in groups.items():
        N = G.order()
        vals = growth_table(G, N, C.ALL).values()
        realized = {H.index for H in subgroups_up_to_index(G, N)}
        bad += [f"{name}:m={m}" for m in sorted(realized) if vals[m - 1] < m]
    return not bad, ", ".join(bad) if bad else "holds on corpus"


def main_theorem_identity():
    seq = build_sequence(Identity(), 3)
    expected = (5, 62, 60 * math.factorial(62) // 2 + 2)
    report = verify_main_theorem(seq, Identity(), 3)
    ok = seq.terms == expected and report.passed
    return ok, f"terms match: {seq.terms == expected}; checks: {[r.passed for r in report.rows]}"


def main_theorem_families(K=3):
    fams = [Identity(), Polynomial((0, 0, 1)), Polynomial((3, 2, 1)), Exponential(2),
            Exponential(3, (1, 1))]
    bad = [str(f) for f in fams if not verify_main_theorem(build_sequence(f, K), f, K).passed]
    return not bad, "fails: " + ", ".join(bad) if bad else f"{len(fams)} families, K={K}"


def truncation_check(seq_terms, k):
    seq = AltSequence(tuple(seq_terms))
    report = verify_truncation(seq, k)
    vals = [r.enumerated for r in report.rows]
    return report.passed, f"seq={seq_terms} k={k} enumerated={vals}"


def closed_form_spot():
    seq = AltSequence.arithmetic(5, 2)
    got = [closed_igrowth(seq, n) for n in (4, 6, 8)]
    return got == [1, 60, 60 * 2520], f"i(4), i(6), i(8) = {got}"


def injected_failure():
    return False, "deliberate failure fixture"


# -- suites -----------------------------------------------------------------

def run_suite(level="quick", inject_failure=False):
    small = {k: v for k, v in corpus().items() if v.order() <= 360}
    checks = [
        ("oracle_equivalence", lambda: oracle_equivalence(small)),
        ("multiplicativity", multiplicativity),
        ("invariants", lambda: invariants(small)),
        ("realized_index_bound", lambda: realized_index_bound(small)),
        ("minimal_index", lambda: minimal_index((5, 6))),
        ("closed_form_spot", closed_form_spot),
        ("main_theorem_identity", main_theorem_identity),
        ("truncation_alt5", lambda: truncation_check((5,), 1)),
    ]
    if level == "full":
        checks += [
            ("minimal_index_alt7", lambda: minimal_index((7,))),
            ("main_theorem_families", main_theorem_families),
            ("truncation_alt5_alt6", lambda: truncation_check((5, 6), 2)),
        ]
    elif level != "quick":
        raise ValueError(f"unknown level {level!r}")
    if inject_failure:
        checks.append(("injected_failure", injected_failure))
    results = [_timed(name, fn) for name, fn in checks]
    return {
        "schema": 1,
        "level": level,
        "backend": kernels.BACKEND,
        "passed": all(r.passed for r in results),
        "checks": [asdict(r) for r in results],
    }
