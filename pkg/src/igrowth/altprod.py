"""Closed-form intersection growth of products of alternating groups.

For a strictly increasing sequence ``n_1 < n_2 < ...`` with ``n_1 >= 5`` the
product of the ``Alt(n_i)`` has

* ``i(n)`` (all subgroups) equal to the product of ``|Alt(n_i)|`` over the
  factors with ``n_i <= n``: below ``n_i`` a factor has no proper subgroup of
  index ``<= n``, from ``n_i`` on its point stabilizers intersect trivially;
* ``i(n)`` for normal or maximal normal subgroups equal to the product of
  ``|Alt(n_i)|`` over the factors with ``|Alt(n_i)| <= n``, since the normal
  subgroups are exactly the sub-products.

The module also builds the fast-growing sequences for which ``i(n_k - 1)``
stays below a prescribed strictly increasing function, and checks them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import CapacityError, InsufficientPrefixError, ParseError
from .group import alternating, direct_product
from .growth import SubgroupClass, growth_table

DEGREE_BUDGET = 10_000
# exact |Alt(m)| is formed only up to this m; beyond it m! has millions of digits
ALT_ORDER_CAP = 200_000
# values of f wider than this are reported as "exceeds" rather than printed
MAX_PRINT_BITS = 1 << 20


def alt_order(m):
    """``|Alt(m)|``: ``m!/2`` for ``m >= 2`` and 1 below."""
    if m <= 2:
        return 1
    if m > ALT_ORDER_CAP:
        raise CapacityError(f"|Alt({m})| is too large to form exactly (cap m <= {ALT_ORDER_CAP})")
    return math.factorial(m) // 2


def alt_order_exceeds(m, bound):
    """``|Alt(m)| > bound`` without forming ``m!`` when ``m`` is huge."""
    if m <= 2:
        return 1 > bound
    target = 2 * bound
    acc = 1
    j = 1
    while j < m:
        j += 1
        acc *= j
        if acc > target:
            return True
    return False


@dataclass(frozen=True)
class AltSequence:
    """Strictly increasing ``n_1 < n_2 < ...`` with ``n_1 >= 5``.

    ``terms`` is the explicit prefix. ``rule``, if given, maps a 1-based
    position beyond the prefix to its term.
    """

    terms: tuple
    rule: Callable[[int], int] | None = field(default=None, compare=False)

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms and self.rule is None:
            raise ValueError("sequence is empty")
        if terms and terms[0] < 5:
            raise ValueError(f"n_1 must be >= 5, got {terms[0]}")
        for a, b in zip(terms, terms[1:]):
            if b <= a:
                raise ValueError(f"sequence not strictly increasing at {a}, {b}")

    @classmethod
    def arithmetic(cls, start, step, prefix=1):
        """``start, start + step, ...`` with the first ``prefix`` terms explicit."""
        if step < 1:
            raise ValueError("step must be positive")
        return cls(tuple(start + step * i for i in range(prefix)),
                   rule=lambda k: start + step * (k - 1))

    def term(self, k):
        """The 1-based ``k``-th term; raises when neither prefix nor rule reach it."""
        if k < 1:
            raise IndexError("terms are 1-based")
        if k <= len(self.terms):
            return self.terms[k - 1]
        if self.rule is None:
            raise InsufficientPrefixError(
                f"sequence prefix has {len(self.terms)} terms, term {k} is needed")
        value = int(self.rule(k))
        prev = self.term(k - 1) if k > 1 else 4
        if value <= prev:
            raise ValueError(f"rule is not strictly increasing at position {k}")
        return value

    def __len__(self):
        return len(self.terms)


def closed_igrowth(seq, n, cls=SubgroupClass.ALL):
    """Exact ``i(n)`` for the infinite product over ``seq``.

    Raises :class:`InsufficientPrefixError` unless some available term
    is past the threshold, so the result is never silently truncated.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cls = SubgroupClass(cls)
    result = 1
    k = 1
    while True:
        m = seq.term(k)
        if cls is SubgroupClass.ALL:
            if m > n:
                return result
        elif alt_order_exceeds(m, n):
            return result
        result *= alt_order(m)
        k += 1


def truncated_group(seq, k):
    """``Alt(n_1) x ... x Alt(n_k)`` as a permutation group."""
    terms = [seq.term(i) for i in range(1, k + 1)]
    if sum(terms) > DEGREE_BUDGET:
        raise CapacityError(f"truncation needs degree {sum(terms)} > {DEGREE_BUDGET}")
    G = alternating(terms[0])
    for m in terms[1:]:
        G = direct_product(G, alternating(m))
    return G


# -- growth functions ---------------------------------------------------------

class GrowthFunction:
    """Strictly increasing ``f: N -> N`` from a closed family; ``N`` starts at 0."""

    def __call__(self, m):
        raise NotImplementedError

    def exceeds(self, m, bound):
        """``f(m) > bound``, without materializing huge values."""
        return self(m) > bound

    def value_or_none(self, m, max_bits=MAX_PRINT_BITS):
        return self(m)

    def min_arg_exceeding(self, bound):
        """Smallest ``m >= 0`` with ``f(m) > bound``."""
        if self.exceeds(0, bound):
            return 0
        lo, hi = 0, 1
        while not self.exceeds(hi, bound):
            lo, hi = hi, hi * 2
        # f(lo) <= bound < f(hi)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.exceeds(mid, bound):
                hi = mid
            else:
                lo = mid
        return hi

    @staticmethod
    def parse(text):
        return parse_function(text)


def _poly_eval(coeffs, m):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * m + c
    return acc


def _poly_str(coeffs):
    return ",".join(str(c) for c in coeffs)


@dataclass(frozen=True)
class Identity(GrowthFunction):
    def __call__(self, m):
        return m

    def __str__(self):
        return "identity"


@dataclass(frozen=True)
class Polynomial(GrowthFunction):
    """``c0 + c1*m + ... + cd*m^d`` with coefficients listed constant-first."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if any(c < 0 for c in coeffs):
            raise ValueError("polynomial coefficients must be nonnegative")
        if len(coeffs) < 2:
            raise ValueError("polynomial must have degree >= 1 to be strictly increasing")
        object.__setattr__(self, "coeffs", coeffs)

    def __call__(self, m):
        return _poly_eval(self.coeffs, m)

    def __str__(self):
        return f"poly:{_poly_str(self.coeffs)}"


@dataclass(frozen=True)
class Exponential(GrowthFunction):
    """``p(m) * base^m`` with ``p`` a nonzero polynomial (default 1)."""

    base: int
    poly: tuple = (1,)

    def __post_init__(self):
        if int(self.base) < 2:
            raise ValueError("exponential base must be >= 2")
        poly = tuple(int(c) for c in self.poly)
        if any(c < 0 for c in poly) or not any(poly):
            raise ValueError("polynomial factor must be nonzero with nonnegative coefficients")
        while poly[-1] == 0:
            poly = poly[:-1]
        object.__setattr__(self, "base", int(self.base))
        object.__setattr__(self, "poly", poly)

    def __call__(self, m):
        return _poly_eval(self.poly, m) * self.base ** m

    def exceeds(self, m, bound):
        # for m >= 1, p(m) >= 1 and base^m >= 2^m > bound once m >= bit_length(bound)
        if m >= max(1, bound.bit_length()):
            return True
        return self(m) > bound

    def value_or_none(self, m, max_bits=MAX_PRINT_BITS):
        if m * self.base.bit_length() > max_bits:
            return None
        return self(m)

    def __str__(self):
        if self.poly == (1,):
            return f"exp:{self.base}"
        return f"exp:{self.base}:{_poly_str(self.poly)}"


def parse_function(text):
    """Parse ``identity``, ``poly:c0,c1,...`` or ``exp:base[:c0,c1,...]``."""
    s = text.strip().lower()
    try:
        if s in ("identity", "id"):
            return Identity()
        if s.startswith("poly:"):
            return Polynomial(tuple(int(c) for c in s[5:].split(",")))
        if s.startswith("exp:"):
            parts = s[4:].split(":")
            if len(parts) == 1:
                return Exponential(int(parts[0]))
            if len(parts) == 2:
                return Exponential(int(parts[0]), tuple(int(c) for c in parts[1].split(",")))
    except ValueError as exc:
        raise ParseError(f"invalid function {text!r}: {exc}") from None
    raise ParseError(f"invalid function {text!r}; use identity | poly:<coeffs> | exp:<base>")


# -- sequence construction and checks ---------------------------------------

def build_sequence(f, K):
    """Minimal sequence with ``P_k < n_{k+1}`` and ``P_k < f(n_{k+1} - 1)``.

    ``n_1 = 5`` and ``P_k`` is the product of ``|Alt(n_i)|`` for ``i <= k``.
    Each next term is ``max(n_k + 1, P_k + 1, m_f + 1)`` where ``m_f`` is the
    smallest argument with ``f(m_f) > P_k``.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    terms = [5]
    P = alt_order(5)
    while len(terms) < K:
        m_f = f.min_arg_exceeding(P)
        nxt = max(terms[-1] + 1, P + 1, m_f + 1)
        terms.append(nxt)
        if len(terms) < K:
            P *= alt_order(nxt)
    return AltSequence(tuple(terms))


def step_constraints(n_prev, P, candidate, f):
    """The three conditions a next term must meet, as booleans."""
    return (candidate > n_prev, P < candidate, f.exceeds(candidate - 1, P))


@dataclass(frozen=True)
class TheoremCheck:
    k: int
    n_k: int
    probe: int
    i: int
    f_value: int | None  # None when too large to print; comparison is still exact
    passed: bool


@dataclass
class MainTheoremReport:
    rows: list

    @property
    def passed(self):
        return all(r.passed for r in self.rows)


def verify_main_theorem(seq, f, K):
    """Check ``i(n_k - 1) < f(n_k - 1)`` for ``k = 2..K`` (vacuous for ``K = 1``)."""
    rows = []
    for k in range(2, K + 1):
        n_k = seq.term(k)
        probe = n_k - 1
        i = closed_igrowth(seq, probe, SubgroupClass.ALL)
        rows.append(TheoremCheck(k, n_k, probe, i, f.value_or_none(probe), f.exceeds(probe, i)))
    return MainTheoremReport(rows)


@dataclass(frozen=True)
class LiteralMinRow:
    k: int
    product: int
    literal_ok: bool    # P_k < min(n_k + 1, f(n_{k+1} - 1))
    corrected_ok: bool  # P_k < min(n_{k+1}, f(n_{k+1} - 1))


def literal_min_report(seq, f):
    """Evaluate both readings of the step inequality on consecutive terms."""
    rows = []
    P = 1
    for k in range(1, len(seq.terms)):
        n_k, n_next = seq.term(k), seq.term(k + 1)
        P *= alt_order(n_k)
        f_ok = f.exceeds(n_next - 1, P)
        rows.append(LiteralMinRow(k, P, P < n_k + 1 and f_ok, P < n_next and f_ok))
    return rows


@dataclass(frozen=True)
class TruncationRow:
    n: int
    enumerated: int
    closed: int

    @property
    def agrees(self):
        return self.enumerated == self.closed


@dataclass
class TruncationReport:
    sequence: tuple
    k: int
    rows: list

    @property
    def mismatches(self):
        return [r.n for r in self.rows if not r.agrees]

    @property
    def passed(self):
        return not self.mismatches


def verify_truncation(seq, k, closed_form=None, method="auto"):
    """Compare the closed form with enumeration on ``Alt(n_1) x ... x Alt(n_k)``.

    Covers every ``n <= n_k - 1``. ``closed_form`` replaces :func:`closed_igrowth`
    (used to check that the harness reports disagreements).
    """
    closed_form = closed_form or (lambda n: closed_igrowth(seq, n, SubgroupClass.ALL))
    top = seq.term(k) - 1
    G = truncated_group(seq, k)
    table = growth_table(G, top, SubgroupClass.ALL, method)
    rows = [TruncationRow(r.n, r.i, closed_form(r.n)) for r in table.rows]
    return TruncationReport(tuple(seq.term(i) for i in range(1, k + 1)), k, rows)
