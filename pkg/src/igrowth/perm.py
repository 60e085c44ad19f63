"""Permutations of ``{1..d}`` and cycle notation.

Points are 1-based at every public surface (cycle notation, ``images``,
calling a permutation). Internally a permutation is the 0-based image tuple
``arr`` with ``arr[x]`` the image of ``x``.

Composition convention: ``compose(p, q)`` (also ``p * q``) is the function
composition ``p o q``, i.e. ``(p * q)(x) == p(q(x))``: apply ``q`` first.
So ``(1 2) * (2 3) == (1 2 3)``.

The group algorithms elsewhere work on raw tuples with the helper
:func:`then`, where ``then(a, b)`` applies ``a`` first and then ``b``
(``then(a, b) == compose(b, a)``).
"""

from __future__ import annotations

import re

from .errors import ParseError

MAX_DEGREE = 10_000


def then(a, b):
    """Raw product: apply tuple ``a`` first, then ``b``."""
    return tuple([b[i] for i in a])


def inverse(a):
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def identity_tuple(degree):
    return tuple(range(degree))


def is_identity_tuple(a):
    return all(i == j for i, j in enumerate(a))


def element_order(a):
    """Order of a raw permutation (lcm of its cycle lengths)."""
    from math import lcm

    seen = [False] * len(a)
    order = 1
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        order = lcm(order, length)
    return order


class Permutation:
    """A bijection of ``{1..degree}``; immutable and hashable."""

    __slots__ = ("arr",)

    def __init__(self, images, *, zero_based=False):
        arr = tuple(int(x) for x in images)
        if not zero_based:
            arr = tuple(x - 1 for x in arr)
        if not arr:
            raise ValueError("permutation degree must be positive")
        if len(arr) > MAX_DEGREE:
            raise ValueError(f"degree {len(arr)} exceeds cap {MAX_DEGREE}")
        if sorted(arr) != list(range(len(arr))):
            raise ValueError(f"not a bijection: {images!r}")
        self.arr = arr

    @classmethod
    def _raw(cls, arr):
        p = object.__new__(cls)
        p.arr = arr
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(identity_tuple(degree))

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from an iterable of 1-based cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        arr = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            for x in cyc:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                arr[a - 1] = b - 1
        return cls._raw(tuple(arr))

    @classmethod
    def parse(cls, text, degree):
        """Parse cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` is the identity."""
        return cls.from_cycles(parse_cycles(text), degree)

    @property
    def degree(self):
        return len(self.arr)

    @property
    def images(self):
        """1-based image sequence."""
        return tuple(x + 1 for x in self.arr)

    def __call__(self, x):
        return self.arr[x - 1] + 1

    def compose(self, other):
        return compose(self, other)

    __mul__ = compose

    def inverse(self):
        return Permutation._raw(inverse(self.arr))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = identity_tuple(self.degree)
        base = self.arr
        while k:
            if k & 1:
                result = then(result, base)
            base = then(base, base)
            k >>= 1
        return Permutation._raw(result)

    def is_identity(self):
        return is_identity_tuple(self.arr)

    def order(self):
        return element_order(self.arr)

    def cycles(self):
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.arr[start] == start:
                continue
            cyc = [start + 1]
            seen.add(start)
            x = self.arr[start]
            while x != start:
                cyc.append(x + 1)
                seen.add(x)
                x = self.arr[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.arr == other.arr

    def __hash__(self):
        return hash(self.arr)

    def __lt__(self, other):
        return self.arr < other.arr

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation.parse({str(self)!r}, {self.degree})"


def compose(p, q):
    """``p o q``: apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation._raw(then(q.arr, p.arr))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text):
    """Split cycle notation into lists of ints. Raises ``ValueError`` on junk."""
    s = text.strip()
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"unexpected text {s[pos:m.start()].strip()!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(tok) for tok in body])
        except ValueError:
            raise ValueError(f"non-integer point in cycle ({m.group(1)})") from None
        pos = m.end()
    rest = s[pos:].strip()
    if rest:
        raise ValueError(f"unbalanced or unexpected text {rest!r}")
    if not cycles and s:
        raise ValueError(f"no cycles found in {s!r}")
    return cycles


def read_group_text(text):
    """Parse a group file: a ``degree N`` header and one generator per line.

    Blank lines and ``#`` comments are ignored. Returns ``(degree, [Permutation])``.
    """
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0].lower() != "degree":
                raise ParseError("expected header 'degree N'", lineno)
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(f"bad degree {parts[1]!r}", lineno) from None
            if not 1 <= degree <= MAX_DEGREE:
                raise ParseError(f"degree must be in 1..{MAX_DEGREE}", lineno)
            continue
        try:
            gens.append(Permutation.parse(line, degree))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if degree is None:
        raise ParseError("missing 'degree N' header")
    return degree, gens


def format_group_text(degree, generators):
    lines = [f"degree {degree}"]
    lines.extend(str(g) for g in generators)
    return "\n".join(lines) + "\n"
