"""Pure-Python kernels. Same signatures and results as the compiled ``_kernels``.

closure
    Right-multiplication closure over a column-major multiplication table.
    ``table[col * n + x]`` is the index of ``x * g_col``. ``seed`` and the
    return value are little-endian packed bitsets over ``range(n)``.

low_index
    Felsch-style search for standard coset tables of index ``<= max_index``.
    Letters are ``2*i`` for generator ``i`` and ``2*i + 1`` for its inverse.
    Returns ``(tables, nodes, finished)``; each table is a flat tuple of
    ``m * 2k`` entries, row ``c`` holding the images of coset ``c``.
    ``finished`` is False when ``max_nodes`` (if nonzero) ran out.
"""

import sys


def closure(table, n, cols, seed):
    member = bytearray(n)
    queue = []
    for byte_i, byte in enumerate(seed):
        if byte:
            base = byte_i * 8
            for bit in range(8):
                if byte >> bit & 1:
                    member[base + bit] = 1
                    queue.append(base + bit)
    offsets = [c * n for c in cols]
    k = 0
    while k < len(queue):
        x = queue[k]
        k += 1
        for off in offsets:
            y = table[off + x]
            if not member[y]:
                member[y] = 1
                queue.append(y)
    out = bytearray((n + 7) // 8)
    for x in queue:
        out[x >> 3] |= 1 << (x & 7)
    return bytes(out)


class _Budget(Exception):
    pass


def _conjugates(relators):
    words = []
    for r in relators:
        r = list(r)
        if r:
            words.append(r)
            words.append([x ^ 1 for x in reversed(r)])
    by_letter = {}
    seen = set()
    for w in words:
        for i in range(len(w)):
            c = tuple(w[i:] + w[:i])
            if c not in seen:
                seen.add(c)
                by_letter.setdefault(c[0], []).append(c)
    return by_letter


def low_index(ngens, relators, max_index, max_nodes=0):
    L = 2 * ngens
    if L == 0:
        return [()], 1, True
    T = [-1] * (max_index * L)
    conj = _conjugates(relators)
    base_words = [list(r) for r in relators if r]
    trail = []
    queue = []
    results = []
    state = {"n": 1, "nodes": 0}

    def define(c, x, d):
        T[c * L + x] = d
        T[d * L + (x ^ 1)] = c
        trail.append(c * L + x)
        trail.append(d * L + (x ^ 1))
        queue.append((c, x))

    def undo(mark):
        while len(trail) > mark:
            T[trail.pop()] = -1

    def scan(w, c):
        lw = len(w)
        f = c
        i = 0
        while i < lw:
            nxt = T[f * L + w[i]]
            if nxt < 0:
                break
            f = nxt
            i += 1
        if i == lw:
            return f == c
        b = c
        j = lw - 1
        while j >= i:
            nxt = T[b * L + (w[j] ^ 1)]
            if nxt < 0:
                break
            b = nxt
            j -= 1
        if j < i:
            return f == b
        if j == i:
            define(f, w[i], b)
        return True

    def process():
        while queue:
            c, x = queue.pop()
            for w in conj.get(x, ()):
                if not scan(w, c):
                    queue.clear()
                    return False
        return True

    def complete_ok(n):
        for w in base_words:
            for c in range(n):
                f = c
                for x in w:
                    f = T[f * L + x]
                if f != c:
                    return False
        return True

    def search():
        state["nodes"] += 1
        if max_nodes and state["nodes"] > max_nodes:
            raise _Budget
        n = state["n"]
        pos = -1
        for p in range(n * L):
            if T[p] < 0:
                pos = p
                break
        if pos < 0:
            if complete_ok(n):
                results.append(tuple(T[:n * L]))
            return
        c, x = divmod(pos, L)
        xi = x ^ 1
        for d in range(n):
            if T[d * L + xi] < 0:
                mark = len(trail)
                define(c, x, d)
                if process():
                    search()
                undo(mark)
        if n < max_index:
            mark = len(trail)
            state["n"] = n + 1
            define(c, x, n)
            if process():
                search()
            undo(mark)
            state["n"] = n

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * max_index * L + 200))
    finished = True
    try:
        search()
    except _Budget:
        finished = False
    finally:
        sys.setrecursionlimit(old)
    return results, state["nodes"], finished
