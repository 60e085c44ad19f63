# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


def closure(const int[:] table, int n, const int[:] cols, const unsigned char[:] seed):
    cdef int ncols = cols.shape[0]
    cdef unsigned char *member = <unsigned char *> malloc(n)
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef int head = 0, tail = 0, x, y, k, bit
    cdef long off
    if member == NULL or queue == NULL:
        free(member)
        free(queue)
        raise MemoryError()
    memset(member, 0, n)
    try:
        for k in range(seed.shape[0]):
            if seed[k]:
                for bit in range(8):
                    if (seed[k] >> bit) & 1:
                        x = k * 8 + bit
                        member[x] = 1
                        queue[tail] = x
                        tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for k in range(ncols):
                off = <long> cols[k] * n
                y = table[off + x]
                if not member[y]:
                    member[y] = 1
                    queue[tail] = y
                    tail += 1
        out = bytearray((n + 7) // 8)
        for k in range(tail):
            x = queue[k]
            out[x >> 3] |= 1 << (x & 7)
        return bytes(out)
    finally:
        free(member)
        free(queue)


class _Budget(Exception):
    pass


cdef class _Search:
    cdef int L, max_index, n
    cdef long nodes, max_nodes
    cdef int *T
    cdef int *trail
    cdef int trail_len
    cdef int *queue_c
    cdef int *queue_x
    cdef int queue_len
    # conjugate words grouped by first letter: flat storage with offsets
    cdef int *words
    cdef int *word_start
    cdef int *word_len
    cdef int *letter_first
    cdef int *letter_count
    cdef int *base_words
    cdef int *base_start
    cdef int *base_len
    cdef int nbase
    cdef list results

    def __cinit__(self):
        self.T = NULL
        self.trail = NULL
        self.queue_c = NULL
        self.queue_x = NULL
        self.words = NULL
        self.word_start = NULL
        self.word_len = NULL
        self.letter_first = NULL
        self.letter_count = NULL
        self.base_words = NULL
        self.base_start = NULL
        self.base_len = NULL

    def __dealloc__(self):
        free(self.T)
        free(self.trail)
        free(self.queue_c)
        free(self.queue_x)
        free(self.words)
        free(self.word_start)
        free(self.word_len)
        free(self.letter_first)
        free(self.letter_count)
        free(self.base_words)
        free(self.base_start)
        free(self.base_len)

    def setup(self, int L, int max_index, long max_nodes, dict conj, list base_words):
        cdef int size = max_index * L
        cdef int i, k, pos, total, nwords
        self.L = L
        self.max_index = max_index
        self.max_nodes = max_nodes
        self.n = 1
        self.nodes = 0
        self.results = []
        self.T = <int *> malloc(size * sizeof(int))
        self.trail = <int *> malloc(2 * size * sizeof(int) + 8)
        self.queue_c = <int *> malloc(size * sizeof(int) + 8)
        self.queue_x = <int *> malloc(size * sizeof(int) + 8)
        for i in range(size):
            self.T[i] = -1
        self.trail_len = 0
        self.queue_len = 0

        ordered = []
        self.letter_first = <int *> malloc(L * sizeof(int))
        self.letter_count = <int *> malloc(L * sizeof(int))
        for k in range(L):
            ws = conj.get(k, [])
            self.letter_first[k] = len(ordered)
            self.letter_count[k] = len(ws)
            ordered.extend(ws)
        nwords = len(ordered)
        total = sum(len(w) for w in ordered)
        self.words = <int *> malloc((total + 1) * sizeof(int))
        self.word_start = <int *> malloc((nwords + 1) * sizeof(int))
        self.word_len = <int *> malloc((nwords + 1) * sizeof(int))
        pos = 0
        for i, w in enumerate(ordered):
            self.word_start[i] = pos
            self.word_len[i] = len(w)
            for x in w:
                self.words[pos] = x
                pos += 1

        self.nbase = len(base_words)
        total = sum(len(w) for w in base_words)
        self.base_words = <int *> malloc((total + 1) * sizeof(int))
        self.base_start = <int *> malloc((self.nbase + 1) * sizeof(int))
        self.base_len = <int *> malloc((self.nbase + 1) * sizeof(int))
        pos = 0
        for i, w in enumerate(base_words):
            self.base_start[i] = pos
            self.base_len[i] = len(w)
            for x in w:
                self.base_words[pos] = x
                pos += 1

    cdef inline void define(self, int c, int x, int d):
        cdef int L = self.L
        self.T[c * L + x] = d
        self.T[d * L + (x ^ 1)] = c
        self.trail[self.trail_len] = c * L + x
        self.trail[self.trail_len + 1] = d * L + (x ^ 1)
        self.trail_len += 2
        self.queue_c[self.queue_len] = c
        self.queue_x[self.queue_len] = x
        self.queue_len += 1

    cdef inline void undo(self, int mark):
        while self.trail_len > mark:
            self.trail_len -= 1
            self.T[self.trail[self.trail_len]] = -1

    cdef inline bint scan(self, int wi, int c):
        cdef int *w = self.words + self.word_start[wi]
        cdef int lw = self.word_len[wi]
        cdef int L = self.L
        cdef int f = c, b = c, i = 0, j, nxt
        while i < lw:
            nxt = self.T[f * L + w[i]]
            if nxt < 0:
                break
            f = nxt
            i += 1
        if i == lw:
            return f == c
        j = lw - 1
        while j >= i:
            nxt = self.T[b * L + (w[j] ^ 1)]
            if nxt < 0:
                break
            b = nxt
            j -= 1
        if j < i:
            return f == b
        if j == i:
            self.define(f, w[i], b)
        return True

    cdef bint process(self):
        cdef int c, x, k, first
        while self.queue_len > 0:
            self.queue_len -= 1
            c = self.queue_c[self.queue_len]
            x = self.queue_x[self.queue_len]
            first = self.letter_first[x]
            for k in range(first, first + self.letter_count[x]):
                if not self.scan(k, c):
                    self.queue_len = 0
                    return False
        return True

    cdef bint complete_ok(self, int n):
        cdef int k, c, f, t
        cdef int *w
        for k in range(self.nbase):
            w = self.base_words + self.base_start[k]
            for c in range(n):
                f = c
                for t in range(self.base_len[k]):
                    f = self.T[f * self.L + w[t]]
                if f != c:
                    return False
        return True

    cdef int search(self) except -1:
        cdef int n = self.n, L = self.L
        cdef int pos = -1, p, c, x, xi, d, mark
        self.nodes += 1
        if self.max_nodes and self.nodes > self.max_nodes:
            raise _Budget()
        for p in range(n * L):
            if self.T[p] < 0:
                pos = p
                break
        if pos < 0:
            if self.complete_ok(n):
                self.results.append(tuple([self.T[p] for p in range(n * L)]))
            return 0
        c = pos // L
        x = pos % L
        xi = x ^ 1
        for d in range(n):
            if self.T[d * L + xi] < 0:
                mark = self.trail_len
                self.define(c, x, d)
                if self.process():
                    self.search()
                self.undo(mark)
        if n < self.max_index:
            mark = self.trail_len
            self.n = n + 1
            self.define(c, x, n)
            if self.process():
                self.search()
            self.undo(mark)
            self.n = n
        return 0

    def run(self):
        finished = True
        try:
            self.search()
        except _Budget:
            finished = False
        return self.results, self.nodes, finished


def low_index(int ngens, relators, int max_index, long max_nodes=0):
    from ._pykernels import _conjugates

    cdef int L = 2 * ngens
    if L == 0:
        return [()], 1, True
    conj = _conjugates(relators)
    base_words = [list(r) for r in relators if r]
    s = _Search()
    s.setup(L, max_index, max_nodes, conj, base_words)
    return s.run()
