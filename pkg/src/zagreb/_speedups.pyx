# cython: language_level=3
"""Compiled twin of ``zagreb._kernels_py``.

Same interface, same results, C speed: the free-tree successor loop and the
Prüfer census are the only parts of the package where runtime matters.
Canonical forms are packed into 64-bit integers ('(' = 1, MSB first), which
caps the census at n = 31; the census itself is capped at n = 12 anyway.
"""

from cpython cimport array

import array

BACKEND = "c"


# ---------------------------------------------------------------------------
# free-tree generation over level sequences


cdef int _next_rooted_c(int* L, int n, int p) noexcept:
    """Advance L to the next rooted level sequence; 0 when exhausted.

    p < 0 means "find the working index"; otherwise use the given one.
    """
    cdef int q, i
    if p < 0:
        p = n - 1
        while L[p] == 1:
            p -= 1
    if p == 0:
        return 0
    q = p - 1
    while L[q] != L[p] - 1:
        q -= 1
    for i in range(p, n):
        L[i] = L[i - p + q]
    return 1


cdef int _second_one(int* L, int n) noexcept:
    cdef int i
    for i in range(2, n):
        if L[i] == 1:
            return i
    return n


cdef int _left_height(int* L, int m) noexcept:
    cdef int i, h = 0
    for i in range(1, m):
        if L[i] - 1 > h:
            h = L[i] - 1
    return h


cdef int _valid_free(int* L, int n, int m) noexcept:
    """Is L the canonical free-tree representative?  (WROM validity check.)"""
    cdef int i, a, b
    cdef int lh = _left_height(L, m)
    cdef int rh = 0
    cdef int la = m - 1
    cdef int lb = n - m + 1
    for i in range(m, n):
        if L[i] > rh:
            rh = L[i]
    if rh < lh:
        return 0
    if rh > lh:
        return 1
    if la > lb:
        return 0
    if la == lb:
        # left subtree must not come after the rest lexicographically
        for i in range(la):
            a = L[1 + i] - 1
            b = 0 if i == 0 else L[m + i - 1]
            if a != b:
                return 1 if a < b else 0
    return 1


cdef void _advance_free(int* L, int n) noexcept:
    """If L is not a free-tree representative, jump to the next one."""
    cdef int m, p, saved, slen, i
    m = _second_one(L, n)
    if _valid_free(L, n, m):
        return
    p = m - 1
    saved = L[p]
    _next_rooted_c(L, n, p)
    if saved > 2:
        m = _second_one(L, n)
        slen = _left_height(L, m) + 1
        for i in range(slen):
            L[n - slen + i] = i + 1


def free_tree_parents(int n):
    """Yield one parent tuple per isomorphism class of trees on n vertices."""
    if not 1 <= n <= 62:
        raise ValueError(f"unsupported order {n}")
    if n == 1:
        yield (-1,)
        return
    cdef array.array lbuf = array.array("i", bytes(4 * n))
    cdef array.array pbuf = array.array("i", bytes(4 * n))
    cdef array.array sbuf = array.array("i", bytes(4 * n))
    cdef int* L = lbuf.data.as_ints
    cdef int* P = pbuf.data.as_ints
    cdef int* S = sbuf.data.as_ints
    cdef int i, top, running
    for i in range(n // 2 + 1):
        L[i] = i
    for i in range(1, (n + 1) // 2):
        L[n // 2 + i] = i
    running = 1
    while running:
        _advance_free(L, n)
        top = -1
        for i in range(n):
            while top >= 0 and L[S[top]] >= L[i]:
                top -= 1
            P[i] = S[top] if top >= 0 else -1
            top += 1
            S[top] = i
        yield tuple([P[i] for i in range(n)])
        running = _next_rooted_c(L, n, -1)


# ---------------------------------------------------------------------------
# Prüfer census

DEF MAXN = 16


cdef int _code_lt(unsigned long long a, int la,
                  unsigned long long b, int lb) noexcept:
    """Order on packed encodings matching bytes order of '('/')' strings."""
    cdef int i, ba, bb
    cdef int l = la if la < lb else lb
    for i in range(l):
        ba = (a >> (la - 1 - i)) & 1
        bb = (b >> (lb - 1 - i)) & 1
        if ba != bb:
            return 1 if ba == 1 else 0
    return 1 if la < lb else 0


cdef unsigned long long _root_code(int root, int n, int* off, int* nbr,
                                   int* par, int* order,
                                   unsigned long long* code, int* clen,
                                   unsigned long long* ccode, int* cclen) noexcept:
    cdef int head = 0, tail = 1, v, w, i, j, k, nc, tlen
    cdef unsigned long long acc, tcode
    cdef int acclen
    order[0] = root
    par[root] = -1
    while head < tail:
        v = order[head]
        head += 1
        for i in range(off[v], off[v + 1]):
            w = nbr[i]
            if w != par[v]:
                par[w] = v
                order[tail] = w
                tail += 1
    for k in range(n - 1, -1, -1):
        v = order[k]
        nc = 0
        for i in range(off[v], off[v + 1]):
            w = nbr[i]
            if w != par[v]:
                ccode[nc] = code[w]
                cclen[nc] = clen[w]
                nc += 1
        for i in range(1, nc):
            tcode = ccode[i]
            tlen = cclen[i]
            j = i - 1
            while j >= 0 and _code_lt(tcode, tlen, ccode[j], cclen[j]):
                ccode[j + 1] = ccode[j]
                cclen[j + 1] = cclen[j]
                j -= 1
            ccode[j + 1] = tcode
            cclen[j + 1] = tlen
        acc = 0
        acclen = 0
        for i in range(nc):
            acc = (acc << cclen[i]) | ccode[i]
            acclen += cclen[i]
        code[v] = ((<unsigned long long>1) << (acclen + 1)) | (acc << 1)
        clen[v] = acclen + 2
    return code[root]


def prufer_canonical_codes(int n):
    """Canonical codes of all n^(n-2) labelled trees on n vertices."""
    if not 1 <= n <= 12:
        raise ValueError(f"Prüfer census supports 1 <= n <= 12, got {n}")
    out = set()
    if n == 1:
        out.add(0b10)
        return out
    if n == 2:
        out.add(0b1100)
        return out

    cdef int m = n - 2
    cdef int seq[MAXN]
    cdef int deg[MAXN]
    cdef int eu[MAXN]
    cdef int ev[MAXN]
    cdef int off[MAXN + 1]
    cdef int pos[MAXN]
    cdef int nbr[2 * MAXN]
    cdef int removed[MAXN]
    cdef int cur[MAXN]
    cdef int nxt[MAXN]
    cdef int par[MAXN]
    cdef int order[MAXN]
    cdef int clen[MAXN]
    cdef int cclen[MAXN]
    cdef unsigned long long code[MAXN]
    cdef unsigned long long ccode[MAXN]
    cdef int i, j, s, ptr, leaf, ecnt, v, w
    cdef int remaining, ncur, nnxt, c1, c2
    cdef unsigned long long code1, code2

    for i in range(m):
        seq[i] = 0
    while True:
        # decode the Prüfer sequence
        for i in range(n):
            deg[i] = 1
        for i in range(m):
            deg[seq[i]] += 1
        ptr = 0
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        ecnt = 0
        for i in range(m):
            s = seq[i]
            eu[ecnt] = leaf
            ev[ecnt] = s
            ecnt += 1
            deg[s] -= 1
            if deg[s] == 1 and s < ptr:
                leaf = s
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        eu[ecnt] = leaf
        ev[ecnt] = n - 1
        ecnt += 1

        # CSR adjacency
        for i in range(n):
            deg[i] = 0
        for i in range(ecnt):
            deg[eu[i]] += 1
            deg[ev[i]] += 1
        off[0] = 0
        for i in range(n):
            off[i + 1] = off[i] + deg[i]
            pos[i] = off[i]
        for i in range(ecnt):
            nbr[pos[eu[i]]] = ev[i]
            pos[eu[i]] += 1
            nbr[pos[ev[i]]] = eu[i]
            pos[ev[i]] += 1

        # centres by leaf peeling
        remaining = n
        ncur = 0
        for i in range(n):
            removed[i] = 0
            if deg[i] == 1:
                cur[ncur] = i
                ncur += 1
        while remaining > 2:
            nnxt = 0
            for j in range(ncur):
                v = cur[j]
                removed[v] = 1
                remaining -= 1
                for i in range(off[v], off[v + 1]):
                    w = nbr[i]
                    if not removed[w]:
                        deg[w] -= 1
                        if deg[w] == 1:
                            nxt[nnxt] = w
                            nnxt += 1
            for j in range(nnxt):
                cur[j] = nxt[j]
            ncur = nnxt
        c1 = -1
        c2 = -1
        for i in range(n):
            if not removed[i]:
                if c1 < 0:
                    c1 = i
                else:
                    c2 = i

        code1 = _root_code(c1, n, off, nbr, par, order, code, clen, ccode, cclen)
        if c2 >= 0:
            code2 = _root_code(c2, n, off, nbr, par, order, code, clen, ccode, cclen)
            # bytes-lexicographic minimum = numeric maximum at equal length
            if _code_lt(code2, 2 * n, code1, 2 * n):
                code1 = code2
        out.add(code1)

        # odometer
        i = m - 1
        while i >= 0:
            seq[i] += 1
            if seq[i] < n:
                break
            seq[i] = 0
            i -= 1
        if i < 0:
            break
    return out
