# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels; the semantic twin of degstab._purecore.

Same five entry points, same algorithms, same tie-breaking, limited to
graphs of order at most 64 (degstab.backend enforces the limit and falls
back to the pure module beyond it). Any behavioural change here must be
mirrored in the pure module: the test suite compares the two backends
output for output.
"""

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int ds_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int ds_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int ds_popcount(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    static inline int ds_ctz(unsigned long long x) {
        int c = 0;
        while (!(x & 1ULL)) { x >>= 1; ++c; }
        return c;
    }
    #endif
    """
    int ds_popcount(u64 x) noexcept nogil
    int ds_ctz(u64 x) noexcept nogil


cdef inline u64 _mask(int n) noexcept nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFFULL
    return ((<u64>1) << n) - 1


cdef struct HomCtx:
    u64 p_adj[64]
    u64 t_adj[64]
    u64 dom[64]
    int n_p
    int n_t
    long long nodes


cdef bint _hs_propagate(HomCtx* ctx, u64 dirty) noexcept nogil:
    cdef u64 nbrs, du, nd, rest, bit, dv
    cdef int v, u
    while dirty:
        v = ds_ctz(dirty)
        dirty &= dirty - 1
        dv = ctx.dom[v]
        nbrs = ctx.p_adj[v]
        while nbrs:
            u = ds_ctz(nbrs)
            nbrs &= nbrs - 1
            du = ctx.dom[u]
            nd = 0
            rest = du
            while rest:
                bit = rest & (~rest + 1)
                rest ^= bit
                if ctx.t_adj[ds_ctz(bit)] & dv:
                    nd |= bit
            if nd != du:
                if nd == 0:
                    return 0
                ctx.dom[u] = nd
                dirty |= (<u64>1) << u
    return 1


cdef bint _hs_assign(HomCtx* ctx, u64 assigned, u64 all_mask) noexcept nogil:
    cdef int v, best_v, best_size, size, i
    cdef u64 rest, vals, bit
    cdef u64 saved[64]
    if assigned == all_mask:
        return 1
    best_v = -1
    best_size = 1 << 30
    rest = all_mask & ~assigned
    while rest:
        v = ds_ctz(rest)
        rest &= rest - 1
        size = ds_popcount(ctx.dom[v])
        if size < best_size:
            best_size = size
            best_v = v
    v = best_v
    vals = ctx.dom[v]
    while vals:
        bit = vals & (~vals + 1)
        vals ^= bit
        ctx.nodes += 1
        for i in range(ctx.n_p):
            saved[i] = ctx.dom[i]
        ctx.dom[v] = bit
        if _hs_propagate(ctx, (<u64>1) << v):
            if _hs_assign(ctx, assigned | ((<u64>1) << v), all_mask):
                return 1
        for i in range(ctx.n_p):
            ctx.dom[i] = saved[i]
    return 0


def hom_search(p_adj, t_adj):
    """Same contract as the pure kernel: (mapping or None, nodes)."""
    cdef HomCtx ctx
    cdef int n_p = len(p_adj)
    cdef int n_t = len(t_adj)
    cdef int i
    if n_p == 0:
        return (), 0
    if n_t == 0:
        return None, 0
    for i in range(n_p):
        ctx.p_adj[i] = <u64>p_adj[i]
    for i in range(n_t):
        ctx.t_adj[i] = <u64>t_adj[i]
    ctx.n_p = n_p
    ctx.n_t = n_t
    ctx.nodes = 0
    cdef u64 full = _mask(n_t)
    cdef u64 all_mask = _mask(n_p)
    for i in range(n_p):
        ctx.dom[i] = full
    if not _hs_propagate(&ctx, all_mask):
        return None, 0
    if _hs_assign(&ctx, 0, all_mask):
        return tuple(ds_ctz(ctx.dom[i]) for i in range(n_p)), ctx.nodes
    return None, ctx.nodes


cdef bint _brute_loop(u64* t, int* eu, int* ev, int ne,
                      int* phi, int n_p, int n_t) noexcept nogil:
    cdef bint ok
    cdef int e, i
    while True:
        ok = 1
        for e in range(ne):
            if not ((t[phi[eu[e]]] >> phi[ev[e]]) & 1):
                ok = 0
                break
        if ok:
            return 1
        i = n_p - 1
        while i >= 0:
            phi[i] += 1
            if phi[i] < n_t:
                break
            phi[i] = 0
            i -= 1
        if i < 0:
            return 0


def brute_hom(p_adj, t_adj):
    """Enumerate every map; the oracle twin of the pure version."""
    cdef int n_p = len(p_adj)
    cdef int n_t = len(t_adj)
    if n_p == 0:
        return True
    if n_t == 0:
        return False
    cdef u64 t[64]
    cdef int eu[2016]
    cdef int ev[2016]
    cdef int phi[64]
    cdef int ne = 0
    cdef int i, v
    cdef u64 m, bit
    for i in range(n_t):
        t[i] = <u64>t_adj[i]
    for v in range(n_p):
        if v + 1 >= 64:
            m = 0
        else:
            m = (<u64>p_adj[v]) >> (v + 1)
        while m:
            bit = m & (~m + 1)
            m ^= bit
            eu[ne] = v
            ev[ne] = v + 1 + ds_ctz(bit)
            ne += 1
    for i in range(n_p):
        phi[i] = 0
    cdef bint found
    with nogil:
        found = _brute_loop(t, eu, ev, ne, phi, n_p, n_t)
    return bool(found)


cdef bint _color_rec(u64* adj, int* degs, int* colors, u64* sat,
                     int n, int k, int used, int done) noexcept nogil:
    cdef int v, best, c, u, limit, best_sat, best_deg, s, nu
    cdef u64 avail, bit, m, b, touched
    if done == n:
        return 1
    best = -1
    best_sat = -1
    best_deg = -1
    for v in range(n):
        if colors[v] < 0:
            s = ds_popcount(sat[v])
            if s > best_sat or (s == best_sat and degs[v] > best_deg):
                best_sat = s
                best_deg = degs[v]
                best = v
    v = best
    limit = used + 1 if used < k else k
    avail = (~sat[v]) & _mask(limit)
    while avail:
        bit = avail & (~avail + 1)
        avail ^= bit
        c = ds_ctz(bit)
        colors[v] = c
        touched = 0
        m = adj[v]
        while m:
            b = m & (~m + 1)
            m ^= b
            u = ds_ctz(b)
            if colors[u] < 0 and not (sat[u] & bit):
                sat[u] |= bit
                touched |= b
        nu = used if used > c + 1 else c + 1
        if _color_rec(adj, degs, colors, sat, n, k, nu, done + 1):
            return 1
        colors[v] = -1
        while touched:
            b = touched & (~touched + 1)
            touched ^= b
            sat[ds_ctz(b)] &= ~bit
    return 0


def color_search(adj, k):
    """Proper coloring with at most k colors, or None; twin of the pure kernel."""
    cdef int n = len(adj)
    cdef int kk = k
    if n == 0:
        return ()
    if kk <= 0:
        return None
    cdef u64 a[64]
    cdef int degs[64]
    cdef int colors[64]
    cdef u64 sat[64]
    cdef int i
    for i in range(n):
        a[i] = <u64>adj[i]
        degs[i] = ds_popcount(a[i])
        colors[i] = -1
        sat[i] = 0
    if _color_rec(a, degs, colors, sat, n, kk, 0, 0):
        return tuple(colors[i] for i in range(n))
    return None


cdef void _edits_rec(u64* adj, u64* parts, int n, int k, int v, int maxlab,
                     long long cost, long long* best) noexcept nogil:
    cdef int lab, lim, nm
    cdef long long nc
    cdef u64 bit
    if v == n:
        best[0] = cost
        return
    lim = maxlab + 1
    if lim > k - 1:
        lim = k - 1
    bit = (<u64>1) << v
    for lab in range(lim + 1):
        nc = cost + ds_popcount(adj[v] & parts[lab])
        if nc < best[0]:
            parts[lab] |= bit
            nm = maxlab if lab <= maxlab else lab
            _edits_rec(adj, parts, n, k, v + 1, nm, nc, best)
            parts[lab] &= ~bit


def min_edits(adj, k):
    """Fewest intra-part edges over partitions into at most k parts."""
    cdef int n = len(adj)
    cdef int kk = k
    if kk <= 0:
        raise ValueError("k must be positive")
    if n == 0 or kk >= n:
        return 0
    cdef u64 a[64]
    cdef u64 parts[64]
    cdef int i
    cdef long long total = 0
    for i in range(n):
        a[i] = <u64>adj[i]
        total += ds_popcount(a[i])
    total //= 2
    for i in range(kk):
        parts[i] = 0
    cdef long long best = total
    with nogil:
        _edits_rec(a, parts, n, kk, 0, -1, 0, &best)
    return best


def odd_girth(adj):
    """Shortest odd cycle length, 0 if bipartite; twin of the pure kernel."""
    cdef int n = len(adj)
    cdef u64 a[64]
    cdef int dist[128]
    cdef int queue[128]
    cdef int i, s, head, tail, state, v, p, d, nxt, best, cand
    cdef u64 m, b
    for i in range(n):
        a[i] = <u64>adj[i]
    best = 0
    with nogil:
        for s in range(n):
            for i in range(2 * n):
                dist[i] = -1
            dist[2 * s] = 0
            queue[0] = 2 * s
            head = 0
            tail = 1
            while head < tail:
                state = queue[head]
                head += 1
                v = state >> 1
                p = state & 1
                d = dist[state]
                m = a[v]
                while m:
                    b = m & (~m + 1)
                    m ^= b
                    nxt = (ds_ctz(b) << 1) | (p ^ 1)
                    if dist[nxt] < 0:
                        dist[nxt] = d + 1
                        queue[tail] = nxt
                        tail += 1
            cand = dist[2 * s + 1]
            if cand > 0 and (best == 0 or cand < best):
                best = cand
    return best
