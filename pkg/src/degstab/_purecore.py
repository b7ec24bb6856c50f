"""Pure-Python search kernels.

These are the hot inner loops of the package: homomorphism backtracking,
brute-force map enumeration, exact coloring, partition edit counting and
odd-girth BFS. A compiled twin (``degstab._fastcore``) implements the same
five entry points with identical semantics and identical tie-breaking;
:mod:`degstab.backend` picks one at import time. Keep the two in lock-step:
the test suite compares their outputs bit for bit.

All functions take adjacency as a sequence of integer bitmasks, one per
vertex (bit ``u`` of ``adj[v]`` is set iff ``uv`` is an edge). They are pure
and place no upper bound on the order; the compiled twin handles orders up
to 64.
"""

from __future__ import annotations

from collections import deque
from itertools import product

__all__ = ["hom_search", "brute_hom", "color_search", "min_edits", "odd_girth"]


def hom_search(p_adj, t_adj):
    """Search for an edge-preserving map from pattern to target.

    Returns ``(mapping, nodes)``: ``mapping`` is a tuple over pattern
    vertices, or None if an exhaustive search proves there is no
    homomorphism; ``nodes`` counts attempted assignments.

    Backtracking with arc-consistency propagation after every assignment.
    Variable order: smallest live domain, lowest index on ties. Value
    order: ascending. Fully deterministic.
    """
    n_p = len(p_adj)
    n_t = len(t_adj)
    if n_p == 0:
        return (), 0
    if n_t == 0:
        return None, 0
    dom = [(1 << n_t) - 1] * n_p
    if not _propagate(dom, p_adj, t_adj, (1 << n_p) - 1):
        return None, 0
    nodes = [0]
    mapping = _assign(dom, p_adj, t_adj, 0, nodes)
    return mapping, nodes[0]


def _propagate(dom, p_adj, t_adj, dirty):
    # Worklist of pattern vertices whose domain changed; revising u against
    # v keeps only u-values with a neighbour inside dom[v].
    while dirty:
        v = (dirty & -dirty).bit_length() - 1
        dirty &= dirty - 1
        dv = dom[v]
        nbrs = p_adj[v]
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            du = dom[u]
            nd = 0
            rest = du
            while rest:
                bit = rest & -rest
                rest ^= bit
                if t_adj[bit.bit_length() - 1] & dv:
                    nd |= bit
            if nd != du:
                if not nd:
                    return False
                dom[u] = nd
                dirty |= 1 << u
    return True


def _assign(dom, p_adj, t_adj, assigned, nodes):
    n_p = len(dom)
    all_mask = (1 << n_p) - 1
    if assigned == all_mask:
        return tuple((d & -d).bit_length() - 1 for d in dom)
    best_v = -1
    best_size = 1 << 62
    rest = all_mask & ~assigned
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        size = dom[v].bit_count()
        if size < best_size:
            best_size = size
            best_v = v
    v = best_v
    vals = dom[v]
    while vals:
        bit = vals & -vals
        vals ^= bit
        nodes[0] += 1
        saved = dom[:]
        dom[v] = bit
        if _propagate(dom, p_adj, t_adj, 1 << v):
            result = _assign(dom, p_adj, t_adj, assigned | (1 << v), nodes)
            if result is not None:
                return result
        dom[:] = saved
    return None


def brute_hom(p_adj, t_adj):
    """Existence check by trying every one of the |T|^|P| maps.

    Deliberately dumb: this is the independent oracle for ``hom_search``
    and must not share search machinery with it.
    """
    n_p = len(p_adj)
    n_t = len(t_adj)
    if n_p == 0:
        return True
    if n_t == 0:
        return False
    edges = []
    for v in range(n_p):
        m = p_adj[v] >> (v + 1)
        while m:
            bit = m & -m
            m ^= bit
            edges.append((v, v + 1 + bit.bit_length() - 1))
    for phi in product(range(n_t), repeat=n_p):
        for v, u in edges:
            if not (t_adj[phi[v]] >> phi[u]) & 1:
                break
        else:
            return True
    return False


def color_search(adj, k):
    """Find a proper coloring with at most k colors, or None.

    Exact backtracking: next vertex is the uncolored one with the most
    distinct neighbour colors (ties: higher degree, then lower index), and
    at most one brand-new color is tried per vertex, which breaks color
    symmetry without losing completeness.
    """
    n = len(adj)
    if n == 0:
        return ()
    if k <= 0:
        return None
    degs = [a.bit_count() for a in adj]
    colors = [-1] * n
    sat = [0] * n
    return _color_rec(adj, degs, colors, sat, k, 0, 0)


def _color_rec(adj, degs, colors, sat, k, used, done):
    n = len(adj)
    if done == n:
        return tuple(colors)
    best = -1
    best_key = (-1, -1)
    for v in range(n):
        if colors[v] < 0:
            key = (sat[v].bit_count(), degs[v])
            if key > best_key:
                best_key = key
                best = v
    v = best
    limit = used + 1 if used < k else k
    avail = ~sat[v] & ((1 << limit) - 1)
    while avail:
        bit = avail & -avail
        avail ^= bit
        c = bit.bit_length() - 1
        colors[v] = c
        touched = 0
        m = adj[v]
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if colors[u] < 0 and not sat[u] & bit:
                sat[u] |= bit
                touched |= b
        res = _color_rec(adj, degs, colors, sat, k, max(used, c + 1), done + 1)
        if res is not None:
            return res
        colors[v] = -1
        while touched:
            b = touched & -touched
            touched ^= b
            sat[b.bit_length() - 1] &= ~bit
    return None


def min_edits(adj, k):
    """Fewest intra-part edges over all partitions into at most k parts.

    Branch and bound over restricted-growth label strings (vertex 0 always
    gets label 0, each vertex may open at most one new part), which
    enumerates partitions rather than labelings. Exact.
    """
    n = len(adj)
    if k <= 0:
        raise ValueError("k must be positive")
    if n == 0 or k >= n:
        return 0
    parts = [0] * k
    # Putting everything in one part is a valid partition, so the total
    # edge count is an achievable upper bound.
    best = [sum(a.bit_count() for a in adj) // 2]
    _edits_rec(adj, parts, k, 0, -1, 0, best)
    return best[0]


def _edits_rec(adj, parts, k, v, maxlab, cost, best):
    if v == len(adj):
        best[0] = cost
        return
    lim = maxlab + 1
    if lim > k - 1:
        lim = k - 1
    av = adj[v]
    bit = 1 << v
    for lab in range(lim + 1):
        nc = cost + (av & parts[lab]).bit_count()
        if nc < best[0]:
            parts[lab] |= bit
            _edits_rec(adj, parts, k, v + 1, maxlab if lab <= maxlab else lab, nc, best)
            parts[lab] &= ~bit


def odd_girth(adj):
    """Length of the shortest odd cycle, or 0 when there is none.

    BFS on the parity double cover from every start vertex: the shortest
    odd closed walk through any vertex is attained by an odd cycle, and
    every odd cycle is such a walk.
    """
    n = len(adj)
    best = 0
    for s in range(n):
        dist = [-1] * (2 * n)
        dist[2 * s] = 0
        q = deque([2 * s])
        while q:
            state = q.popleft()
            v, p = state >> 1, state & 1
            d = dist[state]
            m = adj[v]
            while m:
                b = m & -m
                m ^= b
                nxt = ((b.bit_length() - 1) << 1) | (p ^ 1)
                if dist[nxt] < 0:
                    dist[nxt] = d + 1
                    q.append(nxt)
        cand = dist[2 * s + 1]
        if cand > 0 and (best == 0 or cand < best):
            best = cand
    return best
