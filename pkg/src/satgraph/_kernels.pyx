# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels (n <= 64, one machine word per neighbourhood).

Line-for-line twin of ``_kernels_py``: same traversal orders, tie-breaks and
counters.  Any change here must be mirrored there.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memset

from .errors import BudgetExceeded

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil

EDGE = 0
VERTEX = 1
SATURATED = 0
CONTAINS_MEMBER = 1
MISSES_EDGE = 2

cdef enum:
    WORD = 64


cdef inline uint64_t bit(int v) noexcept nogil:
    return (<uint64_t>1) << v


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int lowest(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline int highest(uint64_t x) noexcept nogil:
    return 63 - __builtin_clzll(x)


cdef void load(object seq, uint64_t* out):
    cdef int i = 0
    memset(out, 0, WORD * sizeof(uint64_t))
    for x in seq:
        out[i] = <uint64_t>x
        i += 1


cdef uint64_t component_of_c(const uint64_t* adj, uint64_t mask, int v) noexcept nogil:
    cdef uint64_t seen = bit(v), frontier = seen, nxt, f
    cdef int u
    while frontier:
        nxt = 0
        f = frontier
        while f:
            u = lowest(f)
            f &= f - 1
            nxt |= adj[u]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef uint64_t k_core_c(const uint64_t* adj, uint64_t mask, int k) noexcept nogil:
    cdef bint changed = True
    cdef uint64_t rest
    cdef int v
    while changed:
        changed = False
        rest = mask
        while rest:
            v = lowest(rest)
            rest &= rest - 1
            if popc(adj[v] & mask) < k:
                mask &= ~bit(v)
                changed = True
    return mask


# -- edge cuts -------------------------------------------------------------


cdef int edge_flow(const uint64_t* adj, uint64_t mask, int s, uint64_t sinks, int limit,
                   uint64_t* reach) noexcept nogil:
    cdef uint64_t out[WORD]
    cdef int parent[WORD]
    cdef int queue[WORD]
    cdef int flow = 0, qh, qt, u, v, hit
    cdef uint64_t seen, nb
    memset(out, 0, WORD * sizeof(uint64_t))
    while True:
        seen = bit(s)
        queue[0] = s
        qh = 0
        qt = 1
        hit = -1
        while qh < qt and hit < 0:
            u = queue[qh]
            qh += 1
            nb = adj[u] & mask & ~out[u] & ~seen
            while nb:
                v = lowest(nb)
                nb &= nb - 1
                parent[v] = u
                seen |= bit(v)
                if (sinks >> v) & 1:
                    hit = v
                    break
                queue[qt] = v
                qt += 1
        if hit < 0:
            reach[0] = seen
            return flow
        flow += 1
        v = hit
        while v != s:
            u = parent[v]
            if (out[v] >> u) & 1:
                out[v] &= ~bit(u)
            else:
                out[u] |= bit(v)
            v = u
        if flow >= limit:
            reach[0] = 0
            return flow


cdef int edge_conn_capped_c(const uint64_t* adj, uint64_t mask, int cap) noexcept nogil:
    cdef int s = lowest(mask), t, f, best = cap
    cdef uint64_t rest = mask & ~bit(s), reach
    while rest:
        t = lowest(rest)
        rest &= rest - 1
        f = edge_flow(adj, mask, s, bit(t), best, &reach)
        if f < best:
            best = f
            if best == 0:
                break
    return best


cdef int edge_min_cut_c(const uint64_t* adj, uint64_t mask, uint64_t* side) noexcept nogil:
    cdef int lam = edge_conn_capped_c(adj, mask, popc(mask)), h, f
    cdef uint64_t rest = mask, above = mask, reach
    side[0] = 0
    while rest:
        h = lowest(rest)
        rest &= rest - 1
        above &= ~bit(h)
        f = edge_flow(adj, mask, h, above, lam + 1, &reach)
        if f == lam:
            side[0] = reach
            return lam
    return -1


cdef uint64_t edge_cut_below(const uint64_t* adj, uint64_t comp, int k) noexcept nogil:
    cdef int s = lowest(comp), t, f
    cdef uint64_t rest = comp & ~bit(s), reach
    while rest:
        t = lowest(rest)
        rest &= rest - 1
        f = edge_flow(adj, comp, s, bit(t), k, &reach)
        if f < k:
            return reach
    return 0


cdef uint64_t ecs_piece_c(const uint64_t* adj, uint64_t mask, int k) noexcept nogil:
    cdef uint64_t core = k_core_c(adj, mask, k), comp, side, found
    while core:
        comp = component_of_c(adj, core, lowest(core))
        core &= ~comp
        side = edge_cut_below(adj, comp, k)
        if not side:
            return comp
        found = ecs_piece_c(adj, side, k)
        if not found:
            found = ecs_piece_c(adj, comp & ~side, k)
        if found:
            return found
    return 0


cdef uint64_t ecs_piece_with_c(const uint64_t* adj, uint64_t mask, int k,
                               int x, int y) noexcept nogil:
    cdef uint64_t core, comp, side
    while True:
        core = k_core_c(adj, mask, k)
        if not ((core >> x) & 1 and (core >> y) & 1):
            return 0
        comp = component_of_c(adj, core, x)
        if not (comp >> y) & 1:
            return 0
        side = edge_cut_below(adj, comp, k)
        if not side:
            return comp
        if ((side >> x) & 1) != ((side >> y) & 1):
            return 0
        mask = side if (side >> x) & 1 else comp & ~side


# -- vertex cuts -----------------------------------------------------------


cdef int vertex_flow(const uint64_t* adj, uint64_t mask, int s, int t, int limit,
                     uint64_t* sep) noexcept nogil:
    cdef uint64_t ef[WORD]
    cdef uint64_t efr[WORD]
    cdef int parent[2 * WORD]
    cdef int queue[2 * WORD]
    cdef uint64_t through = 0, st = bit(s) | bit(t), seen_in, seen_out, nb
    cdef int flow = 0, qh, qt, node, v, w, u, prev, a, b
    cdef bint found
    memset(ef, 0, WORD * sizeof(uint64_t))
    memset(efr, 0, WORD * sizeof(uint64_t))
    while True:
        seen_in = 0
        seen_out = bit(s)
        queue[0] = 2 * s + 1
        qh = 0
        qt = 1
        found = False
        while qh < qt and not found:
            node = queue[qh]
            qh += 1
            v = node >> 1
            if node & 1:
                nb = adj[v] & mask & ~seen_in
                while nb:
                    w = lowest(nb)
                    nb &= nb - 1
                    seen_in |= bit(w)
                    parent[2 * w] = node
                    if w == t:
                        found = True
                        break
                    queue[qt] = 2 * w
                    qt += 1
                if (not found and (through >> v) & 1 and not (st >> v) & 1
                        and not (seen_in >> v) & 1):
                    seen_in |= bit(v)
                    parent[2 * v] = node
                    queue[qt] = 2 * v
                    qt += 1
            else:
                if (not (through >> v) & 1 or (st >> v) & 1) and not (seen_out >> v) & 1:
                    seen_out |= bit(v)
                    parent[2 * v + 1] = node
                    queue[qt] = 2 * v + 1
                    qt += 1
                nb = efr[v] & ~seen_out
                while nb:
                    u = lowest(nb)
                    nb &= nb - 1
                    seen_out |= bit(u)
                    parent[2 * u + 1] = node
                    queue[qt] = 2 * u + 1
                    qt += 1
        if not found:
            sep[0] = seen_in & ~seen_out & mask
            return flow
        flow += 1
        node = 2 * t
        while node != 2 * s + 1:
            prev = parent[node]
            a = prev >> 1
            b = node >> 1
            if (prev & 1) and not (node & 1):
                if a == b:
                    through &= ~bit(a)
                else:
                    ef[a] |= bit(b)
                    efr[b] |= bit(a)
            elif not (prev & 1) and (node & 1):
                if a == b:
                    through |= bit(a)
                else:
                    ef[b] &= ~bit(a)
                    efr[a] &= ~bit(b)
            node = prev
        if flow >= limit:
            sep[0] = 0
            return flow


cdef bint is_complete_c(const uint64_t* adj, uint64_t mask) noexcept nogil:
    cdef uint64_t rest = mask
    cdef int v
    while rest:
        v = lowest(rest)
        rest &= rest - 1
        if ((adj[v] | bit(v)) & mask) != mask:
            return False
    return True


cdef int vertex_min_cut_c(const uint64_t* adj, uint64_t mask, uint64_t* cut) noexcept nogil:
    cdef int size = popc(mask), best, s, t, f
    cdef uint64_t rs, rt, sep
    if is_complete_c(adj, mask):
        cut[0] = mask & ~bit(highest(mask))
        return size - 1
    best = size - 1
    cut[0] = 0
    rs = mask
    while rs:
        s = lowest(rs)
        rs &= rs - 1
        rt = mask & ~adj[s] & ~((bit(s) << 1) - 1)
        while rt:
            t = lowest(rt)
            rt &= rt - 1
            f = vertex_flow(adj, mask, s, t, best, &sep)
            if f < best:
                best = f
                cut[0] = sep
                if best == 0:
                    return 0
    return best


cdef bint vertex_cut_below(const uint64_t* adj, uint64_t comp, int k,
                           uint64_t* sep) noexcept nogil:
    cdef uint64_t rs, rt
    cdef int s, t, f
    if is_complete_c(adj, comp):
        return False
    rs = comp
    while rs:
        s = lowest(rs)
        rs &= rs - 1
        rt = comp & ~adj[s] & ~((bit(s) << 1) - 1)
        while rt:
            t = lowest(rt)
            rt &= rt - 1
            f = vertex_flow(adj, comp, s, t, k, sep)
            if f < k:
                return True
    return False


cdef class _CsSearch:
    cdef uint64_t adj[WORD]
    cdef int k
    cdef uint64_t need
    cdef long long left
    cdef set memo

    cdef uint64_t piece(self, uint64_t mask) except? 0xFFFFFFFFFFFFFFFF:
        cdef uint64_t core, comp, sep, d, rest, sub, found
        if mask in self.memo:
            return 0
        self.memo.add(mask)
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("k-connected subgraph search exceeded its node budget")
        core = k_core_c(self.adj, mask, self.k)
        while core:
            comp = component_of_c(self.adj, core, lowest(core))
            core &= ~comp
            if (comp & self.need) != self.need or popc(comp) < self.k + 1:
                continue
            if not vertex_cut_below(self.adj, comp, self.k, &sep):
                return comp
            rest = comp & ~sep
            while rest:
                d = component_of_c(self.adj, rest, lowest(rest))
                rest &= ~d
                sub = d | sep
                if (sub & self.need) != self.need:
                    continue
                found = self.piece(sub)
                if found:
                    return found
        return 0


cdef uint64_t cs_piece_c(const uint64_t* adj, uint64_t mask, int k, int x, int y,
                         long long budget) except? 0xFFFFFFFFFFFFFFFF:
    cdef _CsSearch cs = _CsSearch()
    cdef int i
    for i in range(WORD):
        cs.adj[i] = adj[i]
    cs.k = k
    cs.need = 0 if x < 0 else (bit(x) | bit(y))
    cs.left = budget
    cs.memo = set()
    return cs.piece(mask)


# -- saturation ------------------------------------------------------------


cdef int verdict_c(uint64_t* adj, int n, int k, int family, long long budget,
                   uint64_t* a, int* b) except -1:
    cdef uint64_t full = bit(n) - 1 if n < 64 else ~(<uint64_t>0)
    cdef uint64_t w, ok, rv
    cdef int u, v
    a[0] = 0
    b[0] = 0
    if family == 0:
        w = ecs_piece_c(adj, full, k)
    else:
        w = cs_piece_c(adj, full, k, -1, -1, budget)
    if w:
        a[0] = w
        return 1
    for u in range(n):
        rv = full & ~adj[u] & ~((bit(u) << 1) - 1)
        while rv:
            v = lowest(rv)
            rv &= rv - 1
            adj[u] |= bit(v)
            adj[v] |= bit(u)
            try:
                if family == 0:
                    ok = ecs_piece_with_c(adj, full, k, u, v)
                else:
                    ok = cs_piece_c(adj, full, k, u, v, budget)
            finally:
                adj[u] &= ~bit(v)
                adj[v] &= ~bit(u)
            if not ok:
                a[0] = u
                b[0] = v
                return 2
    return 0


cdef class _LevelSearch:
    cdef uint64_t adj[WORD]
    cdef int deg[WORD]
    cdef int n, k, family, m
    cdef uint64_t full
    cdef long long max_nodes, examined, nodes
    cdef object row0
    cdef list found

    cdef bint member(self) except -1:
        if self.family == 0:
            return ecs_piece_c(self.adj, self.full, self.k) != 0
        return cs_piece_c(self.adj, self.full, self.k, -1, -1, self.max_nodes) != 0

    cdef int leaf(self) except -1:
        cdef uint64_t a, bits
        cdef int b, code, i, j, p
        self.examined += 1
        if self.n > self.k >= 2:
            if component_of_c(self.adj, self.full, 0) != self.full:
                return 0
            if self.family == 0 and edge_conn_capped_c(self.adj, self.full, self.k) != self.k - 1:
                return 0
        code = verdict_c(self.adj, self.n, self.k, self.family, self.max_nodes, &a, &b)
        if code == 0:
            bits = 0
            p = 0
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    if (self.adj[i] >> j) & 1:
                        bits |= bit(p)
                    p += 1
            self.found.append(bits)
        return 0

    cdef int row(self, int i, int count, int prevdeg) except -1:
        cdef int n = self.n, k = self.k, m = self.m
        cdef int later, rem_after, base, c, d, j, slack
        cdef uint64_t s, nb, rest
        cdef bint ok
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded("search exceeded its node budget")
        if i == n - 1:
            d = self.deg[i]
            if count == m and k - 1 <= d <= prevdeg:
                self.leaf()
            return 0
        later = n - 1 - i
        rem_after = later * (later - 1) // 2
        base = self.deg[i]
        for s in range(bit(later)):
            if i == 0 and self.row0 is not None and s not in self.row0:
                continue
            c = popc(s)
            d = base + c
            if d < k - 1 or d > prevdeg:
                continue
            if count + c > m or count + c + rem_after < m:
                continue
            nb = s << (i + 1)
            self.adj[i] |= nb
            rest = nb
            while rest:
                j = lowest(rest)
                rest &= rest - 1
                self.adj[j] |= bit(i)
                self.deg[j] += 1
            self.deg[i] = d
            ok = True
            slack = 0
            for j in range(i + 1, n):
                if self.deg[j] > d or self.deg[j] + later - 1 < k - 1:
                    ok = False
                    break
                slack += d - self.deg[j]
            if ok and slack < 2 * (m - count - c):
                ok = False
            try:
                if ok and self.member():
                    ok = False
                if ok:
                    self.row(i + 1, count + c, d)
            finally:
                self.deg[i] = base
                rest = nb
                while rest:
                    j = lowest(rest)
                    rest &= rest - 1
                    self.adj[j] &= ~bit(i)
                    self.deg[j] -= 1
                self.adj[i] &= ~nb
        return 0


# -- canonical form --------------------------------------------------------


cdef class _Canon:
    cdef uint64_t adj[WORD]
    cdef int deg[WORD]
    cdef int slot_deg[WORD]
    cdef int perm[WORD]
    cdef int best_perm[WORD]
    cdef int n, total
    cdef uint64_t best
    cdef bint have

    cdef void place(self, int p, uint64_t code, uint64_t used, int state) noexcept:
        cdef int v, i, shift_base, st
        cdef uint64_t col, nxt, ref
        if p == self.n:
            if not self.have or code < self.best:
                self.best = code
                self.have = True
                for i in range(self.n):
                    self.best_perm[i] = self.perm[i]
            return
        shift_base = self.total - p * (p + 1) // 2
        for v in range(self.n):
            if (used >> v) & 1 or self.deg[v] != self.slot_deg[p]:
                continue
            col = 0
            for i in range(p):
                col = (col << 1) | ((self.adj[self.perm[i]] >> v) & 1)
            nxt = (code << p) | col
            st = state
            if self.have and st == 0:
                ref = self.best >> shift_base
                if nxt > ref:
                    continue
                if nxt < ref:
                    st = 1
            self.perm[p] = v
            self.place(p + 1, nxt, used | bit(v), st)


# -- Python surface --------------------------------------------------------


def component_of(adj, mask, v):
    cdef uint64_t a[WORD]
    load(adj, a)
    return component_of_c(a, mask, v)


def components(adj, mask):
    cdef uint64_t a[WORD]
    cdef uint64_t rest = mask, c
    load(adj, a)
    out = []
    while rest:
        c = component_of_c(a, rest, lowest(rest))
        out.append(c)
        rest &= ~c
    return out


def k_core(adj, mask, k):
    cdef uint64_t a[WORD]
    load(adj, a)
    return k_core_c(a, mask, k)


def edge_min_cut(adj, mask):
    cdef uint64_t a[WORD]
    cdef uint64_t side
    load(adj, a)
    size = edge_min_cut_c(a, mask, &side)
    return size, side


def edge_connectivity_capped(adj, mask, cap):
    cdef uint64_t a[WORD]
    load(adj, a)
    return edge_conn_capped_c(a, mask, cap)


def ecs_piece(adj, mask, k):
    cdef uint64_t a[WORD]
    load(adj, a)
    return ecs_piece_c(a, mask, k)


def ecs_piece_with(adj, mask, k, x, y):
    cdef uint64_t a[WORD]
    load(adj, a)
    return ecs_piece_with_c(a, mask, k, x, y)


def vertex_min_cut(adj, mask):
    cdef uint64_t a[WORD]
    cdef uint64_t cut
    load(adj, a)
    kappa = vertex_min_cut_c(a, mask, &cut)
    return kappa, cut


def cs_piece(adj, mask, k, budget):
    cdef uint64_t a[WORD]
    load(adj, a)
    return cs_piece_c(a, mask, k, -1, -1, budget)


def cs_piece_with(adj, mask, k, x, y, budget):
    cdef uint64_t a[WORD]
    load(adj, a)
    return cs_piece_c(a, mask, k, x, y, budget)


def saturation_verdict(adj, n, k, family, budget):
    cdef uint64_t a[WORD]
    cdef uint64_t wa
    cdef int wb
    load(adj, a)
    code = verdict_c(a, n, k, family, budget, &wa, &wb)
    return code, wa, wb


def search_level(n, k, family, m, row0=None, max_nodes=10**12):
    if n * (n - 1) // 2 > 64:
        raise ValueError("compiled search supports at most 11 vertices")
    cdef _LevelSearch s = _LevelSearch()
    memset(s.adj, 0, sizeof(s.adj))
    memset(s.deg, 0, sizeof(s.deg))
    s.n = n
    s.k = k
    s.family = family
    s.m = m
    s.full = bit(n) - 1
    s.max_nodes = max_nodes
    s.examined = 0
    s.nodes = 0
    s.row0 = None if row0 is None else set(row0)
    s.found = []
    s.row(0, 0, n - 1)
    return s.found, s.examined, s.nodes


def canonical_code(adj, n):
    if n * (n - 1) // 2 > 64:
        raise ValueError("compiled canonical form supports at most 11 vertices")
    cdef _Canon c = _Canon()
    cdef int v
    load(adj, c.adj)
    c.n = n
    c.total = n * (n - 1) // 2
    c.have = False
    for v in range(n):
        c.deg[v] = popc(c.adj[v])
    degs = sorted([c.deg[v] for v in range(n)], reverse=True)
    for v in range(n):
        c.slot_deg[v] = degs[v]
    c.place(0, 0, 0, 0)
    return c.best, [c.best_perm[v] for v in range(n)]
