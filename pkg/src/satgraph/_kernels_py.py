"""Pure-Python kernels.

Every function here has a twin with the same signature and the same visiting
order in ``_kernels.pyx``; results (including tie-breaks, witness choice and
search counters) must agree bit for bit.  Graphs are passed as a sequence of
neighbour bitsets ``adj`` and vertex sets as int bitmasks.  This module has no
size limit; the compiled twin handles n <= 64.
"""

from __future__ import annotations

from .errors import BudgetExceeded

EDGE = 0
VERTEX = 1

SATURATED = 0
CONTAINS_MEMBER = 1
MISSES_EDGE = 2


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


def component_of(adj, mask: int, v: int) -> int:
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= adj[u]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(adj, mask: int) -> list[int]:
    """Connected components of G[mask], ordered by lowest vertex."""
    out = []
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        c = component_of(adj, rest, v)
        out.append(c)
        rest &= ~c
    return out


def k_core(adj, mask: int, k: int) -> int:
    changed = True
    while changed:
        changed = False
        for v in _bits(mask):
            if _popcount(adj[v] & mask) < k:
                mask &= ~(1 << v)
                changed = True
    return mask


# -- edge cuts -------------------------------------------------------------


def _edge_flow(adj, mask: int, s: int, sinks: int, limit: int) -> tuple[int, int]:
    """Unit-capacity max flow from s into the vertex set ``sinks`` within
    G[mask], stopped once it reaches ``limit``.

    Returns (flow, residual reachable set from s).  When flow < limit the
    reachable set is the inclusion-minimal source side of a minimum cut.
    """
    out = {}  # u -> bitset of v carrying one unit u->v
    flow = 0
    while True:
        seen = 1 << s
        parent = {}
        queue = [s]
        hit = -1
        qi = 0
        while qi < len(queue) and hit < 0:
            u = queue[qi]
            qi += 1
            nb = adj[u] & mask & ~out.get(u, 0) & ~seen
            for v in _bits(nb):
                parent[v] = u
                seen |= 1 << v
                if sinks >> v & 1:
                    hit = v
                    break
                queue.append(v)
        if hit < 0:
            return flow, seen
        flow += 1
        v = hit
        while v != s:
            u = parent[v]
            if out.get(v, 0) >> u & 1:
                out[v] &= ~(1 << u)
            else:
                out[u] = out.get(u, 0) | (1 << v)
            v = u
        if flow >= limit:
            return flow, 0


def edge_min_cut(adj, mask: int) -> tuple[int, int]:
    """Global minimum edge cut of G[mask] (needs at least two vertices).

    Returns (size, side) where side is the numerically smallest vertex set S
    with |[S, mask - S]| minimum.  S never holds the top vertex of mask; its
    own top vertex h is the lowest one that can be cut from everything above
    it at minimum cost, and the residual reach of h is then the smallest
    such side.
    """
    lam = edge_connectivity_capped(adj, mask, _popcount(mask))
    above = mask
    for h in _bits(mask):
        above &= ~(1 << h)
        f, reach = _edge_flow(adj, mask, h, above, lam + 1)
        if f == lam:
            return lam, reach
    raise AssertionError("no minimum cut found")


def edge_connectivity_capped(adj, mask: int, cap: int) -> int:
    """min(kappa'(G[mask]), cap)."""
    s = (mask & -mask).bit_length() - 1
    best = cap
    for t in _bits(mask & ~(1 << s)):
        f, _ = _edge_flow(adj, mask, s, 1 << t, best)
        if f < best:
            best = f
            if best == 0:
                break
    return best


def _edge_cut_below(adj, comp: int, k: int) -> int:
    # source side of some cut with fewer than k edges, or 0 if kappa' >= k
    s = (comp & -comp).bit_length() - 1
    for t in _bits(comp & ~(1 << s)):
        f, reach = _edge_flow(adj, comp, s, 1 << t, k)
        if f < k:
            return reach
    return 0


def ecs_piece(adj, mask: int, k: int) -> int:
    """Vertex set of a k-edge-connected induced subgraph inside mask, or 0."""
    core = k_core(adj, mask, k)
    for comp in components(adj, core):
        side = _edge_cut_below(adj, comp, k)
        if not side:
            return comp
        found = ecs_piece(adj, side, k) or ecs_piece(adj, comp & ~side, k)
        if found:
            return found
    return 0


def ecs_piece_with(adj, mask: int, k: int, x: int, y: int) -> int:
    """Like ecs_piece, restricted to pieces containing both x and y."""
    while True:
        core = k_core(adj, mask, k)
        if not (core >> x & 1 and core >> y & 1):
            return 0
        comp = component_of(adj, core, x)
        if not comp >> y & 1:
            return 0
        side = _edge_cut_below(adj, comp, k)
        if not side:
            return comp
        if (side >> x & 1) != (side >> y & 1):
            return 0
        mask = side if side >> x & 1 else comp & ~side


# -- vertex cuts -----------------------------------------------------------


def _vertex_flow(adj, mask: int, s: int, t: int, limit: int) -> tuple[int, int]:
    """Internally vertex-disjoint s-t paths (s, t nonadjacent) via vertex splitting.

    Each vertex v is split into in_v -> out_v with capacity 1 (unbounded for
    s and t); edges become out_u -> in_v arcs of unbounded capacity.  Returns
    (flow, separator) where the separator is valid when flow < limit.
    """
    through = 0  # vertices whose in->out arc carries flow
    ef = {}  # u -> bitset of v with one unit on out_u -> in_v
    efr = {}  # v -> bitset of u with one unit on out_u -> in_v
    st = (1 << s) | (1 << t)
    flow = 0
    while True:
        # nodes are encoded as 2v (in) and 2v+1 (out); start at out_s
        seen_in = 0
        seen_out = 1 << s
        parent = {}
        queue = [2 * s + 1]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            node = queue[qi]
            qi += 1
            v = node >> 1
            if node & 1:
                nb = adj[v] & mask & ~seen_in
                for w in _bits(nb):
                    seen_in |= 1 << w
                    parent[2 * w] = node
                    if w == t:
                        found = True
                        break
                    queue.append(2 * w)
                if not found and through >> v & 1 and not st >> v & 1 and not seen_in >> v & 1:
                    seen_in |= 1 << v
                    parent[2 * v] = node
                    queue.append(2 * v)
            else:
                if (not through >> v & 1 or st >> v & 1) and not seen_out >> v & 1:
                    seen_out |= 1 << v
                    parent[2 * v + 1] = node
                    queue.append(2 * v + 1)
                back = efr.get(v, 0) & ~seen_out
                for u in _bits(back):
                    seen_out |= 1 << u
                    parent[2 * u + 1] = node
                    queue.append(2 * u + 1)
        if not found:
            return flow, seen_in & ~seen_out & mask
        flow += 1
        node = 2 * t
        while node != 2 * s + 1:
            prev = parent[node]
            a, b = prev >> 1, node >> 1
            if prev & 1 and not node & 1:
                if a == b:
                    through &= ~(1 << a)  # out_a -> in_a cancels a->a internal flow
                else:
                    ef[a] = ef.get(a, 0) | (1 << b)
                    efr[b] = efr.get(b, 0) | (1 << a)
            elif not prev & 1 and node & 1:
                if a == b:
                    through |= 1 << a
                else:
                    # in_a -> out_b cancels a unit on out_b -> in_a
                    ef[b] &= ~(1 << a)
                    efr[a] &= ~(1 << b)
            node = prev
        if flow >= limit:
            return flow, 0


def _is_complete(adj, mask: int) -> bool:
    for v in _bits(mask):
        if (adj[v] | (1 << v)) & mask != mask:
            return False
    return True


def vertex_min_cut(adj, mask: int) -> tuple[int, int]:
    """(kappa(G[mask]), a minimum separating set).

    Complete graphs report |mask| - 1 with every vertex but the highest as
    the "separator" (its removal leaves K_1).
    """
    size = _popcount(mask)
    if _is_complete(adj, mask):
        return size - 1, mask & ~(1 << (mask.bit_length() - 1))
    # a non-complete graph has kappa <= size - 2, so the first pair improves
    best = size - 1
    cut = 0
    for s in _bits(mask):
        for t in _bits(mask & ~adj[s] & ~((2 << s) - 1)):
            f, sep = _vertex_flow(adj, mask, s, t, best)
            if f < best:
                best, cut = f, sep
                if best == 0:
                    return 0, cut
    return best, cut


def _vertex_cut_below(adj, comp: int, k: int):
    if _is_complete(adj, comp):
        return None
    for s in _bits(comp):
        for t in _bits(comp & ~adj[s] & ~((2 << s) - 1)):
            f, sep = _vertex_flow(adj, comp, s, t, k)
            if f < k:
                return sep
    return None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, nodes: int):
        self.left = nodes

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("k-connected subgraph search exceeded its node budget")


def _cs_piece(adj, mask, k, x, y, memo, budget):
    if mask in memo:
        return 0
    memo.add(mask)
    budget.spend()
    core = k_core(adj, mask, k)
    need = 0 if x < 0 else (1 << x) | (1 << y)
    for comp in components(adj, core):
        if comp & need != need or _popcount(comp) < k + 1:
            continue
        sep = _vertex_cut_below(adj, comp, k)
        if sep is None:
            return comp
        for d in components(adj, comp & ~sep):
            sub = d | sep
            if sub & need != need:
                continue
            found = _cs_piece(adj, sub, k, x, y, memo, budget)
            if found:
                return found
    return 0


def cs_piece(adj, mask: int, k: int, budget: int) -> int:
    """Vertex set of a k-connected induced subgraph inside mask, or 0."""
    return _cs_piece(adj, mask, k, -1, -1, set(), _Budget(budget))


def cs_piece_with(adj, mask: int, k: int, x: int, y: int, budget: int) -> int:
    return _cs_piece(adj, mask, k, x, y, set(), _Budget(budget))


# -- saturation ------------------------------------------------------------


def saturation_verdict(adj, n: int, k: int, family: int, budget: int) -> tuple[int, int, int]:
    """(code, a, b): (SATURATED,0,0), (CONTAINS_MEMBER, witness, 0) or
    (MISSES_EDGE, u, v) for the first non-edge in lexicographic order that
    creates no member."""
    adj = list(adj)
    full = (1 << n) - 1
    if family == EDGE:
        w = ecs_piece(adj, full, k)
    else:
        w = cs_piece(adj, full, k, budget)
    if w:
        return CONTAINS_MEMBER, w, 0
    for u in range(n):
        for v in _bits(full & ~adj[u] & ~((2 << u) - 1)):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if family == EDGE:
                ok = ecs_piece_with(adj, full, k, u, v)
            else:
                ok = cs_piece_with(adj, full, k, u, v, budget)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            if not ok:
                return MISSES_EDGE, u, v
    return SATURATED, 0, 0


def search_level(n: int, k: int, family: int, m: int, row0=None, max_nodes: int = 10**12):
    """All saturated labeled graphs with m edges and non-increasing degrees.

    Rows of the upper triangle are chosen one vertex at a time.  Structural
    prunes: final degree >= k-1, degrees non-increasing in label order,
    edge-count feasibility, and no member of the family in the partial graph
    (membership is monotone under adding edges).  Leaves must be connected,
    have kappa' == k-1 (edge family), and pass the full saturation verdict.

    Returns (edge_masks, examined, nodes); edge bit p indexes the p-th pair
    in lexicographic order.  ``row0`` restricts the subsets tried for vertex 0.
    """
    adj = [0] * n
    deg = [0] * n
    full = (1 << n) - 1
    found = []
    stats = [0, 0]  # examined leaves, nodes
    row0 = None if row0 is None else set(row0)

    def member(mask):
        if family == EDGE:
            return ecs_piece(adj, mask, k)
        return cs_piece(adj, mask, k, max_nodes)

    def leaf():
        stats[0] += 1
        # both prunes are necessary conditions once n > k >= 2
        if n > k >= 2:
            if component_of(adj, full, 0) != full:
                return
            if family == EDGE and edge_connectivity_capped(adj, full, k) != k - 1:
                return
        code, _, _ = saturation_verdict(adj, n, k, family, max_nodes)
        if code == SATURATED:
            bits = 0
            p = 0
            for i in range(n):
                for j in range(i + 1, n):
                    if adj[i] >> j & 1:
                        bits |= 1 << p
                    p += 1
            found.append(bits)

    def row(i, count, prevdeg):
        stats[1] += 1
        if stats[1] > max_nodes:
            raise BudgetExceeded("search exceeded its node budget")
        if i == n - 1:
            d = deg[i]
            if count == m and k - 1 <= d <= prevdeg:
                leaf()
            return
        later = n - 1 - i
        rem_after = later * (later - 1) // 2
        base = deg[i]
        for s in range(1 << later):
            if i == 0 and row0 is not None and s not in row0:
                continue
            c = _popcount(s)
            d = base + c
            if d < k - 1 or d > prevdeg:
                continue
            if count + c > m or count + c + rem_after < m:
                continue
            nb = s << (i + 1)
            adj[i] |= nb
            for j in _bits(nb):
                adj[j] |= 1 << i
                deg[j] += 1
            deg[i] = d
            ok = True
            slack = 0
            for j in range(i + 1, n):
                if deg[j] > d or deg[j] + later - 1 < k - 1:
                    ok = False
                    break
                slack += d - deg[j]
            if ok and slack < 2 * (m - count - c):
                ok = False
            if ok and member(full):
                ok = False
            if ok:
                row(i + 1, count + c, d)
            deg[i] = base
            for j in _bits(nb):
                adj[j] &= ~(1 << i)
                deg[j] -= 1
            adj[i] &= ~nb

    row(0, 0, n - 1)
    return found, stats[0], stats[1]


# -- canonical form --------------------------------------------------------


def canonical_code(adj, n: int) -> tuple[int, list[int]]:
    """Minimal upper-triangle bit string over degree-respecting relabelings.

    Bits are read column by column ((0,1), (0,2), (1,2), (0,3), ...), the
    first pair most significant.  New labels are filled in order of
    non-increasing degree; only vertices of the matching degree may occupy
    each position.  Returns (code, perm) with perm[new] = old.
    """
    deg = [_popcount(adj[v]) for v in range(n)]
    slot_deg = sorted(deg, reverse=True)
    total = n * (n - 1) // 2
    best = [-1, None]
    perm = [0] * n

    # compare prefixes: state 0 = equal to best so far, 1 = already smaller
    def place(p, code, used, state):
        if p == n:
            if best[1] is None or code < best[0]:
                best[0] = code
                best[1] = perm[:]
            return
        shift_base = total - p * (p + 1) // 2  # bits remaining after column p
        for v in range(n):
            if used >> v & 1 or deg[v] != slot_deg[p]:
                continue
            col = 0
            for i in range(p):
                col = (col << 1) | (adj[perm[i]] >> v & 1)
            nxt = (code << p) | col
            st = state
            if best[1] is not None and st == 0:
                ref = best[0] >> shift_base
                if nxt > ref:
                    continue
                if nxt < ref:
                    st = 1
            perm[p] = v
            place(p + 1, nxt, used | (1 << v), st)

    place(0, 0, 0, 0)
    return best[0], best[1]
