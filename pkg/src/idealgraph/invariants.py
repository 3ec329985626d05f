"""Exact graph invariants.

Inclusion graphs are comparability graphs of the containment order, so
cliques are chains and independent sets are antichains; the primary solvers
exploit that (longest-chain DP for clique/chromatic, Dilworth via bipartite
matching for independence). Generic exact solvers run as cross-checks on
small graphs and as the only route for raw graphs without containment
structure.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .bipartite import hopcroft_karp, koenig_cover
from .errors import TooLargeError
from .graph import DenseGraph
from .matching import matching_edges, maximum_matching_adj

INFINITY = math.inf

CLIQUE_CROSSCHECK_MAX = 64
CHROMATIC_CROSSCHECK_MAX = 64
INDEPENDENCE_CROSSCHECK_MAX = 30
DOMINATION_CAP = 1 << 16


def _dense(g) -> DenseGraph:
    if isinstance(g, DenseGraph):
        return g
    return g.dense()


def _label(dense: DenseGraph, i: int):
    return dense.masks[i] if dense.masks is not None else i


def _labels(dense: DenseGraph, idxs):
    return tuple(_label(dense, i) for i in idxs)


# ---------------------------------------------------------------------------
# connectivity / distances


def _components(dense: DenseGraph) -> list[int]:
    n = dense.size
    seen = 0
    comps = []
    for s in range(n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= dense.adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def connectivity(g) -> tuple[int, int | float]:
    """(number of components, diameter); diameter is inf unless connected."""
    dense = _dense(g)
    n = dense.size
    if n == 0:
        return 0, INFINITY
    comps = _components(dense)
    if len(comps) != 1:
        return len(comps), INFINITY
    allv = (1 << n) - 1
    diam = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        d = 0
        while seen != allv:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= dense.adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & ~seen
            if not frontier:  # unreachable given a single component
                return 1, INFINITY
            seen |= frontier
            d += 1
        if d > diam:
            diam = d
    return 1, diam


def girth(g) -> int | float:
    """Length of a shortest cycle, via BFS from every vertex; inf for forests."""
    dense = _dense(g)
    n = dense.size
    best = INFINITY
    dist = [0] * n
    parent = [0] * n
    for root in range(n):
        if best == 3:
            break
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        q = deque([root])
        while q:
            u = q.popleft()
            if best != INFINITY and dist[u] * 2 >= best:
                continue
            m = dense.adj[u]
            while m:
                b = m & -m
                w = b.bit_length() - 1
                m ^= b
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


# ---------------------------------------------------------------------------
# chain / antichain machinery (containment order from vertex masks)


def _predecessor_lists(dense: DenseGraph) -> list[list[int]]:
    """For each vertex, the adjacent vertices whose mask is strictly contained."""
    masks = dense.masks
    preds: list[list[int]] = []
    for i in range(dense.size):
        mi = masks[i]
        row = []
        m = dense.adj[i]
        while m:
            b = m & -m
            j = b.bit_length() - 1
            m ^= b
            if masks[j] & mi == masks[j] and masks[j] != mi:
                row.append(j)
        preds.append(row)
    return preds


def _chain_dp(dense: DenseGraph):
    """down[i]: longest chain ending at i; up[i]: longest chain starting at i.

    Vertices are sorted by (popcount, mask), so index order is a linear
    extension of containment.
    """
    preds = _predecessor_lists(dense)
    n = dense.size
    down = [1] * n
    for i in range(n):
        for j in preds[i]:
            if down[j] + 1 > down[i]:
                down[i] = down[j] + 1
    up = [1] * n
    succs: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in preds[i]:
            succs[j].append(i)
    for i in range(n - 1, -1, -1):
        for j in succs[i]:
            if up[j] + 1 > up[i]:
                up[i] = up[j] + 1
    return down, up, succs


def clique_number(g) -> tuple[int, tuple]:
    """(clique number, witness clique).

    Cliques in an inclusion graph are chains, so the primary solver is a
    longest-chain DP; a branch-and-bound clique search cross-checks small
    graphs, and is the only solver for raw graphs.
    """
    dense = _dense(g)
    if dense.size == 0:
        return 0, ()
    if dense.masks is None:
        size, members = _max_clique_bb(dense)
        return size, _labels(dense, sorted(members))
    down, up, succs = _chain_dp(dense)
    omega = max(down)
    # Lexicographically smallest maximum chain: greedy by mask at each level.
    start = min((i for i in range(dense.size) if up[i] == omega),
                key=lambda i: dense.masks[i])
    chain = [start]
    cur = start
    while up[cur] > 1:
        cur = min((j for j in succs[cur] if up[j] == up[cur] - 1),
                  key=lambda j: dense.masks[j])
        chain.append(cur)
    if dense.size <= CLIQUE_CROSSCHECK_MAX:
        check, _ = _max_clique_bb(dense)
        if check != omega:
            raise RuntimeError(
                f"clique cross-check failed: chain DP {omega}, search {check}")
    return omega, _labels(dense, chain)


def _max_clique_bb(dense: DenseGraph) -> tuple[int, list[int]]:
    """Branch and bound maximum clique with greedy-coloring bounds."""
    n = dense.size
    adj = dense.adj
    best_size = 0
    best: list[int] = []

    def color_sort(cand: int) -> list[tuple[int, int]]:
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                avail ^= b
                avail &= ~adj[v]
                rest ^= b
                order.append((v, color))
        return order

    def expand(current: list[int], cand: int) -> None:
        nonlocal best_size, best
        order = color_sort(cand)
        for v, color in reversed(order):
            if len(current) + color <= best_size:
                return
            current.append(v)
            new_cand = cand & adj[v]
            if new_cand:
                expand(current, new_cand)
            elif len(current) > best_size:
                best_size = len(current)
                best = current[:]
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return best_size, best


def chromatic_number(g) -> tuple[int, dict]:
    """(chromatic number, proper coloring keyed by vertex).

    Layering by longest-chain length colors an inclusion graph with exactly
    clique-number colors, which is optimal since a chain of that length is a
    clique. An independent exact search cross-checks small graphs.
    """
    dense = _dense(g)
    if dense.size == 0:
        return 0, {}
    if dense.masks is None:
        k, colors = _exact_chromatic(dense)
        return k, {_label(dense, i): c for i, c in enumerate(colors)}
    down, _, _ = _chain_dp(dense)
    chi = max(down)
    coloring = {dense.masks[i]: down[i] for i in range(dense.size)}
    if dense.size <= CHROMATIC_CROSSCHECK_MAX:
        check, _ = _exact_chromatic(dense)
        if check != chi:
            raise RuntimeError(
                f"chromatic cross-check failed: layering {chi}, search {check}")
    return chi, coloring


def _exact_chromatic(dense: DenseGraph) -> tuple[int, list[int]]:
    """Exact chromatic number: clique lower bound, then k-coloring search."""
    n = dense.size
    if n == 0:
        return 0, []
    lb, _ = _max_clique_bb(dense)
    k = max(lb, 1)
    while True:
        colors = _k_coloring(dense, k)
        if colors is not None:
            return k, colors
        k += 1


def _k_coloring(dense: DenseGraph, k: int) -> list[int] | None:
    """Backtracking k-coloring in saturation order; None if infeasible."""
    n = dense.size
    adj = dense.adj
    colors = [0] * n  # 1..k when assigned
    forbidden = [0] * n  # bitmask of colors 1..k seen on neighbors

    def pick() -> int:
        bestv = -1
        key = (-1, -1)
        for v in range(n):
            if colors[v] == 0:
                sat = forbidden[v].bit_count()
                deg = adj[v].bit_count()
                if (sat, deg) > key:
                    key = (sat, deg)
                    bestv = v
        return bestv

    def rec(assigned: int) -> bool:
        if assigned == n:
            return True
        v = pick()
        for c in range(1, k + 1):
            if (forbidden[v] >> (c - 1)) & 1:
                continue
            colors[v] = c
            touched = []
            m = adj[v]
            while m:
                b = m & -m
                w = b.bit_length() - 1
                m ^= b
                if colors[w] == 0 and not (forbidden[w] >> (c - 1)) & 1:
                    forbidden[w] |= 1 << (c - 1)
                    touched.append(w)
            if rec(assigned + 1):
                return True
            colors[v] = 0
            for w in touched:
                forbidden[w] &= ~(1 << (c - 1))
        return False

    if rec(0):
        return colors
    return None


def independence_number(g) -> tuple[int, tuple]:
    """(independence number, witness antichain).

    Independent sets in an inclusion graph are antichains; the width is
    computed by Dilworth's theorem as |V| minus a maximum matching in the
    split bipartite graph of the containment relation, and the witness comes
    from the König cover. An exhaustive search cross-checks small graphs.
    """
    dense = _dense(g)
    n = dense.size
    if n == 0:
        return 0, ()
    if dense.masks is None:
        size, members = _max_independent_exact(dense)
        return size, _labels(dense, sorted(members))
    preds = _predecessor_lists(dense)
    # Left copy u -> right copy v for every comparable pair u < v.
    adj: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for u in preds[v]:
            adj[u].append(v)
    size, match_l, match_r = hopcroft_karp(n, n, adj)
    alpha = n - size
    left_cover, right_cover = koenig_cover(n, n, adj, match_l, match_r)
    witness = tuple(i for i in range(n) if not left_cover[i] and not right_cover[i])
    if len(witness) != alpha:
        raise RuntimeError("König antichain extraction is inconsistent")
    for a in range(len(witness)):
        for b in range(a + 1, len(witness)):
            if (dense.adj[witness[a]] >> witness[b]) & 1:
                raise RuntimeError("König antichain has comparable members")
    if n <= INDEPENDENCE_CROSSCHECK_MAX:
        check, _ = _max_independent_exact(dense)
        if check != alpha:
            raise RuntimeError(
                f"independence cross-check failed: Dilworth {alpha}, search {check}")
    return alpha, _labels(dense, witness)


def _max_independent_exact(dense: DenseGraph) -> tuple[int, list[int]]:
    size, members = _max_clique_bb(dense.complement())
    return size, members


def maximum_matching(g) -> tuple[int, tuple, bool]:
    """(matching number, matched pairs, is perfect) via blossom search."""
    dense = _dense(g)
    adj = [dense.neighbors_of(i) for i in range(dense.size)]
    mate = maximum_matching_adj(dense.size, adj)
    pairs = matching_edges(mate)
    size = len(pairs)
    return (size,
            tuple((_label(dense, u), _label(dense, v)) for u, v in pairs),
            dense.size > 0 and 2 * size == dense.size)


def domination_number(g, cap: int = DOMINATION_CAP) -> tuple[int, tuple]:
    """(domination number, witness) by iterative-deepening set cover
    over closed neighborhoods."""
    dense = _dense(g)
    n = dense.size
    if n > cap:
        raise TooLargeError(f"{n} vertices exceed the domination cap {cap}")
    if n == 0:
        return 0, ()
    closed = [dense.adj[i] | (1 << i) for i in range(n)]
    allv = (1 << n) - 1
    max_closed = max(c.bit_count() for c in closed)

    def search(k: int, covered: int, chosen: list[int]) -> list[int] | None:
        if covered == allv:
            return chosen[:]
        if k == 0:
            return None
        uncovered = allv & ~covered
        if uncovered.bit_count() > k * max_closed:
            return None
        # Branch on an uncovered vertex with the fewest potential dominators.
        bestv = -1
        best_cands = None
        m = uncovered
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            cands = closed[v]
            cnt = cands.bit_count()
            if best_cands is None or cnt < best_cands.bit_count():
                bestv = v
                best_cands = cands
                if cnt == 1:
                    break
        m = best_cands
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            chosen.append(w)
            res = search(k - 1, covered | closed[w], chosen)
            if res is not None:
                return res
            chosen.pop()
        return None

    lower = max(1, math.ceil(n / max_closed))
    for k in range(lower, n + 1):
        res = search(k, 0, [])
        if res is not None:
            return k, _labels(dense, sorted(res))
    raise RuntimeError("unreachable: the whole vertex set dominates")


def structural_flags(g) -> tuple[bool, bool, bool]:
    """(eulerian, bipartite, triangulated)."""
    dense = _dense(g)
    n = dense.size
    comps = _components(dense)
    eulerian = len(comps) == 1 and all(dense.degree(i) % 2 == 0 for i in range(n))
    # 2-coloring BFS
    color = [-1] * n
    bipartite = True
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        q = deque([s])
        while q and bipartite:
            u = q.popleft()
            m = dense.adj[u]
            while m:
                b = m & -m
                w = b.bit_length() - 1
                m ^= b
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    q.append(w)
                elif color[w] == color[u]:
                    bipartite = False
                    break
        if not bipartite:
            break
    triangulated = n > 0
    for v in range(n):
        on_triangle = False
        m = dense.adj[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            if dense.adj[v] & dense.adj[u] & ~(1 << v) & ~(1 << u):
                on_triangle = True
                break
        if not on_triangle:
            triangulated = False
            break
    return eulerian, bipartite, triangulated


# ---------------------------------------------------------------------------
# planarity


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: dict | None = None
    kuratowski_edges: tuple = ()
    kuratowski_kind: str | None = None  # "K5" or "K3,3" subdivision


def planarity(g) -> PlanarityResult:
    """Exact planarity with a combinatorial embedding or Kuratowski witness."""
    dense = _dense(g)
    G = nx.Graph()
    G.add_nodes_from(range(dense.size))
    G.add_edges_from(dense.edge_list())
    ok, cert = nx.check_planarity(G, counterexample=False)
    if ok:
        data = cert.get_data()
        emb = {_label(dense, v): [_label(dense, w) for w in nbrs]
               for v, nbrs in sorted(data.items())}
        return PlanarityResult(planar=True, embedding=emb)
    edges = _kuratowski_edges(dense, G)
    kind = classify_kuratowski(edges)
    labeled = tuple((_label(dense, u), _label(dense, v)) for u, v in edges)
    return PlanarityResult(planar=False, kuratowski_edges=labeled,
                           kuratowski_kind=kind)


def _kuratowski_edges(dense: DenseGraph, G: "nx.Graph") -> tuple:
    """Edge set of a Kuratowski subgraph of a nonplanar graph.

    A chain of five pairwise-comparable vertices is a K5 outright, so when
    the containment order is that deep the witness is immediate; otherwise
    fall back to edge-deletion extraction, which re-tests planarity per
    edge and is only affordable on small graphs.
    """
    if dense.masks is not None:
        down, up, succs = _chain_dp(dense)
        if max(down, default=0) >= 5:
            start = min((i for i in range(dense.size) if up[i] >= 5),
                        key=lambda i: dense.masks[i])
            chain = [start]
            cur = start
            while len(chain) < 5:
                cur = min((j for j in succs[cur] if up[j] >= 5 - len(chain)),
                          key=lambda j: dense.masks[j])
                chain.append(cur)
            return tuple((min(a, b), max(a, b))
                         for a, b in combinations(sorted(chain), 2))
    cert = nx.algorithms.planarity.get_counterexample(G)
    return tuple(sorted((min(u, v), max(u, v)) for u, v in cert.edges()))


def classify_kuratowski(edges) -> str:
    """Classify an edge set as a subdivision of K5 or K3,3.

    Suppresses degree-2 vertices and inspects the branch structure; raises
    ValueError when the edge set is neither.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    branch = [v for v, nb in adj.items() if len(nb) >= 3]
    degs = sorted(len(adj[v]) for v in branch)
    # Walk branch-to-branch paths through degree-2 vertices.
    links: set[tuple[int, int]] = set()
    for b in branch:
        for start in adj[b]:
            prev, cur = b, start
            while cur not in branch:
                nxts = [x for x in adj[cur] if x != prev]
                if len(nxts) != 1:
                    raise ValueError("not a subdivision: stray vertex degree")
                prev, cur = cur, nxts[0]
            if b != cur:
                links.add((min(b, cur), max(b, cur)))
    if len(branch) == 5 and degs == [4] * 5 and len(links) == 10:
        return "K5"
    if len(branch) == 6 and degs == [3] * 6 and len(links) == 9:
        return "K3,3"
    raise ValueError("witness is not a K5 or K3,3 subdivision")


# ---------------------------------------------------------------------------
# perfectness (odd hole / antihole search)


def perfectness(g, max_len: int) -> tuple[bool | None, tuple | None]:
    """Search induced odd cycles of length 5..max_len in g and its complement.

    Returns (True, None) when the search was exhaustive (max_len >= |V|) and
    found nothing; (False, witness) when an odd hole or antihole exists;
    (None, None) when the bounded search found nothing.
    """
    dense = _dense(g)
    n = dense.size
    hole = _find_odd_hole(dense, max_len)
    if hole is not None:
        return False, ("hole", _labels(dense, hole))
    anti = _find_odd_hole(dense.complement(), max_len)
    if anti is not None:
        return False, ("antihole", _labels(dense, anti))
    if max_len >= n:
        return True, None
    return None, None


def _find_odd_hole(dense: DenseGraph, max_len: int) -> list[int] | None:
    n = dense.size
    adj = dense.adj
    for length in range(5, max_len + 1, 2):
        if length > n:
            break
        res = _find_hole_of_length(n, adj, length)
        if res is not None:
            return res
    return None


def _find_hole_of_length(n: int, adj: list[int], length: int) -> list[int] | None:
    """Induced cycle of exactly `length`, anchored at its smallest vertex."""
    for a in range(n):
        above = ((1 << n) - 1) & ~((1 << (a + 1)) - 1)
        f = adj[a] & above
        while f:
            b = f & -f
            first = b.bit_length() - 1
            f ^= b
            allowed = above & ~adj[a] & ~(1 << first)
            res = _extend_induced_path(adj, a, [a, first], allowed, length)
            if res is not None:
                return res
    return None


def _extend_induced_path(adj, a, path, allowed, length):
    head = path[-1]
    if len(path) == length - 1:
        cand = adj[head] & adj[a]
        for v in path[1:-1]:
            cand &= ~adj[v]
        for v in path:
            cand &= ~(1 << v)
        cand &= ~((1 << (a + 1)) - 1)
        cand &= ~((1 << (path[1] + 1)) - 1)  # orient the cycle: closer > second
        if cand:
            w = (cand & -cand).bit_length() - 1
            return path + [w]
        return None
    ext = adj[head] & allowed
    while ext:
        b = ext & -ext
        w = b.bit_length() - 1
        ext ^= b
        res = _extend_induced_path(adj, a, path + [w],
                                   allowed & ~adj[head] & ~b, length)
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------------------
# the aggregate report


@dataclass
class InvariantReport:
    vertex_count: int
    edge_count: int
    connected: bool
    components: int
    diameter: int | float
    girth: int | float
    clique_number: int
    chromatic_number: int
    independence_number: int
    vertex_cover_number: int
    matching_number: int
    edge_cover_number: int | None
    domination_number: int
    eulerian: bool
    bipartite: bool
    triangulated: bool
    planar: bool
    perfect: bool | None
    witnesses: dict = field(default_factory=dict)
    methods: dict = field(default_factory=dict)
    elapsed: dict = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        """Stable-key-order dict; elapsed timings are intentionally omitted
        so identical runs serialize identically."""
        def enc(x):
            if x is INFINITY:
                return "inf"
            return x
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "connected": self.connected,
            "components": self.components,
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "independence_number": self.independence_number,
            "vertex_cover_number": self.vertex_cover_number,
            "matching_number": self.matching_number,
            "edge_cover_number": self.edge_cover_number,
            "domination_number": self.domination_number,
            "eulerian": self.eulerian,
            "bipartite": self.bipartite,
            "triangulated": self.triangulated,
            "planar": self.planar,
            "perfect": self.perfect,
            "witnesses": _jsonify(self.witnesses),
            "methods": dict(sorted(self.methods.items())),
        }


def _jsonify(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(x) for x in obj]
    return obj


def compute_report(g, *, perfect_max_len: int | None = None,
                   domination_cap: int = DOMINATION_CAP) -> InvariantReport:
    """Run every invariant on g and bundle the results."""
    dense = _dense(g)
    n = dense.size
    edge_count = sum(dense.degree(i) for i in range(n)) // 2
    witnesses: dict = {}
    methods: dict = {}
    elapsed: dict = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        elapsed[name] = time.perf_counter() - t0
        return out

    components, diameter = timed("connectivity", lambda: connectivity(dense))
    methods["connectivity"] = "bitset-bfs"
    gr = timed("girth", lambda: girth(dense))
    methods["girth"] = "per-vertex-bfs"
    omega, clique = timed("clique", lambda: clique_number(dense))
    methods["clique"] = ("chain-dp" if dense.masks is not None else "branch-and-bound")
    witnesses["clique"] = clique
    chi, coloring = timed("chromatic", lambda: chromatic_number(dense))
    methods["chromatic"] = ("chain-layering" if dense.masks is not None else "exact-search")
    witnesses["coloring"] = coloring
    alpha, antichain = timed("independence", lambda: independence_number(dense))
    methods["independence"] = ("dilworth-matching" if dense.masks is not None
                               else "exact-search")
    witnesses["independent_set"] = antichain
    mnum, pairs, perfect_matching = timed("matching", lambda: maximum_matching(dense))
    methods["matching"] = "blossom"
    witnesses["matching"] = pairs
    isolated = any(dense.degree(i) == 0 for i in range(n))
    edge_cover = None if (isolated or n == 0) else n - mnum
    gamma, dom = timed("domination",
                       lambda: domination_number(dense, cap=domination_cap))
    methods["domination"] = "iterative-deepening-cover"
    witnesses["dominating_set"] = dom
    eulerian, bipartite_flag, triangulated = timed(
        "flags", lambda: structural_flags(dense))
    methods["flags"] = "bfs"
    planar_res = timed("planarity", lambda: planarity(dense))
    methods["planarity"] = "left-right"
    if planar_res.planar:
        witnesses["embedding"] = planar_res.embedding
    else:
        witnesses["kuratowski"] = {
            "kind": planar_res.kuratowski_kind,
            "edges": planar_res.kuratowski_edges,
        }
    if perfect_max_len is None:
        # Exhaustive only when cheap; the induced-path enumeration explodes
        # on large dense complements, so big graphs default to "unknown".
        perfect_max_len = n if n <= 14 else (11 if n <= 32 else 0)
    if perfect_max_len > 0:
        perfect, hole_witness = timed(
            "perfectness", lambda: perfectness(dense, perfect_max_len))
        methods["perfectness"] = f"odd-hole-search<=({perfect_max_len})"
        if hole_witness is not None:
            witnesses[hole_witness[0]] = hole_witness[1]
    else:
        perfect, hole_witness = None, None
        methods["perfectness"] = "skipped-size"

    report = InvariantReport(
        vertex_count=n,
        edge_count=edge_count,
        connected=components <= 1,
        components=components,
        diameter=diameter if n > 0 else INFINITY,
        girth=gr,
        clique_number=omega,
        chromatic_number=chi,
        independence_number=alpha,
        vertex_cover_number=n - alpha,
        matching_number=mnum,
        edge_cover_number=edge_cover,
        domination_number=gamma,
        eulerian=eulerian,
        bipartite=bipartite_flag,
        triangulated=triangulated,
        planar=planar_res.planar,
        perfect=perfect,
        witnesses=witnesses,
        methods=methods,
        elapsed=elapsed,
    )
    assert report.independence_number + report.vertex_cover_number == n
    assert report.clique_number <= report.chromatic_number
    if edge_cover is not None:
        assert report.matching_number + edge_cover == n
    return report
