"""Maximum cardinality matching in general graphs.

Classic O(V^3) odd-cycle-contraction algorithm: alternating-forest BFS with
blossom shrinking via a ``base`` array. Handles disconnected graphs and
isolated vertices. Deterministic for a fixed adjacency order.
"""

from __future__ import annotations

from collections import deque


def maximum_matching_adj(n: int, adj: list[list[int]]) -> list[int]:
    """Return ``mate`` with mate[v] = matched partner of v, or -1."""
    mate = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if mate[x] == -1:
                break
            x = parent[mate[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[mate[y]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> int:
        nonlocal parent, base, in_queue
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_queue[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # Odd cycle: contract the blossom at the common ancestor.
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not in_queue[i]:
                                in_queue[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    if not in_queue[mate[to]]:
                        in_queue[mate[to]] = True
                        q.append(mate[to])
        return -1

    def augment(finish: int) -> None:
        u = finish
        while u != -1:
            pv = parent[u]
            next_u = mate[pv]
            mate[u] = pv
            mate[pv] = u
            u = next_u

    # Greedy warm start, then one search per remaining exposed vertex.
    for v in range(n):
        if mate[v] == -1:
            for to in adj[v]:
                if mate[to] == -1:
                    mate[v] = to
                    mate[to] = v
                    break
    for v in range(n):
        if mate[v] == -1:
            finish = find_augmenting_path(v)
            if finish != -1:
                augment(finish)
    return mate


def matching_edges(mate: list[int]) -> list[tuple[int, int]]:
    return [(v, mate[v]) for v in range(len(mate)) if mate[v] > v]
