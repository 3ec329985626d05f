"""Maximum bipartite matching (Hopcroft-Karp) and a König minimum vertex cover.

Deterministic: greedy initialization and augmentation both follow the given
adjacency order, so equal inputs give identical matchings.
"""

from __future__ import annotations

from collections import deque

INF = float("inf")


def hopcroft_karp(n_left: int, n_right: int, adj: list[list[int]]):
    """Maximum matching in a bipartite graph.

    ``adj[u]`` lists right-side neighbors of left vertex ``u``. Returns
    (size, match_left, match_right) with -1 for unmatched.
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    for u in range(n_left):
        for v in adj[u]:
            if match_r[v] == -1:
                match_l[u] = v
                match_r[v] = u
                break
    dist = [0.0] * n_left

    def bfs() -> bool:
        q = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(root: int) -> bool:
        # Explicit stack; frames resume neighbor scans after failed descents.
        frames = [[root, 0]]
        chosen: list[int] = []
        while frames:
            u, i = frames[-1]
            descended = False
            while i < len(adj[u]):
                v = adj[u][i]
                i += 1
                w = match_r[v]
                if w == -1:
                    chosen.append(v)
                    for (uu, _), vv in zip(frames, chosen):
                        match_l[uu] = vv
                        match_r[vv] = uu
                    return True
                if dist[w] == dist[u] + 1:
                    frames[-1][1] = i
                    chosen.append(v)
                    frames.append([w, 0])
                    descended = True
                    break
            if not descended:
                dist[u] = INF
                frames.pop()
                if chosen:
                    chosen.pop()
        return False

    size = sum(1 for u in range(n_left) if match_l[u] != -1)
    while bfs():
        for u in range(n_left):
            if match_l[u] == -1 and dfs(u):
                size += 1
    return size, match_l, match_r


def koenig_cover(n_left: int, n_right: int, adj: list[list[int]],
                 match_l: list[int], match_r: list[int]):
    """Minimum vertex cover from a maximum matching.

    Alternating reach from unmatched left vertices; the cover is the
    unreached left side plus the reached right side.
    """
    reach_l = [False] * n_left
    reach_r = [False] * n_right
    q = deque(u for u in range(n_left) if match_l[u] == -1)
    for u in q:
        reach_l[u] = True
    while q:
        u = q.popleft()
        for v in adj[u]:
            if not reach_r[v]:
                reach_r[v] = True
                w = match_r[v]
                if w != -1 and not reach_l[w]:
                    reach_l[w] = True
                    q.append(w)
    left_cover = [not reach_l[u] for u in range(n_left)]
    right_cover = [reach_r[v] for v in range(n_right)]
    return left_cover, right_cover
