"""Explicit constructions on the Boolean model.

Layer ``k`` means all k-element subsets of [n]; consecutive layers induce a
biregular bipartite graph under containment. These routines build concrete
certificates: layer matchings saturating the smaller prescribed side, a
middle-layer normalization of independent sets, a perfect matching of the
whole graph, and canonical dominating sets and chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bipartite import hopcroft_karp
from .errors import NotIndependentError, OutOfRangeError


def layer(n: int, k: int) -> list[int]:
    """All k-subsets of [n] as masks, ascending."""
    out = []
    for combo in combinations(range(n), k):
        m = 0
        for b in combo:
            m |= 1 << b
        out.append(m)
    out.sort()
    return out


def _supersets_one_more(n: int, m: int) -> list[int]:
    full = (1 << n) - 1
    rest = full & ~m
    out = []
    t = rest
    while t:
        b = t & -t
        out.append(m | b)
        t ^= b
    out.sort()
    return out


@dataclass(frozen=True)
class LayerGraph:
    """Bipartite containment graph between layers k and k+1."""

    n: int
    k: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    @property
    def lower_degree(self) -> int:
        return self.n - self.k

    @property
    def upper_degree(self) -> int:
        return self.k + 1

    def edges(self) -> list[tuple[int, int]]:
        return [(m, s) for m in self.lower for s in _supersets_one_more(self.n, m)]


@dataclass(frozen=True)
class LayerMatching:
    """A matching between consecutive layers saturating one side.

    ``covers`` is "lower" when every k-subset is matched, "upper" when every
    (k+1)-subset is.
    """

    n: int
    k: int
    covers: str
    pairs: tuple[tuple[int, int], ...]  # (k-subset, (k+1)-superset)

    def as_map(self) -> dict[int, int]:
        if self.covers == "lower":
            return {a: b for a, b in self.pairs}
        return {b: a for a, b in self.pairs}


def layer_graph(n: int, k: int) -> LayerGraph:
    if not (2 <= n and 1 <= k <= n - 2):
        raise OutOfRangeError(f"need 1 <= k <= n-2, got n={n} k={k}")
    return LayerGraph(n=n, k=k, lower=tuple(layer(n, k)), upper=tuple(layer(n, k + 1)))


def _saturating_matching(n: int, lower: list[int], upper: list[int],
                         from_lower: bool) -> list[tuple[int, int]]:
    """Match every vertex of the prescribed side into the other layer."""
    upper_index = {m: i for i, m in enumerate(upper)}
    lower_index = {m: i for i, m in enumerate(lower)}
    if from_lower:
        adj = [[upper_index[s] for s in _supersets_one_more(n, m) if s in upper_index]
               for m in lower]
        size, match_l, _ = hopcroft_karp(len(lower), len(upper), adj)
        if size != len(lower):
            raise RuntimeError("layer matching failed to saturate the lower side")
        return [(lower[i], upper[match_l[i]]) for i in range(len(lower))]
    adj = [[] for _ in range(len(upper))]
    for i, m in enumerate(upper):
        subs = []
        s = (m - 1) & m
        while s:
            if s in lower_index:
                subs.append(lower_index[s])
            s = (s - 1) & m
        adj[i] = sorted(subs)
    size, match_l, _ = hopcroft_karp(len(upper), len(lower), adj)
    if size != len(upper):
        raise RuntimeError("layer matching failed to saturate the upper side")
    return [(lower[match_l[i]], upper[i]) for i in range(len(upper))]


def layer_matching(n: int, k: int) -> LayerMatching:
    """Hall matching between layers k and k+1.

    Saturates layer k when k <= floor(n/2) - 1, layer k+1 otherwise; both
    directions exist because the bipartite layer graph is biregular with the
    prescribed side no larger than the other.
    """
    lg = layer_graph(n, k)
    p = n // 2
    if k <= p - 1:
        pairs = _saturating_matching(n, list(lg.lower), list(lg.upper), True)
        covers = "lower"
    else:
        pairs = _saturating_matching(n, list(lg.lower), list(lg.upper), False)
        covers = "upper"
    return LayerMatching(n=n, k=k, covers=covers, pairs=tuple(sorted(pairs)))


def _is_antichain(masks) -> bool:
    ms = list(masks)
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            a, b = ms[i], ms[j]
            if a & b == a or a & b == b:
                return False
    return True


def normalize_independent_set(n: int, vertices) -> frozenset[int]:
    """Push an independent set into the middle layer, preserving its size.

    Repeatedly replaces the members in the lowest layer by their images
    under a fixed saturating layer matching (rising passes), then does the
    mirror from the top (falling passes). The result is a same-size
    independent subset of layer floor(n/2).
    """
    U = frozenset(vertices)
    for m in U:
        if not (0 < m < (1 << n) - 1):
            raise OutOfRangeError(f"mask {m} is not a nonempty proper subset")
    if not _is_antichain(U):
        raise NotIndependentError("input is not an antichain")
    p = n // 2
    cur = set(U)
    for k in range(1, p):
        phi = layer_matching(n, k)
        assert phi.covers == "lower"
        mapping = phi.as_map()
        in_layer = {m for m in cur if m.bit_count() == k}
        cur = (cur - in_layer) | {mapping[m] for m in in_layer}
        if len(cur) != len(U) or not _is_antichain(cur):
            raise RuntimeError("rising pass broke the antichain invariant")
    for k in range(n - 2, p - 1, -1):
        phi = layer_matching(n, k)
        assert phi.covers == "upper"
        mapping = phi.as_map()
        in_layer = {m for m in cur if m.bit_count() == k + 1}
        cur = (cur - in_layer) | {mapping[m] for m in in_layer}
        if len(cur) != len(U) or not _is_antichain(cur):
            raise RuntimeError("falling pass broke the antichain invariant")
    assert all(m.bit_count() == p for m in cur)
    return frozenset(cur)


def perfect_matching(n: int) -> list[tuple[int, int]]:
    """A perfect matching of the Boolean inclusion graph, 2^(n-1) - 1 edges.

    Odd n: match layer k to layer n-k by containment for each k < n/2 (the
    mirror layers have equal size and the containment graph between them is
    biregular, so a perfect matching exists). Even n: seed with the edge
    ({1}, [n] minus the last element), then stitch saturating matchings
    between consecutive layers on the not-yet-matched remainders.
    """
    if n < 3:
        raise OutOfRangeError("need n >= 3")
    full = (1 << n) - 1
    pairs: list[tuple[int, int]] = []
    if n % 2 == 1:
        for k in range(1, n // 2 + 1):
            lower = layer(n, k)
            upper = layer(n, n - k)
            upper_set = set(upper)
            upper_index = {m: i for i, m in enumerate(upper)}
            adj = []
            for m in lower:
                rest = full & ~m
                sups = []
                t = rest
                while t:
                    cand = m | t
                    if cand in upper_set:
                        sups.append(upper_index[cand])
                    t = (t - 1) & rest
                adj.append(sorted(sups))
            size, match_l, _ = hopcroft_karp(len(lower), len(upper), adj)
            if size != len(lower):
                raise RuntimeError("mirror-layer matching failed to saturate")
            pairs.extend((lower[i], upper[match_l[i]]) for i in range(len(lower)))
    else:
        seed_lo = 1
        seed_hi = full & ~(1 << (n - 1))
        pairs.append((seed_lo, seed_hi))
        matched = {seed_lo, seed_hi}
        dom = [m for m in layer(n, 1) if m != seed_lo]
        for k in range(1, n - 1):
            codomain = [m for m in layer(n, k + 1)
                        if not (k == n - 2 and m == seed_hi)]
            got = _saturating_matching(n, dom, codomain, True)
            pairs.extend(got)
            for a, b in got:
                matched.add(a)
                matched.add(b)
            dom = [m for m in layer(n, k + 1) if m not in matched]
    pairs.sort()
    expected = (1 << (n - 1)) - 1
    seen: set[int] = set()
    for a, b in pairs:
        if a & b != a or a == b or a in seen or b in seen:
            raise RuntimeError("constructed matching is not a matching of containments")
        seen.add(a)
        seen.add(b)
    if len(pairs) != expected or len(seen) != (1 << n) - 2:
        raise RuntimeError("constructed matching is not perfect")
    return pairs


def canonical_dominating_set(n: int) -> tuple[int, int]:
    """The two-vertex dominating set {first singleton, everything-but-first}."""
    if n < 3:
        raise OutOfRangeError("need n >= 3")
    full = (1 << n) - 1
    single = 1
    rest = full & ~1
    for m in range(1, full):
        if m in (single, rest):
            continue
        adj_single = m != single and ((m & single) == single or (m & single) == m)
        adj_rest = m != rest and ((m & rest) == rest or (m & rest) == m)
        if not (adj_single or adj_rest):
            raise RuntimeError(f"vertex {m} is not dominated")
    return (single, rest)


def canonical_maximum_chain(n: int) -> list[int]:
    """The nested chain {1} in {1,2} in ... in {1..n-1}; a maximum clique."""
    if n < 2:
        raise OutOfRangeError("need n >= 2")
    return [(1 << k) - 1 for k in range(1, n)]


def middle_layer_size(n: int) -> int:
    return comb(n, n // 2)
