"""The inclusion graph of a family of sets.

Vertices are bit masks; two vertices are adjacent iff one strictly contains
the other. Generic mode carries an explicit vertex list (left-ideal masks),
Boolean mode represents all nonempty proper subsets of [n] implicitly, so
graphs with 2^n - 2 vertices stay cheap until an algorithm genuinely needs
the vertex set in memory.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations

from .errors import OutOfRangeError, TooLargeError, TruncatedFamilyError, UnknownVertexError
from .semigroup import IdealFamily

DEFAULT_VERTEX_CAP = 1 << 22
MAX_BOOLEAN_N = 62


def vertex_cap() -> int:
    """Hard cap on materialized vertex counts; IDEALGRAPH_MAX_VERTICES overrides."""
    env = os.environ.get("IDEALGRAPH_MAX_VERTICES")
    if env:
        return int(env)
    return DEFAULT_VERTEX_CAP


@dataclass
class DenseGraph:
    """Materialized graph: index-based adjacency bitsets, optional vertex masks.

    ``masks`` is present for inclusion graphs (index -> set mask, sorted by
    (popcount, mask)) and None for raw test graphs with no containment
    structure.
    """

    adj: list[int]
    masks: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.adj)

    def neighbors_of(self, i: int) -> list[int]:
        out = []
        m = self.adj[i]
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        return out

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edge_list(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.size):
            m = self.adj[i] >> (i + 1)
            j = i + 1
            while m:
                b = m & -m
                out.append((i, j + b.bit_length() - 1))
                m ^= b
        return out

    def complement(self) -> "DenseGraph":
        full = (1 << self.size) - 1
        return DenseGraph(adj=[full & ~self.adj[i] & ~(1 << i) for i in range(self.size)],
                          masks=self.masks)


def dense_from_edges(n_vertices: int, edges) -> DenseGraph:
    """Raw graph constructor for arbitrary adjacency (used to cross-check solvers)."""
    adj = [0] * n_vertices
    for u, v in edges:
        if u == v:
            raise ValueError("self-loops are not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return DenseGraph(adj=adj)


def _mask_sort_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


class InclusionGraph:
    """Inclusion graph over set masks, in ``boolean`` or ``generic`` mode."""

    def __init__(self, mode: str, n: int | None = None,
                 vertices: tuple[int, ...] | None = None):
        if mode == "boolean":
            if n is None:
                raise ValueError("boolean mode needs n")
            self.n = n
            self._vertices = None
        elif mode == "generic":
            self.n = None
            self._vertices = tuple(sorted(set(vertices or ()), key=_mask_sort_key))
        else:
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self._index: dict[int, int] | None = None
        self._dense: DenseGraph | None = None

    @property
    def vertex_count(self) -> int:
        if self.mode == "boolean":
            return (1 << self.n) - 2
        return len(self._vertices)

    def vertices(self):
        """Masks in canonical (popcount, mask) order."""
        if self.mode == "generic":
            yield from self._vertices
            return
        n = self.n
        limit = 1 << n
        for k in range(1, n):
            m = (1 << k) - 1
            while m < limit:  # Gosper's hack: next mask of equal popcount
                yield m
                c = m & -m
                r = m + c
                m = (((r ^ m) >> 2) // c) | r

    def has_vertex(self, mask: int) -> bool:
        if self.mode == "boolean":
            return 0 < mask < (1 << self.n) - 1
        return mask in self._vertex_index()

    def _vertex_index(self) -> dict[int, int]:
        if self._index is None:
            self._index = {m: i for i, m in enumerate(self.vertices())}
        return self._index

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        if not (self.has_vertex(u) and self.has_vertex(v)):
            raise UnknownVertexError(f"{u} or {v} not in graph")
        uv = u & v
        return uv == u or uv == v

    def neighbors(self, v: int) -> list[int]:
        """Neighbor masks of v, sorted canonically."""
        if not self.has_vertex(v):
            raise UnknownVertexError(str(v))
        if self.mode == "generic":
            return [u for u in self._vertices
                    if u != v and ((u & v) == u or (u & v) == v)]
        below = []
        s = (v - 1) & v
        while s:
            below.append(s)
            s = (s - 1) & v
        full = (1 << self.n) - 1
        above = []
        rest = full & ~v
        t = (rest - 1) & rest  # skip t == rest, whose union with v is the full set
        while t:
            above.append(v | t)
            t = (t - 1) & rest
        return sorted(below, key=_mask_sort_key) + sorted(above, key=_mask_sort_key)

    def degree(self, v: int) -> int:
        if not self.has_vertex(v):
            raise UnknownVertexError(str(v))
        if self.mode == "generic":
            return len(self.neighbors(v))
        k = v.bit_count()
        n = self.n
        # Count explicitly while cheap; the closed form covers huge layers.
        if (1 << k) + (1 << (n - k)) <= (1 << 24):
            count = 0
            s = (v - 1) & v
            while s:
                count += 1
                s = (s - 1) & v
            full = (1 << n) - 1
            rest = full & ~v
            t = (rest - 1) & rest
            while t:
                count += 1
                t = (t - 1) & rest
            return count
        return ((1 << k) - 2) + ((1 << (n - k)) - 2)

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in self.vertices()) // 2

    def dense(self, cap: int | None = None) -> DenseGraph:
        """Materialize adjacency bitsets; refuses above the vertex cap."""
        if self._dense is not None:
            return self._dense
        limit = cap if cap is not None else vertex_cap()
        if self.vertex_count > limit:
            raise TooLargeError(
                f"{self.vertex_count} vertices exceed the cap of {limit}")
        masks = tuple(self.vertices())
        idx = {m: i for i, m in enumerate(masks)}
        adj = [0] * len(masks)
        if self.mode == "boolean":
            for m in masks:
                i = idx[m]
                s = (m - 1) & m
                while s:
                    j = idx[s]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                    s = (s - 1) & m
        else:
            for a, b in combinations(range(len(masks)), 2):
                u, v = masks[a], masks[b]
                uv = u & v
                if uv == u or uv == v:
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
        self._dense = DenseGraph(adj=adj, masks=masks)
        return self._dense


def build_from_family(family: IdealFamily) -> InclusionGraph:
    """One vertex per nontrivial left ideal, edges by strict containment."""
    if family.truncated:
        raise TruncatedFamilyError("family was truncated; graph would be incomplete")
    return InclusionGraph("generic", vertices=family.masks)


def build_boolean(n: int) -> InclusionGraph:
    """Containment graph on the nonempty proper subsets of an n-element set."""
    if not 2 <= n <= MAX_BOOLEAN_N:
        raise OutOfRangeError(f"n must be in [2, {MAX_BOOLEAN_N}], got {n}")
    return InclusionGraph("boolean", n=n)


def vertex_degree(g: InclusionGraph, v: int) -> int:
    return g.degree(v)


def minimal_ideal_coordinates(family: IdealFamily) -> tuple[int, tuple[int, ...]]:
    """Relabel each ideal as the subset of minimal ideals it is a union of.

    Returns (number of minimal ideals, relabeled vertex masks in canonical
    order). Raises ValueError when some ideal is not a union of minimal
    ideals, i.e. the family does not live in the Boolean model.
    """
    minimals = family.minimal_masks
    n = len(minimals)
    out = []
    for ideal in family.ideals:
        sub = 0
        union = 0
        for i, mm in enumerate(minimals):
            if mm & ideal.members == mm:
                sub |= 1 << i
                union |= mm
        if union != ideal.members:
            raise ValueError(
                f"ideal {ideal.members:#x} is not a union of minimal ideals")
        out.append(sub)
    return n, tuple(sorted(out, key=_mask_sort_key))


def _vertex_name(mask: int, boolean_n: int | None) -> str:
    bits = [b for b in range(mask.bit_length()) if (mask >> b) & 1]
    if boolean_n is not None:
        labels = [str(b + 1) for b in bits]
        sep = "" if boolean_n <= 9 else "_"
    else:
        labels = [str(b) for b in bits]
        sep = "_"
    return "I_" + sep.join(labels)


def export_graph(g: InclusionGraph, fmt: str = "json") -> str:
    """Deterministic JSON or DOT rendering of the graph."""
    dense = g.dense()
    masks = dense.masks
    edges = dense.edge_list()
    if fmt == "json":
        doc = {
            "mode": g.mode,
            "n": g.n,
            "vertices": [
                {"id": i, "mask": m, "size": m.bit_count()}
                for i, m in enumerate(masks)
            ],
            "edges": [[u, v] for u, v in edges],
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "dot":
        lines = ["graph In {"]
        for m in masks:
            lines.append(f"  {_vertex_name(m, g.n)};")
        for u, v in edges:
            lines.append(f"  {_vertex_name(masks[u], g.n)} -- {_vertex_name(masks[v], g.n)};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
