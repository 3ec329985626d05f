"""Finite semigroups as Cayley tables, and their left-ideal structure.

Elements are 0-based indices into an m x m operation table. Subsets of the
semigroup are bit vectors: element ``i`` corresponds to bit ``i``, so set
operations are integer bit operations throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAssociativeError, TableSyntaxError

DEFAULT_IDEAL_CAP = 1_000_000


@dataclass(frozen=True)
class CayleyTable:
    """A finite semigroup given by its multiplication table.

    ``rows[a][b]`` is the index of the product a*b. Associativity is checked
    at construction, never assumed.
    """

    order: int
    rows: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        m = self.order
        if m <= 0:
            raise TableSyntaxError("order must be positive")
        if len(self.rows) != m or any(len(r) != m for r in self.rows):
            raise TableSyntaxError(f"table must be {m}x{m}")
        for r in self.rows:
            for x in r:
                if not 0 <= x < m:
                    raise TableSyntaxError(f"entry {x} out of range [0, {m})")
        if self.labels is not None:
            if len(self.labels) != m:
                raise TableSyntaxError("label count must equal order")
            if len(set(self.labels)) != m:
                raise TableSyntaxError("labels must be distinct")
        _check_associative(m, self.rows)

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1


def _check_associative(m: int, rows) -> None:
    # Naive triple loop; fine at desk scale (m up to a few hundred).
    for a in range(m):
        ra = rows[a]
        for b in range(m):
            ab = ra[b]
            rab = rows[ab]
            rb = rows[b]
            for c in range(m):
                if rab[c] != ra[rb[c]]:
                    raise NotAssociativeError(a, b, c)


def parse_cayley_table(text: str) -> CayleyTable:
    """Parse the plain-text table format.

    Lines starting with ``#`` are comments. The first data line is the order
    m, followed by m lines of m whitespace-separated 0-based indices, and an
    optional final line ``labels: a b c ...``.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise TableSyntaxError("empty input")
    try:
        m = int(data[0])
    except ValueError:
        raise TableSyntaxError(f"first line must be the order, got {data[0]!r}") from None
    if m <= 0:
        raise TableSyntaxError("order must be positive")
    if len(data) < 1 + m:
        raise TableSyntaxError(f"expected {m} table rows, got {len(data) - 1}")
    rows = []
    for i in range(1, 1 + m):
        toks = data[i].split()
        if len(toks) != m:
            raise TableSyntaxError(f"row {i - 1} has {len(toks)} entries, expected {m}")
        try:
            row = tuple(int(t) for t in toks)
        except ValueError:
            raise TableSyntaxError(f"row {i - 1} has a non-integer entry") from None
        rows.append(row)
    labels = None
    rest = data[1 + m:]
    if rest:
        if len(rest) > 1 or not rest[0].startswith("labels:"):
            raise TableSyntaxError("unexpected trailing content")
        labels = tuple(rest[0][len("labels:"):].split())
    return CayleyTable(order=m, rows=tuple(rows), labels=labels)


def serialize_cayley_table(t: CayleyTable) -> str:
    """Inverse of :func:`parse_cayley_table`, normalized to single spaces and LF."""
    out = [str(t.order)]
    for row in t.rows:
        out.append(" ".join(str(x) for x in row))
    if t.labels is not None:
        out.append("labels: " + " ".join(t.labels))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class LeftIdeal:
    """A subset closed under left multiplication, as a bit vector."""

    members: int
    size: int
    nontrivial: bool

    @staticmethod
    def from_mask(t: CayleyTable, mask: int) -> "LeftIdeal":
        return LeftIdeal(mask, _popcount(mask), mask != t.full_mask)


@dataclass(frozen=True)
class LClass:
    """An equivalence class of elements generating the same principal left ideal."""

    representative: int
    members: int


@dataclass(frozen=True)
class IdealFamily:
    """All nontrivial left ideals of a semigroup (or a capped prefix of them).

    ``ideals`` is deduplicated and sorted by (cardinality, mask).
    ``minimal_indices`` / ``maximal_indices`` point at the minimal and maximal
    members of the family under inclusion.
    """

    order: int
    ideals: tuple[LeftIdeal, ...]
    minimal_indices: tuple[int, ...]
    maximal_indices: tuple[int, ...]
    truncated: bool

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(i.members for i in self.ideals)

    @property
    def minimal_masks(self) -> tuple[int, ...]:
        return tuple(self.ideals[i].members for i in self.minimal_indices)

    @property
    def maximal_masks(self) -> tuple[int, ...]:
        return tuple(self.ideals[i].members for i in self.maximal_indices)


def _popcount(x: int) -> int:
    return x.bit_count()


def principal_left_ideal(t: CayleyTable, a: int) -> LeftIdeal:
    """Smallest left ideal containing ``a``: S*a together with a itself."""
    if not 0 <= a < t.order:
        raise ValueError(f"element {a} out of range")
    return LeftIdeal.from_mask(t, _principal_mask(t, a))


def _principal_mask(t: CayleyTable, a: int) -> int:
    mask = 1 << a
    for s in range(t.order):
        mask |= 1 << t.rows[s][a]
    return mask


def is_left_ideal(t: CayleyTable, mask: int) -> bool:
    """True when the nonempty subset ``mask`` absorbs left multiplication."""
    if mask == 0:
        return False
    m = mask
    while m:
        b = m & -m
        a = b.bit_length() - 1
        for s in range(t.order):
            if not (mask >> t.rows[s][a]) & 1:
                return False
        m ^= b
    return True


def l_classes(t: CayleyTable) -> list[LClass]:
    """Partition of the elements by equality of their principal left ideals."""
    by_ideal: dict[int, int] = {}
    for a in range(t.order):
        key = _principal_mask(t, a)
        by_ideal[key] = by_ideal.get(key, 0) | (1 << a)
    classes = [
        LClass(representative=(members & -members).bit_length() - 1, members=members)
        for members in by_ideal.values()
    ]
    classes.sort(key=lambda c: c.representative)
    return classes


def enumerate_left_ideals(t: CayleyTable, cap: int = DEFAULT_IDEAL_CAP) -> IdealFamily:
    """All nontrivial left ideals, by closing principal ideals under union.

    Every left ideal is a union of principal left ideals, so the union
    closure of the distinct principal ideals is the whole family. S itself
    is excluded. Stops with ``truncated=True`` once ``cap`` distinct
    nontrivial ideals have been found.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    full = t.full_mask
    principals = sorted({_principal_mask(t, a) for a in range(t.order)})
    found: set[int] = set(p for p in principals if p != full)
    truncated = len(found) > cap
    if truncated:
        found = set(sorted(found)[:cap])
    queue = sorted(found)
    while queue and not truncated:
        x = queue.pop()
        for p in principals:
            y = x | p
            if y != full and y not in found:
                if len(found) >= cap:
                    truncated = True
                    break
                found.add(y)
                queue.append(y)
    masks = sorted(found, key=lambda m: (_popcount(m), m))
    ideals = tuple(LeftIdeal.from_mask(t, m) for m in masks)
    minimal = []
    maximal = []
    for i, mi in enumerate(masks):
        if not any(mj != mi and mj & mi == mj for mj in masks):
            minimal.append(i)
        if not any(mj != mi and mj & mi == mi for mj in masks):
            maximal.append(i)
    return IdealFamily(
        order=t.order,
        ideals=ideals,
        minimal_indices=tuple(minimal),
        maximal_indices=tuple(maximal),
        truncated=truncated,
    )


def is_maximal_left_ideal(t: CayleyTable, k: LeftIdeal | int) -> bool:
    """Maximality test: a left ideal is maximal iff its complement is one L-class."""
    mask = k.members if isinstance(k, LeftIdeal) else k
    if not is_left_ideal(t, mask) or mask == t.full_mask:
        raise ValueError("argument must be a nontrivial left ideal")
    rest = t.full_mask & ~mask
    for c in l_classes(t):
        if c.members == rest:
            return True
    return False


def _two_sided_closure(t: CayleyTable, a: int) -> int:
    """Smallest two-sided ideal containing ``a``."""
    mask = 1 << a
    stack = [a]
    while stack:
        x = stack.pop()
        for s in range(t.order):
            for y in (t.rows[s][x], t.rows[x][s]):
                if not (mask >> y) & 1:
                    mask |= 1 << y
                    stack.append(y)
    return mask


def idempotents(t: CayleyTable) -> list[int]:
    return [e for e in range(t.order) if t.rows[e][e] == e]


def is_completely_simple(t: CayleyTable) -> bool:
    """True when S has no proper two-sided ideal and a primitive idempotent.

    An idempotent e is primitive when no other idempotent f satisfies
    ef = fe = f.
    """
    full = t.full_mask
    for a in range(t.order):
        if _two_sided_closure(t, a) != full:
            return False
    es = idempotents(t)
    for e in es:
        if not any(
            f != e and t.rows[e][f] == f and t.rows[f][e] == f for f in es
        ):
            return True
    return False
