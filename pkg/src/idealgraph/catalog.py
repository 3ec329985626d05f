"""Ready-made small semigroups and exhaustive enumeration of tiny ones."""

from __future__ import annotations

from collections.abc import Iterator

from .semigroup import CayleyTable


def right_zero(n: int) -> CayleyTable:
    """x*y = y. Every singleton is a minimal left ideal."""
    row = tuple(range(n))
    return CayleyTable(n, tuple(row for _ in range(n)))


def left_zero(n: int) -> CayleyTable:
    """x*y = x. The only left ideal is S itself."""
    return CayleyTable(n, tuple(tuple(i for _ in range(n)) for i in range(n)))


def null_semigroup(n: int) -> CayleyTable:
    """x*y = 0 for all x, y (element 0 is the zero)."""
    return CayleyTable(n, tuple(tuple(0 for _ in range(n)) for _ in range(n)))


def cyclic_group(n: int) -> CayleyTable:
    return CayleyTable(n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def right_zero_with_identity(n: int) -> CayleyTable:
    """Right-zero semigroup on n elements with an adjoined identity (index n)."""
    rows = []
    for i in range(n):
        rows.append(tuple(list(range(n)) + [i]))
    rows.append(tuple(list(range(n)) + [n]))
    return CayleyTable(n + 1, tuple(rows))


def rectangular_band(r: int, c: int) -> CayleyTable:
    """(a,b)*(x,y) = (a,y) on r*c elements; completely simple with c minimal left ideals."""
    n = r * c
    def mul(i, j):
        return (i // c) * c + (j % c)
    return CayleyTable(n, tuple(tuple(mul(i, j) for j in range(n)) for i in range(n)))


def enumerate_associative_tables(m: int) -> Iterator[CayleyTable]:
    """All labeled associative m x m tables, in lexicographic order.

    Backtracking with incremental associativity pruning; practical for
    m <= 4 (counts 1, 8, 113, 3492).
    """
    table = [[-1] * m for _ in range(m)]

    def consistent() -> bool:
        for x in range(m):
            tx = table[x]
            for y in range(m):
                xy = tx[y]
                ty = table[y]
                for z in range(m):
                    yz = ty[z]
                    if xy >= 0 and yz >= 0:
                        l = table[xy][z]
                        r = tx[yz]
                        if l >= 0 and r >= 0 and l != r:
                            return False
        return True

    cells = [(i, j) for i in range(m) for j in range(m)]

    def rec(k: int) -> Iterator[CayleyTable]:
        if k == len(cells):
            yield CayleyTable(m, tuple(tuple(row) for row in table))
            return
        i, j = cells[k]
        for v in range(m):
            table[i][j] = v
            if consistent():
                yield from rec(k + 1)
        table[i][j] = -1

    yield from rec(0)


def small_semigroup_corpus(max_order: int = 4) -> list[CayleyTable]:
    """Every labeled semigroup of order <= min(max_order, 4).

    Deterministic; the order-4 stratum alone has 3492 tables, which more
    than covers sampling-based requirements.
    """
    out: list[CayleyTable] = []
    for m in range(1, min(max_order, 4) + 1):
        out.extend(enumerate_associative_tables(m))
    return out
