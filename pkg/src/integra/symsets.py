"""Enumeration and counting of symmetric, identity-free connection sets."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .groups import FiniteGroup


@dataclass(frozen=True)
class InversePartition:
    """Non-identity elements split into involutions and inverse pairs (lo < hi)."""

    involutions: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]


def inverse_partition(g: FiniteGroup) -> InversePartition:
    invols = []
    pairs = []
    for i in range(g.order):
        if i == g.identity:
            continue
        j = g.inv[i]
        if j == i:
            invols.append(i)
        elif i < j:
            pairs.append((i, j))
    return InversePartition(tuple(invols), tuple(pairs))


def _lex_exact(g: FiniteGroup, size: int) -> Iterator[tuple[int, ...]]:
    """All symmetric size-k sets in lexicographic order of their sorted members.

    The DFS extends the sorted member tuple one position at a time; picking the
    low half of an inverse pair forces its partner into a pending list that
    must be emitted at its sorted position, so output order is truly
    lexicographic and the stream can be short-circuited at the first failure
    of any downstream predicate.
    """
    n = g.order
    ident = g.identity
    inv = g.inv

    def rec(acc: list[int], start: int, pending: tuple[int, ...], need: int):
        if need == 0 and not pending:
            yield tuple(acc)
            return
        bound = pending[0] if pending else n - 1
        for t in range(start, bound + 1):
            if t == ident:
                continue
            if pending and t == bound:
                acc.append(t)
                yield from rec(acc, t + 1, pending[1:], need)
                acc.pop()
                continue
            p = inv[t]
            if p == t:
                if need >= 1:
                    acc.append(t)
                    yield from rec(acc, t + 1, pending, need - 1)
                    acc.pop()
            elif p > t and need >= 2:
                new_pending = tuple(sorted(pending + (p,)))
                acc.append(t)
                yield from rec(acc, t + 1, new_pending, need - 2)
                acc.pop()

    if size >= 1:
        yield from rec([], 0, (), size)


def _conjugates(g: FiniteGroup, s: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    t = g.table
    inv = g.inv
    for c in range(g.order):
        yield tuple(sorted(t[t[inv[c]][x]][c] for x in s))


def enumerate_symmetric_sets(
    g: FiniteGroup, k: int, mode: str = "exact", dedup_conjugacy: bool = False
) -> Iterator[tuple[int, ...]]:
    """Stream symmetric identity-free sets of size k ("exact") or 1..k ("at_most").

    Sizes ascend in at_most mode and sets are lexicographic within a size. The
    dedup flag keeps only the lexicographically least member of each conjugacy
    orbit; it is a performance lever and never changes a membership verdict.
    """
    if k < 1:
        raise ValueError("set size must be at least 1")
    if mode not in ("exact", "at_most"):
        raise ValueError(f"unknown mode {mode!r}")
    sizes = range(1, k + 1) if mode == "at_most" else (k,)
    for size in sizes:
        for s in _lex_exact(g, size):
            if dedup_conjugacy and min(_conjugates(g, s)) != s:
                continue
            yield s


def count_symmetric_sets(g: FiniteGroup, k: int, mode: str = "exact") -> int:
    """Closed-form count: sum over a+2b = size of C(#involutions,a)*C(#pairs,b)."""
    if k < 1:
        raise ValueError("set size must be at least 1")
    if mode not in ("exact", "at_most"):
        raise ValueError(f"unknown mode {mode!r}")
    part = inverse_partition(g)
    ni = len(part.involutions)
    np_ = len(part.pairs)
    sizes = range(1, k + 1) if mode == "at_most" else (k,)
    total = 0
    for size in sizes:
        for b in range(size // 2 + 1):
            a = size - 2 * b
            total += comb(ni, a) * comb(np_, b)
    return total
