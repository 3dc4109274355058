"""Independent floating-point spectrum oracle for abelian groups."""

from __future__ import annotations

import cmath
from itertools import product

from integra.groups import FiniteGroup, from_table, is_abelian

IMAG_TOL = 1e-9
INT_TOL = 1e-6


def abelian_basis(g: FiniteGroup) -> list[int]:
    """Element indices b1..br with g the internal direct product of the <bi>."""
    if not is_abelian(g):
        raise ValueError("basis extraction needs an abelian group")
    if g.order == 1:
        return []
    orders = [g.element_order(i) for i in range(g.order)]
    g1 = max(range(g.order), key=lambda i: orders[i])
    m = orders[g1]
    cyc = []
    x = g.identity
    for _ in range(m):
        cyc.append(x)
        x = g.mul(x, g1)
    if len(cyc) == g.order:
        return [g1]
    reps_of: dict[int, int] = {}
    for e in range(g.order):
        reps_of[e] = min(g.mul(e, c) for c in cyc)
    reps = sorted(set(reps_of.values()))
    idx = {r: i for i, r in enumerate(reps)}
    table = [
        [idx[reps_of[g.mul(a, b)]] for b in reps]
        for a in reps
    ]
    doc = {
        "format": "ftg-1",
        "order": len(reps),
        "identity": 0,
        "table": table,
        "names": [g.names[r] for r in reps],
    }
    quotient = from_table(doc, label="quotient")
    basis = [g1]
    for bq in abelian_basis(quotient):
        h = reps[bq]
        q = quotient.element_order(bq)
        t = cyc.index(g.power(h, q))
        if t % q != 0:
            raise AssertionError("lift correction is not divisible")
        lifted = g.mul(h, g.power(g1, (m - t // q) % m))
        if g.element_order(lifted) != q:
            raise AssertionError("lifted basis element has the wrong order")
        basis.append(lifted)
    return basis


def coordinates(g: FiniteGroup, basis: list[int]) -> tuple[dict[int, tuple[int, ...]], list[int]]:
    """Map each element to its exponent vector over the basis."""
    orders = [g.element_order(b) for b in basis]
    coords: dict[int, tuple[int, ...]] = {}
    for vec in product(*[range(d) for d in orders]):
        e = g.identity
        for b, x in zip(basis, vec):
            e = g.mul(e, g.power(b, x))
        coords[e] = vec
    if len(coords) != g.order:
        raise AssertionError("basis does not span the group")
    return coords, orders


def character_eigenvalues(g: FiniteGroup, s) -> list[float]:
    """All n eigenvalues of Cay(g, s) as character sums; asserts they are real."""
    basis = abelian_basis(g)
    coords, orders = coordinates(g, basis)
    eigs: list[float] = []
    for y in product(*[range(d) for d in orders]):
        total = 0j
        for t in s:
            phase = sum(x * w / d for x, w, d in zip(coords[t], y, orders))
            total += cmath.exp(2j * cmath.pi * phase)
        if abs(total.imag) >= IMAG_TOL:
            raise AssertionError(f"character sum not real: {total}")
        eigs.append(total.real)
    return eigs


def oracle_integral(g: FiniteGroup, s) -> bool:
    """True when every character-sum eigenvalue is within INT_TOL of an integer."""
    return all(abs(v - round(v)) < INT_TOL for v in character_eigenvalues(g, s))


def oracle_spectrum(g: FiniteGroup, s) -> dict[int, int]:
    """Rounded eigenvalue multiset; only meaningful when oracle_integral holds."""
    counts: dict[int, int] = {}
    for v in character_eigenvalues(g, s):
        counts[round(v)] = counts.get(round(v), 0) + 1
    return counts
