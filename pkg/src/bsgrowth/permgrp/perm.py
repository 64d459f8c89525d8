"""Permutations of {0, ..., n-1} in one-line notation, stored as tuples.

``compose(p, q)`` applies q first: ``compose(p, q)[i] == p[q[i]]``.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

Permutation = tuple[int, ...]

__all__ = [
    "Permutation",
    "check_perm",
    "identity",
    "compose",
    "inverse",
    "power",
    "cycles",
    "cycle_type",
    "from_cycles",
    "fix_count",
    "orbits",
    "is_transitive",
    "is_primitive",
    "minimal_block",
    "group_order",
    "is_alt_or_sym",
]


def check_perm(p: Sequence[int]) -> Permutation:
    p = tuple(p)
    if len(p) == 0 or sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation of 0..n-1: {p!r}")
    return p


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[i] for i in q)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def power(p: Permutation, k: int) -> Permutation:
    """p^k for any integer k; negative powers go through the inverse."""
    if k < 0:
        p, k = inverse(p), -k
    n = len(p)
    out = [0] * n
    for c in cycles(p):
        L = len(c)
        s = k % L
        for idx, x in enumerate(c):
            out[x] = c[(idx + s) % L]
    return tuple(out)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """All cycles including fixed points, each starting at its smallest point."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        c = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            c.append(j)
            j = p[j]
        out.append(tuple(c))
    return out


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(p)))


def from_cycles(n: int, cyc: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation of degree n from disjoint cycles, e.g. ``[(0, 1, 2)]``."""
    out = list(range(n))
    for c in cyc:
        for idx, x in enumerate(c):
            out[x] = c[(idx + 1) % len(c)]
    return check_perm(out)


def fix_count(p: Permutation) -> int:
    return sum(1 for i, j in enumerate(p) if i == j)


def _degree(gens: Sequence[Permutation], n: int) -> None:
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator of degree {len(g)} does not act on {n} points")


def orbits(gens: Sequence[Permutation], n: int) -> list[list[int]]:
    _degree(gens, n)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        for x in orb:
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
        out.append(sorted(orb))
    return out


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    return len(orbits(gens, n)) == 1


def minimal_block(gens: Sequence[Permutation], n: int, i: int) -> list[int]:
    """Smallest block of imprimitivity containing {0, i} (Atkinson's merge)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[i] = 0
    queue = [(0, i)]
    while queue:
        p, q = queue.pop()
        for g in gens:
            r, s = find(g[p]), find(g[q])
            if r != s:
                parent[s] = r
                queue.append((r, s))
    root = find(0)
    return [x for x in range(n) if find(x) == root]


def is_primitive(gens: Sequence[Permutation], n: int) -> bool:
    """True iff the (transitive) group has no block system besides the trivial ones."""
    if n < 2:
        raise ValueError("primitivity is tested for n >= 2")
    if not is_transitive(gens, n):
        raise ValueError("is_primitive needs a transitive group")
    return all(len(minimal_block(gens, n, i)) == n for i in range(1, n))


# ---------------------------------------------------------------------------
# Schreier-Sims


def _orbit_transversal(base_point, gens, n):
    """Orbit of base_point with u[b] mapping base_point to b."""
    ident = identity(n)
    trans = {base_point: ident}
    frontier = [base_point]
    for x in frontier:
        ux = trans[x]
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = compose(g, ux)
                frontier.append(y)
    return trans


def _strip(g, base, transversals, start):
    for i in range(start, len(base)):
        beta = g[base[i]]
        u = transversals[i].get(beta)
        if u is None:
            return g, i
        g = compose(inverse(u), g)
    return g, len(base)


def _stabilizer_chain(gens, n):
    ident = identity(n)
    gens = [g for g in gens if g != ident]
    base: list[int] = []
    strong: list[list[Permutation]] = []
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(next(x for x in range(n) if g[x] != x))
    for i in range(len(base)):
        strong.append([g for g in gens if all(g[b] == b for b in base[:i])])
    transversals = [_orbit_transversal(base[i], strong[i], n) for i in range(len(base))]

    i = len(base) - 1
    while i >= 0:
        restart = False
        for beta, u_beta in list(transversals[i].items()):
            for x in strong[i]:
                xb = x[beta]
                h = compose(inverse(transversals[i][xb]), compose(x, u_beta))
                if h == ident:
                    continue
                h, j = _strip(h, base, transversals, i + 1)
                if j < len(base) or h != ident:
                    if j == len(base):
                        base.append(next(y for y in range(n) if h[y] != y))
                        strong.append([])
                        transversals.append({})
                    for level in range(i + 1, j + 1):
                        strong[level].append(h)
                        transversals[level] = _orbit_transversal(base[level], strong[level], n)
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return base, transversals


def group_order(gens: Sequence[Permutation], n: int) -> int:
    """Order of the group generated by ``gens`` (practical up to n ~ 20)."""
    _degree(gens, n)
    _, transversals = _stabilizer_chain(list(gens), n)
    return math.prod(len(t) for t in transversals)


def is_alt_or_sym(gens: Sequence[Permutation], n: int) -> bool:
    if n < 3:
        raise ValueError("needs n >= 3")
    _degree(gens, n)
    if not is_transitive(gens, n):
        return False
    order = group_order(gens, n)
    full = math.factorial(n)
    return order == full or 2 * order == full
