"""Independent brute-force reference computations for the test suite.

Nothing here imports the package: every count comes from scanning Sym(n)
or from the textbook definition.
"""
import itertools
import math


def divisors_by_trial(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_factors(k):
    k = abs(k)
    return [p for p in range(2, k + 1) if k % p == 0 and all(p % q for q in range(2, p))]


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def compose(p, q):
    return tuple(p[i] for i in q)


def perm_pow(p, k):
    n = len(p)
    if k < 0:
        inv = [0] * n
        for i, j in enumerate(p):
            inv[j] = i
        p, k = tuple(inv), -k
    out = tuple(range(n))
    for _ in range(k):
        out = compose(p, out)
    return out


def sym(n):
    return list(itertools.permutations(range(n)))


def order_dividing_brute(m, n):
    ident = tuple(range(n))
    return [p for p in sym(n) if perm_pow(p, m) == ident]


def fixed_points(p):
    return sum(1 for i, j in enumerate(p) if i == j)


def census_brute(m, n):
    counts = [0] * (n + 1)
    for p in order_dividing_brute(m, n):
        counts[fixed_points(p)] += 1
    return counts


def conjugators_brute(sigma, a, b):
    sa, sb = perm_pow(sigma, a), perm_pow(sigma, b)
    return [t for t in sym(len(sigma)) if compose(sa, t) == compose(t, sb)]


def transitive(gens, n):
    seen = {0}
    frontier = [0]
    for x in frontier:
        for g in gens:
            if g[x] not in seen:
                seen.add(g[x])
                frontier.append(g[x])
    return len(seen) == n


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def primitive_brute(gens, n):
    """No nontrivial proper partition of 0..n-1 is preserved by every generator."""
    for part in set_partitions(list(range(n))):
        if len(part) in (1, n):
            continue
        blocks = [frozenset(b) for b in part]
        if all(frozenset(g[x] for x in b) in blocks for g in gens for b in blocks):
            return False
    return True


def closure_order(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    for x in frontier:
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen)


def gelman_brute(a, b, n):
    ab = abs(a * b)
    return sum(d for d in range(1, n + 1) if n % d == 0 and math.gcd(d, ab) == 1)
