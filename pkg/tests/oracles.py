"""Independent brute-force oracles.  Nothing here imports wilfglue."""

import itertools
import math
from functools import reduce


def sieve(gens, limit):
    """Boolean membership table of <gens> on [0, limit] by dynamic programming."""
    table = [False] * (limit + 1)
    table[0] = True
    for x in range(1, limit + 1):
        table[x] = any(g <= x and table[x - g] for g in gens)
    return table


def ns_invariants(gens):
    """Frobenius number, gaps, sporadic elements, pseudo-Frobenius numbers."""
    gens = sorted(gens)
    limit = gens[0] * gens[-1] * 2 + 2 * gens[-1]
    table = sieve(gens, limit)
    holes = [x for x in range(limit + 1) if not table[x]]
    F = max(holes) if holes else -1
    sporadic = [x for x in range(max(F, 0)) if table[x]]
    pf = [x for x in holes
          if all(table[x + s] for s in range(1, limit - x + 1) if table[s])]
    return {"F": F, "gaps": holes, "sporadic": sporadic, "pf": pf,
            "apery": [min(x for x in range(limit + 1) if table[x] and x % gens[0] == r)
                      for r in range(gens[0])]}


def frobenius_by_sieve(gens):
    """Largest non-member, using F <= (min - 1)(max - 1) - 1."""
    gens = sorted(gens)
    if gens[0] == 1:
        return -1
    table = sieve(gens, (gens[0] - 1) * (gens[-1] - 1))
    return max(x for x, inside in enumerate(table) if not inside)


def minimal_by_brute_force(gens):
    gens = sorted(set(gens))
    out = []
    for g in gens:
        others = [h for h in gens if h != g]
        if not others or not sieve(others, g)[g]:
            out.append(g)
    return out


def gap_set_counts(max_genus):
    """Count numerical semigroups per genus by testing every candidate gap set.

    A set G of g positive integers is the gap set of a numerical semigroup iff
    its complement is closed under addition; all gaps lie in [1, 2g - 1].
    """
    counts = []
    for g in range(max_genus + 1):
        total = 0
        universe = range(1, 2 * g)
        for G in itertools.combinations(universe, g):
            gs = set(G)
            top = 2 * g + 1
            ok = all((x + y) not in gs
                     for x in range(1, top) if x not in gs
                     for y in range(x, top) if y not in gs and x + y < top)
            total += ok
        counts.append(total)
    return counts


def affine_members_by_combinations(gens, max_coeff):
    """Every sum of generators with coefficients in [0, max_coeff]."""
    out = set()
    n = len(gens[0])
    for coeffs in itertools.product(range(max_coeff + 1), repeat=len(gens)):
        out.add(tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(n)))
    return out


def det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)))


def gcd_all(xs):
    return reduce(math.gcd, xs)
