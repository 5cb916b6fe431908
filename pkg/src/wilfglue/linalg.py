"""Exact integer/rational linear algebra on small dense matrices (lists of rows)."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = reduce(math.gcd, v, 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def _rref(rows, ncols):
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    return len(_rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Integer basis (primitive vectors) of {x : row . x = 0 for every row}."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    reduced, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        scale = reduce(lambda a, b: a * b // math.gcd(a, b),
                       (x.denominator for x in v), 1)
        basis.append(primitive([int(x * scale) for x in v]))
    return basis


def hermite_rows(rows, ncols):
    """Row-style Hermite normal form: an echelon Z-basis of the row lattice.

    Pivots are positive; entries above each pivot are reduced into
    ``[0, pivot)``; zero rows are dropped.
    """
    m = [list(map(int, row)) for row in rows if any(row)]
    r = 0
    pivots = []
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[i0] = m[i0], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-a for a in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
    return [tuple(row) for row in m[:r]]


def in_row_lattice(hnf, x):
    """Is ``x`` an integer combination of the rows of a Hermite basis?"""
    x = list(x)
    for row in hnf:
        c = next(j for j, a in enumerate(row) if a)
        q, rem = divmod(x[c], row[c])
        if rem:
            return False
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return not any(x)
