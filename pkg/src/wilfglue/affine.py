"""Affine semigroups in N^n: cone geometry, generated lattice, membership."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionMismatch, SemigroupError, ZeroGenerator

log = logging.getLogger(__name__)

MAX_CONE_DIM = 4

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone kept in both descriptions.

    Points satisfy ``e . x == 0`` for every row of ``equations`` and
    ``f . x >= 0`` for every facet normal.  ``rays`` are the primitive
    extreme rays.  Equations are stored in Hermite form so equal cones
    compare equal.
    """

    dim: int
    equations: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    rays: tuple[Vector, ...]

    def contains(self, x) -> bool:
        return (all(_dot(e, x) == 0 for e in self.equations)
                and all(_dot(f, x) >= 0 for f in self.facets))

    def is_orthant(self) -> bool:
        unit = {tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)}
        return not self.equations and set(self.facets) == unit

    def to_dict(self) -> dict:
        return {"equations": [list(e) for e in self.equations],
                "facets": [list(f) for f in self.facets],
                "rays": [list(r) for r in self.rays]}


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def compute_cone(gens: Sequence[Vector], n: int) -> Cone:
    """Facets and extreme rays of cone(gens), for n <= 4.

    Within the span of the generators a facet normal is orthogonal to
    rank-1 independent generators and to the orthogonal complement of the
    span, so every (rank-1)-subset is tried and the valid normals kept.
    """
    if n > MAX_CONE_DIM:
        raise SemigroupError(f"cone geometry is limited to n <= {MAX_CONE_DIM}")
    gens = [tuple(g) for g in gens]
    r = linalg.rank(gens, n)
    complement = linalg.nullspace(gens, n)
    facets = set()
    for subset in itertools.combinations(gens, r - 1):
        if linalg.rank(list(subset), n) != r - 1:
            continue
        normal = linalg.nullspace(list(subset) + complement, n)
        if len(normal) != 1:
            continue
        f = normal[0]
        values = [_dot(f, g) for g in gens]
        if all(v >= 0 for v in values):
            facets.add(f)
        elif all(v <= 0 for v in values):
            facets.add(tuple(-a for a in f))
    facets = sorted(facets)
    rays = set()
    for g in gens:
        tight = [f for f in facets if _dot(f, g) == 0]
        if linalg.rank(tight + complement, n) == n - 1:
            rays.add(linalg.primitive(g))
    equations = linalg.hermite_rows(complement, n)
    return Cone(n, tuple(equations), tuple(facets), tuple(sorted(rays)))


@dataclass(frozen=True)
class AffineSemigroup:
    """Submonoid of N^n generated by finitely many nonzero vectors."""

    dim: int
    generators: tuple[Vector, ...]
    content: int = 1
    notes: tuple[str, ...] = field(default=(), compare=False)

    @cached_property
    def rank(self) -> int:
        return linalg.rank(list(self.generators), self.dim)

    @property
    def non_degenerate(self) -> bool:
        return self.rank == self.dim

    @cached_property
    def cone(self) -> Cone:
        return compute_cone(self.generators, self.dim)

    @cached_property
    def lattice(self) -> tuple[Vector, ...]:
        return tuple(linalg.hermite_rows(self.generators, self.dim))

    @cached_property
    def minimal_generators(self) -> tuple[Vector, ...]:
        out = []
        for i, g in enumerate(self.generators):
            rest = self.generators[:i] + self.generators[i + 1:]
            if not _representable(rest, g):
                out.append(g)
        return tuple(out)

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def __contains__(self, x) -> bool:
        return member(self, x)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "generators": [list(g) for g in self.generators],
            "content": self.content,
            "rank": self.rank,
            "embedding_dimension": self.embedding_dimension,
            "cone": self.cone.to_dict(),
            "lattice": [list(v) for v in self.lattice],
            "notes": list(self.notes),
        }


def build_affine(generators: Iterable[Sequence[int]], normalize: bool = True) -> AffineSemigroup:
    """Validate, deduplicate and (optionally) divide out the content.

    Every adjustment is recorded in ``notes`` and logged.
    """
    gens = [tuple(int(a) for a in g) for g in generators]
    if not gens:
        raise SemigroupError("at least one generator is required")
    n = len(gens[0])
    if n == 0 or any(len(g) != n for g in gens):
        raise DimensionMismatch("generators must share one positive dimension")
    if any(a < 0 for g in gens for a in g):
        raise SemigroupError("generator entries must be natural numbers")
    if any(not any(g) for g in gens):
        raise ZeroGenerator("zero vector is not a valid generator")
    notes = []
    unique = list(dict.fromkeys(gens))
    if len(unique) != len(gens):
        notes.append(f"collapsed {len(gens) - len(unique)} duplicate generator(s)")
    content = reduce(math.gcd, (a for g in unique for a in g))
    if content != 1 and normalize:
        notes.append(f"content {content} divided out")
        unique = [tuple(a // content for a in g) for g in unique]
        content = 1
    elif content != 1:
        notes.append(f"content is {content}")
    for note in notes:
        log.warning("build_affine: %s", note)
    return AffineSemigroup(n, tuple(unique), content, tuple(notes))


def _representable(gens: Sequence[Vector], x: Sequence[int]) -> bool:
    x = tuple(x)
    if not any(x):
        return True
    gens = [g for g in gens if all(a <= b for a, b in zip(g, x))]
    memo: dict = {}

    def rec(i, rem):
        if not any(rem):
            return True
        if i == len(gens):
            return False
        key = (i, rem)
        if key in memo:
            return memo[key]
        g = gens[i]
        cmax = min(r // a for r, a in zip(rem, g) if a > 0)
        result = False
        for c in range(cmax, -1, -1):
            if rec(i + 1, tuple(r - c * a for r, a in zip(rem, g))):
                result = True
                break
        memo[key] = result
        return result

    return rec(0, x)


def member(S: AffineSemigroup, x: Sequence[int]) -> bool:
    """Exact decision of x in <S> by memoised search over coefficients."""
    if len(x) != S.dim or any(a < 0 for a in x):
        return False
    return _representable(S.generators, x)


def cone_contains(S: AffineSemigroup, x) -> bool:
    return S.cone.contains(x)


def lattice_contains(S: AffineSemigroup, x) -> bool:
    return linalg.in_row_lattice(S.lattice, x)


@dataclass(frozen=True)
class GluabilityCheck:
    gluable: bool
    rank_A: int
    rank_B: int
    dim: int
    explanation: str

    def __bool__(self):
        return self.gluable


def rank_gluability_check(A: AffineSemigroup, B: AffineSemigroup) -> GluabilityCheck:
    """Necessary rank condition rank A + rank B = n + 1 for a gluing."""
    if A.dim != B.dim:
        raise DimensionMismatch(f"dimensions differ: {A.dim} vs {B.dim}")
    n, ra, rb = A.dim, A.rank, B.rank
    ok = ra + rb == n + 1
    if ok:
        why = f"rank {ra} + rank {rb} = {n + 1} = n + 1"
    elif ra == rb == n and n >= 2:
        why = (f"both semigroups have full rank {n}; two GNS cannot be glued "
               f"in N^{n} since {2 * n} != {n + 1}")
    else:
        why = f"rank {ra} + rank {rb} = {ra + rb} != n + 1 = {n + 1}"
    return GluabilityCheck(ok, ra, rb, n, why)


def read_generator_file(path) -> AffineSemigroup:
    """Parse ``dim n`` followed by one whitespace-separated generator per line."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    return parse_generator_text(lines)


def parse_generator_text(lines) -> AffineSemigroup:
    if isinstance(lines, str):
        lines = [ln.strip() for ln in lines.splitlines() if ln.strip()]
    if not lines:
        raise SemigroupError("empty generator file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "dim" or not head[1].isdigit():
        raise SemigroupError(f"expected header 'dim n', got {lines[0]!r}")
    n = int(head[1])
    gens = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n or not all(t.isdigit() for t in toks):
            raise SemigroupError(f"bad generator line {ln!r} for dim {n}")
        gens.append(tuple(int(t) for t in toks))
    return build_affine(gens)


def format_generator_file(S: AffineSemigroup) -> str:
    rows = [f"dim {S.dim}"] + [" ".join(map(str, g)) for g in S.generators]
    return "\n".join(rows) + "\n"
