"""Numerical semigroups in N: Apery sets, Frobenius number, gaps, type, Wilf.

Everything is derived from the Apery set with respect to the multiplicity,
computed with the round-robin relaxation over residues mod m.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Any, Iterable, Sequence

from .errors import EmptyInput, NonCoprime, NotMinimal, SemigroupError, checked

_INF = math.inf
_GENERATORS_RE = re.compile(r"[0-9]+(,[0-9]+)*")


def parse_generators(text: str) -> list[int]:
    """Parse the text form ``"4,6,9"``."""
    text = text.strip()
    if not _GENERATORS_RE.fullmatch(text):
        raise SemigroupError(f"cannot parse generator list {text!r}")
    return [int(tok) for tok in text.split(",")]


def format_generators(gens: Iterable[int]) -> str:
    return ",".join(str(g) for g in gens)


def _relax(apery: list, m: int, a: int) -> None:
    # One generator pass: walk each cycle of +a mod m starting from its minimum.
    d = math.gcd(a, m)
    step = a % m
    for start in range(d):
        best, idx = _INF, start
        for q in range(start, m, d):
            if apery[q] < best:
                best, idx = apery[q], q
        if best == _INF:
            continue
        for _ in range(m // d):
            nxt = (idx + step) % m
            cand = apery[idx] + a
            if cand < apery[nxt]:
                apery[nxt] = cand
            idx = nxt


def _clean(gens: Iterable[int]) -> list[int]:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyInput("empty generator list")
    if gens[0] <= 0:
        raise SemigroupError(f"generators must be positive, got {gens[0]}")
    g = reduce(math.gcd, gens)
    if g != 1:
        raise NonCoprime(g)
    return gens


def minimize_generators(gens: Iterable[int]) -> list[int]:
    """Return the unique minimal generating set of the semigroup spanned by ``gens``.

    Raises ``EmptyInput`` and ``NonCoprime``.
    """
    gens = _clean(gens)
    m = gens[0]
    apery = [_INF] * m
    apery[0] = 0
    kept = [m]
    for a in gens[1:]:
        if apery[a % m] <= a:
            continue
        kept.append(a)
        _relax(apery, m, a)
    return kept


def _apery(gens: Sequence[int]) -> tuple[int, ...]:
    m = gens[0]
    apery = [_INF] * m
    apery[0] = 0
    for a in gens[1:]:
        if apery[a % m] <= a:
            raise NotMinimal(a)
        _relax(apery, m, a)
    return tuple(int(checked(w, "apery set")) for w in apery)


@dataclass(frozen=True)
class NumericalSemigroup:
    """Immutable numerical semigroup given by its minimal generators.

    ``apery[r]`` is the least element congruent to ``r`` modulo the
    multiplicity. The semigroup N itself is ``<1>`` with Frobenius number -1,
    no gaps, sporadic count 0 and type 1.
    """

    generators: tuple[int, ...]
    apery: tuple[int, ...]
    provenance: Any = field(default=None, compare=False, repr=False)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @cached_property
    def frobenius(self) -> int:
        return max(self.apery) - self.multiplicity

    @cached_property
    def genus(self) -> int:
        m = self.multiplicity
        # Each residue class r contributes (apery[r] - r) / m gaps.
        return sum((w - r) // m for r, w in enumerate(self.apery))

    @cached_property
    def sporadic_count(self) -> int:
        if self.frobenius < 0:
            return 0
        return self.frobenius + 1 - self.genus

    def __contains__(self, x: int) -> bool:
        return x >= 0 and x >= self.apery[x % self.multiplicity]

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.frobenius + 1) if x not in self)

    @cached_property
    def sporadic(self) -> tuple[int, ...]:
        """Elements strictly below the Frobenius number."""
        return tuple(x for x in range(self.frobenius) if x in self)

    @cached_property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        m = self.multiplicity
        ap = self.apery
        maximal = []
        for w in ap:
            # w is maximal in Ap w.r.t. <=_S iff no w + a_i stays in Ap.
            if all(ap[(w + a) % m] != w + a for a in self.generators[1:]):
                maximal.append(w - m)
        return tuple(sorted(maximal))

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    def __str__(self) -> str:
        return format_generators(self.generators)

    def summary(self) -> dict:
        return {
            "generators": list(self.generators),
            "multiplicity": self.multiplicity,
            "embedding_dimension": self.embedding_dimension,
            "apery": list(self.apery),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "gaps": list(self.gaps),
            "sporadic_count": self.sporadic_count,
            "pseudo_frobenius": list(self.pseudo_frobenius),
            "type": self.type,
        }


def construct(gens: Iterable[int], provenance: Any = None) -> NumericalSemigroup:
    """Build the semigroup from an already minimal, coprime generator list.

    Raises ``NotMinimal`` naming the first redundant generator found.
    """
    gens = _clean(gens)
    return NumericalSemigroup(tuple(gens), _apery(gens), provenance)


def semigroup(gens: Iterable[int]) -> NumericalSemigroup:
    """Minimize then construct."""
    return construct(minimize_generators(gens))


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


@dataclass(frozen=True)
class WilfReport:
    p: int
    n: int
    F: int
    t: int
    lhs: int
    rhs: int
    margin: int
    wilf_holds: bool
    froberg_holds: bool
    symmetric: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "F": self.F,
            "t": self.t,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "wilf_holds": self.wilf_holds,
            "froberg_holds": self.froberg_holds,
            "symmetric": self.symmetric,
        }


def wilf_report(S: NumericalSemigroup) -> WilfReport:
    p, n, F, t = S.embedding_dimension, S.sporadic_count, S.frobenius, S.type
    lhs = checked(p * n, "wilf lhs")
    rhs = F + 1
    return WilfReport(
        p=p,
        n=n,
        F=F,
        t=t,
        lhs=lhs,
        rhs=rhs,
        margin=lhs - rhs,
        wilf_holds=lhs >= rhs,
        froberg_holds=(t + 1) * n >= rhs,
        symmetric=rhs == 2 * n,
    )
