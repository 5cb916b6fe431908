"""Graded monomial orders on N^n and lattice-point enumeration by degree.

Only orders that first compare a strictly positive weighted degree are
supported, so every point has finitely many predecessors.  Plain lex is
rejected for that reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import UnsupportedOrder

KINDS = ("graded-lex", "graded-revlex", "weighted-graded")
_ALIASES = {
    "grlex": "graded-lex",
    "graded-lex": "graded-lex",
    "grevlex": "graded-revlex",
    "graded-revlex": "graded-revlex",
    "weighted": "weighted-graded",
    "weighted-graded": "weighted-graded",
}


@dataclass(frozen=True)
class MonomialOrder:
    """Compare by weighted degree, then break ties on coordinates.

    ``priority`` lists coordinates from most to least significant.  Lex
    tie-breaking (graded-lex, weighted-graded) makes the larger value in the
    first differing priority coordinate the larger point; revlex makes the
    smaller value in the last differing coordinate the larger point.
    """

    kind: str
    dim: int
    weights: tuple[int, ...]
    priority: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedOrder(
                f"order {self.kind!r} is not graded by positive weights; "
                "points would have infinitely many predecessors")
        if len(self.weights) != self.dim or min(self.weights) <= 0:
            raise UnsupportedOrder("weights must be strictly positive, one per coordinate")
        if self.kind != "weighted-graded" and set(self.weights) != {1}:
            raise UnsupportedOrder(f"{self.kind} uses unit weights; use weighted-graded")
        if sorted(self.priority) != list(range(self.dim)):
            raise UnsupportedOrder("priority must be a permutation of the coordinates")

    @classmethod
    def make(cls, kind: str, dim: int, weights: Optional[Sequence[int]] = None,
             priority: Optional[Sequence[int]] = None) -> "MonomialOrder":
        name = _ALIASES.get(kind)
        if name is None:
            raise UnsupportedOrder(
                f"unsupported order {kind!r}: choose one of {', '.join(KINDS)} "
                "(lex fails the finite-predecessor condition)")
        weights = tuple(weights) if weights is not None else (1,) * dim
        priority = tuple(priority) if priority is not None else tuple(range(dim))
        return cls(name, dim, weights, priority)

    def degree(self, x) -> int:
        return sum(w * a for w, a in zip(self.weights, x))

    def key(self, x) -> tuple:
        if self.kind == "graded-revlex":
            tail = tuple(-x[i] for i in reversed(self.priority))
        else:
            tail = tuple(x[i] for i in self.priority)
        return (self.degree(x),) + tail

    def less(self, x, y) -> bool:
        return self.key(x) < self.key(y)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "weights": list(self.weights),
                "priority": list(self.priority)}


def points_of_degree(weights: Sequence[int], d: int) -> Iterator[tuple[int, ...]]:
    """All x in N^n with weighted degree exactly ``d``."""
    n = len(weights)

    def rec(i, remaining, prefix):
        if i == n - 1:
            if remaining % weights[i] == 0:
                yield prefix + (remaining // weights[i],)
            return
        for a in range(remaining // weights[i] + 1):
            yield from rec(i + 1, remaining - a * weights[i], prefix + (a,))

    yield from rec(0, d, ())


def points_up_to(weights: Sequence[int], bound: int) -> Iterator[tuple[int, ...]]:
    for d in range(bound + 1):
        yield from points_of_degree(weights, d)


def count_below(order: MonomialOrder, a) -> int:
    """|{b in N^n : b < a}|, by enumerating every point of degree <= deg(a)."""
    ka = order.key(a)
    return sum(1 for b in points_up_to(order.weights, order.degree(a))
               if order.key(b) < ka)
