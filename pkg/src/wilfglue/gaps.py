"""Gap sets, Frobenius element and extended-Wilf verdicts, within a degree bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .affine import AffineSemigroup, lattice_contains
from .errors import BoundTooSmall, ModeMismatch, SemigroupError
from .orders import MonomialOrder, count_below, points_up_to

MODES = ("paper-literal", "full", "lattice")
_MODE_ALIASES = {
    "paper-literal": "paper-literal",
    "cone": "paper-literal",
    "calH": "paper-literal",
    "\U0001d4d7": "paper-literal",  # script H
    "full": "full",
    "H": "full",
    "lattice": "lattice",
    "lattice-filtered": "lattice",
}


def gap_mode(name: str) -> str:
    try:
        return _MODE_ALIASES[name]
    except KeyError:
        raise SemigroupError(
            f"unknown gap mode {name!r}; choose paper-literal (cone), full (H) or lattice"
        ) from None


@dataclass(frozen=True)
class GapAnalysis:
    gap_mode: str
    bound: int
    order: MonomialOrder
    gaps: tuple[tuple[int, ...], ...]
    certified: bool
    certificate_depth: Optional[int]
    frobenius: Optional[tuple[int, ...]]
    sporadic_count: int
    embedding_dimension: int
    N_paper: int
    N_reference: int
    verdict_paper: bool
    verdict_reference: bool
    ratio_form: bool
    shell_gap_counts: tuple[int, ...]

    def __post_init__(self):
        if self.verdict_paper != self.ratio_form:
            raise AssertionError("integer and ratio forms of extended Wilf disagree")

    def to_dict(self) -> dict:
        return {
            "gap_mode": self.gap_mode,
            "bound": self.bound,
            "order": self.order.to_dict(),
            "certified": self.certified,
            "certificate_depth": self.certificate_depth,
            "gaps_label": "certified" if self.certified else "within bound",
            "gap_count": len(self.gaps),
            "gaps": [list(g) for g in self.gaps],
            "frobenius": None if self.frobenius is None else list(self.frobenius),
            "n_sporadic": self.sporadic_count,
            "embedding_dimension": self.embedding_dimension,
            "N_paper": self.N_paper,
            "N_reference": self.N_reference,
            "verdict_paper": self.verdict_paper,
            "verdict_reference": self.verdict_reference,
            "ratio_form": self.ratio_form,
            "shell_gap_counts": list(self.shell_gap_counts),
        }


def members_up_to(S: AffineSemigroup, order: MonomialOrder, bound: int) -> set:
    """All elements of S with weighted degree <= bound.

    Exact: every summand of a decomposition has smaller degree, so points are
    settled in increasing degree.
    """
    gens = S.generators
    found = {tuple([0] * S.dim)}
    for x in points_up_to(order.weights, bound):
        if x in found:
            continue
        for g in gens:
            y = tuple(a - b for a, b in zip(x, g))
            if min(y) >= 0 and y in found:
                found.add(x)
                break
    return found


def max_generator_degree(S: AffineSemigroup, order: MonomialOrder) -> int:
    return max(order.degree(g) for g in S.generators)


def _candidate_filter(S, mode):
    if mode == "full":
        return lambda x: True
    cone = S.cone
    if mode == "paper-literal":
        return cone.contains
    return lambda x: cone.contains(x) and lattice_contains(S, x)


def _certify(S, order, mode, bound, members, accept):
    """Smallest D whose window (D, D+W] of candidate points is all members,
    with every extreme ray's multiples members beyond D up to the bound."""
    W = S.dim * max_generator_degree(S, order)
    if W > bound:
        return None
    shells = [[] for _ in range(bound + 1)]
    for x in points_up_to(order.weights, bound):
        if accept(x):
            shells[order.degree(x)].append(x)
    bad = [any(x not in members for x in shell) for shell in shells]
    rays = S.cone.rays
    if mode == "full":
        rays = tuple(tuple(int(i == j) for j in range(S.dim)) for i in range(S.dim))
    for D in range(0, bound - W + 1):
        if any(bad[D + 1:D + W + 1]):
            continue
        if all(_ray_saturated(r, D, bound, order, members, accept) for r in rays):
            return D
    return None


def _ray_saturated(ray, D, bound, order, members, accept):
    step = order.degree(ray)
    t = D // step + 1
    while t * step <= bound:
        x = tuple(t * a for a in ray)
        if accept(x) and x not in members:
            return False
        t += 1
    return True


def gap_analysis(S: AffineSemigroup, order: MonomialOrder, mode: str = "paper-literal",
                 degree_bound: Optional[int] = None, strict: bool = True) -> GapAnalysis:
    """Enumerate gaps of S up to ``degree_bound`` and evaluate extended Wilf.

    With ``strict`` the bound must reach every generator's degree
    (``BoundTooSmall`` otherwise).  Results are bound-relative unless
    ``certified`` is set by the saturation-window rule.
    """
    mode = gap_mode(mode)
    if order.dim != S.dim:
        raise SemigroupError(f"order has dimension {order.dim}, semigroup {S.dim}")
    maxdeg = max_generator_degree(S, order)
    if degree_bound is None:
        degree_bound = 3 * S.dim * maxdeg
    if degree_bound < 0 or (strict and degree_bound < maxdeg):
        raise BoundTooSmall(
            f"degree bound {degree_bound} is below the largest generator degree {maxdeg}")
    if mode == "full" and not S.cone.is_orthant():
        raise ModeMismatch("full gap mode needs cone(S) to be the whole orthant")

    accept = _candidate_filter(S, mode)
    members = members_up_to(S, order, degree_bound)
    gaps = []
    shells = [0] * (degree_bound + 1)
    for x in points_up_to(order.weights, degree_bound):
        if x not in members and accept(x):
            gaps.append(x)
            shells[order.degree(x)] += 1
    gaps.sort(key=order.key)
    depth = _certify(S, order, mode, degree_bound, members, accept)

    e = S.embedding_dimension
    if gaps:
        F = gaps[-1]
        kF = order.key(F)
        n_sp = sum(1 for x in members if order.key(x) < kF)
        N_paper = len(gaps) + n_sp
        N_reference = count_below(order, F) + 1
        verdict_paper = n_sp * e >= N_paper + 1
        verdict_reference = n_sp * e >= N_reference
        ratio = Fraction(len(gaps), n_sp) < e - 1
    else:
        F, n_sp, N_paper, N_reference = None, 0, 0, 0
        verdict_paper = verdict_reference = ratio = True
    return GapAnalysis(
        gap_mode=mode,
        bound=degree_bound,
        order=order,
        gaps=tuple(gaps),
        certified=depth is not None,
        certificate_depth=depth,
        frobenius=F,
        sporadic_count=n_sp,
        embedding_dimension=e,
        N_paper=N_paper,
        N_reference=N_reference,
        verdict_paper=verdict_paper,
        verdict_reference=verdict_reference,
        ratio_form=ratio,
        shell_gap_counts=tuple(shells),
    )
