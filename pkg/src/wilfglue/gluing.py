"""Gluings C = k1*A + k2*B of numerical semigroups and their audits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import NotMinimal, checked
from .numerical import (
    NumericalSemigroup,
    WilfReport,
    construct,
    format_generators,
    minimize_generators,
    wilf_report,
)


@dataclass(frozen=True)
class GluingSpec:
    A: NumericalSemigroup
    B: NumericalSemigroup
    k1: int
    k2: int

    @property
    def generators(self) -> list[int]:
        return sorted({self.k1 * a for a in self.A.generators}
                      | {self.k2 * b for b in self.B.generators})

    def to_dict(self) -> dict:
        return {"A": str(self.A), "B": str(self.B), "k1": self.k1, "k2": self.k2}


def _membership_violations(A, B, k1, k2):
    out = []
    for name, k in (("k1", k1), ("k2", k2)):
        if k <= 0:
            out.append(f"{name} must be positive")
    if k1 > 0:
        if k1 in B.generators:
            out.append("k1 is a generator of B")
        elif k1 not in B:
            out.append("k1 is not in <B>")
    if k2 > 0:
        if k2 in A.generators:
            out.append("k2 is a generator of A")
        elif k2 not in A:
            out.append("k2 is not in <A>")
    if k1 > 0 and k2 > 0 and math.gcd(k1, k2) != 1:
        out.append(f"gcd(k1, k2) is {math.gcd(k1, k2)}")
    return out


def gluing_violations(A: NumericalSemigroup, B: NumericalSemigroup,
                      k1: int, k2: int) -> list[str]:
    """Every clause of the gluing definition that (A, B, k1, k2) violates."""
    out = _membership_violations(A, B, k1, k2)
    if k1 <= 0 or k2 <= 0:
        return out
    left = {k1 * a for a in A.generators}
    right = {k2 * b for b in B.generators}
    shared = sorted(left & right)
    if shared:
        out.append("k1*A and k2*B share generators " + format_generators(shared))
    union = sorted(left | right)
    if math.gcd(k1, k2) == 1:
        minimal = minimize_generators(union)
        redundant = sorted(set(union) - set(minimal))
        if redundant:
            out.append("union is not minimal: redundant "
                       + format_generators(redundant))
    return out


def validate_gluing(A, B, k1, k2):
    """Return a ``GluingSpec``, or the list of violated clauses."""
    violations = gluing_violations(A, B, k1, k2)
    if violations:
        return violations
    return GluingSpec(A, B, k1, k2)


def glue(spec: GluingSpec) -> NumericalSemigroup:
    """Semigroup generated by k1*A and k2*B, carrying ``spec`` as provenance."""
    gens = spec.generators
    if minimize_generators(gens) != gens:
        raise NotMinimal(sorted(set(gens) - set(minimize_generators(gens)))[0])
    return construct(gens, provenance=spec)


def frobenius_by_formula(spec: GluingSpec) -> int:
    k1, k2 = spec.k1, spec.k2
    return checked(k1 * spec.A.frobenius + k2 * spec.B.frobenius + k1 * k2,
                   "frobenius_by_formula")


def enumerate_gluings(A, B, kmax: int) -> list[tuple[int, int]]:
    """All valid (k1, k2) with both entries at most ``kmax``, lexicographic."""
    pairs = []
    for k1, k2 in candidate_pairs(A, B, kmax):
        if not gluing_violations(A, B, k1, k2):
            pairs.append((k1, k2))
    return pairs


def candidate_pairs(A, B, kmax):
    """Pairs passing the cheap membership and coprimality clauses.

    Minimality of the union is not checked here.
    """
    ks1 = [k for k in range(1, kmax + 1) if k in B and k not in B.generators]
    ks2 = [k for k in range(1, kmax + 1) if k in A and k not in A.generators]
    return [(k1, k2) for k1 in ks1 for k2 in ks2 if math.gcd(k1, k2) == 1]


@dataclass(frozen=True)
class GluingAudit:
    spec: GluingSpec
    C: NumericalSemigroup
    F_formula: int
    F_direct: int
    formula_ok: bool
    frobenius_witness_ok: bool
    bound_A_ok: bool
    bound_B_ok: bool
    weak_bound_A_ok: bool
    weak_bound_B_ok: bool
    witness_family_i_ok: bool
    witness_family_ii_ok: Optional[bool]
    distinct_witnesses_ok: bool
    type_product_ok: bool
    ci_symmetric_ok: Optional[bool]
    fc_upper_ok: Optional[bool]
    p1_case_ok: Optional[bool]
    wilf_A: WilfReport
    wilf_B: WilfReport
    wilf_C: WilfReport
    wilf_closure_ok: bool

    @property
    def n_C(self) -> int:
        return self.C.sporadic_count

    @property
    def all_ok(self) -> bool:
        flags = [self.formula_ok, self.frobenius_witness_ok, self.bound_A_ok,
                 self.bound_B_ok, self.weak_bound_A_ok, self.weak_bound_B_ok,
                 self.distinct_witnesses_ok, self.type_product_ok,
                 self.wilf_closure_ok]
        optional = [self.ci_symmetric_ok, self.fc_upper_ok, self.p1_case_ok]
        return all(flags) and all(f is not False for f in optional)

    def to_dict(self) -> dict:
        def na(flag):
            return "not-applicable" if flag is None else flag

        return {
            **self.spec.to_dict(),
            "C": str(self.C),
            "F_formula": self.F_formula,
            "F_direct": self.F_direct,
            "formula_ok": self.formula_ok,
            "frobenius_witness_ok": self.frobenius_witness_ok,
            "n_A": self.spec.A.sporadic_count,
            "n_B": self.spec.B.sporadic_count,
            "n_C": self.n_C,
            "bound_A_ok": self.bound_A_ok,
            "bound_B_ok": self.bound_B_ok,
            "weak_bound_A_ok": self.weak_bound_A_ok,
            "weak_bound_B_ok": self.weak_bound_B_ok,
            "witness_family_i_ok": self.witness_family_i_ok,
            "witness_family_ii_ok": na(self.witness_family_ii_ok),
            "distinct_witnesses_ok": self.distinct_witnesses_ok,
            "type_A": self.spec.A.type,
            "type_B": self.spec.B.type,
            "type_C": self.C.type,
            "type_product_ok": self.type_product_ok,
            "ci_symmetric_ok": na(self.ci_symmetric_ok),
            "fc_upper_ok": na(self.fc_upper_ok),
            "p1_case_ok": na(self.p1_case_ok),
            "wilf_A": self.wilf_A.to_dict(),
            "wilf_B": self.wilf_B.to_dict(),
            "wilf_C": self.wilf_C.to_dict(),
            "wilf_closure_ok": self.wilf_closure_ok,
        }

    def csv_row(self) -> dict:
        row = {}
        for key, value in self.to_dict().items():
            if isinstance(value, dict):
                for sub, v in value.items():
                    row[f"{key}.{sub}"] = v
            else:
                row[key] = value
        return row


def _frobenius_witness_ok(spec, C, F_C):
    """Every F_C + t, 1 <= t <= m(C), has the decomposition
    k1*(F_A + s) + k2*(F_B - r + k1) with 0 <= r < k1, both parts in A and B."""
    A, B, k1, k2 = spec.A, spec.B, spec.k1, spec.k2
    inv = pow(k2, -1, k1) if k1 > 1 else 0
    for t in range(1, C.multiplicity + 1):
        r = (-t * inv) % k1
        s, rem = divmod(t + r * k2, k1)
        if rem or s < 1:
            return False
        left, right = A.frobenius + s, B.frobenius - r + k1
        if left not in A or right not in B:
            return False
        if k1 * left + k2 * right != F_C + t or F_C + t not in C:
            return False
    return F_C not in C


def _witness_families(spec, C, F_C):
    A, B, k1, k2 = spec.A, spec.B, spec.k1, spec.k2
    FA, FB = A.frobenius, B.frobenius
    fam_i = [k1 * x + k2 * (FB + i) for x in A.sporadic for i in range(1, k1 + 1)]
    ok_i = (len(set(fam_i)) == k1 * A.sporadic_count
            and all(w in C and w < F_C for w in fam_i))
    if FA < 0 or FB < 0:
        return ok_i, None, ok_i
    half1, half2 = k1 // 2, k2 // 2
    fam_ii = [k1 * (FA + i) + k2 * (FB + j)
              for i in range(1, half2 + 1) for j in range(1, half1 + 1)]
    ok_ii = (len(set(fam_ii)) == half1 * half2
             and all(w in C and w < F_C for w in fam_ii))
    disjoint = not set(fam_i) & set(fam_ii)
    return ok_i, ok_ii, ok_i and ok_ii and disjoint


def _p1_case(spec, n_C, F_C, wA, wB):
    # Orient so that the one-generator side (N) plays the role of A.
    A, B, k1, k2 = spec.A, spec.B, spec.k1, spec.k2
    if A.embedding_dimension != 1:
        if B.embedding_dimension != 1:
            return None
        A, B, k1, k2, wB = B, A, k2, k1, wA
    q = B.embedding_dimension
    if q < 4 or not wB.wilf_holds:
        return None
    nB, FB = B.sporadic_count, B.frobenius
    prod = (k1 - 1) * (k2 - 1)
    # All three quantities scaled by 4 to stay in integers.
    actual = 4 * ((q + 1) * n_C - F_C)
    lower = (q + 1) * (4 * k2 * nB + prod) - 4 * k2 * FB - 4 * k1 * (k2 - 1)
    expanded = (4 * k2 * (q * nB - FB - 1) + prod * (q + 1 - 4)
                + 4 * (k2 * nB - 1))
    return actual >= lower >= expanded > 0


def audit_gluing(spec: GluingSpec) -> GluingAudit:
    """Check every computable claim about the gluing against C's own data.

    n_C, F_C and t(C) come from C's Apery set, never from the formula.
    """
    A, B, k1, k2 = spec.A, spec.B, spec.k1, spec.k2
    C = glue(spec)
    F_formula = frobenius_by_formula(spec)
    F_C = C.frobenius
    n_C = C.sporadic_count
    half = (k1 // 2) * (k2 // 2)
    prod = (k1 - 1) * (k2 - 1)
    wA, wB, wC = wilf_report(A), wilf_report(B), wilf_report(C)
    ok_i, ok_ii, distinct = _witness_families(spec, C, F_C)

    p, q = A.embedding_dimension, B.embedding_dimension
    ci_symmetric = wC.symmetric if p <= 2 and q <= 2 else None
    fc_upper = None
    if wA.wilf_holds and wB.wilf_holds:
        fc_upper = F_C <= k1 * p * A.sporadic_count + k2 * q * B.sporadic_count + prod - 1

    return GluingAudit(
        spec=spec,
        C=C,
        F_formula=F_formula,
        F_direct=F_C,
        formula_ok=F_formula == F_C,
        frobenius_witness_ok=_frobenius_witness_ok(spec, C, F_formula),
        bound_A_ok=n_C >= k1 * A.sporadic_count + half,
        bound_B_ok=n_C >= k2 * B.sporadic_count + half,
        weak_bound_A_ok=4 * n_C >= 4 * k1 * A.sporadic_count + prod,
        weak_bound_B_ok=4 * n_C >= 4 * k2 * B.sporadic_count + prod,
        witness_family_i_ok=ok_i,
        witness_family_ii_ok=ok_ii,
        distinct_witnesses_ok=distinct,
        type_product_ok=C.type == A.type * B.type,
        ci_symmetric_ok=ci_symmetric,
        fc_upper_ok=fc_upper,
        p1_case_ok=_p1_case(spec, n_C, F_C, wA, wB),
        wilf_A=wA,
        wilf_B=wB,
        wilf_C=wC,
        wilf_closure_ok=not (wA.wilf_holds and wB.wilf_holds) or wC.wilf_holds,
    )
