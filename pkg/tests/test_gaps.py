import math
import random

import pytest

from wilfglue import (
    BoundTooSmall,
    ModeMismatch,
    MonomialOrder,
    build_affine,
    construct,
    gap_analysis,
    wilf_report,
)
from wilfglue.gaps import members_up_to
from wilfglue.affine import member

from oracles import sieve

GRLEX = MonomialOrder.make("grlex", 2)
GNS = build_affine([(0, 1), (2, 0), (3, 0), (1, 1)])


def test_gns_full_mode():
    g = gap_analysis(GNS, GRLEX, "full", 6)
    assert g.gaps == ((1, 0),)
    assert g.frobenius == (1, 0)
    assert g.sporadic_count == 2
    assert g.N_paper == 3
    assert g.verdict_paper and g.embedding_dimension * g.sporadic_count == 8
    assert g.N_reference == 3 and g.verdict_reference
    assert not g.certified
    assert gap_analysis(GNS, GRLEX, "full", 7).certified


def test_three_five_in_dimension_one():
    g = gap_analysis(build_affine([(3,), (5,)]), MonomialOrder.make("grlex", 1), "cone", 20)
    assert [x[0] for x in g.gaps] == [1, 2, 4, 7]
    assert g.frobenius == (7,) and g.sporadic_count == 4 and g.N_paper == 8
    assert not g.verdict_paper          # 8 >= 9 fails
    assert g.verdict_reference          # 8 >= 8 holds
    assert g.certified


def test_gap_free_semigroup():
    S = build_affine([(1, 0), (1, 1), (1, 2)])
    for kind in ("grlex", "grevlex"):
        g = gap_analysis(S, MonomialOrder.make(kind, 2), "cone", 12)
        assert g.gaps == () and g.frobenius is None
        assert g.verdict_paper and g.verdict_reference and g.ratio_form


def test_errors():
    with pytest.raises(BoundTooSmall):
        gap_analysis(GNS, GRLEX, "full", 2)
    with pytest.raises(ModeMismatch):
        gap_analysis(build_affine([(1, 0), (1, 2)]), GRLEX, "H", 10)
    # non-strict analysis accepts small bounds and stays exact inside them
    assert gap_analysis(GNS, GRLEX, "full", 2, strict=False).gaps == ((1, 0),)


def test_members_up_to_matches_member():
    rng = random.Random(5)
    for _ in range(30):
        gens = sorted({(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(3)} - {(0, 0)})
        S = build_affine(gens, normalize=False)
        found = members_up_to(S, GRLEX, 9)
        for x in [(a, b) for a in range(10) for b in range(10) if a + b <= 9]:
            assert (x in found) == member(S, x)


def test_one_dimensional_reduction():
    order = MonomialOrder.make("grlex", 1)
    for a in range(2, 41):
        for b in range(a + 1, 41, 3):
            if math.gcd(a, b) != 1:
                continue
            S = construct([a, b])
            bound = S.frobenius + 2 * b + 1
            g = gap_analysis(build_affine([(a,), (b,)]), order, "cone", bound)
            assert [x[0] for x in g.gaps] == list(S.gaps)
            assert g.frobenius == (S.frobenius,)
            assert g.verdict_reference == wilf_report(S).wilf_holds
            assert g.verdict_paper == g.ratio_form


def test_lattice_mode_filters_points():
    S = build_affine([(0, 5), (10, 0), (15, 0), (5, 5), (2, 2), (3, 3)], normalize=False)
    cone = gap_analysis(S, GRLEX, "cone", 12, strict=False)
    lat = gap_analysis(S, GRLEX, "lattice", 12, strict=False)
    assert (2, 0) in cone.gaps and (2, 0) not in lat.gaps
    assert set(lat.gaps) <= set(cone.gaps)
    assert all((x[0] - x[1]) % 5 == 0 for x in lat.gaps)


def test_gaps_monotone_in_bound():
    S = build_affine([(0, 5), (10, 0), (15, 0), (2, 2), (3, 3)], normalize=False)
    previous = set()
    for bound in range(5, 22, 4):
        gaps = set(gap_analysis(S, GRLEX, "cone", bound, strict=False).gaps)
        assert previous <= gaps
        previous = gaps


def test_json_fields():
    d = gap_analysis(GNS, GRLEX, "H", 6).to_dict()
    for key in ("gap_mode", "bound", "certified", "gaps", "frobenius", "n_sporadic",
                "N_paper", "N_reference", "verdict_paper", "verdict_reference"):
        assert key in d
    assert d["gaps"] == [[1, 0]] and d["gap_mode"] == "full"
