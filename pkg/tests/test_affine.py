import itertools
import random

import pytest
from hypothesis import given, strategies as st

from wilfglue import (
    DimensionMismatch,
    ZeroGenerator,
    build_affine,
    cone_contains,
    lattice_contains,
    member,
    rank_gluability_check,
)
from wilfglue.affine import format_generator_file, parse_generator_text, read_generator_file
from wilfglue.errors import SemigroupError
from wilfglue.linalg import hermite_rows, in_row_lattice, nullspace, rank

from oracles import affine_members_by_combinations, det

GNS = [(0, 1), (2, 0), (3, 0), (1, 1)]


def test_build_affine_examples():
    S = build_affine([(1, 0), (1, 2)])
    assert S.rank == 2 and S.non_degenerate
    assert set(S.cone.facets) == {(0, 1), (2, -1)}
    assert S.cone.rays == ((1, 0), (1, 2))
    # det 2: the generated lattice has index 2 in Z^2
    assert abs(det([[1, 0], [1, 2]])) == 2
    assert S.lattice == ((1, 0), (0, 2))

    T = build_affine([(2, 2), (3, 3)])
    assert T.rank == 1 and not T.non_degenerate
    assert T.cone.rays == ((1, 1),)
    assert T.cone.contains((5, 5)) and not T.cone.contains((1, 2))

    U = build_affine(GNS)
    assert U.rank == 2 and U.cone.is_orthant()
    assert U.lattice == ((1, 0), (0, 1))


def test_build_affine_normalisation_and_errors():
    S = build_affine([(2, 0), (0, 4), (2, 0)])
    assert S.generators == ((1, 0), (0, 2))
    assert any("duplicate" in n for n in S.notes)
    assert any("content 2" in n for n in S.notes)
    kept = build_affine([(2, 0), (0, 4)], normalize=False)
    assert kept.content == 2 and kept.generators == ((2, 0), (0, 4))
    with pytest.raises(ZeroGenerator):
        build_affine([(0, 0), (1, 0)])
    with pytest.raises(DimensionMismatch):
        build_affine([(1, 0), (1,)])
    with pytest.raises(SemigroupError):
        build_affine([(-1, 2)])


def test_member_examples():
    S = build_affine(GNS)
    assert not member(S, (1, 0))
    assert member(S, (5, 3))
    assert member(S, (0, 0))


def test_cone_and_lattice_examples():
    S = build_affine([(1, 0), (1, 2)])
    assert cone_contains(S, (3, 1)) and not cone_contains(S, (1, 3))
    L = build_affine([(2, 2), (3, 3), (0, 5)])
    assert lattice_contains(L, (1, 1))
    assert not lattice_contains(L, (1, 0))
    for T in (S, L):
        assert cone_contains(T, (0, 0)) and lattice_contains(T, (0, 0))


def test_generator_invariants_of_cone():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.choice([2, 3])
        gens = {tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(rng.randint(1, 5))}
        gens.discard((0,) * n)
        if not gens:
            continue
        S = build_affine(sorted(gens))
        assert all(S.cone.contains(g) for g in S.generators)
        for r in S.cone.rays:
            assert any(rank([r, g]) == 1 for g in S.generators)
        assert S.non_degenerate == (S.rank == n)


def _random_semigroup(rng, n):
    while True:
        gens = {tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(2, 4))}
        gens.discard((0,) * n)
        if gens:
            return build_affine(sorted(gens), normalize=False)


def test_member_matches_brute_force_enumerator():
    rng = random.Random(11)
    for n in (2, 3):
        for _ in range(50):
            S = _random_semigroup(rng, n)
            brute = affine_members_by_combinations(list(S.generators), 10)
            for x in itertools.product(range(11), repeat=n):
                if sum(x) <= 10:
                    assert member(S, x) == (x in brute), (S.generators, x)


def test_minimal_generators():
    S = build_affine([(0, 5), (10, 0), (15, 0), (5, 5), (2, 2), (3, 3)])
    assert S.minimal_generators == ((0, 5), (10, 0), (15, 0), (2, 2), (3, 3))
    assert S.embedding_dimension == 5
    assert build_affine(GNS).embedding_dimension == 4


def test_rank_gluability():
    A = build_affine(GNS)
    B = build_affine([(1, 1), (2, 2)])
    assert rank_gluability_check(A, B).gluable
    both = rank_gluability_check(A, build_affine([(1, 0), (0, 1)]))
    assert not both and "two GNS cannot be glued" in both.explanation
    one = rank_gluability_check(build_affine([(3,), (5,)]), build_affine([(2,), (7,)]))
    assert one.gluable
    with pytest.raises(DimensionMismatch):
        rank_gluability_check(A, build_affine([(1,)]))


def test_cone_rejects_high_dimension():
    with pytest.raises(SemigroupError):
        build_affine([tuple(int(i == j) for j in range(5)) for i in range(5)]).cone


def test_generator_file_round_trip(tmp_path):
    S = build_affine(GNS)
    path = tmp_path / "g.txt"
    path.write_text(format_generator_file(S))
    assert read_generator_file(path) == S
    with pytest.raises(SemigroupError):
        parse_generator_text("dim 2\n1 2 3\n")
    with pytest.raises(SemigroupError):
        parse_generator_text("2\n1 2\n")


vectors = st.lists(st.integers(-6, 6), min_size=3, max_size=3)


@given(st.lists(vectors, min_size=1, max_size=4), vectors)
def test_hermite_lattice_membership(rows, coeffs):
    hnf = hermite_rows(rows, 3)
    # every integer combination of the rows is recognised
    combo = [sum(c * r[i] for c, r in zip(coeffs, rows)) for i in range(3)]
    assert in_row_lattice(hnf, combo)
    # and the basis spans the same rational space
    assert rank(hnf, 3) == rank(rows, 3) if any(any(r) for r in rows) else hnf == []


@given(st.lists(vectors, min_size=1, max_size=3))
def test_nullspace_is_orthogonal(rows):
    for v in nullspace(rows, 3):
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert len(nullspace(rows, 3)) == 3 - rank(rows, 3)
