import math
import random

import pytest
from hypothesis import given, strategies as st

from wilfglue import (
    ArithmeticOverflow,
    EmptyInput,
    NonCoprime,
    NotMinimal,
    construct,
    contains,
    minimize_generators,
    parse_generators,
    semigroup,
    wilf_report,
)
from wilfglue.errors import SemigroupError, checked

from oracles import minimal_by_brute_force, ns_invariants, sieve


@st.composite
def coprime_generators(draw, max_value=40, max_size=5):
    gens = draw(st.lists(st.integers(2, max_value), min_size=1, max_size=max_size))
    if math.gcd(*gens) != 1:
        gens.append(draw(st.sampled_from([p for p in (2, 3, 5, 7, 11, 13, 17, 19, 23)
                                          if math.gcd(math.gcd(*gens), p) == 1])))
    return gens


@pytest.mark.parametrize("gens, expected", [
    ([4, 6, 9, 10], [4, 6, 9]),
    ([1, 7], [1]),
    ([3, 5], [3, 5]),
    ([10, 9, 6, 4, 4], [4, 6, 9]),
])
def test_minimize_generators(gens, expected):
    assert minimize_generators(gens) == expected


def test_minimize_errors():
    with pytest.raises(EmptyInput):
        minimize_generators([])
    with pytest.raises(NonCoprime, match="gcd is 2"):
        minimize_generators([4, 6])


@given(coprime_generators())
def test_minimize_matches_brute_force(gens):
    assert minimize_generators(gens) == minimal_by_brute_force(semigroup(gens).generators)
    assert minimize_generators(gens) == minimal_by_brute_force(
        [g for g in set(gens)])


def test_construct_rejects_redundant():
    with pytest.raises(NotMinimal) as exc:
        construct([4, 6, 9, 10])
    assert exc.value.redundant == 10


@pytest.mark.parametrize("gens, F, gaps, n, apery, t", [
    ([3, 5], 7, [1, 2, 4, 7], 4, [0, 10, 5], 1),
    ([2, 3], 1, [1], 1, [0, 3], 1),
    ([1], -1, [], 0, [0], 1),
    ([4, 6, 9], 11, [1, 2, 3, 5, 7, 11], 6, [0, 9, 6, 15], 1),
])
def test_construct_known_values(gens, F, gaps, n, apery, t):
    S = construct(gens)
    assert S.frobenius == F
    assert list(S.gaps) == gaps
    assert S.genus == len(gaps)
    assert S.sporadic_count == n
    assert list(S.apery) == apery
    assert S.type == t


def test_pseudo_frobenius_of_4_6_9():
    assert construct([4, 6, 9]).pseudo_frobenius == (11,)


def test_type_larger_than_one():
    # <3,4,5>: gaps {1,2}, both pseudo-Frobenius
    S = construct([3, 4, 5])
    assert S.pseudo_frobenius == (1, 2)
    assert S.type == 2


@given(coprime_generators())
def test_invariants_match_sieve(gens):
    S = semigroup(gens)
    ref = ns_invariants(S.generators)
    assert S.frobenius == ref["F"]
    assert list(S.gaps) == ref["gaps"]
    assert list(S.sporadic) == ref["sporadic"]
    assert S.sporadic_count == len(ref["sporadic"])
    assert list(S.pseudo_frobenius) == (ref["pf"] if ref["pf"] else [-1])
    assert list(S.apery) == ref["apery"]


@given(coprime_generators())
def test_record_invariants(gens):
    S = semigroup(gens)
    m = S.multiplicity
    assert all(w % m == r for r, w in enumerate(S.apery))
    assert S.apery[0] == 0
    assert S.frobenius == max(S.apery) - m
    if S.frobenius >= 0:
        assert max(S.gaps) == S.frobenius
        assert S.genus + S.sporadic_count == S.frobenius + 1
        assert S.frobenius in S.pseudo_frobenius
    if S.frobenius >= 1:
        assert S.sporadic_count >= 1
    assert S.type >= 1


def test_apery_consistency_against_sieve():
    rng = random.Random(7)
    for _ in range(60):
        S = semigroup([rng.randint(2, 2000) for _ in range(rng.randint(2, 4))] + [rng.choice([1999, 1997])])
        table = sieve(S.generators, max(S.apery))
        m = S.multiplicity
        for w in S.apery:
            assert table[w]
            assert w < m or not table[w - m]


def test_contains_examples():
    S = construct([3, 5])
    assert not contains(S, 7)
    assert contains(S, 8)
    assert contains(S, 0)
    assert not contains(S, -3)


def test_contains_matches_dp_on_random_semigroups():
    rng = random.Random(1000)
    for _ in range(1000):
        gens = [rng.randint(2, 30) for _ in range(rng.randint(1, 4))]
        gens.append(rng.choice([g for g in range(2, 32) if math.gcd(math.gcd(*gens), g) == 1]))
        S = semigroup(gens)
        limit = S.frobenius + S.multiplicity
        table = sieve(S.generators, limit)
        assert all((x in S) == table[x] for x in range(limit + 1))


def test_wilf_report_examples():
    r = wilf_report(construct([3, 5]))
    assert (r.lhs, r.rhs, r.wilf_holds, r.symmetric) == (8, 8, True, True)
    r = wilf_report(construct([4, 6, 9]))
    assert (r.lhs, r.rhs, r.wilf_holds, r.t, r.froberg_holds) == (18, 12, True, 1, True)
    assert (r.t + 1) * r.n == 12
    r = wilf_report(construct([1]))
    assert (r.lhs, r.rhs, r.wilf_holds, r.margin) == (0, 0, True, 0)


def test_wilf_report_serialises_integers_only():
    d = wilf_report(construct([4, 6, 9])).to_dict()
    assert set(d) == {"p", "n", "F", "t", "lhs", "rhs", "margin", "wilf_holds",
                      "froberg_holds", "symmetric"}
    assert all(isinstance(v, int) for v in d.values())


def test_two_generators_are_symmetric_with_wilf_equality():
    for a in range(2, 101):
        for b in range(a + 1, 101):
            if math.gcd(a, b) != 1:
                continue
            S = construct([a, b])
            r = wilf_report(S)
            assert S.frobenius == a * b - a - b
            assert r.symmetric and r.lhs == r.rhs
            assert S.type == 1


@given(coprime_generators(max_value=30))
def test_froberg_dominance(gens):
    r = wilf_report(semigroup(gens))
    assert r.froberg_holds
    if r.t + 1 <= r.p:
        assert r.wilf_holds


def test_parse_generators():
    assert parse_generators("4,6,9") == [4, 6, 9]
    for bad in ("", "4,,6", "4, 6x", "-1,2"):
        with pytest.raises(SemigroupError):
            parse_generators(bad)


def test_overflow_is_a_hard_error():
    with pytest.raises(ArithmeticOverflow, match="demo"):
        checked(2**63, "demo")
    assert checked(2**63 - 1, "demo") == 2**63 - 1


def test_semigroups_are_hashable_and_equal_by_generators():
    assert construct([3, 5]) == semigroup([5, 3, 8, 10])
    assert len({construct([3, 5]), semigroup([3, 5, 9])}) == 1
