from math import gcd
from functools import reduce

import pytest
from hypothesis import assume, given, settings, strategies as st

import oracles
from proth_semigroup import semigroup as sg
from proth_semigroup.errors import (
    EmptyInput,
    InvalidGenerator,
    ModulusNotInSemigroup,
    NotCoprime,
    SemigroupIsAllNaturals,
)

PROTH_33 = [25, 49, 97, 193, 385]


def S(*gens):
    return sg.validate_generators(gens)


# validate_generators

def test_validate_accepts_coprime_list():
    assert S(*PROTH_33).generators == tuple(PROTH_33)


def test_validate_canonicalizes():
    assert S(5, 3, 5, 8).generators == (3, 5, 8)


def test_validate_naturals():
    gs = S(1)
    assert gs.is_naturals


@pytest.mark.parametrize('raw, exc', [
    ([], EmptyInput),
    ([2, 4, 6], NotCoprime),
    ([0, 3], InvalidGenerator),
    ([-3, 5], InvalidGenerator),
    ([3, 2.5], InvalidGenerator),
])
def test_validate_rejects(raw, exc):
    with pytest.raises(exc):
        sg.validate_generators(raw)


# apery_table

def test_apery_3_5():
    assert sg.apery_table(S(3, 5), 3).w == (0, 10, 5)


def test_apery_2_3():
    assert sg.apery_table(S(2, 3), 2).w == (0, 3)


def test_apery_proth_max():
    t = sg.apery_table(S(*PROTH_33), 25)
    assert max(t.w) == 676
    assert list(t.w) == oracles.apery(PROTH_33, 25)


def test_apery_non_generator_modulus():
    # 8 = 3 + 5 is in <3,5>
    t = sg.apery_table(S(3, 5), 8)
    assert list(t.w) == oracles.apery([3, 5], 8)


@pytest.mark.parametrize('m', [4, 7, 0, -3])
def test_apery_rejects_non_member_modulus(m):
    with pytest.raises(ModulusNotInSemigroup):
        sg.apery_table(S(3, 5), m)


# frobenius, gaps, genus, membership

@pytest.mark.parametrize('gens, F', [((3, 5), 7), ((2, 3), 1), (tuple(PROTH_33), 651), ((1,), -1)])
def test_frobenius(gens, F):
    assert sg.frobenius(S(*gens)) == F


@pytest.mark.parametrize('gens, expected', [((3, 5), [1, 2, 4, 7]), ((1,), []), ((2, 3), [1])])
def test_gaps(gens, expected):
    assert sg.gaps(S(*gens)) == expected


@pytest.mark.parametrize('gens, g', [((3, 5), 4), ((2, 3), 1), ((1,), 0)])
def test_genus(gens, g):
    assert sg.genus(S(*gens)) == g


@pytest.mark.parametrize('gens, x, expected', [
    ((3, 5), 7, False),
    ((3, 5), 8, True),
    (tuple(PROTH_33), 652, True),
    (tuple(PROTH_33), 651, False),
    ((3, 5), 0, True),
])
def test_membership(gens, x, expected):
    assert sg.membership(S(*gens), x) is expected


def test_membership_rejects_negative():
    with pytest.raises(ValueError):
        sg.membership(S(3, 5), -1)


# minimal generators

@pytest.mark.parametrize('gens, expected', [
    ((3, 5, 8), (3, 5)),
    (tuple(PROTH_33), tuple(PROTH_33)),
    ((4, 6, 9), (4, 6, 9)),
    ((1, 2, 3), (1,)),
    ((5, 10, 7, 14, 21, 12), (5, 7)),
])
def test_minimal_generators(gens, expected):
    assert sg.minimal_generators(S(*gens)).generators == expected


# pseudo-Frobenius

@pytest.mark.parametrize('gens, expected', [
    ((3, 5), [7]),
    ((4, 6, 9), [11]),
    (tuple(PROTH_33), [363, 555, 651]),
])
def test_pseudo_frobenius(gens, expected):
    assert sg.pseudo_frobenius(S(*gens)) == expected
    assert oracles.pseudo_frobenius(list(gens)) == expected


def test_pseudo_frobenius_rejects_naturals():
    with pytest.raises(SemigroupIsAllNaturals):
        sg.pseudo_frobenius(S(1))


def test_pf_maximality_matches_pairwise_definition():
    # maximal w: w' - w not in Ap minus {0} for every w' in Ap
    gs = S(7, 11, 13)
    t = sg.apery_table(gs)
    ap = set(t.w)
    maximal = [w for w in sorted(ap) if not any(v - w in ap - {0} for v in ap)]
    assert sg.pseudo_frobenius(gs) == [w - 7 for w in maximal]


# summarize / wilf

def test_summary_3_5():
    s = sg.summarize(S(3, 5))
    assert (s.frobenius, s.genus, s.embedding_dimension, s.type, s.nu) == (7, 4, 2, 1, 4)


def test_summary_2_3():
    s = sg.summarize(S(2, 3))
    assert (s.frobenius, s.genus, s.embedding_dimension, s.type, s.nu) == (1, 1, 2, 1, 1)


def test_summary_proth():
    s = sg.summarize(S(*PROTH_33))
    assert (s.frobenius, s.embedding_dimension, s.type) == (651, 5, 3)
    assert s.pseudo_frobenius == (363, 555, 651)
    assert s.genus == len(oracles.gaps(PROTH_33))


def test_summary_naturals():
    s = sg.summarize(S(1))
    assert (s.frobenius, s.genus, s.nu) == (-1, 0, 0)
    assert max(s.pseudo_frobenius) == s.frobenius


@pytest.mark.parametrize('gens, lhs, rhs_e', [((3, 5), 8, 8), ((2, 3), 2, 2)])
def test_wilf(gens, lhs, rhs_e):
    w = sg.wilf_check(S(*gens))
    assert (w.lhs, w.rhs_e, w.holds, w.intermediate_holds) == (lhs, rhs_e, True, True)


def test_wilf_proth():
    w = sg.wilf_check(S(*PROTH_33))
    assert w.holds and w.intermediate_holds
    assert w.lhs <= w.rhs_t <= w.rhs_e


def test_wilf_rejects_naturals():
    with pytest.raises(SemigroupIsAllNaturals):
        sg.wilf_check(S(1))


# properties

def test_sylvester_all_pairs_up_to_60():
    for a in range(2, 61):
        for b in range(a + 1, 61):
            if gcd(a, b) != 1:
                continue
            gs = S(a, b)
            assert sg.frobenius(gs) == a * b - a - b
            assert sg.genus(gs) == (a - 1) * (b - 1) // 2


coprime_lists = (
    st.lists(st.integers(2, 40), min_size=2, max_size=5)
    .filter(lambda xs: reduce(gcd, xs) == 1)
)


@settings(max_examples=150, deadline=None)
@given(coprime_lists)
def test_engine_matches_sieve(gens):
    gs = sg.validate_generators(gens)
    m = gs.multiplicity
    assert list(sg.apery_table(gs).w) == oracles.apery(gens, m)
    assert sg.frobenius(gs) == oracles.frobenius(gens)
    assert sg.gaps(gs) == oracles.gaps(gens)
    assert sg.genus(gs) == len(oracles.gaps(gens))


@settings(max_examples=80, deadline=None)
@given(coprime_lists)
def test_pf_and_minimal_generators_match_oracle(gens):
    gs = sg.validate_generators(gens)
    assume(not gs.is_naturals)
    assert sg.pseudo_frobenius(gs) == oracles.pseudo_frobenius(gens)
    assert list(sg.minimal_generators(gs).generators) == oracles.minimal_generators(gens)


@settings(max_examples=150, deadline=None)
@given(coprime_lists)
def test_apery_table_invariants(gens):
    gs = sg.validate_generators(gens)
    t = sg.apery_table(gs)
    m = t.modulus
    assert t.w[0] == 0
    assert len(set(t.w)) == m
    for i, w in enumerate(t.w):
        assert w % m == i
        assert sg.membership(gs, w)
        assert w < m or not sg.membership(gs, w - m)


@settings(max_examples=150, deadline=None)
@given(coprime_lists)
def test_summary_invariants(gens):
    gs = sg.validate_generators(gens)
    s = sg.summarize(gs)
    assert s.nu + s.genus == s.frobenius + 1
    assert 2 * s.genus >= s.frobenius + 1
    assert max(s.pseudo_frobenius) == s.frobenius
    assert s.type == len(s.pseudo_frobenius)


@settings(max_examples=100, deadline=None)
@given(coprime_lists)
def test_minimal_generators_idempotent_and_generating(gens):
    gs = sg.validate_generators(gens)
    mg = sg.minimal_generators(gs)
    assert sg.minimal_generators(mg) == mg
    assert all(sg.membership(mg, g) for g in gs.generators)
    assert sg.apery_table(mg).w == sg.apery_table(gs).w
