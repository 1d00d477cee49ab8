import json

import pytest

from kronstab.kronecker import kronecker_coefficient
from kronstab.lr import lr_coefficient
from kronstab.partitions import add, dagger, pad, partitions_of, partitions_up_to, tail
from kronstab.reduced import (
    SupportTable,
    evaluation_degree,
    murnaghan_expansion,
    recover_kronecker,
    reduced_coefficient,
    reduced_coefficient_littlewood,
)
from kronstab.bounds import bound_n2
from oracles import kronecker as oracle_kronecker

SUPP_22 = {(): 1, (1,): 1, (1, 1): 1, (1, 1, 1): 1, (2,): 2, (2, 1): 2,
           (2, 2): 1, (3,): 1, (3, 1): 1, (4,): 1}


@pytest.mark.parametrize("method", ["stable", "littlewood"])
def test_examples(method):
    assert reduced_coefficient((2,), (2,), (2,), method=method) == 2
    assert reduced_coefficient((2,), (2,), (4,), method=method) == 1
    assert reduced_coefficient((1,), (1,), (1, 1, 1), method=method) == 0
    assert reduced_coefficient((), (), (), method=method) == 1
    for a in partitions_of(3):
        for b in partitions_of(2):
            assert reduced_coefficient(a, b, add(a, b), method=method) == 1


def test_unknown_method():
    with pytest.raises(ValueError):
        reduced_coefficient((1,), (1,), (1,), method="guess")


def test_littlewood_alias():
    assert reduced_coefficient_littlewood((2, 1), (2,), (3, 1)) == reduced_coefficient((2, 1), (2,), (3, 1))


def test_symmetric_in_all_three():
    a, b, c = (2, 1), (2,), (2, 1)
    vals = {reduced_coefficient(*t, method="littlewood") for t in [(a, b, c), (b, c, a), (c, a, b), (b, a, c)]}
    assert len(vals) == 1


def test_support_table():
    assert dict(murnaghan_expansion((2,), (2,)).items()) == SUPP_22
    for beta in partitions_up_to(4):
        assert dict(murnaghan_expansion((), beta).items()) == {beta: 1}
    table = murnaghan_expansion((2,), (2,))
    assert table[(5,)] == 0
    data = json.loads(json.dumps(table.to_json()))
    assert data["alpha"] == [2] and data["degree"] == 8
    assert {tuple(d["partition"]): d["coeff"] for d in data["support"]} == SUPP_22
    assert isinstance(table, SupportTable)


def test_support_of_one_one_against_permutation_sum():
    # g^{gamma[6]}_{(5,1),(5,1)} from the raw permutation sum, past stab = 4
    expected = {}
    for w in range(0, 3):
        for gamma in partitions_of(w):
            v = oracle_kronecker(pad(gamma, 6), (5, 1), (5, 1))
            if v:
                expected[gamma] = v
    assert expected == {(): 1, (1,): 1, (1, 1): 1, (2,): 1}
    assert dict(murnaghan_expansion((1,), (1,)).items()) == expected


def test_recover_examples():
    assert recover_kronecker((2, 2), (2, 2), (2, 2)) == 1
    assert reduced_coefficient((2,), (2,), dagger((2, 2), 1)) == 2
    assert reduced_coefficient((2,), (2,), dagger((2, 2), 2)) == 1
    for n in range(0, 7):
        lam = (n,) if n else ()
        assert recover_kronecker(lam, lam, lam) == 1
    with pytest.raises(ValueError):
        recover_kronecker((2,), (1,), (1,))


def test_recover_matches_characters_n5():
    shapes = partitions_of(5)
    for lam in shapes:
        for mu in shapes:
            for nu in shapes:
                assert recover_kronecker(lam, mu, nu) == kronecker_coefficient(lam, mu, nu)


@pytest.mark.parametrize("n", range(1, 7))
def test_terms_past_length_product_vanish(n):
    shapes = partitions_of(n)
    for lam in shapes:
        for mu in shapes:
            for nu in shapes:
                limit = len(mu) * len(nu)
                for i in range(limit + 1, limit + 4):
                    assert reduced_coefficient(tail(mu), tail(nu), dagger(lam, i)) == 0


def test_murnaghan_littlewood_small():
    for a in partitions_up_to(3):
        for b in partitions_up_to(3):
            for g in partitions_of(sum(a) + sum(b)):
                assert reduced_coefficient(a, b, g) == lr_coefficient(a, b, g)


def test_plateau_past_n2():
    for a in partitions_up_to(3):
        for b in partitions_up_to(3):
            for g, gbar in murnaghan_expansion(a, b).items():
                start = evaluation_degree(a, b, g)
                assert start >= bound_n2(a, b, g)
                for n in range(start, start + 4):
                    assert kronecker_coefficient(pad(g, n), pad(a, n), pad(b, n)) == gbar
