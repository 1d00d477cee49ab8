import pytest

from kronstab.lr import (
    ContainmentError,
    lr_coefficient,
    lr_triple,
    perp,
    schur_product,
    skew_expansion,
)
from kronstab.partitions import add, contains, partitions_of, transpose
from kronstab.schur import SchurExpansion
from oracles import poly_mul, schur_coefficients, ssyt_polynomial


def oracle_product(mu, nu):
    k = max(sum(mu) + sum(nu), 1)
    poly = poly_mul(ssyt_polynomial(mu, (), k), ssyt_polynomial(nu, (), k))
    return schur_coefficients(poly, k)


def oracle_skew(outer, inner):
    k = max(sum(outer) - sum(inner), 1)
    return schur_coefficients(ssyt_polynomial(outer, inner, k), k)


def test_examples():
    assert lr_coefficient((2,), (2,), (4,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert oracle_product((2, 1), (2, 1))[(3, 2, 1)] == 2


def test_mismatch_is_zero():
    assert lr_coefficient((2,), (1,), (4,)) == 0
    assert lr_coefficient((3,), (1,), (2, 2)) == 0


def test_highest_term_is_one():
    for mu in partitions_of(3):
        for nu in partitions_of(3):
            assert lr_coefficient(mu, nu, add(mu, nu)) == 1


@pytest.mark.parametrize("total", range(0, 6))
def test_products_match_polynomial_oracle(total):
    for a in range(total + 1):
        for mu in partitions_of(a):
            for nu in partitions_of(total - a):
                expected = oracle_product(mu, nu)
                got = {lam: lr_coefficient(mu, nu, lam) for lam in partitions_of(total)}
                assert {k: v for k, v in got.items() if v} == expected
                assert schur_product(SchurExpansion.schur(mu), SchurExpansion.schur(nu)) == expected


@pytest.mark.parametrize("n", range(0, 9))
def test_commutative_and_transpose_symmetric(n):
    for lam in partitions_of(n):
        lt = transpose(lam)
        for a in range(n + 1):
            for mu in partitions_of(a):
                if not contains(lam, mu):
                    continue
                for nu in partitions_of(n - a):
                    c = lr_coefficient(mu, nu, lam)
                    assert c == lr_coefficient(nu, mu, lam)
                    assert c == lr_coefficient(transpose(mu), transpose(nu), lt)


def test_lr_triple():
    assert lr_triple((2, 1), (), (), (2, 1)) == 1
    assert lr_triple((1,), (1,), (1,), (2, 1)) == 2
    assert lr_triple((1,), (1,), (1,), (3,)) == 1
    # iterate Pieri: standard tableaux of shape (2,1)
    assert lr_triple((1,), (1,), (1,), (1, 1, 1)) == 1


def test_skew_expansion():
    assert skew_expansion((2, 1), (1,)) == {(2,): 1, (1, 1): 1}
    assert oracle_skew((2, 1), (1,)) == {(2,): 1, (1, 1): 1}
    assert skew_expansion((3, 2), (3, 2)) == {(): 1}
    assert skew_expansion((3, 2), ()) == {(3, 2): 1}
    with pytest.raises(ContainmentError):
        skew_expansion((2,), (1, 1))


@pytest.mark.parametrize("outer", [(3, 2, 1), (4, 2), (3, 3, 1), (4, 1, 1)])
def test_skew_against_oracle(outer):
    for k in range(sum(outer) + 1):
        for inner in partitions_of(k):
            if contains(outer, inner):
                assert skew_expansion(outer, inner) == oracle_skew(outer, inner)


def test_perp():
    f = SchurExpansion({(3, 1): 2, (2,): -1})
    assert perp(SchurExpansion.schur(()), f) == f
    assert perp(SchurExpansion.schur((2, 1)), SchurExpansion.schur((2, 1))) == {(): 1}
    assert perp(SchurExpansion.schur((1,)), SchurExpansion.schur((2, 1))) == {(2,): 1, (1, 1): 1}
    assert perp(SchurExpansion.schur((3,)), SchurExpansion.schur((2, 2))) == 0
