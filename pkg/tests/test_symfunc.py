"""Coefficient engine checks: tableau counts, LR, characters, Kronecker."""

import pytest

from diagalg.symfunc import (
    centralizer_order,
    check_partition,
    conjugacy_class_size,
    conjugate,
    kronecker_coeff,
    lr3_coeff,
    lr_coeff,
    lr_coeff_by_symbol_addition,
    mn_character,
    partitions_of,
    syt_count,
)

from math import comb, factorial


def syt_count_brute(shape):
    """Oracle: count standard fillings as downward chains of shapes."""
    shape = tuple(shape)
    if not shape:
        return 1
    total = 0
    for i in range(len(shape)):
        if shape[i] > (shape[i + 1] if i + 1 < len(shape) else 0):
            smaller = list(shape)
            smaller[i] -= 1
            if smaller[-1] == 0:
                smaller.pop()
            total += syt_count_brute(tuple(smaller))
    return total


# classic character tables, frozen by hand:
# S_2 classes (1,1), (2); S_3 classes (1,1,1), (2,1), (3)
S2_TABLE = {
    (2,): {(1, 1): 1, (2,): 1},
    (1, 1): {(1, 1): 1, (2,): -1},
}
S3_TABLE = {
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
}


class TestPartitions:
    def test_validation_rejects_increasing(self):
        with pytest.raises(ValueError):
            check_partition((1, 2))

    def test_validation_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            check_partition((3, 0))
        with pytest.raises(ValueError):
            check_partition((3, -1))

    def test_empty_partition_is_valid(self):
        assert check_partition(()) == ()

    def test_partition_counts(self):
        assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_conjugate(self):
        assert conjugate((3, 2, 1)) == (3, 2, 1)
        assert conjugate((4, 1)) == (2, 1, 1, 1)
        assert conjugate(()) == ()


class TestSytCount:
    def test_staircase(self):
        assert syt_count((3, 2, 1)) == 16

    def test_single_row(self):
        for n in range(1, 9):
            assert syt_count((n,)) == 1

    def test_empty(self):
        assert syt_count(()) == 1

    def test_hook_matches_enumeration_to_size_8(self):
        for size in range(9):
            for shape in partitions_of(size):
                assert syt_count(shape) == syt_count_brute(shape), shape


class TestLRCoeff:
    def test_golden_pair(self):
        assert lr_coeff((2,), (2, 1), (3, 2)) == 1

    def test_golden_set_of_size_five(self):
        ones = {(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)}
        for nu in partitions_of(5):
            expected = 1 if nu in ones else 0
            assert lr_coeff((2,), (2, 1), nu) == expected, nu

    def test_size_mismatch_is_zero(self):
        assert lr_coeff((2,), (2, 1), (5,)) == 0
        assert lr_coeff((2,), (2, 1), (9,)) == 0

    def test_one_row_splitting(self):
        for r in range(7):
            for k in range(r + 1):
                lam = (k,) if k else ()
                mu = (r - k,) if r - k else ()
                nu = (r,) if r else ()
                assert lr_coeff(lam, mu, nu) == 1

    def test_symmetry_in_first_two_arguments(self):
        for a_size in range(6):
            for b_size in range(a_size + 1):  # the swapped pair covers the rest
                for lam in partitions_of(a_size):
                    for mu in partitions_of(b_size):
                        for nu in partitions_of(a_size + b_size):
                            assert lr_coeff(lam, mu, nu) == lr_coeff(mu, lam, nu)

    def test_two_routes_agree_to_size_five(self):
        for a_size in range(6):
            for b_size in range(6 - a_size):
                for lam in partitions_of(a_size):
                    for mu in partitions_of(b_size):
                        for nu in partitions_of(a_size + b_size):
                            assert lr_coeff(lam, mu, nu) == lr_coeff_by_symbol_addition(
                                lam, mu, nu
                            ), (lam, mu, nu)

    def test_branching_total(self):
        # sum over nu of c * f^nu equals C(|lam|+|mu|, |lam|) f^lam f^mu
        for a_size in range(5):
            for b_size in range(5 - a_size):
                for lam in partitions_of(a_size):
                    for mu in partitions_of(b_size):
                        total = sum(
                            lr_coeff(lam, mu, nu) * syt_count(nu)
                            for nu in partitions_of(a_size + b_size)
                        )
                        expected = comb(a_size + b_size, a_size) * syt_count(lam) * syt_count(mu)
                        assert total == expected, (lam, mu)


class TestLR3:
    def test_one_row_triples(self):
        for r in range(7):
            for k in range(r + 1):
                for m in range(r - k + 1):
                    lam = (k,) if k else ()
                    mu = (m,) if m else ()
                    eta = (r - k - m,) if r - k - m else ()
                    assert lr3_coeff(lam, mu, eta, (r,) if r else ()) == 1

    def test_multirow_first_argument_vanishes_on_one_row(self):
        assert lr3_coeff((1, 1), (1,), (1,), (3,)) == 0

    def test_intermediate_sum(self):
        assert lr3_coeff((1,), (1,), (1,), (2, 1)) == 2


class TestCharacters:
    def test_size_mismatch_raises(self):
        with pytest.raises(ValueError):
            mn_character((2, 1), (2,))

    def test_trivial_character(self):
        for n in range(1, 7):
            for rho in partitions_of(n):
                assert mn_character((n,), rho) == 1

    def test_s2_s3_tables(self):
        for lam, row in S2_TABLE.items():
            for rho, value in row.items():
                assert mn_character(lam, rho) == value
        for lam, row in S3_TABLE.items():
            for rho, value in row.items():
                assert mn_character(lam, rho) == value

    def test_identity_value_is_dimension(self):
        for n in range(1, 5):
            for lam in partitions_of(n):
                assert mn_character(lam, (1,) * n) == syt_count(lam)

    def test_sign_of_transposition(self):
        assert mn_character((1, 1), (2,)) == -1

    def test_centralizer_and_class_size(self):
        assert centralizer_order((1, 1, 1)) == 6
        assert centralizer_order((2, 1)) == 2
        assert centralizer_order((3,)) == 3
        for n in range(1, 7):
            assert sum(conjugacy_class_size(rho) for rho in partitions_of(n)) == factorial(n)

    def test_column_orthogonality_small(self):
        # sum over shapes of chi(rho)^2 equals the centralizer order at rho
        for n in range(1, 7):
            for rho in partitions_of(n):
                total = sum(mn_character(lam, rho) ** 2 for lam in partitions_of(n))
                assert total == centralizer_order(rho)


class TestKronecker:
    def test_all_trivial(self):
        for n in range(1, 7):
            assert kronecker_coeff((n,), (n,), (n,)) == 1

    def test_sign_times_sign(self):
        assert kronecker_coeff((1, 1), (1, 1), (2,)) == 1

    def test_trivial_times_sign(self):
        assert kronecker_coeff((2,), (1, 1), (2,)) == 0

    def test_size_mismatch_is_zero(self):
        assert kronecker_coeff((2,), (1,), (2,)) == 0

    def test_full_symmetry_to_size_five(self):
        from itertools import permutations

        for n in range(1, 6):
            shapes = partitions_of(n)
            for lam in shapes:
                for mu in shapes:
                    for nu in shapes:
                        base = kronecker_coeff(lam, mu, nu)
                        for a, b, c in permutations((lam, mu, nu)):
                            assert kronecker_coeff(a, b, c) == base

    def test_tensor_square_dimension(self):
        # sum over nu of g * f^nu equals f^lam * f^mu
        for n in range(1, 6):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    total = sum(
                        kronecker_coeff(lam, mu, nu) * syt_count(nu)
                        for nu in partitions_of(n)
                    )
                    assert total == syt_count(lam) * syt_count(mu)
