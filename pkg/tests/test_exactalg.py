import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import determinantal_divisor_snf, leibniz_det
from tracelattice import exactalg
from tracelattice.exactalg import det, inertia, kronecker, smith_normal_form


def square(max_n=4, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


def random_unimodular(n, rng, steps=12):
    U = exactalg.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            U[i] = [-x for x in U[i]]
            continue
        k = rng.choice([-2, -1, 1, 2])
        U[i] = [a + k * b for a, b in zip(U[i], U[j])]
    return U


class TestDet:
    def test_a2(self):
        assert det([[2, -1], [-1, 2]]) == 3

    def test_identity(self):
        assert det(exactalg.identity(3)) == 1

    def test_gram_12(self):
        assert det([[4, 0, 2, 0], [0, 4, 0, 2], [2, 0, 4, 0], [0, 2, 0, 4]]) == 144

    def test_non_square(self):
        with pytest.raises(ValueError):
            det([[1, 2, 3], [4, 5, 6]])

    @given(square(max_n=5))
    def test_matches_leibniz(self, M):
        assert det(M) == leibniz_det(M)


class TestSmith:
    @pytest.mark.parametrize(
        "M, expected",
        [
            ([[2, 0], [0, 2]], [2, 2]),
            ([[2, -1], [-1, 2]], [1, 3]),
            ([[1, 0], [0, 1]], [1, 1]),
            ([[0, 0], [0, 0]], [0, 0]),
            ([[2, 4], [4, 8]], [2, 0]),
        ],
    )
    def test_examples(self, M, expected):
        assert smith_normal_form(M) == expected

    @given(square(max_n=4))
    def test_matches_determinantal_divisors(self, M):
        assert smith_normal_form(M) == determinantal_divisor_snf(M)

    def test_random_chain_and_product(self):
        rng = random.Random(2024)
        for _ in range(1000):
            n = rng.randint(1, 8)
            M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            s = smith_normal_form(M)
            assert len(s) == n
            for a, b in zip(s, s[1:]):
                assert (b == 0) if a == 0 else b % a == 0
            d = det(M)
            if d:
                prod = 1
                for x in s:
                    prod *= x
                assert prod == abs(d)

    def test_rectangular(self):
        assert smith_normal_form([[1, 1], [1, -1], [2, 0]]) == [1, 2]


class TestInertia:
    def test_examples(self):
        assert inertia([[2, -1], [-1, -1]]) == (1, 1, 0)
        assert inertia([[2, 0], [0, 2]]) == (2, 0, 0)
        assert inertia([[0]]) == (0, 0, 1)

    def test_zero_diagonal_needs_congruence(self):
        assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)

    def test_asymmetric(self):
        with pytest.raises(ValueError):
            inertia([[1, 2], [3, 4]])

    def test_congruence_invariance(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 6)
            A = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    A[i][j] = A[j][i] = rng.randint(-4, 4)
            U = random_unimodular(n, rng)
            assert inertia(exactalg.congruent(U, A)) == inertia(A)

    @given(square(max_n=5, lo=-5, hi=5))
    def test_sums_to_rank_and_det_sign(self, M):
        S = [[M[i][j] + M[j][i] for j in range(len(M))] for i in range(len(M))]
        p, q, z = inertia(S)
        assert p + q + z == len(S)
        d = det(S)
        assert (z > 0) == (d == 0)
        if d:
            assert (-1) ** q == (1 if d > 0 else -1)


class TestKronecker:
    B = [[2, 1], [1, 2]]

    def test_scalar_one(self):
        assert kronecker([[1]], self.B) == self.B

    def test_scalar_two(self):
        assert kronecker([[2]], self.B) == [[4, 2], [2, 4]]

    def test_identity_blocks(self):
        assert kronecker(exactalg.identity(2), self.B) == [
            [2, 1, 0, 0],
            [1, 2, 0, 0],
            [0, 0, 2, 1],
            [0, 0, 1, 2],
        ]

    @given(square(max_n=3, lo=-4, hi=4), square(max_n=3, lo=-4, hi=4))
    def test_det_multiplicativity(self, A, B):
        ra, rb = len(A), len(B)
        assert det(kronecker(A, B)) == det(A) ** rb * det(B) ** ra


def test_row_basis_spans_same_lattice():
    vecs = [[2, 0, 0], [0, 3, 0], [1, 1, 0], [4, 6, 0]]
    basis = exactalg.row_basis(vecs)
    assert len(basis) == 2
    # index of span in Z^2 x {0}: gcd of 2x2 minors of the generators is 1
    assert smith_normal_form([row[:2] for row in basis]) == [1, 1]


def test_ldl_reconstructs():
    G = [[4, 2, 2], [2, 4, 1], [2, 1, 5]]
    L, D = exactalg.ldl(G)
    n = len(G)
    for i in range(n):
        for j in range(n):
            assert sum(L[i][k] * D[k] * L[j][k] for k in range(n)) == G[i][j]
