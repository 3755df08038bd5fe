import random
from fractions import Fraction
from itertools import combinations

import pytest

from theta_homology.linalg import RationalMatrix, is_zero_composition


def dense_rank(rows):
    """Oracle: textbook elimination on dense Fraction rows."""
    rows = [[Fraction(v) for v in row] for row in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col] / rows[r][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank


def minor_rank(rows):
    """Oracle: largest size of a square minor with nonzero determinant."""
    def det(mat):
        if len(mat) == 1:
            return mat[0][0]
        total = Fraction(0)
        for j, head in enumerate(mat[0]):
            if head:
                minor = [row[:j] + row[j + 1:] for row in mat[1:]]
                total += (-1) ** j * head * det(minor)
        return total

    n, m = len(rows), len(rows[0]) if rows else 0
    for size in range(min(n, m), 0, -1):
        for ri in combinations(range(n), size):
            for ci in combinations(range(m), size):
                sub = [[Fraction(rows[i][j]) for j in ci] for i in ri]
                if det(sub):
                    return size
    return 0


def to_dense(mat):
    return [[mat.entry(i, j) for j in range((mat.cols))] for i in range(mat.rows)]


def test_rank_examples():
    assert RationalMatrix.from_rows([[1, 2], [2, 4], [3, 6]]).rank() == 1
    assert RationalMatrix.from_rows([[1, 0], [0, 1]]).rank() == 2
    assert RationalMatrix(3, 5).rank() == 0
    assert RationalMatrix(0, 0).rank() == 0


def test_kernel_dim():
    mat = RationalMatrix.from_rows([[1, 2], [2, 4], [3, 6]])
    assert mat.kernel_dim() == 1
    assert RationalMatrix(4, 7).kernel_dim() == 7
    assert RationalMatrix.from_rows([[1, 0], [0, 1]]).kernel_dim() == 0


def test_entry_and_triplets():
    mat = RationalMatrix(2, 3, {(0, 1): Fraction(1, 2), (1, 2): -3})
    assert mat.entry(0, 1) == Fraction(1, 2)
    assert mat.entry(0, 0) == 0
    assert mat.to_triplets() == [(0, 1, Fraction(1, 2)), (1, 2, Fraction(-3))]
    with pytest.raises(IndexError):
        mat.entry(2, 0)


def test_zero_entries_dropped():
    mat = RationalMatrix(2, 2, {(0, 0): 0, (1, 1): 5})
    assert mat.to_triplets() == [(1, 1, Fraction(5))]


def test_out_of_range_entry_rejected():
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, {(2, 0): 1})


def test_from_columns():
    mat = RationalMatrix.from_columns(3, [{0: 1, 2: 4}, {1: Fraction(1, 3)}])
    assert mat.rows == 3 and mat.cols == 2
    assert mat.entry(2, 0) == 4
    assert mat.entry(1, 1) == Fraction(1, 3)


def test_matmul_and_zero_composition():
    a = RationalMatrix.from_rows([[1, 2], [3, 4]])
    b = RationalMatrix.from_rows([[0, 1], [1, 0]])
    assert to_dense(a @ b) == [[2, 1], [4, 3]]
    # columns of c span the kernel of a plus cancellation
    c = RationalMatrix.from_rows([[2], [-1]])
    d = RationalMatrix.from_rows([[1, 2]])
    assert is_zero_composition(d, c)
    assert not is_zero_composition(a, c)
    with pytest.raises(ValueError):
        a @ RationalMatrix(3, 1)


def test_transpose_scale_augment():
    a = RationalMatrix.from_rows([[1, 2, 0], [0, 1, 5]])
    assert to_dense(a.transpose()) == [[1, 0], [2, 1], [0, 5]]
    assert a.scaled(Fraction(-1, 2)).entry(1, 2) == Fraction(-5, 2)
    stacked = a.augment(RationalMatrix.from_rows([[7], [8]]))
    assert stacked.cols == 4
    assert stacked.entry(0, 3) == 7
    with pytest.raises(ValueError):
        a.augment(RationalMatrix(3, 1))


def test_rank_invariant_under_transpose_and_scaling():
    rng = random.Random(7)
    for _ in range(25):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        mat = RationalMatrix(
            rows,
            cols,
            {
                (i, j): rng.randrange(-3, 4)
                for i in range(rows)
                for j in range(cols)
                if rng.random() < 0.6
            },
        )
        r = mat.rank()
        assert mat.transpose().rank() == r
        assert mat.scaled(Fraction(3, 7)).rank() == r
        assert mat.scaled(0).rank() == 0


def test_rank_against_dense_oracle():
    rng = random.Random(20240817)
    for _ in range(60):
        rows = rng.randrange(0, 8)
        cols = rng.randrange(0, 8)
        dense = [
            [
                Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
                if rng.random() < 0.5
                else Fraction(0)
                for _ in range(cols)
            ]
            for _ in range(rows)
        ]
        mat = RationalMatrix.from_rows(dense) if rows else RationalMatrix(0, cols)
        assert mat.rank() == dense_rank(dense)


def test_rank_against_minor_oracle():
    rng = random.Random(99)
    for _ in range(20):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        dense = [
            [rng.randrange(-2, 3) for _ in range(cols)] for _ in range(rows)
        ]
        assert RationalMatrix.from_rows(dense).rank() == minor_rank(dense)


def test_rank_exactness_near_cancellation():
    # would report rank 2 in floating point for small epsilon
    eps = Fraction(1, 10**40)
    mat = RationalMatrix.from_rows([[1, 1], [1, 1 + eps]])
    assert mat.rank() == 2
    mat = RationalMatrix.from_rows(
        [[Fraction(1, 3), Fraction(1, 7)], [Fraction(2, 3), Fraction(2, 7)]]
    )
    assert mat.rank() == 1


def test_equality_and_hash():
    a = RationalMatrix.from_rows([[1, 2], [0, 0]])
    b = RationalMatrix(2, 2, {(0, 0): 1, (0, 1): 2})
    assert a == b
    assert hash(a) == hash(b)
    assert a != RationalMatrix(2, 2, {(0, 0): 1})
