import random

import pytest

from braidcx.smith import (
    AbelianInvariants,
    cokernel,
    determinant,
    diagonal,
    direct_sum,
    free,
    h1_dense,
    identity,
    matmul,
    rank_and_torsion,
    snf,
    sparse_cokernel,
)


def test_identity():
    D, U, V = snf(identity(3))
    assert D == U == V == identity(3)


def test_two_by_two():
    D, _, _ = snf([[2, 4], [6, 8]])
    assert diagonal(D) == [2, 4]


def test_zero_matrix():
    D, _, _ = snf([[0, 0], [0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0], [0, 0]]


def test_rank_and_torsion():
    assert rank_and_torsion([[2, 0], [0, 3]]) == (2, [6])


def test_cokernel():
    # Z^3 / <(2, 0, 0), (0, 4, 0)>
    assert cokernel([[2, 0, 0], [0, 4, 0]], 3) == AbelianInvariants(1, (2, 4))
    assert cokernel([], 2) == free(2)


def test_sparse_agrees_with_dense():
    rng = random.Random(7)
    for _ in range(200):
        ncols = rng.randint(1, 7)
        rows = [[rng.choice([0, 0, 0, 1, -1, 2, 3]) for _ in range(ncols)] for _ in range(rng.randint(0, 7))]
        sparse = [{c: v for c, v in enumerate(r) if v} for r in rows]
        assert sparse_cokernel(sparse, ncols) == cokernel(rows, ncols)


def test_invariants_normalise():
    assert AbelianInvariants.from_cyclic(1, [2, 3, 1, 0]) == AbelianInvariants(2, (6,))
    assert str(AbelianInvariants(2, (2, 4))) == "Z^2 (+) Z/2 (+) Z/4"
    assert str(free(0)) == "0"


def test_direct_sum():
    assert direct_sum([free(1), AbelianInvariants(0, (2,)), AbelianInvariants(1, (3,))]) == \
        AbelianInvariants(2, (6,))


def test_invalid_torsion_rejected():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (4, 2))


def test_h1_of_circle_chain():
    # triangle boundary: three vertices, three edges, no 2-cells
    d1 = [[-1, 0, 1], [1, -1, 0], [0, 1, -1]]
    assert h1_dense(d1, [], 3) == free(1)


def test_determinant():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant(matmul([[2, 1], [1, 1]], [[1, -1], [-1, 2]])) == 1
