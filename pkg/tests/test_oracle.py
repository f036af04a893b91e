import pytest

from braidcx import models
from braidcx.errors import OracleBudgetExceeded
from braidcx.oracle import (
    GraphModel,
    build_udc,
    check_boundary_squared,
    cube_betti0,
    cube_h1,
    cube_pi1,
    oracle_h1,
    subdivide_for,
)
from braidcx.presentation import presentation_h1
from braidcx.smith import AbelianInvariants, free


def graph(X):
    return GraphModel.from_complex(X)


def test_subdivide_k5():
    G = subdivide_for(graph(models.complete_graph(5)), 2)
    assert (G.n_vertices, len(G.edges)) == (25, 30)


def test_subdivide_edge():
    G = subdivide_for(graph(models.path(1)), 2)
    assert (G.n_vertices, len(G.edges)) == (4, 3)


def test_subdivision_not_idempotent():
    G = subdivide_for(graph(models.path(1)), 1)
    assert len(subdivide_for(G, 1).edges) == 4


def test_path_of_three_edges():
    C = build_udc(graph(models.path(3)), 2)
    assert C.census() == {0: 6, 1: 6, 2: 1}
    assert C.euler_characteristic == 1 and cube_betti0(C) == 1
    assert cube_h1(C) == free(0)


def test_tripod():
    C = build_udc(graph(models.star_tree(3)), 2)
    assert (C.count(0), C.count(1), C.count(2)) == (6, 6, 0)
    assert C.euler_characteristic == 0 and cube_h1(C) == free(1)


def test_one_strand_is_the_graph():
    G = graph(models.complete_graph(4))
    C = build_udc(G, 1)
    assert C.census() == {0: 4, 1: 6}
    assert cube_h1(C) == free(3)


@pytest.mark.parametrize("make, n", [(lambda: models.star_tree(4), 2), (models.figure_eight, 2),
                                     (lambda: models.theta(3), 3), (lambda: models.complete_graph(4), 2)])
def test_boundary_squares_to_zero(make, n):
    C = build_udc(subdivide_for(graph(make()), n), n)
    check_boundary_squared(C)


@pytest.mark.parametrize("make, expected", [
    (lambda: models.star_tree(3), free(1)),
    (lambda: models.complete_graph(5), AbelianInvariants(6, (2,))),
    (lambda: models.cycle(3), free(1)),
])
def test_h1_values(make, expected):
    assert oracle_h1(make(), 2) == expected


@pytest.mark.parametrize("make", [lambda: models.star_tree(3), lambda: models.path(3), models.figure_eight,
                                  lambda: models.complete_bipartite(2, 3)])
def test_pi1_abelianizes_to_h1(make):
    C = build_udc(subdivide_for(graph(make()), 2), 2)
    assert presentation_h1(cube_pi1(C)) == cube_h1(C)


def test_pi1_of_path_is_trivial():
    C = build_udc(graph(models.path(3)), 2)
    P = cube_pi1(C)
    assert len(P.generators) == 1 and len(P.relators) == 1
    assert presentation_h1(P) == free(0)


def test_extra_subdivision_is_stable():
    X = models.theta(3)
    once = subdivide_for(graph(X), 2)
    assert cube_h1(build_udc(subdivide_for(once, 1), 2, max_dim=2)) == oracle_h1(X, 2)


def test_budget():
    with pytest.raises(OracleBudgetExceeded):
        oracle_h1(models.complete_graph(5), 2, limit=100)
