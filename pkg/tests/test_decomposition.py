import networkx as nx
import pytest

from braidcx import models
from braidcx.complex import is_cycle, read_complex
from braidcx.decomposition import (
    BranchedSurface,
    ClosureNode,
    OneCutNode,
    Surface,
    TreeStar,
    TwoCutNode,
    classify_elementary,
    closure,
    connected_sum,
    decompose,
    find_cuts,
    is_vertex_k_connected,
    leaves,
    prepare,
    recompose,
    unwrap,
)
from braidcx.embedding import smooth
from braidcx.errors import GuardFailed, NotElementary
from braidcx.homology import h1_space
from braidcx.reduction import simplify
from conftest import CORPUS


def same_graph(X, Y) -> bool:
    """Homeomorphic graphs: isomorphic after smoothing degree-2 vertices."""
    return nx.is_isomorphic(smooth(X.one_skeleton()), smooth(Y.one_skeleton()))


class TestClosure:
    def test_star_closes_to_theta(self):
        assert same_graph(closure(models.star_tree(4), ["1", "2", "3", "4"]), models.theta(4))

    def test_arc_closes_to_circle(self):
        C = closure(models.path(2), ["0", "2"])
        assert is_cycle(C)

    def test_trivial_closure(self):
        X = models.path(3)
        assert same_graph(closure(X, ["0"]), X)

    def test_unwrap_theta_hub(self):
        T, new = unwrap(models.theta(3), "a")
        assert len(new) == 3 and same_graph(T, models.star_tree(3))

    def test_unwrap_circle(self):
        A, new = unwrap(models.cycle(5), "0")
        assert len(new) == 2 and nx.is_tree(A.one_skeleton())

    def test_unwrap_cut_vertex_refused(self):
        with pytest.raises(GuardFailed):
            unwrap(models.figure_eight(), "0")


class TestConnectedSum:
    def test_theta_is_identity(self):
        X = models.complete_graph(4)
        th = closure(models.star_tree(3), ["1", "2", "3"])
        assert same_graph(connected_sum(X, "0", th, "^"), X)

    def test_closed_tripods_sum_to_theta(self):
        th = closure(models.star_tree(3), ["1", "2", "3"])
        assert same_graph(connected_sum(th, "^", th, "^"), models.theta(3))

    def test_boundary_wedge(self):
        # k = 1 at whisker tips: two disks joined by an interval
        D = read_complex(CORPUS / "disk_whisker.cx")
        X = connected_sum(D, "y", D, "y")
        assert X.is_connected and X.euler_characteristic == 1 and h1_space(X) == h1_space(D)
        assert len(X.cells(2)) == 2


class TestCuts:
    def test_figure_eight(self):
        cuts = find_cuts(models.figure_eight(), 1)
        assert [c.vertices for c in cuts] == [("0",)] and cuts[0].components == 2

    def test_theta_two_cut(self):
        X = prepare(models.theta(3))
        assert find_cuts(X, 1) == []
        assert [c.vertices for c in find_cuts(X, 2)] == [("a", "b")]

    def test_tree_center(self):
        assert [c.vertices for c in find_cuts(prepare(models.star_tree(4)), 1)] == [("0",)]

    def test_connectivity(self):
        assert is_vertex_k_connected(models.theta(3), 2)
        assert not is_vertex_k_connected(models.theta(3), 3)
        assert is_vertex_k_connected(models.complete_graph(5), 3)
        assert is_vertex_k_connected(models.complete_bipartite(3, 3), 3)
        assert not is_vertex_k_connected(models.star_tree(3), 2)

    @pytest.mark.parametrize("make", [lambda: models.complete_graph(4), lambda: models.complete_graph(5),
                                      lambda: models.complete_bipartite(3, 3)])
    def test_three_connected_has_theta_between_branch_pairs(self, make):
        # Menger: three internally disjoint paths between any two branch vertices
        G = make().one_skeleton()
        branch = [v for v, d in G.degree() if d >= 3]
        for i, u in enumerate(branch):
            for w in branch[i + 1:]:
                if not G.has_edge(u, w):
                    assert nx.node_connectivity(G, u, w) >= 3


class TestDecompose:
    def test_figure_eight(self):
        node = decompose(models.figure_eight())
        assert isinstance(node, OneCutNode) and (node.k, node.m) == (4, 2)
        assert all(is_cycle(p.complex) for p in node.parts)

    def test_theta(self):
        node = decompose(models.theta(3))
        assert isinstance(node, TwoCutNode) and node.m == 3
        assert all(is_cycle(p.complex) for p in node.parts)

    def test_star_is_leaf(self):
        (leaf,) = leaves(decompose(models.star_tree(5)))
        assert leaf.kind == TreeStar(5)

    def test_circle_is_closure(self):
        node = decompose(models.cycle(4))
        assert isinstance(node, ClosureNode) and node.k == 2

    def test_k5_is_three_connected_leaf(self):
        (leaf,) = leaves(decompose(models.complete_graph(5)))
        assert leaf.block == "three-connected"

    @pytest.mark.parametrize("name", ["wedge3", "disk_k4", "h_tree", "two_disks_edge", "s0_tripod", "k23"])
    def test_recompose(self, name):
        X, _ = simplify(read_complex(CORPUS / f"{name}.cx"))
        R = recompose(decompose(X))
        assert R.euler_characteristic == X.euler_characteristic
        assert h1_space(R) == h1_space(X)


class TestElementary:
    def test_octahedron(self):
        assert classify_elementary(models.octahedron()) == Surface(True, 0, 0)

    def test_s0(self):
        assert classify_elementary(models.s0_model()) == BranchedSurface()

    def test_star(self):
        assert classify_elementary(models.star_tree(5)) == TreeStar(5)

    def test_figure_eight_not_elementary(self):
        with pytest.raises(NotElementary):
            classify_elementary(models.figure_eight())
