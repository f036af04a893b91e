from math import comb

import pytest

from braidcx import models
from braidcx.oracle import oracle_h1
from braidcx.presentation import (
    GroupPresentation,
    LeafLabelledTree,
    S,
    SPrime,
    T,
    Word,
    abelianize,
    closure_presentation_boundary,
    commutator,
    pair_classes,
    presentation_h1,
    rank_r,
    realize_closure,
    tietze_simplify,
    tree_b2,
    tree_closure_b2,
    tree_r2,
    twotrees_b2,
)
from braidcx.presentation import Free
from braidcx.smith import AbelianInvariants, free


def star(k):
    return LeafLabelledTree.from_tree(models.star_tree(k))


def h_tree():
    return LeafLabelledTree.from_tree(models.h_tree(), {"1": 1, "2": 2, "3": 3, "4": 4})


class TestRank:
    def test_values(self):
        assert rank_r(2, 3, 3) == 1
        assert rank_r(2, 5, 5) == 6
        assert rank_r(3, 3, 3) == 3
        assert rank_r(2, 4, 2) == 2

    @pytest.mark.parametrize("k", range(2, 9))
    def test_two_strands_star(self, k):
        assert rank_r(2, k, k) == comb(k - 1, 2)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            rank_r(2, 2, 3)

    def test_tree_r2(self):
        assert tree_r2(star(6)) == comb(5, 2)
        assert tree_r2(h_tree()) == 2
        assert tree_r2(LeafLabelledTree.from_tree(models.path(4))) == 0


class TestPairClasses:
    def test_star_singletons(self):
        classes = pair_classes(star(5))
        assert len(classes) == comb(4, 2) and all(len(c.members) == 1 for c in classes)

    def test_h_tree(self):
        got = sorted(sorted(ij for ij, _ in c.members) for c in pair_classes(h_tree()))
        assert got == [[(2, 3), (2, 4)], [(3, 4)]]

    def test_two_leaves(self):
        assert pair_classes(LeafLabelledTree.from_tree(models.path(3))) == []

    def test_swapped_branches_get_negative_sign(self):
        # leaves 2 and 4 share a branch at v, 3 sits on the other side
        tree = LeafLabelledTree.from_tree(models.h_tree(), {"1": 1, "3": 2, "2": 3, "4": 4})
        signs = {ij: s for c in pair_classes(tree) for ij, s in c.members}
        assert -1 in signs.values()


class TestTreePresentations:
    def test_t3(self):
        P = tree_b2(star(3))
        assert len(P.generators) == 1 and not P.relators
        assert presentation_h1(P) == free(1)

    def test_h_tree_free_rank_two(self):
        P = tietze_simplify(tree_b2(h_tree()))
        assert len(P.generators) == 2 and not P.relators

    def test_t5(self):
        assert presentation_h1(tree_b2(star(5))) == free(6)

    @pytest.mark.parametrize("k", [3, 4])
    def test_theta_closure(self, k):
        assert presentation_h1(tree_closure_b2(star(k))) == free(comb(k, 2))

    def test_h_tree_closure_matches_oracle(self):
        tree = h_tree()
        value = presentation_h1(tree_closure_b2(tree))
        assert value == free(5)
        assert oracle_h1(realize_closure(tree), 2) == value

    def test_twotrees_tripods(self):
        P = twotrees_b2(star(3), star(3))
        assert len(P.generators) == 4 and len(P.relators) == 1
        assert presentation_h1(P) == free(3)

    def test_twotrees_leaf_count_mismatch(self):
        with pytest.raises(ValueError):
            twotrees_b2(star(3), star(4))

    def test_closure_boundary(self):
        sigma = Free("sigma")
        disk = GroupPresentation((sigma,), ())
        assert closure_presentation_boundary(disk, [sigma], 1) == disk
        P = closure_presentation_boundary(disk, [sigma], 2)
        assert presentation_h1(P) == free(2)
        assert presentation_h1(closure_presentation_boundary(disk, [], 3)) == free(3)


class TestWords:
    def test_free_reduction(self):
        a, b = Free("a"), Free("b")
        w = Word.of(a, b, (b, -1), (a, -1), b)
        assert w.reduce() == Word.of(b)

    def test_abelianize_rows(self):
        a, b = Free("a"), Free("b")
        assert abelianize(GroupPresentation((a, b), ())) == []
        assert abelianize(GroupPresentation((a, b), (Word.of(a, b, a, b),))) == [[2, 2]]

    def test_conjugation_relator_exponents(self):
        P = twotrees_b2(star(3), star(3))
        (row,) = abelianize(P)
        gens = list(P.generators)
        assert row[gens.index(SPrime(2, 3))] == 1 and row[gens.index(S(2, 3))] == 1
        assert row[gens.index(T(2))] == 0 and row[gens.index(T(3))] == 0

    def test_commutator_abelianizes_to_zero(self):
        a, b = Free("a"), Free("b")
        P = GroupPresentation((a, b), (commutator(Word.of(a), Word.of(b)),))
        assert presentation_h1(P) == free(2)

    def test_torsion(self):
        a = Free("a")
        assert presentation_h1(GroupPresentation((a,), (Word.of(a, a),))) == AbelianInvariants(0, (2,))
