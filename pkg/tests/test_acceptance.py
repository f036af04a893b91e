"""The eleven acceptance criteria, each with its value check and time budget.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
from contextlib import contextmanager
from math import comb
from time import perf_counter

from conftest import ACCEPTANCE_RESULTS, CORPUS

from braidcx import models
from braidcx.cli import main
from braidcx.complex import barycentric_subdivide, is_simple, read_complex
from braidcx.decomposition import BranchedSurface, decompose, leaves, recompose
from braidcx.embedding import check_surface
from braidcx.homology import h1_braid, h1_space
from braidcx.oracle import oracle_h1
from braidcx.presentation import (
    LeafLabelledTree,
    pair_classes,
    presentation_h1,
    random_tree,
    rank_r,
    realize_twotrees,
    tree_b2,
    tree_closure_b2,
    tree_r2,
    twotrees_b2,
)
from braidcx.reduction import simplify
from braidcx.smith import AbelianInvariants, determinant, diagonal, free, matmul, snf
from braidcx.verdicts import verdict


@contextmanager
def criterion(number: int, budget: float):
    """Record pass/fail for one criterion; the body must finish within ``budget`` seconds."""
    notes = []
    start = perf_counter()
    try:
        yield notes
    except BaseException as exc:
        elapsed = perf_counter() - start
        ACCEPTANCE_RESULTS[number] = (False, f"{type(exc).__name__} after {elapsed:.1f}s: {exc}"[:300])
        raise
    elapsed = perf_counter() - start
    ok = elapsed < budget
    ACCEPTANCE_RESULTS[number] = (ok, f"{'; '.join(notes)} [{elapsed:.1f}s of {budget:g}s]")
    assert ok, f"criterion {number} took {elapsed:.1f}s, budget {budget}s"


def _rules(step):
    yield step
    for child in step.children:
        yield from _rules(child)


def test_criterion_01_tree_rank_vs_oracle():
    with criterion(1, 30) as notes:
        for k, expected in ((3, 1), (4, 3), (5, 6)):
            rank = oracle_h1(models.star_tree(k), 2).free_rank
            assert rank == comb(k - 1, 2) == expected
            notes.append(f"UD2(T{k}) rank {rank}")


def test_criterion_02_theta_rank():
    with criterion(2, 60) as notes:
        for k, expected in ((3, 3), (4, 6)):
            rank = oracle_h1(read_complex(CORPUS / f"theta{k}.cx"), 2).free_rank
            assert rank == comb(k, 2) == expected
            notes.append(f"UD2(Theta{k}) rank {rank}")


def test_criterion_03_higher_n():
    with criterion(3, 120) as notes:
        rank = oracle_h1(models.star_tree(3), 3).free_rank
        assert rank == rank_r(3, 3, 3) == 3
        notes.append(f"UD3(T3) rank {rank}")


def test_criterion_04_nonplanar_torsion():
    # the budget is five minutes per graph; the combined block gets both
    with criterion(4, 600) as notes:
        for filename, expected in (("k5.cx", AbelianInvariants(6, (2,))),
                                   ("k33.cx", AbelianInvariants(4, (2,)))):
            start = perf_counter()
            X = read_complex(CORPUS / filename)
            cert = h1_braid(X, 2)
            assert cert.value == expected
            assert any(s.rule == "three-connected" for s in _rules(cert.root))
            assert oracle_h1(X, 2) == expected
            elapsed = perf_counter() - start
            assert elapsed < 300, f"{X.name} took {elapsed:.1f}s"
            notes.append(f"{X.name}: pipeline = oracle = {expected} ({elapsed:.1f}s)")


def test_criterion_05_planar_torsion_free():
    with criterion(5, 60) as notes:
        X = read_complex(CORPUS / "k4.cx")
        cert = h1_braid(X, 2)
        assert cert.value == free(4) and cert.value.torsion_free
        assert oracle_h1(X, 2) == cert.value
        notes.append(f"K4: pipeline = oracle = {cert.value}")


def test_criterion_06_one_cut_law():
    with criterion(6, 60) as notes:
        X = models.figure_eight()
        cert = h1_braid(X, 2)
        assert cert.root.rule == "one-cut"
        assert cert.root.params["k"] == 4 and cert.root.params["m"] == 2
        assert cert.root.params["r"] == rank_r(2, 4, 2) == 2
        assert cert.value == free(4)
        assert oracle_h1(X, 2) == cert.value
        notes.append(f"figure-eight: one-cut r(2,4,2)=2, pipeline = oracle = {cert.value}")


def test_criterion_07_rank_stable_in_n():
    with criterion(7, 600) as notes:
        for filename in ("theta3.cx", "k4.cx"):
            X = read_complex(CORPUS / filename)
            two, three = oracle_h1(X, 2), oracle_h1(X, 3)
            assert two.free_rank == three.free_rank
            notes.append(f"{X.name}: UD2 {two}, UD3 {three}")


def test_criterion_08_s0_without_oracle():
    with criterion(8, 5) as notes:
        X = models.s0_model()
        for n in (2, 3):
            cert = h1_braid(X, n)
            assert cert.value == AbelianInvariants(0, (2,))
            assert cert.root.rule == "elementary-surface"
            assert cert.root.params["kind"] == str(BranchedSurface())
            notes.append(f"S0 n={n}: {cert.value}")


def test_criterion_09_snf_suite():
    rng = random.Random(20261015)
    failures = 0
    with criterion(9, 30) as notes:
        for _ in range(1000):
            rows, cols = rng.randint(1, 8), rng.randint(1, 8)
            M = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
            D, U, V = snf(M)
            d = diagonal(D)
            ok = matmul(matmul(U, M), V) == D
            ok &= abs(determinant(U)) == 1 and abs(determinant(V)) == 1
            ok &= all(D[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
            ok &= all(x >= 0 for x in d)
            ok &= all(b % a == 0 if a else b == 0 for a, b in zip(d, d[1:]))
            failures += not ok
        assert failures == 0
        notes.append("1000 random matrices, 0 failures")


def test_criterion_10_pipeline_invariants(corpus_paths, capsys):
    with criterion(10, 900) as notes:
        assert len(corpus_paths) >= 20
        for path in corpus_paths:
            X = read_complex(path)
            Y, _ = simplify(X)
            assert is_simple(Y), path.name
            R = recompose(decompose(Y))
            assert R.euler_characteristic == Y.euler_characteristic, path.name
            assert h1_space(R.skeleton(2)) == h1_space(Y.skeleton(2)), path.name
            assert check_surface(R).answer == check_surface(Y).answer, path.name
            assert verdict(barycentric_subdivide(X)).summary() == verdict(X).summary(), path.name
        assert main(["crosscheck", str(CORPUS)]) == 0
        capsys.readouterr()
        notes.append(f"{len(corpus_paths)} complexes: simple, recomposed, sd-invariant, crosscheck exit 0")


def test_criterion_11_presentations(twisted_k33_trees, planar_k4_trees):
    rng = random.Random(11)
    with criterion(11, 120) as notes:
        for _ in range(50):
            tree = random_tree(rng, 12)
            assert len(pair_classes(tree)) == tree_r2(tree)
            assert presentation_h1(tree_b2(tree)) == free(tree_r2(tree))
        notes.append("50 random trees: class count = r2")

        for k in range(2, 7):
            star = LeafLabelledTree.from_tree(models.star_tree(k))
            assert presentation_h1(tree_closure_b2(star)) == free(comb(k, 2))
        notes.append("closures of T2..T6 abelianize to Z^C(k,2)")

        twisted = presentation_h1(twotrees_b2(*twisted_k33_trees))
        assert 2 in twisted.torsion
        graph = realize_twotrees(*twisted_k33_trees)
        assert oracle_h1(graph, 2) == twisted == h1_braid(graph, 2).value
        notes.append(f"twisted K3,3: {twisted} = oracle")

        planar = presentation_h1(twotrees_b2(*planar_k4_trees))
        assert planar.torsion_free
        graph = realize_twotrees(*planar_k4_trees)
        assert oracle_h1(graph, 2) == planar == h1_braid(graph, 2).value
        notes.append(f"planar K4: {planar} = oracle")
