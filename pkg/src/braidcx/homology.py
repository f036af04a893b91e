"""H1 of spaces and of braid groups.

``h1_braid`` simplifies the complex, decomposes it, evaluates the leaves and
folds the values back up through the cut formulas. Every step is kept in an
``H1Certificate`` so the result can be audited and recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .complex import SimplicialComplex, is_projective_plane, is_sphere
from .decomposition import (
    BranchedSurface,
    ClosureNode,
    ConnectedSumNode,
    Leaf,
    OneCutNode,
    Surface,
    TreeStar,
    TwoCutNode,
    decompose,
    find_cuts,
    is_graph,
    is_vertex_k_connected,
    prepare,
    tree_json,
)
from .embedding import check_plane
from .errors import DimensionError, GuardFailed, PipelineError, SpecialSurface
from .presentation import rank_r
from .reduction import simplify, two_skeleton
from .smith import AbelianInvariants, direct_sum, free, h1_from_chains

Z2 = AbelianInvariants(0, (2,))


def h1_space(X: SimplicialComplex) -> AbelianInvariants:
    """Simplicial H1 of a complex of dimension at most 2."""
    if X.dim > 2:
        raise DimensionError(f"dimension {X.dim} > 2; take the 2-skeleton first")
    index = {v: i for i, v in enumerate(X.vertices)}
    edges = X.cells(1)
    eidx = {e: i for i, e in enumerate(edges)}
    chains = [(index[a], index[b]) for a, b in edges]
    two = [{eidx[(b, c)]: 1, eidx[(a, c)]: -1, eidx[(a, b)]: 1} for a, b, c in X.cells(2)]
    return h1_from_chains(len(index), chains, two)


def _planarity_summand(planar: bool) -> AbelianInvariants:
    return free(1) if planar else Z2


def h1_elementary(X: SimplicialComplex, kind, n: int) -> AbelianInvariants:
    if n < 2:
        raise ValueError("n must be >= 2; at n = 1 use h1_space")
    if isinstance(kind, TreeStar):
        return free(rank_r(n, kind.k, kind.k)) if kind.k >= 1 else free(0)
    if not isinstance(kind, (Surface, BranchedSurface)):
        raise TypeError(f"unknown elementary kind {kind!r}")
    return h1_space(X) + _planarity_summand(bool(check_plane(X)))


def split_one_cut(parts, n: int, k: int, m: int) -> AbelianInvariants:
    if m < 2:
        raise ValueError("a cut leaves at least two components")
    return free(rank_r(n, k, m)) + direct_sum(parts)


def split_two_cut(parts, m: int) -> AbelianInvariants:
    """Solve A + Z^m = Z^C(m,2) + sum(parts) for A."""
    total = free(comb(m, 2)) + direct_sum(parts)
    if total.free_rank < m:
        raise PipelineError(f"free rank {total.free_rank} below m = {m} in a 2-cut split")
    return AbelianInvariants(total.free_rank - m, total.torsion)


def h1_three_connected(X: SimplicialComplex, n: int) -> AbelianInvariants:
    if n < 2:
        raise ValueError("n must be >= 2")
    if not is_vertex_k_connected(prepare(X), 3):
        raise GuardFailed("vertex-3-connected", "complex has a nontrivial cut of size <= 2")
    return h1_space(X) + _planarity_summand(bool(check_plane(X)))


def h1_closure_combine(h1_x: AbelianInvariants, k: int) -> AbelianInvariants:
    if k < 1:
        raise ValueError("k must be >= 1")
    return h1_x + free(k - 1)


# -- certificates -------------------------------------------------------------


@dataclass
class Step:
    rule: str
    node: str
    params: dict
    value: AbelianInvariants
    children: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"rule": self.rule, "node": self.node, "params": self.params,
                "value": self.value.to_json(), "children": [c.to_json() for c in self.children]}

    def lines(self, indent=0) -> list:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = ["  " * indent + f"{self.rule} [{ps}] -> {self.value}"]
        for c in self.children:
            out += c.lines(indent + 1)
        return out


def recompute(step: Step, n: int) -> AbelianInvariants:
    """Refold a step tree from its leaf values."""
    vals = [recompute(c, n) for c in step.children]
    p = step.params
    if step.rule == "tree-star":
        return free(rank_r(n, p["k"], p["k"]))
    if step.rule in ("space", "three-connected", "elementary-surface"):
        return step.value
    if step.rule == "closure":
        return h1_closure_combine(vals[0], p["k"])
    if step.rule == "one-cut":
        return split_one_cut(vals, n, p["k"], p["m"])
    if step.rule == "boundary-wedge":
        return direct_sum(vals)
    if step.rule == "two-cut":
        return split_two_cut(vals, p["m"])
    raise PipelineError(f"unknown rule {step.rule}")


@dataclass
class H1Certificate:
    fingerprint: str
    n: int
    evaluated_n: int
    value: AbelianInvariants
    root: Step
    tree: object = None
    moves: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def verify(self) -> bool:
        return recompute(self.root, self.evaluated_n) == self.value

    def to_json(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "n": self.n,
            "evaluated_n": self.evaluated_n,
            "value": self.value.to_json(),
            "moves": self.moves,
            "notes": self.notes,
            "steps": self.root.to_json(),
            "tree": tree_json(self.tree) if self.tree is not None else None,
        }

    def to_text(self) -> str:
        head = [f"# complex {self.fingerprint}  n={self.n}"]
        head += [f"# {note}" for note in self.notes]
        return "\n".join(head + self.root.lines() + [f"H1 = {self.value}"])


def _evaluate(node, n: int) -> Step:
    if isinstance(node, Leaf):
        X = node.complex
        if isinstance(node.kind, TreeStar):
            k = node.kind.k
            return Step("tree-star", node.label(), {"k": k, "r": rank_r(n, k, k)},
                        h1_elementary(X, node.kind, n))
        if node.kind is None:
            planar = bool(check_plane(X))
            return Step("three-connected", node.label(), {"planar": planar, "h1_space": str(h1_space(X))},
                        h1_three_connected(X, n))
        planar = bool(check_plane(X))
        return Step("elementary-surface", node.label(),
                    {"kind": str(node.kind), "planar": planar, "h1_space": str(h1_space(X))},
                    h1_elementary(X, node.kind, n))
    if isinstance(node, ClosureNode):
        child = _evaluate(node.child, n)
        return Step("closure", node.label(), {"k": node.k},
                    h1_closure_combine(child.value, node.k), [child])
    kids = [_evaluate(p, n) for p in node.parts]
    vals = [c.value for c in kids]
    if isinstance(node, OneCutNode):
        return Step("one-cut", node.label(), {"k": node.k, "m": node.m, "r": rank_r(n, node.k, node.m)},
                    split_one_cut(vals, n, node.k, node.m), kids)
    if isinstance(node, ConnectedSumNode):
        return Step("boundary-wedge", node.label(), {"k": node.k}, direct_sum(vals), kids)
    if isinstance(node, TwoCutNode):
        return Step("two-cut", node.label(), {"m": node.m, "binom": comb(node.m, 2)},
                    split_two_cut(vals, node.m), kids)
    raise PipelineError(f"unknown node {node!r}")


def check_not_special(X: SimplicialComplex) -> None:
    Y = X.skeleton(2)
    if X.dim == 2 and is_sphere(Y):
        raise SpecialSurface("complex is not the 2-sphere", "braid groups of S^2 have torsion")
    if X.dim == 2 and is_projective_plane(Y):
        raise SpecialSurface("complex is not the projective plane", "braid groups of RP^2 have torsion")


def h1_braid(X: SimplicialComplex, n: int) -> H1Certificate:
    """H1 of the n-strand braid group of X with a full audit trail."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not X.is_connected:
        raise GuardFailed("complex is connected")
    Y2, _ = two_skeleton(X)
    check_not_special(Y2 if X.dim > 2 else X)
    if n == 1:
        value = h1_space(Y2)
        step = Step("space", "fundamental group of X", {}, value)
        return H1Certificate(X.fingerprint, n, 1, value, step, notes=["n = 1: H1 of the space"])
    Y, log = simplify(X)
    notes = []
    m = n
    if is_graph(Y) and n > 2 and not find_cuts(prepare(Y), 1):
        m = 2
        notes.append(f"graph without 1-cut: H1 at n={n} equals H1 at n=2")
    tree = decompose(Y)
    root = _evaluate(tree, m)
    cert = H1Certificate(X.fingerprint, n, m, root.value, root, tree,
                         [mv.to_line() for mv in log.moves], notes)
    if not cert.verify():
        raise PipelineError("certificate does not recompute to its value")
    return cert
