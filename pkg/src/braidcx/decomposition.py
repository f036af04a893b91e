"""Closures, connected sums, cuts, and decomposition into elementary pieces.

A graph vertex counts as a branch vertex for cut purposes when its valency
is at least 3; in a 2-complex the branch set is the usual one (links that are
neither spheres nor disks).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Union

import networkx as nx

from .complex import (
    PointClass,
    SimplicialComplex,
    classify_point,
    deletion,
    is_arc,
    is_cycle,
    is_simple,
    is_surface,
    label_key,
    link,
    link_components,
    make_simplex,
    subdivide_edge,
    surface_data,
    valency,
)
from .errors import GuardFailed, NotElementary

# -- elementary kinds --------------------------------------------------------


@dataclass(frozen=True)
class TreeStar:
    k: int

    def __str__(self):
        return f"TreeStar({self.k})"

    def to_json(self):
        return {"kind": "TreeStar", "k": self.k}


@dataclass(frozen=True)
class Surface:
    orientable: bool
    genus: int
    boundary_count: int

    def __str__(self):
        o = "orientable" if self.orientable else "nonorientable"
        return f"Surface({o}, genus={self.genus}, boundary={self.boundary_count})"

    def to_json(self):
        return {"kind": "Surface", "orientable": self.orientable, "genus": self.genus,
                "boundary_count": self.boundary_count}


@dataclass(frozen=True)
class BranchedSurface:
    def __str__(self):
        return "BranchedSurface"

    def to_json(self):
        return {"kind": "BranchedSurface"}


ElementaryKind = Union[TreeStar, Surface, BranchedSurface]


# -- closures and connected sums ----------------------------------------------


def is_graph(X: SimplicialComplex) -> bool:
    return X.dim <= 1


def closure(X: SimplicialComplex, vs, apex: str | None = None) -> SimplicialComplex:
    """Cone the boundary points ``vs`` to a fresh apex (glue a T_k along them)."""
    if not X.is_connected:
        raise GuardFailed("complex is connected")
    vs = [X.check_vertex(v) for v in vs]
    X2 = X.skeleton(2)
    for v in vs:
        if classify_point(X2, v) is not PointClass.BOUNDARY:
            raise GuardFailed("closed vertices lie on the boundary", f"{v} is not a boundary point")
    c = X.fresh_label(apex if apex is not None else "^")
    return X.with_simplices([(v, c) for v in vs])


def star_is_tree(X: SimplicialComplex, v) -> bool:
    """Closed star of v is a cone on points, i.e. homeomorphic to T_k."""
    return link(X, v).dim <= 0


def unwrap(X: SimplicialComplex, v) -> tuple[SimplicialComplex, list]:
    """Inverse of closure: delete a T_k-star vertex and mark its link points."""
    v = X.check_vertex(v)
    if not star_is_tree(X, v):
        raise GuardFailed("closed star is T_k", f"lk({v}) is not 0-dimensional")
    Y = deletion(X, [v])
    if not Y.is_connected:
        raise GuardFailed("deletion is connected", f"removing {v} disconnects the complex")
    return Y, list(link(X, v).vertices)


def _ordered_link(X, v, ordering):
    pts = list(link(X, v).vertices)
    if ordering is None:
        return pts
    ordering = [str(u) for u in ordering]
    if sorted(ordering, key=label_key) != pts:
        raise GuardFailed("ordering is a permutation of the link", f"{ordering} vs {pts}")
    return ordering


def connected_sum(X: SimplicialComplex, v, Y: SimplicialComplex, w,
                  order_x=None, order_y=None) -> SimplicialComplex:
    """Join the i-th link point of v to the i-th link point of w by an interval.

    Both vertices must have T_k stars of the same k and connected deletions.
    Each interval gets one midpoint so the result stays simplicial. Labels of
    Y are primed where they collide with labels of X.
    """
    v, w = X.check_vertex(v), Y.check_vertex(w)
    for Z, u in ((X, v), (Y, w)):
        if not star_is_tree(Z, u):
            raise GuardFailed("closed star is T_k", f"lk({u}) is not 0-dimensional")
    ox, oy = _ordered_link(X, v, order_x), _ordered_link(Y, w, order_y)
    if len(ox) != len(oy):
        raise GuardFailed("orderings have equal length", f"{len(ox)} != {len(oy)}")
    Xv, Yw = deletion(X, [v]), deletion(Y, [w])
    if not Xv.is_connected or not Yw.is_connected:
        raise GuardFailed("deletions are connected")
    taken = set(X.vertices)
    rename = {}
    for u in Y.vertices:
        new = u
        while new in taken:
            new += "'"
        rename[u] = new
        taken.add(new)
    Yw = Yw.relabel(rename)
    Z = Xv.union(Yw)
    faces = []
    for i, (a, b) in enumerate(zip(ox, oy), 1):
        mid = f"{v}#{w}~{i}"
        while mid in taken:
            mid += "'"
        taken.add(mid)
        faces += [(a, mid), (mid, rename[b])]
    return Z.with_simplices(faces).renamed(f"{X.name}#{Y.name}")


# -- cuts ----------------------------------------------------------------------


@dataclass(frozen=True)
class CutSet:
    vertices: tuple
    trivial: bool
    components: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json(self):
        return {"vertices": list(self.vertices), "size": self.size, "trivial": self.trivial,
                "components": self.components}


def cut_branch_vertices(X: SimplicialComplex) -> list:
    if is_graph(X):
        return [v for v in X.vertices if valency(X, v) >= 3]
    return [v for v in X.vertices if classify_point(X, v) is PointClass.BRANCH]


def _attachments(X: SimplicialComplex, part: SimplicialComplex, vs) -> list:
    inside = set(part.vertices)
    vs = set(vs)
    return [s for s in X.simplices if len(s) > 1 and inside & set(s) and vs & set(s)]


def _is_path(part: SimplicialComplex) -> bool:
    if part.dim > 1 or not part.is_connected:
        return False
    g = part.one_skeleton()
    return nx.is_tree(g) and max((d for _, d in g.degree()), default=0) <= 2


def _path_ends(part: SimplicialComplex) -> set:
    if len(part.vertices) == 1:
        return set(part.vertices)
    return {u for u, d in part.one_skeleton().degree() if d == 1}


def is_strand(X: SimplicialComplex, part: SimplicialComplex, pair) -> bool:
    """``part`` is an open arc whose closure runs from one cut vertex to the other."""
    if not _is_path(part):
        return False
    att = _attachments(X, part, pair)
    if len(att) != 2 or any(len(s) != 2 for s in att):
        return False
    hit = {u for s in att for u in s if u in pair}
    ends = {u for s in att for u in s if u not in pair}
    return hit == set(pair) and (ends == _path_ends(part) or len(part.vertices) == 1)


def _whisker(X: SimplicialComplex, v: str, part: SimplicialComplex) -> bool:
    """``part`` plus its single attaching edge at v is an arc ending at a free leaf."""
    if not _is_path(part):
        return False
    att = _attachments(X, part, [v])
    if len(att) != 1 or len(att[0]) != 2:
        return False
    (p,) = [u for u in att[0] if u != v]
    return p in _path_ends(part)


def _is_trivial_cut(X: SimplicialComplex, vs, comps) -> bool:
    # Needs lk(v) = arc + point for every v, with all the point sides in one
    # component that is T_k-shaped (a whisker for k = 1, a strand for k = 2).
    if is_graph(X) or len(vs) > 2:
        return False
    points = []
    for v in vs:
        lc = link_components(X, v)
        if len(lc) != 2:
            return False
        pt = [c for c in lc if len(c.vertices) == 1 and c.dim == 0]
        arcs = [c for c in lc if is_arc(c)]
        if len(pt) != 1 or len(arcs) != 1:
            return False
        points.append(pt[0].vertices[0])
    owner = [next(i for i, c in enumerate(comps) if p in c.vertices) for p in points]
    if len(set(owner)) != 1:
        return False
    part = comps[owner[0]]
    if len(vs) == 1:
        return _whisker(X, vs[0], part)
    return is_strand(X, part, vs)


def find_cuts(X: SimplicialComplex, k: int) -> list[CutSet]:
    """All k-subsets of branch vertices whose star deletion disconnects X.

    For k = 2 a pair that only splits off one arc running between the two
    vertices is not reported: splitting there hands back X itself.
    """
    if k not in (1, 2):
        raise ValueError("only cuts of size 1 and 2 are supported")
    out = []
    for combo in itertools.combinations(cut_branch_vertices(X), k):
        D = deletion(X, combo)
        comps = D.components() if D.simplices else []
        if len(comps) < 2:
            continue
        if k == 2 and len(comps) == 2 and any(is_strand(X, c, combo) for c in comps):
            continue
        out.append(CutSet(tuple(combo), _is_trivial_cut(X, combo, comps), len(comps)))
    return out


def is_vertex_k_connected(X: SimplicialComplex, k: int) -> bool:
    """No nontrivial cut of size less than k."""
    if k > 3:
        raise ValueError("cuts of size >= 3 are not searched")
    return not any(not c.trivial for size in range(1, k) for c in find_cuts(X, size))


# -- decomposition tree -------------------------------------------------------


@dataclass
class Leaf:
    complex: SimplicialComplex
    kind: ElementaryKind | None
    block: str  # tree-star, arc, surface, branched-surface, three-connected

    def label(self):
        k = str(self.kind) if self.kind is not None else "-"
        return f"Leaf {self.block} {k} [{self.complex.fingerprint}]"


@dataclass
class ClosureNode:
    complex: SimplicialComplex
    k: int
    closed: tuple
    apex: str
    child: "Node"

    def label(self):
        return f"Closure k={self.k} apex={self.apex} closed={','.join(self.closed)}"


@dataclass
class OneCutNode:
    complex: SimplicialComplex
    vertex: str
    k: int
    m: int
    parts: list

    def label(self):
        return f"OneCut v={self.vertex} k={self.k} m={self.m}"


@dataclass
class ConnectedSumNode:
    """Boundary wedge at a vertex whose link is an arc plus a point."""

    complex: SimplicialComplex
    vertex: str
    parts: list
    k: int = 1

    def label(self):
        return f"ConnectedSum k={self.k} v={self.vertex}"


@dataclass
class TwoCutNode:
    complex: SimplicialComplex
    vertices: tuple
    m: int
    parts: list
    virtual: tuple = field(default_factory=tuple)  # midpoints of the added v1-v2 arcs

    def label(self):
        return f"TwoCut v={','.join(self.vertices)} m={self.m}"


Node = Union[Leaf, ClosureNode, OneCutNode, ConnectedSumNode, TwoCutNode]


def children(node: Node) -> list:
    if isinstance(node, Leaf):
        return []
    if isinstance(node, ClosureNode):
        return [node.child]
    return list(node.parts)


def leaves(node: Node) -> list[Leaf]:
    if isinstance(node, Leaf):
        return [node]
    return [leaf for c in children(node) for leaf in leaves(c)]


def tree_text(node: Node, indent: int = 0) -> str:
    lines = ["  " * indent + node.label()]
    for c in children(node):
        lines.append(tree_text(c, indent + 1))
    return "\n".join(lines)


def tree_json(node: Node) -> dict:
    out = {"node": type(node).__name__, "label": node.label(), "fingerprint": node.complex.fingerprint}
    if isinstance(node, Leaf):
        out["block"] = node.block
        out["kind"] = node.kind.to_json() if node.kind is not None else None
        out["complex"] = [list(s) for s in node.complex.maximal]
    elif isinstance(node, ClosureNode):
        out.update(k=node.k, closed=list(node.closed), apex=node.apex)
    elif isinstance(node, OneCutNode):
        out.update(vertex=node.vertex, k=node.k, m=node.m)
    elif isinstance(node, ConnectedSumNode):
        out.update(vertex=node.vertex, k=node.k)
    elif isinstance(node, TwoCutNode):
        out.update(vertices=list(node.vertices), m=node.m, virtual=list(node.virtual))
    out["children"] = [tree_json(c) for c in children(node)]
    return out


# -- decomposition ----------------------------------------------------------


def _graph_edges(X: SimplicialComplex) -> list:
    tri_edges = {e for t in X.cells(2) for e in itertools.combinations(t, 2)}
    return [e for e in X.cells(1) if e not in tri_edges]


def prepare(X: SimplicialComplex) -> SimplicialComplex:
    """Subdivide every free edge that joins two branch vertices.

    Without this, star deletion at both ends would swallow the edge and a
    pair of adjacent vertices could not see the arc between them.
    """
    while True:
        br = set(cut_branch_vertices(X))
        bad = [e for e in _graph_edges(X) if e[0] in br and e[1] in br]
        if not bad:
            return X
        X = subdivide_edge(X, bad[0])


def tree_star_size(X: SimplicialComplex) -> int | None:
    """Number of leaves if X is homeomorphic to some T_k, else None."""
    if not is_graph(X) or not X.is_connected or X.dim < 1:
        return None
    g = X.one_skeleton()
    if not nx.is_tree(g):
        return None
    degrees = [d for _, d in g.degree()]
    if sum(1 for d in degrees if d >= 3) > 1:
        return None
    return sum(1 for d in degrees if d == 1)


def is_circle(X: SimplicialComplex) -> bool:
    return is_graph(X) and is_cycle(X)


def _leaf(X: SimplicialComplex) -> Leaf:
    k = tree_star_size(X)
    if k is not None:
        return Leaf(X, TreeStar(k), "tree-star")
    if is_graph(X):
        return Leaf(X, None, "three-connected")
    if is_surface(X):
        d = surface_data(X)
        return Leaf(X, Surface(d.orientable, d.genus, d.boundary_count), "surface")
    return Leaf(X, BranchedSurface(), "branched-surface")


def _split_parts(X: SimplicialComplex, cut_vertices, comps) -> list:
    return [X.induced(set(c.vertices) | set(cut_vertices)) for c in comps]


def _one_cut_type(X: SimplicialComplex, v: str) -> str | None:
    L = link(X, v)
    if L.dim <= 0:
        return "tree"
    lc = L.components()
    if len(lc) == 2 and any(c.dim == 0 for c in lc) and any(is_arc(c) for c in lc):
        return "wedge"
    return None


def _decompose(X: SimplicialComplex) -> Node:
    X = prepare(X)
    if tree_star_size(X) is not None:
        return _leaf(X)
    if is_circle(X):
        v = X.vertices[0]
        Y, pts = unwrap(X, v)
        return ClosureNode(X, 2, tuple(pts), v, _decompose(Y))
    if is_surface(X):
        return _leaf(X)

    ones = find_cuts(X, 1)
    for cut in ones:
        if cut.trivial:
            (v,) = cut.vertices
            comps = deletion(X, [v]).components()
            whisker = next(c for c in comps if _whisker(X, v, c))
            Y = X.induced(set(X.vertices) - set(whisker.vertices))
            return ClosureNode(X, 1, (v,), whisker.vertices[0], _decompose(Y))
    for cut in ones:
        (v,) = cut.vertices
        kind = _one_cut_type(X, v)
        if kind is None:
            continue
        comps = deletion(X, [v]).components()
        parts = [_decompose(p) for p in _split_parts(X, [v], comps)]
        if kind == "tree":
            return OneCutNode(X, v, valency(X, v), len(comps), parts)
        return ConnectedSumNode(X, v, parts)
    if ones:
        return _leaf(X)

    for cut in find_cuts(X, 2):
        if cut.trivial or not all(star_is_tree(X, u) for u in cut.vertices):
            continue
        v1, v2 = cut.vertices
        comps = deletion(X, cut.vertices).components()
        parts, virtual = [], []
        for i, (c, P) in enumerate(zip(comps, _split_parts(X, cut.vertices, comps)), 1):
            z = X.fresh_label(f"{v1}~{v2}~{i}")
            virtual.append(z)
            parts.append(_decompose(P.with_simplices([(v1, z), (z, v2)])))
        return TwoCutNode(X, (v1, v2), len(comps), parts, tuple(virtual))
    return _leaf(X)


def decompose(X: SimplicialComplex) -> Node:
    """Split a simple connected complex of dimension <= 2 down to elementary pieces.

    Order: circles unwrap to an arc, trivial 1-cuts (whiskers on a boundary
    point) are removed, then 1-cuts, then 2-cuts, each smallest label first.
    """
    if X.dim > 2:
        raise GuardFailed("dimension at most 2", f"dimension is {X.dim}")
    if not X.is_connected:
        raise GuardFailed("complex is connected")
    ok = is_simple(X)
    if not ok:
        raise GuardFailed("complex is simple", f"non-simple vertices {list(ok.offenders)}")
    return _decompose(X)


def classify_elementary(X: SimplicialComplex) -> ElementaryKind:
    node = decompose(X)
    if not isinstance(node, Leaf) or node.kind is None:
        raise NotElementary("input is elementary", node.label())
    return node.kind


def recompose(node: Node) -> SimplicialComplex:
    """Rebuild a complex from the leaves through the recorded nodes."""
    if isinstance(node, Leaf):
        return node.complex
    if isinstance(node, ClosureNode):
        child = recompose(node.child)
        return closure(child, node.closed, apex=node.apex)
    parts = [recompose(p) for p in node.parts]
    whole = parts[0]
    for p in parts[1:]:
        whole = whole.union(p)
    if isinstance(node, TwoCutNode):
        whole = SimplicialComplex(
            frozenset(s for s in whole.simplices if not set(node.virtual) & set(s)), whole.name)
    return whole


def link_ordering(X: SimplicialComplex, v) -> list:
    """Default ordering on lk(v): ascending labels."""
    return [u for u in link(X, v).vertices]


__all__ = [
    "BranchedSurface", "ClosureNode", "ConnectedSumNode", "CutSet", "Leaf", "OneCutNode",
    "Surface", "TreeStar", "TwoCutNode", "classify_elementary", "closure", "connected_sum",
    "decompose", "find_cuts", "is_vertex_k_connected", "leaves", "recompose", "tree_json",
    "tree_text", "unwrap", "make_simplex",
]
