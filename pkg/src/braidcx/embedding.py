"""Embedding tests with witnesses: circle, surface, plane.

Each check returns an ``EmbeddingCheck``. On failure the witness is an
obstruction subcomplex (T3, S0, or a Kuratowski subdivision). It lives either in X
or in its barycentric subdivision; ``subdivided`` records which one.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .complex import (
    SimplicialComplex,
    barycentric_subdivide,
    composite_label,
    edge_triangle_counts,
    is_arc,
    is_cycle,
    is_projective_plane,
    is_sphere,
    is_surface,
    link,
    link_components,
    make_simplex,
    surface_data,
)


@dataclass(frozen=True)
class EmbeddingCheck:
    answer: str  # "yes", "no" or "special"
    witness: SimplicialComplex | None = None
    witness_kind: str = ""  # T3, S0, K5, K3,3, surface, closed, ...
    subdivided: bool = False
    detail: str = ""

    def __bool__(self):
        return self.answer == "yes"

    def to_json(self) -> dict:
        out = {"answer": self.answer, "witness_kind": self.witness_kind or None,
               "subdivided": self.subdivided, "detail": self.detail}
        out["witness"] = [list(s) for s in self.witness.maximal] if self.witness is not None else None
        return out


def _complex(faces, name):
    return SimplicialComplex.from_maximal(faces, name)


def _working_complex(X: SimplicialComplex) -> SimplicialComplex:
    return X.skeleton(2) if X.dim > 2 else X


# -- circle -------------------------------------------------------------------


def check_circle(X: SimplicialComplex) -> EmbeddingCheck:
    """Yes iff X is an arc or a circle (or a point); otherwise find a T3."""
    if X.dim <= 1:
        g = X.one_skeleton()
        hub = next((v for v in X.vertices if g.degree(v) >= 3), None)
        if hub is None:
            return EmbeddingCheck("yes", detail="graph with every valency <= 2")
        arms = sorted(g.neighbors(hub))[:3]
        return EmbeddingCheck("no", _complex([(hub, a) for a in arms], "T3"), "T3", False,
                              f"three edges at {hub}")
    top = next(s for s in X.cells(2))
    bary = composite_label(top)
    return EmbeddingCheck("no", _complex([(bary, c) for c in top[:3]], "T3"), "T3", True,
                          f"barycenter of {','.join(top)} joined to three corners")


# -- surface --------------------------------------------------------------------


def link_embeds_in_circle(L: SimplicialComplex) -> bool:
    """A graph embeds in S^1 iff it is one cycle, or a disjoint union of arcs and points."""
    if L.dim > 1:
        return False
    comps = L.components() if L.simplices else []
    if len(comps) == 1 and is_cycle(comps[0]):
        return True
    return all(c.dim == 0 or is_arc(c) for c in comps)


def _s0_from_cone(X: SimplicialComplex, v: str) -> SimplicialComplex | None:
    comps = link_components(X, v)
    cyc = next((c for c in comps if c.dim == 1 and not nx.is_forest(c.one_skeleton())), None)
    if cyc is None or len(comps) < 2:
        return None
    cycle_edges = nx.find_cycle(cyc.one_skeleton())
    other = next(c for c in comps if c is not cyc)
    p = other.vertices[0]
    faces = [(v, a, b) for a, b in cycle_edges] + [(v, p)]
    return _complex(faces, "S0")


def _s0_from_edge(X: SimplicialComplex, e, tris) -> SimplicialComplex:
    # Two triangles on e form a disk with e inside; the third one gives the whisker.
    t1, t2, t3 = tris[:3]
    disk = barycentric_subdivide(_complex([t1, t2], "pair"))
    mid = composite_label(make_simplex(e))
    return disk.with_simplices([(mid, composite_label(t3))]).renamed("S0")


def check_surface(X: SimplicialComplex) -> EmbeddingCheck:
    """Local criterion: every vertex link of sd(X) embeds in a circle."""
    if X.dim > 2:
        from .reduction import is_excluded_ball

        if is_excluded_ball(X):
            return EmbeddingCheck("no", None, "ball", False, "3-dimensional ball")
    Y = _working_complex(X)
    counts = edge_triangle_counts(Y)
    for e, c in sorted(counts.items()):
        if c >= 3:
            tris = sorted(t for t in Y.cells(2) if set(e) <= set(t))
            return EmbeddingCheck("no", _s0_from_edge(Y, e, tris), "S0", True,
                                  f"edge {','.join(e)} lies in {c} triangles")
    for v in Y.vertices:
        if not link_embeds_in_circle(link(Y, v)):
            w = _s0_from_cone(Y, v)
            if w is None:  # pragma: no cover - edge counts already rule out branching links
                raise AssertionError(f"link of {v} fails without a cone witness")
            return EmbeddingCheck("no", w, "S0", False, f"link of {v} is a cycle plus more")
    if is_sphere(Y):
        return EmbeddingCheck("special", None, "S2", False, "2-sphere")
    if is_projective_plane(Y):
        return EmbeddingCheck("special", None, "RP2", False, "projective plane")
    return EmbeddingCheck("yes", detail="every link embeds in a circle")


# -- plane ------------------------------------------------------------------------


def surface_pieces(X: SimplicialComplex) -> list[SimplicialComplex]:
    """Triangles grouped by shared edges."""
    tris = X.cells(2)
    g = nx.Graph()
    g.add_nodes_from(tris)
    by_edge = {}
    for t in tris:
        for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            by_edge.setdefault(e, []).append(t)
    for ts in by_edge.values():
        for a, b in zip(ts, ts[1:]):
            g.add_edge(a, b)
    return [_complex(sorted(c), "piece") for c in nx.connected_components(g)]


def kuratowski_witness(G: nx.Graph) -> nx.Graph | None:
    planar, cert = nx.check_planarity(G, counterexample=True)
    return None if planar else cert


def smooth(G: nx.Graph) -> nx.MultiGraph:
    """Suppress degree-2 vertices, keeping parallel edges and loops."""
    H = nx.MultiGraph(G)
    H.remove_nodes_from([v for v in list(H) if H.degree(v) == 0])
    changed = True
    while changed:
        changed = False
        for v in list(H):
            if H.degree(v) == 2 and H.number_of_edges(v, v) == 0:
                a, b = [u for _, u in H.edges(v)]
                H.remove_node(v)
                H.add_edge(a, b)
                changed = True
    return H


def classify_kuratowski(W: nx.Graph) -> str | None:
    """Return "K5" or "K3,3" if W is a subdivision of that graph."""
    H = smooth(W)
    if any(u == v for u, v in H.edges()) or nx.number_of_edges(nx.Graph(H)) != H.number_of_edges():
        return None
    simple = nx.Graph(H)
    if nx.is_isomorphic(simple, nx.complete_graph(5)):
        return "K5"
    if nx.is_isomorphic(simple, nx.complete_bipartite_graph(3, 3)):
        return "K3,3"
    return None


def is_planar_surface(X: SimplicialComplex) -> bool:
    d = surface_data(X)
    return d.orientable and d.genus == 0 and d.boundary_count >= 1


def check_plane(X: SimplicialComplex) -> EmbeddingCheck:
    """Embedding in R^2.

    Requires the local surface criterion. For graphs this is Kuratowski via
    networkx. For 2-complexes the complex is first made simple (which keeps
    planarity), every triangle piece must be a planar surface with boundary,
    and the 1-skeleton of the barycentric subdivision must be planar.
    """
    surf = check_surface(X)
    if surf.answer == "special":
        return EmbeddingCheck("no", None, surf.witness_kind, False, "closed surface")
    if not surf:
        return EmbeddingCheck("no", surf.witness, surf.witness_kind, surf.subdivided, surf.detail)
    if X.dim <= 1:
        cert = kuratowski_witness(X.one_skeleton())
        if cert is None:
            return EmbeddingCheck("yes", detail="planar graph")
        W = _complex(sorted(make_simplex(e) for e in cert.edges()), "kuratowski")
        return EmbeddingCheck("no", W, classify_kuratowski(cert) or "kuratowski", False,
                              "Kuratowski subdivision in X")
    from .reduction import simplify

    Y, _ = simplify(_working_complex(X))
    for piece in surface_pieces(Y):
        if not is_surface(piece) or not is_planar_surface(piece):
            d = surface_data(piece) if is_surface(piece) else None
            why = (f"surface piece is not planar (orientable={d.orientable}, genus={d.genus}, "
                   f"boundary={d.boundary_count})" if d else "triangle piece is not a surface")
            return EmbeddingCheck("no", piece, "surface", False, why)
    sd = barycentric_subdivide(Y)
    cert = kuratowski_witness(sd.one_skeleton())
    if cert is None:
        return EmbeddingCheck("yes", detail="planar surface pieces and planar subdivided 1-skeleton")
    W = _complex(sorted(make_simplex(e) for e in cert.edges()), "kuratowski")
    return EmbeddingCheck("no", W, classify_kuratowski(cert) or "kuratowski", True,
                          "Kuratowski subdivision in the subdivided 1-skeleton")


# -- witness validation ------------------------------------------------------------


def is_subcomplex(W: SimplicialComplex, X: SimplicialComplex) -> bool:
    return W.simplices <= X.simplices


def is_s0(W: SimplicialComplex) -> bool:
    """W is a disk with an arc attached at one interior point by one end."""
    if not W.is_connected or W.dim != 2:
        return False
    disk = _complex([t for t in W.cells(2)], "disk")
    if not is_surface(disk):
        return False
    d = surface_data(disk)
    if not (d.orientable and d.genus == 0 and d.boundary_count == 1):
        return False
    tri_edges = set(disk.cells(1))
    whisker = _complex([e for e in W.cells(1) if e not in tri_edges], "whisker")
    if not whisker.simplices or not whisker.is_connected or not nx.is_tree(whisker.one_skeleton()):
        return False
    if max(dg for _, dg in whisker.one_skeleton().degree()) > 2:
        return False
    shared = set(whisker.vertices) & set(disk.vertices)
    if len(shared) != 1:
        return False
    (c,) = shared
    from .complex import PointClass, classify_point

    ends = {u for u, dg in whisker.one_skeleton().degree() if dg == 1}
    return c in ends and classify_point(disk, c) is PointClass.INTERIOR


def validate_witness(X: SimplicialComplex, check: EmbeddingCheck) -> bool:
    """Independent check that a returned obstruction is genuine."""
    W = check.witness
    if W is None:
        return check.answer != "no" or check.witness_kind in ("S2", "RP2", "ball")
    host = barycentric_subdivide(_working_complex(X)) if check.subdivided else X
    if check.witness_kind == "surface":
        from .reduction import simplify

        host = simplify(_working_complex(X))[0]
        return is_subcomplex(W, host) and not (is_surface(W) and is_planar_surface(W))
    if not is_subcomplex(W, host):
        return False
    if check.witness_kind == "T3":
        g = W.one_skeleton()
        return W.dim == 1 and nx.is_tree(g) and sorted(d for _, d in g.degree()) == [1, 1, 1, 3]
    if check.witness_kind == "S0":
        return is_s0(W)
    if check.witness_kind in ("K5", "K3,3"):
        return classify_kuratowski(W.one_skeleton()) == check.witness_kind
    return False
