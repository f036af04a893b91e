"""Finite abstract simplicial complexes and their local invariants.

Vertex labels are strings. They are ordered numerically when they look like
integers and lexicographically otherwise, so ``2 < 10 < a``. A simplex is a
tuple of labels in that order.
"""

from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

import networkx as nx

from .errors import ComplexFormatError, DimensionError, UnknownVertexError

# Joins source labels when barycentric subdivision names a new vertex.
SEPARATOR = "|"

_INT_RE = re.compile(r"-?\d+")


def label_key(label):
    s = str(label)
    if _INT_RE.fullmatch(s):
        return (0, int(s), s)
    return (1, 0, s)


def simplex_key(simplex):
    return (len(simplex), tuple(label_key(v) for v in simplex))


def make_simplex(vertices: Iterable) -> tuple:
    labels = [str(v) for v in vertices]
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate vertex in simplex {labels}")
    if not labels:
        raise ValueError("empty simplex")
    return tuple(sorted(labels, key=label_key))


def _faces(simplex):
    for r in range(1, len(simplex) + 1):
        yield from itertools.combinations(simplex, r)


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices.

    Build instances with :meth:`from_maximal` (or :func:`parse_complex`);
    the constructor trusts that ``simplices`` is already face-closed.
    """

    simplices: frozenset
    name: str = field(default="", compare=False)

    @classmethod
    def from_maximal(cls, faces: Iterable[Iterable], name: str = "") -> "SimplicialComplex":
        closed = set()
        for face in faces:
            s = make_simplex(face)
            if s in closed:
                continue
            closed.update(_faces(s))
        return cls(frozenset(closed), name)

    @classmethod
    def from_graph(cls, graph: nx.Graph, name: str = "") -> "SimplicialComplex":
        faces = [(u, v) for u, v in graph.edges() if u != v]
        faces += [(v,) for v in graph.nodes()]
        return cls.from_maximal(faces, name)

    # -- basic data -------------------------------------------------------

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted((s[0] for s in self.simplices if len(s) == 1), key=label_key))

    @cached_property
    def dim(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    @cached_property
    def _by_dim(self) -> dict:
        out = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        for d in out:
            out[d].sort(key=simplex_key)
        return out

    def cells(self, d: int) -> list:
        return list(self._by_dim.get(d, []))

    @property
    def edges(self) -> list:
        return self.cells(1)

    @property
    def triangles(self) -> list:
        return self.cells(2)

    @cached_property
    def cofaces(self) -> dict:
        """Map each vertex to the simplices that contain it."""
        out = {v: [] for v in self.vertices}
        for s in self.simplices:
            for v in s:
                out[v].append(s)
        return out

    @cached_property
    def maximal(self) -> list:
        result = []
        for s in self.simplices:
            if not any(len(t) > len(s) and set(s) <= set(t) for t in self.cofaces[s[0]]):
                result.append(s)
        return sorted(result, key=simplex_key)

    @cached_property
    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def __contains__(self, item) -> bool:
        if isinstance(item, (tuple, list)):
            try:
                return make_simplex(item) in self.simplices
            except ValueError:
                return False
        return (str(item),) in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def is_empty(self) -> bool:
        return not self.simplices

    def check_vertex(self, v) -> str:
        v = str(v)
        if (v,) not in self.simplices:
            raise UnknownVertexError(v)
        return v

    # -- graphs and components -------------------------------------------

    def one_skeleton(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.cells(1))
        return g

    @cached_property
    def is_connected(self) -> bool:
        if not self.simplices:
            return False
        return nx.is_connected(self.one_skeleton())

    def components(self) -> list["SimplicialComplex"]:
        """Connected components, ordered by their least vertex label."""
        parts = [sorted(c, key=label_key) for c in nx.connected_components(self.one_skeleton())]
        parts.sort(key=lambda c: label_key(c[0]))
        return [self.induced(c) for c in parts]

    def induced(self, vertices: Iterable) -> "SimplicialComplex":
        keep = {str(v) for v in vertices}
        return SimplicialComplex(frozenset(s for s in self.simplices if keep.issuperset(s)), self.name)

    def skeleton(self, d: int) -> "SimplicialComplex":
        return SimplicialComplex(frozenset(s for s in self.simplices if len(s) <= d + 1), self.name)

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self.simplices | other.simplices, self.name)

    def with_simplices(self, faces: Iterable[Iterable]) -> "SimplicialComplex":
        extra = SimplicialComplex.from_maximal(faces)
        return SimplicialComplex(self.simplices | extra.simplices, self.name)

    def without(self, simplices: Iterable) -> "SimplicialComplex":
        """Remove the given simplices and all their cofaces."""
        drop = {make_simplex(s) for s in simplices}
        keep = frozenset(s for s in self.simplices if not any(set(d) <= set(s) for d in drop))
        return SimplicialComplex(keep, self.name)

    def relabel(self, mapping: dict) -> "SimplicialComplex":
        m = {str(k): str(v) for k, v in mapping.items()}
        faces = [tuple(m.get(v, v) for v in s) for s in self.maximal]
        return SimplicialComplex.from_maximal(faces, self.name)

    def renamed(self, name: str) -> "SimplicialComplex":
        return SimplicialComplex(self.simplices, name)

    def fresh_label(self, base: str) -> str:
        label = str(base)
        while (label,) in self.simplices:
            label += "'"
        return label

    # -- serialisation ----------------------------------------------------

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        lines += [" ".join(s) for s in self.maximal]
        return "\n".join(lines) + "\n"

    @cached_property
    def fingerprint(self) -> str:
        body = "\n".join(" ".join(s) for s in self.maximal)
        return hashlib.sha256(body.encode()).hexdigest()[:16]

    def __repr__(self):
        counts = ", ".join(str(len(self._by_dim.get(d, []))) for d in range(self.dim + 1))
        label = f" {self.name!r}" if self.name else ""
        return f"<SimplicialComplex{label} dim={self.dim} cells=({counts})>"


def parse_complex(text: str, name: str = "") -> SimplicialComplex:
    """Read the line-per-maximal-simplex format.

    ``#`` starts a comment, blank lines are skipped, and repeated lines are
    harmless. A repeated label within one line is an error.
    """
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            raise ComplexFormatError(f"line {lineno}: duplicate vertex in {raw.strip()!r}")
        faces.append(tokens)
    if not faces:
        raise ComplexFormatError("no simplices in input")
    return SimplicialComplex.from_maximal(faces, name)


def read_complex(path) -> SimplicialComplex:
    from pathlib import Path

    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ComplexFormatError(f"{p}: not UTF-8 text") from exc
    return parse_complex(text, name=p.stem)


# -- local structure ------------------------------------------------------


def open_star(X: SimplicialComplex, v) -> frozenset:
    v = X.check_vertex(v)
    return frozenset(X.cofaces[v])


def closed_star(X: SimplicialComplex, v) -> SimplicialComplex:
    return SimplicialComplex.from_maximal(open_star(X, v))


def link(X: SimplicialComplex, v) -> SimplicialComplex:
    """Simplices sigma with v not in sigma and sigma + v in X."""
    v = X.check_vertex(v)
    faces = frozenset(tuple(u for u in s if u != v) for s in X.cofaces[v] if len(s) > 1)
    return SimplicialComplex(faces)


def link_components(X: SimplicialComplex, v) -> list[SimplicialComplex]:
    return link(X, v).components()


def valency(X: SimplicialComplex, v) -> int:
    L = link(X, v)
    return len(L.components()) if L.simplices else 0


def is_edge(X: SimplicialComplex, c) -> bool:
    s = make_simplex(c)
    if len(s) != 2:
        raise ValueError(f"{s} is not 1-dimensional")
    if s not in X.simplices:
        return False
    return not any(len(t) == 3 and set(s) <= set(t) for t in X.cofaces[s[0]])


def deletion(X: SimplicialComplex, K) -> SimplicialComplex:
    """Remove the open star of K (a vertex set or a subcomplex)."""
    if isinstance(K, SimplicialComplex):
        K = K.vertices
    elif isinstance(K, (str, int)):
        K = [K]
    gone = {str(v) for v in K}
    return SimplicialComplex(frozenset(s for s in X.simplices if gone.isdisjoint(s)), X.name)


# -- graph shape tests used on links ---------------------------------------


def is_cycle(L: SimplicialComplex) -> bool:
    if L.dim != 1 or not L.is_connected:
        return False
    g = L.one_skeleton()
    return all(d == 2 for _, d in g.degree())


def is_arc(L: SimplicialComplex) -> bool:
    if L.dim != 1 or not L.is_connected:
        return False
    degrees = sorted(d for _, d in L.one_skeleton().degree())
    return degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:])


class PointClass(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    BRANCH = "branch"


def _require_low_dim(X: SimplicialComplex):
    if X.dim > 2:
        raise DimensionError(f"complex has dimension {X.dim}; take the 2-skeleton first")


def classify_point(X: SimplicialComplex, v) -> PointClass:
    _require_low_dim(X)
    L = link(X, v)
    if L.dim <= 0:
        n = len(L.vertices)
        if n == 2 or n == 0:
            return PointClass.INTERIOR
        if n == 1:
            return PointClass.BOUNDARY
        return PointClass.BRANCH
    if is_cycle(L):
        return PointClass.INTERIOR
    if is_arc(L):
        return PointClass.BOUNDARY
    return PointClass.BRANCH


def point_classes(X: SimplicialComplex) -> dict:
    return {v: classify_point(X, v) for v in X.vertices}


def branch_vertices(X: SimplicialComplex) -> list:
    return [v for v in X.vertices if classify_point(X, v) is PointClass.BRANCH]


def boundary_vertices(X: SimplicialComplex) -> list:
    return [v for v in X.vertices if classify_point(X, v) is PointClass.BOUNDARY]


class Simplicity(NamedTuple):
    simple: bool
    offenders: tuple

    def __bool__(self):
        return self.simple


def vertex_is_simple(X: SimplicialComplex, v) -> bool:
    L = link(X, v)
    if L.dim <= 0:
        return True
    comps = L.components()
    if len(comps) == 1:
        return True
    return len(comps) == 2 and min(len(c.vertices) for c in comps) == 1


def is_simple(X: SimplicialComplex) -> Simplicity:
    _require_low_dim(X)
    bad = tuple(v for v in X.vertices if not vertex_is_simple(X, v))
    return Simplicity(not bad, bad)


# -- subdivision ------------------------------------------------------------


def composite_label(simplex) -> str:
    return simplex[0] if len(simplex) == 1 else SEPARATOR.join(simplex)


def barycentric_subdivide(X: SimplicialComplex) -> SimplicialComplex:
    """Standard barycentric subdivision.

    The vertex for simplex ``(a, b)`` is labelled ``a|b``; original vertices
    keep their labels.
    """
    flags = set()
    for top in X.maximal:
        for order in itertools.permutations(top):
            chain = tuple(composite_label(make_simplex(order[: i + 1])) for i in range(len(order)))
            flags.add(make_simplex(chain))
    return SimplicialComplex.from_maximal(flags, X.name)


def subdivide_edge(X: SimplicialComplex, edge, label=None) -> SimplicialComplex:
    """Insert a midpoint on one edge, splitting every simplex that contains it."""
    a, b = make_simplex(edge)
    m = label or X.fresh_label(f"{a}{SEPARATOR}{b}")
    faces = []
    for s in X.maximal:
        if a in s and b in s:
            faces.append([m if u == b else u for u in s])
            faces.append([m if u == a else u for u in s])
        else:
            faces.append(s)
    return SimplicialComplex.from_maximal(faces, X.name)


# -- 2-manifold data --------------------------------------------------------


def edge_triangle_counts(X: SimplicialComplex) -> dict:
    counts = {e: 0 for e in X.cells(1)}
    for t in X.cells(2):
        for e in itertools.combinations(t, 2):
            counts[e] += 1
    return counts


def is_pure(X: SimplicialComplex, d: int) -> bool:
    return all(len(s) == d + 1 for s in X.maximal)


@dataclass(frozen=True)
class SurfaceData:
    orientable: bool
    genus: int
    boundary_count: int
    euler_characteristic: int


def is_surface(X: SimplicialComplex) -> bool:
    """Connected pure 2-complex whose vertex links are all circles or arcs."""
    if X.dim != 2 or not is_pure(X, 2) or not X.is_connected:
        return False
    return all(classify_point(X, v) is not PointClass.BRANCH for v in X.vertices)


def is_closed_surface(X: SimplicialComplex) -> bool:
    return is_surface(X) and all(classify_point(X, v) is PointClass.INTERIOR for v in X.vertices)


def _orientable(X: SimplicialComplex) -> bool:
    # Propagate an orientation triangle by triangle across shared edges.
    tris = X.cells(2)
    by_edge = {}
    for t in tris:
        for e in itertools.combinations(t, 2):
            by_edge.setdefault(e, []).append(t)

    def induced(oriented, e):
        # +1 if the oriented triangle traverses e as (e[0], e[1])
        for i in range(3):
            if (oriented[i], oriented[(i + 1) % 3]) == e:
                return 1
            if (oriented[(i + 1) % 3], oriented[i]) == e:
                return -1
        raise AssertionError

    orient = {}
    for start in tris:
        if start in orient:
            continue
        orient[start] = start
        stack = [start]
        while stack:
            t = stack.pop()
            for e in itertools.combinations(t, 2):
                for u in by_edge[e]:
                    if u == t:
                        continue
                    want = -induced(orient[t], e)
                    if u not in orient:
                        cand = u if induced(u, e) == want else (u[1], u[0], u[2])
                        orient[u] = cand
                        stack.append(u)
                    elif induced(orient[u], e) != want:
                        return False
    return True


def surface_data(X: SimplicialComplex) -> SurfaceData:
    if not is_surface(X):
        raise ValueError("not a connected surface")
    counts = edge_triangle_counts(X)
    bd = nx.Graph([e for e, c in counts.items() if c == 1])
    b = nx.number_connected_components(bd) if bd.number_of_nodes() else 0
    chi = X.euler_characteristic
    orientable = _orientable(X)
    deficit = 2 - chi - b
    genus = deficit // 2 if orientable else deficit
    return SurfaceData(orientable, genus, b, chi)


def is_sphere(X: SimplicialComplex) -> bool:
    return is_closed_surface(X) and X.euler_characteristic == 2


def is_projective_plane(X: SimplicialComplex) -> bool:
    return is_closed_surface(X) and X.euler_characteristic == 1
