"""Brute-force ground truth: discrete configuration spaces of graphs as cube complexes.

A cell of UD_n(G) is a set of n cells of G (vertices or edges) whose closures
are pairwise disjoint. Its dimension is the number of edges in the set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .complex import SimplicialComplex
from .errors import DimensionError, OracleBudgetExceeded
from .presentation import Free, GroupPresentation, Word
from .smith import AbelianInvariants, h1_from_chains

DEFAULT_CELL_LIMIT = 10**6


@dataclass(frozen=True)
class GraphModel:
    """Simple graph on vertices 0..V-1 with edges as sorted index pairs."""

    names: tuple
    edges: tuple

    @classmethod
    def from_complex(cls, X: SimplicialComplex) -> "GraphModel":
        if X.dim > 1:
            raise DimensionError(f"oracle handles graphs only, got dimension {X.dim}")
        names = tuple(X.vertices)
        index = {v: i for i, v in enumerate(names)}
        edges = tuple(sorted(tuple(sorted((index[a], index[b]))) for a, b in X.cells(1)))
        return cls(names, edges)

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    def to_complex(self, name: str = "graph") -> SimplicialComplex:
        return SimplicialComplex.from_maximal(
            [(self.names[a], self.names[b]) for a, b in self.edges] + [(v,) for v in self.names], name)


def subdivide_for(G: GraphModel, n: int) -> GraphModel:
    """Replace every edge by a path of n + 1 edges."""
    if n < 1:
        raise ValueError("n must be >= 1")
    names = list(G.names)
    edges = []
    for a, b in G.edges:
        chain = [a]
        for t in range(1, n + 1):
            names.append(f"{G.names[a]}-{G.names[b]}.{t}")
            chain.append(len(names) - 1)
        chain.append(b)
        edges += [tuple(sorted(p)) for p in zip(chain, chain[1:])]
    return GraphModel(tuple(names), tuple(sorted(edges)))


@dataclass
class CubeComplex:
    """Cells per dimension as sorted tuples of graph-cell ids.

    Graph cell ids: vertex v is v, edge e is V + e, so the global order puts
    vertices first and edges in lexicographic order.
    """

    graph: GraphModel
    n: int
    cells: dict = field(default_factory=dict)  # dim -> list of cube cells
    index: dict = field(default_factory=dict)  # dim -> {cell: position}

    def count(self, d: int) -> int:
        return len(self.cells.get(d, []))

    @property
    def dim(self) -> int:
        return max((d for d, cs in self.cells.items() if cs), default=-1)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(cs) for d, cs in self.cells.items())

    def census(self) -> dict:
        return {d: len(self.cells[d]) for d in sorted(self.cells)}

    def is_edge(self, c: int) -> bool:
        return c >= self.graph.n_vertices

    def ends(self, c: int) -> tuple:
        return self.graph.edges[c - self.graph.n_vertices]

    def boundary(self, cell) -> dict:
        """Signed faces: sum over edges e_i of (-1)^(i-1) (head face - tail face)."""
        out = {}
        d = 0
        for pos, c in enumerate(cell):
            if not self.is_edge(c):
                continue
            sign = -1 if d % 2 else 1
            d += 1
            tail, head = self.ends(c)
            for end, s in ((head, sign), (tail, -sign)):
                face = tuple(sorted(cell[:pos] + (end,) + cell[pos + 1:]))
                out[face] = out.get(face, 0) + s
        return {f: v for f, v in out.items() if v}

    def describe(self, cell) -> str:
        V = self.graph.n_vertices
        names = []
        for c in cell:
            if c < V:
                names.append(self.graph.names[c])
            else:
                a, b = self.ends(c)
                names.append(f"{self.graph.names[a]}~{self.graph.names[b]}")
        return "{" + ", ".join(names) + "}"


def build_udc(G: GraphModel, n: int, limit: int = DEFAULT_CELL_LIMIT, max_dim: int | None = None,
              check: bool = True) -> CubeComplex:
    """Enumerate UD_n(G) by backtracking over graph cells in global order."""
    V = G.n_vertices
    closures = [frozenset((v,)) for v in range(V)] + [frozenset(e) for e in G.edges]
    total = len(closures)
    C = CubeComplex(G, n)
    cells = {}
    produced = 0

    def extend(start, chosen, used, edges_used):
        nonlocal produced
        if len(chosen) == n:
            produced += 1
            if produced > limit:
                raise OracleBudgetExceeded(f"more than {limit} cells in UD_{n}")
            cells.setdefault(edges_used, []).append(tuple(chosen))
            return
        for c in range(start, total):
            if total - c < n - len(chosen):
                break
            cl = closures[c]
            if cl & used:
                continue
            is_e = c >= V
            if max_dim is not None and is_e and edges_used + 1 > max_dim:
                continue
            chosen.append(c)
            extend(c + 1, chosen, used | cl, edges_used + is_e)
            chosen.pop()

    extend(0, [], frozenset(), 0)
    for d in range(0, (max_dim if max_dim is not None else n) + 1):
        cs = cells.get(d, [])
        C.cells[d] = cs
        C.index[d] = {c: i for i, c in enumerate(cs)}
    if check:
        check_boundary_squared(C)
    return C


def check_boundary_squared(C: CubeComplex) -> None:
    for d in range(2, C.dim + 1):
        for cell in C.cells[d]:
            acc = {}
            for face, s in C.boundary(cell).items():
                for f2, s2 in C.boundary(face).items():
                    acc[f2] = acc.get(f2, 0) + s * s2
            if any(acc.values()):
                raise AssertionError(f"boundary of boundary is nonzero on {C.describe(cell)}")


def components(C: CubeComplex) -> list[list]:
    """Vertex sets of the connected components of the 1-skeleton."""
    parent = list(range(C.count(0)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in _edge_ends(C):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for v in range(C.count(0)):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _edge_ends(C: CubeComplex) -> list:
    idx0 = C.index[0]
    out = []
    for cell in C.cells.get(1, []):
        faces = C.boundary(cell)
        head = next(f for f, s in faces.items() if s > 0)
        tail = next(f for f, s in faces.items() if s < 0)
        out.append((idx0[tail], idx0[head]))
    return out


def cube_h1(C: CubeComplex) -> AbelianInvariants:
    """Cellular H1 of the cube complex (summed over components)."""
    idx1 = C.index.get(1, {})
    two = [{idx1[f]: s for f, s in C.boundary(cell).items()} for cell in C.cells.get(2, [])]
    return h1_from_chains(C.count(0), _edge_ends(C), two)


def cube_betti0(C: CubeComplex) -> int:
    return len(components(C))


def _spanning_tree(C: CubeComplex, ends) -> set:
    adj = {}
    for k, (a, b) in enumerate(ends):
        adj.setdefault(a, []).append((b, k))
        adj.setdefault(b, []).append((a, k))
    seen, tree = set(), set()
    for root in range(C.count(0)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, k in adj.get(v, []):
                if w not in seen:
                    seen.add(w)
                    tree.add(k)
                    queue.append(w)
    return tree


def cube_pi1(C: CubeComplex) -> GroupPresentation:
    """Generators are non-tree edges; each square contributes its boundary word."""
    ends = _edge_ends(C)
    tree = _spanning_tree(C, ends)
    gens = {k: Free(f"x{k}") for k in range(len(ends)) if k not in tree}
    idx1 = C.index[1]
    rels = []
    for cell in C.cells.get(2, []):
        e, f = [c for c in cell if C.is_edge(c)]
        te, he = C.ends(e)
        tf, hf = C.ends(f)

        def edge_id(a, b):
            return idx1[tuple(sorted(tuple(c for c in cell if c not in (e, f)) + (a, b)))]

        # corners (te,tf) -> (he,tf) -> (he,hf) -> (te,hf) -> back
        loop = [(edge_id(e, tf), 1), (edge_id(he, f), 1), (edge_id(e, hf), -1), (edge_id(te, f), -1)]
        rels.append(Word((gens[k], s) for k, s in loop if k in gens).reduce())
    return GroupPresentation(tuple(gens[k] for k in sorted(gens)), tuple(r for r in rels if r))


def oracle_h1(X: SimplicialComplex, n: int, limit: int = DEFAULT_CELL_LIMIT) -> AbelianInvariants:
    """H1 of UD_n of X after the uniform subdivision; only cells up to dimension 2 are built."""
    G = GraphModel.from_complex(X)
    if n == 1:
        C = build_udc(G, 1, limit)
    else:
        C = build_udc(subdivide_for(G, n), n, limit, max_dim=2)
    return cube_h1(C)


__all__ = [
    "CubeComplex", "GraphModel", "build_udc", "cube_h1", "cube_pi1", "oracle_h1", "subdivide_for"
]
