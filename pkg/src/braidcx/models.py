"""Named example complexes: trees, thetas, Kuratowski graphs, small surfaces."""

from __future__ import annotations

import itertools

from .complex import SimplicialComplex


def _c(faces, name):
    return SimplicialComplex.from_maximal(faces, name)


def star_tree(k: int) -> SimplicialComplex:
    """Cone on k points: center ``0`` with leaves ``1..k``."""
    return _c([("0", str(i)) for i in range(1, k + 1)], f"T{k}")


def path(edges: int) -> SimplicialComplex:
    return _c([(str(i), str(i + 1)) for i in range(edges)], f"path{edges}")


def cycle(n: int) -> SimplicialComplex:
    return _c([(str(i), str((i + 1) % n)) for i in range(n)], f"cycle{n}")


def theta(k: int, inner: int = 2) -> SimplicialComplex:
    """Two hubs ``a`` and ``b`` joined by k strands with ``inner`` interior vertices each."""
    faces = []
    for i in range(1, k + 1):
        chain = ["a"] + [f"s{i}_{j}" for j in range(1, inner + 1)] + ["b"]
        faces += list(zip(chain, chain[1:]))
    return _c(faces, f"theta{k}")


def complete_graph(n: int) -> SimplicialComplex:
    return _c(itertools.combinations([str(i) for i in range(n)], 2), f"K{n}")


def complete_bipartite(m: int, n: int) -> SimplicialComplex:
    return _c([(f"a{i}", f"b{j}") for i in range(m) for j in range(n)], f"K{m},{n}")


def figure_eight() -> SimplicialComplex:
    return _c([("0", "1"), ("1", "2"), ("2", "0"), ("0", "3"), ("3", "4"), ("4", "0")], "figure8")


def h_tree() -> SimplicialComplex:
    """Two adjacent trivalent vertices with leaves 1, 2 at ``v`` and 3, 4 at ``w``."""
    return _c([("v", "w"), ("v", "1"), ("v", "2"), ("w", "3"), ("w", "4")], "Htree")


def s0_model() -> SimplicialComplex:
    """Disk coned from ``c`` over the square b1..b4, plus the edge c-p."""
    square = ["b1", "b2", "b3", "b4"]
    faces = [("c", square[i], square[(i + 1) % 4]) for i in range(4)]
    faces.append(("c", "p"))
    return _c(faces, "S0")


def triangle() -> SimplicialComplex:
    return _c([("a", "b", "c")], "disk")


def tetrahedron_boundary() -> SimplicialComplex:
    return _c(itertools.combinations("0123", 3), "S2_tetra")


def solid_tetrahedron() -> SimplicialComplex:
    return _c([("0", "1", "2", "3")], "D3")


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex (a (d-1)-sphere)."""
    return _c(itertools.combinations([str(i) for i in range(d + 1)], d), f"bd_simplex{d}")


def octahedron() -> SimplicialComplex:
    faces = []
    for top in ("n", "s"):
        for i in range(4):
            faces.append((top, f"e{i}", f"e{(i + 1) % 4}"))
    return _c(faces, "octahedron")


def torus() -> SimplicialComplex:
    """Seven-vertex torus."""
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 2) % 7, (i + 3) % 7))
    return _c(faces, "torus")


def projective_plane() -> SimplicialComplex:
    """Six-vertex projective plane."""
    faces = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
        (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
    ]
    return _c(faces, "RP2")


def mobius_band() -> SimplicialComplex:
    return _c([(i, (i + 1) % 5, (i + 2) % 5) for i in range(5)], "mobius")


def annulus() -> SimplicialComplex:
    faces = [(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5), (2, 0, 5), (0, 5, 3)]
    return _c(faces, "annulus")


def book(pages: int) -> SimplicialComplex:
    """Triangles sharing the binding edge a-b."""
    return _c([("a", "b", f"p{i}") for i in range(1, pages + 1)], f"book{pages}")


def bowtie() -> SimplicialComplex:
    """Two triangles glued at the vertex w."""
    return _c([("w", "a1", "a2"), ("w", "b1", "b2")], "bowtie")
