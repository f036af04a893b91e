"""Moves that preserve every braid group, and the pipeline to a simple 2-complex.

Each move checks its own hypotheses before touching the complex and is
recorded in a :class:`MoveLog` that can be written out and replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .complex import (
    PointClass,
    SimplicialComplex,
    classify_point,
    edge_triangle_counts,
    is_cycle,
    is_edge,
    is_simple,
    is_sphere,
    link,
    link_components,
    make_simplex,
    vertex_is_simple,
)
from .errors import ExcludedCase, GuardFailed


class MoveKind(str, Enum):
    TWO_SKELETON = "TwoSkeleton"
    CAP_OFF_SPHERE = "CapOffSphere"
    ATTACH_TWO_CELL = "AttachTwoCell"
    CONTRACT_EDGE = "ContractEdge"
    UNCONTRACT_EDGE = "UncontractEdge"


_INVERSE_KINDS = {MoveKind.UNCONTRACT_EDGE}


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    payload: tuple  # tokens; simplices are comma-joined labels
    result: str  # fingerprint of the complex after the move

    @property
    def direction(self) -> str:
        return "inverse" if self.kind in _INVERSE_KINDS else "forward"

    def to_line(self) -> str:
        parts = [self.kind.value, *self.payload, "->", self.result]
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "Move":
        tokens = line.split()
        if "->" not in tokens or tokens.index("->") != len(tokens) - 2:
            raise ValueError(f"malformed move line: {line!r}")
        try:
            kind = MoveKind(tokens[0])
        except ValueError:
            raise ValueError(f"unknown move kind {tokens[0]!r}") from None
        return cls(kind, tuple(tokens[1:-2]), tokens[-1])


@dataclass
class MoveLog:
    initial: str
    moves: list = field(default_factory=list)
    final: str = ""

    def append(self, move: Move):
        self.moves.append(move)
        self.final = move.result

    def to_text(self) -> str:
        lines = [f"# initial {self.initial}"]
        lines += [m.to_line() for m in self.moves]
        lines.append(f"# final {self.final}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MoveLog":
        initial = final = ""
        moves = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                words = line[1:].split()
                if len(words) == 2 and words[0] == "initial":
                    initial = words[1]
                elif len(words) == 2 and words[0] == "final":
                    final = words[1]
                continue
            moves.append(Move.from_line(line))
        if not initial:
            raise ValueError("move log has no '# initial' line")
        log = cls(initial, moves, final or initial)
        if moves and final and moves[-1].result != final:
            raise ValueError("final fingerprint does not match the last move")
        return log


def _encode(simplex) -> str:
    for v in simplex:
        if "," in v:
            raise ValueError(f"label {v!r} contains ',' and cannot be written to a move log")
    return ",".join(simplex)


def _decode(token: str) -> tuple:
    return make_simplex(token.split(","))


# -- individual moves -----------------------------------------------------


def is_excluded_ball(X: SimplicialComplex) -> bool:
    """True for a lone solid tetrahedron (its 2-skeleton is a 2-sphere)."""
    return X.dim == 3 and len(X.maximal) == 1


def two_skeleton(X: SimplicialComplex) -> tuple[SimplicialComplex, Move]:
    if is_excluded_ball(X):
        raise ExcludedCase("solid ball with spherical 2-skeleton",
                           "dropping the 3-cell changes the braid groups here")
    Y = X.skeleton(2) if X.dim > 2 else X
    return Y, Move(MoveKind.TWO_SKELETON, (), Y.fingerprint)


def _contraction_side(X: SimplicialComplex, v: str, w: str):
    """Check lk(v) = C + {w} with C non-empty and connected; return C or a reason."""
    L = link(X, v)
    comps = L.components()
    point = [c for c in comps if c.vertices == (w,)]
    if not point:
        return None, f"{w} is not an isolated point of lk({v})"
    rest = [c for c in comps if c.vertices != (w,)]
    if len(rest) != 1:
        return None, f"lk({v}) minus {w} has {len(rest)} components, expected one"
    return rest[0], ""


def contract_edge(X: SimplicialComplex, e, keep=None) -> tuple[SimplicialComplex, Move]:
    """Collapse an edge (a 1-simplex in no 2-simplex) onto one endpoint.

    The endpoint v that disappears must have lk(v) = C + {w}, with C connected
    and, when C is a circle, w off the boundary. ``keep`` names w; by default
    the first endpoint (in label order) that satisfies the guard is kept.
    """
    s = make_simplex(e)
    if len(s) != 2 or s not in X.simplices:
        raise GuardFailed("edge exists", f"{s} is not a 1-simplex of the complex")
    if not is_edge(X, s):
        raise GuardFailed("no 2-cell contains the edge", f"{s} lies in a triangle")
    candidates = [keep] if keep is not None else list(s)
    reasons = []
    for w in candidates:
        w = str(w)
        if w not in s:
            raise GuardFailed("kept vertex is an endpoint", w)
        v = s[1] if w == s[0] else s[0]
        C, why = _contraction_side(X, v, w)
        if C is None:
            reasons.append(why)
            continue
        if C.dim >= 1 and is_cycle(C) and classify_point(X.skeleton(2), w) is PointClass.BOUNDARY:
            reasons.append(f"lk({v}) has a circle and {w} is a boundary point")
            continue
        # simplicial link condition, so the quotient stays a simplicial complex
        clash = [t for t in C.simplices if make_simplex((*t, w)) in X.simplices]
        if clash:
            reasons.append(f"{clash[0]} spans a simplex with {w}")
            continue
        faces = []
        for t in X.maximal:
            if t == s:
                continue
            faces.append([w if u == v else u for u in t])
        if not faces:
            faces = [(w,)]
        Y = SimplicialComplex.from_maximal(faces, X.name)
        return Y, Move(MoveKind.CONTRACT_EDGE, (_encode((v, w)),), Y.fingerprint)
    raise GuardFailed("lk(v) = connected + {w}", "; ".join(reasons))


def uncontract_vertex(X: SimplicialComplex, w, component_choice: int) -> tuple[SimplicialComplex, Move]:
    """Pull one link component of a non-simple vertex w onto a fresh vertex.

    Components are indexed in ascending order of their least label. The new
    vertex is joined to w by an edge, so contracting that edge undoes the move.
    """
    w = X.check_vertex(w)
    if vertex_is_simple(X, w):
        raise GuardFailed("vertex is not simple", f"{w} is already simple")
    comps = link_components(X, w)
    if not 0 <= component_choice < len(comps):
        raise GuardFailed("valid component choice",
                          f"{component_choice} not in 0..{len(comps) - 1}")
    gamma = comps[component_choice]
    v = X.fresh_label(f"{w}~{component_choice}")
    faces = []
    for t in X.maximal:
        rest = tuple(u for u in t if u != w)
        if w in t and rest and rest in gamma.simplices:
            faces.append((*rest, v))
        else:
            faces.append(t)
    faces.append((v, w))
    Y = SimplicialComplex.from_maximal(faces, X.name)
    return Y, Move(MoveKind.UNCONTRACT_EDGE, (w, str(component_choice)), Y.fingerprint)


def _disk_regions(X: SimplicialComplex, S: SimplicialComplex):
    """Triangle regions of X that are bounded exactly by the circle S."""
    s_edges = set(S.cells(1))
    tris = X.cells(2)
    adj = {}
    for t in tris:
        for i in range(3):
            e = make_simplex(t[:i] + t[i + 1:])
            if e not in s_edges:
                adj.setdefault(e, []).append(t)
    seen = set()
    regions = []
    for t in tris:
        if t in seen:
            continue
        region, stack = [], [t]
        seen.add(t)
        while stack:
            u = stack.pop()
            region.append(u)
            for i in range(3):
                e = make_simplex(u[:i] + u[i + 1:])
                for nb in adj.get(e, []):
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
        regions.append(SimplicialComplex.from_maximal(region))
    out = []
    for R in regions:
        counts = edge_triangle_counts(R)
        rim = {e for e, c in counts.items() if c == 1}
        if rim != s_edges or any(c > 2 for c in counts.values()):
            continue
        if R.euler_characteristic != 1 or not R.is_connected:
            continue
        if all(classify_point(R, u) is not PointClass.BRANCH for u in R.vertices):
            out.append(R)
    return out


def cap_off_sphere(X: SimplicialComplex, S: SimplicialComplex, k: int | None = None) -> tuple[SimplicialComplex, Move]:
    """Attach a k-cell along the (k-1)-sphere S by coning it from a fresh apex.

    k = 2: S must be a circle bounding a disk of X whose interior meets the
    branch set. k = 3: S must be a 2-sphere and X must not be S itself.
    """
    if not S.simplices or not S.simplices <= X.simplices:
        raise GuardFailed("S is a subcomplex", "some simplex of S is missing from X")
    if k is None:
        k = S.dim + 1
    if k != S.dim + 1:
        raise GuardFailed("cell dimension matches sphere", f"k={k} but dim S={S.dim}")
    if k == 2:
        if not is_cycle(S):
            raise GuardFailed("sphere check failed", "S is not a circle")
        X2 = X.skeleton(2)
        disks = _disk_regions(X2, S)
        if not disks:
            raise GuardFailed("S bounds a disk", "no disk region of X has boundary S")
        branch = set()
        for u in X2.vertices:
            if u not in S.vertices and classify_point(X2, u) is PointClass.BRANCH:
                branch.add(u)
        if not any(branch & (set(D.vertices) - set(S.vertices)) for D in disks):
            raise GuardFailed("branch-point condition failed",
                              "the disk bounded by S has no branch point inside")
        kind = MoveKind.ATTACH_TWO_CELL
    elif k == 3:
        if not is_sphere(S):
            raise GuardFailed("sphere check failed", "S is not a 2-sphere")
        if X.simplices == S.simplices:
            raise GuardFailed("complex differs from S^2", "capping a bare 2-sphere gives D^3")
        kind = MoveKind.CAP_OFF_SPHERE
    else:
        raise GuardFailed("sphere check failed", f"spheres of dimension {k - 1} are not recognised")
    apex = X.fresh_label(f"cap{len(X.vertices)}")
    faces = list(X.maximal) + [(*s, apex) for s in S.cells(k - 1)]
    Y = SimplicialComplex.from_maximal(faces, X.name)
    payload = (str(k), *(_encode(s) for s in S.maximal))
    return Y, Move(kind, payload, Y.fingerprint)


# -- pipeline --------------------------------------------------------------


def _graph_components(X: SimplicialComplex, w: str) -> list[int]:
    return [i for i, c in enumerate(link_components(X, w)) if c.dim >= 1]


def simplify(X: SimplicialComplex) -> tuple[SimplicialComplex, MoveLog]:
    """Turn X into a braid-equivalent simple complex of dimension at most 2.

    Non-simple vertices are handled in ascending label order; at each one the
    graph components of its link are pulled off (least label first) until the
    vertex is simple.
    """
    if not X.is_connected:
        raise GuardFailed("complex is connected")
    log = MoveLog(X.fingerprint, [], X.fingerprint)
    Y, move = two_skeleton(X)
    if X.dim > 2:
        log.append(move)
    for w in list(Y.vertices):
        while not vertex_is_simple(Y, w):
            Y, move = uncontract_vertex(Y, w, _graph_components(Y, w)[0])
            log.append(move)
    assert is_simple(Y), "simplify left a non-simple vertex"
    return Y, log


def apply_move(X: SimplicialComplex, move: Move) -> SimplicialComplex:
    p = move.payload
    if move.kind is MoveKind.TWO_SKELETON:
        Y, _ = two_skeleton(X)
    elif move.kind is MoveKind.CONTRACT_EDGE:
        v, w = p[0].split(",")
        Y, _ = contract_edge(X, (v, w), keep=w)
    elif move.kind is MoveKind.UNCONTRACT_EDGE:
        Y, _ = uncontract_vertex(X, p[0], int(p[1]))
    else:
        S = SimplicialComplex.from_maximal(_decode(t) for t in p[1:])
        Y, _ = cap_off_sphere(X, S, int(p[0]))
    return Y


def replay(X: SimplicialComplex, log: MoveLog) -> SimplicialComplex:
    """Re-run every move of the log, checking each recorded fingerprint."""
    if X.fingerprint != log.initial:
        raise GuardFailed("initial fingerprint matches",
                          f"complex is {X.fingerprint}, log starts at {log.initial}")
    Y = X
    for i, move in enumerate(log.moves, 1):
        Y = apply_move(Y, move)
        if Y.fingerprint != move.result:
            raise GuardFailed("move result matches log",
                              f"move {i} gave {Y.fingerprint}, log says {move.result}")
    if Y.fingerprint != log.final:
        raise GuardFailed("final fingerprint matches", f"{Y.fingerprint} != {log.final}")
    return Y
