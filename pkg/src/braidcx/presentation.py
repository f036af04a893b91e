"""Group presentations for braid groups of trees, tree closures and their sums.

Generators:
  S(i,j)   the 2-strand generator swapping the strands headed to leaves i, j
  SPrime   the same on the second tree of a connected sum
  T(i)     stable letter of a closure along the leaves
  U(i)     dummy generator
  Free     anything else (oracle presentations use these)

Pairs of leaves are grouped by where their paths from leaf 1 part ways and by
which two branches they enter. Swapping the two branches inverts the generator,
so each class member carries a sign relative to its representative.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

import networkx as nx

from .complex import SimplicialComplex, label_key
from .smith import AbelianInvariants, cokernel


@dataclass(frozen=True, order=True)
class Gen:
    family: str  # "s", "s'", "t", "u" or "x"
    i: int = 0
    j: int = 0
    name: str = ""

    def __post_init__(self):
        if self.family in ("s", "s'") and not 2 <= self.i < self.j:
            raise ValueError(f"S generators need 2 <= i < j, got ({self.i}, {self.j})")
        if self.family in ("t", "u") and self.i < 2:
            raise ValueError(f"T/U generators need i >= 2, got {self.i}")
        if self.family not in ("s", "s'", "t", "u", "x"):
            raise ValueError(f"unknown generator family {self.family!r}")

    def __str__(self):
        if self.family in ("s", "s'"):
            return f"{self.family}{self.i}_{self.j}"
        if self.family in ("t", "u"):
            return f"{self.family}{self.i}"
        return self.name


def S(i, j):
    return Gen("s", i, j)


def SPrime(i, j):
    return Gen("s'", i, j)


def T(i):
    return Gen("t", i)


def U(i):
    return Gen("u", i)


def Free(name):
    return Gen("x", name=str(name))


class Word(tuple):
    """Tuple of (Gen, +1 or -1) letters."""

    def __new__(cls, letters=()):
        letters = tuple((g, int(e)) for g, e in letters)
        if any(e not in (1, -1) for _, e in letters):
            raise ValueError("exponents must be +1 or -1")
        return super().__new__(cls, letters)

    @classmethod
    def of(cls, *items) -> "Word":
        """Word.of(a, (b, -1), c) with bare generators meaning exponent +1."""
        return cls(it if isinstance(it, tuple) else (it, 1) for it in items)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self))

    def __mul__(self, other):
        return Word(tuple(self) + tuple(other))

    def reduce(self) -> "Word":
        out = []
        for g, e in self:
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((g, e))
        return Word(out)

    def generators(self) -> set:
        return {g for g, _ in self}

    def exponent_sum(self, g) -> int:
        return sum(e for h, e in self if h == g)

    def __str__(self):
        if not self:
            return "1"
        return " ".join(str(g) if e == 1 else f"{g}^-1" for g, e in self)


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple = ()

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ValueError("duplicate generators")
        for r in self.relators:
            missing = r.generators() - gens
            if missing:
                raise ValueError(f"relator {r} uses unknown generators {sorted(map(str, missing))}")

    def to_text(self) -> str:
        gens = ", ".join(map(str, self.generators))
        rels = ", ".join(map(str, self.relators))
        return f"< {gens} | {rels} >"

    __str__ = to_text

    def to_json(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "relators": [[[str(g), e] for g, e in r] for r in self.relators],
            "text": self.to_text(),
        }

    def free_reduce(self) -> "GroupPresentation":
        rels = tuple(r for r in (w.reduce() for w in self.relators) if r)
        return GroupPresentation(self.generators, rels)


# -- abelianization and Tietze cleanup ------------------------------------------


def abelianize(P: GroupPresentation) -> list:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    return [[r.exponent_sum(g) for g in P.generators] for r in P.relators]


def presentation_h1(P: GroupPresentation) -> AbelianInvariants:
    return cokernel(abelianize(P), len(P.generators))


def _substitute(w: Word, g: Gen, by: Word) -> Word:
    out = []
    for h, e in w:
        if h == g:
            out += list(by if e == 1 else by.inverse())
        else:
            out.append((h, e))
    return Word(out).reduce()


def tietze_simplify(P: GroupPresentation) -> GroupPresentation:
    """Free reduction plus elimination of generators defined by relators of length <= 2."""
    gens = list(P.generators)
    rels = [r.reduce() for r in P.relators]
    while True:
        rels = [r for r in rels if r]
        hit = None
        for idx, r in enumerate(rels):
            if len(r) <= 2 and len(r.generators()) == len(r):
                hit = idx
                break
        if hit is None:
            return GroupPresentation(tuple(gens), tuple(rels))
        r = rels.pop(hit)
        # eliminate the larger generator so representatives survive
        g, e = max(r, key=lambda letter: letter[0])
        rest = Word(letter for letter in r if letter[0] != g)
        # g^e * rest = 1 (up to rotation) => g = rest^-e
        value = rest.inverse() if e == 1 else rest
        rels = [_substitute(w, g, value) for w in rels]
        gens.remove(g)


# -- leaf-labelled trees ----------------------------------------------------------


@dataclass(frozen=True)
class LeafLabelledTree:
    tree: SimplicialComplex
    labels: dict = field(hash=False)  # leaf vertex -> 1..k

    def __post_init__(self):
        g = self.tree.one_skeleton()
        if self.tree.dim != 1 or not nx.is_tree(g):
            raise ValueError("not a tree")
        leaves = {v for v, d in g.degree() if d == 1}
        if set(self.labels) != leaves:
            raise ValueError("labels must cover exactly the leaves")
        if sorted(self.labels.values()) != list(range(1, len(leaves) + 1)):
            raise ValueError("labels must be 1..k")

    @classmethod
    def from_tree(cls, tree: SimplicialComplex, labels=None) -> "LeafLabelledTree":
        if labels is None:
            g = tree.one_skeleton()
            leaves = sorted((v for v, d in g.degree() if d == 1), key=label_key)
            labels = {v: i for i, v in enumerate(leaves, 1)}
        return cls(tree, {str(v): int(i) for v, i in labels.items()})

    @property
    def k(self) -> int:
        return len(self.labels)

    def leaf(self, i: int) -> str:
        return next(v for v, j in self.labels.items() if j == i)

    @property
    def graph(self) -> nx.Graph:
        return self.tree.one_skeleton()


def tree_r2(tree: LeafLabelledTree) -> int:
    return sum(comb(d - 1, 2) for _, d in tree.graph.degree() if d >= 3)


def rank_r(n: int, nu: int, mu: int) -> int:
    """Free rank contributed by a vertex of valency nu whose deletion leaves mu pieces."""
    if n < 1 or not nu >= mu >= 1:
        raise ValueError(f"need n >= 1 and nu >= mu >= 1, got n={n}, nu={nu}, mu={mu}")
    return (nu - 2) * comb(n + mu - 2, n - 1) - comb(n + mu - 2, n) - (nu - mu - 1)


@dataclass(frozen=True)
class PairClass:
    center: str
    branches: tuple  # neighbours of the center toward the two leaves of the representative
    members: tuple  # ((i, j), sign) with sign -1 when the branches are swapped

    @property
    def representative(self) -> tuple:
        return self.members[0][0]


def pair_classes(tree: LeafLabelledTree) -> list[PairClass]:
    g = tree.graph
    root = tree.leaf(1)
    paths = {i: nx.shortest_path(g, root, tree.leaf(i)) for i in range(2, tree.k + 1)}
    grouped = {}
    for i, j in itertools.combinations(range(2, tree.k + 1), 2):
        pi, pj = paths[i], paths[j]
        d = 0
        while d + 1 < min(len(pi), len(pj)) and pi[d + 1] == pj[d + 1]:
            d += 1
        c, ni, nj = pi[d], pi[d + 1], pj[d + 1]
        grouped.setdefault((c, frozenset((ni, nj))), []).append(((i, j), ni, nj))
    out = []
    for (c, _), items in grouped.items():
        items.sort()
        (_, a, b) = items[0]
        members = tuple((ij, 1 if (ni, nj) == (a, b) else -1) for ij, ni, nj in items)
        out.append(PairClass(c, (a, b), members))
    out.sort(key=lambda pc: pc.representative)
    return out


def _identifications(classes, gen) -> list:
    rels = []
    for pc in classes:
        rep = gen(*pc.representative)
        for (i, j), sign in pc.members[1:]:
            rels.append(Word.of(gen(i, j), (rep, -sign)))
    return rels


def _pair_gens(k, gen):
    return [gen(i, j) for i, j in itertools.combinations(range(2, k + 1), 2)]


def tree_b2(tree: LeafLabelledTree) -> GroupPresentation:
    if tree.k < 2:
        raise ValueError("need at least two leaves")
    return GroupPresentation(tuple(_pair_gens(tree.k, S)),
                             tuple(_identifications(pair_classes(tree), S)))


def tree_closure_b2(tree: LeafLabelledTree) -> GroupPresentation:
    P = tree_b2(tree)
    return GroupPresentation(P.generators + tuple(T(i) for i in range(2, tree.k + 1)), P.relators)


def twotrees_b2(A: LeafLabelledTree, B: LeafLabelledTree) -> GroupPresentation:
    """Presentation of B_2 of the sum of two tree closures glued leaf i to leaf i."""
    if A.k != B.k:
        raise ValueError(f"leaf counts differ: {A.k} != {B.k}")
    k = A.k
    gens = _pair_gens(k, S) + _pair_gens(k, SPrime) + [T(i) for i in range(2, k + 1)]
    rels = []
    for i, j in itertools.combinations(range(2, k + 1), 2):
        ti, tj, s = Word.of(T(i)), Word.of(T(j)), Word.of(S(i, j))
        conj = ti.inverse() * tj.inverse() * s.inverse() * ti * tj
        rels.append(Word.of(SPrime(i, j)) * conj.inverse())
    rels += _identifications(pair_classes(A), S)
    rels += _identifications(pair_classes(B), SPrime)
    return GroupPresentation(tuple(gens), tuple(rels))


def closure_presentation_boundary(Pn: GroupPresentation, lower_gens, k: int) -> GroupPresentation:
    """Add stable letters commuting with the image of the (n-1)-strand group."""
    letters = [T(i) for i in range(2, k + 1)]
    rels = list(Pn.relators)
    for g in lower_gens:
        for t in letters:
            rels.append(commutator(Word.of(g), Word.of(t)))
    return GroupPresentation(Pn.generators + tuple(letters), tuple(rels))


# -- realizing tree families as graphs ---------------------------------------------


def realize_closure(T: LeafLabelledTree, apex: str = "^") -> SimplicialComplex:
    apex = T.tree.fresh_label(apex)
    return T.tree.with_simplices([(v, apex) for v in T.labels]).renamed(f"closure({T.tree.name})")


def realize_twotrees(A: LeafLabelledTree, B: LeafLabelledTree) -> SimplicialComplex:
    """Graph of the sum of both closures: leaf i of A joined to leaf i of B by an edge."""
    if A.k != B.k:
        raise ValueError(f"leaf counts differ: {A.k} != {B.k}")
    rename = {v: f"{v}'" for v in B.tree.vertices}
    while set(rename.values()) & set(A.tree.vertices):
        rename = {v: f"{w}'" for v, w in rename.items()}
    Bt = B.tree.relabel(rename)
    edges = [(A.leaf(i), rename[B.leaf(i)]) for i in range(1, A.k + 1)]
    return A.tree.union(Bt).with_simplices(edges).renamed("twotrees")


def random_tree(rng: random.Random, max_leaves: int = 12) -> LeafLabelledTree:
    """Random tree with no valency-2 vertices and between 2 and max_leaves leaves."""
    target = rng.randint(2, max_leaves)
    edges = [("n0", "n1")]
    leaves = ["n0", "n1"]
    count = 2
    while len(leaves) < target:
        # either sprout two leaves from a leaf or one leaf from an internal vertex
        internal = sorted({v for e in edges for v in e} - set(leaves))
        if internal and rng.random() < 0.4:
            host = rng.choice(internal)
            new = f"n{count}"
            count += 1
            edges.append((host, new))
            leaves.append(new)
        else:
            host = rng.choice(leaves)
            leaves.remove(host)
            for _ in range(2):
                new = f"n{count}"
                count += 1
                edges.append((host, new))
                leaves.append(new)
            if len(leaves) > target:
                break
    T = SimplicialComplex.from_maximal(edges, "random_tree")
    order = list(T.one_skeleton().degree())
    lv = [v for v, d in order if d == 1]
    rng.shuffle(lv)
    return LeafLabelledTree.from_tree(T, {v: i for i, v in enumerate(lv, 1)})
