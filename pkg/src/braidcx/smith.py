"""Exact Smith normal form and finitely generated abelian groups.

Matrices are lists of lists of Python ints, so there is no overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank (+) Z/d1 (+) ... with d1 | d2 | ... and every d >= 2."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain of integers >= 2")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_cyclic(cls, free_rank: int, orders) -> "AbelianInvariants":
        """Normalise an arbitrary list of cyclic orders (0 means Z, 1 is dropped)."""
        orders = [abs(int(d)) for d in orders]
        free = free_rank + sum(1 for d in orders if d == 0)
        diag = [d for d in orders if d > 1]
        D, _, _ = snf([[d if i == j else 0 for j in range(len(diag))] for i, d in enumerate(diag)],
                      ncols=len(diag))
        chain = tuple(D[i][i] for i in range(len(diag)) if D[i][i] > 1)
        return cls(free, chain)

    def __add__(self, other: "AbelianInvariants") -> "AbelianInvariants":
        return AbelianInvariants.from_cyclic(self.free_rank + other.free_rank,
                                             list(self.torsion) + list(other.torsion))

    @property
    def torsion_free(self) -> bool:
        return not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " (+) ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


def free(r: int) -> AbelianInvariants:
    return AbelianInvariants(r, ())


def direct_sum(groups) -> AbelianInvariants:
    total = AbelianInvariants()
    for g in groups:
        total = total + g
    return total


# -- Smith normal form -------------------------------------------------------


def identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B) -> list:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def determinant(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def snf(M, ncols: int | None = None):
    """Return (D, U, V) with D = U M V, U and V unimodular, D diagonal.

    The diagonal is non-negative and each entry divides the next. Pivots are
    the entries of least absolute value in the remaining block.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // p)
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // p)
            # remainders smaller than the pivot: move the least one up and repeat
            cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if cand:
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return A, U, V


def diagonal(D) -> list:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def rank_and_torsion(M, ncols: int | None = None) -> tuple[int, list]:
    D, _, _ = snf(M, ncols)
    diag = [d for d in diagonal(D) if d]
    return len(diag), [d for d in diag if d > 1]


def cokernel(rows, ncols: int) -> AbelianInvariants:
    """Z^ncols modulo the span of the given integer rows (dense SNF)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return free(ncols)
    rank, tors = rank_and_torsion(rows, ncols)
    return AbelianInvariants.from_cyclic(ncols - rank, tors)


def sparse_cokernel(rows, ncols: int) -> AbelianInvariants:
    """Cokernel of sparse integer rows (dicts column -> value).

    Rows with a unit entry eliminate their column first, which is exact and
    keeps fill-in low on boundary matrices; the remaining block goes to SNF.
    """
    rows = {i: {c: v for c, v in r.items() if v} for i, r in enumerate(rows)}
    rows = {i: r for i, r in rows.items() if r}
    where = {}
    for i, r in rows.items():
        for c in r:
            where.setdefault(c, set()).add(i)
    alive = ncols
    progress = True
    while progress:
        progress = False
        for i in sorted(rows, key=lambda k: len(rows[k])):
            r = rows.get(i)
            if not r:
                continue
            col = next((c for c, v in r.items() if v in (1, -1)), None)
            if col is None:
                continue
            u = r[col]
            for j in list(where.get(col, ())):
                if j == i:
                    continue
                other = rows[j]
                q = other[col] * u
                for c, v in r.items():
                    nv = other.get(c, 0) - q * v
                    if nv:
                        if c not in other:
                            where.setdefault(c, set()).add(j)
                        other[c] = nv
                    else:
                        other.pop(c, None)
                        where[c].discard(j)
                if not other:
                    del rows[j]
            for c in r:
                where[c].discard(i)
            del rows[i]
            where.pop(col, None)
            alive -= 1
            progress = True
    if not rows:
        return free(alive)
    cols = sorted({c for r in rows.values() for c in r})
    index = {c: k for k, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rows]
    for k, r in enumerate(rows.values()):
        for c, v in r.items():
            dense[k][index[c]] = v
    rank, tors = rank_and_torsion(dense, len(cols))
    return AbelianInvariants.from_cyclic(alive - rank, tors)


def h1_from_chains(n_vertices: int, edges, two_cells) -> AbelianInvariants:
    """H1 of a 2-dimensional chain complex.

    ``edges`` lists (tail, head) vertex indices; ``two_cells`` lists sparse
    boundaries as dicts edge index -> coefficient. Edges of a spanning forest
    are dropped, which identifies cycles with the remaining edges.
    """
    parent = list(range(n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nontree = {}
    for k, (a, b) in enumerate(edges):
        ra, rb = find(a), find(b)
        if ra == rb:
            nontree[k] = len(nontree)
        else:
            parent[ra] = rb
    rows = []
    for bd in two_cells:
        rows.append({nontree[e]: c for e, c in bd.items() if e in nontree and c})
    return sparse_cokernel(rows, len(nontree))


def h1_dense(d1, d2, n_edges: int) -> AbelianInvariants:
    """H1 = ker d1 / im d2 from dense boundary matrices (rows index cells of lower dimension)."""
    r1 = rank_and_torsion(d1, n_edges)[0] if d1 else 0
    if d2 and d2[0]:
        r2, tors = rank_and_torsion(d2, len(d2[0]))
    else:
        r2, tors = 0, []
    return AbelianInvariants.from_cyclic(n_edges - r1 - r2, tors)


def gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
