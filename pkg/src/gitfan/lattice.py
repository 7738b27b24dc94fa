"""Exact integer lattice linear algebra.

Matrices are tuples of row tuples of Python ints, so entries never overflow.
Sublattices of Z^d are stored by the nonzero columns of their column
Hermite normal form, which makes equal lattices compare (and hash) equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

INFINITE = math.inf

Matrix = tuple  # tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M: Matrix, ncols: int | None = None) -> Matrix:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def shape(M: Matrix, ncols: int | None = None) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else (ncols or 0))


def det(M: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of a list of integer vectors (fraction-free elimination)."""
    A = [list(r) for r in rows if any(r)]
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r]
        for i in range(r + 1, len(A)):
            f = A[i][c]
            if f:
                row = [p[c] * x - f * y for x, y in zip(A[i], p)]
                g = math.gcd(*row)
                A[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(A):
            break
    return r


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hnf(M, ncols: int | None = None) -> tuple[Matrix, Matrix]:
    """Column Hermite normal form.

    Returns ``(H, U)`` with ``H = M U``, ``U`` unimodular, and ``H`` in
    column echelon form: the first ``r`` columns are nonzero with strictly
    increasing pivot rows, pivots are positive, entries above a pivot are
    zero and entries left of a pivot (in its row) lie in ``[0, pivot)``.
    ``ncols`` is needed only when ``M`` has no rows.
    """
    M = as_matrix(M)
    nrows, n = shape(M, ncols)
    # work on columns: cols[j] is column j of H, ucols[j] column j of U
    cols = [list(c) for c in transpose(M, n)] if nrows else [[] for _ in range(n)]
    ucols = [list(c) for c in identity(n)]
    c = 0
    for i in range(nrows):
        if c == n:
            break
        for j in range(c + 1, n):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[c][i]
            g, s, t = _xgcd(a, b)
            p, q = a // g, b // g
            # [col_c, col_j] <- [s*col_c + t*col_j, -q*col_c + p*col_j], det = 1
            cc, cj = cols[c], cols[j]
            cols[c] = [s * x + t * y for x, y in zip(cc, cj)]
            cols[j] = [-q * x + p * y for x, y in zip(cc, cj)]
            uc, uj = ucols[c], ucols[j]
            ucols[c] = [s * x + t * y for x, y in zip(uc, uj)]
            ucols[j] = [-q * x + p * y for x, y in zip(uc, uj)]
        piv = cols[c][i]
        if piv == 0:
            continue
        if piv < 0:
            cols[c] = [-x for x in cols[c]]
            ucols[c] = [-x for x in ucols[c]]
            piv = -piv
        for k in range(c):
            f = cols[k][i] // piv
            if f:
                cols[k] = [x - f * y for x, y in zip(cols[k], cols[c])]
                ucols[k] = [x - f * y for x, y in zip(ucols[k], ucols[c])]
        c += 1
    H = transpose(tuple(tuple(x) for x in cols), n) if nrows else ()
    U = transpose(tuple(tuple(x) for x in ucols), n)
    return H, U


def hnf_rank(H: Matrix) -> int:
    if not H:
        return 0
    return sum(1 for col in transpose(H) if any(col))


def snf(M, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``S = U M V`` with ``U, V`` unimodular.

    Diagonal entries are nonnegative and each divides the next.
    """
    M = as_matrix(M)
    m, n = shape(M, ncols)
    A = [list(r) for r in M]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        A[dst] = [x + f * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for R in (A, V):
            for row in R:
                row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        done = False
            if not done:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return as_matrix(A), as_matrix(U), as_matrix(V)


def kernel(M, ncols: int | None = None) -> tuple[tuple[int, ...], ...]:
    """A basis (list of vectors) of the integer kernel ``{x in Z^n : M x = 0}``."""
    M = as_matrix(M)
    _, n = shape(M, ncols)
    H, U = hnf(M, n)
    r = hnf_rank(H) if M else 0
    Ut = transpose(U)
    return tuple(Ut[j] for j in range(r, n))


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^d given by its canonical (column HNF) basis."""

    ambient_rank: int
    basis: tuple  # tuple of column vectors

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        """The basis as a d x rank matrix (columns are basis vectors)."""
        return transpose(self.basis, self.rank)

    def __contains__(self, v) -> bool:
        v = [int(x) for x in v]
        if len(v) != self.ambient_rank:
            raise ValueError("dimension mismatch")
        for b in self.basis:
            p = next(i for i, x in enumerate(b) if x)
            q, r = divmod(v[p], b[p])
            if r:
                return False
            v = [x - q * y for x, y in zip(v, b)]
        return not any(v)

    def coordinates(self, v) -> tuple[int, ...] | None:
        """Integer coordinates of ``v`` in the canonical basis, or None."""
        v = [int(x) for x in v]
        out = []
        for b in self.basis:
            p = next(i for i, x in enumerate(b) if x)
            q, r = divmod(v[p], b[p])
            if r:
                return None
            out.append(q)
            v = [x - q * y for x, y in zip(v, b)]
        return tuple(out) if not any(v) else None


def span(vectors, d: int) -> Sublattice:
    """The sublattice of Z^d generated by ``vectors``."""
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if any(len(v) != d for v in vectors):
        raise ValueError(f"all vectors must have length {d}")
    if not vectors:
        return Sublattice(d, ())
    H, _ = hnf(transpose(tuple(vectors)))
    cols = transpose(H)
    return Sublattice(d, tuple(c for c in cols if any(c)))


def intersect(L1: Sublattice, L2: Sublattice) -> Sublattice:
    """``L1 ∩ L2`` via the integer kernel of ``[B1 | -B2]``."""
    if L1.ambient_rank != L2.ambient_rank:
        raise ValueError("ambient ranks differ")
    d = L1.ambient_rank
    k1 = L1.rank
    if k1 == 0 or L2.rank == 0:
        return Sublattice(d, ())
    stacked = L1.basis + tuple(tuple(-x for x in b) for b in L2.basis)
    K = kernel(transpose(stacked))
    vecs = [
        tuple(sum(c * b[i] for c, b in zip(kv[:k1], L1.basis)) for i in range(d))
        for kv in K
    ]
    return span(vecs, d)


def index(L: Sublattice):
    """``[Z^d : L]``, or ``INFINITE`` when ``L`` is not of full rank."""
    d = L.ambient_rank
    if L.rank < d:
        return INFINITE
    S, _, _ = snf(L.matrix())
    return math.prod(S[i][i] for i in range(d))


def relative_index(L1: Sublattice, L2: Sublattice):
    """``[L1 : L2]`` for ``L2 ⊆ L1``; ``INFINITE`` if ranks differ."""
    coords = []
    for b in L2.basis:
        c = L1.coordinates(b)
        if c is None:
            raise ValueError("L2 is not contained in L1")
        coords.append(c)
    if L2.rank < L1.rank:
        return INFINITE
    return abs(det(transpose(tuple(coords))))


def saturate(L: Sublattice) -> Sublattice:
    """``span_Q(L) ∩ Z^d``, computed as the kernel of the left kernel."""
    d = L.ambient_rank
    left = kernel(L.basis, d) if L.rank else identity(d)
    return span(kernel(left, d), d) if left else Sublattice(d, identity(d))


def is_primitive(L: Sublattice) -> bool:
    return saturate(L) == L


def orthogonal_lattice(vectors, d: int) -> Sublattice:
    """Integer vectors orthogonal to all ``vectors`` (a saturated lattice)."""
    vectors = tuple(tuple(int(x) for x in v) for v in vectors)
    if not vectors:
        return Sublattice(d, identity(d))
    return span(kernel(vectors, d), d)
