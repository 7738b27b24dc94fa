"""Exact LP feasibility by the phase-one simplex method.

All arithmetic is over ``Fraction``; Bland's rule guarantees termination on
degenerate problems.
"""

from __future__ import annotations

from fractions import Fraction


def find_feasible(ge=(), ge_rhs=None, eq=(), eq_rhs=None, n=None, nonneg=False):
    """Find ``x`` with ``ge @ x >= ge_rhs`` and ``eq @ x == eq_rhs``.

    ``x`` is free unless ``nonneg`` is set. Right-hand sides default to zero.
    Returns a tuple of Fractions, or ``None`` if the system is infeasible.
    """
    ge = [list(r) for r in ge]
    eq = [list(r) for r in eq]
    if n is None:
        rows = ge or eq
        if not rows:
            raise ValueError("cannot infer the number of variables")
        n = len(rows[0])
    ge_rhs = [0] * len(ge) if ge_rhs is None else list(ge_rhs)
    eq_rhs = [0] * len(eq) if eq_rhs is None else list(eq_rhs)
    if not ge and not eq:
        return tuple(Fraction(0) for _ in range(n))

    # standard form columns: x (or x+ / x-), one surplus per >= row
    nx = n if nonneg else 2 * n
    ns = len(ge)
    rows, rhs = [], []
    for k, (a, b) in enumerate(zip(ge, ge_rhs)):
        xs = a if nonneg else a + [-v for v in a]
        surplus = [0] * ns
        surplus[k] = -1
        rows.append(xs + surplus)
        rhs.append(b)
    for a, b in zip(eq, eq_rhs):
        rows.append((a if nonneg else a + [-v for v in a]) + [0] * ns)
        rhs.append(b)
    m = len(rows)
    ncol = nx + ns
    T = []
    for r, b in zip(rows, rhs):
        if b < 0:
            r, b = [-v for v in r], -b
        T.append([Fraction(v) for v in r] + [Fraction(b)])
    solution = _phase_one(T, m, ncol)
    if solution is None:
        return None
    if nonneg:
        return tuple(solution[:n])
    return tuple(solution[j] - solution[n + j] for j in range(n))


def _phase_one(T, m, ncol):
    """Minimise the sum of artificial variables; return a basic solution."""
    # artificial variable i occupies column ncol + i
    for i, row in enumerate(T):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T[i] = row[:-1] + art + [row[-1]]
    total = ncol + m
    basis = [ncol + i for i in range(m)]
    # reduced costs of the objective sum(artificials), expressed in the basis
    cost = [Fraction(0)] * (total + 1)
    for row in T:
        for j in range(ncol):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded phase-1 objective cannot happen
            raise ArithmeticError("phase one unbounded")
        _pivot(T, cost, best[1], enter)
        basis[best[1]] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * total
    for i, b in enumerate(basis):
        x[b] = T[i][-1]
    return x[:ncol]


def _pivot(T, cost, r, c):
    prow = T[r]
    p = prow[c]
    if p != 1:
        prow = [v / p for v in prow]
        T[r] = prow
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(T):
        if i != r:
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * prow[j]


def strictly_feasible(rows, n):
    """A rational point ``x`` with ``row @ x > 0`` for all rows, or None.

    By homogeneity this is the same as ``row @ x >= 1``.
    """
    return find_feasible(rows, [1] * len(rows), n=n)
