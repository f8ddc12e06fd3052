"""Small exact linear algebra helpers (Gaussian elimination).

Everything works over either scalar field; matrices are lists of lists
of scalars and are never mutated in place by the callers' copies.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import sc_div


__all__ = ["solve_exact", "rank"]


def solve_exact(rows, rhs):
    """Solve A x = b exactly; A given as rows.

    Returns a solution vector (length = number of columns) or None when
    the system is inconsistent.  Underdetermined consistent systems get
    free variables set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = sc_div(1, a[r][c])
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = a[i][n]
    return x


def rank(rows) -> int:
    """Exact rank of a matrix given as rows."""
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    a = [list(r) for r in rows]
    rk = 0
    for c in range(n):
        pr = None
        for i in range(rk, m):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[rk], a[pr] = a[pr], a[rk]
        inv = sc_div(1, a[rk][c])
        a[rk] = [v * inv for v in a[rk]]
        for i in range(rk + 1, m):
            if a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[rk])]
        rk += 1
        if rk == m:
            break
    return rk
