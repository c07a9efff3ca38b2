"""Exact Gaussian elimination over an arbitrary field.

The routines only use ``+ - * /`` and truthiness of the entries, so they
work unchanged for :class:`fractions.Fraction` and for
:class:`hopftwist.cyclo.CycNumber`.  Matrices are lists of rows.
"""

from .errors import SingularMatrix


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` is a new list of rows and
    ``pivots`` the pivot column of each nonzero row.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    pr = 0
    nrows = len(m)
    for c in range(ncols):
        if pr == nrows:
            break
        sel = next((i for i in range(pr, nrows) if m[i][c]), None)
        if sel is None:
            continue
        m[pr], m[sel] = m[sel], m[pr]
        prow = m[pr]
        inv = 1 / prow[c]
        if not (prow[c] == 1):
            prow = m[pr] = [x * inv if x else x for x in prow]
        for i in range(nrows):
            if i != pr:
                f = m[i][c]
                if f:
                    row = m[i]
                    for j in range(c, ncols):
                        if prow[j]:
                            row[j] = row[j] - f * prow[j]
        pivots.append(c)
        pr += 1
    return m, pivots


def nullspace(rows, ncols, zero, one):
    """Basis of ``{x : rows @ x == 0}``, one vector per free column."""
    if not rows:
        return [[one if j == i else zero for j in range(ncols)] for i in range(ncols)]
    r, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            if r[i][f]:
                v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs, zero):
    """One solution of ``rows @ x == rhs``; raises ``SingularMatrix`` if none."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    r, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        raise SingularMatrix("inconsistent linear system")
    x = [zero] * ncols
    for i, p in enumerate(pivots):
        x[p] = r[i][ncols]
    return x


def inverse(rows, zero, one):
    n = len(rows)
    aug = [list(r) + [one if j == i else zero for j in range(n)] for i, r in enumerate(rows)]
    r, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in r[:n]]
