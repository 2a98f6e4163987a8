"""Exact phase-1 simplex for nonnegative equality systems.

Decides whether integer data admit x >= 0 with A x = b and returns the
exact rational solution when one exists.  The tableau is kept as integers
over a single common denominator (fraction-free pivoting: every division
in the update rule is exact), entering columns are picked by largest
reduced cost, and ties in the ratio test are broken lexicographically
against the inverse-basis block, which rules out cycling.  With the pure
textbook Bland rule the degenerate instances this package produces spent
minutes per solve; the lexicographic rule finishes them in seconds while
keeping the termination guarantee.
"""

from __future__ import annotations

from fractions import Fraction


def solve_nonnegative(columns, rhs):
    """Solve ``sum_j x_j * columns[j] = rhs`` with ``x >= 0``.

    ``columns`` is a sequence of integer column vectors, ``rhs`` an integer
    vector of the same length.  Returns a list of Fractions (one per
    column) or None when the system is infeasible.
    """
    nrows = len(rhs)
    ncols = len(columns)
    for col in columns:
        if len(col) != nrows:
            raise ValueError("column length does not match rhs")
    if nrows == 0:
        return [Fraction(0)] * ncols

    # rows with negative rhs are flipped so artificials start feasible
    tableau = []
    for r in range(nrows):
        sign = -1 if rhs[r] < 0 else 1
        row = [sign * columns[c][r] for c in range(ncols)]
        row.extend(1 if k == r else 0 for k in range(nrows))
        row.append(sign * rhs[r])
        tableau.append(row)

    art0 = ncols
    rhs_col = ncols + nrows
    den = 1
    basis = [art0 + r for r in range(nrows)]

    # phase-1 reduced costs (times den) over the real columns:
    # cost 0 on real columns, 1 on the basic artificials
    zrow = [0] * ncols
    for r in range(nrows):
        row = tableau[r]
        for c in range(ncols):
            zrow[c] += row[c]

    while True:
        enter = -1
        best = 0
        for j in range(ncols):
            if zrow[j] > best:
                best = zrow[j]
                enter = j
        if enter < 0:
            break
        leave = -1
        for r in range(nrows):
            a = tableau[r][enter]
            if a <= 0:
                continue
            if leave < 0 or _lex_smaller(tableau[r], a, tableau[leave],
                                         tableau[leave][enter], rhs_col, art0,
                                         nrows):
                leave = r
        if leave < 0:
            # the phase-1 objective is bounded below; a missing leaving row
            # cannot happen with consistent data
            raise RuntimeError("phase-1 simplex became unbounded")
        pivot = tableau[leave][enter]
        lrow = tableau[leave]
        for r in range(nrows):
            if r == leave:
                continue
            row = tableau[r]
            f = row[enter]
            if f:
                tableau[r] = [(x * pivot - f * y) // den
                              for x, y in zip(row, lrow)]
            else:
                tableau[r] = [(x * pivot) // den for x in row]
        f = zrow[enter]
        zrow = [(zrow[j] * pivot - f * lrow[j]) // den for j in range(ncols)]
        den = pivot
        basis[leave] = enter

    if any(basis[r] >= art0 and tableau[r][rhs_col] != 0 for r in range(nrows)):
        return None
    solution = [Fraction(0)] * ncols
    for r in range(nrows):
        if basis[r] < art0:
            solution[basis[r]] = Fraction(tableau[r][rhs_col], den)
    return solution


def _lex_smaller(row_a, pa, row_b, pb, rhs_col, art0, nrows) -> bool:
    """Is row_a/pa lexicographically smaller than row_b/pb?

    Compared on the rhs column followed by the inverse-basis block; both
    pivots are positive so cross-multiplication preserves order.
    """
    x, y = row_a[rhs_col] * pb, row_b[rhs_col] * pa
    if x != y:
        return x < y
    for k in range(art0, art0 + nrows):
        x, y = row_a[k] * pb, row_b[k] * pa
        if x != y:
            return x < y
    return False
