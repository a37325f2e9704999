"""Exact linear algebra over Scalar entries: echelon form, null space, det.

Elimination is fraction-free: a row update is ``p*row - f*pivot_row``
followed by stripping the row's rational-and-monomial common factor, so
entries stay polynomial even when a pivot is symbolic (e.g. ``alpha``).
Pivots are the first nonzero entry of the earliest column, for
deterministic output.
"""
from __future__ import annotations

from .scalar import ONE, ZERO, Scalar, common_factor, divide_term


def _primitive(row):
    f = common_factor(row)
    if f == ONE:
        return row
    return [divide_term(x, f) if not x.is_zero() else x for x in row]


def echelon(rows, ncols=None):
    """Row echelon form; returns ``(rows, pivot_columns)``."""
    rows = [[Scalar.coerce(x) for x in r] for r in rows if any(not Scalar.coerce(x).is_zero() for x in r)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    top = 0
    for col in range(ncols):
        hit = next((k for k in range(top, len(rows)) if not rows[k][col].is_zero()), None)
        if hit is None:
            continue
        rows[top], rows[hit] = rows[hit], rows[top]
        prow = rows[top]
        p = prow[col]
        for k in range(top + 1, len(rows)):
            f = rows[k][col]
            if f.is_zero():
                continue
            new = [p * a - f * b for a, b in zip(rows[k], prow)]
            rows[k] = _primitive(new)
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    rows = [r for r in rows[:top]]
    return rows, pivots


def rank(rows, ncols=None) -> int:
    return len(echelon(rows, ncols)[1])


def nullspace(rows, ncols: int):
    """Basis of ``{x : rows · x = 0}`` with polynomial entries.

    One vector per free column, with that column's entry nonzero and every
    other free column zero.  Entries are cleared of denominators, so over
    a symbolic pivot the vectors are scaled by products of pivots.
    """
    ech, pivots = echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [ZERO] * ncols
        v[fcol] = ONE
        for row, pc in reversed(list(zip(ech, pivots))):
            s = ZERO
            for c in range(pc + 1, ncols):
                if not row[c].is_zero() and not v[c].is_zero():
                    s = s + row[c] * v[c]
            p = row[pc]
            if s.is_zero():
                continue
            if p.is_constant():
                v[pc] = -s * Scalar.const(1 / p.constant_value())
            else:
                v = [p * x for x in v]
                v[pc] = -s
        basis.append(_primitive(v))
    return basis


def determinant(M) -> Scalar:
    """Exact determinant by cofactor expansion with memoised minors.

    Cost is about ``n * 2**n`` products; fine for the sizes used here.
    """
    M = [[Scalar.coerce(x) for x in r] for r in M]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    memo = {}

    def det(row, cols):
        if row == n:
            return ONE
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = ZERO
        sign = 1
        for c in range(n):
            if not cols >> c & 1:
                continue
            a = M[row][c]
            if not a.is_zero():
                sub = det(row + 1, cols & ~(1 << c))
                if not sub.is_zero():
                    acc = acc + a * sub if sign > 0 else acc - a * sub
            sign = -sign
        memo[key] = acc
        return acc

    return det(0, (1 << n) - 1)
