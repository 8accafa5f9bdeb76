"""Dense two-phase simplex solver for the small gallery programs.

Solves ``min c.x  s.t.  A x <= b,  x >= 0`` with Bland's anti-cycling
pivot rule, so runs are deterministic and finite even on the degenerate
programs the geodesic search produces.  Problem sizes here are tiny
(tens of variables), so a dense tableau is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TOL = 1e-9


class LPError(RuntimeError):
    pass


class LPInfeasibleError(LPError):
    """No feasible point; a malformed program (internal bug upstream)."""


class LPUnboundedError(LPError):
    """Objective unbounded below; impossible for well-formed programs here."""


@dataclass(frozen=True)
class LPResult:
    value: float
    x: np.ndarray


def _pivot(tab: np.ndarray, basis: list[int], row: int, col: int) -> None:
    piv = tab[row] / tab[row, col]
    factors = tab[:, col].copy()
    factors[row] = 0.0
    tab -= np.outer(factors, piv)
    tab[row] = piv
    basis[row] = col


def _bland_entering(costs: np.ndarray, ncols: int) -> int | None:
    neg = np.flatnonzero(costs[:ncols] < -TOL)
    return int(neg[0]) if neg.size else None


def _bland_leaving(tab: np.ndarray, basis: list[int], col: int) -> int | None:
    column = tab[:, col]
    rows = np.flatnonzero(column > TOL)
    if not rows.size:
        return None
    ratios = tab[rows, -1] / column[rows]
    floor = ratios.min()
    ties = rows[ratios <= floor + TOL]
    if ties.size == 1:
        return int(ties[0])
    basis_arr = np.asarray(basis)
    return int(ties[np.argmin(basis_arr[ties])])


def _run_simplex(tab: np.ndarray, basis: list[int], ncols: int) -> None:
    while True:
        col = _bland_entering(tab[-1, :ncols], ncols)
        if col is None:
            return
        row = _bland_leaving(tab[:-1], basis, col)
        if row is None:
            raise LPUnboundedError(f"unbounded in column {col}")
        _pivot(tab, basis, row, col)


def solve_lp(c, a_ub, b_ub) -> LPResult:
    """Minimize ``c.x`` over ``a_ub x <= b_ub``, ``x >= 0``.

    Raises :class:`LPInfeasibleError` / :class:`LPUnboundedError`; both
    indicate a malformed caller program rather than a recoverable state.
    """
    c = np.asarray(c, dtype=float)
    a = np.atleast_2d(np.asarray(a_ub, dtype=float))
    b = np.asarray(b_ub, dtype=float)
    m, n = a.shape
    if c.shape != (n,) or b.shape != (m,):
        raise ValueError("inconsistent LP dimensions")

    # Slack per row; rows with negative right-hand side get an artificial
    # after a sign flip, and phase 1 drives the artificials to zero.
    neg = b < 0
    n_art = int(neg.sum())
    ncols = n + m + n_art
    tab = np.zeros((m + 1, ncols + 1))
    tab[:m, :n] = a
    tab[:m, -1] = b
    basis = [0] * m
    art_col = n + m
    art_cols = []
    for i in range(m):
        tab[i, n + i] = 1.0
        if neg[i]:
            tab[i] *= -1.0
            tab[i, art_col] = 1.0
            basis[i] = art_col
            art_cols.append(art_col)
            art_col += 1
        else:
            basis[i] = n + i

    if n_art:
        for j in art_cols:
            tab[-1, j] = 1.0
        for i in range(m):
            if basis[i] in art_cols:
                tab[-1] -= tab[i]
        _run_simplex(tab, basis, ncols)
        if -tab[-1, -1] > 1e-7:
            raise LPInfeasibleError(f"phase-1 residual {-tab[-1, -1]:g}")
        # Kick leftover artificials out of the basis.
        for i in range(m):
            if basis[i] in art_cols:
                pivot_col = None
                for j in range(n + m):
                    if abs(tab[i, j]) > TOL:
                        pivot_col = j
                        break
                if pivot_col is None:
                    continue  # redundant row, harmless
                _pivot(tab, basis, i, pivot_col)
        tab = np.delete(tab, np.s_[n + m : n + m + n_art], axis=1)
        ncols = n + m

    tab[-1, :] = 0.0
    tab[-1, :n] = c
    for i in range(m):
        if basis[i] < ncols and tab[-1, basis[i]] != 0.0:
            tab[-1] -= tab[-1, basis[i]] * tab[i]
    _run_simplex(tab, basis, ncols)

    x = np.zeros(ncols)
    for i in range(m):
        if basis[i] < ncols:
            x[basis[i]] = tab[i, -1]
    return LPResult(value=float(-tab[-1, -1]), x=x[:n].copy())
