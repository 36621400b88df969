"""Exact-rational redundancy elimination for cone inequality systems.

An inequality row c_i.x <= 0 of a cone is redundant iff maximizing c_i.x over
the remaining rows plus the normalization c_i.x <= 1 yields optimum <= 0.
The LP is solved by a dense tableau simplex over fractions.Fraction with
Bland's rule, so every pivot is exact and the method terminates.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionTooLargeError, LPInvariantError
from .cones import InequalitySystem

_MAX_AMBIENT_DIM = 8


@dataclass
class RationalLP:
    """max objective.x  s.t.  rows.x <= rhs, eq_rows.x = eq_rhs, x free."""

    objective: list
    rows: list
    rhs: list
    eq_rows: list = field(default_factory=list)
    eq_rhs: list = field(default_factory=list)


def _frac(x):
    if isinstance(x, float):
        raise LPInvariantError("floating-point value in exact LP data")
    return Fraction(x)


def solve_max(lp):
    """Optimum of the LP; requires rhs >= 0 (the origin must be feasible)."""
    c = [_frac(x) for x in lp.objective]
    rows = [[_frac(x) for x in r] for r in lp.rows]
    rhs = [_frac(x) for x in lp.rhs]
    for r, b in zip(lp.eq_rows, lp.eq_rhs):
        rows.append([_frac(x) for x in r])
        rhs.append(_frac(b))
        rows.append([-_frac(x) for x in r])
        rhs.append(-_frac(b))
    if any(b < 0 for b in rhs):
        raise LPInvariantError("origin-infeasible system; this solver assumes rhs >= 0")
    n = len(c)
    # free x -> x = u - v with u, v >= 0
    A = [r + [-x for x in r] for r in rows]
    obj = c + [-x for x in c]
    return _bland_simplex(obj, A, rhs)


def _bland_simplex(c, A, b):
    """Tableau simplex, Bland's rule, slack starting basis; returns the optimum."""
    m, n = len(A), len(c)
    # tableau rows: [A | I | b]; objective row holds negated reduced costs
    T = [list(A[i]) + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    z = [-x for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            return z[-1]
        best, leave = None, None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise LPInvariantError("unbounded LP in redundancy test")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        if z[enter]:
            f = z[enter]
            z = [x - f * y for x, y in zip(z, T[leave])]
        basis[leave] = enter


def _system_rows(system):
    """(rows, eq_rows) over the system's working coordinates."""
    if system.coordinate_space is not None:
        # sigma(alpha) = 0 is automatic for anti-symmetric sigma on symmetric alpha
        return system.restricted_rows(), []
    dim = len(system.quiver.vertices)
    if dim - 1 > _MAX_AMBIENT_DIM:
        raise DimensionTooLargeError(
            f"ambient dimension {dim - 1} exceeds the exact-LP guard ({_MAX_AMBIENT_DIM})"
        )
    return system.ambient_rows(), [system.alpha.values]


def redundant_row(rows, index, eq_rows=()):
    """Whether rows[index].x <= 0 is implied by the other rows (plus equalities)."""
    target = list(rows[index])
    other = [list(r) for i, r in enumerate(rows) if i != index]
    lp = RationalLP(
        objective=target,
        rows=other + [target],
        rhs=[0] * len(other) + [1],
        eq_rows=[list(r) for r in eq_rows],
        eq_rhs=[0] * len(list(eq_rows)),
    )
    return solve_max(lp) <= 0


def is_redundant(system, index):
    """Whether the index-th inequality of the system is implied by the others."""
    rows, eq_rows = _system_rows(system)
    return redundant_row(rows, index, eq_rows)


def irredundant_core(system):
    """Greedy removal, in canonical order, of rows redundant against the survivors."""
    rows, eq_rows = _system_rows(system)
    keep = list(range(len(rows)))
    i = 0
    while i < len(keep):
        current = [rows[j] for j in keep]
        if redundant_row(current, i, eq_rows):
            del keep[i]
        else:
            i += 1
    return InequalitySystem(
        system.alpha,
        tuple(system.normals[j] for j in keep),
        coordinate_space=system.coordinate_space,
    )
