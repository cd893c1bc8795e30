"""Small dense linear programming front-end.

Instances arising here (node relaxation helpers, null-space-property checks)
have at most a few hundred variables, so robustness matters more than speed.
The solves are delegated to scipy's HiGHS backend behind a fixed interface:
status strings, primal feasibility within 1e-8, deterministic results.
"""

import numpy as np
from scipy.optimize import linprog

from .errors import InvalidInputError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def solve_lp(c, a_eq=None, b_eq=None, a_ineq=None, b_ineq=None, bounds=None):
    """Minimize c @ x subject to a_eq @ x = b_eq, a_ineq @ x <= b_ineq, bounds.

    `bounds` is a list of (lo, hi) pairs with None for unbounded ends; the
    default is unbounded in both directions (note: scipy's own default is
    x >= 0, which is not wanted here).

    Returns (status, x, objective) with status in {optimal, infeasible,
    unbounded}; x and objective are None unless status == optimal.
    """
    c = np.atleast_1d(np.asarray(c, dtype=float))
    n = c.shape[0]
    for mat, vec, label in ((a_eq, b_eq, "equality"), (a_ineq, b_ineq, "inequality")):
        if (mat is None) != (vec is None):
            raise InvalidInputError(f"{label} constraints need both matrix and rhs")
        if mat is not None:
            mat = np.atleast_2d(mat)
            vec = np.atleast_1d(vec)
            if mat.shape[1] != n or mat.shape[0] != vec.shape[0]:
                raise InvalidInputError(f"{label} constraint dimensions mismatch")
    if bounds is None:
        bounds = [(None, None)] * n
    elif len(bounds) != n:
        raise InvalidInputError("bounds length must equal the variable count")

    res = linprog(
        c,
        A_ub=None if a_ineq is None else np.atleast_2d(a_ineq),
        b_ub=None if b_ineq is None else np.atleast_1d(b_ineq),
        A_eq=None if a_eq is None else np.atleast_2d(a_eq),
        b_eq=None if b_eq is None else np.atleast_1d(b_eq),
        bounds=bounds,
        method="highs",
    )
    if res.status == 0:
        return OPTIMAL, np.asarray(res.x, dtype=float), float(res.fun)
    if res.status == 2:
        return INFEASIBLE, None, None
    if res.status == 3:
        return UNBOUNDED, None, None
    raise RuntimeError(f"LP solver failed: {res.message}")
