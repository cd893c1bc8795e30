"""Interior-point solvers for desk-scale conic subproblems.

Two solvers live here:

* `solve_sdp` — maximize tr(C V) over Hermitian V >= 0 subject to
  tr(A_j V) <= beta_j and an optional trace cap.  A log-barrier Newton
  method runs on the dual cone (multipliers y >= 0 with slack matrix
  Z = sum_j y_j A_j + y0 I - C >= 0); the primal iterate is recovered from
  the central-path identity V = mu * inv(Z).  This keeps every Newton system
  at the number of constraints instead of n^2 matrix unknowns.

* `solve_qcqp` — minimize c @ x subject to convex quadratic and linear
  inequality constraints and box bounds, via a primal log-barrier with a
  phase-I feasibility stage.

Barrier parameters are fixed (initial mu = 1, reduction factor 0.2, Newton
tolerance 1e-9, max 50 outer iterations) so runs are reproducible.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

MU_INIT = 1.0
MU_FACTOR = 0.2
NEWTON_TOL = 1e-9
MAX_OUTER = 50
MAX_NEWTON = 100


def _check_hermitian(a, name, tol=1e-10):
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"{name} must be square")
    if np.max(np.abs(a - a.conj().T)) > tol * max(1.0, np.max(np.abs(a))):
        raise InvalidInputError(f"{name} is not Hermitian within tolerance")
    return (a + a.conj().T) / 2.0


@dataclass
class SdpProblem:
    """maximize tr(C V) s.t. tr(A_j V) <= beta_j, V >= 0, tr(V) <= tau_max."""

    c: np.ndarray
    constraints: list  # list of (A_j, beta_j)
    tau_max: float | None = None

    def validated(self):
        c = _check_hermitian(self.c, "objective matrix")
        n = c.shape[0]
        if n > 64:
            raise InvalidInputError("solve_sdp is limited to n <= 64")
        mats, betas = [], []
        for idx, (a, beta) in enumerate(self.constraints):
            a = _check_hermitian(a, f"constraint matrix {idx}")
            if a.shape[0] != n:
                raise InvalidInputError(f"constraint matrix {idx} has wrong size")
            if np.linalg.eigvalsh(a)[0] < -1e-9 * max(1.0, np.max(np.abs(a))):
                raise InvalidInputError(f"constraint matrix {idx} is not PSD")
            if not beta > 0:
                raise InvalidInputError(f"constraint bound {idx} must be positive")
            mats.append(a)
            betas.append(float(beta))
        return c, mats, np.array(betas, dtype=float)


@dataclass
class SdpResult:
    status: str
    v: np.ndarray | None
    objective: float | None
    iterations: int
    gap: float | None
    cap_active: bool = False


def solve_sdp(problem, tol=1e-6):
    """Solve an `SdpProblem` to duality gap <= tol * max(1, |objective|)."""
    if not tol > 0:
        raise InvalidInputError("tol must be positive")
    c, mats, betas = problem.validated()
    n = c.shape[0]
    m = len(mats)
    tau = float(problem.tau_max) if problem.tau_max is not None else 10.0 * n
    capped_by_default = problem.tau_max is None

    # Dual variables: y[0:m] for the trace constraints, y[m] for the cap.
    b = np.concatenate([betas, [tau]])
    stack = np.stack(mats + [np.eye(n, dtype=complex)])  # (m+1, n, n)

    def slack(y):
        return np.tensordot(y, stack, axes=(0, 0)) - c

    # Strictly feasible dual start: push y0 up until Z is PD.
    y = np.ones(m + 1)
    lam_min = np.linalg.eigvalsh(slack(y))[0]
    if lam_min < 1.0:
        y[m] += 1.0 - lam_min
    mu = MU_INIT
    total_newton = 0
    stalled = False

    def chol_or_none(z):
        try:
            return np.linalg.cholesky(z)
        except np.linalg.LinAlgError:
            return None

    for _outer in range(MAX_OUTER):
        for _inner in range(MAX_NEWTON):
            z = slack(y)
            zinv = np.linalg.inv(z)
            zinv = (zinv + zinv.conj().T) / 2.0
            # tr(Zinv A_i) and tr(Zinv A_i Zinv A_j) for the barrier terms
            w = zinv @ stack  # (m+1, n, n)
            tr_w = np.real(np.trace(w, axis1=1, axis2=2))
            grad = b - mu * tr_w - mu / y
            hess = mu * np.real(np.einsum("aij,bji->ab", w, w))
            hess[np.diag_indices_from(hess)] += mu / y**2
            try:
                step = np.linalg.solve(hess, -grad)
            except np.linalg.LinAlgError:
                step = np.linalg.lstsq(hess, -grad, rcond=None)[0]
            decrement = float(-grad @ step)
            # Centering tolerance scales with mu: the barrier terms shrink
            # with mu, so an absolute threshold would stop re-centering early.
            if decrement <= max(NEWTON_TOL * mu, 1e-15):
                break
            # Fraction-to-boundary on y > 0, then backtrack until Z stays PD
            # and the barrier objective decreases.
            t = 1.0
            neg = step < 0
            if np.any(neg):
                t = min(t, 0.99 * np.min(-y[neg] / step[neg]))

            def phi(yv, zc):
                sign, logdet = np.linalg.slogdet(zc)
                return float(b @ yv) - mu * logdet - mu * float(np.sum(np.log(yv)))

            phi0 = phi(y, z)
            accepted = False
            for _bt in range(60):
                cand = y + t * step
                zc = slack(cand)
                lc = chol_or_none(zc)
                if lc is not None and np.all(cand > 0):
                    if phi(cand, zc) <= phi0 - 0.25 * t * decrement + 1e-12:
                        y = cand
                        accepted = True
                        break
                t *= 0.5
            total_newton += 1
            if not accepted:
                stalled = True
                break
        gap = mu * (m + n + 1)
        z = slack(y)
        v = mu * np.linalg.inv(z)
        v = (v + v.conj().T) / 2.0
        objective = float(np.real(np.trace(c @ v)))
        if gap <= tol * max(1.0, abs(objective)) or stalled:
            break
        mu *= MU_FACTOR

    trace_v = float(np.real(np.trace(v)))
    cap_active = trace_v >= tau * (1.0 - 1e-3)
    if cap_active and capped_by_default:
        return SdpResult(UNBOUNDED, None, None, total_newton, None)
    return SdpResult(OPTIMAL, v, objective, total_newton, gap, cap_active)


@dataclass
class ConvexQcqp:
    """minimize c @ x s.t. x' Q_i x + q_i' x <= r_i, G x <= h, lo <= x <= hi.

    All Q_i must be PSD.  `bounds` is a list of (lo, hi) pairs, None meaning
    unbounded on that side; equal bounds fix a variable, which is eliminated
    by substitution before solving.
    """

    c: np.ndarray
    quadratics: list = field(default_factory=list)  # (Q, q, r)
    a_ineq: np.ndarray | None = None
    b_ineq: np.ndarray | None = None
    bounds: list | None = None


@dataclass
class QcqpResult:
    status: str
    x: np.ndarray | None
    objective: float | None
    iterations: int


def _qcqp_arrays(problem, n):
    """Stack every constraint as (Q, q, r) rows; linear rows get Q = 0."""
    qs, ls, rs = [], [], []
    for qm, qv, rv in problem.quadratics:
        qm = np.asarray(qm, dtype=float)
        qv = np.zeros(n) if qv is None else np.asarray(qv, dtype=float)
        if qm.shape != (n, n) or qv.shape != (n,):
            raise InvalidInputError("quadratic constraint dimensions mismatch")
        qm = (qm + qm.T) / 2.0
        if np.linalg.eigvalsh(qm)[0] < -1e-9 * max(1.0, np.max(np.abs(qm))):
            raise InvalidInputError("quadratic constraint matrix is not PSD")
        qs.append(qm)
        ls.append(qv)
        rs.append(float(rv))
    if problem.a_ineq is not None:
        g = np.atleast_2d(np.asarray(problem.a_ineq, dtype=float))
        h = np.atleast_1d(np.asarray(problem.b_ineq, dtype=float))
        if g.shape[1] != n or g.shape[0] != h.shape[0]:
            raise InvalidInputError("linear constraint dimensions mismatch")
        for row, rhs in zip(g, h):
            qs.append(np.zeros((n, n)))
            ls.append(row)
            rs.append(float(rhs))
    if problem.bounds is not None:
        if len(problem.bounds) != n:
            raise InvalidInputError("bounds length must equal the variable count")
        for i, (lo, hi) in enumerate(problem.bounds):
            if lo is not None:
                e = np.zeros(n)
                e[i] = -1.0
                qs.append(np.zeros((n, n)))
                ls.append(e)
                rs.append(-float(lo))
            if hi is not None:
                e = np.zeros(n)
                e[i] = 1.0
                qs.append(np.zeros((n, n)))
                ls.append(e)
                rs.append(float(hi))
    return np.stack(qs), np.stack(ls), np.array(rs)


def _barrier_minimize(cvec, qs, ls, rs, x0, tol):
    """Phase-II barrier: min c @ x s.t. stacked constraints < 0 strictly at x0."""
    m = rs.shape[0]
    x = x0.copy()
    t_param = 1.0
    iterations = 0
    while True:
        for _inner in range(MAX_NEWTON):
            gvals = np.einsum("i,mij,j->m", x, qs, x) + ls @ x - rs
            s = -gvals
            if np.any(s <= 0):
                raise RuntimeError("barrier iterate left the interior")
            grads = 2.0 * np.einsum("mij,j->mi", qs, x) + ls
            grad = t_param * cvec + grads.T @ (1.0 / s)
            hess = (grads / s[:, None] ** 2).T @ grads
            hess += 2.0 * np.einsum("m,mij->ij", 1.0 / s, qs)
            hess[np.diag_indices_from(hess)] += 1e-12
            try:
                step = np.linalg.solve(hess, -grad)
            except np.linalg.LinAlgError:
                step = np.linalg.lstsq(hess, -grad, rcond=None)[0]
            decrement = float(-grad @ step)
            if decrement <= 2.0 * NEWTON_TOL:
                break

            def phi(xv):
                gv = np.einsum("i,mij,j->m", xv, qs, xv) + ls @ xv - rs
                if np.any(gv >= 0):
                    return np.inf
                return t_param * float(cvec @ xv) - float(np.sum(np.log(-gv)))

            phi0 = phi(x)
            t = 1.0
            accepted = False
            for _bt in range(60):
                cand = x + t * step
                if phi(cand) <= phi0 - 0.25 * t * decrement + 1e-12:
                    x = cand
                    accepted = True
                    break
                t *= 0.5
            iterations += 1
            if not accepted:
                break
            if np.linalg.norm(x) > 1e8:
                return None, iterations  # unbounded direction
        if m / t_param <= tol:
            return x, iterations
        t_param /= MU_FACTOR


def solve_qcqp(problem, tol=1e-8):
    """Solve a `ConvexQcqp`; returns status optimal/infeasible/unbounded."""
    if not tol > 0:
        raise InvalidInputError("tol must be positive")
    c_full = np.atleast_1d(np.asarray(problem.c, dtype=float))
    n_full = c_full.shape[0]

    # Eliminate variables fixed by equal bounds.
    fixed = np.full(n_full, np.nan)
    if problem.bounds is not None:
        for i, (lo, hi) in enumerate(problem.bounds):
            if lo is not None and hi is not None:
                if lo > hi:
                    return QcqpResult(INFEASIBLE, None, None, 0)
                if lo == hi:
                    fixed[i] = lo
    free = np.where(np.isnan(fixed))[0]
    xf = np.where(np.isnan(fixed), 0.0, fixed)

    qs0, ls0, rs0 = _qcqp_arrays(problem, n_full)
    # Substitute fixed components: g(x) = xF' Q xF + (q + 2 Q xf)|_F' xF + const
    if free.shape[0] < n_full:
        const = np.einsum("i,mij,j->m", xf, qs0, xf) + ls0 @ xf
        ls = (ls0 + 2.0 * np.einsum("mij,j->mi", qs0, xf))[:, free]
        qs = qs0[np.ix_(np.arange(rs0.shape[0]), free, free)]
        rs = rs0 - const
        cvec = c_full[free]
        obj_const = float(c_full @ xf)
        # Drop rows that no longer involve any free variable.
        keep = []
        for i in range(rs.shape[0]):
            if np.any(qs[i] != 0) or np.any(ls[i] != 0):
                keep.append(i)
            elif rs[i] < -1e-9:
                return QcqpResult(INFEASIBLE, None, None, 0)
        if free.shape[0] == 0:
            return QcqpResult(OPTIMAL, xf, obj_const, 0)
        qs, ls, rs = qs[keep], ls[keep], rs[keep]
    else:
        qs, ls, rs = qs0, ls0, rs0
        cvec = c_full
        obj_const = 0.0

    n = free.shape[0]
    iterations = 0
    if rs.shape[0] == 0:
        if np.any(cvec != 0):
            return QcqpResult(UNBOUNDED, None, None, 0)
        x = np.zeros(n)
    else:
        # Phase I: min t s.t. g_i(x) <= t, via the same barrier in (x, t).
        x0 = np.zeros(n)
        g0 = np.einsum("i,mij,j->m", x0, qs, x0) + ls @ x0 - rs
        t0 = float(np.max(g0)) + 1.0
        mq = rs.shape[0]
        qs1 = np.zeros((mq, n + 1, n + 1))
        qs1[:, :n, :n] = qs
        ls1 = np.hstack([ls, -np.ones((mq, 1))])
        z0 = np.concatenate([x0, [t0]])
        c1 = np.zeros(n + 1)
        c1[n] = 1.0
        z_star, it1 = _barrier_minimize(c1, qs1, ls1, rs, z0, tol=1e-9)
        if z_star is None:
            return QcqpResult(INFEASIBLE, None, None, it1)
        t_star = z_star[n]
        if t_star > 1e-7:
            return QcqpResult(INFEASIBLE, None, None, it1)
        # Tiny expansion keeps an interior point when the region is thin.
        slack_pad = max(0.0, t_star) + 1e-9
        x, it2 = _barrier_minimize(cvec, qs, ls, rs + slack_pad, z_star[:n], tol)
        if x is None:
            return QcqpResult(UNBOUNDED, None, None, it1 + it2)
        iterations = it1 + it2

    x_full = xf.copy()
    x_full[free] = x
    objective = float(c_full @ x_full)
    return QcqpResult(OPTIMAL, x_full, objective, iterations)
