"""Nine classical full-batch training algorithms and the shared training loop.

Every algorithm minimizes a scalar objective over a flat parameter vector.
The drivers are written against a small objective protocol (``value``,
``gradient``, ``value_and_gradient``, and ``residual_jacobian`` for the
damped least-squares trainer) so they run unchanged on the MLP loss, on
test quadratics, or on any other smooth function.

Evaluation counts are exact: the objective wrapper counts every loss and
gradient call, and the per-epoch trace records them.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import mlp, numeric


class OptimizerKind(str, Enum):
    LM = "LM"    # damped Gauss-Newton (Levenberg-Marquardt)
    BFG = "BFG"  # BFGS quasi-Newton
    RP = "RP"    # resilient backpropagation (sign-based steps)
    SCG = "SCG"  # scaled conjugate gradient (no line search)
    CGB = "CGB"  # conjugate gradient, Powell-Beale restarts
    CGF = "CGF"  # conjugate gradient, Fletcher-Reeves
    CGP = "CGP"  # conjugate gradient, Polak-Ribiere
    OSS = "OSS"  # one-step secant
    GDX = "GDX"  # gradient descent, momentum + adaptive learning rate
    GD = "GD"    # plain gradient descent baseline


#: The nine benchmarked kinds, in the conventional comparison order.
BENCHMARK_KINDS = (
    OptimizerKind.LM,
    OptimizerKind.BFG,
    OptimizerKind.RP,
    OptimizerKind.SCG,
    OptimizerKind.CGB,
    OptimizerKind.CGF,
    OptimizerKind.CGP,
    OptimizerKind.OSS,
    OptimizerKind.GDX,
)


class NotDescentDirection(Exception):
    """Line search was handed a direction with non-negative slope."""


class LineSearchFailed(Exception):
    """Trial budget exhausted without satisfying the Wolfe conditions."""


class MuOverflow(Exception):
    """Damping factor exceeded its ceiling; the model step is hopeless."""


class ZeroPreviousGradient(Exception):
    """Conjugate update undefined: previous gradient is exactly zero."""


@dataclass
class TrainConfig:
    """All tunables of the training loop and of the individual algorithms."""

    max_epochs: int = 500
    goal_mse: float = 0.02
    min_grad_norm: float = 1e-7

    # plain / adaptive gradient descent
    lr0: float = 0.01
    momentum: float = 0.9
    lr_inc: float = 1.05
    lr_dec: float = 0.7
    max_perf_inc: float = 1.04

    # resilient backpropagation
    rprop_delta0: float = 0.07
    rprop_delta_min: float = 1e-6
    rprop_delta_max: float = 50.0
    rprop_eta_plus: float = 1.2
    rprop_eta_minus: float = 0.5

    # damped Gauss-Newton
    lm_mu0: float = 1e-3
    lm_mu_inc: float = 10.0
    lm_mu_dec: float = 0.1
    lm_mu_max: float = 1e10

    # scaled conjugate gradient
    scg_sigma: float = 5e-5
    scg_lambda0: float = 5e-7

    # clamp the Polak-Ribiere beta at zero (guarantees descent); switch off
    # to run the unclamped textbook formula
    pr_clamp: bool = True

    seed: int = 0

    def __post_init__(self):
        if self.max_epochs < 1:
            raise ValueError("max_epochs must be >= 1")
        for name in ("goal_mse", "min_grad_norm", "lr0", "lr_inc", "max_perf_inc",
                     "rprop_delta0", "rprop_delta_min", "rprop_delta_max",
                     "lm_mu0", "lm_mu_inc", "lm_mu_max", "scg_sigma", "scg_lambda0"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if not 0 <= self.momentum < 1:
            raise ValueError("momentum must be in [0, 1)")
        if not 0 < self.lr_dec < 1 < self.lr_inc:
            raise ValueError("need lr_dec < 1 < lr_inc")
        if not 0 < self.rprop_eta_minus < 1 < self.rprop_eta_plus:
            raise ValueError("need eta_minus < 1 < eta_plus")
        if not 0 < self.lm_mu_dec < 1 < self.lm_mu_inc:
            raise ValueError("need mu_dec < 1 < mu_inc")


@dataclass
class TrainTrace:
    """Per-epoch training record."""

    mse_per_epoch: list = field(default_factory=list)
    grad_norm_per_epoch: list = field(default_factory=list)
    function_evals: int = 0
    gradient_evals: int = 0
    stop_reason: str = ""

    @property
    def epochs(self):
        return len(self.mse_per_epoch)


class CountingObjective:
    """Objective wrapper counting every loss and gradient evaluation."""

    def __init__(self, value_fn, grad_fn):
        self._value_fn = value_fn
        self._grad_fn = grad_fn
        self.nfev = 0
        self.njev = 0

    def value(self, w):
        self.nfev += 1
        return float(self._value_fn(w))

    def gradient(self, w):
        self.njev += 1
        return np.asarray(self._grad_fn(w), dtype=np.float64)

    def value_and_gradient(self, w):
        return self.value(w), self.gradient(w)


class MSEObjective(CountingObjective):
    """Mean-squared-error objective of an MLP on a fixed dataset."""

    def __init__(self, topology, x, t):
        self.topology = topology
        self.x = np.asarray(x, dtype=np.float64)
        self.t = np.asarray(t, dtype=np.float64).ravel()
        super().__init__(
            lambda w: mlp.mse_loss(topology, w, self.x, self.t),
            lambda w: mlp.gradient(topology, w, self.x, self.t),
        )

    def value_and_gradient(self, w):
        self.nfev += 1
        self.njev += 1
        return mlp.loss_and_gradient(self.topology, w, self.x, self.t)

    def residual_jacobian(self, w):
        # one jacobian pass is counted as one gradient evaluation
        self.njev += 1
        return mlp.jacobian(self.topology, w, self.x, self.t)


# ---------------------------------------------------------------------------
# line search


def _cubic_min(a, fa, da, b, fb, db):
    """Minimizer of the cubic through (a, fa, da), (b, fb, db), or None."""
    d1 = da + db - 3.0 * (fa - fb) / (a - b)
    disc = d1 * d1 - da * db
    if disc < 0.0:
        return None
    d2 = math.copysign(math.sqrt(disc), b - a)
    denom = db - da + 2.0 * d2
    if denom == 0.0:
        return None
    return b - (b - a) * (db + d2 - d1) / denom


def line_search(evaluate, f0, slope0, c1=1e-4, c2=0.1, alpha0=1.0, max_trials=25):
    """Strong Wolfe line search with bracketing and cubic interpolation.

    ``evaluate(alpha)`` returns the objective value and the directional
    slope at ``x + alpha * p``. ``f0`` and ``slope0`` are the values at
    alpha = 0. Returns ``(alpha, value, slope, trials)`` where the Wolfe
    conditions hold at ``alpha``:

        value <= f0 + c1 * alpha * slope0
        |slope| <= c2 * |slope0|

    Raises NotDescentDirection when slope0 >= 0 and LineSearchFailed when
    the trial budget runs out.
    """
    if slope0 >= 0.0:
        raise NotDescentDirection(f"slope along search direction is {slope0:g}")
    trials = 0

    def probe(a):
        nonlocal trials
        if trials >= max_trials:
            raise LineSearchFailed(f"no Wolfe point within {max_trials} trials")
        trials += 1
        f, d = evaluate(a)
        return float(f), float(d)

    def zoom(a_lo, f_lo, d_lo, a_hi, f_hi, d_hi):
        while True:
            a = _cubic_min(a_lo, f_lo, d_lo, a_hi, f_hi, d_hi)
            lo, hi = min(a_lo, a_hi), max(a_lo, a_hi)
            margin = 0.1 * (hi - lo)
            if a is None or not (lo + margin <= a <= hi - margin):
                a = 0.5 * (a_lo + a_hi)
            f, d = probe(a)
            if f > f0 + c1 * a * slope0 or f >= f_lo:
                a_hi, f_hi, d_hi = a, f, d
            else:
                if abs(d) <= -c2 * slope0:
                    return a, f, d
                if d * (a_hi - a_lo) >= 0.0:
                    a_hi, f_hi, d_hi = a_lo, f_lo, d_lo
                a_lo, f_lo, d_lo = a, f, d
            if abs(a_hi - a_lo) < 1e-16 * max(1.0, abs(a_lo)):
                raise LineSearchFailed("bracket collapsed without a Wolfe point")

    a_prev, f_prev, d_prev = 0.0, f0, slope0
    a = float(alpha0)
    first = True
    while True:
        f, d = probe(a)
        if f > f0 + c1 * a * slope0 or (not first and f >= f_prev):
            alpha, fv, dv = zoom(a_prev, f_prev, d_prev, a, f, d)
            return alpha, fv, dv, trials
        if abs(d) <= -c2 * slope0:
            return a, f, d, trials
        if d >= 0.0:
            alpha, fv, dv = zoom(a, f, d, a_prev, f_prev, d_prev)
            return alpha, fv, dv, trials
        a_prev, f_prev, d_prev = a, f, d
        a = 2.0 * a
        first = False
        if a > 1e12:
            raise LineSearchFailed("step grew unbounded without a Wolfe point")


def _wolfe_step(obj, w, f, g, p, c2, alpha0=1.0):
    """Run the Wolfe search from ``w`` along ``p``; returns the new point.

    Returns (w_new, f_new, g_new, alpha, slope0). Gradients at trial
    points are cached so the accepted point costs nothing extra.
    """
    slope0 = float(np.dot(g, p))
    cache = {}

    def evaluate(alpha):
        wa = w + alpha * p
        fa, ga = obj.value_and_gradient(wa)
        cache[alpha] = (wa, fa, ga)
        return fa, float(np.dot(ga, p))

    alpha, _, _, _ = line_search(evaluate, f, slope0, c2=c2, alpha0=alpha0)
    w_new, f_new, g_new = cache[alpha]
    return w_new, f_new, g_new, alpha, slope0


# ---------------------------------------------------------------------------
# single-step rules (pure functions)


def step_gd(params, g, lr):
    """Plain gradient-descent update: params - lr * g."""
    return np.asarray(params, dtype=np.float64) - lr * np.asarray(g, dtype=np.float64)


def gdx_accepts(mse_new, mse_old, max_perf_inc):
    """Adaptive-rate acceptance rule: reject when the error grows too much."""
    return mse_new <= max_perf_inc * mse_old


def rprop_update(delta, step_prev, g_prev, g, config):
    """One resilient-backprop update, elementwise over the weights.

    Same gradient sign: grow the per-weight step. Sign flip: shrink it,
    undo the previous move, and zero the stored gradient so the next epoch
    is treated as sign-neutral. Zero product: keep the step unchanged.

    Returns (weight_change, delta_new, g_store).
    """
    prod = g_prev * g
    same = prod > 0.0
    flip = prod < 0.0

    delta_new = np.where(same, np.minimum(delta * config.rprop_eta_plus, config.rprop_delta_max), delta)
    delta_new = np.where(flip, np.maximum(delta * config.rprop_eta_minus, config.rprop_delta_min), delta_new)

    step = np.where(flip, -step_prev, -np.sign(g) * delta_new)
    g_store = np.where(flip, 0.0, g)
    return step, delta_new, g_store


def direction_fr(g_k, g_km1, p_km1):
    """Fletcher-Reeves conjugate direction."""
    denom = float(np.dot(g_km1, g_km1))
    if denom == 0.0:
        raise ZeroPreviousGradient("previous gradient is zero")
    beta = float(np.dot(g_k, g_k)) / denom
    return -g_k + beta * p_km1


def direction_pr(g_k, g_km1, p_km1, clamp=True):
    """Polak-Ribiere conjugate direction; clamped at beta >= 0 by default."""
    denom = float(np.dot(g_km1, g_km1))
    if denom == 0.0:
        raise ZeroPreviousGradient("previous gradient is zero")
    beta = float(np.dot(g_k - g_km1, g_k)) / denom
    if clamp:
        beta = max(0.0, beta)
    return -g_k + beta * p_km1


def restart_powell_beale(g_k, g_km1):
    """True when consecutive gradients are far from orthogonal.

    Restart condition: |g_{k-1}^T g_k| >= 0.2 * ||g_k||^2 (inclusive).
    """
    return abs(float(np.dot(g_km1, g_k))) >= 0.2 * float(np.dot(g_k, g_k))


def oss_direction(g, s, y):
    """One-step-secant direction from the last step and gradient change.

    p = -g + A*s + B*y built from the single secant pair (s, y); no matrix
    is stored. Returns None when s^T y is too small to trust.
    """
    sy = float(np.dot(s, y))
    if abs(sy) <= 1e-12:
        return None
    sg = float(np.dot(s, g))
    yg = float(np.dot(y, g))
    yy = float(np.dot(y, y))
    a_coef = -(1.0 + yy / sy) * (sg / sy) + yg / sy
    b_coef = sg / sy
    return -g + a_coef * s + b_coef * y


def bfgs_update(b, s, y):
    """BFGS update of the inverse-Hessian approximation.

    B <- (I - rho s y^T) B (I - rho y s^T) + rho s s^T with rho = 1/s^T y,
    assembled symmetrically.
    """
    sy = float(np.dot(s, y))
    rho = 1.0 / sy
    by = b @ y
    yby = float(np.dot(y, by))
    sby = np.outer(s, by)
    return b - rho * (sby + sby.T) + (rho * rho * yby + rho) * np.outer(s, s)


def lm_trial_step(j, e, mu):
    """Damped Gauss-Newton step: solve (J^T J + mu I) delta = J^T e.

    With J = dy/dw and e = t - y the returned delta is a descent step on
    the squared-error model; mu -> 0 recovers the pure Gauss-Newton solve
    and large mu turns the step into scaled gradient descent.
    """
    a = numeric.gram(j)
    a[np.diag_indices_from(a)] += mu
    return numeric.solve_spd(a, j.T @ e)


def scg_lambda_update(lam, delta_cmp):
    """Scale the SCG damping from the comparison parameter.

    A near-quadratic step (delta_cmp > 0.75) halves the damping; a poor
    model fit (delta_cmp < 0.25) returns a flag telling the caller to
    increase it using the current curvature.
    """
    if delta_cmp > 0.75:
        return lam / 2.0, False
    return lam, delta_cmp < 0.25


# ---------------------------------------------------------------------------
# per-algorithm drivers


class _GdDriver:
    needs_grad = True

    def __init__(self, config, n):
        self.lr = config.lr0

    def step(self, obj, w, f, g):
        return step_gd(w, g, self.lr), None, None


class _GdxDriver:
    needs_grad = True

    def __init__(self, config, n):
        self.config = config
        self.lr = config.lr0
        self.velocity = np.zeros(n)

    def step(self, obj, w, f, g):
        cfg = self.config
        v_cand = cfg.momentum * self.velocity - self.lr * g
        w_cand = w + v_cand
        f_cand = obj.value(w_cand)
        if gdx_accepts(f_cand, f, cfg.max_perf_inc):
            self.velocity = v_cand
            self.lr *= cfg.lr_inc
            return w_cand, f_cand, None
        self.velocity = np.zeros_like(self.velocity)
        self.lr *= cfg.lr_dec
        return w, f, g


class _RpropDriver:
    needs_grad = True

    def __init__(self, config, n):
        self.config = config
        self.delta = np.full(n, config.rprop_delta0)
        self.step_prev = np.zeros(n)
        self.g_prev = np.zeros(n)

    def step(self, obj, w, f, g):
        change, self.delta, self.g_prev = rprop_update(
            self.delta, self.step_prev, self.g_prev, g, self.config
        )
        self.step_prev = change
        return w + change, None, None


class _CgDriver:
    needs_grad = True

    def __init__(self, config, n, kind):
        self.config = config
        self.n = n
        self.kind = kind
        self.p_prev = None
        self.g_prev = None
        self.since_restart = 0
        self.alpha_prev = None
        self.slope_prev = None

    def _direction(self, g):
        if self.p_prev is None or self.since_restart >= self.n:
            return -g, True
        if self.kind == OptimizerKind.CGB and restart_powell_beale(g, self.g_prev):
            return -g, True
        if self.kind == OptimizerKind.CGF:
            p = direction_fr(g, self.g_prev, self.p_prev)
        elif self.kind == OptimizerKind.CGP:
            p = direction_pr(g, self.g_prev, self.p_prev, clamp=self.config.pr_clamp)
        else:
            # Powell-Beale restarts use the Polak-Ribiere formula between restarts
            p = direction_pr(g, self.g_prev, self.p_prev, clamp=self.config.pr_clamp)
        if float(np.dot(g, p)) >= 0.0:
            return -g, True  # lost descent, fall back to steepest
        return p, False

    def step(self, obj, w, f, g):
        p, restarted = self._direction(g)
        slope = float(np.dot(g, p))
        alpha0 = 1.0
        if self.alpha_prev is not None and slope != 0.0:
            alpha0 = min(max(self.alpha_prev * self.slope_prev / slope, 1e-6), 1e6)
        w_new, f_new, g_new, alpha, _ = _wolfe_step(obj, w, f, g, p, c2=0.1, alpha0=alpha0)
        self.p_prev = p
        self.g_prev = g
        self.since_restart = 1 if restarted else self.since_restart + 1
        self.alpha_prev = alpha
        self.slope_prev = slope
        return w_new, f_new, g_new


class _BfgsDriver:
    needs_grad = True

    def __init__(self, config, n):
        self.b = np.eye(n)

    def step(self, obj, w, f, g):
        p = -(self.b @ g)
        if float(np.dot(g, p)) >= 0.0:
            # numerical loss of positive definiteness: restart from identity
            self.b = np.eye(self.b.shape[0])
            p = -g
        w_new, f_new, g_new, _, _ = _wolfe_step(obj, w, f, g, p, c2=0.9)
        s = w_new - w
        y = g_new - g
        if float(np.dot(s, y)) > 1e-10 * np.linalg.norm(s) * np.linalg.norm(y):
            self.b = bfgs_update(self.b, s, y)
        return w_new, f_new, g_new


class _OssDriver:
    needs_grad = True

    def __init__(self, config, n):
        self.s = None
        self.y = None

    def step(self, obj, w, f, g):
        p = None
        if self.s is not None:
            p = oss_direction(g, self.s, self.y)
        if p is None or float(np.dot(g, p)) >= 0.0:
            p = -g
        w_new, f_new, g_new, _, _ = _wolfe_step(obj, w, f, g, p, c2=0.9)
        self.s = w_new - w
        self.y = g_new - g
        return w_new, f_new, g_new


class _ScgDriver:
    needs_grad = True

    def __init__(self, config, n):
        self.sigma = config.scg_sigma
        self.lam = config.scg_lambda0
        self.n = n
        self.p = None
        self.curvature = None
        self.successes = 0

    def step(self, obj, w, f, g):
        if self.p is None:
            self.p = -g
        p = self.p
        pp = float(np.dot(p, p))
        norm_p = math.sqrt(pp)
        if norm_p == 0.0:
            return w, f, g

        mu = -float(np.dot(p, g))
        if mu <= 0.0:
            # direction lost descent: restart on the steepest slope
            self.p = p = -g
            pp = float(np.dot(p, p))
            norm_p = math.sqrt(pp)
            if norm_p == 0.0:
                return w, f, g
            mu = pp
            self.curvature = None

        if self.curvature is None:
            # finite-difference curvature along p, one extra gradient
            sigma_k = self.sigma / norm_p
            g_probe = obj.gradient(w + sigma_k * p)
            self.curvature = float(np.dot(p, g_probe - g)) / sigma_k

        delta = self.curvature + self.lam * pp
        if delta <= 0.0:
            # raise the damping just enough to make the curvature positive
            self.lam = 2.0 * (self.lam - self.curvature / pp)
            delta = self.curvature + self.lam * pp

        alpha = mu / delta
        w_cand = w + alpha * p
        f_cand = obj.value(w_cand)
        delta_cmp = 2.0 * delta * (f - f_cand) / (mu * mu)

        self.lam, needs_increase = scg_lambda_update(self.lam, delta_cmp)
        if needs_increase:
            self.lam = self.lam + delta * (1.0 - delta_cmp) / pp

        if delta_cmp >= 0.0:
            g_new = obj.gradient(w_cand)
            self.successes += 1
            if self.successes % self.n == 0:
                self.p = -g_new
            else:
                beta = (float(np.dot(g_new, g_new)) - float(np.dot(g_new, g))) / mu
                self.p = -g_new + beta * p
            self.curvature = None
            return w_cand, f_cand, g_new
        # rejected: keep the point, the raised damping shrinks the next step
        return w, f, g


class _LmDriver:
    needs_grad = False
    max_escalations = 10

    def __init__(self, config, n):
        self.config = config
        self.mu = config.lm_mu0
        self.last_grad_norm = None

    def step(self, obj, w, f, g):
        cfg = self.config
        j, e = obj.residual_jacobian(w)
        m = e.shape[0]
        grad = -(2.0 / m) * (j.T @ e)
        self.last_grad_norm = float(np.linalg.norm(grad))
        if f is None:
            f = float(np.dot(e, e) / m)
        jte = j.T @ e
        a = numeric.gram(j)
        diag = np.diag_indices_from(a)

        for _ in range(self.max_escalations):
            if self.mu > cfg.lm_mu_max:
                raise MuOverflow(f"damping exceeded {cfg.lm_mu_max:g}")
            a_damped = a.copy()
            a_damped[diag] += self.mu
            try:
                delta = numeric.solve_spd(a_damped, jte)
            except numeric.NotPositiveDefinite:
                self.mu *= cfg.lm_mu_inc
                continue
            w_cand = w + delta
            f_cand = obj.value(w_cand)
            if f_cand < f:
                self.mu = max(self.mu * cfg.lm_mu_dec, 1e-30)
                return w_cand, f_cand, None
            self.mu *= cfg.lm_mu_inc
        if self.mu > cfg.lm_mu_max:
            raise MuOverflow(f"damping exceeded {cfg.lm_mu_max:g}")
        return w, f, None


def _make_driver(kind, config, n):
    kind = OptimizerKind(kind)
    if kind == OptimizerKind.GD:
        return _GdDriver(config, n)
    if kind == OptimizerKind.GDX:
        return _GdxDriver(config, n)
    if kind == OptimizerKind.RP:
        return _RpropDriver(config, n)
    if kind in (OptimizerKind.CGF, OptimizerKind.CGP, OptimizerKind.CGB):
        return _CgDriver(config, n, kind)
    if kind == OptimizerKind.BFG:
        return _BfgsDriver(config, n)
    if kind == OptimizerKind.OSS:
        return _OssDriver(config, n)
    if kind == OptimizerKind.SCG:
        return _ScgDriver(config, n)
    if kind == OptimizerKind.LM:
        return _LmDriver(config, n)
    raise ValueError(f"unknown optimizer kind {kind!r}")


def minimize(obj, w0, kind, config, callback=None):
    """Run the chosen algorithm until a stop condition fires.

    Stops on: training goal reached (value <= goal_mse), gradient norm
    below min_grad_norm, epoch budget exhausted, or stagnation (a line
    search or damping failure). When several fire in the same epoch the
    recorded reason follows the precedence goal > min_grad > max_epochs.

    Returns (w, trace).
    """
    w = np.asarray(w0, dtype=np.float64).copy()
    driver = _make_driver(kind, config, w.shape[0])
    trace = TrainTrace()

    f = None
    g = None
    stop = None
    for epoch in range(config.max_epochs):
        if driver.needs_grad:
            if f is None or g is None:
                f, g = obj.value_and_gradient(w)
            grad_norm = float(np.linalg.norm(g))
        else:
            if f is None:
                f = obj.value(w)
            grad_norm = None

        if grad_norm is not None and grad_norm < config.min_grad_norm:
            trace.mse_per_epoch.append(f)
            trace.grad_norm_per_epoch.append(grad_norm)
            stop = "goal" if f <= config.goal_mse else "min_grad"
            break

        try:
            w_new, f_new, g_new = driver.step(obj, w, f, g)
        except (LineSearchFailed, MuOverflow, NotDescentDirection, ZeroPreviousGradient):
            trace.mse_per_epoch.append(f)
            trace.grad_norm_per_epoch.append(grad_norm if grad_norm is not None
                                             else driver.last_grad_norm)
            stop = "goal" if f <= config.goal_mse else "stagnation"
            break

        if grad_norm is None:
            grad_norm = driver.last_grad_norm
        w, g = w_new, g_new
        f = f_new if f_new is not None else obj.value(w)

        trace.mse_per_epoch.append(f)
        trace.grad_norm_per_epoch.append(grad_norm)
        if callback is not None:
            callback(epoch, w, driver)

        if f <= config.goal_mse:
            stop = "goal"
            break
        if grad_norm < config.min_grad_norm:
            stop = "min_grad"
            break

    trace.stop_reason = stop or "max_epochs"
    trace.function_evals = obj.nfev
    trace.gradient_evals = obj.njev
    return w, trace


def train(topology, x, t, kind, config, init_scheme="uniform"):
    """Train an MLP on (x, t) full-batch with the chosen algorithm.

    Deterministic for a given (seed, kind, config). Returns
    (params, trace).
    """
    w0 = mlp.init_params(topology, config.seed, scheme=init_scheme)
    obj = MSEObjective(topology, x, t)
    return minimize(obj, w0, kind, config)
