"""Closed-form bound evaluators and Monte-Carlo verifiers.

All combinatorially heavy expressions are evaluated in natural-log space
(binomials overflow quickly otherwise). Probability bounds clamp to [0,1]
by default; pass clamp=False for the raw value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Union

import numpy as np

from .core import InternalInvariantError

Z99 = 2.5758293035489004  # two-sided 99% normal quantile


def _log_binom(n: int, k: int) -> float:
    if not (0 <= k <= n):
        raise ValueError(f"binomial ({n},{k}) out of range")
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


@dataclass(frozen=True)
class LllParams:
    """Resampling-schedule parameters: palette surplus and resample-set size."""

    eta: int
    m: int
    t: int = 0
    tau: int = 0
    k: int = 0
    delta_h: int = 0


def odd_params(delta: int) -> LllParams:
    """Schedule parameters for odd colouring at maximum degree delta: the
    palette surplus, the resample-set size, the guaranteed availability
    (tau = eta) and the resulting palette delta + eta."""
    eta = odd_surplus(delta)
    m = resample_size(delta)
    return LllParams(eta=eta, m=m, t=0, tau=eta, k=delta + eta, delta_h=delta)


class HOddSurplus(NamedTuple):
    t: int
    m: int
    eta: int
    closed_bound: float


def odd_surplus(delta: int) -> int:
    """Palette surplus ceil(4(ln d + ln ln d + 3)) that suffices beyond the
    maximum degree for an odd colouring. Needs delta >= 3 so ln ln is defined."""
    if delta <= 2:
        raise ValueError("odd_surplus needs delta >= 3")
    return math.ceil(4.0 * (math.log(delta) + math.log(math.log(delta)) + 3.0))


_WM1_BRANCH = -math.exp(-1.0)


def lambert_wm1(y: float) -> float:
    """Lower real branch of Lambert W: the x <= -1 with x*e^x = y.

    Bracketed bisection, stopping at |x*e^x - y| <= 1e-12 * |y|.
    """
    if not (_WM1_BRANCH <= y < 0.0):
        raise ValueError(f"lambert_wm1 domain is [-1/e, 0), got {y}")
    if y == _WM1_BRANCH:
        return -1.0
    f = lambda x: x * math.exp(x)
    lo = -2.0
    while f(lo) < y:
        lo *= 2.0
    hi = -1.0
    tol = 1e-12 * abs(y)
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        r = f(mid)
        if abs(r - y) <= tol:
            return mid
        if r > y:
            lo = mid
        else:
            hi = mid
        if lo >= hi:
            break
    if abs(f(mid) - y) > 1e-6 * abs(y):
        raise InternalInvariantError(f"bisection failed to converge for y={y}")
    return mid


def resample_size(delta: int) -> int:
    """ceil(-2 W_{-1}(-1/(2 sqrt(2) e delta))): the resample-set size whose
    failure probability beats the resampling dependency degree."""
    if delta < 2:
        raise ValueError("resample_size needs delta >= 2")
    y = -1.0 / (2.0 * math.sqrt(2.0) * math.e * delta)
    return math.ceil(-2.0 * lambert_wm1(y))


def biased_walk_tail_bound(n: int, k: int, tau: float, clamp: bool = True) -> float:
    """Upper bound sqrt(2) C(n,k) ((2n-2k)/(e tau))^((n-k)/2) on P(S_n <= k)
    for a +-1 walk started at S_0 >= 0 whose down-step probability at state
    s never exceeds s/tau."""
    if not (0 <= k <= n):
        raise ValueError("need 0 <= k <= n")
    if tau <= 0:
        raise ValueError("tau must be positive")
    if k == n:
        val = math.sqrt(2.0)
    else:
        log_val = (
            0.5 * math.log(2.0)
            + _log_binom(n, k)
            + ((n - k) / 2.0) * (math.log(2.0 * (n - k)) - 1.0 - math.log(tau))
        )
        val = math.exp(log_val)
    return min(1.0, val) if clamp else val


def no_odd_colour_bound(m: int, tau: float, clamp: bool = True) -> float:
    """Upper bound sqrt(2) (2m/(e tau))^(m/2) on the probability that a set
    has no odd colour after its m resampled members each drew from at least
    tau available colours."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if tau <= 0:
        raise ValueError("tau must be positive")
    log_val = 0.5 * math.log(2.0) + (m / 2.0) * (math.log(2.0 * m) - 1.0 - math.log(tau))
    val = math.exp(log_val)
    return min(1.0, val) if clamp else val


def few_odd_colours_bound(m: int, t: int, tau: float, clamp: bool = True) -> float:
    """Upper bound sqrt(2) C(m,t) (2t/(e tau))^(t/2) on the probability that
    a set keeps at most m-t odd colours after its m resampled members each
    drew from at least tau colours; specialises to no_odd_colour_bound at t = m."""
    if m < 1 or not (0 <= t <= m):
        raise ValueError("need m >= 1 and 0 <= t <= m")
    if tau <= 0:
        raise ValueError("tau must be positive")
    if t == 0:
        val = math.sqrt(2.0)
    else:
        log_val = (
            0.5 * math.log(2.0)
            + _log_binom(m, t)
            + (t / 2.0) * (math.log(2.0 * t) - 1.0 - math.log(tau))
        )
        val = math.exp(log_val)
    return min(1.0, val) if clamp else val


def chernoff_lower(mu: float, dev: float) -> float:
    """exp(-dev^2 / (2 mu)): tail bound P(S <= mu - dev) for binomial-type sums."""
    if not (0 <= dev < mu):
        raise ValueError("need 0 <= dev < mu")
    return math.exp(-(dev * dev) / (2.0 * mu))


def chernoff_upper(mu: float, dev: float) -> float:
    """exp(-dev^2 / (2 (mu + dev))): tail bound P(S >= mu + dev)."""
    if dev <= 0:
        raise ValueError("dev must be positive")
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    return math.exp(-(dev * dev) / (2.0 * (mu + dev)))


def hodd_surplus(h: int, eps: int, delta_h: int = 2) -> HOddSurplus:
    """Palette surplus for requiring h odd colours per edge.

    t = min(h-1, eps-h+1), m = h-1+t, eta = ceil(2t ((m/t) C(m,t))^(2/t)).
    The closed bound is 32(h-1) when eps >= 2(h-1), otherwise
    2 e^2 eps^(2 + 1/ln delta_h) / (eps - h + 1).

    h = 1 has no parity headroom (t = 0); it falls back to the plain odd
    surplus of the hypergraph degree and reports t = m = 0.
    """
    if h < 1:
        raise ValueError("h must be at least 1")
    if eps < 1:
        raise ValueError("eps must be at least 1")
    if h == 1:
        eta = odd_surplus(max(delta_h, 3))
        return HOddSurplus(0, 0, eta, float(eta))
    t = min(h - 1, eps - h + 1)
    if t <= 0:
        raise ValueError("edge too small for h")
    m = h - 1 + t
    if t == 1:
        eta = 2 * m ** 4
    elif t == 2:
        eta = m * m * (m - 1)
    else:
        log_val = math.log(2.0 * t) + (2.0 / t) * (math.log(m / t) + _log_binom(m, t))
        raw = math.exp(log_val)
        nearest = round(raw)
        eta = nearest if abs(raw - nearest) <= 1e-6 * max(1.0, raw) else math.ceil(raw)
    if eps >= 2 * (h - 1):
        closed = 32.0 * (h - 1)
        assert eta <= closed, f"eta {eta} exceeded closed bound {closed}"
    else:
        if delta_h < 2:
            raise ValueError("delta_h must be at least 2 for the small-eps bound")
        closed = 2.0 * math.e ** 2 * eps ** (2.0 + 1.0 / math.log(delta_h)) / (eps - h + 1)
        if t >= 2 * (math.log(delta_h) + math.log(max(math.log(delta_h), 1e-9)) + 3):
            assert eta <= closed, f"eta {eta} exceeded closed bound {closed}"
    return HOddSurplus(t, m, eta, closed)


def factorial_ratio_check(n: int) -> bool:
    """Verify n!/(n/2)! <= sqrt(2) (2n/e)^(n/2) in log space; n even, 2..300."""
    if n % 2 != 0:
        raise ValueError("n must be even")
    if not (2 <= n <= 300):
        raise ValueError("n must lie in [2, 300]")
    lhs = math.lgamma(n + 1) - math.lgamma(n // 2 + 1)
    rhs = 0.5 * math.log(2.0) + (n / 2.0) * (math.log(2.0 * n) - 1.0)
    return lhs <= rhs


def greedy_hodd_bound(h: int, max_deg_graph: int, max_deg_hyper: int) -> int:
    """Palette size h*Delta(H) + Delta(G) + 1 that the greedy colourer never exceeds."""
    if h < 0 or max_deg_graph < 0 or max_deg_hyper < 0:
        raise ValueError("arguments must be nonnegative")
    return h * max_deg_hyper + max_deg_graph + 1


PolicyLike = Union[str, Callable[[np.ndarray], np.ndarray]]


@dataclass(frozen=True)
class WalkConfig:
    """A +-1 walk of n steps from s0, judged against the target level k.

    The policy gives the down-step probability as a function of the current
    state and must respect p(s) <= s/tau ("adversarial" sits exactly on the
    constraint, "never" always steps up).
    """

    n: int
    k: int
    tau: float
    s0: int = 0
    policy: PolicyLike = "adversarial"

    def __post_init__(self):
        if not (0 <= self.k <= self.n):
            raise ValueError("need 0 <= k <= n")
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if self.s0 < 0:
            raise ValueError("s0 must be nonnegative")


@dataclass(frozen=True)
class WalkEstimate:
    p_hat: float
    half_width: float
    samples: int
    mean_final: float

    @property
    def upper(self) -> float:
        return self.p_hat + self.half_width


def _policy_fn(cfg: WalkConfig) -> Callable[[np.ndarray], np.ndarray]:
    if callable(cfg.policy):
        return cfg.policy
    if cfg.policy == "adversarial":
        return lambda s: np.minimum(1.0, s / cfg.tau)
    if cfg.policy == "never":
        return lambda s: np.zeros_like(s, dtype=float)
    raise ValueError(f"unknown policy {cfg.policy!r}")


def simulate_walk(cfg: WalkConfig, samples: int, seed: int) -> WalkEstimate:
    """Monte-Carlo estimate of P(S_n <= k) with a 99% confidence half-width.

    Raises if the policy ever exceeds the s/tau down-step constraint.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    policy = _policy_fn(cfg)
    rng = np.random.default_rng(seed)
    s = np.full(samples, cfg.s0, dtype=np.int64)
    for _ in range(cfg.n):
        p = np.asarray(policy(s), dtype=float)
        limit = s / cfg.tau
        if np.any(p > limit + 1e-12):
            raise ValueError("policy violates the s/tau down-step constraint")
        down = rng.random(samples) < p
        s = np.where(down, s - 1, s + 1)
    p_hat = float(np.mean(s <= cfg.k))
    half = Z99 * math.sqrt(max(p_hat * (1.0 - p_hat), 1.0 / samples) / samples)
    return WalkEstimate(p_hat, half, samples, float(np.mean(s)))


@dataclass(frozen=True)
class BinomialTails:
    emp_lower: float
    emp_upper: float
    half_width_lower: float
    half_width_upper: float
    samples: int


def binomial_tails(n: int, p: float, dev: float, samples: int, seed: int) -> BinomialTails:
    """Empirical tail masses P(S <= mu-dev) and P(S >= mu+dev) for S ~ Bin(n, p),
    with 99% half-widths; checked against the Chernoff evaluators by callers."""
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must lie in [0,1]")
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    s = rng.binomial(n, p, size=samples)
    mu = n * p
    emp_lower = float(np.mean(s <= mu - dev))
    emp_upper = float(np.mean(s >= mu + dev))

    def half(est: float) -> float:
        return Z99 * math.sqrt(max(est * (1.0 - est), 1.0 / samples) / samples)

    return BinomialTails(emp_lower, emp_upper, half(emp_lower), half(emp_upper), samples)
