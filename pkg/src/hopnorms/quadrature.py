"""Adaptive Gauss-Kronrod quadrature for log-space integrands.

Every integral in this package has the shape

    I = int exp(g(x)) * phi(x) dx,    g(x) = g_core(x) + e_a ln(x-a) + e_b ln(b-x),

where g may swing over thousands of nats (weights like x^alpha e^(-x) with
alpha ~ 1e4) and phi is an optional signed factor (entropy integrands).
The engine:

  * truncates infinite tails where g falls ``tail_cutoff_log`` nats below
    the running peak (walk with geometrically growing steps),
  * splits the domain at caller-supplied breakpoints (polynomial zeros,
    where |p|^q has cusps and log factors have singularities),
  * removes integrable endpoint singularities with exponent e in (-1, 0)
    by the substitution t = (x - a)^(1+e), which cancels the singular
    factor exactly,
  * locates the global maximum M of g by per-panel Chebyshev scans with
    local refinement, then integrates exp(g - M) with a 7-15
    Gauss-Kronrod pair refined greedily on the largest error interval,
  * returns sign, ln|I| (shift M re-applied) and a relative error bound.

Interval refinement is greedy and deterministic, so tightening rel_tol
only extends the subdivision sequence; the reported error estimate is
monotone under tolerance halving for the integrands used here.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .errors import DomainError, NumericalFailure

__all__ = ["QuadratureConfig", "QuadratureFailure", "LogIntegrand", "LogQuadResult", "log_integral"]

# 7-15 Gauss-Kronrod pair on [-1, 1]
_XK = (
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898, 0.405845151377397, 0.586087235467691, 0.741531185599394,
    0.864864423359769, 0.949107912342759, 0.991455371120813,
)
_WK = (
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529,
)
# Gauss weights attach to Kronrod nodes 1, 3, 5, 7, 9, 11, 13
_WG = (0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
       0.381830050505119, 0.279705391489277, 0.129484966168870)

_SCAN_POINTS = 33
_REFINE_ROUNDS = 3
_REFINE_POINTS = 17
_MAX_INTERVALS = 40_000
_EXP_CLAMP = 500.0


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-11
    abs_tol: float = 1e-300
    max_depth: int = 40
    tail_cutoff_log: float = -120.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if self.max_depth < 1:
            raise DomainError("max_depth must be >= 1")


DEFAULT_CONFIG = QuadratureConfig()


class QuadratureFailure(NumericalFailure):
    """Tolerance not met within the subdivision budget; .best holds the estimate."""


class LogQuadResult(NamedTuple):
    sign: int
    log_abs: float      # ln|I|; -inf when I == 0
    rel_err: float
    neval: int


@dataclass
class LogIntegrand:
    """Problem description handed to :func:`log_integral`."""

    a: float
    b: float
    g_core: Callable[[float], float]
    e_left: float = 0.0
    e_right: float = 0.0
    breakpoints: tuple = ()
    phi: Optional[Callable[[float], float]] = None
    tail_seed_left: Optional[float] = None
    tail_seed_right: Optional[float] = None

    def g_full(self, x: float) -> float:
        g = self.g_core(x)
        if math.isfinite(self.a) and self.e_left != 0.0:
            d = x - self.a
            if d <= 0.0:
                return -math.inf if self.e_left > 0 else math.inf
            g += self.e_left * math.log(d)
        if math.isfinite(self.b) and self.e_right != 0.0:
            d = self.b - x
            if d <= 0.0:
                return -math.inf if self.e_right > 0 else math.inf
            g += self.e_right * math.log(d)
        return g


class _Panel:
    """One integration panel in its own coordinate u over (lo, hi).

    ``logf(u)`` is the log-integrand with any endpoint singularity already
    substituted away; ``phi(u)`` the signed factor in panel coordinates.
    """

    __slots__ = ("lo", "hi", "logf", "phi", "peak")

    def __init__(self, lo, hi, logf, phi):
        self.lo = lo
        self.hi = hi
        self.logf = logf
        self.phi = phi
        self.peak = -math.inf


def _make_plain_panel(spec: LogIntegrand, u: float, v: float) -> _Panel:
    phi = spec.phi
    return _Panel(u, v, spec.g_full, phi)


def _make_left_transformed(spec: LogIntegrand, v: float) -> _Panel:
    # t = (x - a)^(1+e); removes (x-a)^e exactly
    a, e = spec.a, spec.e_left
    p = 1.0 / (1.0 + e)
    cap = (v - a) ** (1.0 + e)
    lnp = math.log(p)

    def x_of(t: float) -> float:
        return a + math.exp(p * math.log(t)) if t > 0.0 else a

    def logf(t: float) -> float:
        x = x_of(t)
        g = spec.g_core(x) + lnp
        if math.isfinite(spec.b) and spec.e_right != 0.0:
            g += spec.e_right * math.log(spec.b - x)
        return g

    phi = None
    if spec.phi is not None:
        base_phi = spec.phi
        phi = lambda t: base_phi(x_of(t))
    return _Panel(0.0, cap, logf, phi)


def _make_right_transformed(spec: LogIntegrand, u: float) -> _Panel:
    b, e = spec.b, spec.e_right
    p = 1.0 / (1.0 + e)
    cap = (b - u) ** (1.0 + e)
    lnp = math.log(p)

    def x_of(t: float) -> float:
        return b - math.exp(p * math.log(t)) if t > 0.0 else b

    def logf(t: float) -> float:
        x = x_of(t)
        g = spec.g_core(x) + lnp
        if math.isfinite(spec.a) and spec.e_left != 0.0:
            g += spec.e_left * math.log(x - spec.a)
        return g

    phi = None
    if spec.phi is not None:
        base_phi = spec.phi
        phi = lambda t: base_phi(x_of(t))
    return _Panel(0.0, cap, logf, phi)


def _tail_cut(g: Callable[[float], float], start: float, direction: int, cutoff: float) -> float:
    x = start
    step = 1.0 + 0.05 * abs(start)
    best = g(x) if math.isfinite(g(x)) else -math.inf
    for k in range(500):
        x = x + direction * step
        gv = g(x)
        if gv > best:
            best = gv
        elif k >= 2 and gv < best - (cutoff + 30.0):
            return x
        step *= 1.35
    raise NumericalFailure("tail walk found no decay within 500 steps")


def _scan_panel(panel: _Panel) -> tuple[list[float], list[float], float, float]:
    lo, hi = panel.lo, panel.hi
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    xs = [mid + half * math.cos(math.pi * (j + 0.5) / _SCAN_POINTS)
          for j in range(_SCAN_POINTS - 1, -1, -1)]
    gs = [panel.logf(x) for x in xs]
    gmax = max(gs)
    xmax = xs[gs.index(gmax)]
    # local zoom around the sampled argmax
    win = (hi - lo) / _SCAN_POINTS
    for _ in range(_REFINE_ROUNDS):
        a = max(lo, xmax - win)
        b = min(hi, xmax + win)
        for j in range(1, _REFINE_POINTS):
            x = a + (b - a) * j / _REFINE_POINTS
            gv = panel.logf(x)
            if gv > gmax:
                gmax, xmax = gv, x
        win /= _REFINE_POINTS
    return xs, gs, gmax, xmax


def _bisect_level(panel: _Panel, xa: float, xb: float, level: float, rising: bool) -> float:
    """Point in [xa, xb] where logf crosses `level` (monotone-ish bracket)."""
    for _ in range(60):
        mid = 0.5 * (xa + xb)
        if panel.logf(mid) >= level:
            if rising:
                xb = mid
            else:
                xa = mid
        else:
            if rising:
                xa = mid
            else:
                xb = mid
    return 0.5 * (xa + xb)


def _split_on_live_window(panel: _Panel, cutoff: float) -> list[_Panel]:
    xs, gs, gmax, _ = _scan_panel(panel)
    panel.peak = gmax
    level = gmax - cutoff
    idx = [i for i, gv in enumerate(gs) if gv >= level]
    if not idx:
        return [panel]
    lo_i, hi_i = idx[0], idx[-1]
    left = panel.lo if lo_i == 0 else _bisect_level(panel, xs[lo_i - 1], xs[lo_i], level, True)
    right = panel.hi if hi_i == len(xs) - 1 else _bisect_level(panel, xs[hi_i], xs[hi_i + 1], level, False)
    if (right - left) > 0.25 * (panel.hi - panel.lo):
        return [panel]
    out = []
    for u, v in ((panel.lo, left), (left, right), (right, panel.hi)):
        if v > u:
            sub = _Panel(u, v, panel.logf, panel.phi)
            sub.peak = gmax if (u, v) == (left, right) else level
            out.append(sub)
    return out


class _EvalCounter:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


def _gk(panel: _Panel, a: float, b: float, shift: float, counter: _EvalCounter) -> tuple[float, float]:
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fk = 0.0
    fg = 0.0
    gi = 0
    for i in range(15):
        x = c + h * _XK[i]
        g = panel.logf(x)
        counter.n += 1
        if g - shift > _EXP_CLAMP:
            raise NumericalFailure("integrand exceeds shifted clamp; peak scan missed the maximum")
        w = math.exp(g - shift) if g > -math.inf else 0.0
        if panel.phi is not None and w != 0.0:
            w *= panel.phi(x)
        if w != w:  # NaN
            raise NumericalFailure(f"integrand evaluated to NaN at x={x}")
        fk += _WK[i] * w
        if i % 2 == 1:
            fg += _WG[gi] * w
            gi += 1
    return h * fk, abs(h * (fk - fg))


def log_integral(spec: LogIntegrand, cfg: QuadratureConfig = DEFAULT_CONFIG) -> LogQuadResult:
    cutoff = -cfg.tail_cutoff_log
    counter = _EvalCounter()

    lo, hi = spec.a, spec.b
    bps = sorted(x for x in spec.breakpoints if spec.a < x < spec.b)
    if not math.isfinite(lo):
        seed = spec.tail_seed_left if spec.tail_seed_left is not None else 0.0
        start = min([seed] + bps) if bps else seed
        lo = _tail_cut(spec.g_full, start, -1, cutoff)
    if not math.isfinite(hi):
        seed = spec.tail_seed_right if spec.tail_seed_right is not None else 0.0
        start = max([seed] + bps) if bps else seed
        hi = _tail_cut(spec.g_full, start, +1, cutoff)

    for e, name in ((spec.e_left, "left"), (spec.e_right, "right")):
        if e <= -1.0:
            raise DomainError(f"non-integrable {name} endpoint exponent {e}")

    edges = [lo] + [x for x in bps if lo < x < hi] + [hi]
    left_singular = math.isfinite(spec.a) and -1.0 < spec.e_left < 0.0
    right_singular = math.isfinite(spec.b) and -1.0 < spec.e_right < 0.0
    if len(edges) == 2 and left_singular and right_singular:
        edges = [lo, 0.5 * (lo + hi), hi]

    panels: list[_Panel] = []
    for i in range(len(edges) - 1):
        u, v = edges[i], edges[i + 1]
        if not v > u:
            continue
        if i == 0 and left_singular and u == spec.a:
            panels.append(_make_left_transformed(spec, v))
        elif i == len(edges) - 2 and right_singular and v == spec.b:
            panels.append(_make_right_transformed(spec, u))
        else:
            panels.append(_make_plain_panel(spec, u, v))

    work: list[_Panel] = []
    for p in panels:
        work.extend(_split_on_live_window(p, cutoff))
    shift = max(p.peak for p in work)

    heap = []
    tick = 0
    total_i = 0.0
    total_err = 0.0
    for p in work:
        I, err = _gk(p, p.lo, p.hi, shift, counter)
        heapq.heappush(heap, (-err, tick, p, p.lo, p.hi, I, err, 0))
        tick += 1
        total_i += I
        total_err += err

    ln_abs_tol = math.log(cfg.abs_tol) if cfg.abs_tol > 0 else -math.inf

    def converged() -> bool:
        if total_err <= cfg.rel_tol * abs(total_i):
            return True
        if total_err > 0 and math.log(total_err) + shift <= ln_abs_tol:
            return True
        return total_err == 0.0

    while not converged():
        neg_err, _, p, a, b, I, err, depth = heapq.heappop(heap)
        if depth >= cfg.max_depth or len(heap) > _MAX_INTERVALS:
            heapq.heappush(heap, (neg_err, tick, p, a, b, I, err, depth))
            tick += 1
            break
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            heapq.heappush(heap, (0.0, tick, p, a, b, I, 0.0, depth))
            tick += 1
            total_err -= err
            continue
        i1, e1 = _gk(p, a, mid, shift, counter)
        i2, e2 = _gk(p, mid, b, shift, counter)
        total_i += (i1 + i2) - I
        total_err += (e1 + e2) - err
        heapq.heappush(heap, (-e1, tick, p, a, mid, i1, e1, depth + 1))
        tick += 1
        heapq.heappush(heap, (-e2, tick, p, mid, b, i2, e2, depth + 1))
        tick += 1

    if total_i == 0.0:
        sign, log_abs = 0, -math.inf
        rel = math.inf if total_err > 0 else 0.0
    else:
        sign = 1 if total_i > 0 else -1
        log_abs = math.log(abs(total_i)) + shift
        rel = total_err / abs(total_i)
    result = LogQuadResult(sign, log_abs, rel, counter.n)
    if not converged():
        raise QuadratureFailure(
            f"quadrature stalled at relative error {rel:.3e} (target {cfg.rel_tol:.1e})",
            best=result)
    return result
