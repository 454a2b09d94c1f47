"""Entropies and complexity measures of the polynomial probability densities.

The density attached to p_n is rho_n = p_n^2 h (mass kappa_n) or its
unit-mass version rho-hat_n = p_n^2 h / kappa_n.  Everything here reduces
to weighted norms and log-weighted integrals of that density:

    R_q = ln(W_q) / (1 - q)          Renyi entropy
    S   = -int rho ln rho            Shannon entropy
    E   = -int p^2 h ln p^2          polynomial Shannon functional
    I   = -int p^2 h ln h            weight cross term
    F   = int rho'^2 / rho           Fisher information (unit-mass only)

with S[rho-hat] = ln kappa + (E + I)/kappa, and complexity products built
on top (LMC-Renyi, plain LMC, Fisher-Shannon, Fisher-Renyi).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .families import (PolynomialFamily, derivative_family, eval_log, eval_poly,
                       norm_constant_log, polynomial_zeros, weight_exponents)
from .logreal import SignedLogReal
from .norms import density_integral, weighted_norm_quad, unweighted_norm_quad
from .quadrature import DEFAULT_CONFIG, LogIntegrand, QuadratureConfig, log_integral

__all__ = [
    "DensityHandle", "renyi_entropy", "shannon_entropy", "functional_E", "functional_I",
    "fisher_information", "renyi_length", "shannon_length", "lmc_renyi", "lmc_plain",
    "fisher_shannon", "fisher_renyi", "shannon_from_Wq_derivative", "density_moment",
]

_RICHARDSON_H = 1e-3


@dataclass(frozen=True)
class DensityHandle:
    family: PolynomialFamily
    n: int
    normalized: bool = True

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("degree must be nonnegative")


def renyi_entropy(d: DensityHandle, q: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """R_q = ln(W_q)/(1-q); computed in log space so any parameter size works."""
    if q == 1.0:
        raise DomainError("q = 1 is the Shannon limit; use shannon_entropy")
    if not q > 0:
        raise DomainError("q must be positive")
    w = weighted_norm_quad(d.family, d.n, q, cfg=cfg, normalized=d.normalized)
    return w.value.log_abs / (1.0 - q)


def _log_norm_shift(d: DensityHandle) -> float:
    return norm_constant_log(d.family, d.n).log_abs if d.normalized else 0.0


def shannon_entropy(d: DensityHandle, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """S = -int rho ln rho by direct quadrature (0 ln 0 handled by the
    vanishing-density guard inside the integrator)."""
    fam, n = d.family, d.n
    shift = _log_norm_shift(d)

    def phi(x: float) -> float:
        v = eval_log(fam, n, x)
        if v.sign == 0:
            return 0.0
        from .families import weight_log
        return -(2.0 * v.log_abs + weight_log(fam, x).log_abs - shift)

    res = density_integral(fam, n, pol_power=2.0, weight_power=1.0, phi=phi, cfg=cfg)
    return res.sign * math.exp(res.log_abs - shift) if res.sign != 0 else 0.0


def functional_E_log(fam: PolynomialFamily, n: int,
                     cfg: QuadratureConfig = DEFAULT_CONFIG) -> SignedLogReal:
    """-int p^2 h ln(p^2) dx as a SignedLogReal (survives huge parameters)."""
    def phi(x: float) -> float:
        v = eval_log(fam, n, x)
        return 0.0 if v.sign == 0 else -2.0 * v.log_abs

    res = density_integral(fam, n, pol_power=2.0, weight_power=1.0, phi=phi, cfg=cfg)
    if res.sign == 0:
        return SignedLogReal.zero()
    return SignedLogReal(res.sign, res.log_abs)


def _norm_log(fam: PolynomialFamily, n: int, q: float, cfg: QuadratureConfig) -> float:
    return unweighted_norm_quad(fam, n, q, cfg=cfg).value.log_abs


def functional_E_qderiv_log(fam: PolynomialFamily, n: int,
                            cfg: QuadratureConfig = DEFAULT_CONFIG) -> SignedLogReal:
    """E = -2 dN_q/dq at q = 2, by Richardson-extrapolated central differences.

    (The derivative identity holds with this sign: dN_q/dq = int |p|^q ln|p| h,
    which equals -E/2 at q = 2.)
    """
    def central(h: float) -> SignedLogReal:
        hi = SignedLogReal(1, _norm_log(fam, n, 2.0 + h, cfg))
        lo = SignedLogReal(1, _norm_log(fam, n, 2.0 - h, cfg))
        return (hi - lo).scaled(1.0 / (2.0 * h))

    d1 = central(_RICHARDSON_H)
    d2 = central(0.5 * _RICHARDSON_H)
    extrap = (d2.scaled(4.0) - d1).scaled(1.0 / 3.0)
    return extrap.scaled(-2.0)


def functional_E(fam: PolynomialFamily, n: int, method: str = "quadrature",
                 cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """E[p_n] = -int p^2 h ln(p^2) dx.

    method 'quadrature' integrates directly; 'qderivative' differentiates
    the unweighted norm in q at q = 2.
    """
    if method == "quadrature":
        return functional_E_log(fam, n, cfg).to_float()
    if method == "qderivative":
        return functional_E_qderiv_log(fam, n, cfg).to_float()
    raise DomainError(f"unknown method {method!r}")


def functional_I_log(fam: PolynomialFamily, n: int,
                     cfg: QuadratureConfig = DEFAULT_CONFIG) -> SignedLogReal:
    from .families import weight_log

    def phi(x: float) -> float:
        return -weight_log(fam, x).log_abs

    res = density_integral(fam, n, pol_power=2.0, weight_power=1.0, phi=phi, cfg=cfg)
    if res.sign == 0:
        return SignedLogReal.zero()
    return SignedLogReal(res.sign, res.log_abs)


def functional_I(fam: PolynomialFamily, n: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """I[p_n] = -int p^2 h ln(h) dx (identically zero for the flat weight)."""
    if fam.kind == "jacobi" and fam.alpha == 0.0 and fam.beta == 0.0:
        return 0.0
    return functional_I_log(fam, n, cfg).to_float()


def fisher_information(d: DensityHandle, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """F = int rho'^2 / rho dx for the unit-mass density.

    rho'^2/rho = h (2 p' + p h'/h)^2 / kappa.  Endpoints where the weight
    exponent a lies in (0, 1] make the integrand non-integrable
    (exponent a - 2 <= -1); such parameter ranges are rejected rather
    than silently truncated.
    """
    if not d.normalized:
        raise DomainError("fisher information is defined for the unit-mass density")
    fam, n = d.family, d.n
    a_l, a_r = weight_exponents(fam)
    lo, hi = fam.support
    for a, side in ((a_l, "lower"), (a_r, "upper")):
        if math.isfinite(lo if side == "lower" else hi) and 0.0 < a <= 1.0:
            raise DomainError(
                f"{fam.label()}: Fisher integrand has endpoint exponent {a - 2.0:g} <= -1 "
                f"at the {side} endpoint; integral diverges")

    shift = norm_constant_log(fam, n).log_abs
    dfam, dn, dfactor = derivative_family(fam, n)

    def p(x: float) -> float:
        return eval_poly(fam, n, x)

    def dp(x: float) -> float:
        return 0.0 if dfam is None else dfactor * eval_poly(dfam, dn, x)

    # w = 2 p' + p h'/h, regularised by the endpoint distances where h'/h has poles
    if fam.kind == "hermite":
        w_reg = lambda x: 2.0 * dp(x) - 2.0 * x * p(x)
        e_l = e_r = 0.0
        core = lambda x: -x * x
    elif fam.kind == "laguerre":
        al = fam.alpha
        if al > 0:
            w_reg = lambda x: 2.0 * x * dp(x) + p(x) * (al - x)
            e_l = al - 2.0
        else:
            w_reg = lambda x: 2.0 * dp(x) - p(x)
            e_l = 0.0
        e_r = 0.0
        core = lambda x: -x
    else:
        if fam.kind == "jacobi":
            aa, bb = fam.alpha, fam.beta
        else:
            aa = bb = fam.lam - 0.5
        s_r = 1 if aa > 0 else 0  # pole at +1
        s_l = 1 if bb > 0 else 0  # pole at -1
        def w_reg(x, aa=aa, bb=bb, s_l=s_l, s_r=s_r):
            v = 2.0 * dp(x)
            t = p(x)
            if s_r and s_l:
                return v * (1.0 - x * x) + t * (bb * (1.0 - x) - aa * (1.0 + x))
            if s_r:
                return v * (1.0 - x) + t * (bb * (1.0 - x) / (1.0 + x) - aa)
            if s_l:
                return v * (1.0 + x) + t * (bb - aa * (1.0 + x) / (1.0 - x))
            return v
        e_r = aa - 2.0 * s_r
        e_l = bb - 2.0 * s_l
        core = lambda x: 0.0

    def g_core(x: float) -> float:
        w = w_reg(x)
        if w == 0.0:
            return -math.inf
        return core(x) + 2.0 * math.log(abs(w)) - shift

    zeros = polynomial_zeros(fam, n)
    if fam.kind == "hermite":
        seed = math.sqrt(2.0 * n + 2.0) + 1.0
        seeds = (-seed, seed)
    elif fam.kind == "laguerre":
        seeds = (None, 4.0 * n + 2.0 * fam.alpha + 6.0)
    else:
        seeds = (None, None)
    spec = LogIntegrand(a=lo, b=hi, g_core=g_core, e_left=e_l, e_right=e_r,
                        breakpoints=tuple(zeros),
                        tail_seed_left=seeds[0], tail_seed_right=seeds[1])
    res = log_integral(spec, cfg)
    return math.exp(res.log_abs)


def renyi_length(d: DensityHandle, q: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """L_q = W_q^(1/(1-q)) = exp(R_q)."""
    return math.exp(renyi_entropy(d, q, cfg))


def shannon_length(d: DensityHandle, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    return math.exp(shannon_entropy(d, cfg))


def lmc_renyi(d: DensityHandle, a: float, b: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """exp(R_a - R_b) for 0 < a < b, both != 1."""
    if not (0 < a < b) or a == 1.0 or b == 1.0:
        raise DomainError("requires 0 < a < b with a, b != 1")
    return math.exp(renyi_entropy(d, a, cfg) - renyi_entropy(d, b, cfg))


def lmc_plain(d: DensityHandle, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """e^S * W_2: Shannon length times disequilibrium; >= 1 for any density."""
    s = shannon_entropy(d, cfg)
    w2 = weighted_norm_quad(d.family, d.n, 2.0, cfg=cfg, normalized=d.normalized)
    return math.exp(s + w2.value.log_abs)


def fisher_shannon(d: DensityHandle, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """F * exp(2S) / (2 pi e); equals 1 exactly for a Gaussian density."""
    return fisher_information(d, cfg) * math.exp(2.0 * shannon_entropy(d, cfg)) \
        / (2.0 * math.pi * math.e)


def fisher_renyi(d: DensityHandle, q: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    return fisher_information(d, cfg) * math.exp(2.0 * renyi_entropy(d, q, cfg)) \
        / (2.0 * math.pi * math.e)


def shannon_from_Wq_derivative(d: DensityHandle, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """S = -dW_q/dq at q = 1 (unit-mass density), Richardson-extrapolated."""
    if not d.normalized:
        raise DomainError("identity requires the unit-mass density")

    def w(q: float) -> float:
        return weighted_norm_quad(d.family, d.n, q, cfg=cfg, normalized=True).to_float()

    def central(h: float) -> float:
        return (w(1.0 + h) - w(1.0 - h)) / (2.0 * h)

    d1 = central(_RICHARDSON_H)
    d2 = central(0.5 * _RICHARDSON_H)
    return -(4.0 * d2 - d1) / 3.0


def density_moment(d: DensityHandle, k: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """int x^k rho(x) dx; used by the variance/Cramer-Rao sanity checks."""
    shift = _log_norm_shift(d)
    # odd moments of symmetric densities vanish exactly; give the signed
    # integrand an absolute floor at 1e-12 of the density mass
    kappa_log = norm_constant_log(d.family, d.n).log_abs
    floor = math.exp(min(kappa_log - 27.6, 690.0))
    if cfg.abs_tol < floor:
        cfg = QuadratureConfig(rel_tol=cfg.rel_tol, abs_tol=floor,
                               max_depth=cfg.max_depth, tail_cutoff_log=cfg.tail_cutoff_log)
    res = density_integral(d.family, d.n, pol_power=2.0, weight_power=1.0,
                           phi=(lambda x: x ** k), cfg=cfg)
    return res.sign * math.exp(res.log_abs - shift) if res.sign != 0 else 0.0
