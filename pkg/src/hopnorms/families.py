"""The four classical orthogonal polynomial families.

Standardisations are the conventional ones: H_n (physicists'), L_n^(alpha),
P_n^(alpha,beta), C_n^(lambda), evaluated by forward three-term recurrence.
Weight functions:

    hermite     e^{-x^2}            on (-inf, inf)
    laguerre    x^alpha e^{-x}      on [0, inf),    alpha > -1
    jacobi      (1-x)^a (1+x)^b     on [-1, 1],     a, b > -1
    gegenbauer  (1-x^2)^(lambda-1/2) on [-1, 1],    lambda > -1/2, != 0
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, NumericalFailure, SingularEvaluation
from .logreal import SignedLogReal
from .special import log_gamma

__all__ = [
    "PolynomialFamily", "CoefficientList",
    "hermite", "laguerre", "jacobi", "gegenbauer",
    "eval_poly", "eval_log", "eval_derivative", "derivative_family",
    "norm_constant_log", "coefficients", "weight_log",
    "weight_log_derivative", "gegenbauer_jacobi_factor_log",
]

_RESCALE_HI = 1e280
_RESCALE_LO = 1e-280
_COEFF_DEGREE_CAP = 60


@dataclass(frozen=True)
class PolynomialFamily:
    kind: str  # "hermite" | "laguerre" | "jacobi" | "gegenbauer"
    alpha: Optional[float] = None
    beta: Optional[float] = None
    lam: Optional[float] = None

    def __post_init__(self):
        if self.kind == "hermite":
            pass
        elif self.kind == "laguerre":
            if self.alpha is None or not self.alpha > -1:
                raise DomainError(f"laguerre requires alpha > -1, got {self.alpha}")
        elif self.kind == "jacobi":
            if self.alpha is None or self.beta is None or not (self.alpha > -1 and self.beta > -1):
                raise DomainError(f"jacobi requires alpha, beta > -1, got ({self.alpha}, {self.beta})")
        elif self.kind == "gegenbauer":
            if self.lam is None or not self.lam > -0.5 or self.lam == 0:
                raise DomainError(f"gegenbauer requires lambda > -1/2, lambda != 0, got {self.lam}")
        else:
            raise DomainError(f"unknown family kind {self.kind!r}")

    @property
    def support(self) -> tuple[float, float]:
        if self.kind == "hermite":
            return (-math.inf, math.inf)
        if self.kind == "laguerre":
            return (0.0, math.inf)
        return (-1.0, 1.0)

    def label(self) -> str:
        if self.kind == "hermite":
            return "hermite"
        if self.kind == "laguerre":
            return f"laguerre(alpha={self.alpha:g})"
        if self.kind == "jacobi":
            return f"jacobi(alpha={self.alpha:g},beta={self.beta:g})"
        return f"gegenbauer(lambda={self.lam:g})"


def hermite() -> PolynomialFamily:
    return PolynomialFamily("hermite")


def laguerre(alpha: float) -> PolynomialFamily:
    return PolynomialFamily("laguerre", alpha=alpha)


def jacobi(alpha: float, beta: float) -> PolynomialFamily:
    return PolynomialFamily("jacobi", alpha=alpha, beta=beta)


def gegenbauer(lam: float) -> PolynomialFamily:
    return PolynomialFamily("gegenbauer", lam=lam)


@dataclass(frozen=True)
class CoefficientList:
    """Power-basis coefficients: p_n(x) = sum c_k x^k, c_n != 0."""

    degree: int
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise DomainError("coefficient list length must be degree + 1")
        if self.degree >= 0 and self.coeffs[-1] == 0.0:
            raise DomainError("leading coefficient must be nonzero")

    def horner(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _p01(fam: PolynomialFamily, x: float) -> tuple[float, float]:
    """(p_0, p_1) in the family standardisation."""
    if fam.kind == "hermite":
        return 1.0, 2.0 * x
    if fam.kind == "laguerre":
        return 1.0, fam.alpha + 1.0 - x
    if fam.kind == "jacobi":
        a, b = fam.alpha, fam.beta
        return 1.0, 0.5 * (a + b + 2.0) * x + 0.5 * (a - b)
    return 1.0, 2.0 * fam.lam * x


def _step(fam: PolynomialFamily, k: int, x: float, pk: float, pkm1: float) -> float:
    """p_{k+1} from (p_k, p_{k-1}); valid for k >= 1."""
    if fam.kind == "hermite":
        return 2.0 * x * pk - 2.0 * k * pkm1
    if fam.kind == "laguerre":
        a = fam.alpha
        return ((2.0 * k + a + 1.0 - x) * pk - (k + a) * pkm1) / (k + 1.0)
    if fam.kind == "jacobi":
        a, b = fam.alpha, fam.beta
        s = 2.0 * k + a + b
        c0 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s
        c1 = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b)
        c2 = 2.0 * (k + a) * (k + b) * (s + 2.0)
        return (c1 * pk - c2 * pkm1) / c0
    lam = fam.lam
    return (2.0 * (k + lam) * x * pk - (k + 2.0 * lam - 1.0) * pkm1) / (k + 1.0)


def eval_poly(fam: PolynomialFamily, n: int, x: float) -> float:
    """p_n(x) by forward recurrence in native floats.

    Internal fast path; overflows for extreme degree/parameter/argument
    combinations.  Use :func:`eval_log` for guaranteed range.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    p0, p1 = _p01(fam, x)
    if n == 0:
        return p0
    for k in range(1, n):
        p0, p1 = p1, _step(fam, k, x, p1, p0)
    return p1


def eval_log(fam: PolynomialFamily, n: int, x: float) -> SignedLogReal:
    """p_n(x) as a SignedLogReal; recurrence rescaled to avoid overflow."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    p0, p1 = _p01(fam, x)
    if n == 0:
        return SignedLogReal.from_float(p0)
    scale = 0.0
    for k in range(1, n):
        p0, p1 = p1, _step(fam, k, x, p1, p0)
        mag = max(abs(p0), abs(p1))
        if mag > _RESCALE_HI or (0.0 < mag < _RESCALE_LO):
            p0 /= mag
            p1 /= mag
            scale += math.log(mag)
    if p1 == 0.0:
        return SignedLogReal.zero()
    return SignedLogReal(1 if p1 > 0 else -1, math.log(abs(p1)) + scale)


def derivative_family(fam: PolynomialFamily, n: int) -> tuple[Optional[PolynomialFamily], int, float]:
    """p_n' expressed as factor * q_{n-1} for a shifted-parameter family.

    Returns (family, degree, factor); family is None when the derivative
    vanishes identically (n = 0).
    """
    if n == 0:
        return None, 0, 0.0
    if fam.kind == "hermite":
        return fam, n - 1, 2.0 * n
    if fam.kind == "laguerre":
        return laguerre(fam.alpha + 1.0), n - 1, -1.0
    if fam.kind == "jacobi":
        return jacobi(fam.alpha + 1.0, fam.beta + 1.0), n - 1, 0.5 * (n + fam.alpha + fam.beta + 1.0)
    return gegenbauer(fam.lam + 1.0), n - 1, 2.0 * fam.lam


def eval_derivative(fam: PolynomialFamily, n: int, x: float) -> float:
    if n < 0:
        raise DomainError("degree must be nonnegative")
    dfam, dn, factor = derivative_family(fam, n)
    if dfam is None:
        return 0.0
    return factor * eval_poly(dfam, dn, x)


def eval_derivative_log(fam: PolynomialFamily, n: int, x: float) -> SignedLogReal:
    dfam, dn, factor = derivative_family(fam, n)
    if dfam is None:
        return SignedLogReal.zero()
    return eval_log(dfam, dn, x).scaled(factor)


def norm_constant_log(fam: PolynomialFamily, n: int) -> SignedLogReal:
    """ln kappa_n, the squared L2 norm of p_n against the family weight."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if fam.kind == "hermite":
        lg = 0.5 * math.log(math.pi) + log_gamma(n + 1.0) + n * math.log(2.0)
    elif fam.kind == "laguerre":
        lg = log_gamma(n + fam.alpha + 1.0) - log_gamma(n + 1.0)
    elif fam.kind == "jacobi":
        a, b = fam.alpha, fam.beta
        lg = ((a + b + 1.0) * math.log(2.0) + log_gamma(a + n + 1.0) + log_gamma(b + n + 1.0)
              - log_gamma(n + 1.0) - math.log(a + b + 2.0 * n + 1.0) - log_gamma(a + b + n + 1.0))
    else:
        lam = fam.lam
        lg = ((1.0 - 2.0 * lam) * math.log(2.0) + math.log(math.pi) + log_gamma(n + 2.0 * lam)
              - 2.0 * log_gamma(lam) - math.log(n + lam) - log_gamma(n + 1.0))
    return SignedLogReal(1, lg)


def coefficients(fam: PolynomialFamily, n: int) -> CoefficientList:
    """Exact power-basis coefficients by recurrence on coefficient vectors."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n > _COEFF_DEGREE_CAP:
        raise DomainError(f"coefficient extraction capped at degree {_COEFF_DEGREE_CAP}")
    if fam.kind == "hermite":
        c0, c1 = [1.0], [0.0, 2.0]
    elif fam.kind == "laguerre":
        c0, c1 = [1.0], [fam.alpha + 1.0, -1.0]
    elif fam.kind == "jacobi":
        a, b = fam.alpha, fam.beta
        c0, c1 = [1.0], [0.5 * (a - b), 0.5 * (a + b + 2.0)]
    else:
        c0, c1 = [1.0], [0.0, 2.0 * fam.lam]
    if n == 0:
        return CoefficientList(0, tuple(c0))
    prev, cur = c0, c1
    for k in range(1, n):
        nxt = [0.0] * (k + 2)
        # p_{k+1} = (A x + B) p_k + C p_{k-1}, from the same recurrence step
        if fam.kind == "hermite":
            A, B, C = 2.0, 0.0, -2.0 * k
        elif fam.kind == "laguerre":
            a = fam.alpha
            A, B, C = -1.0 / (k + 1.0), (2.0 * k + a + 1.0) / (k + 1.0), -(k + a) / (k + 1.0)
        elif fam.kind == "jacobi":
            a, b = fam.alpha, fam.beta
            s = 2.0 * k + a + b
            c0r = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s
            A = (s + 1.0) * (s + 2.0) * s / c0r
            B = (s + 1.0) * (a * a - b * b) / c0r
            C = -2.0 * (k + a) * (k + b) * (s + 2.0) / c0r
        else:
            lam = fam.lam
            A, B, C = 2.0 * (k + lam) / (k + 1.0), 0.0, -(k + 2.0 * lam - 1.0) / (k + 1.0)
        for j, c in enumerate(cur):
            nxt[j + 1] += A * c
            nxt[j] += B * c
        for j, c in enumerate(prev):
            nxt[j] += C * c
        prev, cur = cur, nxt
    return CoefficientList(n, tuple(cur))


def weight_log(fam: PolynomialFamily, x: float) -> SignedLogReal:
    """ln h(x); signals SingularEvaluation where h vanishes with a
    negative exponent (endpoint poles)."""
    if fam.kind == "hermite":
        return SignedLogReal(1, -x * x)
    if fam.kind == "laguerre":
        a = fam.alpha
        if x < 0:
            raise DomainError("laguerre weight defined on [0, inf)")
        if x == 0.0:
            if a < 0:
                raise SingularEvaluation("weight pole at x = 0")
            return SignedLogReal.zero() if a > 0 else SignedLogReal(1, 0.0)
        return SignedLogReal(1, a * math.log(x) - x)
    if fam.kind == "jacobi":
        a, b = fam.alpha, fam.beta
    else:
        a = b = fam.lam - 0.5
    if not -1.0 <= x <= 1.0:
        raise DomainError("weight defined on [-1, 1]")
    if x == 1.0:
        if a < 0:
            raise SingularEvaluation("weight pole at x = 1")
        if a > 0:
            return SignedLogReal.zero()
        return SignedLogReal(1, b * math.log1p(x))
    if x == -1.0:
        if b < 0:
            raise SingularEvaluation("weight pole at x = -1")
        if b > 0:
            return SignedLogReal.zero()
        return SignedLogReal(1, a * math.log1p(-x))
    return SignedLogReal(1, a * math.log1p(-x) + b * math.log1p(x))


def weight_log_derivative(fam: PolynomialFamily, x: float) -> float:
    """h'(x)/h(x) at interior points."""
    if fam.kind == "hermite":
        return -2.0 * x
    if fam.kind == "laguerre":
        if x == 0.0 and fam.alpha != 0.0:
            raise SingularEvaluation("h'/h pole at x = 0")
        if x == 0.0:
            return -1.0
        return fam.alpha / x - 1.0
    if fam.kind == "jacobi":
        a, b = fam.alpha, fam.beta
    else:
        a = b = fam.lam - 0.5
    if abs(x) == 1.0:
        raise SingularEvaluation("h'/h pole at x = +-1")
    return -a / (1.0 - x) + b / (1.0 + x)


def weight_exponents(fam: PolynomialFamily) -> tuple[float, float]:
    """Endpoint exponents (left, right) of the weight; 0 for infinite ends."""
    if fam.kind == "hermite":
        return 0.0, 0.0
    if fam.kind == "laguerre":
        return fam.alpha, 0.0
    if fam.kind == "jacobi":
        return fam.beta, fam.alpha  # left endpoint is -1 -> (1+x)^beta
    a = fam.lam - 0.5
    return a, a


def gegenbauer_jacobi_factor_log(n: int, lam: float) -> float:
    """ln c with C_n^(lambda) = c * P_n^(lam-1/2, lam-1/2)."""
    return (log_gamma(lam + 0.5) - log_gamma(2.0 * lam)
            + log_gamma(n + 2.0 * lam) - log_gamma(n + lam + 0.5))


def polynomial_zeros(fam: PolynomialFamily, n: int) -> list[float]:
    """All n real zeros of p_n, ascending.  Internal helper.

    Sign-change bisection on a Chebyshev-spaced scan; all zeros of these
    families are real, simple and interior to the support.
    """
    if n == 0:
        return []
    lo, hi = _zero_window(fam, n)
    m = max(4 * n, 16)
    while True:
        xs = [0.5 * (lo + hi) + 0.5 * (hi - lo) * math.cos(math.pi * (j + 0.5) / m)
              for j in range(m, 0, -1)]
        signs = [eval_log(fam, n, x).sign for x in xs]
        brackets = []
        prev_i = None
        for i, s in enumerate(signs):
            if s == 0:
                brackets.append((xs[i], xs[i]))
                prev_i = None
                continue
            if prev_i is not None and s != signs[prev_i]:
                brackets.append((xs[prev_i], xs[i]))
            prev_i = i
        if len(brackets) == n:
            break
        if m > 4096 * max(n, 1):
            raise NumericalFailure(
                f"zero scan for {fam.label()} degree {n} found {len(brackets)} sign changes")
        m *= 4
    roots = []
    for a, b in brackets:
        if a == b:
            roots.append(a)
            continue
        sa = eval_log(fam, n, a).sign
        for _ in range(200):
            mid = 0.5 * (a + b)
            if mid == a or mid == b:
                break
            sm = eval_log(fam, n, mid).sign
            if sm == 0:
                a = b = mid
                break
            if sm == sa:
                a = mid
            else:
                b = mid
        roots.append(0.5 * (a + b))
    return roots


def _zero_window(fam: PolynomialFamily, n: int) -> tuple[float, float]:
    if fam.kind == "hermite":
        r = math.sqrt(2.0 * n + 2.0)
        return -r, r
    if fam.kind == "laguerre":
        return 1e-12, 4.0 * n + 2.0 * abs(fam.alpha) + 6.0
    return -1.0 + 1e-12, 1.0 - 1e-12
