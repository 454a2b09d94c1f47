"""Lq norms, entropies and complexity measures of the classical orthogonal
polynomial families (Hermite, Laguerre, Jacobi, Gegenbauer), computed by
three independent engines: adaptive log-space quadrature, an exact
Bell-polynomial moment formula for even integer q, and closed asymptotic
leading terms for large q and large weight parameters."""

from .errors import DomainError, NumericalFailure, SingularEvaluation, UnsupportedAsymptotics
from .families import (CoefficientList, PolynomialFamily, coefficients, eval_derivative,
                       eval_log, eval_poly, gegenbauer, hermite, jacobi, laguerre,
                       norm_constant_log, weight_log, weight_log_derivative)
from .logreal import SignedLogReal
from .quadrature import QuadratureConfig, QuadratureFailure
from .norms import NormResult, unweighted_norm_quad, weight_moment, weighted_norm_quad
from .bell import bell_polynomial, unweighted_norm_bell
from .laplace import (LaplacePoint, locate_density_maximum, unweighted_norm_q_asym,
                      unweighted_norm_q_asym_jacobi, weighted_norm_q_asym)
from .paramasym import (AsymptoticValue, TemmeExpansion, gegenbauer_shannon_param,
                        gegenbauer_unweighted_param, gegenbauer_weighted_param,
                        jacobi_shannon_param, jacobi_unweighted_param, jacobi_weighted_param,
                        laguerre_shannon_param, laguerre_unweighted_param,
                        laguerre_weighted_param, temme_I1, temme_I2)
from .measures import (DensityHandle, fisher_information, fisher_renyi, fisher_shannon,
                       functional_E, functional_I, lmc_plain, lmc_renyi, renyi_entropy,
                       renyi_length, shannon_entropy, shannon_from_Wq_derivative,
                       shannon_length)

__version__ = "0.1.0"
