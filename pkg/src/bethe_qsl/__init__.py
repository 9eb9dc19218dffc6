"""Heine-Stieltjes solvers for quasi-exactly solvable spin-chain Bethe equations."""
from .awop import QParam, aw_A, aw_D
from .bethe import BetheRoots, bethe_newton_solve, extract_lambdas, general_residuals, xxz_residuals
from .heine import Diagnostics, HeineBoundError, HeineSolution, SolverOptions
from .poly import LaurentPoly, Poly
from .qsl import QslProblem, XxzParams, aw_poly, aw_zeros, build_pi_phi, heine_stieltjes_solve
from .singular import indicial_exponents
from .weights import log_gamma, q_gamma, qpoch, xxx_weight, xxz_weight
from .wilson import WilsonProblem, XxxParams, xxx_heine_solve, xxx_residuals

__all__ = [
    "BetheRoots", "Diagnostics", "HeineBoundError", "HeineSolution", "LaurentPoly", "Poly",
    "QParam", "QslProblem", "SolverOptions", "WilsonProblem", "XxxParams", "XxzParams",
    "aw_A", "aw_D", "aw_poly", "aw_zeros", "bethe_newton_solve", "build_pi_phi",
    "extract_lambdas", "general_residuals", "heine_stieltjes_solve", "indicial_exponents",
    "log_gamma", "q_gamma", "qpoch", "xxx_heine_solve", "xxx_residuals", "xxx_weight",
    "xxz_residuals", "xxz_weight",
]
