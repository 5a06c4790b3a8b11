"""Exact verification toolkit for Hecke symmetries, their Schur-Weyl
categories and the (modified) reflection equation algebra."""
from .scalar import Q, QScalar, qbinom, qnum, parse_qscalar
from .linalg import QMatrix, kron
from .report import CheckReport
from .hecke import HeckeSymmetry, certify, dual_symmetry, dump_R, load_R, standard_R, super_flip
from .hpseries import HPSeries, fit_series, hp_series, super_schur
from .swcat import extend_braiding, r_dimension, r_trace
from .rea import build_rea, component_dims
from .reps import Representation, adjoint_rep, rho_basic, rho_dual, rho_tensor, restrict, sl_reduce
from .suite import Config, export, run_suite

__version__ = "0.1.0"

__all__ = [
    "Q", "QScalar", "qbinom", "qnum", "parse_qscalar",
    "QMatrix", "kron", "CheckReport",
    "HeckeSymmetry", "certify", "dual_symmetry", "dump_R", "load_R", "standard_R", "super_flip",
    "HPSeries", "fit_series", "hp_series", "super_schur",
    "extend_braiding", "r_dimension", "r_trace",
    "build_rea", "component_dims",
    "Representation", "adjoint_rep", "rho_basic", "rho_dual", "rho_tensor", "restrict", "sl_reduce",
    "Config", "export", "run_suite",
]
