"""Exact computations on genus-zero modular curves X0(N)."""
from genus0._kernels import BACKEND
from genus0.exactmath import IntPolynomial, QuadraticNumber, RationalFunction, quad_norm
from genus0.qseries import TruncatedSeries
from genus0.etaforms import EtaProduct, check_functional_equations, j_series
from genus0.levels import genus, genus0_levels, psi
from genus0.hauptmodul import HauptmodulRecord, fricke_constant, hauptmodul_record, solve_hauptmodul_exponents
from genus0.ratrecover import express_in_hauptmodul, recover_j, verify_identity
from genus0.curves import cm_special_value, isogenous_pair_coeffs
from genus0.kcurves import is_norm, strict_kcurve_exists, strict_twist_family

__version__ = "0.1.0"
