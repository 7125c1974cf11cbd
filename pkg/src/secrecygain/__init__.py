"""Exact secrecy functions of unimodular lattices and a certified check that they peak at y = 1."""

from .catalog import catalog_entry
from .lattice import GramMatrix, ThetaCoefficients, enumerate_counts, validate_unimodular
from .poly import PolyQ
from .qseries import QSeries, base_series, extremal_b_coeffs, fit_a_basis, fit_b_basis
from .secrecy import denom_from_ar, denom_from_bj, gain_at_one, xi_direct, xi_poly
from .theta_numeric import ThetaKind, z_of_y
from .verifier import Status, Verdict, isolate_roots, sturm_count, verify_min_at_quarter

__all__ = [
    "GramMatrix",
    "PolyQ",
    "QSeries",
    "Status",
    "ThetaCoefficients",
    "ThetaKind",
    "Verdict",
    "base_series",
    "catalog_entry",
    "denom_from_ar",
    "denom_from_bj",
    "enumerate_counts",
    "extremal_b_coeffs",
    "fit_a_basis",
    "fit_b_basis",
    "gain_at_one",
    "isolate_roots",
    "sturm_count",
    "validate_unimodular",
    "verify_min_at_quarter",
    "xi_direct",
    "xi_poly",
    "z_of_y",
]
