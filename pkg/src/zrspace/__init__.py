"""Exact computations on spectral spaces, Zariski-Riemann spaces of
one-dimensional bases, Kronecker function rings and wedge semistar operations."""

from .errors import DomainError, InvalidPosetError, InvalidSubsetError, ParseError, PreconditionError, ZrError
from .field_arith import GENERIC, BasePair, Place, PolyT, RatFunc, RatFunT, gauss_val, parse_poly_t, parse_ratfun_t, poles, support, val
from .finite_spectral import FinitePoset, spec_zn, ultrafilter_prime
from .kronecker import KrSpec, kr_member, kr_star_member, kr_witness, phi_pullback
from .polys import Poly
from .reports import Report
from .semistar import FracIdeal, GenModule, StarSpec, apply_wedge, hat_closure, wedge_ft_equal
from .zr_space import FREE, Principal, ZarSubset, b_F, b_x, cl_cons, cl_inv, cl_zar, intersection_ring, limit_point, ring_member

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "InvalidPosetError",
    "InvalidSubsetError",
    "ParseError",
    "PreconditionError",
    "ZrError",
    "GENERIC",
    "BasePair",
    "Place",
    "PolyT",
    "RatFunc",
    "RatFunT",
    "gauss_val",
    "parse_poly_t",
    "parse_ratfun_t",
    "poles",
    "support",
    "val",
    "FinitePoset",
    "spec_zn",
    "ultrafilter_prime",
    "KrSpec",
    "kr_member",
    "kr_star_member",
    "kr_witness",
    "phi_pullback",
    "Poly",
    "Report",
    "FracIdeal",
    "GenModule",
    "StarSpec",
    "apply_wedge",
    "hat_closure",
    "wedge_ft_equal",
    "FREE",
    "Principal",
    "ZarSubset",
    "b_F",
    "b_x",
    "cl_cons",
    "cl_inv",
    "cl_zar",
    "intersection_ring",
    "limit_point",
    "ring_member",
]
