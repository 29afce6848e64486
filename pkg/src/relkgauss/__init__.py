"""Exact computations with Galois-Gauss sums, relative K-groups of group rings
and weakly ramified Galois module structure."""

from .cyclonum import CycNum, zeta
from .groups import FiniteGroup, build_group, irr_table
from .gaussjacobi import AbelianField, DirichletChar, gauss_sum, jacobi_sum
from .relk import RelKRep, delta, rep_is_trivial, verify_identity

__all__ = [
    "AbelianField", "CycNum", "DirichletChar", "FiniteGroup", "RelKRep", "build_group",
    "delta", "gauss_sum", "irr_table", "jacobi_sum", "rep_is_trivial", "verify_identity", "zeta",
]
__version__ = "0.1.0"
