"""Numerical Riemann-surface engine for the plane model."""

from .curve import PlaneCurve, Path, hub_point
from .homology import HomologyData, build_homology
from .periods import PeriodData, compute_periods, abel_jacobi_point, reduce_mod_lattice
from .symplectic import homology_representation, symplectic_equivalence

__all__ = [
    "PlaneCurve", "Path", "hub_point", "HomologyData", "build_homology",
    "PeriodData", "compute_periods", "abel_jacobi_point", "reduce_mod_lattice",
    "homology_representation", "symplectic_equivalence",
]
