"""Exact sumset arithmetic and density-tuple constructions on Z and R/Z.

Subpackages by theme:
  torus      exact interval-union arithmetic on the circle
  intset     bit-vector truncations of integer sequences
  reals      reproducible fixed-point / quadratic-irrational numbers
  equidist   Beatty sets, fractional-part sampling, discrepancy bounds
  piecewise  exact piecewise-polynomial algebra (the f_j family)
  special    Gamma/Beta/zeta references, F_k quadrature and its inverse
  witnesses  deterministic witness constructions and region deciders
  kneser     feasibility of deficient doubling and residue witnesses
  rng        counter-based reproducible random streams
  sampler    pseudo k-th power simulations and density reports
  repsums    brute-force representation sums S_k(n) and J_N(a,b)
  cli        command-line front end
"""

from .torus import TorusSet, minkowski_sum, iterated_sumset, normalize, sumset_profile
from .intset import FiniteIntegerSet
from .reals import FixedPointReal

__all__ = [
    "TorusSet",
    "FiniteIntegerSet",
    "FixedPointReal",
    "minkowski_sum",
    "iterated_sumset",
    "normalize",
    "sumset_profile",
]

__version__ = "0.1.0"
