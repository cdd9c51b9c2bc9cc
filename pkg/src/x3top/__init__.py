"""x3top: exact-rational computations for the symplectomorphism-group
topology of the three-point blow-up of the projective plane, modeled as
the two-point blow-up of a ruled surface.

Subpackages and modules:

  core        exact series, PBW extraction, truncated linear algebra
  homology    curve classes, shapes, stratum and class enumerations
  configs     the eighteen sphere-configuration types
  polygons    moment polygons: trapezoids, pentagons, hexagons
  karshon     circle-action fixed-point graphs and identifications
  lie         case presentations and homotopy ranks
  cohomology  classifying-space rings, kernels, relation degrees
  inflation   deformation tables with exact bound enforcement
  acceptance  the verification suite behind `x3top verify-all`
"""

from x3top.homology import HClass, Shape
from x3top.lie import CaseId, case_for_shape, expected_pi_ranks, pi_ranks

__version__ = "0.1.0"

__all__ = [
    "HClass",
    "Shape",
    "CaseId",
    "case_for_shape",
    "pi_ranks",
    "expected_pi_ranks",
    "__version__",
]
