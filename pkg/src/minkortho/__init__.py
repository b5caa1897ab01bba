"""Geometry of 2-D normed (Minkowski) planes.

Norm-generic circles, orthogonality relations, circumcenters, orthocentric
systems, and detectors that measure how far a gauge is from Euclidean.
"""

from .busemann import Ray, busemann_bisector, line_membership_defect
from .circumcenter import (CircumcenterSet, Triangle, bisector_residual,
                           circumcenters, circumradius)
from .detectors import (DetectorReport, DetectorStats, Lemma1Instance,
                        arc_separation_diagnostic, detector_T2, detector_T3,
                        detector_T4, detector_T5a, detector_T5b,
                        euclideanity_report, lemma1_construct, verify_instance)
from .errors import (ConfigurationError, ConstructionFailure,
                     DegenerateInputError, PreconditionError)
from .orthocentric import (OrthocentricConfig, SystemVerdict, SystemWitness,
                           antitriangle, homothety_minus2,
                           is_orthocentric_system,
                           orthocenter_from_circumcenter, point_symmetry,
                           six_point_circle, three_circles_check)
from .orthogonality import (OrthoDefect, birkhoff_defect, is_birkhoff_orthogonal,
                            is_isosceles_orthogonal, isosceles_defect,
                            isosceles_partner)
from .plane import (Circle, CustomNorm, LpNorm, NormSpec, PolygonalNorm, Vec2,
                    circle_point, custom, distance, lp, norm, norm_from_json,
                    polygonal, strict_convexity_probe, unit_vector)

__version__ = "0.1.0"

__all__ = [
    "Circle", "CircumcenterSet", "ConfigurationError", "ConstructionFailure",
    "CustomNorm", "DegenerateInputError", "DetectorReport", "DetectorStats",
    "Lemma1Instance", "LpNorm", "NormSpec", "OrthoDefect", "OrthocentricConfig",
    "PolygonalNorm", "PreconditionError", "Ray", "SystemVerdict",
    "SystemWitness", "Triangle", "Vec2", "antitriangle",
    "arc_separation_diagnostic", "birkhoff_defect", "bisector_residual",
    "busemann_bisector", "circle_point", "circumcenters", "circumradius",
    "custom", "detector_T2", "detector_T3", "detector_T4", "detector_T5a",
    "detector_T5b", "distance", "euclideanity_report", "homothety_minus2",
    "is_birkhoff_orthogonal", "is_isosceles_orthogonal",
    "is_orthocentric_system", "isosceles_defect", "isosceles_partner",
    "lemma1_construct", "line_membership_defect", "lp", "norm",
    "norm_from_json", "orthocenter_from_circumcenter", "point_symmetry",
    "polygonal", "six_point_circle", "strict_convexity_probe",
    "three_circles_check", "unit_vector", "verify_instance",
]
