"""Parabolas, arbeloses and parbeloses, with numerical checks of their classical properties."""

from .arbelos import Arbelos, InscribedCircleFamily, from_cusps_arbelos
from .euclid import Circle, Line, Point, Quadrilateral
from .numeric import ToleranceContext, approx_eq, arc_length_quadrature, solve_quadratic
from .parabola import VerticalParabola, from_latus_rectum, lambert_check, parabolic_constant
from .parbelos import Parbelos, from_cusps
from .records import VerificationRecord

__version__ = "0.1.0"

__all__ = [
    "Arbelos",
    "Circle",
    "InscribedCircleFamily",
    "Line",
    "Parbelos",
    "Point",
    "Quadrilateral",
    "ToleranceContext",
    "VerificationRecord",
    "VerticalParabola",
    "approx_eq",
    "arc_length_quadrature",
    "from_cusps",
    "from_cusps_arbelos",
    "from_latus_rectum",
    "lambert_check",
    "parabolic_constant",
    "solve_quadratic",
]
