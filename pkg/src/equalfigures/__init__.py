"""Exact-arithmetic model of equal figures: proportion, equal rectangles,
equal triangles, equal quadrilaterals and rectangle-valued area."""

from .exact import ConstructionError, DomainError, ExactNumber, as_exact, from_rational, parse, sign, sqrt
from .figures import (
    AreaValue,
    Quadrilateral,
    RectWH,
    Triangle,
    area,
    area_sum,
    circumscribed_rectangles,
    classify_quadrilateral,
    equal_figures,
    equal_quadrilaterals,
    equal_rectangles,
    equal_triangles,
    first_circumscribed_rectangle,
    oracle_area,
)
from .plane import Point, Segment, point
from .proportion import fourth_proportional, proportion_holds

__version__ = "0.1.0"

__all__ = [
    "AreaValue",
    "ConstructionError",
    "DomainError",
    "ExactNumber",
    "Point",
    "Quadrilateral",
    "RectWH",
    "Segment",
    "Triangle",
    "area",
    "area_sum",
    "as_exact",
    "circumscribed_rectangles",
    "classify_quadrilateral",
    "equal_figures",
    "equal_quadrilaterals",
    "equal_rectangles",
    "equal_triangles",
    "first_circumscribed_rectangle",
    "fourth_proportional",
    "from_rational",
    "oracle_area",
    "parse",
    "point",
    "proportion_holds",
    "sign",
    "sqrt",
]
