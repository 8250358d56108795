"""dilatox: angular-dilatation functionals of disc homeomorphisms.

Computes the p-angular dilatation of regular homeomorphisms of the unit disc,
its circular and disc means, length-area functionals, numerically verifies the
associated inequalities and asymptotic-ratio bounds, and solves the radially
symmetric nonlinear Beltrami equation with an exact-solution oracle.
"""

__version__ = "0.1.0"

from .errors import ToolkitError, ConfigError
from .mapping import MappingModel, PolarPoint, RadialProfile
from .quadrature import QuadratureConfig
from .functionals import DilatationOrder, RadialSeries
from .verifier import BoundReport, LimitProxy, RadiusLadder

__all__ = [
    "__version__",
    "ToolkitError",
    "ConfigError",
    "MappingModel",
    "PolarPoint",
    "RadialProfile",
    "QuadratureConfig",
    "DilatationOrder",
    "RadialSeries",
    "BoundReport",
    "LimitProxy",
    "RadiusLadder",
]
