"""ryserlab: exact solvers, constructive algorithms, and extremal constructions
for monochromatic cover and partition problems on edge-colored graphs and
hypergraphs."""

__version__ = "0.1.0"

from .core import (
    ColoredMultigraph,
    ComponentSet,
    CoverCertificate,
    GraphError,
    alpha,
    closure,
    components,
    diameter,
    make_certificate,
    verify,
)

__all__ = [
    "ColoredMultigraph",
    "ComponentSet",
    "CoverCertificate",
    "GraphError",
    "alpha",
    "closure",
    "components",
    "diameter",
    "make_certificate",
    "verify",
    "__version__",
]
