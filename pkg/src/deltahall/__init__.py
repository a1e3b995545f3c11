"""Exact Hall, Delta-Hall and extended Delta-Hall algebras of quiver representations over F_q."""

from .coeff import QuadNumber, qint, vpow
from .quiver import Quiver
from .repcat import Catalog, HallTables, enumerate_catalog

__all__ = ["Catalog", "HallTables", "QuadNumber", "Quiver", "enumerate_catalog", "qint", "vpow"]
