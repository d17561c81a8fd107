"""Compile UML class models into N-tiers CRUD project models."""

from .errors import NtiersError
from .metamodel import (
    CrudProjectPackage,
    FragmentPath,
    UmlPackage,
    ValidationReport,
    fragment_path_of,
    resolve_fragment,
    validate_pim,
    validate_psm,
)
from .transform import TraceLink, TraceLog, TransformResult, transform

__version__ = "0.1.0"
