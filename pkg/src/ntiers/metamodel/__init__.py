from .base import Element, Feature
from .paths import FragmentPath, fragment_path_of, path_index, resolve_fragment
from .pim import UmlAttribute, UmlClass, UmlDataType, UmlOperation, UmlPackage, UmlParameter
from .psm import (
    FRAMEWORK_CONCEPTS,
    LEAF_KINDS,
    Action,
    ActionForm,
    ActionForward,
    ActionMapping,
    AttributeDecl,
    BusinessPackage,
    ControllerPackage,
    CrudProjectPackage,
    DaoImpl,
    DaoPackage,
    Dto,
    IDao,
    IService,
    JspPage,
    MethodDecl,
    ParameterDecl,
    Pojo,
    ServiceImpl,
    UIPackage,
    ViewPackage,
    is_framework_concept,
)
from .validation import Diagnostic, ValidationReport, validate_pim, validate_psm

__all__ = [
    "Element", "Feature", "FragmentPath", "fragment_path_of", "path_index", "resolve_fragment",
    "UmlAttribute", "UmlClass", "UmlDataType", "UmlOperation", "UmlPackage", "UmlParameter",
    "FRAMEWORK_CONCEPTS", "LEAF_KINDS", "Action", "ActionForm", "ActionForward", "ActionMapping",
    "AttributeDecl", "BusinessPackage", "ControllerPackage", "CrudProjectPackage", "DaoImpl",
    "DaoPackage", "Dto", "IDao", "IService", "JspPage", "MethodDecl", "ParameterDecl", "Pojo",
    "ServiceImpl", "UIPackage", "ViewPackage", "is_framework_concept",
    "Diagnostic", "ValidationReport", "validate_pim", "validate_psm",
]
