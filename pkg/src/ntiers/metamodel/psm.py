"""Target meta-model: an N-tiers CRUD project (data access, business, UI)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .base import Element, Feature

#: Framework meta-classes that appear in the target meta-model for completeness.
#: They are never instantiated; generated models only hold the concrete
#: element kinds defined below.
FRAMEWORK_CONCEPTS = frozenset(
    {
        "Interface",
        "Table",
        "HibernateDaoSupport",
        "HttpRequest",
        "HttpResponse",
        "ApplicationContext",
        "ServiceLocator",
        "WebApplicationContext",
        "ContextLoaderPlugIn",
        "DelegatingActionProxy",
    }
)


def is_framework_concept(name: str) -> bool:
    return name in FRAMEWORK_CONCEPTS


@dataclass(frozen=True)
class AttributeDecl:
    name: str
    type: str


@dataclass(frozen=True)
class ParameterDecl:
    name: str
    type: str
    direction: str = "in"


@dataclass(frozen=True)
class MethodDecl:
    name: str
    parameters: tuple[ParameterDecl, ...] = ()


# -- data access tier -------------------------------------------------------


@dataclass(eq=False, repr=False)
class Pojo(Element):
    name: str
    attributes: tuple[AttributeDecl, ...] = ()
    dto: Optional["Dto"] = None

    references = (Feature("dto", "dto", False),)
    properties = ("attributes",)


@dataclass(eq=False, repr=False)
class IDao(Element):
    name: str
    methods: tuple[MethodDecl, ...] = ()
    implemented_by: Optional["DaoImpl"] = None

    references = (Feature("implementedBy", "implemented_by", False),)
    properties = ("methods",)


@dataclass(eq=False, repr=False)
class DaoImpl(Element):
    name: str
    interfaces: list[IDao] = field(default_factory=list)

    references = (Feature("interfaces", "interfaces", True),)


@dataclass(eq=False, repr=False)
class DaoPackage(Element):
    name: str = "daoPackage"
    daos: list[IDao] = field(default_factory=list)
    pojos: list[Pojo] = field(default_factory=list)
    daoimpls: list[DaoImpl] = field(default_factory=list)

    contains = (
        Feature("dao", "daos", True),
        Feature("pojo", "pojos", True),
        Feature("daoimpl", "daoimpls", True),
    )


# -- business tier ----------------------------------------------------------


@dataclass(eq=False, repr=False)
class Dto(Element):
    name: str
    attributes: tuple[AttributeDecl, ...] = ()
    pojo: Optional[Pojo] = None

    references = (Feature("pojos", "pojo", False),)
    properties = ("attributes",)


@dataclass(eq=False, repr=False)
class IService(Element):
    name: str
    methods: tuple[MethodDecl, ...] = ()
    implemented_by: Optional["ServiceImpl"] = None

    references = (Feature("implementedBy", "implemented_by", False),)
    properties = ("methods",)


@dataclass(eq=False, repr=False)
class ServiceImpl(Element):
    name: str
    interfaces: list[IService] = field(default_factory=list)

    references = (Feature("interfaces", "interfaces", True),)


@dataclass(eq=False, repr=False)
class BusinessPackage(Element):
    name: str = "businessPackage"
    services: list[IService] = field(default_factory=list)
    serviceimpls: list[ServiceImpl] = field(default_factory=list)
    dtos: list[Dto] = field(default_factory=list)

    contains = (
        Feature("services", "services", True),
        Feature("serviceimpl", "serviceimpls", True),
        Feature("dto", "dtos", True),
    )


# -- user interface tier ----------------------------------------------------


@dataclass(eq=False, repr=False)
class JspPage(Element):
    name: str


@dataclass(eq=False, repr=False)
class ActionForward(Element):
    target: Optional[JspPage] = None

    references = (Feature("target", "target", False),)


@dataclass(eq=False, repr=False)
class Action(Element):
    """A generated controller action (a delegating action proxy in Struts terms)."""

    name: str
    forward: Optional[ActionForward] = None
    form: Optional["ActionForm"] = None

    contains = (Feature("forward", "forward", False),)
    references = (Feature("form", "form", False),)


@dataclass(eq=False, repr=False)
class ActionForm(Element):
    name: str
    input: Optional[JspPage] = None
    attribute: Optional[Action] = None

    references = (
        Feature("attribute", "attribute", False),
        Feature("input", "input", False),
    )


@dataclass(eq=False, repr=False)
class ActionMapping(Element):
    actions: list[Action] = field(default_factory=list)
    forms: list[ActionForm] = field(default_factory=list)

    contains = (
        Feature("action", "actions", True),
        Feature("form", "forms", True),
    )


@dataclass(eq=False, repr=False)
class ViewPackage(Element):
    name: str = "viewPackage"
    pages: list[JspPage] = field(default_factory=list)

    contains = (Feature("jsp", "pages", True),)


@dataclass(eq=False, repr=False)
class ControllerPackage(Element):
    name: str = "controllerPackage"
    action_mapping: ActionMapping = field(default_factory=ActionMapping)

    contains = (Feature("actionmapping", "action_mapping", False),)


@dataclass(eq=False, repr=False)
class UIPackage(Element):
    name: str = "presentationPackage"
    view_package: ViewPackage = field(default_factory=ViewPackage)
    controller_package: ControllerPackage = field(default_factory=ControllerPackage)

    contains = (
        Feature("vPack", "view_package", False),
        Feature("cPack", "controller_package", False),
    )


@dataclass(eq=False, repr=False)
class CrudProjectPackage(Element):
    name: str
    ui_package: UIPackage = field(default_factory=UIPackage)
    business_package: BusinessPackage = field(default_factory=BusinessPackage)
    dao_package: DaoPackage = field(default_factory=DaoPackage)

    contains = (
        Feature("uPack", "ui_package", False),
        Feature("bPack", "business_package", False),
        Feature("dPack", "dao_package", False),
    )
    is_root = True

    # shortcuts used throughout tests and tooling
    @property
    def pages(self):
        return self.ui_package.view_package.pages

    @property
    def actions(self):
        return self.ui_package.controller_package.action_mapping.actions

    @property
    def forms(self):
        return self.ui_package.controller_package.action_mapping.forms


#: Element kinds that are produced one-per-rule-application (everything except containers).
LEAF_KINDS = (Pojo, IDao, DaoImpl, Dto, IService, ServiceImpl, JspPage, Action, ActionForm)
