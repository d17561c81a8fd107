"""PIM to PSM transformation.

The main algorithm builds the data access tier first (pojo, dao interface and
dao implementation per class), then the business tier (one DTO per pojo, then
service interface and implementation per class), then the UI tier (view rule,
controller rule), and finally links the three packages under a
``CrudProjectPackage`` named ``"crud" + <package name>``.

Every created leaf element is recorded in a :class:`TraceLog`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, NamedTuple, Optional, Sequence

from . import naming
from .errors import RuleError, ValidationFailed
from .metamodel import (
    Action,
    ActionForm,
    ActionForward,
    AttributeDecl,
    BusinessPackage,
    ControllerPackage,
    CrudProjectPackage,
    DaoImpl,
    DaoPackage,
    Dto,
    FragmentPath,
    IDao,
    IService,
    JspPage,
    MethodDecl,
    ParameterDecl,
    Pojo,
    ServiceImpl,
    UIPackage,
    UmlClass,
    UmlOperation,
    UmlPackage,
    ViewPackage,
    fragment_path_of,
    validate_pim,
)

RULES = ("pojo", "idao", "daoimpl", "dto", "iservice", "serviceimpl", "view", "controller")

# called as on_create(rule, source_element, created_element)
Recorder = Callable[[str, object, object], None]


@dataclass(frozen=True)
class TraceLink:
    rule: str
    source: FragmentPath
    target: FragmentPath

    def to_json(self) -> str:
        return json.dumps({"rule": self.rule, "source": self.source.render(), "target": self.target.render()})

    @classmethod
    def from_json(cls, line: str) -> TraceLink:
        record = json.loads(line)
        return cls(record["rule"], FragmentPath.parse(record["source"]), FragmentPath.parse(record["target"]))


@dataclass
class TraceLog:
    """Rule applications in execution order. Serialized as JSON lines."""

    links: list[TraceLink] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.links)

    def __iter__(self) -> Iterator[TraceLink]:
        return iter(self.links)

    def by_rule(self, rule: str) -> list[TraceLink]:
        return [link for link in self.links if link.rule == rule]

    def dumps(self) -> str:
        return "".join(link.to_json() + "\n" for link in self.links)

    @classmethod
    def loads(cls, text: str) -> TraceLog:
        return cls([TraceLink.from_json(line) for line in text.splitlines() if line.strip()])

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def read(cls, path: str | Path) -> TraceLog:
        return cls.loads(Path(path).read_text(encoding="utf-8"))


class TransformResult(NamedTuple):
    psm: CrudProjectPackage
    trace: TraceLog


def _method_decl(op: UmlOperation) -> MethodDecl:
    return MethodDecl(op.name, tuple(ParameterDecl(p.name, p.type, p.direction) for p in op.parameters))


# -- rule one: data access tier ----------------------------------------------


def rule_pojo(c: UmlClass) -> Pojo:
    return Pojo(naming.pojo_name(c.name), tuple(AttributeDecl(a.name, a.type) for a in c.attributes))


def rule_idao(c: UmlClass) -> IDao:
    return IDao(naming.idao_name(c.name), tuple(_method_decl(op) for op in c.operations))


def rule_daoimpl(c: UmlClass, dp: DaoPackage) -> DaoImpl:
    wanted = naming.idao_name(c.name)
    interfaces = [dao for dao in dp.daos if dao.name == wanted]
    if not interfaces:
        raise RuleError(f"no dao interface named {wanted!r} for class {c.name!r}", "missing-interface")
    impl = DaoImpl(naming.daoimpl_name(c.name), interfaces)
    for dao in interfaces:
        dao.implemented_by = impl
    return impl


# -- rule two: business tier ---------------------------------------------------


def rule_dto(p: Pojo) -> Dto:
    # the DTO keeps its own copy of the attribute list
    dto = Dto(naming.dto_name(p.name), tuple(p.attributes), pojo=p)
    p.dto = dto
    return dto


def rule_iservice(c: UmlClass) -> IService:
    return IService(naming.iservice_name(c.name), tuple(_method_decl(op) for op in c.operations))


def rule_serviceimpl(c: UmlClass, bp: BusinessPackage) -> ServiceImpl:
    wanted = naming.iservice_name(c.name)
    interfaces = [s for s in bp.services if s.name == wanted]
    if not interfaces:
        raise RuleError(f"no service interface named {wanted!r} for class {c.name!r}", "missing-interface")
    impl = ServiceImpl(naming.serviceimpl_name(c.name), interfaces)
    for service in interfaces:
        service.implemented_by = impl
    return impl


# -- rule three: UI tier -------------------------------------------------------


def rule_view(classes: Sequence[UmlClass], on_create: Optional[Recorder] = None) -> ViewPackage:
    """One JSP page per operation, except ``remove`` which needs no page."""
    vp = ViewPackage()
    for c in classes:
        for op in c.operations:
            if naming.is_remove(op.name):
                continue
            page = vp.add("jsp", JspPage(naming.page_name(op.name, c.name)))
            if on_create:
                on_create("view", op, page)
    return vp


def rule_controller(
    classes: Sequence[UmlClass], vp: ViewPackage, on_create: Optional[Recorder] = None
) -> ControllerPackage:
    """Build the action mapping.

    ``create``/``update`` yield an action, an ``End`` action and a form whose
    input is the operation's page and whose attribute is the ``End`` action;
    ``remove`` yields a single action; any other operation yields a single
    action. Each action forwards to the class's display page when there is
    one, otherwise to the operation's own page, otherwise nowhere.
    """
    pages = {page.name: page for page in vp.pages}
    cp = ControllerPackage()
    am = cp.action_mapping

    def new_action(name: str, target: JspPage | None, op: UmlOperation) -> Action:
        action = am.add("action", Action(name))
        if target is not None:
            action.add("forward", ActionForward(target))
        if on_create:
            on_create("controller", op, action)
        return action

    for c in classes:
        display = pages.get(naming.display_page_name(c.name))
        for op in c.operations:
            if naming.is_remove(op.name):
                new_action(naming.action_name(op.name, c.name), display, op)
                continue
            own = pages.get(naming.page_name(op.name, c.name))
            if own is None:
                raise RuleError(
                    f"view package has no page {naming.page_name(op.name, c.name)!r}", "inconsistent-view"
                )
            target = display or own
            new_action(naming.action_name(op.name, c.name), target, op)
            if naming.has_form(op.name):
                end = new_action(naming.end_action_name(op.name, c.name), target, op)
                form = am.add("form", ActionForm(naming.form_name(op.name, c.name), input=own, attribute=end))
                end.form = form
                if on_create:
                    on_create("controller", op, form)
    return cp


# -- main algorithm ------------------------------------------------------------


def transform(pim: UmlPackage) -> TransformResult:
    """Transform a valid UML package into a sealed N-tiers model plus its trace."""
    report = validate_pim(pim)
    if not report.ok:
        raise ValidationFailed(f"source model {pim.name!r} is not valid", report, code="invalid-input")

    created: list[tuple[str, object, object]] = []

    def record(rule, source, target):
        created.append((rule, source, target))

    dp = DaoPackage()
    for e in pim.classes:
        record("pojo", e, dp.add("pojo", rule_pojo(e)))
        record("idao", e, dp.add("dao", rule_idao(e)))
        record("daoimpl", e, dp.add("daoimpl", rule_daoimpl(e, dp)))

    bp = BusinessPackage()
    for pojo in dp.pojos:
        record("dto", pojo, bp.add("dto", rule_dto(pojo)))
    for e in pim.classes:
        record("iservice", e, bp.add("services", rule_iservice(e)))
        record("serviceimpl", e, bp.add("serviceimpl", rule_serviceimpl(e, bp)))

    uip = UIPackage(view_package=None, controller_package=None)
    vp = rule_view(pim.classes, record)
    cp = rule_controller(pim.classes, vp, record)
    uip.add("vPack", vp)
    uip.add("cPack", cp)

    crud = CrudProjectPackage("crud" + pim.name, ui_package=uip, business_package=bp, dao_package=dp)
    trace = TraceLog([TraceLink(rule, fragment_path_of(src), fragment_path_of(dst)) for rule, src, dst in created])
    crud.seal()
    return TransformResult(crud, trace)
