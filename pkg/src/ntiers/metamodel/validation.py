"""Well-formedness checks for source and target models.

Violations are reported as data (a :class:`ValidationReport`), never raised.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .. import naming
from ..errors import DetachedElementError
from .base import Element
from .paths import FragmentPath, fragment_path_of, path_index
from .pim import DIRECTIONS, UmlPackage
from .psm import (
    Action,
    ActionForm,
    CrudProjectPackage,
    DaoImpl,
    Dto,
    IDao,
    IService,
    JspPage,
    Pojo,
    ServiceImpl,
)


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    path: FragmentPath
    code: str
    message: str

    def format(self) -> str:
        return f"{self.severity}\t{self.path.render() or '/'}\t{self.code}\t{self.message}"


@dataclass
class ValidationReport:
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def add(self, element: Element, code: str, message: str, severity: str = "error") -> None:
        try:
            path = fragment_path_of(element)
        except DetachedElementError:
            path = FragmentPath()
        self.diagnostics.append(Diagnostic(severity, path, code, message))

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "error"]

    def codes(self) -> list[str]:
        return [d.code for d in self.diagnostics]

    def __len__(self) -> int:
        return len(self.diagnostics)

    def __iter__(self) -> Iterator[Diagnostic]:
        return iter(self.diagnostics)

    def format(self) -> str:
        return "\n".join(d.format() for d in self.diagnostics)


# -- source model -----------------------------------------------------------


def _check_identifier(report: ValidationReport, element, what: str) -> None:
    if not naming.IDENTIFIER.match(element.name or ""):
        report.add(element, "invalid-identifier", f"{what} name {element.name!r} is not an identifier")


def _check_unique(report: ValidationReport, elements: Iterable, code: str, what: str) -> None:
    seen = set()
    for e in elements:
        if e.name in seen:
            report.add(e, code, f"duplicate {what} name {e.name!r}")
        seen.add(e.name)


def validate_pim(model: UmlPackage) -> ValidationReport:
    report = ValidationReport()
    _check_identifier(report, model, "package")
    classifiers = set(model.classifier_names())
    _check_unique(report, list(model.classes) + list(model.datatypes), "duplicate-classifier-name", "classifier")

    for dt in model.datatypes:
        _check_identifier(report, dt, "datatype")
    for cls in model.classes:
        if not naming.IDENTIFIER.match(cls.name or ""):
            _check_identifier(report, cls, "class")
        elif not naming.CLASS_NAME.match(cls.name):
            report.add(cls, "invalid-class-name", f"class name {cls.name!r} must start with an uppercase letter")
        _check_unique(report, cls.attributes, "duplicate-attribute-name", "attribute")
        _check_unique(report, cls.operations, "duplicate-operation-name", "operation")
        for attr in cls.attributes:
            _check_identifier(report, attr, "attribute")
            if attr.type not in classifiers:
                report.add(attr, "unresolved-type-ref", f"attribute type {attr.type!r} is not a classifier of {model.name!r}")
        for op in cls.operations:
            _check_identifier(report, op, "operation")
            _check_unique(report, op.parameters, "duplicate-parameter-name", "parameter")
            for param in op.parameters:
                _check_identifier(report, param, "parameter")
                if param.type not in classifiers:
                    report.add(param, "unresolved-type-ref", f"parameter type {param.type!r} is not a classifier of {model.name!r}")
                if param.direction not in DIRECTIONS:
                    report.add(param, "invalid-direction", f"direction {param.direction!r} is not one of {DIRECTIONS}")

    # Name clashes among generated elements only make sense once the
    # source names themselves are sound.
    if report.ok:
        _check_generated_names(report, model)
    return report


def _check_generated_names(report: ValidationReport, model: UmlPackage) -> None:
    dao_scope, business_scope, pages, controller = [], [], [], []
    for cls in model.classes:
        c = cls.name
        dao_scope += [(naming.pojo_name(c), cls), (naming.idao_name(c), cls), (naming.daoimpl_name(c), cls)]
        business_scope += [(naming.dto_name(c), cls), (naming.iservice_name(c), cls), (naming.serviceimpl_name(c), cls)]
        for op in cls.operations:
            o = op.name
            if not naming.is_remove(o):
                pages.append((naming.page_name(o, c), op))
            controller.append((naming.action_name(o, c), op))
            if naming.has_form(o):
                controller.append((naming.end_action_name(o, c), op))
                controller.append((naming.form_name(o, c), op))
    for scope in (dao_scope, business_scope, pages, controller):
        seen = set()
        for name, origin in scope:
            if name in seen:
                report.add(origin, "generated-name-collision", f"generated name {name!r} is produced twice")
            seen.add(name)


# -- target model -----------------------------------------------------------

_NAME_PATTERNS = {
    IDao: re.compile(r"I.+Dao\Z"),
    DaoImpl: re.compile(r".+DaoImpl\Z"),
    Dto: re.compile(r".+DTO\Z"),
    IService: re.compile(r"I.+Service\Z"),
    ServiceImpl: re.compile(r".+ServiceImpl\Z"),
    JspPage: re.compile(r".+Page\.jsp\Z"),
    Action: re.compile(r".+Action\Z"),
    ActionForm: re.compile(r".+Form\Z"),
}


def _check_reference(report: ValidationReport, paths: dict, owner: Element, ref: str, target, kind) -> bool:
    if target is None:
        return False
    if not isinstance(target, kind):
        report.add(owner, "wrong-reference-type", f"{ref} must reference a {kind.__name__}, not {type(target).__name__}")
        return False
    # ``paths`` holds every element contained in the model being validated
    if id(target) not in paths:
        report.add(owner, "unresolved-reference", f"{ref} target {target!r} is not part of this model")
        return False
    return True


def validate_psm(model: CrudProjectPackage) -> ValidationReport:
    report = ValidationReport()
    subpackages = [
        (model, "ui_package"),
        (model, "business_package"),
        (model, "dao_package"),
    ]
    for owner, attr in subpackages:
        if getattr(owner, attr) is None:
            report.add(owner, "missing-package", f"{attr} is missing")
    if not report.ok:
        return report
    ui = model.ui_package
    for owner, attr in [(ui, "view_package"), (ui, "controller_package")]:
        if getattr(owner, attr) is None:
            report.add(owner, "missing-package", f"{attr} is missing")
    if not report.ok:
        return report
    if ui.controller_package.action_mapping is None:
        report.add(ui.controller_package, "missing-package", "action_mapping is missing")
        return report

    for node in model.walk():
        for feat in node.contains:
            if feat.many:
                names = Counter(getattr(c, "name", None) for c in getattr(node, feat.attr))
                for child in getattr(node, feat.attr):
                    if names[child.name] > 1:
                        report.add(child, "duplicate-name", f"name {child.name!r} is not unique in @{feat.name}")
                        names[child.name] = 0
        pattern = _NAME_PATTERNS.get(type(node))
        if pattern is not None and not pattern.match(node.name):
            report.add(node, "naming-convention", f"{type(node).__name__} name {node.name!r} does not follow the naming convention")

    paths = path_index(model)
    dp, bp = model.dao_package, model.business_package
    mapping = ui.controller_package.action_mapping
    _check_pairs(report, paths, dp.daos, dp.daoimpls, IDao, DaoImpl, "Dao")
    _check_pairs(report, paths, bp.services, bp.serviceimpls, IService, ServiceImpl, "Service")

    for pojo in dp.pojos:
        if _check_reference(report, paths, pojo, "dto", pojo.dto, Dto) and pojo.dto.pojo is not pojo:
            report.add(pojo, "asymmetric-link", f"{pojo.dto.name!r} does not point back to pojo {pojo.name!r}")
    for dto in bp.dtos:
        if not _check_reference(report, paths, dto, "pojos", dto.pojo, Pojo):
            continue
        if dto.pojo.dto is not dto:
            report.add(dto, "asymmetric-link", f"pojo {dto.pojo.name!r} does not point back to {dto.name!r}")
        if tuple(dto.attributes) != tuple(dto.pojo.attributes):
            report.add(dto, "dto-pojo-mismatch", f"attributes of {dto.name!r} differ from pojo {dto.pojo.name!r}")
        if dto.name != naming.dto_name(dto.pojo.name):
            report.add(dto, "link-name-mismatch", f"{dto.name!r} is linked to pojo {dto.pojo.name!r}")

    for action in mapping.actions:
        if action.forward is not None:
            if action.forward.target is None:
                report.add(action.forward, "unresolved-reference", f"forward of {action.name!r} has no target")
            else:
                _check_reference(report, paths, action.forward, "target", action.forward.target, JspPage)
        if _check_reference(report, paths, action, "form", action.form, ActionForm):
            if action.form.attribute is not action:
                report.add(action, "asymmetric-link", f"form {action.form.name!r} does not name {action.name!r} as its attribute")
    for form in mapping.forms:
        if form.input is None:
            report.add(form, "unresolved-reference", f"form {form.name!r} has no input page")
        else:
            _check_reference(report, paths, form, "input", form.input, JspPage)
        if form.attribute is None:
            report.add(form, "unresolved-reference", f"form {form.name!r} has no attribute action")
        elif _check_reference(report, paths, form, "attribute", form.attribute, Action):
            if form.attribute.container is not mapping:
                report.add(form, "unresolved-reference", f"attribute of {form.name!r} is outside its action mapping")
            elif form.attribute.form is not form:
                report.add(form, "asymmetric-link", f"action {form.attribute.name!r} does not use form {form.name!r}")
    return report


def _check_pairs(report, paths, interfaces, impls, iface_kind, impl_kind, suffix: str) -> None:
    for iface in interfaces:
        impl = iface.implemented_by
        if not _check_reference(report, paths, iface, "implementedBy", impl, impl_kind):
            continue
        if not any(i is iface for i in impl.interfaces):
            report.add(iface, "asymmetric-link", f"{impl.name!r} does not list {iface.name!r} in its interfaces")
        if iface.name != "I" + impl.name[: -len(suffix + "Impl")] + suffix:
            report.add(iface, "link-name-mismatch", f"{iface.name!r} is implemented by {impl.name!r}")
    for impl in impls:
        for iface in impl.interfaces:
            if _check_reference(report, paths, impl, "interfaces", iface, iface_kind) and iface.implemented_by is not impl:
                report.add(impl, "asymmetric-link", f"{iface.name!r} is not implemented by {impl.name!r}")
