"""XML reading and writing for source (``UmlMM``) and target (``NtiersMM``) models.

Target documents use XMI-style fragment paths for every cross reference::

    <services name="IPatientService" implementedBy="//@bPack/@serviceimpl.0"/>

Output is byte-deterministic: fixed feature order, two-space indentation,
``name`` first and then reference attributes in alphabetical order.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Callable, Union
from xml.sax.saxutils import escape

from .errors import DocumentError, UnresolvedPathError, ValidationFailed
from .metamodel import (
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
    Element,
    FragmentPath,
    IDao,
    IService,
    JspPage,
    MethodDecl,
    ParameterDecl,
    Pojo,
    ServiceImpl,
    UIPackage,
    UmlAttribute,
    UmlClass,
    UmlDataType,
    UmlOperation,
    UmlPackage,
    UmlParameter,
    ViewPackage,
    path_index,
    resolve_fragment,
    validate_pim,
    validate_psm,
)
from .errors import FragmentSyntaxError

UML_NS = "http://UmlMM.ecore"
NTIERS_NS = "http://NtiersMM.ecore"
XMI_NS = "http://www.omg.org/XMI"
XML_DECL = '<?xml version="1.0" encoding="UTF-8"?>'

PIM_ROOT = f"{{{UML_NS}}}UmlPackage"
PSM_ROOT = f"{{{NTIERS_NS}}}CrudProjectPackage"

Model = Union[UmlPackage, CrudProjectPackage]


def _attr(value: str) -> str:
    return '"' + escape(value, {'"': "&quot;"}) + '"'


def _open(tag: str, attrs: list[tuple[str, str]], close: bool) -> str:
    text = "".join(f" {k}={_attr(v)}" for k, v in attrs)
    return f"<{tag}{text}{'/' if close else ''}>"


class _Writer:
    def __init__(self) -> None:
        self.lines: list[str] = [XML_DECL]

    def leaf(self, depth: int, tag: str, attrs: list[tuple[str, str]]) -> None:
        self.lines.append("  " * depth + _open(tag, attrs, True))

    def start(self, depth: int, tag: str, attrs: list[tuple[str, str]]) -> None:
        self.lines.append("  " * depth + _open(tag, attrs, False))

    def end(self, depth: int, tag: str) -> None:
        self.lines.append("  " * depth + f"</{tag}>")

    def node(self, depth: int, tag: str, attrs, children: list[Callable[[int], None]]) -> None:
        if not children:
            self.leaf(depth, tag, attrs)
            return
        self.start(depth, tag, attrs)
        for emit in children:
            emit(depth + 1)
        self.end(depth, tag)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


# -- source models ---------------------------------------------------------------


def serialize_pim(model: UmlPackage) -> str:
    w = _Writer()
    w.start(0, "UmlMM:UmlPackage", [("xmlns:UmlMM", UML_NS), ("name", model.name)])
    for cls in model.classes:
        children = [lambda d, a=a: w.leaf(d, "attribute", [("name", a.name), ("type", a.type)]) for a in cls.attributes]
        for op in cls.operations:
            params = [
                lambda d, p=p: w.leaf(d, "parameter", [("name", p.name), ("type", p.type), ("direction", p.direction)])
                for p in op.parameters
            ]
            children.append(lambda d, op=op, params=params: w.node(d, "operation", [("name", op.name)], params))
        w.node(1, "class", [("name", cls.name)], children)
    for dt in model.datatypes:
        w.leaf(1, "datatype", [("name", dt.name)])
    w.end(0, "UmlMM:UmlPackage")
    return w.text()


def _parse_xml(text: str | bytes) -> ET.Element:
    try:
        return ET.fromstring(text)
    except ET.ParseError as exc:
        raise DocumentError(f"malformed XML: {exc}", "xml-malformed") from None


def _check_attrs(node: ET.Element, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict[str, str]:
    attrs = {k: v for k, v in node.attrib.items() if not k.startswith("{")}
    unknown = set(attrs) - set(required) - set(optional)
    if unknown:
        raise DocumentError(f"<{node.tag}>: unknown attribute(s) {sorted(unknown)}")
    missing = [k for k in required if k not in attrs]
    if missing:
        raise DocumentError(f"<{node.tag}>: missing attribute(s) {missing}")
    if node.text and node.text.strip():
        raise DocumentError(f"<{node.tag}>: unexpected text content {node.text.strip()!r}")
    return attrs


def _children(node: ET.Element, allowed: tuple[str, ...]):
    for child in node:
        if child.tag not in allowed:
            raise DocumentError(f"<{node.tag}>: unexpected element <{child.tag}>")
        if child.tail and child.tail.strip():
            raise DocumentError(f"<{node.tag}>: unexpected text content {child.tail.strip()!r}")
        yield child


def parse_pim(doc: str | bytes, strict: bool = True) -> UmlPackage:
    """Read a source document into a sealed :class:`UmlPackage`.

    The validation report is attached as ``model.validation``. With
    ``strict`` (the default) a report containing errors raises
    :class:`ValidationFailed` instead; the model is then on ``exc.model``.
    """
    root = _parse_xml(doc)
    if root.tag != PIM_ROOT:
        raise DocumentError(f"expected root UmlMM:UmlPackage, found <{root.tag}>")
    model = UmlPackage(_check_attrs(root, ("name",))["name"])
    for node in _children(root, ("class", "datatype")):
        if node.tag == "datatype":
            model.add("datatype", UmlDataType(_check_attrs(node, ("name",))["name"]))
            continue
        cls = model.add("class", UmlClass(_check_attrs(node, ("name",))["name"]))
        for member in _children(node, ("attribute", "operation")):
            if member.tag == "attribute":
                a = _check_attrs(member, ("name", "type"))
                cls.add("attribute", UmlAttribute(a["name"], a["type"]))
                continue
            op = cls.add("operation", UmlOperation(_check_attrs(member, ("name",))["name"]))
            for pnode in _children(member, ("parameter",)):
                p = _check_attrs(pnode, ("name", "type"), ("direction",))
                op.add("parameter", UmlParameter(p["name"], p["type"], p.get("direction", "in")))
    report = validate_pim(model)
    object.__setattr__(model, "validation", report)
    model.seal()
    if strict and report.errors:
        exc = ValidationFailed(f"source model {model.name!r} is not valid", report)
        exc.model = model
        raise exc
    return model


# -- target models ---------------------------------------------------------------


def _attribute_children(w: _Writer, attributes) -> list:
    return [lambda d, a=a: w.leaf(d, "attribute", [("name", a.name), ("type", a.type)]) for a in attributes]


def _method_children(w: _Writer, methods) -> list:
    out = []
    for m in methods:
        params = [
            lambda d, p=p: w.leaf(d, "parameter", [("name", p.name), ("type", p.type), ("direction", p.direction)])
            for p in m.parameters
        ]
        out.append(lambda d, m=m, params=params: w.node(d, "method", [("name", m.name)], params))
    return out


def _refs(**refs) -> list[tuple[str, str]]:
    # reference attributes are written in alphabetical order, unset ones skipped
    return [(k, v) for k, v in sorted(refs.items()) if v]


def serialize_psm(model: CrudProjectPackage, full: bool = True) -> str:
    """Render a valid target model as XML.

    ``full=False`` writes name-and-reference elements only, without nested
    attribute and method declarations.
    """
    report = validate_psm(model)
    if not report.ok:
        raise ValidationFailed(f"target model {model.name!r} is not valid", report, code="invalid-model")

    paths = path_index(model)

    def _path(element: Element) -> str:
        return paths[id(element)].render()

    w = _Writer()
    w.start(
        0,
        "NtiersMM:CrudProjectPackage",
        [("xmlns:xmi", XMI_NS), ("xmlns:NtiersMM", NTIERS_NS), ("name", model.name)],
    )
    ui = model.ui_package
    vp, cp = ui.view_package, ui.controller_package
    am = cp.action_mapping

    w.start(1, "uPack", [("name", ui.name)])
    w.start(2, "vPack", [("name", vp.name)])
    for page in vp.pages:
        w.leaf(3, "jsp", [("name", page.name)])
    w.end(2, "vPack")
    w.start(2, "cPack", [("name", cp.name)])
    w.start(3, "actionmapping", [])
    for action in am.actions:
        forward = action.forward.target if action.forward else None
        w.leaf(4, "action", [("name", action.name)] + _refs(
            form=action.form and _path(action.form),
            forward=forward and _path(forward),
        ))
    for form in am.forms:
        w.leaf(4, "form", [("name", form.name)] + _refs(
            attribute=form.attribute and _path(form.attribute),
            input=form.input and _path(form.input),
        ))
    w.end(3, "actionmapping")
    w.end(2, "cPack")
    w.end(1, "uPack")

    bp = model.business_package
    w.start(1, "bPack", [("name", bp.name)])
    for s in bp.services:
        attrs = [("name", s.name)] + _refs(implementedBy=s.implemented_by and _path(s.implemented_by))
        w.node(2, "services", attrs, _method_children(w, s.methods) if full else [])
    for impl in bp.serviceimpls:
        w.leaf(2, "serviceimpl", [("name", impl.name)] + _refs(interfaces=" ".join(_path(i) for i in impl.interfaces)))
    for dto in bp.dtos:
        attrs = [("name", dto.name)] + _refs(pojos=dto.pojo and _path(dto.pojo))
        w.node(2, "dto", attrs, _attribute_children(w, dto.attributes) if full else [])
    w.end(1, "bPack")

    dp = model.dao_package
    w.start(1, "dPack", [("name", dp.name)])
    for dao in dp.daos:
        attrs = [("name", dao.name)] + _refs(implementedBy=dao.implemented_by and _path(dao.implemented_by))
        w.node(2, "dao", attrs, _method_children(w, dao.methods) if full else [])
    for pojo in dp.pojos:
        attrs = [("name", pojo.name)] + _refs(dto=pojo.dto and _path(pojo.dto))
        w.node(2, "pojo", attrs, _attribute_children(w, pojo.attributes) if full else [])
    for impl in dp.daoimpls:
        w.leaf(2, "daoimpl", [("name", impl.name)] + _refs(interfaces=" ".join(_path(i) for i in impl.interfaces)))
    w.end(1, "dPack")

    w.end(0, "NtiersMM:CrudProjectPackage")
    return w.text()


def _read_attributes(node: ET.Element) -> tuple[AttributeDecl, ...]:
    out = []
    for a in _children(node, ("attribute",)):
        attrs = _check_attrs(a, ("name", "type"))
        out.append(AttributeDecl(attrs["name"], attrs["type"]))
    return tuple(out)


def _read_methods(node: ET.Element) -> tuple[MethodDecl, ...]:
    out = []
    for m in _children(node, ("method",)):
        name = _check_attrs(m, ("name",))["name"]
        params = []
        for p in _children(m, ("parameter",)):
            attrs = _check_attrs(p, ("name", "type"), ("direction",))
            params.append(ParameterDecl(attrs["name"], attrs["type"], attrs.get("direction", "in")))
        out.append(MethodDecl(name, tuple(params)))
    return tuple(out)


def _single(node: ET.Element, tag: str) -> ET.Element | None:
    found = [c for c in node if c.tag == tag]
    if len(found) > 1:
        raise DocumentError(f"<{node.tag}>: more than one <{tag}>")
    return found[0] if found else None


def parse_psm(doc: str | bytes) -> CrudProjectPackage:
    """Read a target document, resolving every fragment-path reference.

    Missing packages default to empty ones. Dangling references raise
    :class:`UnresolvedPathError`.
    """
    root = _parse_xml(doc)
    if root.tag != PSM_ROOT:
        raise DocumentError(f"expected root NtiersMM:CrudProjectPackage, found <{root.tag}>")
    model = CrudProjectPackage(_check_attrs(root, ("name",))["name"])
    pending: list[tuple[Element, str, str, type]] = []  # owner, attribute, raw paths, expected kind

    list(_children(root, ("uPack", "bPack", "dPack")))
    u = _single(root, "uPack")
    if u is not None:
        model.ui_package.name = _check_attrs(u, ("name",))["name"]
        list(_children(u, ("vPack", "cPack")))
        v = _single(u, "vPack")
        if v is not None:
            vp = model.ui_package.view_package
            vp.name = _check_attrs(v, ("name",))["name"]
            for jsp in _children(v, ("jsp",)):
                vp.add("jsp", JspPage(_check_attrs(jsp, ("name",))["name"]))
        c = _single(u, "cPack")
        if c is not None:
            cp = model.ui_package.controller_package
            cp.name = _check_attrs(c, ("name",))["name"]
            list(_children(c, ("actionmapping",)))
            m = _single(c, "actionmapping")
            if m is not None:
                _check_attrs(m, ())
                am = cp.action_mapping
                for child in _children(m, ("action", "form")):
                    if child.tag == "action":
                        attrs = _check_attrs(child, ("name",), ("form", "forward"))
                        action = am.add("action", Action(attrs["name"]))
                        if "forward" in attrs:
                            forward = action.add("forward", ActionForward())
                            pending.append((forward, "target", attrs["forward"], JspPage))
                        if "form" in attrs:
                            pending.append((action, "form", attrs["form"], ActionForm))
                    else:
                        attrs = _check_attrs(child, ("name",), ("attribute", "input"))
                        form = am.add("form", ActionForm(attrs["name"]))
                        for ref, kind in (("input", JspPage), ("attribute", Action)):
                            if ref in attrs:
                                pending.append((form, ref, attrs[ref], kind))

    b = _single(root, "bPack")
    if b is not None:
        bp = model.business_package
        bp.name = _check_attrs(b, ("name",))["name"]
        for child in _children(b, ("services", "serviceimpl", "dto")):
            if child.tag == "services":
                attrs = _check_attrs(child, ("name",), ("implementedBy",))
                el = bp.add("services", IService(attrs["name"], _read_methods(child)))
                if "implementedBy" in attrs:
                    pending.append((el, "implemented_by", attrs["implementedBy"], ServiceImpl))
            elif child.tag == "serviceimpl":
                attrs = _check_attrs(child, ("name",), ("interfaces",))
                el = bp.add("serviceimpl", ServiceImpl(attrs["name"]))
                if "interfaces" in attrs:
                    pending.append((el, "interfaces", attrs["interfaces"], IService))
                list(_children(child, ()))
            else:
                attrs = _check_attrs(child, ("name",), ("pojos",))
                el = bp.add("dto", Dto(attrs["name"], _read_attributes(child)))
                if "pojos" in attrs:
                    pending.append((el, "pojo", attrs["pojos"], Pojo))

    d = _single(root, "dPack")
    if d is not None:
        dp = model.dao_package
        dp.name = _check_attrs(d, ("name",))["name"]
        for child in _children(d, ("dao", "pojo", "daoimpl")):
            if child.tag == "dao":
                attrs = _check_attrs(child, ("name",), ("implementedBy",))
                el = dp.add("dao", IDao(attrs["name"], _read_methods(child)))
                if "implementedBy" in attrs:
                    pending.append((el, "implemented_by", attrs["implementedBy"], DaoImpl))
            elif child.tag == "pojo":
                attrs = _check_attrs(child, ("name",), ("dto",))
                el = dp.add("pojo", Pojo(attrs["name"], _read_attributes(child)))
                if "dto" in attrs:
                    pending.append((el, "dto", attrs["dto"], Dto))
            else:
                attrs = _check_attrs(child, ("name",), ("interfaces",))
                el = dp.add("daoimpl", DaoImpl(attrs["name"]))
                if "interfaces" in attrs:
                    pending.append((el, "interfaces", attrs["interfaces"], IDao))
                list(_children(child, ()))

    for owner, attr, raw, kind in pending:
        targets = []
        for text in raw.split():
            try:
                target = resolve_fragment(model, FragmentPath.parse(text))
            except FragmentSyntaxError as exc:
                raise DocumentError(str(exc)) from None
            if not isinstance(target, kind):
                raise UnresolvedPathError(f"{text} designates a {type(target).__name__}, expected {kind.__name__}")
            targets.append(target)
        if isinstance(getattr(owner, attr), list):
            getattr(owner, attr).extend(targets)
        elif len(targets) != 1:
            raise DocumentError(f"{attr!r} of {owner!r} takes exactly one reference, got {raw!r}")
        else:
            setattr(owner, attr, targets[0])
    return model.seal()


# -- files -----------------------------------------------------------------------


def model_kind(doc: str | bytes) -> str:
    """Return ``"pim"`` or ``"psm"`` according to the document's root element."""
    tag = _parse_xml(doc).tag
    if tag == PIM_ROOT:
        return "pim"
    if tag == PSM_ROOT:
        return "psm"
    raise DocumentError(f"unknown root element <{tag}>")


def load_pim(path: str | Path, strict: bool = True) -> UmlPackage:
    return parse_pim(Path(path).read_bytes(), strict=strict)


def load_psm(path: str | Path) -> CrudProjectPackage:
    return parse_psm(Path(path).read_bytes())


def load_model(path: str | Path) -> Model:
    data = Path(path).read_bytes()
    return parse_pim(data, strict=False) if model_kind(data) == "pim" else parse_psm(data)
