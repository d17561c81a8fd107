"""Stub file emission from a target model.

Each templated element becomes one text file, laid out like the model:
``dao/`` for pojos, dao interfaces and implementations, ``business/`` for
services, implementations and DTOs, ``view/`` for JSP pages, plus one
``actionmapping.config.txt`` listing every action with its forward and form.

Templates use ``str.format`` placeholders. Every kind can use ``{name}``,
``{package}``, ``{attributes}``, ``{methods}``, ``{interface}`` and
``{actions}``; a placeholder outside that set is a :class:`TemplateError`.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Mapping

from .errors import ScaffoldIOError, TemplateError, ValidationFailed
from .metamodel import CrudProjectPackage, Element, fragment_path_of, validate_psm

KINDS = ("pojo", "dao", "daoimpl", "dto", "service", "serviceimpl", "jsp", "config")
PLACEHOLDERS = frozenset({"name", "package", "attributes", "methods", "interface", "actions"})
SUBDIRS = ("dao", "business", "view")
CONFIG_FILE = "actionmapping.config.txt"

DEFAULT_TEMPLATES = {
    "pojo": "# package {package}\npojo {name}\n# attributes:\n{attributes}\n",
    "dao": "# package {package}\ninterface {name}\n# methods:\n{methods}\n",
    "daoimpl": "# package {package}\nclass {name} implements {interface}\n# methods:\n{methods}\n",
    "dto": "# package {package}\ndto {name}\n# attributes:\n{attributes}\n",
    "service": "# package {package}\ninterface {name}\n# methods:\n{methods}\n",
    "serviceimpl": "# package {package}\nclass {name} implements {interface}\n# methods:\n{methods}\n",
    "jsp": "<%-- {package}: {name} --%>\n<html>\n<body>\n<h1>{name}</h1>\n</body>\n</html>\n",
    "config": "# action mapping of {name} ({package})\n{actions}\n",
}


def _placeholders(template: str) -> set[str]:
    return {f for _, f, _, _ in string.Formatter().parse(template) if f is not None}


@dataclass
class TemplateSet:
    templates: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_TEMPLATES))

    def __post_init__(self) -> None:
        missing = [k for k in KINDS if k not in self.templates]
        if missing:
            raise TemplateError(f"no template for kind(s) {missing}")
        for kind, text in self.templates.items():
            if kind not in KINDS:
                raise TemplateError(f"unknown template kind {kind!r}")
            try:
                unknown = _placeholders(text) - PLACEHOLDERS
            except ValueError as exc:
                raise TemplateError(f"template for kind {kind!r} is malformed: {exc}") from None
            if unknown:
                raise TemplateError(f"template for kind {kind!r} uses unresolvable placeholder(s) {sorted(unknown)}")

    @classmethod
    def from_directory(cls, directory: str | Path) -> TemplateSet:
        """Defaults overridden by ``<kind>.tmpl`` files found in ``directory``."""
        directory = Path(directory)
        if not directory.is_dir():
            raise ScaffoldIOError(f"template directory {directory} does not exist")
        templates = dict(DEFAULT_TEMPLATES)
        for path in sorted(directory.glob("*.tmpl")):
            templates[path.stem] = path.read_text(encoding="utf-8")
        return cls(templates)

    def render(self, kind: str, values: Mapping[str, str]) -> str:
        return self.templates[kind].format_map({k: values.get(k, "") for k in PLACEHOLDERS})


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    source: str
    length: int


@dataclass
class ScaffoldManifest:
    entries: list[ManifestEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ManifestEntry]:
        return iter(self.entries)

    def dumps(self) -> str:
        return "".join(f"{e.path}\t{e.source or '/'}\t{e.length}\n" for e in self.entries)

    @classmethod
    def loads(cls, text: str) -> ScaffoldManifest:
        entries = []
        for line in text.splitlines():
            path, source, length = line.split("\t")
            entries.append(ManifestEntry(path, "" if source == "/" else source, int(length)))
        return cls(entries)


def _attributes(attrs) -> str:
    return "\n".join(f"#   {a.name}: {a.type}" for a in attrs) or "#   (none)"


def _methods(methods) -> str:
    lines = []
    for m in methods:
        params = ", ".join(f"{p.direction} {p.name}: {p.type}" for p in m.parameters)
        lines.append(f"#   {m.name}({params})")
    return "\n".join(lines) or "#   (none)"


def _actions(psm: CrudProjectPackage) -> str:
    lines = []
    for action in psm.actions:
        line = f"action {action.name}"
        if action.forward is not None:
            line += f" forward={action.forward.target.name}"
        if action.form is not None:
            line += f" form={action.form.name}"
        lines.append(line)
    for form in psm.forms:
        lines.append(f"form {form.name} input={form.input.name} attribute={form.attribute.name}")
    return "\n".join(lines) or "# (no actions)"


def _plan(psm: CrudProjectPackage) -> Iterator[tuple[str, str, Element, dict[str, str]]]:
    """Yield ``(kind, relative path, element, placeholder values)`` for every file."""
    dp, bp = psm.dao_package, psm.business_package
    vp = psm.ui_package.view_package
    for pojo in dp.pojos:
        yield "pojo", f"dao/{pojo.name}.pojo.txt", pojo, {"name": pojo.name, "package": dp.name, "attributes": _attributes(pojo.attributes)}
    for dao in dp.daos:
        yield "dao", f"dao/{dao.name}.dao.txt", dao, {"name": dao.name, "package": dp.name, "methods": _methods(dao.methods)}
    for impl in dp.daoimpls:
        methods = [m for i in impl.interfaces for m in i.methods]
        yield "daoimpl", f"dao/{impl.name}.daoimpl.txt", impl, {
            "name": impl.name, "package": dp.name, "methods": _methods(methods),
            "interface": ", ".join(i.name for i in impl.interfaces),
        }
    for dto in bp.dtos:
        yield "dto", f"business/{dto.name}.dto.txt", dto, {"name": dto.name, "package": bp.name, "attributes": _attributes(dto.attributes)}
    for service in bp.services:
        yield "service", f"business/{service.name}.service.txt", service, {"name": service.name, "package": bp.name, "methods": _methods(service.methods)}
    for impl in bp.serviceimpls:
        methods = [m for i in impl.interfaces for m in i.methods]
        yield "serviceimpl", f"business/{impl.name}.serviceimpl.txt", impl, {
            "name": impl.name, "package": bp.name, "methods": _methods(methods),
            "interface": ", ".join(i.name for i in impl.interfaces),
        }
    for page in vp.pages:
        yield "jsp", f"view/{page.name}", page, {"name": page.name, "package": vp.name}
    cp = psm.ui_package.controller_package
    yield "config", CONFIG_FILE, cp.action_mapping, {"name": psm.name, "package": cp.name, "actions": _actions(psm)}


def emit_scaffold(psm: CrudProjectPackage, templates: TemplateSet | None, out_dir: str | Path) -> ScaffoldManifest:
    """Write one stub per templated element below ``out_dir`` and return the manifest.

    All files are rendered before anything is written, so a template error
    leaves ``out_dir`` untouched. Re-running on the same model rewrites
    identical bytes.
    """
    report = validate_psm(psm)
    if not report.ok:
        raise ValidationFailed(f"target model {psm.name!r} is not valid", report, code="invalid-model")
    templates = templates or TemplateSet()
    rendered = []
    for kind, rel, element, values in _plan(psm):
        try:
            data = templates.render(kind, values).encode("utf-8")
        except (KeyError, ValueError, IndexError) as exc:
            raise TemplateError(f"template for kind {kind!r} failed: {exc}") from None
        rendered.append((rel, fragment_path_of(element).render(), data))

    out = Path(out_dir)
    manifest = ScaffoldManifest()
    try:
        for sub in SUBDIRS:
            (out / sub).mkdir(parents=True, exist_ok=True)
        for rel, source, data in rendered:
            (out / rel).write_bytes(data)
            manifest.entries.append(ManifestEntry(rel, source, len(data)))
    except OSError as exc:
        raise ScaffoldIOError(f"cannot write scaffold to {out}: {exc}") from None
    return manifest
