"""XMI-style fragment paths: ``//@bPack/@serviceimpl.0``.

A path is a sequence of ``(feature, index)`` steps taken from the model root.
Single-valued containment features carry no index (``@bPack``); multi-valued
ones always do (``@serviceimpl.0``). The root itself has the empty path ``""``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DetachedElementError, FragmentSyntaxError, UnresolvedPathError
from .base import Element

_STEP = re.compile(r"@([A-Za-z_][A-Za-z0-9_]*)(?:\.(0|[1-9][0-9]*))?\Z")


@dataclass(frozen=True)
class FragmentPath:
    segments: tuple[tuple[str, int | None], ...] = ()

    @classmethod
    def parse(cls, text: str) -> FragmentPath:
        if text == "":
            return cls()
        if not text.startswith("//"):
            raise FragmentSyntaxError(f"fragment path must start with '//': {text!r}")
        segments = []
        for step in text[2:].split("/"):
            m = _STEP.match(step)
            if m is None:
                raise FragmentSyntaxError(f"bad step {step!r} in fragment path {text!r}")
            index = m.group(2)
            segments.append((m.group(1), None if index is None else int(index)))
        return cls(tuple(segments))

    def render(self) -> str:
        if not self.segments:
            return ""
        steps = (f"@{f}" if i is None else f"@{f}.{i}" for f, i in self.segments)
        return "//" + "/".join(steps)

    def __str__(self) -> str:
        return self.render()

    def child(self, feature: str, index: int | None = None) -> FragmentPath:
        return FragmentPath(self.segments + ((feature, index),))


def _as_path(path: FragmentPath | str) -> FragmentPath:
    return FragmentPath.parse(path) if isinstance(path, str) else path


def fragment_path_of(element: Element) -> FragmentPath:
    """Compute the path of ``element`` from its model root."""
    steps = []
    node = element
    while node.container is not None:
        parent, feat = node.container, node.containing_feature
        if feat.many:
            index = next((i for i, c in enumerate(getattr(parent, feat.attr)) if c is node), None)
            if index is None:
                raise DetachedElementError(f"{node!r} is no longer listed in {parent!r}.{feat.name}")
            steps.append((feat.name, index))
        else:
            if getattr(parent, feat.attr) is not node:
                raise DetachedElementError(f"{node!r} is no longer held by {parent!r}.{feat.name}")
            steps.append((feat.name, None))
        node = parent
    if not node.is_root:
        raise DetachedElementError(f"{element!r} is not contained in a model root")
    return FragmentPath(tuple(reversed(steps)))


def resolve_fragment(root: Element, path: FragmentPath | str) -> Element:
    """Follow ``path`` from ``root`` and return the element it designates."""
    path = _as_path(path)
    node = root
    for name, index in path.segments:
        try:
            feat = node.feature(name)
        except KeyError:
            raise UnresolvedPathError(
                f"{path}: {type(node).__name__} has no feature {name!r}"
            ) from None
        value = getattr(node, feat.attr)
        if feat.many:
            if index is None or index >= len(value):
                raise UnresolvedPathError(f"{path}: index {index} out of range for @{name}")
            node = value[index]
        else:
            if index is not None or value is None:
                raise UnresolvedPathError(f"{path}: @{name} is single-valued or unset")
            node = value
    return node


def path_index(root: Element) -> dict[int, FragmentPath]:
    """Map ``id(element)`` to its path for every element under ``root``, in one walk."""
    index = {id(root): FragmentPath()}
    stack = [(root, FragmentPath())]
    while stack:
        node, path = stack.pop()
        for feat, i, child in node.children():
            child_path = path.child(feat.name, i)
            index[id(child)] = child_path
            stack.append((child, child_path))
    return index
