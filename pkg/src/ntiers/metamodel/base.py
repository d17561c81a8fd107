"""Containment-aware model elements.

Concrete element classes are plain dataclasses (``eq=False``, so identity is
object identity) that describe their own shape through three class-level
tables:

``contains``
    containment features as ``Feature(name, attr, many)``; ``name`` is the
    serialization name used in fragment paths (``@pojo.0``).
``references``
    non-containment cross references as ``Feature(name, attr, many)``;
    ``name`` is the XML attribute the reference is written to.
``properties``
    scalar attributes compared by the structural diff, besides ``name``.

Children passed to the constructor or linked with :meth:`Element.add` get a
back pointer to their container, which is what makes fragment paths
computable. A model is mutable until :meth:`Element.seal` is called on its
root; after that, lists become tuples and attribute assignment raises.
"""

from __future__ import annotations

import copy
from typing import Any, ClassVar, Iterator, NamedTuple

from ..errors import NtiersError, SealedModelError


class Feature(NamedTuple):
    name: str
    attr: str
    many: bool


class Element:
    contains: ClassVar[tuple[Feature, ...]] = ()
    references: ClassVar[tuple[Feature, ...]] = ()
    properties: ClassVar[tuple[str, ...]] = ()
    is_root: ClassVar[bool] = False

    _sealed = False
    _parent: Element | None = None
    _feature: Feature | None = None

    def __post_init__(self) -> None:
        for prop in self.properties:
            if isinstance(getattr(self, prop), list):
                object.__setattr__(self, prop, tuple(getattr(self, prop)))
        for feat in self.contains:
            value = getattr(self, feat.attr)
            if feat.many:
                value = list(value)
                object.__setattr__(self, feat.attr, value)
                for child in value:
                    self._adopt(feat, child)
            elif value is not None:
                self._adopt(feat, value)

    def __setattr__(self, key: str, value: Any) -> None:
        if self._sealed:
            raise SealedModelError(f"cannot set {key!r} on sealed {type(self).__name__}")
        object.__setattr__(self, key, value)

    def _adopt(self, feat: Feature, child: Element) -> None:
        if child._parent is not None and child._parent is not self:
            raise NtiersError(f"{child!r} is already contained in {child._parent!r}")
        object.__setattr__(child, "_parent", self)
        object.__setattr__(child, "_feature", feat)

    def feature(self, name: str) -> Feature:
        for feat in self.contains:
            if feat.name == name:
                return feat
        raise KeyError(name)

    def add(self, name: str, child: Element) -> Element:
        """Link ``child`` under containment feature ``name`` and return it."""
        if self._sealed:
            raise SealedModelError(f"cannot add to sealed {type(self).__name__}")
        feat = self.feature(name)
        self._adopt(feat, child)
        if feat.many:
            getattr(self, feat.attr).append(child)
        else:
            object.__setattr__(self, feat.attr, child)
        return child

    @property
    def container(self) -> Element | None:
        return self._parent

    @property
    def containing_feature(self) -> Feature | None:
        return self._feature

    @property
    def root(self) -> Element:
        node = self
        while node._parent is not None:
            node = node._parent
        return node

    @property
    def sealed(self) -> bool:
        return self._sealed

    def children(self) -> Iterator[tuple[Feature, int | None, Element]]:
        for feat in self.contains:
            value = getattr(self, feat.attr)
            if feat.many:
                for i, child in enumerate(value):
                    yield feat, i, child
            elif value is not None:
                yield feat, None, value

    def walk(self) -> Iterator[Element]:
        """Yield this element and every contained element, depth first, in containment order."""
        yield self
        for _, _, child in self.children():
            yield from child.walk()

    def seal(self) -> Element:
        for node in self.walk():
            for feat in node.contains:
                if feat.many:
                    object.__setattr__(node, feat.attr, tuple(getattr(node, feat.attr)))
            for feat in node.references:
                if feat.many:
                    object.__setattr__(node, feat.attr, tuple(getattr(node, feat.attr)))
            object.__setattr__(node, "_sealed", True)
        return self

    def copy(self) -> Element:
        """Return an unsealed deep copy of the model rooted here."""
        if self._parent is not None:
            raise NtiersError("copy() is only defined on a model root")
        dup = copy.deepcopy(self)
        for node in dup.walk():
            for feat in node.contains + node.references:
                if feat.many:
                    object.__setattr__(node, feat.attr, list(getattr(node, feat.attr)))
            object.__setattr__(node, "_sealed", False)
        return dup

    def __repr__(self) -> str:
        name = getattr(self, "name", None)
        return f"<{type(self).__name__} {name!r}>" if name is not None else f"<{type(self).__name__}>"
