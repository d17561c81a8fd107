"""Source meta-model: a simplified UML class diagram."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .base import Element, Feature

Direction = Literal["in", "out"]
DIRECTIONS = ("in", "out")


@dataclass(eq=False, repr=False)
class UmlParameter(Element):
    name: str
    type: str
    direction: Direction = "in"

    properties = ("type", "direction")


@dataclass(eq=False, repr=False)
class UmlOperation(Element):
    name: str
    parameters: list[UmlParameter] = field(default_factory=list)

    contains = (Feature("parameter", "parameters", True),)


@dataclass(eq=False, repr=False)
class UmlAttribute(Element):
    # ``type`` names a classifier of the owning package
    name: str
    type: str

    properties = ("type",)


@dataclass(eq=False, repr=False)
class UmlClass(Element):
    name: str
    attributes: list[UmlAttribute] = field(default_factory=list)
    operations: list[UmlOperation] = field(default_factory=list)

    contains = (
        Feature("attribute", "attributes", True),
        Feature("operation", "operations", True),
    )


@dataclass(eq=False, repr=False)
class UmlDataType(Element):
    name: str


@dataclass(eq=False, repr=False)
class UmlPackage(Element):
    name: str
    classes: list[UmlClass] = field(default_factory=list)
    datatypes: list[UmlDataType] = field(default_factory=list)

    contains = (
        Feature("class", "classes", True),
        Feature("datatype", "datatypes", True),
    )
    is_root = True

    def classifier_names(self) -> list[str]:
        return [c.name for c in self.classes] + [d.name for d in self.datatypes]
