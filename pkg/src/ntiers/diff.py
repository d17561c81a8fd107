"""Structural comparison of two models of the same kind.

Two models are structurally equal when they have the same containment tree,
the same element names and properties, and cross references that land on
corresponding elements. Children are paired by position, or, with
``order_sensitive=False``, by name first and then by position among the
leftovers (a leftover pair counts as a rename).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import KindMismatchError
from .metamodel import CrudProjectPackage, Element, FragmentPath, UmlPackage

KINDS = ("added", "removed", "renamed", "relinked", "changed")


@dataclass(frozen=True)
class DiffEntry:
    path: str
    kind: str
    detail: str

    def format(self) -> str:
        return f"{self.kind}\t{self.path or '/'}\t{self.detail}"


@dataclass
class StructuralDiff:
    entries: list[DiffEntry] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.entries

    def of_kind(self, kind: str) -> list[DiffEntry]:
        return [e for e in self.entries if e.kind == kind]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[DiffEntry]:
        return iter(self.entries)

    def format(self) -> str:
        return "\n".join(e.format() for e in self.entries)


def _label(node: Element) -> str:
    name = getattr(node, "name", None)
    return type(node).__name__ if name is None else f"{type(node).__name__} {name!r}"


def _pair(xs: list[Element], ys: list[Element], order_sensitive: bool):
    """Yield ``(x, y)`` pairs, with ``None`` on the side that has no counterpart."""
    if order_sensitive:
        for i in range(max(len(xs), len(ys))):
            yield (xs[i] if i < len(xs) else None), (ys[i] if i < len(ys) else None)
        return
    by_name: dict[str, list[Element]] = {}
    for y in ys:
        by_name.setdefault(getattr(y, "name", None), []).append(y)
    left_x, used = [], set()
    for x in xs:
        candidates = by_name.get(getattr(x, "name", None))
        if candidates:
            y = candidates.pop(0)
            used.add(id(y))
            yield x, y
        else:
            left_x.append(x)
    left_y = [y for y in ys if id(y) not in used]
    yield from _pair(left_x, left_y, True)


def _prop_value(value, order_sensitive: bool):
    if not order_sensitive and isinstance(value, tuple):
        return sorted(repr(v) for v in value)
    return value


class _Differ:
    def __init__(self, order_sensitive: bool) -> None:
        self.order_sensitive = order_sensitive
        self.entries: list[DiffEntry] = []
        self.corr: dict[int, Element] = {}
        self.pairs: list[tuple[Element, Element, FragmentPath]] = []

    def emit(self, path: FragmentPath, kind: str, detail: str) -> None:
        self.entries.append(DiffEntry(path.render(), kind, detail))

    def match(self, a: Element, b: Element, path: FragmentPath) -> None:
        self.corr[id(a)] = b
        self.pairs.append((a, b, path))
        if getattr(a, "name", None) != getattr(b, "name", None):
            self.emit(path, "renamed", f"{a.name!r} -> {b.name!r}")
        for prop in a.properties:
            va, vb = getattr(a, prop), getattr(b, prop)
            if _prop_value(va, self.order_sensitive) != _prop_value(vb, self.order_sensitive):
                self.emit(path, "changed", f"{prop}: {va!r} -> {vb!r}")
        for feat in a.contains:
            if feat.many:
                xs, ys = list(getattr(a, feat.attr)), list(getattr(b, feat.attr))
                positions_a = {id(x): i for i, x in enumerate(xs)}
                positions_b = {id(y): i for i, y in enumerate(ys)}
                for x, y in _pair(xs, ys, self.order_sensitive):
                    if x is None:
                        self.emit(path.child(feat.name, positions_b[id(y)]), "added", _label(y))
                    elif y is None:
                        self.emit(path.child(feat.name, positions_a[id(x)]), "removed", _label(x))
                    else:
                        self.match(x, y, path.child(feat.name, positions_a[id(x)]))
            else:
                x, y = getattr(a, feat.attr), getattr(b, feat.attr)
                if x is None and y is None:
                    continue
                if x is None:
                    self.emit(path.child(feat.name), "added", _label(y))
                elif y is None:
                    self.emit(path.child(feat.name), "removed", _label(x))
                else:
                    self.match(x, y, path.child(feat.name))

    def compare_links(self) -> None:
        for a, b, path in self.pairs:
            for feat in a.references:
                ta, tb = getattr(a, feat.attr), getattr(b, feat.attr)
                ta = list(ta) if feat.many else ([] if ta is None else [ta])
                tb = list(tb) if feat.many else ([] if tb is None else [tb])
                mapped = [self.corr.get(id(t)) for t in ta]
                if self.order_sensitive:
                    same = len(mapped) == len(tb) and all(m is t for m, t in zip(mapped, tb))
                else:
                    same = sorted(id(m) for m in mapped) == sorted(id(t) for t in tb)
                if not same:
                    before = [getattr(t, "name", "?") for t in ta]
                    after = [getattr(t, "name", "?") for t in tb]
                    self.emit(path, "relinked", f"{feat.name}: {before} -> {after}")


def diff(a: UmlPackage | CrudProjectPackage, b: UmlPackage | CrudProjectPackage, order_sensitive: bool = True) -> StructuralDiff:
    """Compare two models; an empty result means they are structurally equal."""
    kinds = (UmlPackage, CrudProjectPackage)
    if not any(isinstance(a, k) and isinstance(b, k) for k in kinds):
        raise KindMismatchError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    differ = _Differ(order_sensitive)
    differ.match(a, b, FragmentPath())
    differ.compare_links()
    return StructuralDiff(differ.entries)


def structurally_equal(a, b, order_sensitive: bool = True) -> bool:
    return diff(a, b, order_sensitive).empty
