"""Bundled example models."""

from importlib.resources import files


def laboratory_pim_path():
    """Path of the laboratory module source model (four CRUD classes)."""
    return files(__name__) / "laboratoire.xml"


def laboratory_pim_text() -> str:
    return laboratory_pim_path().read_text(encoding="utf-8")
