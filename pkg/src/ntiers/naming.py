"""Naming laws for generated elements.

All generated names are plain concatenations of source names; casing comes
from the input model, except that operation names are capitalized when they
prefix a page, action or form name.
"""

from __future__ import annotations

import re

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
CLASS_NAME = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")

# operations that get an input page, a form and an extra "End" action
FORM_OPERATIONS = ("create", "update")


def capitalize(text: str) -> str:
    # str.capitalize() would lowercase the tail
    return text[:1].upper() + text[1:]


def is_remove(operation: str) -> bool:
    return operation.lower() == "remove"


def has_form(operation: str) -> bool:
    return operation.lower() in FORM_OPERATIONS


def pojo_name(cls: str) -> str:
    return cls


def idao_name(cls: str) -> str:
    return "I" + cls + "Dao"


def daoimpl_name(cls: str) -> str:
    return cls + "DaoImpl"


def dto_name(cls: str) -> str:
    return cls + "DTO"


def iservice_name(cls: str) -> str:
    return "I" + cls + "Service"


def serviceimpl_name(cls: str) -> str:
    return cls + "ServiceImpl"


def page_name(operation: str, cls: str) -> str:
    return capitalize(operation) + cls + "Page.jsp"


def display_page_name(cls: str) -> str:
    return page_name("display", cls)


def action_name(operation: str, cls: str) -> str:
    return capitalize(operation) + cls + "Action"


def end_action_name(operation: str, cls: str) -> str:
    return capitalize(operation) + cls + "EndAction"


def form_name(operation: str, cls: str) -> str:
    return capitalize(operation) + cls + "Form"
