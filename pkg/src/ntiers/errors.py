"""Exception types raised by the model compiler.

Every error carries a short machine-readable ``code`` (for example
``unresolved-path``) in addition to its message.
"""

from __future__ import annotations


class NtiersError(Exception):
    code = "error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class FragmentSyntaxError(NtiersError, ValueError):
    code = "invalid-path"


class UnresolvedPathError(NtiersError, LookupError):
    code = "unresolved-path"


class DetachedElementError(NtiersError):
    code = "detached-element"


class SealedModelError(NtiersError, AttributeError):
    code = "sealed-model"


class DocumentError(NtiersError):
    """Raised while reading a document; ``code`` is ``xml-malformed`` or ``schema-violation``."""

    code = "schema-violation"


class ValidationFailed(NtiersError):
    """A model failed validation. The full report is kept on ``report``."""

    def __init__(self, message: str, report, code: str = "validation-failed"):
        super().__init__(message, code)
        self.report = report


class KindMismatchError(NtiersError, TypeError):
    code = "kind-mismatch"


class RuleError(NtiersError):
    """A transformation rule could not be applied (``missing-interface``, ``inconsistent-view``)."""


class TemplateError(NtiersError):
    code = "template-error"


class ScaffoldIOError(NtiersError, OSError):
    code = "io-failure"
