"""Shared exception types.

Law violations carry structured witnesses so callers can render them;
everything else is a plain typed error.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class BackendMismatch(TypeError):
    """Operands live in different backends (fhilb vs rel)."""


class CompositionTypeError(TypeError):
    """Domain/codomain objects do not line up; message names both refs."""


class ResourceLimit(RuntimeError):
    """An enumeration exceeded its configured cap."""


class ParseError(ValueError):
    """A document could not be decoded into the data model."""


@dataclass(frozen=True)
class Violation:
    """One broken law with a concrete witness.

    witness is a tuple of plain values (names, indices, small tuples) so it
    can be serialized and re-checked.
    """

    law: str
    witness: tuple = ()
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"law": self.law, "witness": list(self.witness), "detail": self.detail}

    @classmethod
    def from_dict(cls, doc: dict) -> "Violation":
        def freeze(x):
            return tuple(freeze(y) for y in x) if isinstance(x, list) else x

        return cls(doc["law"], freeze(doc.get("witness", [])), doc.get("detail", ""))


class LawViolation(Exception):
    """Raised when validated structure breaks its laws; carries witnesses."""

    def __init__(self, message: str, violations: list[Violation] | None = None):
        super().__init__(message)
        self.violations: list[Violation] = list(violations or [])
