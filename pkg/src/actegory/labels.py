"""Canonical text encodings for derived elements, objects and arrows.

Every derived label is built from the labels of its parts, so equal
constructions print identically across runs.  Labels never contain
whitespace, which keeps them valid tokens of the text format.
"""

from __future__ import annotations

from typing import Iterable, Mapping


def pair(*parts: str) -> str:
    return "(" + ",".join(parts) + ")"


def func(mapping: Mapping[str, str] | Iterable[tuple[str, str]]) -> str:
    items = mapping.items() if isinstance(mapping, Mapping) else mapping
    return "<" + ";".join(f"{a}|{b}" for a, b in items) + ">"


def klass(representative: str) -> str:
    return "[" + representative + "]"


def ident(obj: str) -> str:
    return "id_" + obj


def family(components: Mapping[str, str]) -> str:
    """Label of a family indexed by objects (natural transformations, sections)."""
    return "{" + ";".join(f"{x}:{v}" for x, v in components.items()) + "}"
