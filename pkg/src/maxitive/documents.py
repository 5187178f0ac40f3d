"""TOML documents describing measures and densities.

A measure document::

    kind = "maxitive"            # or "additive", or "table"
    atoms = ["a", "b", "c"]

    [atom_values]
    a = "1/2"
    b = "1"
    c = "0"

A ``table`` document lists every subset instead, keyed by comma-joined
labels with ``""`` for the empty set::

    kind = "table"
    atoms = ["a", "b"]

    [table]
    "" = "0"
    "a" = "1"
    "b" = "1"
    "a,b" = "3"

A density document has ``atoms`` and a ``[values]`` table.  Values are
``"p/q"``, a bare nonnegative integer (string or TOML integer) or ``"inf"``.
"""

from __future__ import annotations

import re
import sys
from typing import Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .core import (
    AdditiveMeasure,
    MaxitiveMeasure,
    MeasureError,
    SetFunction,
    Space,
    UnknownAtom,
    make_space,
)
from .extrat import ExtRat, MalformedValue
from .integral import Density

__all__ = [
    "ParseError",
    "IncompleteTable",
    "UnknownAtom",
    "MalformedValue",
    "parse_measure",
    "parse_density",
    "dump_measure",
    "dump_density",
    "dump_table",
]

Measure = Union[SetFunction, MaxitiveMeasure, AdditiveMeasure]

KINDS = ("maxitive", "additive", "table")
_BARE_KEY = re.compile(r"^[A-Za-z0-9_-]+$")


class ParseError(MeasureError):
    pass


class IncompleteTable(MeasureError):
    pass


def _load(text: str) -> dict:
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"invalid document: {exc}") from None


def _value(raw, where: str) -> ExtRat:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise MalformedValue(f"{where}: expected 'p/q', an integer or 'inf', got {raw!r}")
    if isinstance(raw, int):
        if raw < 0:
            raise MalformedValue(f"{where}: negative value {raw}")
        return ExtRat(raw)
    try:
        return ExtRat(raw)
    except MalformedValue as exc:
        raise MalformedValue(f"{where}: {exc}") from None


def _space(doc: dict) -> Space:
    atoms = doc.get("atoms")
    if not isinstance(atoms, list) or not all(isinstance(a, str) for a in atoms):
        raise ParseError("field 'atoms': expected a list of strings")
    try:
        return make_space(atoms)
    except MeasureError as exc:
        raise type(exc)(f"field 'atoms': {exc}") from None


def _atom_table(doc: dict, key: str, space: Space) -> list[ExtRat]:
    table = doc.get(key)
    if not isinstance(table, dict):
        raise ParseError(f"field '{key}': expected a table of atom values")
    for label in table:
        if label not in space.atoms:
            raise UnknownAtom(f"field '{key}.{label}': unknown atom {label!r}")
    missing = [a for a in space.atoms if a not in table]
    if missing:
        raise ParseError(f"field '{key}': missing value for atom(s) {missing}")
    return [_value(table[a], f"field '{key}.{a}'") for a in space.atoms]


def parse_measure(text: str) -> Measure:
    """Parse a measure document.

    ``maxitive`` and ``additive`` documents build canonical measures;
    ``table`` documents build an unvalidated :class:`SetFunction`.
    """
    doc = _load(text)
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"field 'kind': expected one of {list(KINDS)}, got {kind!r}")
    space = _space(doc)
    if kind == "maxitive":
        return MaxitiveMeasure(space, _atom_table(doc, "atom_values", space))
    if kind == "additive":
        return AdditiveMeasure(space, _atom_table(doc, "atom_values", space))
    table = doc.get("table")
    if not isinstance(table, dict):
        raise ParseError("field 'table': expected a table keyed by sets")
    values: dict[int, ExtRat] = {}
    for key, raw in table.items():
        try:
            mask = space.parse_set(key)
        except UnknownAtom as exc:
            raise UnknownAtom(f"field 'table.{key!r}': {exc}") from None
        if mask in values:
            raise ParseError(f"field 'table.{key!r}': set {space.format_set(mask)!r} listed twice")
        values[mask] = _value(raw, f"field 'table.{key!r}'")
    missing = [b for b in range(space.size) if b not in values]
    if missing:
        names = ", ".join(repr(space.format_set(b)) for b in missing)
        raise IncompleteTable(f"field 'table': missing set(s) {names}")
    return SetFunction(space, [values[b] for b in range(space.size)])


def parse_density(text: str) -> Density:
    doc = _load(text)
    space = _space(doc)
    return Density(space, _atom_table(doc, "values", space))


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _key(s: str) -> str:
    return s if _BARE_KEY.match(s) else _quote(s)


def _atoms_line(space: Space) -> str:
    return "atoms = [" + ", ".join(_quote(a) for a in space.atoms) + "]"


def dump_measure(mu: Measure) -> str:
    if isinstance(mu, SetFunction):
        return dump_table(mu)
    kind = "maxitive" if isinstance(mu, MaxitiveMeasure) else "additive"
    lines = [f'kind = "{kind}"', _atoms_line(mu.space), "", "[atom_values]"]
    lines += [f"{_key(a)} = {_quote(str(v))}" for a, v in zip(mu.space.atoms, mu.atom_values)]
    return "\n".join(lines) + "\n"


def dump_table(f: SetFunction) -> str:
    lines = ['kind = "table"', _atoms_line(f.space), "", "[table]"]
    lines += [f"{_key(f.space.format_set(b))} = {_quote(str(v))}" for b, v in enumerate(f.table)]
    return "\n".join(lines) + "\n"


def dump_density(c: Density) -> str:
    lines = [_atoms_line(c.space), "", "[values]"]
    lines += [f"{_key(a)} = {_quote(str(v))}" for a, v in zip(c.space.atoms, c.values)]
    return "\n".join(lines) + "\n"
