"""The line-oriented structure-file format: parse, emit, load.

A file is a sequence of ``section: entries`` lines; ``#`` starts a comment and
blank lines are ignored.  The first declaration must be ``kind:`` (groupoid,
group_groupoid, group or morphism).  Declarations list whitespace-separated
tokens; maps list ``key=value`` entries and the product/op tables list
``x.y=z`` entries.  A section may be continued over any number of lines.

Identifiers may not contain whitespace, '#', '=' or '.'.  Every identifier an
entry references must be declared in the same file, except in morphism files,
whose maps refer to the two endpoint files named by ``from:`` and ``to:``.

Parsing is strict and every error carries its 1-based line number.  Emitting
is canonical (sorted entries, fixed wrapping), so parse(emit(s)) == s.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

from .core import FiniteGroupoid, Morphism
from .grouptable import GroupTable
from .overlay import GroupGroupoid
from .report import GroupoidError, InvalidInput

__all__ = [
    "ParseError",
    "StructureSyntaxError",
    "DuplicateDeclaration",
    "UnknownIdentifier",
    "MorphismSpec",
    "StructureFile",
    "parse_structure_file",
    "emit_structure_file",
    "load_structure_file",
    "load_morphism",
]

KINDS = ("groupoid", "group_groupoid", "group", "morphism")

_GROUPOID_SECTIONS = (
    "objects",
    "arrows",
    "source",
    "target",
    "unit",
    "inverse",
    "product",
)
_GG_SECTIONS = _GROUPOID_SECTIONS + (
    "arrow_group_op",
    "arrow_group_id",
    "arrow_group_inv",
    "object_group_op",
    "object_group_id",
    "object_group_inv",
)
SECTIONS = {
    "groupoid": _GROUPOID_SECTIONS,
    "group_groupoid": _GG_SECTIONS,
    "group": ("elements", "op", "id", "inv"),
    "morphism": ("from", "to", "f", "f0"),
}

# sections whose payload is a single path, taken verbatim to end of line
_PATH_SECTIONS = ("from", "to")


class ParseError(GroupoidError):
    """A problem in a structure file, located by 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class StructureSyntaxError(ParseError):
    pass


class DuplicateDeclaration(ParseError):
    pass


class UnknownIdentifier(ParseError):
    pass


@dataclass(frozen=True)
class MorphismSpec:
    """An unresolved morphism: maps plus the two file paths they refer to."""

    from_path: str
    to_path: str
    f: Mapping[str, str]
    f0: Mapping[str, str]


@dataclass(frozen=True)
class StructureFile:
    kind: str
    structure: FiniteGroupoid | GroupTable | GroupGroupoid | MorphismSpec


def _check_identifier(tok: str, line: int) -> str:
    if not tok or any(c in tok for c in "=.") or "#" in tok or any(c.isspace() for c in tok):
        raise StructureSyntaxError(f"bad identifier {tok!r}", line)
    return tok


def _scan(text: str):
    """Yield (line, section, payload) with comments and blanks stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise StructureSyntaxError("expected 'section: entries'", lineno)
        name, _, payload = line.partition(":")
        yield lineno, name.strip(), payload.strip()


def _declarations(entries, what: str) -> list[str]:
    seen: set[str] = set()
    out: list[str] = []
    for lineno, tok in entries:
        _check_identifier(tok, lineno)
        if tok in seen:
            raise DuplicateDeclaration(f"{what} '{tok}' declared twice", lineno)
        seen.add(tok)
        out.append(tok)
    return out


def _mapping(entries, keys: set[str], values: set[str] | None, what: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, tok in entries:
        if tok.count("=") != 1:
            raise StructureSyntaxError(f"expected 'key=value' in {what}, got {tok!r}", lineno)
        k, v = tok.split("=")
        if k not in keys:
            raise UnknownIdentifier(f"unknown identifier '{k}' in {what}", lineno)
        if values is not None and v not in values:
            raise UnknownIdentifier(f"unknown identifier '{v}' in {what}", lineno)
        if k in out:
            raise DuplicateDeclaration(f"{what} entry for '{k}' given twice", lineno)
        out[k] = v
    return out


def _pair_mapping(entries, domain: set[str], what: str) -> dict[tuple[str, str], str]:
    out: dict[tuple[str, str], str] = {}
    for lineno, tok in entries:
        if tok.count("=") != 1:
            raise StructureSyntaxError(f"expected 'x.y=z' in {what}, got {tok!r}", lineno)
        key, v = tok.split("=")
        if key.count(".") != 1:
            raise StructureSyntaxError(f"expected 'x.y=z' in {what}, got {tok!r}", lineno)
        x, y = key.split(".")
        for part in (x, y, v):
            if part not in domain:
                raise UnknownIdentifier(f"unknown identifier '{part}' in {what}", lineno)
        if (x, y) in out:
            raise DuplicateDeclaration(f"{what} entry for ({x},{y}) given twice", lineno)
        out[(x, y)] = v
    return out


def _single(entries, kind_line: int, what: str) -> str:
    if not entries:
        raise StructureSyntaxError(f"missing section '{what}'", kind_line)
    if len(entries) > 1:
        raise DuplicateDeclaration(f"section '{what}' given twice", entries[1][0])
    return entries[0][1]


def parse_structure_file(text: str) -> StructureFile:
    """Parse one structure file; raises a ParseError subclass on any defect."""
    kind: str | None = None
    kind_line = 1
    sections: dict[str, list[tuple[int, str]]] = {}
    for lineno, name, payload in _scan(text):
        if name == "kind":
            if kind is not None:
                raise DuplicateDeclaration("kind declared twice", lineno)
            if payload not in KINDS:
                raise StructureSyntaxError(f"unknown kind '{payload}'", lineno)
            kind = payload
            kind_line = lineno
            continue
        if kind is None:
            raise StructureSyntaxError("the first declaration must be 'kind:'", lineno)
        if name not in SECTIONS[kind]:
            raise StructureSyntaxError(f"unknown section '{name}' for kind {kind}", lineno)
        bucket = sections.setdefault(name, [])
        if name in _PATH_SECTIONS:
            bucket.append((lineno, payload))
        else:
            bucket.extend((lineno, tok) for tok in payload.split())
    if kind is None:
        raise StructureSyntaxError("missing 'kind:' declaration", 1)

    def need(name: str) -> list[tuple[int, str]]:
        entries = sections.get(name, [])
        if not entries and name in ("objects", "arrows", "elements"):
            raise StructureSyntaxError(f"section '{name}' is missing or empty", kind_line)
        return entries

    if kind in ("groupoid", "group_groupoid"):
        objects = set(_declarations(need("objects"), "object"))
        arrows = set(_declarations(need("arrows"), "arrow"))
        g = FiniteGroupoid(
            objects=frozenset(objects),
            arrows=frozenset(arrows),
            src=_mapping(need("source"), arrows, objects, "source"),
            tgt=_mapping(need("target"), arrows, objects, "target"),
            unit=_mapping(need("unit"), objects, arrows, "unit"),
            inv=_mapping(need("inverse"), arrows, arrows, "inverse"),
            prod=_pair_mapping(need("product"), arrows, "product"),
        )
        if kind == "groupoid":
            return StructureFile(kind, g)
        arrow_group = GroupTable(
            elements=frozenset(arrows),
            op=_pair_mapping(need("arrow_group_op"), arrows, "arrow_group_op"),
            identity=_check_identifier(
                _single(sections.get("arrow_group_id", []), kind_line, "arrow_group_id"),
                kind_line,
            ),
            inverse=_mapping(need("arrow_group_inv"), arrows, arrows, "arrow_group_inv"),
        )
        object_group = GroupTable(
            elements=frozenset(objects),
            op=_pair_mapping(need("object_group_op"), objects, "object_group_op"),
            identity=_check_identifier(
                _single(sections.get("object_group_id", []), kind_line, "object_group_id"),
                kind_line,
            ),
            inverse=_mapping(need("object_group_inv"), objects, objects, "object_group_inv"),
        )
        return StructureFile(kind, GroupGroupoid(g, arrow_group, object_group))

    if kind == "group":
        elements = set(_declarations(need("elements"), "element"))
        table = GroupTable(
            elements=frozenset(elements),
            op=_pair_mapping(need("op"), elements, "op"),
            identity=_check_identifier(
                _single(sections.get("id", []), kind_line, "id"), kind_line
            ),
            inverse=_mapping(need("inv"), elements, elements, "inv"),
        )
        return StructureFile(kind, table)

    # morphism: map entries cannot be resolved until the endpoints are loaded
    spec = MorphismSpec(
        from_path=_single(sections.get("from", []), kind_line, "from"),
        to_path=_single(sections.get("to", []), kind_line, "to"),
        f=_raw_mapping(sections.get("f", []), "f"),
        f0=_raw_mapping(sections.get("f0", []), "f0"),
    )
    return StructureFile(kind, spec)


def _raw_mapping(entries, what: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, tok in entries:
        if tok.count("=") != 1:
            raise StructureSyntaxError(f"expected 'key=value' in {what}, got {tok!r}", lineno)
        k, v = tok.split("=")
        _check_identifier(k, lineno)
        _check_identifier(v, lineno)
        if k in out:
            raise DuplicateDeclaration(f"{what} entry for '{k}' given twice", lineno)
        out[k] = v
    return out


def _emit_token(tok: str) -> str:
    if not tok or any(c in tok for c in "=.#") or any(c.isspace() for c in tok):
        raise InvalidInput(f"identifier {tok!r} cannot be written to a structure file")
    return tok


def _wrap(name: str, entries: list[str], per_line: int) -> list[str]:
    lines = []
    for i in range(0, len(entries), per_line):
        lines.append(f"{name}: " + " ".join(entries[i : i + per_line]))
    return lines


def _emit_map(name: str, mapping: Mapping[str, str], per_line: int = 6) -> list[str]:
    entries = [
        f"{_emit_token(k)}={_emit_token(v)}" for k, v in sorted(mapping.items())
    ]
    return _wrap(name, entries, per_line)


def _emit_pairs(
    name: str, mapping: Mapping[tuple[str, str], str], per_line: int = 4
) -> list[str]:
    entries = [
        f"{_emit_token(x)}.{_emit_token(y)}={_emit_token(v)}"
        for (x, y), v in sorted(mapping.items())
    ]
    return _wrap(name, entries, per_line)


def _emit_groupoid_sections(g: FiniteGroupoid) -> list[str]:
    lines = _wrap("objects", sorted(_emit_token(u) for u in g.objects), 12)
    lines += _wrap("arrows", sorted(_emit_token(x) for x in g.arrows), 12)
    lines += _emit_map("source", g.src)
    lines += _emit_map("target", g.tgt)
    lines += _emit_map("unit", g.unit)
    lines += _emit_map("inverse", g.inv)
    lines += _emit_pairs("product", g.prod)
    return lines


def emit_structure_file(
    structure, *, from_path: str | None = None, to_path: str | None = None
) -> str:
    """Canonical text for a structure; inverse of parse_structure_file."""
    if isinstance(structure, FiniteGroupoid):
        lines = ["kind: groupoid"] + _emit_groupoid_sections(structure)
    elif isinstance(structure, GroupGroupoid):
        lines = ["kind: group_groupoid"] + _emit_groupoid_sections(structure.base)
        lines += _emit_pairs("arrow_group_op", structure.arrow_group.op)
        lines.append(f"arrow_group_id: {_emit_token(structure.arrow_group.identity)}")
        lines += _emit_map("arrow_group_inv", structure.arrow_group.inverse)
        lines += _emit_pairs("object_group_op", structure.object_group.op)
        lines.append(f"object_group_id: {_emit_token(structure.object_group.identity)}")
        lines += _emit_map("object_group_inv", structure.object_group.inverse)
    elif isinstance(structure, GroupTable):
        lines = ["kind: group"]
        lines += _wrap("elements", sorted(_emit_token(x) for x in structure.elements), 12)
        lines += _emit_pairs("op", structure.op)
        lines.append(f"id: {_emit_token(structure.identity)}")
        lines += _emit_map("inv", structure.inverse)
    elif isinstance(structure, (Morphism, MorphismSpec)):
        if isinstance(structure, Morphism):
            if from_path is None or to_path is None:
                raise InvalidInput("emitting a morphism needs from_path and to_path")
        else:
            from_path = structure.from_path
            to_path = structure.to_path
        lines = ["kind: morphism", f"from: {from_path}", f"to: {to_path}"]
        lines += _emit_map("f", structure.f)
        lines += _emit_map("f0", structure.f0)
    else:
        raise InvalidInput(f"cannot emit {type(structure).__name__} as a structure file")
    return "\n".join(lines) + "\n"


def load_structure_file(path: str) -> StructureFile:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_structure_file(handle.read())


def load_morphism(path: str) -> tuple[Morphism, StructureFile, StructureFile]:
    """Load a morphism file and both endpoint files (paths relative to it)."""
    sf = load_structure_file(path)
    if sf.kind != "morphism":
        raise InvalidInput(f"{path} is not a morphism file")
    spec = sf.structure
    base_dir = os.path.dirname(os.path.abspath(path))
    source = load_structure_file(os.path.join(base_dir, spec.from_path))
    target = load_structure_file(os.path.join(base_dir, spec.to_path))
    endpoints = []
    for end, which in ((source, "from"), (target, "to")):
        if end.kind == "groupoid":
            endpoints.append(end.structure)
        elif end.kind == "group_groupoid":
            endpoints.append(end.structure.base)
        else:
            raise InvalidInput(f"'{which}' endpoint must be a groupoid or group_groupoid")
    m = Morphism(
        source=endpoints[0], target=endpoints[1], f=dict(spec.f), f0=dict(spec.f0)
    )
    return m, source, target
