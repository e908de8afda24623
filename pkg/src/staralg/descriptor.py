"""Plain-text algebra descriptors.

One statement per line, ``#`` starts a comment::

    name: quaternion
    dim: 4
    field: REAL              # or COMPLEX
    conjugation: yes         # optional
    norms: 1 1 1 1           # optional, positive numbers
    c 1 2 3 = 1              # e_1 * e_2 = 1 * e_3 (+ other c lines)
    map: 4 4 complex antilinear   # optional map header: rows cols [real|complex] [antilinear]
    m 0 0 = 1                # map entry row col = value

Indices are 0-based.  Unlisted constants and map entries are zero.  Values
use the scalar syntax ``p``, ``p/q``, ``p/q+r/si``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .algebra import Field, StructureConstants
from .maps import Basis, MapMatrix
from .scalars import format_scalar, parse_scalar


class DescriptorError(ValueError):
    """Parse failure with a 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


@dataclass(frozen=True)
class MapDescriptor:
    rows: int
    cols: int
    basis: Basis = Basis.REAL
    antilinear: bool = False
    entries: tuple = ()

    def matrix(self) -> MapMatrix:
        grid = [[0] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries:
            grid[i][j] = v
        return MapMatrix(grid, self.basis, self.antilinear)


@dataclass(frozen=True)
class AlgebraDescriptor:
    name: str = ""
    dim: Optional[int] = None
    field: Field = Field.REAL
    constants: tuple = ()
    conjugation: bool = False
    norms: Optional[tuple] = None
    map: Optional[MapDescriptor] = None

    def algebra(self) -> StructureConstants:
        if self.dim is None:
            raise ValueError(f"descriptor {self.name!r} defines no algebra")
        return StructureConstants.from_entries(self.dim, self.constants, self.field)


_STATEMENT = re.compile(r"^(?P<key>[a-z_]+)\s*:\s*(?P<value>.*)$")
_TOKEN = re.compile(r"\S+")
_YES = {"yes": True, "true": True, "1": True, "no": False, "false": False, "0": False}


def _tokens(text: str):
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]


def _parse_index(tok: str, col: int, bound: int, lineno: int) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise DescriptorError(f"index {tok!r} is not a non-negative integer", lineno, col)
    idx = int(tok)
    if idx >= bound:
        raise DescriptorError(f"index {idx} out of range (must be < {bound})", lineno, col)
    return idx


def parse_descriptor(text: str) -> AlgebraDescriptor:
    name = ""
    dim = None
    fld = Field.REAL
    conjugation = False
    norms = None
    constants: dict = {}
    map_header = None
    map_entries: dict = {}
    seen_values = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        toks = _tokens(line)
        head = toks[0][0]

        if head in ("c", "m"):
            if "=" not in body:
                raise DescriptorError("expected '=' in entry", lineno, len(line) + 1)
            lhs, rhs = line.split("=", 1)
            idx_toks = _tokens(lhs)[1:]
            value_col = len(lhs) + 2 + (len(rhs) - len(rhs.lstrip()))
            if head == "c":
                if dim is None:
                    raise DescriptorError("'dim:' must precede constants", lineno, indent + 1)
                want, bound = 3, (dim,) * 3
            else:
                if map_header is None:
                    raise DescriptorError("'map:' must precede map entries", lineno, indent + 1)
                want, bound = 2, map_header[:2]
            if len(idx_toks) != want:
                raise DescriptorError(f"expected {want} indices", lineno, indent + 1)
            key = tuple(_parse_index(t, c, b, lineno) for (t, c), b in zip(idx_toks, bound))
            try:
                value = parse_scalar(rhs, complex_allowed=True)
            except ValueError as exc:
                raise DescriptorError(f"malformed value: {exc}", lineno, value_col) from None
            complex_ok = fld is Field.COMPLEX if head == "c" else map_header[2] is Basis.COMPLEX
            if getattr(value, "im", 0) and not complex_ok:
                raise DescriptorError("complex value where a real one is required", lineno, value_col)
            target = constants if head == "c" else map_entries
            if key in target:
                raise DescriptorError(f"duplicate entry {key}", lineno, indent + 1)
            target[key] = value
            seen_values = True
            continue

        m = _STATEMENT.match(body)
        if m is None:
            raise DescriptorError(f"unrecognised statement {head!r}", lineno, indent + 1)
        key, value = m.group("key"), m.group("value").strip()
        after = line.split(":", 1)[1]
        value_col = line.index(":") + 2 + len(after) - len(after.lstrip())
        if key == "name":
            name = value
        elif key == "dim":
            if seen_values or dim is not None:
                raise DescriptorError("'dim:' must appear once, before any entries", lineno, indent + 1)
            if not re.fullmatch(r"\d+", value) or int(value) == 0:
                raise DescriptorError(f"dim must be a positive integer, got {value!r}", lineno, value_col)
            dim = int(value)
        elif key == "field":
            if seen_values:
                raise DescriptorError("'field:' must precede entries", lineno, indent + 1)
            try:
                fld = Field[value.upper()]
            except KeyError:
                raise DescriptorError(f"field must be REAL or COMPLEX, got {value!r}", lineno, value_col) from None
        elif key == "conjugation":
            if value.lower() not in _YES:
                raise DescriptorError(f"expected yes/no, got {value!r}", lineno, value_col)
            conjugation = _YES[value.lower()]
        elif key == "norms":
            try:
                norms = tuple(float(v) for v in value.split())
            except ValueError:
                raise DescriptorError(f"malformed norms {value!r}", lineno, value_col) from None
            if any(not v > 0 for v in norms):
                raise DescriptorError("norms must be positive", lineno, value_col)
        elif key == "map":
            parts = value.split()
            if len(parts) < 2 or not all(re.fullmatch(r"[1-9]\d*", p) for p in parts[:2]):
                raise DescriptorError("map header is 'map: rows cols [real|complex] [antilinear]'", lineno, value_col)
            basis, anti = Basis.REAL, False
            for opt in parts[2:]:
                if opt == "real":
                    basis = Basis.REAL
                elif opt == "complex":
                    basis = Basis.COMPLEX
                elif opt == "antilinear":
                    anti = True
                else:
                    raise DescriptorError(f"unknown map option {opt!r}", lineno, value_col)
            if anti and basis is Basis.REAL:
                raise DescriptorError("antilinear maps need a complex basis", lineno, value_col)
            map_header = (int(parts[0]), int(parts[1]), basis, anti)
        else:
            raise DescriptorError(f"unknown key {key!r}", lineno, indent + 1)

    if norms is not None and dim is not None and len(norms) != dim:
        raise DescriptorError(f"expected {dim} norms, got {len(norms)}", 1)
    map_desc = None
    if map_header is not None:
        entries = tuple(sorted((i, j, v) for (i, j), v in map_entries.items() if v))
        map_desc = MapDescriptor(map_header[0], map_header[1], map_header[2], map_header[3], entries)
    return AlgebraDescriptor(
        name=name,
        dim=dim,
        field=fld,
        constants=tuple(sorted((i, j, k, v) for (i, j, k), v in constants.items() if v)),
        conjugation=conjugation,
        norms=norms,
        map=map_desc,
    )


def _fmt_norm(v: float) -> str:
    return str(int(v)) if v == int(v) else repr(v)


def serialize_descriptor(d: AlgebraDescriptor) -> str:
    lines = []
    if d.name:
        lines.append(f"name: {d.name}")
    if d.dim is not None:
        lines.append(f"dim: {d.dim}")
        lines.append(f"field: {d.field.name}")
    if d.conjugation:
        lines.append("conjugation: yes")
    if d.norms is not None:
        lines.append("norms: " + " ".join(_fmt_norm(v) for v in d.norms))
    for i, j, k, v in d.constants:
        lines.append(f"c {i} {j} {k} = {format_scalar(v)}")
    if d.map is not None:
        opts = [d.map.basis.name.lower()] + (["antilinear"] if d.map.antilinear else [])
        lines.append(f"map: {d.map.rows} {d.map.cols} {' '.join(opts)}")
        for i, j, v in d.map.entries:
            lines.append(f"m {i} {j} = {format_scalar(v)}")
    return "\n".join(lines) + "\n"


def describe(name: str, A: StructureConstants, *, conjugation: bool = False,
             norms=None, map_matrix: Optional[MapMatrix] = None) -> AlgebraDescriptor:
    """Descriptor for an algebra (and optionally a map) built in code."""
    map_desc = None
    if map_matrix is not None:
        entries = tuple(
            (i, j, v)
            for i, row in enumerate(map_matrix.entries)
            for j, v in enumerate(row)
            if v
        )
        map_desc = MapDescriptor(map_matrix.rows, map_matrix.cols, map_matrix.basis,
                                 map_matrix.conjugate_input, entries)
    return AlgebraDescriptor(
        name=name,
        dim=A.dim,
        field=A.field,
        constants=tuple(A.nonzero_entries()),
        conjugation=conjugation,
        norms=tuple(float(v) for v in norms) if norms is not None else None,
        map=map_desc,
    )
