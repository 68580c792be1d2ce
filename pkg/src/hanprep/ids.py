# -*- coding: utf-8 -*-
"""IDS (Ideographic Description Sequence) dictionary parsing.

An IDS expression describes how a CJK character is assembled from smaller
components, in prefix notation: a structural operator (one of the twelve
Ideographic Description Characters U+2FF0..U+2FFB) is followed by its two
or three sub-expressions, e.g. ``⿱双双`` or ``⿲彳氵亍``.

Dictionary file grammar (UTF-8, LF):

    ;; comment            (also ``#`` comments; blank lines skipped)
    U+XXXX<TAB>CHAR<TAB>VARIANT(<TAB>VARIANT)*

where VARIANT is ``EXPR`` or ``EXPR[TAGS]``, EXPR an IDS expression and
TAGS one or more uppercase region letters (``⿰木喬[GTK]``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "IDC_ARITY",
    "IdsError",
    "IdsExpressionError",
    "TruncatedExpression",
    "TrailingGarbage",
    "MalformedLine",
    "Leaf",
    "Node",
    "IdsTree",
    "Variant",
    "IdsEntry",
    "IdsDictionary",
    "is_operator",
    "operator_arity",
    "format_codepoint",
    "parse_codepoint",
    "parse_ids_expression",
    "render_ids_expression",
    "iter_leaves",
    "parse_ids_file",
    "load_ids_file",
]

# The twelve classic Ideographic Description Characters and their arity.
# U+2FF2 (⿲) and U+2FF3 (⿳) combine three components, all others two.
IDC_ARITY: Mapping[str, int] = MappingProxyType({
    "⿰": 2,  # ⿰ left to right
    "⿱": 2,  # ⿱ above to below
    "⿲": 3,  # ⿲ left to middle and right
    "⿳": 3,  # ⿳ above to middle and below
    "⿴": 2,  # ⿴ full surround
    "⿵": 2,  # ⿵ surround from above
    "⿶": 2,  # ⿶ surround from below
    "⿷": 2,  # ⿷ surround from left
    "⿸": 2,  # ⿸ surround from upper left
    "⿹": 2,  # ⿹ surround from upper right
    "⿺": 2,  # ⿺ surround from lower left
    "⿻": 2,  # ⿻ overlaid
})

# Later Unicode versions add more IDCs (U+2FFC..); this toolkit sticks to
# the classic twelve and rejects dictionary entries using the extras.
_EXTENDED_IDC = frozenset(chr(c) for c in range(0x2FFC, 0x3000))

# Region tags with documented semantics; any other uppercase letter is
# accepted and carried opaquely.
REGION_MEANINGS: Mapping[str, str] = MappingProxyType({
    "G": "mainland China",
    "H": "Hong Kong",
    "T": "Taiwan",
    "K": "Korea",
    "V": "Vietnam",
    "J": "Japan",
})

_CODEPOINT_RE = re.compile(r"^U\+([0-9A-F]{4,6})$")
_TAGS_RE = re.compile(r"^\[([A-Z]+)\]$")


class IdsError(ValueError):
    """Base class for all IDS parsing errors."""


class IdsExpressionError(IdsError):
    """Error inside a single IDS expression; carries the UTF-8 byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class TruncatedExpression(IdsExpressionError):
    """A structural operator did not receive enough sub-expressions."""


class TrailingGarbage(IdsExpressionError):
    """Characters remained after a complete tree was parsed."""


class MalformedLine(IdsError):
    """A dictionary data line could not be parsed; carries the line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def is_operator(ch: str) -> bool:
    return ch in IDC_ARITY


def operator_arity(ch: str) -> int:
    return IDC_ARITY[ch]


def format_codepoint(value: int) -> str:
    """Render a scalar value as ``U+XXXX`` with 4-6 uppercase hex digits."""
    if not 0 <= value <= 0x10FFFF:
        raise ValueError(f"not a Unicode scalar value: {value!r}")
    return f"U+{value:04X}"


def parse_codepoint(text: str) -> int:
    m = _CODEPOINT_RE.match(text)
    if not m:
        raise ValueError(f"bad codepoint syntax: {text!r}")
    value = int(m.group(1), 16)
    if value > 0x10FFFF or 0xD800 <= value <= 0xDFFF:
        raise ValueError(f"not a Unicode scalar value: {text!r}")
    return value


@dataclass(frozen=True)
class Leaf:
    """A terminal component character."""

    component: str

    def __post_init__(self):
        if len(self.component) != 1:
            raise ValueError("leaf component must be a single character")
        if is_operator(self.component):
            raise ValueError("leaf component must not be a structural operator")


@dataclass(frozen=True)
class Node:
    """A structural operator applied to 2-3 sub-trees."""

    op: str
    children: tuple["IdsTree", ...]

    def __post_init__(self):
        if not is_operator(self.op):
            raise ValueError(f"not a structural operator: {self.op!r}")
        if len(self.children) != operator_arity(self.op):
            raise ValueError(
                f"operator {self.op!r} takes {operator_arity(self.op)} children,"
                f" got {len(self.children)}"
            )


IdsTree = Union[Leaf, Node]


@dataclass(frozen=True)
class Variant:
    """One decomposition variant of an entry, with its region tags."""

    tree: IdsTree
    tags: frozenset[str] = frozenset()


@dataclass(frozen=True)
class IdsEntry:
    """A dictionary record: one character with its ordered variants."""

    codepoint: int
    character: str
    variants: tuple[Variant, ...]

    def __post_init__(self):
        if not self.variants:
            raise ValueError("entry must have at least one variant")
        if ord(self.character) != self.codepoint:
            raise ValueError("codepoint does not match character")


@dataclass(eq=False)
class IdsDictionary:
    """Parsed decomposition table; treat as immutable after load.

    ``source_count`` counts parsed data lines, ``duplicates`` counts
    characters that appeared more than once (last occurrence wins) and
    ``skipped`` counts lines dropped under the skip error policy.
    """

    entries: Mapping[str, IdsEntry] = field(default_factory=dict)
    source_count: int = 0
    duplicates: int = 0
    skipped: int = 0

    def __post_init__(self):
        self.entries = MappingProxyType(dict(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, character: str) -> IdsEntry | None:
        return self.entries.get(character)


def parse_ids_expression(text: str) -> IdsTree:
    """Parse a prefix-notation IDS expression into a tree.

    The whole string must form exactly one tree; an operator consumes
    exactly its arity of subsequent sub-trees, any other character is a
    leaf. Raises TruncatedExpression or TrailingGarbage with the UTF-8
    byte offset of the problem.
    """
    chars = list(text)
    offsets = [0]
    for ch in chars:
        offsets.append(offsets[-1] + len(ch.encode("utf-8")))
    pos = 0

    def parse_one() -> IdsTree:
        nonlocal pos
        if pos >= len(chars):
            message = "empty expression" if not chars else "operator lacks children"
            raise TruncatedExpression(message, offsets[pos])
        ch = chars[pos]
        pos += 1
        if is_operator(ch):
            children = tuple(parse_one() for _ in range(operator_arity(ch)))
            return Node(ch, children)
        return Leaf(ch)

    tree = parse_one()
    if pos != len(chars):
        raise TrailingGarbage("characters remain after a complete tree", offsets[pos])
    return tree


def render_ids_expression(tree: IdsTree) -> str:
    """Inverse of parse_ids_expression: render(parse(s)) == s."""
    if isinstance(tree, Leaf):
        return tree.component
    return tree.op + "".join(render_ids_expression(c) for c in tree.children)


def iter_leaves(tree: IdsTree) -> Iterator[str]:
    """Yield leaf components in left-to-right order."""
    if isinstance(tree, Leaf):
        yield tree.component
    else:
        for child in tree.children:
            yield from iter_leaves(child)


def _parse_variant(text: str, line_no: int) -> Variant:
    tags: frozenset[str] = frozenset()
    expr = text
    bracket = text.find("[")
    if bracket != -1:
        m = _TAGS_RE.match(text[bracket:])
        if m is None:
            raise MalformedLine(f"bad tag suffix in variant {text!r}", line_no)
        tags = frozenset(m.group(1))
        expr = text[:bracket]
    if not expr:
        raise MalformedLine("empty variant expression", line_no)
    try:
        tree = parse_ids_expression(expr)
    except IdsExpressionError as exc:
        raise MalformedLine(f"bad IDS expression {expr!r}: {exc}", line_no) from exc
    for leaf in iter_leaves(tree):
        if leaf in _EXTENDED_IDC:
            raise MalformedLine(
                f"unsupported structural operator {leaf!r} (beyond the classic 12)",
                line_no,
            )
    return Variant(tree, tags)


def _parse_line(line: str, line_no: int) -> IdsEntry:
    fields = line.split("\t")
    if len(fields) < 3:
        raise MalformedLine(
            f"expected at least 3 tab-separated fields, got {len(fields)}", line_no
        )
    try:
        codepoint = parse_codepoint(fields[0])
    except ValueError as exc:
        raise MalformedLine(str(exc), line_no) from exc
    character = fields[1]
    if len(character) != 1:
        raise MalformedLine(f"entry character must be a single character: {character!r}", line_no)
    if is_operator(character) or character in _EXTENDED_IDC:
        raise MalformedLine("entry character must not be a structural operator", line_no)
    if ord(character) != codepoint:
        raise MalformedLine(
            f"codepoint {fields[0]} does not match character {character!r}"
            f" ({format_codepoint(ord(character))})",
            line_no,
        )
    variants = tuple(_parse_variant(f, line_no) for f in fields[2:])
    return IdsEntry(codepoint, character, variants)


def parse_ids_file(lines: Iterable[str], errors: str = "raise") -> IdsDictionary:
    """Parse dictionary lines into an IdsDictionary.

    ``errors`` is ``"raise"`` (abort on the first malformed line, the
    library default) or ``"skip"`` (drop malformed lines and count them).
    Duplicate characters keep the last occurrence and are counted.
    """
    if errors not in ("raise", "skip"):
        raise ValueError(f"errors must be 'raise' or 'skip', got {errors!r}")
    entries: dict[str, IdsEntry] = {}
    source_count = 0
    duplicates = 0
    skipped = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.startswith(";;") or line.startswith("#"):
            continue
        try:
            entry = _parse_line(line, line_no)
        except MalformedLine:
            if errors == "raise":
                raise
            skipped += 1
            continue
        source_count += 1
        if entry.character in entries:
            duplicates += 1
        entries[entry.character] = entry
    return IdsDictionary(entries, source_count, duplicates, skipped)


def load_ids_file(path, errors: str = "raise") -> IdsDictionary:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ids_file(fh, errors=errors)
