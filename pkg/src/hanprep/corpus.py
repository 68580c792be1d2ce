# -*- coding: utf-8 -*-
"""Segmented-corpus transforms: word, character, radical and decomposed
token streams with word boundaries preserved, plus vocabulary statistics.

Input sentences are already word-segmented (one sentence per line, words
separated by a delimiter). Every transform keeps one output span per input
word. Words containing no CJK character (Latin words, numbers,
punctuation) pass through all modes as single opaque tokens.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .decompose import DecompConfig, get_decomposer
from .ids import IdsDictionary

__all__ = [
    "PREFIX_MARKER",
    "SEP_MARKER",
    "SegmentedSentence",
    "GranularityMode",
    "VocabReport",
    "parse_mode",
    "parse_segmented",
    "is_cjk",
    "to_char_stream",
    "to_radical_stream",
    "to_rxd_stream",
    "to_factored_stream",
    "transform_sentence",
    "vocab_stats",
    "format_vocab_report",
]

# Default boundary encodings: "prefix" glues the marker onto each word's
# first piece (sentencepiece style), "sep" emits a standalone token between
# words.
PREFIX_MARKER = "▁"  # ▁
SEP_MARKER = "<wb>"

_CJK_RANGES = (
    (0x2E80, 0x2EFF),    # CJK Radicals Supplement
    (0x2F00, 0x2FDF),    # Kangxi Radicals
    (0x2FF0, 0x2FFF),    # Ideographic Description Characters
    (0x3007, 0x3007),    # ideographic zero
    (0x31C0, 0x31EF),    # CJK Strokes
    (0x3400, 0x4DBF),    # CJK Ext A
    (0x4E00, 0x9FFF),    # CJK Unified Ideographs
    (0xF900, 0xFAFF),    # CJK Compatibility Ideographs
    (0x20000, 0x3134F),  # CJK Ext B..G
)


def is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


@dataclass(frozen=True)
class SegmentedSentence:
    """An ordered sequence of non-empty words."""

    words: tuple[str, ...]

    def __post_init__(self):
        if any(not w for w in self.words):
            raise ValueError("words must be non-empty")


def parse_segmented(line: str, delimiter: str | None = None) -> SegmentedSentence:
    """Split a line into words on delimiter runs; empty fields are dropped.

    ``delimiter`` None means any whitespace.
    """
    if delimiter is None:
        words = line.split()
    else:
        words = [w for w in line.split(delimiter) if w]
    return SegmentedSentence(tuple(words))


@dataclass(frozen=True)
class GranularityMode:
    """A token granularity: a single stream (w, c, r, rxdL) or a factored
    combination of w/c/r emitting one multi-factor token per word."""

    factors: tuple[str, ...]
    rxd_level: int | None = None

    @property
    def is_factored(self) -> bool:
        return len(self.factors) > 1


_FACTOR_ORDER = {"w": 0, "c": 1, "r": 2}


def parse_mode(text: str) -> GranularityMode:
    """Parse mode strings: w, c, r, rxd1/rxd2/rxd3/..., w+c, w+r, c+r, w+c+r."""
    norm = text.strip().lower()
    if "+" in norm:
        parts = norm.split("+")
        if len(set(parts)) != len(parts) or not set(parts) <= set(_FACTOR_ORDER):
            raise ValueError(f"bad factored mode: {text!r}")
        return GranularityMode(tuple(sorted(parts, key=_FACTOR_ORDER.__getitem__)))
    if norm in ("w", "c", "r"):
        return GranularityMode((norm,))
    if norm.startswith("rxd"):
        try:
            level = int(norm[3:]) if norm != "rxd" else 1
        except ValueError:
            raise ValueError(f"bad rxd mode: {text!r}") from None
        if level < 0:
            raise ValueError(f"bad rxd level: {text!r}")
        return GranularityMode(("rxd",), level)
    raise ValueError(f"unknown granularity mode: {text!r}")


def _word_units(word: str) -> list[str]:
    """A CJK-bearing word splits into characters, anything else stays whole."""
    if any(is_cjk(ch) for ch in word):
        return list(word)
    return [word]


def _emit(
    word_pieces: Iterable[Sequence[str]],
    keep_boundaries: bool,
    boundary_style: str,
    marker: str | None,
) -> list[str]:
    if boundary_style not in ("prefix", "sep"):
        raise ValueError(f"boundary_style must be 'prefix' or 'sep', got {boundary_style!r}")
    out: list[str] = []
    for i, pieces in enumerate(word_pieces):
        if not keep_boundaries:
            out.extend(pieces)
        elif boundary_style == "prefix":
            mark = PREFIX_MARKER if marker is None else marker
            out.append(mark + pieces[0])
            out.extend(pieces[1:])
        else:
            if i > 0:
                out.append(SEP_MARKER if marker is None else marker)
            out.extend(pieces)
    return out


def to_char_stream(
    sentence: SegmentedSentence,
    keep_boundaries: bool = False,
    *,
    boundary_style: str = "prefix",
    marker: str | None = None,
) -> list[str]:
    """Each word becomes its characters (opaque for non-CJK words)."""
    return _emit(
        (_word_units(w) for w in sentence.words), keep_boundaries, boundary_style, marker
    )


def _radical_of(
    ch: str,
    dictionary: IdsDictionary | None,
    radical_map: Mapping[str, str] | None,
    preference: tuple[str, ...],
) -> str:
    if radical_map is not None:
        mapped = radical_map.get(ch)
        if mapped is not None:
            return mapped
    if dictionary is not None:
        dec = get_decomposer(dictionary, preference)
        return dec.pieces(ch, 1)[0]
    return ch


def to_radical_stream(
    sentence: SegmentedSentence,
    dictionary: IdsDictionary | None = None,
    radical_map: Mapping[str, str] | None = None,
    keep_boundaries: bool = False,
    *,
    preference: tuple[str, ...] = ("G",),
    boundary_style: str = "prefix",
    marker: str | None = None,
) -> list[str]:
    """One radical per character: explicit map, else the first piece of the
    level-1 decomposition, else the character itself."""

    def word_radicals(word: str) -> list[str]:
        return [
            _radical_of(u, dictionary, radical_map, preference) if len(u) == 1 else u
            for u in _word_units(word)
        ]

    return _emit(
        (word_radicals(w) for w in sentence.words), keep_boundaries, boundary_style, marker
    )


def to_rxd_stream(
    sentence: SegmentedSentence,
    dictionary: IdsDictionary,
    config: DecompConfig,
    keep_boundaries: bool = False,
    *,
    boundary_style: str = "prefix",
    marker: str | None = None,
) -> list[str]:
    """Each word's characters replaced by their level-L decomposition;
    word count is preserved. Level 0 equals the character stream."""
    dec = get_decomposer(dictionary, config.region_preference, config.emit_operators)

    def word_pieces(word: str) -> list[str]:
        out: list[str] = []
        for unit in _word_units(word):
            if len(unit) == 1:
                out.extend(dec.pieces(unit, config.level))
            else:
                out.append(unit)
        return out

    return _emit(
        (word_pieces(w) for w in sentence.words), keep_boundaries, boundary_style, marker
    )


def to_factored_stream(
    sentence: SegmentedSentence,
    mode: GranularityMode,
    dictionary: IdsDictionary | None = None,
    radical_map: Mapping[str, str] | None = None,
    *,
    preference: tuple[str, ...] = ("G",),
) -> list[str]:
    """One factored token per word, factors joined by ``|`` in fixed w, c, r
    order, multi-piece factors internally joined by ``+``
    (e.g. ``橋樑|橋+樑|木+木``)."""
    if not mode.is_factored:
        raise ValueError("to_factored_stream requires a tuple mode like w+c")
    out = []
    for word in sentence.words:
        units = _word_units(word)
        factors = []
        for factor in mode.factors:
            if factor == "w":
                factors.append(word)
            elif factor == "c":
                factors.append("+".join(units))
            else:
                factors.append(
                    "+".join(
                        _radical_of(u, dictionary, radical_map, preference)
                        if len(u) == 1
                        else u
                        for u in units
                    )
                )
        out.append("|".join(factors))
    return out


def transform_sentence(
    sentence: SegmentedSentence,
    mode: GranularityMode,
    dictionary: IdsDictionary | None = None,
    config: DecompConfig | None = None,
    radical_map: Mapping[str, str] | None = None,
    keep_boundaries: bool = False,
    *,
    boundary_style: str = "prefix",
    marker: str | None = None,
) -> list[str]:
    """Apply one granularity mode to a sentence (dispatch helper)."""
    if mode.is_factored:
        pref = config.region_preference if config else ("G",)
        return to_factored_stream(
            sentence, mode, dictionary, radical_map, preference=pref
        )
    kind = mode.factors[0]
    if kind == "w":
        return list(sentence.words)
    if kind == "c":
        return to_char_stream(
            sentence, keep_boundaries, boundary_style=boundary_style, marker=marker
        )
    if kind == "r":
        pref = config.region_preference if config else ("G",)
        return to_radical_stream(
            sentence,
            dictionary,
            radical_map,
            keep_boundaries,
            preference=pref,
            boundary_style=boundary_style,
            marker=marker,
        )
    if dictionary is None:
        raise ValueError("rxd modes require a dictionary")
    cfg = config or DecompConfig()
    if mode.rxd_level is not None:
        cfg = DecompConfig(mode.rxd_level, cfg.region_preference, cfg.emit_operators)
    return to_rxd_stream(
        sentence,
        dictionary,
        cfg,
        keep_boundaries,
        boundary_style=boundary_style,
        marker=marker,
    )


@dataclass(frozen=True)
class VocabReport:
    """Distinct-token count and corpus coverage of the top-N types."""

    vocab_size: int
    top_n: int
    coverage: float
    total_tokens: int

    def __post_init__(self):
        if not 0.0 <= self.coverage <= 1.0:
            raise ValueError("coverage must be within [0, 1]")


def vocab_stats(tokens: Iterable[str], top_n: int = 30000) -> VocabReport:
    """Exact frequency counting; frequency ties break by lexicographic
    token order so reports are deterministic."""
    counts = Counter(tokens)
    total = sum(counts.values())
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    covered = sum(c for _, c in ranked[:top_n])
    coverage = covered / total if total else 0.0
    return VocabReport(len(counts), top_n, coverage, total)


def format_vocab_report(report: VocabReport) -> str:
    return (
        f"vocab_size={report.vocab_size}\n"
        f"top_n={report.top_n}\n"
        f"coverage={report.coverage:.4f}"
    )
