# -*- coding: utf-8 -*-
"""Bilingual multi-word-expression extraction, pairing and pruning.

Monolingual candidates come from POS-pattern matching over a tagged corpus
(one sentence per line, tokens ``surface|POS`` or ``surface|POS|lemma``).
Candidate pairs are scored with the Dice coefficient over sentence-pair
occurrence sets of an aligned parallel corpus and pruned by threshold.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "TaggedToken",
    "MwePattern",
    "MweCandidate",
    "BiMwePair",
    "MalformedToken",
    "LengthMismatch",
    "parse_tagged_corpus",
    "parse_pattern_file",
    "extract_mwes",
    "pair_and_score",
    "prune",
    "format_candidate_line",
    "parse_candidate_line",
    "format_pair_line",
    "parse_pair_line",
]

DEFAULT_PRUNE_THRESHOLD = 0.85


class MalformedToken(ValueError):
    """A tagged token had fewer than 2 ``|``-separated fields."""

    def __init__(self, message: str, line_no: int, column: int):
        super().__init__(f"line {line_no}, token {column}: {message}")
        self.line_no = line_no
        self.column = column


class LengthMismatch(ValueError):
    """The two sides of a parallel corpus have different line counts."""


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    pos: str
    lemma: str | None = None

    def __post_init__(self):
        if not self.surface or not self.pos:
            raise ValueError("surface and pos must be non-empty")


@dataclass(frozen=True)
class MwePattern:
    """A named sequence of POS matchers: exact tags or prefixes with a
    trailing ``*`` (``NN*`` matches NN, NNS, ...). MWEs are multi-word, so
    patterns have at least two slots."""

    name: str
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.tags) < 2:
            raise ValueError("an MWE pattern needs at least 2 tags")
        if not self.name:
            raise ValueError("pattern name must be non-empty")

    def matches(self, tokens: Sequence[TaggedToken]) -> bool:
        if len(tokens) != len(self.tags):
            return False
        for matcher, token in zip(self.tags, tokens):
            if matcher.endswith("*"):
                if not token.pos.startswith(matcher[:-1]):
                    return False
            elif token.pos != matcher:
                return False
        return True


@dataclass(frozen=True)
class MweCandidate:
    surface_words: tuple[str, ...]
    frequency: int
    pattern_name: str

    def __post_init__(self):
        if self.frequency < 1:
            raise ValueError("frequency must be >= 1")

    @property
    def surface(self) -> str:
        return " ".join(self.surface_words)


@dataclass(frozen=True)
class BiMwePair:
    source: MweCandidate
    target: MweCandidate
    score: float

    def __post_init__(self):
        if not 0.0 <= self.score <= 1.0:
            raise ValueError("score must be within [0, 1]")


def parse_tagged_corpus(lines: Iterable[str]) -> list[list[TaggedToken]]:
    """One sentence per line; tokens split on whitespace, fields on ``|``.

    A third field is the lemma (anything after the second ``|`` is part of
    the lemma). Empty lines give empty sentences.
    """
    sentences: list[list[TaggedToken]] = []
    for line_no, raw in enumerate(lines, start=1):
        sentence: list[TaggedToken] = []
        for column, token in enumerate(raw.split(), start=1):
            fields = token.split("|", 2)
            if len(fields) < 2 or not fields[0] or not fields[1]:
                raise MalformedToken(f"expected surface|POS[|lemma]: {token!r}", line_no, column)
            lemma = fields[2] if len(fields) == 3 else None
            sentence.append(TaggedToken(fields[0], fields[1], lemma))
        sentences.append(sentence)
    return sentences


def parse_pattern_file(lines: Iterable[str]) -> list[MwePattern]:
    """Pattern file: one ``name: TAG+TAG+...`` per line, ``#`` comments."""
    patterns = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, rhs = line.partition(":")
        if not sep:
            raise ValueError(f"pattern line {line_no}: expected 'name: TAG+TAG', got {line!r}")
        tags = tuple(t.strip() for t in rhs.split("+"))
        if any(not t for t in tags):
            raise ValueError(f"pattern line {line_no}: empty tag in {line!r}")
        try:
            patterns.append(MwePattern(name.strip(), tags))
        except ValueError as exc:
            raise ValueError(f"pattern line {line_no}: {exc}") from exc
    return patterns


def _match_words(tokens: Sequence[TaggedToken], use_lemmas: bool) -> tuple[str, ...]:
    if use_lemmas:
        return tuple(t.lemma if t.lemma else t.surface for t in tokens)
    return tuple(t.surface for t in tokens)


def extract_mwes(
    corpus: Iterable[Sequence[TaggedToken]],
    patterns: Sequence[MwePattern],
    min_freq: int = 1,
    use_lemmas: bool = False,
) -> list[MweCandidate]:
    """Collect every sliding-window pattern match over the corpus.

    Overlapping matches (of the same or different patterns) all count.
    Candidates below ``min_freq`` are dropped; the result is sorted by
    (frequency desc, surface asc, pattern name asc).
    """
    if not patterns:
        raise ValueError("patterns must be non-empty")
    if min_freq < 1:
        raise ValueError("min_freq must be >= 1")
    counts: Counter[tuple[str, tuple[str, ...]]] = Counter()
    for sentence in corpus:
        for pattern in patterns:
            width = len(pattern.tags)
            for i in range(len(sentence) - width + 1):
                window = sentence[i : i + width]
                if pattern.matches(window):
                    counts[(pattern.name, _match_words(window, use_lemmas))] += 1
    candidates = [
        MweCandidate(words, freq, name)
        for (name, words), freq in counts.items()
        if freq >= min_freq
    ]
    candidates.sort(key=lambda c: (-c.frequency, c.surface, c.pattern_name))
    return candidates


def _as_words(line) -> tuple[str, ...]:
    if isinstance(line, str):
        return tuple(line.split())
    return tuple(line)


def _occurrence_sets(
    candidates: Sequence[MweCandidate], lines: Sequence[tuple[str, ...]]
) -> dict[int, set[int]]:
    """Line-index sets where each candidate occurs as a contiguous word
    subsequence; presence per line, not token frequency."""
    by_len: dict[int, list[int]] = defaultdict(list)
    for idx, cand in enumerate(candidates):
        by_len[len(cand.surface_words)].append(idx)
    keys = {idx: candidates[idx].surface_words for idx in range(len(candidates))}
    occ: dict[int, set[int]] = {idx: set() for idx in range(len(candidates))}
    for line_no, words in enumerate(lines):
        for width, idxs in by_len.items():
            if width > len(words):
                continue
            grams = {tuple(words[i : i + width]) for i in range(len(words) - width + 1)}
            for idx in idxs:
                if keys[idx] in grams:
                    occ[idx].add(line_no)
    return occ


def pair_and_score(
    src_candidates: Sequence[MweCandidate],
    tgt_candidates: Sequence[MweCandidate],
    src_lines: Sequence,
    tgt_lines: Sequence,
) -> list[BiMwePair]:
    """Score co-occurring candidate pairs with the Dice coefficient.

    score = 2*co / (occ_s + occ_t) over sentence-pair occurrence sets;
    pairs that never co-occur are omitted. Output is sorted by
    (score desc, source asc, target asc) for deterministic reruns.
    """
    if len(src_lines) != len(tgt_lines):
        raise LengthMismatch(
            f"parallel corpus sides differ: {len(src_lines)} vs {len(tgt_lines)} lines"
        )
    src_words = [_as_words(line) for line in src_lines]
    tgt_words = [_as_words(line) for line in tgt_lines]
    src_occ = _occurrence_sets(src_candidates, src_words)
    tgt_occ = _occurrence_sets(tgt_candidates, tgt_words)
    pairs = []
    for i, s in enumerate(src_candidates):
        occ_s = src_occ[i]
        if not occ_s:
            continue
        for j, t in enumerate(tgt_candidates):
            occ_t = tgt_occ[j]
            co = len(occ_s & occ_t)
            if co == 0:
                continue
            pairs.append(BiMwePair(s, t, 2.0 * co / (len(occ_s) + len(occ_t))))
    pairs.sort(key=lambda p: (-p.score, p.source.surface, p.target.surface))
    return pairs


def prune(pairs: Sequence[BiMwePair], threshold: float = DEFAULT_PRUNE_THRESHOLD) -> list[BiMwePair]:
    """Keep exactly the pairs with score >= threshold, preserving order."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be within [0, 1]")
    return [p for p in pairs if p.score >= threshold]


def format_candidate_line(candidate: MweCandidate) -> str:
    return f"{candidate.surface}\t{candidate.frequency}\t{candidate.pattern_name}"


def parse_candidate_line(line: str) -> MweCandidate:
    fields = line.rstrip("\n").split("\t")
    if len(fields) != 3:
        raise ValueError(f"expected surface<TAB>frequency<TAB>pattern, got {line!r}")
    return MweCandidate(tuple(fields[0].split()), int(fields[1]), fields[2])


def format_pair_line(pair: BiMwePair) -> str:
    """TSV row ``source<TAB>target<TAB>score`` with the score to 4 decimals."""
    return f"{pair.source.surface}\t{pair.target.surface}\t{pair.score:.4f}"


def parse_pair_line(line: str) -> BiMwePair:
    fields = line.rstrip("\n").split("\t")
    if len(fields) != 3:
        raise ValueError(f"expected source<TAB>target<TAB>score, got {line!r}")
    source = MweCandidate(tuple(fields[0].split()), 1, "tsv")
    target = MweCandidate(tuple(fields[1].split()), 1, "tsv")
    return BiMwePair(source, target, float(fields[2]))
