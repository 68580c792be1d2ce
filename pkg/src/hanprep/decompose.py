# -*- coding: utf-8 -*-
"""Level-L character decomposition over an IDS dictionary.

Running one level replaces every character that has a dictionary entry by
the component pieces of its selected variant; level L applies that
substitution pass L times. Level 0 is the identity. Characters without an
entry, and entries whose selected variant is the character itself, are
atomic and pass through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain
from typing import Iterable, Sequence

from .ids import IdsDictionary, IdsEntry, IdsTree, Leaf

__all__ = [
    "DecompConfig",
    "Decomposer",
    "select_variant",
    "get_decomposer",
    "decompose_char",
    "decompose_sequence",
]


@dataclass(frozen=True)
class DecompConfig:
    """Decomposition settings.

    ``level`` is the number of substitution passes (0 = identity).
    ``region_preference`` ranks region tags for variant selection; the
    default prefers the mainland-China (G) variants. ``emit_operators``
    keeps the structural operators in the output piece stream; by default
    only component characters are emitted.
    """

    level: int = 1
    region_preference: tuple[str, ...] = ("G",)
    emit_operators: bool = False

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("level must be non-negative")
        prefs = tuple(self.region_preference)
        if len(set(prefs)) != len(prefs):
            raise ValueError("region_preference entries must be distinct")
        for tag in prefs:
            if len(tag) != 1 or not tag.isupper():
                raise ValueError(f"bad region tag: {tag!r}")
        object.__setattr__(self, "region_preference", prefs)


def select_variant(entry: IdsEntry, preference: Sequence[str]) -> IdsTree:
    """Pick a variant by region preference.

    Returns the first variant (in file order) carrying the highest-priority
    preference tag present anywhere in the entry; if no variant carries any
    preferred tag, returns the first variant.
    """
    for tag in preference:
        for variant in entry.variants:
            if tag in variant.tags:
                return variant.tree
    return entry.variants[0].tree


def _flatten(tree: IdsTree, emit_operators: bool) -> Iterable[str]:
    if isinstance(tree, Leaf):
        yield tree.component
    else:
        if emit_operators:
            yield tree.op
        for child in tree.children:
            yield from _flatten(child, emit_operators)


class Decomposer:
    """Memoized decomposer bound to one dictionary and variant selection.

    Results are memoized per (character, level); the memo tables are only
    ever extended with immutable tuples, so concurrent readers are safe
    under CPython.
    """

    def __init__(
        self,
        dictionary: IdsDictionary,
        region_preference: Sequence[str] = ("G",),
        emit_operators: bool = False,
    ):
        self.dictionary = dictionary
        self.region_preference = tuple(region_preference)
        self.emit_operators = emit_operators
        self.cycle_warnings = 0
        self._step_memo: dict[str, tuple[str, ...]] = {}
        self._memo: dict[tuple[str, int], tuple[str, ...]] = {}

    def expand_once(self, piece: str) -> tuple[str, ...]:
        """One substitution step for a single piece."""
        cached = self._step_memo.get(piece)
        if cached is not None:
            return cached
        entry = self.dictionary.get(piece)
        if entry is None:
            result = (piece,)
        else:
            tree = select_variant(entry, self.region_preference)
            if isinstance(tree, Leaf) and tree.component == piece:
                result = (piece,)  # self-referential entry: atomic
            else:
                result = tuple(_flatten(tree, self.emit_operators))
        self._step_memo[piece] = result
        return result

    def pieces(self, ch: str, level: int) -> tuple[str, ...]:
        """Level-``level`` decomposition of one character.

        Exactly equivalent to ``level`` substitution passes, but stops as
        soon as a pass changes nothing (fixed point) and jumps ahead when
        the sequence state repeats (a dictionary cycle, which is counted
        as a warning), so large levels cost no extra work.
        """
        if len(ch) != 1:
            raise ValueError(f"expected a single character, got {ch!r}")
        if level < 0:
            raise ValueError("level must be non-negative")
        key = (ch, level)
        cached = self._memo.get(key)
        if cached is not None:
            return cached

        seq = (ch,)
        seen = {seq: 0}
        history = [seq]
        for step in range(1, level + 1):
            nxt = tuple(chain.from_iterable(self.expand_once(p) for p in seq))
            if nxt == seq:
                break
            prior = seen.get(nxt)
            if prior is not None:
                period = step - prior
                self.cycle_warnings += 1
                seq = history[prior + (level - prior) % period]
                break
            seen[nxt] = step
            history.append(nxt)
            seq = nxt
        self._memo[key] = seq
        return seq

    def sequence(self, chars: Iterable[str], level: int) -> list[str]:
        out: list[str] = []
        for ch in chars:
            out.extend(self.pieces(ch, level))
        return out


@lru_cache(maxsize=32)
def get_decomposer(
    dictionary: IdsDictionary,
    region_preference: tuple[str, ...] = ("G",),
    emit_operators: bool = False,
) -> Decomposer:
    """Shared, memo-warm Decomposer for a (dictionary, selection) pair."""
    return Decomposer(dictionary, region_preference, emit_operators)


def decompose_char(dictionary: IdsDictionary, ch: str, config: DecompConfig) -> list[str]:
    """Level-L piece sequence of a single character."""
    dec = get_decomposer(dictionary, config.region_preference, config.emit_operators)
    return list(dec.pieces(ch, config.level))


def decompose_sequence(
    dictionary: IdsDictionary, chars: Iterable[str], config: DecompConfig
) -> list[str]:
    """Concatenated per-character decompositions, in order."""
    dec = get_decomposer(dictionary, config.region_preference, config.emit_operators)
    return dec.sequence(chars, config.level)
