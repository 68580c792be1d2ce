# -*- coding: utf-8 -*-
"""Parallel-corpus augmentation with extracted bilingual MWE pairs.

Pruned BiMWE pairs are appended to the training corpus as pseudo-sentence
pairs, optionally replicated and optionally with the Chinese side run
through the level-L decomposer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .corpus import SegmentedSentence, to_rxd_stream
from .decompose import DecompConfig
from .ids import IdsDictionary
from .mwe import BiMwePair, LengthMismatch

__all__ = ["AugmentPlan", "augment_corpus"]


@dataclass(frozen=True)
class AugmentPlan:
    """What to append: the pairs, a replication factor (MWE pairs are much
    shorter than real sentences), and an optional decomposition of the
    Chinese side. ``decomp_side`` names which side is Chinese. With
    ``keep_plain`` (the default) decomposed pairs accompany the plain ones
    rather than replacing them. Placement is always append."""

    pairs: tuple[BiMwePair, ...]
    replication: int = 1
    decomp: DecompConfig | None = None
    decomp_side: str = "src"
    keep_plain: bool = True

    def __post_init__(self):
        if self.replication < 1:
            raise ValueError("replication must be >= 1")
        if self.decomp_side not in ("src", "tgt"):
            raise ValueError("decomp_side must be 'src' or 'tgt'")
        object.__setattr__(self, "pairs", tuple(self.pairs))


def _decomposed_line(
    words: tuple[str, ...],
    dictionary: IdsDictionary,
    config: DecompConfig,
    keep_boundaries: bool,
    boundary_style: str,
) -> str:
    tokens = to_rxd_stream(
        SegmentedSentence(words),
        dictionary,
        config,
        keep_boundaries,
        boundary_style=boundary_style,
    )
    return " ".join(tokens)


def augment_corpus(
    src_lines: Sequence[str],
    tgt_lines: Sequence[str],
    plan: AugmentPlan,
    dictionary: IdsDictionary | None = None,
    *,
    keep_boundaries: bool = False,
    boundary_style: str = "prefix",
) -> tuple[list[str], list[str]]:
    """Append the plan's MWE pairs to an aligned corpus.

    The original lines are passed through untouched, then each pair is
    appended ``replication`` times (plus, when decomposition is requested,
    a decomposed copy of each pair). A decomposition level of 0 means no
    decomposition, so the plain pair is emitted once. Both output sides
    always stay line-aligned.
    """
    if len(src_lines) != len(tgt_lines):
        raise LengthMismatch(
            f"parallel corpus sides differ: {len(src_lines)} vs {len(tgt_lines)} lines"
        )
    decomp = plan.decomp if plan.decomp is not None and plan.decomp.level > 0 else None
    if decomp is not None and dictionary is None:
        raise ValueError("decomposition requested but no dictionary given")

    out_src = list(src_lines)
    out_tgt = list(tgt_lines)
    for pair in plan.pairs:
        plain_src = pair.source.surface
        plain_tgt = pair.target.surface
        rows: list[tuple[str, str]] = []
        if decomp is None or plan.keep_plain:
            rows.append((plain_src, plain_tgt))
        if decomp is not None:
            if plan.decomp_side == "src":
                rows.append((
                    _decomposed_line(
                        pair.source.surface_words, dictionary, decomp,
                        keep_boundaries, boundary_style,
                    ),
                    plain_tgt,
                ))
            else:
                rows.append((
                    plain_src,
                    _decomposed_line(
                        pair.target.surface_words, dictionary, decomp,
                        keep_boundaries, boundary_style,
                    ),
                ))
        for src_row, tgt_row in rows:
            for _ in range(plan.replication):
                out_src.append(src_row)
                out_tgt.append(tgt_row)
    return out_src, out_tgt
