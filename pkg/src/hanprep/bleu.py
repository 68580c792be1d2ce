# -*- coding: utf-8 -*-
"""Cumulative n-gram, multi-reference corpus BLEU without smoothing.

Classic corpus-level BLEU: clipped n-gram counts take the per-reference
maximum, the brevity penalty uses the closest reference length (ties go to
the shorter reference), and the cumulative score at order n is
BP * exp(mean of log precisions 1..n). Any zero precision at an order <= n
zeroes the cumulative score at n. Tokens are whatever whitespace-separated
units the caller provides; no re-tokenization happens here.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "BleuConfig",
    "BleuScore",
    "EmptyHypothesisSet",
    "ReferenceCountMismatch",
    "bleu",
    "format_bleu",
]

MAX_REFERENCES = 4


class EmptyHypothesisSet(ValueError):
    """No hypotheses were given."""


class ReferenceCountMismatch(ValueError):
    """Reference sets do not line up with the hypotheses (or a set is
    empty / has more than four references)."""


@dataclass(frozen=True)
class BleuConfig:
    max_n: int = 4
    case_insensitive: bool = True

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")


@dataclass(frozen=True)
class BleuScore:
    """Cumulative scores BLEU-1..BLEU-max_n plus the ingredients."""

    per_n: tuple[float, ...]
    brevity_penalty: float
    precisions: tuple[float, ...]
    hyp_length: int
    ref_length: int


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _closest_ref_length(hyp_len: int, ref_lens: Sequence[int]) -> int:
    best = None
    for ref_len in ref_lens:
        if best is None:
            best = ref_len
            continue
        diff, best_diff = abs(ref_len - hyp_len), abs(best - hyp_len)
        if diff < best_diff or (diff == best_diff and ref_len < best):
            best = ref_len
    return best


def bleu(
    hypotheses: Sequence[str],
    reference_sets: Sequence[Sequence[str]],
    config: BleuConfig = BleuConfig(),
) -> BleuScore:
    """Corpus BLEU of whitespace-tokenized hypothesis lines against 1-4
    references per hypothesis."""
    if not hypotheses:
        raise EmptyHypothesisSet("no hypotheses to score")
    if len(reference_sets) != len(hypotheses):
        raise ReferenceCountMismatch(
            f"{len(hypotheses)} hypotheses but {len(reference_sets)} reference sets"
        )
    for i, refs in enumerate(reference_sets):
        if not 1 <= len(refs) <= MAX_REFERENCES:
            raise ReferenceCountMismatch(
                f"hypothesis {i}: expected 1-{MAX_REFERENCES} references, got {len(refs)}"
            )

    max_n = config.max_n
    correct = [0] * max_n
    total = [0] * max_n
    hyp_length = 0
    ref_length = 0
    for hyp_line, refs in zip(hypotheses, reference_sets):
        if config.case_insensitive:
            hyp_line = hyp_line.lower()
            refs = [r.lower() for r in refs]
        hyp = hyp_line.split()
        ref_tokens = [r.split() for r in refs]
        hyp_length += len(hyp)
        ref_length += _closest_ref_length(len(hyp), [len(r) for r in ref_tokens])
        for n in range(1, max_n + 1):
            hyp_grams = _ngrams(hyp, n)
            if not hyp_grams:
                continue
            max_ref = Counter()
            for ref in ref_tokens:
                for gram, count in _ngrams(ref, n).items():
                    if count > max_ref[gram]:
                        max_ref[gram] = count
            total[n - 1] += sum(hyp_grams.values())
            correct[n - 1] += sum(
                min(count, max_ref[gram]) for gram, count in hyp_grams.items()
            )

    precisions = tuple(
        (correct[n] / total[n]) if total[n] else 0.0 for n in range(max_n)
    )
    if hyp_length == 0:
        bp = 0.0
    elif hyp_length >= ref_length:
        bp = 1.0
    else:
        bp = math.exp(1.0 - ref_length / hyp_length)

    per_n = []
    log_sum = 0.0
    dead = False
    for n in range(max_n):
        if precisions[n] <= 0.0:
            dead = True
        if dead:
            per_n.append(0.0)
        else:
            log_sum += math.log(precisions[n])
            per_n.append(bp * math.exp(log_sum / (n + 1)))
    return BleuScore(tuple(per_n), bp, precisions, hyp_length, ref_length)


def format_bleu(score: BleuScore) -> str:
    parts = [f"BLEU-{n + 1}={value:.4f}" for n, value in enumerate(score.per_n)]
    parts.append(f"BP={score.brevity_penalty:.4f}")
    return " ".join(parts)
