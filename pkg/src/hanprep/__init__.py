# -*- coding: utf-8 -*-
"""Chinese character decomposition, bilingual MWE extraction and corpus
preparation utilities for machine translation experiments."""

from .augment import AugmentPlan, augment_corpus
from .bleu import BleuConfig, BleuScore, bleu, format_bleu
from .corpus import (
    GranularityMode,
    SegmentedSentence,
    VocabReport,
    parse_mode,
    parse_segmented,
    to_char_stream,
    to_factored_stream,
    to_radical_stream,
    to_rxd_stream,
    transform_sentence,
    vocab_stats,
)
from .decompose import (
    DecompConfig,
    Decomposer,
    decompose_char,
    decompose_sequence,
    get_decomposer,
    select_variant,
)
from .ids import (
    IdsDictionary,
    IdsEntry,
    IdsTree,
    Leaf,
    Node,
    Variant,
    load_ids_file,
    parse_ids_expression,
    parse_ids_file,
    render_ids_expression,
)
from .mwe import (
    BiMwePair,
    MweCandidate,
    MwePattern,
    TaggedToken,
    extract_mwes,
    pair_and_score,
    parse_pattern_file,
    parse_tagged_corpus,
    prune,
)

__version__ = "0.1.0"
