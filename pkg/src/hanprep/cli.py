# -*- coding: utf-8 -*-
"""Command-line pipeline: decompose, tokenize, extract-mwe, pair-mwe,
prune-mwe, augment, stats and bleu subcommands.

Every subcommand streams UTF-8 text with LF newlines and is a thin wrapper
over one library operation, so identical inputs and flags give
byte-identical outputs. Exit status: 0 success, 1 usage error, 2 data
error. An optional ``key=value`` config file supplies defaults; flags win
on conflict.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import augment as augment_mod
from . import bleu as bleu_mod
from . import corpus as corpus_mod
from . import mwe as mwe_mod
from .decompose import DecompConfig, decompose_sequence
from .ids import IdsDictionary, IdsError, load_ids_file

__all__ = ["PipelineConfig", "main"]

_USAGE_EXIT = 1
_DATA_EXIT = 2


@dataclass
class PipelineConfig:
    """Defaults shared across subcommands, overridable from a config file
    and again by flags."""

    ids_path: str | None = None
    region_preference: str = "G"
    level: int = 1
    boundary: str = "prefix"
    marker: str | None = None
    delimiter: str | None = None
    top_n_word: int = 30000
    top_n_char: int = 2500
    top_n_radical: int = 1000
    threshold: float = mwe_mod.DEFAULT_PRUNE_THRESHOLD
    min_freq: int = 1
    replication: int = 1

    @classmethod
    def from_file(cls, path: str) -> "PipelineConfig":
        cfg = cls()
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise ValueError(f"config line {line_no}: expected key=value, got {line!r}")
                key = key.strip()
                value = value.strip()
                if not hasattr(cfg, key):
                    raise ValueError(f"config line {line_no}: unknown key {key!r}")
                current = getattr(cfg, key)
                if isinstance(current, bool):
                    setattr(cfg, key, value.lower() in ("1", "true", "yes"))
                elif isinstance(current, int):
                    setattr(cfg, key, int(value))
                elif isinstance(current, float):
                    setattr(cfg, key, float(value))
                else:
                    setattr(cfg, key, value)
        return cfg

    def top_n_for_mode(self, mode: corpus_mod.GranularityMode) -> int:
        if mode.factors == ("c",) or mode.factors[0] == "rxd":
            return self.top_n_char
        if mode.factors == ("r",):
            return self.top_n_radical
        return self.top_n_word


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this toolkit reserves 2 for data
    errors, so remap usage failures to exit status 1."""

    def error(self, message):
        self.exit(_USAGE_EXIT, f"{self.prog}: {message}\n")


def _preference(text: str) -> tuple[str, ...]:
    return tuple(ch for ch in text.replace(",", "") if not ch.isspace())


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return [line.rstrip("\n") for line in sys.stdin]
    with open(path, "r", encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh]


def _write_lines(path: str, lines) -> None:
    if path == "-":
        for line in lines:
            print(line)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def _load_dictionary(args, cfg: PipelineConfig, required: bool) -> IdsDictionary | None:
    path = args.ids if args.ids is not None else cfg.ids_path
    if path is None:
        if required:
            raise ValueError("an IDS dictionary is required (--ids or config ids_path)")
        return None
    policy = "skip" if getattr(args, "skip_bad_lines", False) else "raise"
    dictionary = load_ids_file(path, errors=policy)
    if dictionary.skipped:
        print(f"warning: skipped {dictionary.skipped} malformed line(s)", file=sys.stderr)
    if dictionary.duplicates:
        print(f"warning: {dictionary.duplicates} duplicate character line(s), last wins",
              file=sys.stderr)
    return dictionary


def _decomp_config(args, cfg: PipelineConfig, level: int | None = None) -> DecompConfig:
    pref = _preference(args.region_preference if args.region_preference is not None
                       else cfg.region_preference)
    if level is None:
        level = args.level if getattr(args, "level", None) is not None else cfg.level
    return DecompConfig(level, pref, getattr(args, "emit_operators", False))


def _boundary(args, cfg: PipelineConfig) -> tuple[bool, str, str | None]:
    style = args.boundary if args.boundary is not None else cfg.boundary
    if style not in ("none", "prefix", "sep"):
        raise ValueError(f"boundary must be none, prefix or sep, got {style!r}")
    marker = args.marker if getattr(args, "marker", None) is not None else cfg.marker
    return style != "none", "prefix" if style == "none" else style, marker


def _map_lines(transform, lines, jobs: int):
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(transform, lines, chunksize=256))
    return [transform(line) for line in lines]


def _cmd_decompose(args, cfg: PipelineConfig) -> int:
    dictionary = _load_dictionary(args, cfg, required=True)
    decomp = _decomp_config(args, cfg)
    for line in _read_lines(args.input):
        pieces = []
        for chunk in line.split():
            pieces.extend(decompose_sequence(dictionary, chunk, decomp))
        print(" ".join(pieces))
    return 0


def _cmd_tokenize(args, cfg: PipelineConfig) -> int:
    mode = corpus_mod.parse_mode(args.mode)
    dictionary = _load_dictionary(args, cfg, required=False)
    decomp = _decomp_config(args, cfg, level=mode.rxd_level)
    keep, style, marker = _boundary(args, cfg)
    if getattr(args, "level", None) is not None and mode.factors[0] == "rxd":
        mode = corpus_mod.GranularityMode(mode.factors, args.level)
    radical_map = None
    if args.radical_map:
        radical_map = {}
        for line in _read_lines(args.radical_map):
            if not line.strip() or line.startswith("#"):
                continue
            char, _, radical = line.partition("\t")
            radical_map[char] = radical
    delimiter = args.delimiter if args.delimiter is not None else cfg.delimiter

    def transform(line: str) -> str:
        sentence = corpus_mod.parse_segmented(line, delimiter)
        tokens = corpus_mod.transform_sentence(
            sentence, mode, dictionary, decomp, radical_map, keep,
            boundary_style=style, marker=marker,
        )
        return " ".join(tokens)

    for line in _map_lines(transform, _read_lines(args.input), args.jobs):
        print(line)
    return 0


def _cmd_extract_mwe(args, cfg: PipelineConfig) -> int:
    with open(args.patterns, "r", encoding="utf-8") as fh:
        patterns = mwe_mod.parse_pattern_file(fh)
    corpus = mwe_mod.parse_tagged_corpus(_read_lines(args.input))
    min_freq = args.min_freq if args.min_freq is not None else cfg.min_freq
    candidates = mwe_mod.extract_mwes(corpus, patterns, min_freq, args.lemma)
    for cand in candidates:
        print(mwe_mod.format_candidate_line(cand))
    return 0


def _cmd_pair_mwe(args, cfg: PipelineConfig) -> int:
    src_cands = [mwe_mod.parse_candidate_line(l) for l in _read_lines(args.src_cands) if l]
    tgt_cands = [mwe_mod.parse_candidate_line(l) for l in _read_lines(args.tgt_cands) if l]
    src_lines = _read_lines(args.src)
    tgt_lines = _read_lines(args.tgt)
    if args.jobs > 1 and src_cands:
        chunk = max(1, len(src_cands) // args.jobs)
        groups = [src_cands[i : i + chunk] for i in range(0, len(src_cands), chunk)]
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(
                lambda g: mwe_mod.pair_and_score(g, tgt_cands, src_lines, tgt_lines), groups
            )
            pairs = [p for group in results for p in group]
        pairs.sort(key=lambda p: (-p.score, p.source.surface, p.target.surface))
    else:
        pairs = mwe_mod.pair_and_score(src_cands, tgt_cands, src_lines, tgt_lines)
    for pair in pairs:
        print(mwe_mod.format_pair_line(pair))
    return 0


def _cmd_prune_mwe(args, cfg: PipelineConfig) -> int:
    threshold = args.threshold if args.threshold is not None else cfg.threshold
    pairs = [mwe_mod.parse_pair_line(l) for l in _read_lines(args.input) if l]
    for pair in mwe_mod.prune(pairs, threshold):
        print(mwe_mod.format_pair_line(pair))
    return 0


def _cmd_augment(args, cfg: PipelineConfig) -> int:
    pairs = tuple(mwe_mod.parse_pair_line(l) for l in _read_lines(args.pairs) if l)
    decomp = None
    dictionary = None
    if args.decomp_level is not None and args.decomp_level > 0:
        pref = _preference(args.region_preference if args.region_preference is not None
                           else cfg.region_preference)
        decomp = DecompConfig(args.decomp_level, pref)
        dictionary = _load_dictionary(args, cfg, required=True)
    plan = augment_mod.AugmentPlan(
        pairs,
        replication=args.replication if args.replication is not None else cfg.replication,
        decomp=decomp,
        decomp_side=args.decomp_side,
        keep_plain=args.keep_plain,
    )
    keep, style, _ = _boundary(args, cfg) if args.boundary is not None else (False, "prefix", None)
    out_src, out_tgt = augment_mod.augment_corpus(
        _read_lines(args.src), _read_lines(args.tgt), plan, dictionary,
        keep_boundaries=keep, boundary_style=style,
    )
    _write_lines(args.out_src, out_src)
    _write_lines(args.out_tgt, out_tgt)
    return 0


def _cmd_stats(args, cfg: PipelineConfig) -> int:
    if args.top_n is not None:
        top_n = args.top_n
    else:
        top_n = cfg.top_n_for_mode(corpus_mod.parse_mode(args.mode))
    tokens = (tok for line in _read_lines(args.input) for tok in line.split())
    print(corpus_mod.format_vocab_report(corpus_mod.vocab_stats(tokens, top_n)))
    return 0


def _cmd_bleu(args, cfg: PipelineConfig) -> int:
    hypotheses = _read_lines(args.hyp)
    ref_files = [_read_lines(path) for path in args.refs]
    for path, lines in zip(args.refs, ref_files):
        if len(lines) != len(hypotheses):
            raise bleu_mod.ReferenceCountMismatch(
                f"{path}: {len(lines)} lines but {len(hypotheses)} hypotheses"
            )
    reference_sets = [list(refs) for refs in zip(*ref_files)] if ref_files else []
    score = bleu_mod.bleu(hypotheses, reference_sets, bleu_mod.BleuConfig(args.max_n, args.lc))
    print(bleu_mod.format_bleu(score))
    return 0


def _add_ids_options(p: _Parser) -> None:
    p.add_argument("--ids", help="IDS dictionary file")
    p.add_argument("--region-preference", help="region tag priority, e.g. G or GT or G,T")
    p.add_argument("--skip-bad-lines", action="store_true",
                   help="skip malformed dictionary lines instead of aborting")


def build_parser() -> _Parser:
    parser = _Parser(prog="hanprep", description=__doc__)
    parser.add_argument("--config", help="key=value config file; flags override it")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="decompose characters to level-L pieces")
    p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
    _add_ids_options(p)
    p.add_argument("--level", type=int, help="decomposition level L (default 1)")
    p.add_argument("--emit-operators", action="store_true",
                   help="keep structural operators in the output")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("tokenize", help="emit w/c/r/rxd/factored token streams")
    p.add_argument("input", nargs="?", default="-")
    _add_ids_options(p)
    p.add_argument("--mode", required=True,
                   help="w, c, r, rxd1/rxd2/rxd3, w+c, w+r, c+r or w+c+r")
    p.add_argument("--level", type=int, help="override the rxd level")
    p.add_argument("--boundary", choices=["none", "prefix", "sep"],
                   help="word-boundary encoding (default prefix)")
    p.add_argument("--marker", help="boundary marker token")
    p.add_argument("--delimiter", help="input word delimiter (default whitespace)")
    p.add_argument("--radical-map", help="optional char<TAB>radical override file")
    p.add_argument("--jobs", type=int, default=1, help="parallel line workers")
    p.set_defaults(func=_cmd_tokenize, emit_operators=False)

    p = sub.add_parser("extract-mwe", help="extract MWE candidates from a tagged corpus")
    p.add_argument("input", nargs="?", default="-", help="tagged corpus (surface|POS[|lemma])")
    p.add_argument("--patterns", required=True, help="pattern file (name: TAG+TAG)")
    p.add_argument("--min-freq", type=int, help="minimum candidate frequency (default 1)")
    p.add_argument("--lemma", action="store_true", help="match on lemmas instead of surfaces")
    p.set_defaults(func=_cmd_extract_mwe)

    p = sub.add_parser("pair-mwe", help="pair and Dice-score candidates over a parallel corpus")
    p.add_argument("--src-cands", required=True, help="source candidate file")
    p.add_argument("--tgt-cands", required=True, help="target candidate file")
    p.add_argument("--src", required=True, help="source side of the parallel corpus")
    p.add_argument("--tgt", required=True, help="target side of the parallel corpus")
    p.add_argument("--jobs", type=int, default=1, help="parallel scoring workers")
    p.set_defaults(func=_cmd_pair_mwe)

    p = sub.add_parser("prune-mwe", help="keep pairs scoring at or above the threshold")
    p.add_argument("input", nargs="?", default="-", help="pair TSV (source, target, score)")
    p.add_argument("--threshold", type=float, help="pruning threshold (default 0.85)")
    p.set_defaults(func=_cmd_prune_mwe)

    p = sub.add_parser("augment", help="append pruned MWE pairs to a parallel corpus")
    p.add_argument("--pairs", required=True, help="pruned pair TSV")
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p.add_argument("--out-src", required=True)
    p.add_argument("--out-tgt", required=True)
    p.add_argument("--replication", type=int, help="times to repeat each pair (default 1)")
    p.add_argument("--decomp-level", type=int,
                   help="decompose the Chinese side at this level (0 = off)")
    p.add_argument("--decomp-side", choices=["src", "tgt"], default="src",
                   help="which side is Chinese (default src)")
    p.add_argument("--keep-plain", action=argparse.BooleanOptionalAction, default=True,
                   help="append plain pairs alongside decomposed ones")
    p.add_argument("--boundary", choices=["none", "prefix", "sep"],
                   help="boundary encoding for decomposed lines (default none)")
    _add_ids_options(p)
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("stats", help="vocabulary size and top-N coverage of a token stream")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--top-n", type=int, help="coverage cut-off (default depends on --mode)")
    p.add_argument("--mode", default="w",
                   help="granularity the stream was produced with (sets the top-N default)")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("bleu", help="cumulative n-gram multi-reference BLEU")
    p.add_argument("hyp", help="hypothesis file, one tokenized line per sentence")
    p.add_argument("--refs", nargs="+", required=True, metavar="REF",
                   help="1-4 reference files aligned with the hypotheses")
    p.add_argument("--max-n", type=int, default=4, help="highest n-gram order (default 4)")
    p.add_argument("--lc", action=argparse.BooleanOptionalAction, default=True,
                   help="case-insensitive scoring (default on)")
    p.set_defaults(func=_cmd_bleu)

    return parser


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    if hasattr(sys.stdin, "reconfigure"):
        sys.stdin.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
        return args.func(args, cfg)
    except BrokenPipeError:
        return 0
    except (IdsError, ValueError, OSError) as exc:
        print(f"hanprep {args.command}: {exc}", file=sys.stderr)
        return _DATA_EXIT
