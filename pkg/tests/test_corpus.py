# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hanprep.corpus import (
    PREFIX_MARKER,
    SEP_MARKER,
    GranularityMode,
    SegmentedSentence,
    format_vocab_report,
    parse_mode,
    parse_segmented,
    to_char_stream,
    to_factored_stream,
    to_radical_stream,
    to_rxd_stream,
    transform_sentence,
    vocab_stats,
)
from hanprep.decompose import DecompConfig

ALL_MODES = ["w", "c", "r", "rxd1", "rxd2", "rxd3", "w+c", "w+r", "c+r", "w+c+r"]


class TestParseSegmented:
    def test_two_words(self):
        assert parse_segmented("高尔夫球 俱乐部").words == ("高尔夫球", "俱乐部")

    def test_empty(self):
        assert parse_segmented("").words == ()

    def test_custom_delimiter(self):
        assert parse_segmented("a/b/c", "/").words == ("a", "b", "c")

    def test_delimiter_runs_dropped(self):
        assert parse_segmented("a//b/", "/").words == ("a", "b")

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            SegmentedSentence(("a", ""))


class TestModeParsing:
    @pytest.mark.parametrize("text", ALL_MODES)
    def test_known_modes(self, text):
        parse_mode(text)

    def test_rxd_levels(self):
        assert parse_mode("rxd2").rxd_level == 2
        assert parse_mode("rxd7").rxd_level == 7

    def test_factor_order_normalized(self):
        assert parse_mode("r+w+c").factors == ("w", "c", "r")

    @pytest.mark.parametrize("text", ["x", "w+w", "rxdx", "w+c+x", ""])
    def test_bad_modes(self, text):
        with pytest.raises(ValueError):
            parse_mode(text)


class TestCharStream:
    def test_word_to_chars(self):
        sent = SegmentedSentence(("俱乐部",))
        assert to_char_stream(sent) == ["俱", "乐", "部"]

    def test_sep_boundary_between_words(self):
        sent = parse_segmented("高尔夫球 俱乐部")
        tokens = to_char_stream(sent, True, boundary_style="sep")
        assert tokens.count(SEP_MARKER) == 1
        assert tokens == ["高", "尔", "夫", "球", SEP_MARKER, "俱", "乐", "部"]

    def test_prefix_boundary_marks_each_word(self):
        sent = parse_segmented("高尔夫球 俱乐部")
        tokens = to_char_stream(sent, True)
        assert [t for t in tokens if t.startswith(PREFIX_MARKER)] == [
            PREFIX_MARKER + "高",
            PREFIX_MARKER + "俱",
        ]

    def test_non_cjk_word_is_opaque(self):
        sent = parse_segmented("golf 俱乐部 2018 。")
        assert to_char_stream(sent) == ["golf", "俱", "乐", "部", "2018", "。"]

    def test_token_count_equals_char_count(self, data_dir):
        with open(data_dir / "segmented_sample.txt", encoding="utf-8") as fh:
            lines = [fh.readline().rstrip("\n") for _ in range(200)]
        for line in lines:
            sent = parse_segmented(line)
            # counting oracle: total units equal the sum of per-word unit counts
            units = to_char_stream(sent)
            per_word = [to_char_stream(SegmentedSentence((w,))) for w in sent.words]
            assert len(units) == sum(len(u) for u in per_word)


class TestRadicalStream:
    def test_wood_radicals(self, ids_dict):
        sent = parse_segmented("橋 樑")
        assert to_radical_stream(sent, ids_dict) == ["木", "木"]

    def test_atomic_maps_to_itself(self, ids_dict):
        assert to_radical_stream(parse_segmented("中"), ids_dict) == ["中"]

    def test_radical_map_wins(self, ids_dict):
        got = to_radical_stream(parse_segmented("橋"), ids_dict, {"橋": "R"})
        assert got == ["R"]

    def test_without_dictionary_everything_atomic(self):
        assert to_radical_stream(parse_segmented("橋 樑")) == ["橋", "樑"]

    def test_same_length_as_char_stream(self, ids_dict):
        sent = parse_segmented("橋樑 golf 高尔夫球 。")
        assert len(to_radical_stream(sent, ids_dict)) == len(to_char_stream(sent))


class TestRxdStream:
    def test_word_level1(self, ids_dict):
        sent = SegmentedSentence(("橋樑",))
        assert to_rxd_stream(sent, ids_dict, DecompConfig(1)) == ["木", "喬", "木", "梁"]

    def test_level0_equals_char_stream(self, ids_dict, data_dir):
        with open(data_dir / "segmented_sample.txt", encoding="utf-8") as fh:
            lines = [fh.readline().rstrip("\n") for _ in range(300)]
        cfg = DecompConfig(0)
        for line in lines:
            sent = parse_segmented(line)
            assert to_rxd_stream(sent, ids_dict, cfg, True) == to_char_stream(sent, True)

    def test_sep_marker_count_is_words_minus_one(self, ids_dict, data_dir):
        cfg = DecompConfig(2)
        with open(data_dir / "segmented_sample.txt", encoding="utf-8") as fh:
            lines = [fh.readline().rstrip("\n") for _ in range(300)]
        for line in lines:
            sent = parse_segmented(line)
            if not sent.words:
                continue
            tokens = to_rxd_stream(sent, ids_dict, cfg, True, boundary_style="sep")
            assert tokens.count(SEP_MARKER) == len(sent.words) - 1

    def test_boundary_spans_preserve_word_count(self, ids_dict):
        sent = parse_segmented("橋樑 高尔夫球 golf 俱乐部")
        for level in (0, 1, 2, 3):
            tokens = to_rxd_stream(sent, ids_dict, DecompConfig(level), True)
            spans = sum(1 for t in tokens if t.startswith(PREFIX_MARKER))
            assert spans == len(sent.words)


class TestFactoredStream:
    def test_full_triple(self, ids_dict):
        sent = SegmentedSentence(("橋樑",))
        got = to_factored_stream(sent, parse_mode("w+c+r"), ids_dict)
        assert got == ["橋樑|橋+樑|木+木"]

    def test_single_char_word_w_c(self, ids_dict):
        got = to_factored_stream(SegmentedSentence(("木",)), parse_mode("w+c"), ids_dict)
        assert got == ["木|木"]

    def test_factor_count_matches_tuple_size(self, ids_dict, data_dir):
        with open(data_dir / "segmented_sample.txt", encoding="utf-8") as fh:
            lines = [fh.readline().rstrip("\n") for _ in range(100)]
        for mode_text in ("w+c", "w+r", "c+r", "w+c+r"):
            mode = parse_mode(mode_text)
            for line in lines:
                sent = parse_segmented(line)
                for token in to_factored_stream(sent, mode, ids_dict):
                    assert len(token.split("|")) == len(mode.factors)

    def test_non_cjk_word_repeats_across_factors(self, ids_dict):
        got = to_factored_stream(SegmentedSentence(("golf",)), parse_mode("w+c+r"), ids_dict)
        assert got == ["golf|golf|golf"]


class TestTransformDispatch:
    @pytest.mark.parametrize("mode_text", ALL_MODES)
    def test_word_count_preserved(self, ids_dict, mode_text):
        mode = parse_mode(mode_text)
        sent = parse_segmented("橋樑 高尔夫球 golf 俱乐部 。")
        tokens = transform_sentence(sent, mode, ids_dict, DecompConfig(1), None, True)
        if mode.is_factored or mode.factors == ("w",):
            assert len(tokens) == len(sent.words)
        else:
            spans = sum(1 for t in tokens if t.startswith(PREFIX_MARKER))
            assert spans == len(sent.words)


# word-count preservation across arbitrary segmented input
@given(
    st.lists(
        st.text(
            alphabet=st.characters(
                codec="utf-8", categories=("Lo", "Ll", "Nd"), exclude_characters=" \t\n"
            ),
            min_size=1,
            max_size=4,
        ),
        min_size=0,
        max_size=8,
    )
)
@settings(max_examples=80, deadline=None)
def test_word_count_preservation_property(ids_dict, words):
    sent = SegmentedSentence(tuple(words))
    for mode_text in ALL_MODES:
        mode = parse_mode(mode_text)
        tokens = transform_sentence(sent, mode, ids_dict, DecompConfig(1), None, True)
        if mode.is_factored or mode.factors == ("w",):
            assert len(tokens) == len(words)
        else:
            assert sum(1 for t in tokens if t.startswith(PREFIX_MARKER)) == len(words)


class TestVocabStats:
    def test_single_repeated_token(self):
        report = vocab_stats(["x"] * 10, top_n=30000)
        assert report.vocab_size == 1
        assert report.coverage == 1.0

    def test_uniform_ten_tokens_top5(self):
        report = vocab_stats([f"t{i}" for i in range(10)], top_n=5)
        assert report.vocab_size == 10
        assert report.coverage == 0.5

    def test_tie_break_lexicographic(self):
        # b and c tie on frequency; top-2 must pick a (freq 2) then b (lex)
        report = vocab_stats(["a", "a", "c", "b"], top_n=2)
        assert report.coverage == 0.75

    def test_empty_stream(self):
        report = vocab_stats([], top_n=10)
        assert report.vocab_size == 0
        assert report.coverage == 0.0

    def test_report_format(self):
        report = vocab_stats(["x", "y", "x"], top_n=1)
        text = format_vocab_report(report)
        assert text == "vocab_size=2\ntop_n=1\ncoverage=0.6667"

    def test_rxd3_vocab_smaller_than_char_vocab(self, ids_dict, data_dir):
        char_tokens, rxd_tokens = [], []
        cfg = DecompConfig(3)
        with open(data_dir / "segmented_sample.txt", encoding="utf-8") as fh:
            for line in fh:
                sent = parse_segmented(line.rstrip("\n"))
                char_tokens.extend(to_char_stream(sent, True))
                rxd_tokens.extend(to_rxd_stream(sent, ids_dict, cfg, True))
        char_report = vocab_stats(char_tokens, 2500)
        rxd_report = vocab_stats(rxd_tokens, 2500)
        assert rxd_report.vocab_size < char_report.vocab_size
