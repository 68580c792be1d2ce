# -*- coding: utf-8 -*-
import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hanprep.decompose import (
    DecompConfig,
    Decomposer,
    decompose_char,
    decompose_sequence,
    select_variant,
)
from hanprep.ids import IDC_ARITY, IdsDictionary, IdsEntry, Leaf, Node, Variant, parse_ids_file


# ---------------------------------------------------------------------------
# independent oracle: literal "rewrite the whole sequence L times", no memo,
# no fixed-point or cycle machinery, own variant selection and tree walk
# ---------------------------------------------------------------------------

def oracle_select(entry, preference):
    for tag in preference:
        for variant in entry.variants:
            if tag in variant.tags:
                return variant.tree
    return entry.variants[0].tree


def oracle_flatten(tree, emit_operators):
    if isinstance(tree, Leaf):
        return [tree.component]
    out = [tree.op] if emit_operators else []
    for child in tree.children:
        out.extend(oracle_flatten(child, emit_operators))
    return out


def oracle_decompose(dictionary, ch, level, preference=("G",), emit_operators=False):
    seq = [ch]
    for _ in range(level):
        nxt = []
        for piece in seq:
            entry = dictionary.get(piece)
            if entry is None:
                nxt.append(piece)
                continue
            tree = oracle_select(entry, preference)
            if isinstance(tree, Leaf) and tree.component == piece:
                nxt.append(piece)
                continue
            nxt.extend(oracle_flatten(tree, emit_operators))
        seq = nxt
    return seq


def make_dict(*lines):
    return parse_ids_file(lines)


# ---------------------------------------------------------------------------
# variant selection
# ---------------------------------------------------------------------------

class TestSelectVariant:
    def test_untagged_takes_first(self):
        d = make_dict("U+53D5\t叕\t⿱双双\t⿰㕛㕛")
        tree = select_variant(d.get("叕"), ("G",))
        assert oracle_flatten(tree, True) == ["⿱", "双", "双"]

    def test_paper_first_pattern(self, ids_dict):
        tree = select_variant(ids_dict.get("並"), ("G",))
        assert oracle_flatten(tree, False) == ["䒑", "业"]

    def test_single_variant(self):
        d = make_dict("U+355B\t㕛\t⿱又又")
        assert select_variant(d.get("㕛"), ("G",)) == d.get("㕛").variants[0].tree

    def test_preferred_tag_beats_file_order(self, ids_dict):
        # 里 lists its J variant first; G preference picks the second
        tree = select_variant(ids_dict.get("里"), ("G",))
        assert oracle_flatten(tree, False) == ["田", "土"]
        tree = select_variant(ids_dict.get("里"), ("J", "G"))
        assert oracle_flatten(tree, False) == ["𠃌", "土"]

    def test_priority_order_within_preferences(self, ids_dict):
        entry = ids_dict.get("直")  # variants tagged G, T, K
        assert oracle_flatten(select_variant(entry, ("T", "G")), False) == ["十", "目"]
        assert select_variant(entry, ("T", "G")) == entry.variants[1].tree

    def test_no_preferred_tag_falls_back_to_first(self, ids_dict):
        entry = ids_dict.get("所")
        assert select_variant(entry, ("H",)) == entry.variants[0].tree


# ---------------------------------------------------------------------------
# decompose_char
# ---------------------------------------------------------------------------

class TestDecomposeChar:
    def test_bridge_level1(self, ids_dict):
        assert decompose_char(ids_dict, "橋", DecompConfig(1)) == ["木", "喬"]

    def test_again_again(self, ids_dict):
        assert decompose_char(ids_dict, "㕛", DecompConfig(1)) == ["又", "又"]

    def test_string_of_things(self, ids_dict):
        assert decompose_char(ids_dict, "串", DecompConfig(1)) == ["吕", "丨"]

    def test_unknown_is_atomic(self, ids_dict):
        for level in (0, 1, 3, 9):
            assert decompose_char(ids_dict, "中", DecompConfig(level)) == ["中"]
            assert decompose_char(ids_dict, "a", DecompConfig(level)) == ["a"]

    def test_level2_double_double(self, ids_dict):
        got = decompose_char(ids_dict, "叕", DecompConfig(2))
        assert got == ["又", "又", "又", "又"]
        assert got == oracle_decompose(ids_dict, "叕", 2)

    def test_level0_identity(self, ids_dict):
        for ch in ids_dict.entries:
            assert decompose_char(ids_dict, ch, DecompConfig(0)) == [ch]

    def test_self_atomic_entry(self, ids_dict):
        assert decompose_char(ids_dict, "乐", DecompConfig(5)) == ["乐"]

    def test_emit_operators(self, ids_dict):
        cfg = DecompConfig(1, emit_operators=True)
        assert decompose_char(ids_dict, "叕", cfg) == ["⿱", "双", "双"]

    def test_multi_char_input_rejected(self, ids_dict):
        with pytest.raises(ValueError):
            decompose_char(ids_dict, "叕叕", DecompConfig(1))

    def test_determinism_and_memo_consistency(self, ids_dict):
        cfg = DecompConfig(3)
        first = {ch: decompose_char(ids_dict, ch, cfg) for ch in ids_dict.entries}
        second = {ch: decompose_char(ids_dict, ch, cfg) for ch in ids_dict.entries}
        assert first == second


class TestOracleEquivalence:
    @pytest.mark.parametrize("level", [1, 2, 3])
    def test_fixture_chars(self, ids_dict, level):
        cfg = DecompConfig(level)
        for ch in ids_dict.entries:
            assert decompose_char(ids_dict, ch, cfg) == oracle_decompose(ids_dict, ch, level)

    @pytest.mark.parametrize("level", [1, 2, 3])
    def test_fixture_chars_with_operators(self, ids_dict, level):
        cfg = DecompConfig(level, emit_operators=True)
        for ch in ids_dict.entries:
            assert decompose_char(ids_dict, ch, cfg) == oracle_decompose(
                ids_dict, ch, level, emit_operators=True
            )


# ---------------------------------------------------------------------------
# invariants on random synthetic dictionaries
# ---------------------------------------------------------------------------

ALPHABET = [chr(0x4E00 + i) for i in range(40)]


def random_dictionary(rng: random.Random) -> IdsDictionary:
    """Small random dictionary; may contain cycles and self-references."""
    operators = list(IDC_ARITY)
    n_entries = rng.randint(1, 14)
    entries = {}
    for ch in rng.sample(ALPHABET, n_entries):
        variants = []
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.12:
                variants.append(Variant(Leaf(ch)))  # self-atomic
                continue
            op = rng.choice(operators)
            children = tuple(Leaf(rng.choice(ALPHABET)) for _ in range(IDC_ARITY[op]))
            tags = frozenset(rng.sample("GHTKVJ", rng.randint(0, 2)))
            variants.append(Variant(Node(op, children), tags))
        entries[ch] = IdsEntry(ord(ch), ch, tuple(variants))
    return IdsDictionary(entries, len(entries))


@given(st.integers(0, 2**32 - 1), st.integers(0, 3))
@settings(max_examples=120, deadline=None)
def test_recursion_law_random_dicts(seed, level):
    """decompose(c, L+1) == flatten(decompose each piece of decompose(c, L) once)."""
    rng = random.Random(seed)
    d = random_dictionary(rng)
    cfg_l = DecompConfig(level)
    cfg_l1 = DecompConfig(level + 1)
    cfg_one = DecompConfig(1)
    for ch in d.entries:
        level_l = decompose_char(d, ch, cfg_l)
        flattened = [p for piece in level_l for p in decompose_char(d, piece, cfg_one)]
        assert decompose_char(d, ch, cfg_l1) == flattened


@given(st.integers(0, 2**32 - 1), st.integers(0, 4))
@settings(max_examples=80, deadline=None)
def test_length_monotonicity(seed, level):
    rng = random.Random(seed)
    d = random_dictionary(rng)
    for ch in d.entries:
        shorter = decompose_char(d, ch, DecompConfig(level))
        longer = decompose_char(d, ch, DecompConfig(level + 1))
        assert len(longer) >= len(shorter)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_random_dict_matches_oracle(seed):
    rng = random.Random(seed)
    d = random_dictionary(rng)
    for level in (0, 1, 2, 3):
        for ch in d.entries:
            assert decompose_char(d, ch, DecompConfig(level)) == oracle_decompose(d, ch, level)


class TestFixedPointAndCycles:
    def test_fixed_point_exists_within_32(self, ids_dict):
        for ch in ids_dict.entries:
            at32 = decompose_char(ids_dict, ch, DecompConfig(32))
            at33 = decompose_char(ids_dict, ch, DecompConfig(33))
            assert at32 == at33

    def test_huge_level_is_cheap(self, ids_dict):
        dec = Decomposer(ids_dict)
        start = time.perf_counter()
        for ch in ids_dict.entries:
            assert dec.pieces(ch, 10**9) == dec.pieces(ch, 32)
        assert time.perf_counter() - start < 2.0

    def test_two_cycle_does_not_hang(self):
        # a decomposes to b and b back to a via single-leaf variants
        a, b = "甲", "乙"
        entries = {
            a: IdsEntry(ord(a), a, (Variant(Leaf(b)),)),
            b: IdsEntry(ord(b), b, (Variant(Leaf(a)),)),
        }
        d = IdsDictionary(entries, 2)
        dec = Decomposer(d)
        # exact alternation, matching the naive rewrite semantics
        for level in range(6):
            assert list(dec.pieces(a, level)) == oracle_decompose(d, a, level)
        assert dec.pieces(a, 10**8) == (a,)
        assert dec.pieces(a, 10**8 + 1) == (b,)
        assert dec.cycle_warnings >= 1

    def test_growing_cycle_small_levels(self):
        # a -> ⿰ab keeps reinjecting a; small levels must still be exact
        a, b = "甲", "乙"
        entries = {a: IdsEntry(ord(a), a, (Variant(Node("⿰", (Leaf(a), Leaf(b)))),))}
        d = IdsDictionary(entries, 1)
        for level in range(6):
            assert decompose_char(d, a, DecompConfig(level)) == oracle_decompose(d, a, level)


# ---------------------------------------------------------------------------
# decompose_sequence
# ---------------------------------------------------------------------------

class TestDecomposeSequence:
    def test_bridge_beam(self, ids_dict):
        got = decompose_sequence(ids_dict, "橋樑", DecompConfig(1))
        assert got == ["木", "喬", "木", "梁"]

    def test_empty(self, ids_dict):
        assert decompose_sequence(ids_dict, "", DecompConfig(2)) == []

    def test_compositionality_random_sample(self, ids_dict):
        rng = random.Random(7)
        chars = list(ids_dict.entries) + ["中", "x", "界"]
        sample = "".join(rng.choice(chars) for _ in range(100))
        cfg = DecompConfig(2)
        whole = decompose_sequence(ids_dict, sample, cfg)
        per_char = [p for ch in sample for p in decompose_char(ids_dict, ch, cfg)]
        assert whole == per_char
