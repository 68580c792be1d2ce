#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Regenerate the bundled sample data under data/.

Everything here is deterministic (fixed seeds), so reruns reproduce the
committed files byte-for-byte:

  ids_sample.txt        IDS dictionary fixture (all 12 operators, region
                        tags, multi-variant and self-referential entries)
  segmented_sample.txt  10k lines of word-segmented text
  parallel_sample.zh/.en   aligned parallel corpus with planted phrase pairs
  tagged_sample.zh/.en     the same corpus with surface|POS tokens
  patterns.zh/.en          example POS pattern files

The decomposition variants are a compact, internally consistent sample in
the style of common IDS distributions, not a verbatim copy of any
upstream database.
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hanprep.corpus import parse_segmented, to_char_stream, to_rxd_stream, vocab_stats
from hanprep.decompose import DecompConfig
from hanprep.ids import IDC_ARITY, iter_leaves, parse_ids_file

SEED = 20180901
N_SEGMENTED = 10_000
N_PARALLEL = 1_500

# char -> ordered variant expressions (optionally with [TAGS] suffix).
IDS_ENTRIES = [
    # characters discussed with multiple decomposition styles
    ("叕", ["⿱双双", "⿰㕛㕛"]),
    ("㕛", ["⿱又又"]),
    ("双", ["⿰又又"]),
    ("並", ["⿱䒑业", "⿱丷亚"]),
    ("串", ["⿻吕丨", "⿻中口"]),
    ("橋", ["⿰木喬"]),
    ("樑", ["⿰木梁"]),
    ("喬", ["⿱夭冋"]),
    ("夭", ["⿱丿大"]),
    ("大", ["⿻一人"]),
    ("冋", ["⿵冂口"]),
    ("梁", ["⿱⿰氵刅木"]),
    ("刅", ["刅"]),  # self-referential: atomic primitive
    # region-tagged variants
    ("里", ["⿹𠃌土[J]", "⿱田土[G]"]),
    ("所", ["⿰户斤[G]", "⿰戶斤[T]"]),
    ("房", ["⿸户方[G]", "⿸戶方[T]"]),
    ("直", ["⿱十目[G]", "⿸十目[T]", "⿱十⿻目一[K]"]),
    ("真", ["⿱十具[G]", "⿱匕⿻目一[T]"]),
    # left-middle-right and above-middle-below (ternary operators)
    ("衍", ["⿲彳氵亍"]),
    ("街", ["⿲彳圭亍"]),
    ("辩", ["⿲辛讠辛"]),
    ("高", ["⿳亠口冋"]),
    ("曼", ["⿳曰罒又"]),
    ("壹", ["⿳士冖豆"]),
    ("学", ["⿳丷冖子"]),
    ("京", ["⿳亠口小"]),
    ("尚", ["⿳⺌冖口"]),
    # surrounds
    ("回", ["⿴囗口"]),
    ("国", ["⿴囗玉"]),
    ("困", ["⿴囗木"]),
    ("固", ["⿴囗古"]),
    ("因", ["⿴囗大"]),
    ("同", ["⿵冂⿱一口"]),
    ("问", ["⿵门口"]),
    ("周", ["⿵冂⿱土口"]),
    ("凶", ["⿶凵㐅"]),
    ("凼", ["⿶凵水"]),
    ("画", ["⿱一⿶凵田"]),
    ("匠", ["⿷匚斤"]),
    ("医", ["⿷匚矢"]),
    ("区", ["⿷匚㐅"]),
    ("匹", ["⿷匚儿"]),
    ("庄", ["⿸广土"]),
    ("床", ["⿸广木"]),
    ("病", ["⿸疒丙"]),
    ("厅", ["⿸厂丁"]),
    ("句", ["⿹勹口"]),
    ("氧", ["⿹气羊"]),
    ("勾", ["⿹勹厶"]),
    ("起", ["⿺走己"]),
    ("赶", ["⿺走干"]),
    ("魁", ["⿺鬼斗"]),
    ("这", ["⿺辶文"]),
    ("坐", ["⿻⿰人人土"]),
    ("必", ["⿻心丿"]),
    ("夫", ["⿻一大"]),
    ("犬", ["⿻大丶"]),
    # golf club / machine translation / world cup vocabulary
    ("尔", ["⿱𠂊小"]),
    ("球", ["⿰王求"]),
    ("俱", ["⿰亻具"]),
    ("乐", ["乐"]),  # self-referential: atomic
    ("部", ["⿰咅阝"]),
    ("咅", ["⿱立口"]),
    ("具", ["⿱目八"]),
    ("机", ["⿰木几"]),
    ("器", ["⿱⿰口口⿱犬⿰口口"]),
    ("翻", ["⿰番羽"]),
    ("番", ["⿱釆田"]),
    ("译", ["⿰讠𠬤"]),
    ("界", ["⿱田介"]),
    ("介", ["⿱人⿰丿丨"]),
    ("杯", ["⿰木不"]),
    ("𠂊", ["𠂊"]),  # supplementary-plane primitive, atomic
    # wood family and other shared-component characters
    ("村", ["⿰木寸"]),
    ("林", ["⿰木木"]),
    ("森", ["⿱木林"]),
    ("杆", ["⿰木干"]),
    ("松", ["⿰木公"]),
    ("公", ["⿱八厶"]),
    ("板", ["⿰木反"]),
    ("树", ["⿰木⿰又寸"]),
    ("相", ["⿰木目"]),
    ("好", ["⿰女子"]),
    ("妈", ["⿰女马"]),
    ("吗", ["⿰口马"]),
    ("们", ["⿰亻门"]),
    ("明", ["⿰日月"]),
    ("晚", ["⿰日免"]),
    ("景", ["⿱日京"]),
    ("尘", ["⿱小土"]),
    ("尖", ["⿱小大"]),
    ("吕", ["⿱口口"]),
    ("昌", ["⿱日日"]),
    ("朋", ["⿰月月"]),
    ("多", ["⿱夕夕"]),
    ("您", ["⿱你心"]),
    ("你", ["⿰亻尔"]),
    ("想", ["⿱相心"]),
    ("岩", ["⿱山石"]),
    ("玩", ["⿰王元"]),
    ("元", ["⿱二儿"]),
    ("吹", ["⿰口欠"]),
    ("听", ["⿰口斤"]),
    ("和", ["⿰禾口"]),
    ("香", ["⿱禾日"]),
    ("秋", ["⿰禾火"]),
    ("烟", ["⿰火因"]),
    ("灭", ["⿱一火"]),
    ("灶", ["⿰火土"]),
    ("红", ["⿰纟工"]),
    ("酒", ["⿰氵酉"]),
    ("河", ["⿰氵可"]),
    ("湖", ["⿰氵胡"]),
    ("胡", ["⿰古月"]),
    ("海", ["⿰氵每"]),
    ("洋", ["⿰氵羊"]),
]

# zh word, zh POS, en tokens as (surface, POS) for the parallel corpus
LEXICON = [
    ("高尔夫球", "NN", [("golf", "NN")]),
    ("俱乐部", "NN", [("club", "NN")]),
    ("机器", "NN", [("machine", "NN")]),
    ("翻译", "NN", [("translation", "NN")]),
    ("世界", "NN", [("world", "NN")]),
    ("杯", "NN", [("cup", "NN")]),
    ("红", "JJ", [("red", "JJ")]),
    ("酒", "NN", [("wine", "NN")]),
    ("学生", "NN", [("student", "NN")]),
    ("医生", "NN", [("doctor", "NN")]),
    ("森林", "NN", [("forest", "NN")]),
    ("公园", "NN", [("park", "NN")]),
    ("河", "NN", [("river", "NN")]),
    ("海洋", "NN", [("ocean", "NN")]),
    ("秋天", "NN", [("autumn", "NN")]),
    ("朋友", "NN", [("friend", "NN")]),
    ("妈妈", "NN", [("mother", "NN")]),
    ("医院", "NN", [("hospital", "NN")]),
    ("街", "NN", [("street", "NN")]),
    ("玩", "VV", [("plays", "VBZ")]),
    ("想", "VV", [("wants", "VBZ")]),
    ("听", "VV", [("hears", "VBZ")]),
    ("吹", "VV", [("blows", "VBZ")]),
    ("喜欢", "VV", [("likes", "VBZ")]),
    ("使用", "VV", [("uses", "VBZ")]),
    ("大", "JJ", [("big", "JJ")]),
    ("小", "JJ", [("small", "JJ")]),
    ("好", "JJ", [("good", "JJ")]),
    ("新", "JJ", [("new", "JJ")]),
    ("高", "JJ", [("tall", "JJ")]),
    ("明晚", "NT", [("tomorrow", "NN"), ("night", "NN")]),
    ("他", "PN", [("he", "PRP")]),
    ("你们", "PN", [("you", "PRP")]),
    ("我们", "PN", [("we", "PRP")]),
    ("在", "P", [("at", "IN")]),
    ("和", "CC", [("and", "CC")]),
    ("的", "DEG", [("of", "IN")]),
    ("一个", "CD", [("a", "DT")]),
    ("这", "DT", [("this", "DT")]),
]

LATIN_WORDS = ["golf", "club", "WMT", "NIST", "BLEU", "2018", "GPU"]
PUNCT = ["。", "，"]

PATTERNS_ZH = """\
# example Chinese POS patterns for MWE candidates
nn_nn: NN+NN
jj_nn: JJ+NN
nn_nn_nn: NN+NN+NN
"""

PATTERNS_EN = """\
# example English POS patterns for MWE candidates
noun_noun: NN*+NN*
adj_noun: JJ*+NN*
"""


def build_ids_lines():
    lines = [
        ";; sample IDS decomposition table",
        ";; columns: codepoint<TAB>character<TAB>variant(<TAB>variant)*",
        "# variants may carry region tags like [GTK]",
    ]
    for char, variants in IDS_ENTRIES:
        fields = [f"U+{ord(char):04X}", char] + variants
        lines.append("\t".join(fields))
    return lines


def check_ids(lines):
    dictionary = parse_ids_file(lines)
    assert len(dictionary) >= 60, f"want >=60 entries, have {len(dictionary)}"
    ops_seen = set()
    for entry in dictionary.entries.values():
        for variant in entry.variants:
            stack = [variant.tree]
            while stack:
                node = stack.pop()
                if hasattr(node, "op"):
                    ops_seen.add(node.op)
                    stack.extend(node.children)
    missing = set(IDC_ARITY) - ops_seen
    assert not missing, f"operators never used: {missing}"
    return dictionary


def make_segmented_words(rng):
    """Word-type pool drawing heavily on decomposable characters."""
    chars = [char for char, _ in IDS_ENTRIES if char not in ("𠂊",)]
    pool = []
    for zh_word, _, _ in LEXICON:
        pool.append(zh_word)
    while len(pool) < 260:
        length = rng.choices([1, 2, 3], weights=[2, 6, 2])[0]
        word = "".join(rng.choice(chars) for _ in range(length))
        pool.append(word)
    pool.extend(LATIN_WORDS)
    return pool


def write_segmented(out_dir, rng):
    pool = make_segmented_words(rng)
    weights = [1.0 / (i + 5) for i in range(len(pool))]
    lines = []
    for _ in range(N_SEGMENTED):
        n_words = rng.randint(3, 12)
        words = rng.choices(pool, weights=weights, k=n_words)
        if rng.random() < 0.7:
            words.append(rng.choice(PUNCT))
        lines.append(" ".join(words))
    (out_dir / "segmented_sample.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return lines


def check_vocab_shrinkage(dictionary, lines):
    cfg = DecompConfig(level=3)
    char_tokens, rxd_tokens = [], []
    for line in lines:
        sent = parse_segmented(line)
        char_tokens.extend(to_char_stream(sent, True))
        rxd_tokens.extend(to_rxd_stream(sent, dictionary, cfg, True))
    char_vocab = vocab_stats(char_tokens, 2500).vocab_size
    rxd_vocab = vocab_stats(rxd_tokens, 2500).vocab_size
    assert rxd_vocab < char_vocab, f"rxd3 vocab {rxd_vocab} !< char vocab {char_vocab}"
    print(f"segmented sample: char vocab {char_vocab}, rxd3 vocab {rxd_vocab}")


def write_parallel(out_dir, rng):
    zh_lines, en_lines, zh_tagged, en_tagged = [], [], [], []
    filler = [item for item in LEXICON]

    def render(words, noisy_golf, drop_red):
        zh, ztag, en, etag = [], [], [], []
        for zh_word, zh_pos, en_toks in words:
            zh.append(zh_word)
            ztag.append(f"{zh_word}|{zh_pos}")
            if noisy_golf and zh_word == "高尔夫球":
                en.append("sport")
                etag.append("sport|NN")
                continue
            if drop_red and zh_word == "红":
                continue
            for surface, pos in en_toks:
                en.append(surface)
                etag.append(f"{surface}|{pos}")
        return " ".join(zh), " ".join(ztag), " ".join(en), " ".join(etag)

    golf = [("高尔夫球", "NN", [("golf", "NN")]), ("俱乐部", "NN", [("club", "NN")])]
    mt = [("机器", "NN", [("machine", "NN")]), ("翻译", "NN", [("translation", "NN")])]
    wine = [("红", "JJ", [("red", "JJ")]), ("酒", "NN", [("wine", "NN")])]

    for i in range(N_PARALLEL):
        words = rng.choices(filler, k=rng.randint(3, 7))
        noisy_golf = False
        drop_red = False
        if i % 25 == 0:
            # planted high-score pair; one noisy occurrence on each side
            noisy_golf = i == 1000
            words.insert(rng.randrange(len(words) + 1), golf[0])
            idx = words.index(golf[0])
            words.insert(idx + 1, golf[1])
        if i % 40 == 3:
            words.insert(rng.randrange(len(words) + 1), mt[0])
            idx = words.index(mt[0])
            words.insert(idx + 1, mt[1])
        if i % 37 == 5:
            # planted low-score pair: the adjective is often dropped in English
            drop_red = i % 74 == 5
            words.insert(rng.randrange(len(words) + 1), wine[0])
            idx = words.index(wine[0])
            words.insert(idx + 1, wine[1])
        if i == 777:
            # golf club appears on the English side without the Chinese phrase
            words = [("一个", "CD", [("a", "DT")]),
                     ("好", "JJ", [("golf", "NN")]),
                     ("俱乐部", "NN", [("club", "NN")])]
        zh, ztag, en, etag = render(words, noisy_golf, drop_red)
        zh_lines.append(zh)
        zh_tagged.append(ztag)
        en_lines.append(en)
        en_tagged.append(etag)

    (out_dir / "parallel_sample.zh").write_text("\n".join(zh_lines) + "\n", encoding="utf-8")
    (out_dir / "parallel_sample.en").write_text("\n".join(en_lines) + "\n", encoding="utf-8")
    (out_dir / "tagged_sample.zh").write_text("\n".join(zh_tagged) + "\n", encoding="utf-8")
    (out_dir / "tagged_sample.en").write_text("\n".join(en_tagged) + "\n", encoding="utf-8")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = parser.parse_args()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    ids_lines = build_ids_lines()
    dictionary = check_ids(ids_lines)
    (out_dir / "ids_sample.txt").write_text("\n".join(ids_lines) + "\n", encoding="utf-8")
    print(f"ids_sample.txt: {len(dictionary)} entries")

    rng = random.Random(SEED)
    lines = write_segmented(out_dir, rng)
    check_vocab_shrinkage(dictionary, lines)
    write_parallel(out_dir, rng)
    (out_dir / "patterns.zh").write_text(PATTERNS_ZH, encoding="utf-8")
    (out_dir / "patterns.en").write_text(PATTERNS_EN, encoding="utf-8")
    print(f"wrote sample data to {out_dir}")


if __name__ == "__main__":
    main()
