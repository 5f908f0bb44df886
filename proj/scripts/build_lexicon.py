#!/usr/bin/env python3
"""Regenerate data/en_lexicon.tsv from the wordfreq English word list.

Word counts are wordfreq frequencies scaled to occurrences per billion
tokens. Only lowercase a-z words are kept.
"""
import argparse
import re

import wordfreq

WORD = re.compile(r"^[a-z]+$")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=30000)
    ap.add_argument("--out", default="data/en_lexicon.tsv")
    args = ap.parse_args()

    rows = []
    for word in wordfreq.top_n_list("en", args.size * 2):
        if not WORD.match(word):
            continue
        if len(word) == 1 and word not in ("a", "i"):
            continue
        count = max(1, round(wordfreq.word_frequency(word, "en") * 1e9))
        rows.append((word, count))
        if len(rows) == args.size:
            break

    with open(args.out, "w", encoding="utf-8") as f:
        for word, count in rows:
            f.write(f"{word}\t{count}\n")


if __name__ == "__main__":
    main()
